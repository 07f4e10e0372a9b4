#pragma once

#include <string>
#include <vector>

#include "wcolab/numrange.hpp"
#include "wcolab/series.hpp"

namespace wcolab {

// One sub-check of a theorem-replication run.
struct ScenarioCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // margin or mismatch, whichever applies
    std::string note;
};

struct ScenarioReport {
    std::string id;
    bool pass = false;
    RegionSpec predicted;
    bool has_predicted = false;
    std::vector<ScenarioCheck> checks;
    RangeBoundary boundary;  // full-matrix boundary samples, for emission

    void add(std::string name, bool ok, double residual, std::string note = {});
    double worst_margin() const;
};

// phi = e^{2 pi i / r} z, psi = g(z^r): block decomposition is exact and the
// support function of the whole matrix is the max over the mod-r blocks.
ScenarioReport run_direct_sum(std::size_t r, const TruncatedSeries& g,
                              std::size_t trunc, std::size_t angles = 720);

// Constant phi == w: trichotomy segment / centered disk / ellipse.
ScenarioReport run_rank_one(const TruncatedSeries& psi, cplx w, std::size_t trunc,
                            std::size_t angles = 720);

// phi(0) = 0, phi not a dilation: 0 interior to the truncated range; when
// phi = mu z (1 + b z^s) the {e_r, e_{r+s}} compression is mu^r E_r.
ScenarioReport run_zero_interior(const TruncatedSeries& psi,
                                 const TruncatedSeries& phi, std::size_t trunc,
                                 double delta = 1e-6, std::size_t angles = 720);

// phi = t z with t in [-1, 0], non-constant psi: 0 in the range.
ScenarioReport run_zero_membership(const TruncatedSeries& psi, double t,
                                   std::size_t trunc, std::size_t angles = 720);

// phi = e^{2 pi i / r} z: {e_0, e_{r s1}, e_{r s2}} compression is a disk
// centered at psi_0.
ScenarioReport run_disk_3x3(std::size_t r, std::size_t s1, std::size_t s2,
                            const TruncatedSeries& psi, std::size_t trunc,
                            std::size_t angles = 720);

// psi with a zero of order exactly r at 0: <A f, f> = (r+1)/(r+2) mu psi_r
// for the test vectors f = (mu + z^r)/sqrt(r+2) on a unimodular grid.
ScenarioReport run_disk_order_r(std::size_t r, const TruncatedSeries& psi,
                                const TruncatedSeries& phi,
                                std::size_t mu_grid, std::size_t trunc,
                                std::size_t angles = 720);

// phi = mu z, psi with psi_0 = 0: nilpotent {e_1, e_r} compression, disk of
// radius sqrt(r+1)/(2 sqrt 2) |psi_{r-1} mu|.
ScenarioReport run_disk_nilpotent(std::size_t r, const TruncatedSeries& psi,
                                  cplx mu, std::size_t trunc,
                                  std::size_t angles = 720);

// phi = e^{2 pi i theta} z: {e_r, e_{r+s}} compression is an ellipse with
// foci psi_0 e^{2 pi i r theta} and psi_0 e^{2 pi i (r+s) theta}.
ScenarioReport run_ellipse_irrational(std::size_t r, std::size_t s, double theta,
                                      const TruncatedSeries& psi,
                                      std::size_t trunc,
                                      std::size_t angles = 720);

}  // namespace wcolab
