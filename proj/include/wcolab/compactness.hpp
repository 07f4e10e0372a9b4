#pragma once

#include <string>
#include <vector>

#include "wcolab/symbols.hpp"

namespace wcolab {

// Normalized-kernel image norm ||C* K_z||: the compactness indicator whose
// radial limit must vanish for a compact operator.  Requires |z| < 1 and
// |phi(z)| < 1; the value of phi(z) counts as zero below 1e-13.
double tilde_f(const Symbol& psi, const Symbol& phi, cplx z);
double tilde_f(const TruncatedSeries& psi, const TruncatedSeries& phi, cplx z);

struct RadialProfile {
    cplx direction;              // unit modulus
    std::vector<double> radii;   // strictly increasing, < 1
    std::vector<double> values;  // tilde_f(r * direction)
    std::vector<bool> valid;     // false where evaluation failed
};

RadialProfile radial_profile(const Symbol& psi, const Symbol& phi,
                             cplx direction, const std::vector<double>& radii);

// max |phi| on a ring near the unit circle; an estimate, not a certificate.
// Uses the closed form when present; a truncated non-polynomial series is
// evaluated on the largest ring its tail bound supports.
struct SupNormEstimate {
    double value = 0.0;
    double ring_radius = 0.0;
    bool ring_reduced = false;  // true when the tail bound forced a smaller ring
};
SupNormEstimate sup_norm_estimate(const Symbol& phi, std::size_t samples = 4096);

enum class CheckStatus { Pass, Fail, Inconclusive };

struct HypothesisCheck {
    std::string name;
    CheckStatus status = CheckStatus::Inconclusive;
    double evidence = 0.0;
    std::string note;
};

struct HypothesisReport {
    std::string theorem;  // "SelfMapStrict" or "BoundedDerivatives"
    std::vector<HypothesisCheck> checks;
    CheckStatus overall = CheckStatus::Inconclusive;
};

// Strict self-map + Carleson-surrogate sufficient condition.
HypothesisReport check_th1(const Symbol& psi, const Symbol& phi);

// Univalent-phi / bounded-derivative sufficient condition; the radial grid
// drives the two decay conditions.
HypothesisReport check_th3(const Symbol& psi, const Symbol& phi,
                           const std::vector<double>& radii);
std::vector<double> default_radial_grid();  // r = 1 - 10^{-j}, j = 1..8

struct DecayReport {
    std::vector<std::size_t> orders;
    std::vector<std::vector<double>> singular_values;  // descending, per order
};

DecayReport singular_value_decay(const TruncatedSeries& psi,
                                 const TruncatedSeries& phi,
                                 const std::vector<std::size_t>& orders);

}  // namespace wcolab
