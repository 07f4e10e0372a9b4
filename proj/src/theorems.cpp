#include "wcolab/theorems.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "wcolab/assembly.hpp"
#include "wcolab/dirichlet.hpp"

namespace wcolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

// Excess of p over the region boundary; <= 0 means inside.
double region_excess(const RegionSpec& region, cplx p) {
    switch (region.kind) {
        case RegionKind::Segment: {
            const cplx d = region.seg_b - region.seg_a;
            const double len2 = std::norm(d);
            double t = len2 > 0.0
                           ? std::clamp(((p - region.seg_a) * std::conj(d)).real() / len2,
                                        0.0, 1.0)
                           : 0.0;
            return std::abs(p - (region.seg_a + t * d));
        }
        case RegionKind::Disk:
            return std::abs(p - region.center) - region.radius;
        case RegionKind::Ellipse:
            return std::abs(p - region.focus1) + std::abs(p - region.focus2) -
                   region.major_axis;
    }
    return 0.0;
}

double matrix_mismatch(const Eigen::MatrixXcd& actual,
                       const Eigen::MatrixXcd& expected) {
    return (actual - expected).cwiseAbs().maxCoeff();
}

}  // namespace

void ScenarioReport::add(std::string name, bool ok, double residual,
                         std::string note) {
    checks.push_back(ScenarioCheck{std::move(name), ok, residual, std::move(note)});
    pass = pass && ok;
}

double ScenarioReport::worst_margin() const {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& c : checks) worst = std::min(worst, c.residual);
    return worst;
}

ScenarioReport run_direct_sum(std::size_t r, const TruncatedSeries& g,
                              std::size_t trunc, std::size_t angles) {
    ScenarioReport report;
    report.id = "direct_sum";
    report.pass = true;

    // psi(z) = g(z^r)
    std::vector<cplx> pc(r * g.order() + 1, cplx{0.0});
    for (std::size_t k = 0; k <= g.order(); ++k) pc[k * r] = g.coeff(k);
    const TruncatedSeries psi{std::move(pc)};
    const TruncatedSeries phi = TruncatedSeries::monomial(1, unit(1.0 / double(r)));

    const OperatorMatrix op = wco_matrix(psi, phi, trunc);
    const ModClassBlocks blocks = mod_class_blocks(op, r);
    report.add("mod_class_zero_pattern", blocks.max_off_class <= 1e-15,
               blocks.max_off_class);

    report.boundary = numerical_range_boundary(op.entries, angles);
    double worst = 0.0;
    for (const SupportSample& sample : report.boundary.samples) {
        double block_max = -std::numeric_limits<double>::infinity();
        for (const Eigen::MatrixXcd& b : blocks.blocks) {
            block_max = std::max(block_max, support_function(b, sample.theta).support);
        }
        worst = std::max(worst, std::abs(sample.support - block_max));
    }
    report.add("support_equals_block_max", worst <= 1e-10, worst);
    return report;
}

ScenarioReport run_rank_one(const TruncatedSeries& psi, cplx w, std::size_t trunc,
                            std::size_t angles) {
    ScenarioReport report;
    report.id = "rank_one";
    report.pass = true;

    report.predicted = rank_one_range(psi, w, trunc);
    report.has_predicted = true;
    const OperatorMatrix op = rank_one_matrix(psi, w, trunc);
    report.boundary = numerical_range_boundary(op.entries, angles);

    double excess = -std::numeric_limits<double>::infinity();
    for (const SupportSample& s : report.boundary.samples) {
        excess = std::max(excess, region_excess(report.predicted, s.point));
    }
    report.add("computed_inside_predicted", excess <= 1e-8, excess);

    double deficit = std::numeric_limits<double>::infinity();
    bool inside = true;
    for (const cplx& p : region_boundary_points(report.predicted, 720)) {
        const ContainmentResult c = contains_point(report.boundary, p, 1e-6);
        inside = inside && c.contained;
        deficit = std::min(deficit, c.margin);
    }
    report.add("predicted_inside_computed", inside, deficit);

    const double focus_residual =
        std::abs(op.entries.trace() - evaluate(psi, w));
    report.add("trace_recovers_psi_at_w", focus_residual <= 1e-8, focus_residual);
    return report;
}

ScenarioReport run_zero_interior(const TruncatedSeries& psi,
                                 const TruncatedSeries& phi, std::size_t trunc,
                                 double delta, std::size_t angles) {
    ScenarioReport report;
    report.id = "zero_interior";
    report.pass = true;

    if (std::abs(phi.coeff(0)) > 1e-14) {
        report.add("precondition_phi_fixes_origin", false, std::abs(phi.coeff(0)));
        return report;
    }
    double beyond_linear = 0.0;
    for (std::size_t k = 2; k <= phi.order(); ++k) {
        beyond_linear = std::max(beyond_linear, std::abs(phi.coeff(k)));
    }
    if (beyond_linear <= 1e-12) {
        report.add("precondition_not_dilation", false, beyond_linear,
                   "phi is a dilation t z");
        return report;
    }
    if (psi.is_zero()) {
        report.add("precondition_psi_nonzero", false, 0.0);
        return report;
    }

    const OperatorMatrix op = wco_matrix(psi, phi, trunc);
    report.boundary = numerical_range_boundary(op.entries, angles);
    double margin = std::numeric_limits<double>::infinity();
    for (const SupportSample& s : report.boundary.samples) {
        margin = std::min(margin, s.support);
    }
    report.add("origin_interior_margin", margin >= delta, margin,
               margin >= delta ? "" : "inconclusive at this truncation");

    // When phi = mu z (1 + b z^s) exactly, replicate the proof compression.
    const cplx mu = phi.coeff(1);
    std::size_t s_exp = 0;
    std::size_t extra = 0;
    for (std::size_t k = 2; k <= phi.order(); ++k) {
        if (std::abs(phi.coeff(k)) > 1e-14) {
            if (s_exp == 0) s_exp = k - 1;
            else ++extra;
        }
    }
    if (std::abs(mu) > 1e-14 && s_exp > 0 && extra == 0 &&
        std::abs(psi.coeff(0)) > 1e-14) {
        const std::size_t r = 2;
        if (r + s_exp <= trunc) {
            const cplx b = phi.coeff(s_exp + 1) / mu;
            const cplx psi0 = psi.coeff(0);
            const cplx psis = psi.coeff(s_exp);
            const double lift =
                std::sqrt(double(r + s_exp + 1) / double(r + 1));
            Eigen::Matrix2cd er;
            er << psi0, cplx{0.0},
                lift * (double(r) * b * psi0 + psis), psi0 * std::pow(mu, double(s_exp));
            const Eigen::MatrixXcd actual = compression(op, {r, r + s_exp});
            const double mismatch =
                matrix_mismatch(actual, std::pow(mu, double(r)) * er);
            report.add("compression_matches_er", mismatch <= 1e-12, mismatch);
        }
    }
    return report;
}

ScenarioReport run_zero_membership(const TruncatedSeries& psi, double t,
                                   std::size_t trunc, std::size_t angles) {
    ScenarioReport report;
    report.id = "zero_membership";
    report.pass = true;
    if (!(t >= -1.0 && t <= 0.0)) {
        report.add("precondition_t_range", false, t);
        return report;
    }
    bool nonconstant = false;
    for (std::size_t k = 1; k <= psi.order(); ++k) {
        if (std::abs(psi.coeff(k)) > 0.0) nonconstant = true;
    }
    if (!nonconstant) {
        report.add("precondition_psi_nonconstant", false, 0.0);
        return report;
    }

    const OperatorMatrix op =
        wco_matrix(psi, TruncatedSeries::monomial(1, cplx{t}), trunc);
    report.boundary = numerical_range_boundary(op.entries, angles);
    const ContainmentResult c = contains_point(report.boundary, cplx{0.0}, 1e-8);
    report.add("zero_in_range", c.contained, c.margin);

    const double e00 = std::abs(op.entries(0, 0) - psi.coeff(0));
    const double e11 = std::abs(op.entries(1, 1) - t * psi.coeff(0));
    report.add("diagonal_anchor_entries", std::max(e00, e11) <= 1e-12,
               std::max(e00, e11));
    return report;
}

ScenarioReport run_disk_3x3(std::size_t r, std::size_t s1, std::size_t s2,
                            const TruncatedSeries& psi, std::size_t trunc,
                            std::size_t angles) {
    ScenarioReport report;
    report.id = "disk_3x3";
    report.pass = true;
    if (!(s1 >= 1 && s2 > s1) || r < 1 || r * s2 > trunc) {
        report.add("precondition_exponents", false, 0.0);
        return report;
    }
    const cplx a = psi.coeff(r * s1);
    const cplx b = psi.coeff(r * s2);
    const cplx c = psi.coeff(r * (s2 - s1));
    if (std::abs(a * b * c) > 1e-14 ||
        (std::abs(a) <= 1e-14 && std::abs(b) <= 1e-14 && std::abs(c) <= 1e-14)) {
        report.add("precondition_coefficient_product", false, std::abs(a * b * c));
        return report;
    }
    const cplx psi0 = psi.coeff(0);
    const double w1 = std::sqrt(double(r * s1 + 1));
    const double w2 = std::sqrt(double(r * s2 + 1));

    const OperatorMatrix op =
        wco_matrix(psi, TruncatedSeries::monomial(1, unit(1.0 / double(r))), trunc);
    Eigen::Matrix3cd expected;
    expected << psi0, cplx{0.0}, cplx{0.0},
        w1 * a, psi0, cplx{0.0},
        w2 * b, (w2 / w1) * c, psi0;
    const Eigen::MatrixXcd actual = compression(op, {0, r * s1, r * s2});
    const double mismatch = matrix_mismatch(actual, expected);
    report.add("compression_matches_3x3", mismatch <= 1e-12, mismatch);

    const double radius =
        0.5 * std::sqrt(double(r * s1 + 1) * std::norm(a) +
                        double(r * s2 + 1) * std::norm(b) +
                        double(r * s2 + 1) / double(r * s1 + 1) * std::norm(c));
    report.predicted = RegionSpec::disk(psi0, radius);
    report.has_predicted = true;

    const RangeBoundary small = numerical_range_boundary(actual, angles);
    double eqd = 0.0;
    for (const SupportSample& s : small.samples) {
        eqd = std::max(eqd, std::abs(std::abs(s.point - psi0) - radius));
    }
    report.add("compression_range_is_disk", eqd <= 1e-8, eqd);

    report.boundary = numerical_range_boundary(op.entries, angles);
    const ContainmentResult cont =
        contains_region(report.boundary, report.predicted, 1e-8);
    report.add("disk_in_full_range", cont.contained, cont.margin);
    return report;
}

ScenarioReport run_disk_order_r(std::size_t r, const TruncatedSeries& psi,
                                const TruncatedSeries& phi,
                                std::size_t mu_grid, std::size_t trunc,
                                std::size_t angles) {
    ScenarioReport report;
    report.id = "disk_order_r";
    report.pass = true;
    if (std::abs(phi.coeff(0)) > 1e-14) {
        report.add("precondition_phi_fixes_origin", false, std::abs(phi.coeff(0)));
        return report;
    }
    double low = 0.0;
    for (std::size_t k = 0; k < r; ++k) low = std::max(low, std::abs(psi.coeff(k)));
    if (low > 1e-14 || std::abs(psi.coeff(r)) == 0.0) {
        report.add("precondition_zero_of_order_r", false, low);
        return report;
    }
    if (trunc < psi.order() + r * phi.order()) {
        report.add("precondition_truncation_budget", false, double(trunc));
        return report;
    }
    const cplx psir = psi.coeff(r);
    const double factor = double(r + 1) / double(r + 2);
    const OperatorMatrix op = wco_matrix(psi, phi, trunc);

    double worst = 0.0;
    for (std::size_t k = 0; k < mu_grid; ++k) {
        const cplx mu = unit(double(k) / double(mu_grid));
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(Eigen::Index(trunc + 1));
        x[0] = mu / std::sqrt(double(r + 2));
        x[Eigen::Index(r)] = std::sqrt(double(r + 1) / double(r + 2));
        const cplx value = (x.adjoint() * (op.entries * x))[0];
        worst = std::max(worst, std::abs(value - factor * mu * psir));
    }
    report.add("test_vector_identity", worst <= 1e-12, worst);

    report.predicted = RegionSpec::disk(cplx{0.0}, factor * std::abs(psir));
    report.has_predicted = true;
    report.boundary = numerical_range_boundary(op.entries, angles);
    const ContainmentResult cont =
        contains_region(report.boundary, report.predicted, 1e-8);
    report.add("disk_in_full_range", cont.contained, cont.margin);
    return report;
}

ScenarioReport run_disk_nilpotent(std::size_t r, const TruncatedSeries& psi,
                                  cplx mu, std::size_t trunc,
                                  std::size_t angles) {
    ScenarioReport report;
    report.id = "disk_nilpotent";
    report.pass = true;
    if (r < 2 || r > trunc) {
        report.add("precondition_r", false, double(r));
        return report;
    }
    if (std::abs(mu) == 0.0 || std::abs(mu) > 1.0) {
        report.add("precondition_mu", false, std::abs(mu));
        return report;
    }
    if (std::abs(psi.coeff(0)) > 1e-14) {
        report.add("precondition_psi0_zero", false, std::abs(psi.coeff(0)));
        return report;
    }
    const OperatorMatrix op =
        wco_matrix(psi, TruncatedSeries::monomial(1, mu), trunc);
    Eigen::Matrix2cd expected;
    expected << cplx{0.0}, cplx{0.0},
        mu * std::sqrt(double(r + 1) / 2.0) * psi.coeff(r - 1), cplx{0.0};
    const Eigen::MatrixXcd actual = compression(op, {1, r});
    const double mismatch = matrix_mismatch(actual, expected);
    report.add("compression_matches_nilpotent", mismatch <= 1e-12, mismatch);

    const double radius = std::sqrt(double(r + 1)) / (2.0 * std::sqrt(2.0)) *
                          std::abs(psi.coeff(r - 1) * mu);
    report.predicted = RegionSpec::disk(cplx{0.0}, radius);
    report.has_predicted = true;

    const RangeBoundary small = numerical_range_boundary(actual, angles);
    double eqd = 0.0;
    for (const SupportSample& s : small.samples) {
        eqd = std::max(eqd, std::abs(std::abs(s.point) - radius));
    }
    report.add("compression_range_is_disk", eqd <= 1e-8, eqd);

    report.boundary = numerical_range_boundary(op.entries, angles);
    const ContainmentResult cont =
        contains_region(report.boundary, report.predicted, 1e-8);
    report.add("disk_in_full_range", cont.contained, cont.margin);
    return report;
}

ScenarioReport run_ellipse_irrational(std::size_t r, std::size_t s, double theta,
                                      const TruncatedSeries& psi,
                                      std::size_t trunc, std::size_t angles) {
    ScenarioReport report;
    report.id = "ellipse_irrational";
    report.pass = true;
    if (s < 1 || r + s > trunc) {
        report.add("precondition_exponents", false, double(s));
        return report;
    }
    const cplx psi0 = psi.coeff(0);
    const cplx psis = psi.coeff(s);
    const cplx er = unit(double(r) * theta);
    const cplx ers = unit(double(r + s) * theta);
    const double lift = std::sqrt(double(r + s + 1) / double(r + 1));

    const OperatorMatrix op =
        wco_matrix(psi, TruncatedSeries::monomial(1, unit(theta)), trunc);
    Eigen::Matrix2cd expected;
    expected << psi0 * er, cplx{0.0},
        er * lift * psis, psi0 * ers;
    const Eigen::MatrixXcd actual = compression(op, {r, r + s});
    const double mismatch = matrix_mismatch(actual, expected);
    report.add("compression_matches_2x2", mismatch <= 1e-12, mismatch);

    const cplx f1 = psi0 * er;
    const cplx f2 = psi0 * ers;
    const double minor = lift * std::abs(psis);
    const double major = std::sqrt(std::norm(psi0) * std::norm(er - ers) +
                                   minor * minor);
    if (minor <= 1e-14) {
        report.predicted = RegionSpec::segment(f1, f2);
    } else if (std::abs(f1 - f2) <= 1e-14) {
        report.predicted = RegionSpec::disk(f1, 0.5 * minor);
    } else {
        report.predicted = RegionSpec::ellipse(f1, f2, major, minor);
    }
    report.has_predicted = true;

    Eigen::Matrix2cd actual2 = actual;
    const RegionSpec computed = ellipse_of_2x2(actual2);
    double geo = 0.0;
    if (computed.kind == RegionKind::Ellipse) {
        const double pairing =
            std::min(std::max(std::abs(computed.focus1 - f1),
                              std::abs(computed.focus2 - f2)),
                     std::max(std::abs(computed.focus1 - f2),
                              std::abs(computed.focus2 - f1)));
        // squared axis lengths avoid the sqrt blow-up of roundoff when an
        // axis is near zero
        geo = std::max(
            {pairing,
             std::abs(computed.major_axis * computed.major_axis - major * major),
             std::abs(computed.minor_axis * computed.minor_axis - minor * minor)});
        report.add("ellipse_matches_formula", geo <= 1e-10, geo);
    } else if (computed.kind == RegionKind::Disk) {
        geo = std::max(std::abs(computed.center - f1),
                       std::abs(2.0 * computed.radius - minor));
        report.add("ellipse_matches_formula", geo <= 1e-10, geo,
                   "degenerate: coincident foci");
    } else {
        geo = std::min(std::abs(computed.seg_a - f1) + std::abs(computed.seg_b - f2),
                       std::abs(computed.seg_a - f2) + std::abs(computed.seg_b - f1));
        report.add("ellipse_matches_formula", geo <= 1e-10, geo,
                   "degenerate: zero minor axis");
    }

    report.boundary = numerical_range_boundary(op.entries, angles);
    const ContainmentResult cont =
        contains_region(report.boundary, report.predicted, 1e-8);
    report.add("region_in_full_range", cont.contained, cont.margin);
    return report;
}

}  // namespace wcolab
