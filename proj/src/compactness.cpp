#include "wcolab/compactness.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wcolab/assembly.hpp"
#include "wcolab/dirichlet.hpp"

namespace wcolab {

namespace {

constexpr double kPhiZeroCut = 1e-13;

double log_inv_one_minus(double x) {
    // log(1/(1-x)) for x in [0,1)
    return -std::log1p(-x);
}

}  // namespace

double tilde_f(const Symbol& psi, const Symbol& phi, cplx z) {
    const double r = std::abs(z);
    if (r >= 1.0) throw std::invalid_argument("tilde_f: need |z| < 1");
    const cplx psi_z = psi.eval(z);
    const cplx phi_z = phi.eval(z);
    const double p = std::abs(phi_z);
    if (p >= 1.0) {
        throw std::domain_error("tilde_f: |phi(z)| >= 1, not a self-map at z");
    }
    const bool phi_zero = p <= kPhiZeroCut;
    const bool z_zero = r == 0.0;
    if (phi_zero && z_zero) return std::abs(psi_z);
    if (phi_zero) {
        return std::abs(psi_z) * r / std::sqrt(log_inv_one_minus(r * r));
    }
    if (z_zero) {
        return (std::abs(psi_z) / p) * std::sqrt(log_inv_one_minus(p * p));
    }
    return std::abs(psi_z) * (r / p) *
           std::sqrt(log_inv_one_minus(p * p) / log_inv_one_minus(r * r));
}

double tilde_f(const TruncatedSeries& psi, const TruncatedSeries& phi, cplx z) {
    return tilde_f(Symbol::poly(psi), Symbol::poly(phi), z);
}

RadialProfile radial_profile(const Symbol& psi, const Symbol& phi,
                             cplx direction, const std::vector<double>& radii) {
    RadialProfile out;
    out.direction = direction / std::abs(direction);
    out.radii = radii;
    out.values.resize(radii.size(), 0.0);
    out.valid.resize(radii.size(), false);
    for (std::size_t k = 0; k < radii.size(); ++k) {
        if (!(radii[k] >= 0.0 && radii[k] < 1.0)) continue;
        if (k > 0 && !(radii[k] > radii[k - 1])) {
            throw std::invalid_argument("radial_profile: radii must be increasing");
        }
        // Without a closed form, a truncated non-polynomial cannot be trusted
        // near the boundary: require the evaluation tail below 1e-9.
        bool trustworthy = true;
        for (const Symbol* s : {&psi, &phi}) {
            if (s->polynomial || s->closed_form) continue;
            const auto hint = s->series.tail_hint();
            const double bound =
                hint ? *hint * std::pow(radii[k], double(s->series.order() + 1))
                     : std::numeric_limits<double>::infinity();
            if (bound > 1e-9) trustworthy = false;
        }
        if (!trustworthy) continue;
        try {
            out.values[k] = tilde_f(psi, phi, radii[k] * out.direction);
            out.valid[k] = true;
        } catch (const std::exception&) {
            out.valid[k] = false;
        }
    }
    return out;
}

SupNormEstimate sup_norm_estimate(const Symbol& phi, std::size_t samples) {
    if (samples < 64) {
        throw std::invalid_argument("sup_norm_estimate: need samples >= 64");
    }
    SupNormEstimate out;
    out.ring_radius = 1.0 - 1e-6;
    if (!phi.polynomial && !phi.closed_form) {
        // shrink the ring until the series tail is negligible
        const auto hint = phi.series.tail_hint();
        const double budget = 1e-6;
        if (hint && *hint > 0.0) {
            const double r =
                std::pow(budget / *hint, 1.0 / double(phi.series.order() + 1));
            if (r < out.ring_radius) {
                out.ring_radius = r;
                out.ring_reduced = true;
            }
        } else if (!hint) {
            out.ring_radius = 0.5;  // no tail bound at all; shallow probe only
            out.ring_reduced = true;
        }
    }
    double best = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = 2.0 * std::numbers::pi * double(k) / double(samples);
        best = std::max(best, std::abs(phi.eval(std::polar(out.ring_radius, theta))));
    }
    out.value = best;
    return out;
}

std::vector<double> default_radial_grid() {
    std::vector<double> radii;
    for (int j = 1; j <= 8; ++j) radii.push_back(1.0 - std::pow(10.0, -j));
    return radii;
}

namespace {

const char* kSurrogateNote = "sufficient surrogate, not a certificate";

HypothesisCheck make_check(std::string name, bool pass, double evidence,
                           std::string note = {}) {
    return HypothesisCheck{std::move(name),
                           pass ? CheckStatus::Pass : CheckStatus::Fail, evidence,
                           std::move(note)};
}

CheckStatus combine(const std::vector<HypothesisCheck>& checks) {
    bool any_fail = false;
    bool any_inconclusive = false;
    for (const auto& c : checks) {
        any_fail = any_fail || c.status == CheckStatus::Fail;
        any_inconclusive = any_inconclusive || c.status == CheckStatus::Inconclusive;
    }
    if (any_fail) return CheckStatus::Fail;
    if (any_inconclusive) return CheckStatus::Inconclusive;
    return CheckStatus::Pass;
}

constexpr double kDerivativeCap = 1e3;

Symbol derivative_symbol(const Symbol& s) {
    // derivative as a plain series symbol; keeps the polynomial flag
    return Symbol{derivative(s.series), {}, s.polynomial};
}

}  // namespace

HypothesisReport check_th1(const Symbol& psi, const Symbol& phi) {
    HypothesisReport report;
    report.theorem = "SelfMapStrict";

    const SupNormEstimate sup = sup_norm_estimate(phi);
    // strict containment surrogate, with a guard band against grid ties
    const bool strict = sup.value <= 1.0 - 1e-3 - 1e-9;
    report.checks.push_back(make_check("closure_of_image_inside_disk", strict,
                                       sup.value,
                                       sup.ring_reduced ? "ring radius reduced to " +
                                          std::to_string(sup.ring_radius) : ""));

    bool carleson = false;
    double evidence = 0.0;
    std::string note;
    if (phi.polynomial) {
        carleson = true;
        note = std::string("phi is a polynomial; ") + kSurrogateNote;
    } else {
        const SupNormEstimate dsup = sup_norm_estimate(derivative_symbol(phi));
        evidence = dsup.value;
        carleson = dsup.value <= kDerivativeCap;
        note = std::string("bounded-derivative surrogate; ") + kSurrogateNote;
    }
    report.checks.push_back(make_check("derivative_carleson_surrogate", carleson,
                                       evidence, note));

    // finite Dirichlet norm of the truncated weight: always true, reported
    report.checks.push_back(make_check("weight_in_dirichlet_space", true,
                                       norm_sq(psi.series, SpaceKind::Dirichlet),
                                       "finite at truncation"));
    report.overall = combine(report.checks);
    return report;
}

HypothesisReport check_th3(const Symbol& psi, const Symbol& phi,
                           const std::vector<double>& radii) {
    HypothesisReport report;
    report.theorem = "BoundedDerivatives";

    const Symbol phi1 = derivative_symbol(phi);
    const Symbol phi2 = derivative_symbol(phi1);
    const Symbol psi1 = derivative_symbol(psi);
    const Symbol psi2 = derivative_symbol(psi1);

    for (const auto& [name, sym] :
         {std::pair<const char*, const Symbol*>{"phi_prime_bounded", &phi1},
          {"phi_second_bounded", &phi2},
          {"psi_bounded", &psi},
          {"psi_prime_bounded", &psi1}}) {
        const SupNormEstimate s = sup_norm_estimate(*sym);
        report.checks.push_back(
            make_check(name, s.value <= kDerivativeCap, s.value, kSurrogateNote));
    }

    // univalence surrogate: grid injectivity plus nonvanishing derivative
    {
        const int nr = 100, nt = 100;
        std::vector<std::pair<cplx, cplx>> values;  // (phi(z), z)
        values.reserve(std::size_t(nr) * nt + 1);
        values.emplace_back(phi.eval(cplx{0.0}), cplx{0.0});
        for (int i = 1; i <= nr; ++i) {
            const double r = 0.999 * double(i) / nr;
            for (int k = 0; k < nt; ++k) {
                const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / double(nt));
                values.emplace_back(phi.eval(z), z);
            }
        }
        std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
            if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
            return a.first.imag() < b.first.imag();
        });
        bool injective = true;
        double collision = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k + 1 < values.size(); ++k) {
            const double dv = std::abs(values[k].first - values[k + 1].first);
            const double dz = std::abs(values[k].second - values[k + 1].second);
            if (dv < 1e-9 && dz > 1e-4) {
                injective = false;
                collision = std::min(collision, dv);
            }
        }
        bool deriv_nonzero = true;
        double min_deriv = std::numeric_limits<double>::infinity();
        for (int i = 0; i <= nr; ++i) {
            const double r = 0.95 * double(i) / nr;
            for (int k = 0; k < nt; ++k) {
                const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / double(nt));
                min_deriv = std::min(min_deriv, std::abs(phi1.eval(z)));
            }
        }
        deriv_nonzero = min_deriv > 1e-10;
        report.checks.push_back(make_check(
            "univalence_surrogate", injective && deriv_nonzero,
            injective ? min_deriv : collision,
            std::string("grid surrogate; ") + kSurrogateNote));
    }

    // decay conditions (ii) and (iii) along 16 directions
    const int ndirs = 16;
    const double eps = 1e-3;
    const double check_radius = 1.0 - 1e-6;
    bool cond2 = true, cond3 = true;
    double worst2 = 0.0, worst3 = 0.0;
    for (int d = 0; d < ndirs; ++d) {
        const cplx dir = std::polar(1.0, 2.0 * std::numbers::pi * d / double(ndirs));
        std::vector<double> v2, v3;
        for (double r : radii) {
            const cplx z = r * dir;
            const cplx phi_z = phi.eval(z);
            const double denom = 1.0 - std::norm(phi_z);
            v2.push_back(denom > 0.0
                             ? std::abs(psi.eval(z)) * (1.0 - r * r) / denom
                             : std::numeric_limits<double>::infinity());
            v3.push_back(std::abs(psi2.eval(z)) * (1.0 - r * r));
        }
        const auto trend = [&](const std::vector<double>& v, bool& ok, double& worst) {
            double final_value = 0.0;
            for (std::size_t k = 0; k < radii.size(); ++k) {
                if (std::abs(radii[k] - check_radius) < 1e-12) final_value = v[k];
            }
            worst = std::max(worst, final_value);
            if (final_value > eps) ok = false;
            // decreasing-trend surrogate over the deep end of the grid
            if (v.size() >= 3) {
                const double a = v[v.size() - 3], b = v.back();
                if (b > a * 1.1 + 1e-12 && b > eps) ok = false;
            }
        };
        trend(v2, cond2, worst2);
        trend(v3, cond3, worst3);
    }
    report.checks.push_back(make_check("kernel_ratio_decay", cond2, worst2));
    report.checks.push_back(make_check("second_derivative_decay", cond3, worst3));
    report.overall = combine(report.checks);
    return report;
}

DecayReport singular_value_decay(const TruncatedSeries& psi,
                                 const TruncatedSeries& phi,
                                 const std::vector<std::size_t>& orders) {
    DecayReport out;
    for (std::size_t k = 0; k + 1 < orders.size(); ++k) {
        if (!(orders[k] < orders[k + 1])) {
            throw std::invalid_argument("singular_value_decay: orders must increase");
        }
    }
    for (std::size_t n : orders) {
        const OperatorMatrix op = wco_matrix(psi, phi, n);
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.entries);
        std::vector<double> sv(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
        out.orders.push_back(n);
        out.singular_values.push_back(std::move(sv));
    }
    return out;
}

}  // namespace wcolab
