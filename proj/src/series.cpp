#include "wcolab/series.hpp"

#include <cmath>
#include <stdexcept>

namespace wcolab {

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs,
                                 std::optional<double> tail_hint)
    : coeffs_(std::move(coeffs)), tail_hint_(tail_hint) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries: empty coefficient list");
    }
    for (const cplx& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
        }
    }
    if (tail_hint_ && (*tail_hint_ < 0.0 || !std::isfinite(*tail_hint_))) {
        throw std::invalid_argument("TruncatedSeries: tail_hint must be finite and >= 0");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx{0.0}));
}

TruncatedSeries TruncatedSeries::one() { return constant(cplx{1.0}); }

TruncatedSeries TruncatedSeries::identity() { return monomial(1); }

TruncatedSeries TruncatedSeries::monomial(std::size_t degree, cplx s) {
    std::vector<cplx> c(degree + 1, cplx{0.0});
    c[degree] = s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::constant(cplx value) {
    return TruncatedSeries({value});
}

bool TruncatedSeries::is_zero(double tol) const {
    for (const cplx& c : coeffs_) {
        if (std::abs(c) > tol) return false;
    }
    return true;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
    const std::size_t n = std::max(f.order(), g.order());
    std::vector<cplx> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = f.coeff(k) + g.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& f, cplx s) {
    std::vector<cplx> c(f.coeffs());
    for (cplx& x : c) x *= s;
    std::optional<double> hint;
    if (f.tail_hint()) hint = *f.tail_hint() * std::abs(s);
    return TruncatedSeries(std::move(c), hint);
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::size_t trunc) {
    std::vector<cplx> c(trunc + 1, cplx{0.0});
    const std::size_t fmax = std::min(f.order(), trunc);
    for (std::size_t j = 0; j <= fmax; ++j) {
        const cplx fj = f.coeff(j);
        if (fj == cplx{0.0}) continue;
        const std::size_t gmax = std::min(g.order(), trunc - j);
        for (std::size_t k = 0; k <= gmax; ++k) {
            c[j + k] += fj * g.coeff(k);
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries pow(const TruncatedSeries& f, unsigned n, std::size_t trunc) {
    TruncatedSeries result = TruncatedSeries::one();
    for (unsigned k = 0; k < n; ++k) result = mul(result, f, trunc);
    return result;
}

cplx evaluate(const TruncatedSeries& f, cplx z) {
    cplx acc{0.0};
    const auto& c = f.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

TruncatedSeries derivative(const TruncatedSeries& f) {
    if (f.order() == 0) return TruncatedSeries::zero();
    std::vector<cplx> c(f.order());
    for (std::size_t n = 0; n + 1 <= f.order(); ++n) {
        c[n] = double(n + 1) * f.coeff(n + 1);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_series(double alpha, std::size_t trunc) {
    std::vector<cplx> c(trunc + 1);
    c[0] = cplx{1.0};
    for (std::size_t n = 0; n + 1 <= trunc; ++n) {
        c[n + 1] = c[n] * ((double(n) - alpha) / double(n + 1));
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log_weight_series(std::size_t trunc) {
    if (trunc < 2) {
        throw std::invalid_argument("log_weight_series: truncation order must be >= 2");
    }
    std::vector<cplx> c(trunc + 1, cplx{0.0});
    for (std::size_t k = 2; k <= trunc; ++k) {
        c[k] = cplx{1.0 / (double(k) * std::log(double(k)))};
    }
    // No finite bound on sum |c_k| beyond the truncation: the coefficient
    // series 1/(k log k) diverges, so no tail_hint is attached.
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi,
                        double rho, std::size_t trunc) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        throw std::invalid_argument("compose: need 0 <= rho < 1");
    }
    TruncatedSeries result = TruncatedSeries::zero(trunc);
    TruncatedSeries phi_k = TruncatedSeries::one();
    for (std::size_t k = 0; k <= f.order(); ++k) {
        if (k > 0) phi_k = mul(phi_k, phi, trunc);
        result = add(result, scale(phi_k, f.coeff(k)));
    }
    std::optional<double> hint;
    if (f.tail_hint()) {
        // |sum_{k > deg f} f_k phi^k| <= rho^{deg f + 1} * sum |f_k|.
        hint = *f.tail_hint() * std::pow(rho, double(f.order() + 1));
    }
    return TruncatedSeries(result.coeffs(), hint);
}

}  // namespace wcolab
