#include "wcolab/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

namespace wcolab {

double space_weight(SpaceKind kind, std::size_t n) {
    switch (kind) {
        case SpaceKind::Dirichlet: return double(n + 1);
        case SpaceKind::Hardy: return 1.0;
        case SpaceKind::Bergman: return 1.0 / double(n + 1);
    }
    throw std::logic_error("space_weight: bad kind");
}

cplx inner_product(const TruncatedSeries& f, const TruncatedSeries& g,
                   SpaceKind kind) {
    const std::size_t n = std::min(f.order(), g.order());
    cplx acc{0.0};
    for (std::size_t k = 0; k <= n; ++k) {
        acc += space_weight(kind, k) * f.coeff(k) * std::conj(g.coeff(k));
    }
    return acc;
}

double norm_sq(const TruncatedSeries& f, SpaceKind kind) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= f.order(); ++k) {
        acc += space_weight(kind, k) * std::norm(f.coeff(k));
    }
    return acc;
}

double dirichlet_integral(const TruncatedSeries& f) {
    double acc = 0.0;
    for (std::size_t k = 1; k <= f.order(); ++k) {
        acc += double(k) * std::norm(f.coeff(k));
    }
    return acc;
}

TruncatedSeries kernel_series(cplx w, std::size_t trunc) {
    const double a = std::abs(w);
    if (a >= 1.0) throw std::invalid_argument("kernel_series: need |w| < 1");
    std::vector<cplx> c(trunc + 1);
    cplx p{1.0};
    const cplx wb = std::conj(w);
    for (std::size_t n = 0; n <= trunc; ++n) {
        c[n] = p / double(n + 1);
        p *= wb;
    }
    // sum_{n>N} |w|^n/(n+1) <= |w|^{N+1} / ((N+2)(1-|w|)).
    const double tail =
        std::pow(a, double(trunc + 1)) / (double(trunc + 2) * (1.0 - a));
    return TruncatedSeries(std::move(c), tail);
}

double kernel_norm_sq(cplx w) {
    const double a2 = std::norm(w);
    if (a2 >= 1.0) throw std::invalid_argument("kernel_norm_sq: need |w| < 1");
    if (a2 == 0.0) return 1.0;  // k_0 is the constant 1
    return -std::log1p(-a2) / a2;
}

double weighted_bergman_quantity(const TruncatedSeries& f) {
    double acc = std::norm(f.coeff(0));
    for (std::size_t n = 1; n <= f.order(); ++n) {
        acc += 2.0 * double(n) * std::norm(f.coeff(n)) /
               (double(n + 1) * double(n + 2));
    }
    return acc;
}

}  // namespace wcolab
