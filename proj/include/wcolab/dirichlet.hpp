#pragma once

#include "wcolab/series.hpp"

namespace wcolab {

// Coefficient weight of the space: (n+1) for Dirichlet, 1 for Hardy,
// 1/(n+1) for Bergman, so that ||z^n||^2 = weight(n).
enum class SpaceKind { Dirichlet, Hardy, Bergman };

double space_weight(SpaceKind kind, std::size_t n);

// sum_n weight(n) f_n conj(g_n), ascending index order.
cplx inner_product(const TruncatedSeries& f, const TruncatedSeries& g,
                   SpaceKind kind);

double norm_sq(const TruncatedSeries& f, SpaceKind kind);

// D(f) = sum_{k>=1} k |c_k|^2.
double dirichlet_integral(const TruncatedSeries& f);

// Reproducing kernel of the Dirichlet space at w: c_n = conj(w)^n/(n+1),
// so <f, k_w> = f(w).  k_0 is the constant 1.  Requires |w| < 1.
TruncatedSeries kernel_series(cplx w, std::size_t trunc);

// ||k_w||^2 = log(1/(1-|w|^2)) / |w|^2, with the value 1 at w = 0.
double kernel_norm_sq(cplx w);

// |f(0)|^2 + (1/pi) int |f'|^2 (1-|z|^2)^2 dA, in coefficient form:
// |c_0|^2 + sum_{n>=1} 2n |c_n|^2 / ((n+1)(n+2)).
double weighted_bergman_quantity(const TruncatedSeries& f);

}  // namespace wcolab
