#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace wcolab {

using cplx = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 256;

// Taylor coefficients c_0..c_N of an analytic function on the unit disk.
// Immutable after construction; every operation returns a fresh value.
// tail_hint, when present, bounds sum_{n>N} |c_n| of the underlying function.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<cplx> coeffs,
                             std::optional<double> tail_hint = std::nullopt);

    static TruncatedSeries zero(std::size_t order = 0);
    static TruncatedSeries one();
    static TruncatedSeries identity();  // f(z) = z
    static TruncatedSeries monomial(std::size_t degree, cplx scale = cplx{1.0});
    static TruncatedSeries constant(cplx value);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    // Zero beyond the stored order.
    cplx coeff(std::size_t n) const {
        return n < coeffs_.size() ? coeffs_[n] : cplx{0.0};
    }
    std::optional<double> tail_hint() const { return tail_hint_; }

    bool is_zero(double tol = 0.0) const;

private:
    std::vector<cplx> coeffs_;
    std::optional<double> tail_hint_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries scale(const TruncatedSeries& f, cplx c);

// Cauchy product truncated at order trunc.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g,
                    std::size_t trunc);

// f^n by repeated truncated multiplication; f^0 = 1.
TruncatedSeries pow(const TruncatedSeries& f, unsigned n, std::size_t trunc);

// Horner evaluation, fixed descending-index order.
cplx evaluate(const TruncatedSeries& f, cplx z);

TruncatedSeries derivative(const TruncatedSeries& f);

// Coefficients of (1-z)^alpha, principal branch, via the recurrence
// c_{n+1} = c_n (n - alpha) / (n + 1).
TruncatedSeries binomial_series(double alpha, std::size_t trunc);

// c_k = 1/(k ln k) for 2 <= k <= trunc, c_0 = c_1 = 0.  Requires trunc >= 2.
TruncatedSeries log_weight_series(std::size_t trunc);

// f(phi(z)) truncated at trunc.  rho is the caller-asserted bound on
// sup |phi| over the disk; rejected when rho >= 1.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& phi,
                        double rho, std::size_t trunc);

}  // namespace wcolab
