#include "wcolab/assembly.hpp"

#include <cmath>
#include <stdexcept>

#include "wcolab/dirichlet.hpp"

namespace wcolab {

Eigen::VectorXcd e_coordinates(const TruncatedSeries& f, std::size_t trunc) {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(Eigen::Index(trunc + 1));
    const std::size_t top = std::min(f.order(), trunc);
    for (std::size_t n = 0; n <= top; ++n) {
        x[Eigen::Index(n)] = f.coeff(n) * std::sqrt(double(n + 1));
    }
    return x;
}

TruncatedSeries from_e_coordinates(const Eigen::VectorXcd& x) {
    std::vector<cplx> c(std::size_t(x.size()));
    for (std::size_t n = 0; n < c.size(); ++n) {
        c[n] = x[Eigen::Index(n)] / std::sqrt(double(n + 1));
    }
    return TruncatedSeries(std::move(c));
}

OperatorMatrix wco_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                          std::size_t trunc) {
    const Eigen::Index dim = Eigen::Index(trunc + 1);
    Eigen::MatrixXcd a(dim, dim);
    TruncatedSeries phi_n = TruncatedSeries::one();
    for (std::size_t n = 0; n <= trunc; ++n) {
        if (n > 0) phi_n = mul(phi_n, phi, trunc);
        const TruncatedSeries col = mul(psi, phi_n, trunc);
        const double inv = 1.0 / std::sqrt(double(n + 1));
        for (std::size_t m = 0; m <= trunc; ++m) {
            a(Eigen::Index(m), Eigen::Index(n)) =
                col.coeff(m) * std::sqrt(double(m + 1)) * inv;
        }
    }
    return OperatorMatrix{std::move(a), trunc, psi, phi, false};
}

OperatorMatrix multiplication_matrix(const TruncatedSeries& psi, std::size_t trunc) {
    return wco_matrix(psi, TruncatedSeries::identity(), trunc);
}

TruncatedSeries apply(const OperatorMatrix& op, const TruncatedSeries& f) {
    if (f.order() > op.trunc) {
        throw std::invalid_argument("apply: series degree exceeds matrix order");
    }
    return from_e_coordinates(op.entries * e_coordinates(f, op.trunc));
}

Eigen::MatrixXcd compression(const OperatorMatrix& op,
                             const std::vector<std::size_t>& indices) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] > op.trunc) {
            throw std::out_of_range("compression: basis index out of range");
        }
        for (std::size_t j = i + 1; j < indices.size(); ++j) {
            if (indices[i] == indices[j]) {
                throw std::invalid_argument("compression: duplicate basis index");
            }
        }
    }
    const Eigen::Index k = Eigen::Index(indices.size());
    Eigen::MatrixXcd sub(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
        for (Eigen::Index j = 0; j < k; ++j) {
            sub(i, j) = op.entries(Eigen::Index(indices[std::size_t(i)]),
                                   Eigen::Index(indices[std::size_t(j)]));
        }
    }
    return sub;
}

ModClassBlocks mod_class_blocks(const OperatorMatrix& op, std::size_t r) {
    if (r < 2) throw std::invalid_argument("mod_class_blocks: need r >= 2");
    ModClassBlocks out;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<std::size_t> idx;
        for (std::size_t n = j; n <= op.trunc; n += r) idx.push_back(n);
        out.blocks.push_back(compression(op, idx));
        out.indices.push_back(std::move(idx));
    }
    for (std::size_t m = 0; m <= op.trunc; ++m) {
        for (std::size_t n = 0; n <= op.trunc; ++n) {
            if (m % r == n % r) continue;
            out.max_off_class = std::max(
                out.max_off_class,
                std::abs(op.entries(Eigen::Index(m), Eigen::Index(n))));
        }
    }
    out.pattern_ok = out.max_off_class <= 1e-12;
    return out;
}

OperatorMatrix rank_one_matrix(const TruncatedSeries& psi, cplx w,
                               std::size_t trunc) {
    if (std::abs(w) >= 1.0) {
        throw std::invalid_argument("rank_one_matrix: need |w| < 1");
    }
    const Eigen::VectorXcd u = e_coordinates(psi, trunc);
    const Eigen::VectorXcd v = e_coordinates(kernel_series(w, trunc), trunc);
    return OperatorMatrix{u * v.adjoint(), trunc, psi,
                          TruncatedSeries::constant(w), false};
}

}  // namespace wcolab
