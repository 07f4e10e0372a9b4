#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wcolab/series.hpp"

namespace wcolab {

// Dense truncated matrix of a weighted composition operator in the basis
// e_n = z^n/sqrt(n+1).  Column n holds the e-coordinates of psi*phi^n/sqrt(n+1).
struct OperatorMatrix {
    Eigen::MatrixXcd entries;  // (N+1) x (N+1)
    std::size_t trunc = 0;     // N
    TruncatedSeries psi = TruncatedSeries::one();
    TruncatedSeries phi = TruncatedSeries::identity();
    bool claimed_bounded = false;  // caller-supplied, reporting only
};

// e-coordinates x_n = c_n sqrt(n+1), padded/truncated to length N+1, so the
// Euclidean norm of the coordinate vector is the Dirichlet norm.
Eigen::VectorXcd e_coordinates(const TruncatedSeries& f, std::size_t trunc);
TruncatedSeries from_e_coordinates(const Eigen::VectorXcd& x);

OperatorMatrix wco_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                          std::size_t trunc);

// Special case phi(z) = z.
OperatorMatrix multiplication_matrix(const TruncatedSeries& psi, std::size_t trunc);

// Matrix action on a series of degree <= N.
TruncatedSeries apply(const OperatorMatrix& op, const TruncatedSeries& f);

// Principal submatrix on the given (distinct, in-range) basis indices.
Eigen::MatrixXcd compression(const OperatorMatrix& op,
                             const std::vector<std::size_t>& indices);

struct ModClassBlocks {
    std::vector<Eigen::MatrixXcd> blocks;          // block j: indices == j (mod r)
    std::vector<std::vector<std::size_t>> indices;
    double max_off_class = 0.0;  // largest |A[m][n]| with m != n (mod r)
    bool pattern_ok = false;     // max_off_class <= 1e-12
};

ModClassBlocks mod_class_blocks(const OperatorMatrix& op, std::size_t r);

// Constant phi == w: rank-one operator f -> <f, k_w> psi, built as the
// outer product of the e-coordinates of psi and k_w.
OperatorMatrix rank_one_matrix(const TruncatedSeries& psi, cplx w,
                               std::size_t trunc);

}  // namespace wcolab
