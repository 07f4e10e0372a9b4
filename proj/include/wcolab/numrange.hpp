#pragma once

#include <Eigen/Dense>
#include <vector>

#include "wcolab/series.hpp"

namespace wcolab {

struct SupportSample {
    double theta = 0.0;    // in [0, 2*pi)
    double support = 0.0;  // s(theta) = lambda_max of Re(e^{i theta} A)
    cplx point;            // x* A x for a top unit eigenvector x
};

struct RangeBoundary {
    std::vector<SupportSample> samples;  // strictly increasing theta
    std::size_t matrix_order = 0;
};

// s(theta) and an attaining boundary point of the numerical range.
SupportSample support_function(const Eigen::MatrixXcd& a, double theta);

// Support samples at theta_k = 2 pi k / m, k = 0..m-1.  Requires m >= 8.
RangeBoundary numerical_range_boundary(const Eigen::MatrixXcd& a, std::size_t m);

struct ContainmentResult {
    bool contained = false;
    double margin = 0.0;  // min over sampled theta of s(theta) - Re(e^{i theta} z)
};

ContainmentResult contains_point(const RangeBoundary& boundary, cplx z, double tol);
ContainmentResult contains_point(const Eigen::MatrixXcd& a, cplx z, double tol,
                                 std::size_t m = 720);

enum class RegionKind { Segment, Disk, Ellipse };

// A segment, closed disk, or closed elliptical disk in the plane.  Axis
// lengths are full lengths: boundary points p of an ellipse satisfy
// |p - f1| + |p - f2| = major_axis.
struct RegionSpec {
    RegionKind kind = RegionKind::Disk;
    cplx seg_a, seg_b;       // Segment endpoints
    cplx center;             // Disk
    double radius = 0.0;     // Disk
    cplx focus1, focus2;     // Ellipse
    double major_axis = 0.0;
    double minor_axis = 0.0;

    static RegionSpec segment(cplx a, cplx b);
    static RegionSpec disk(cplx center, double radius);
    static RegionSpec ellipse(cplx f1, cplx f2, double major, double minor);
};

// Boundary samples of a region: circle / focal-axis parametrization, or the
// endpoints plus midpoint for a segment.
std::vector<cplx> region_boundary_points(const RegionSpec& region,
                                         std::size_t count = 720);

ContainmentResult contains_region(const RangeBoundary& boundary,
                                  const RegionSpec& region, double tol,
                                  std::size_t boundary_count = 720);
ContainmentResult contains_region(const Eigen::MatrixXcd& a,
                                  const RegionSpec& region, double tol,
                                  std::size_t m = 720,
                                  std::size_t boundary_count = 720);

// Numerical range of a 2x2 matrix: elliptical disk with foci at the
// eigenvalues, minor axis sqrt(tr(A*A) - |l1|^2 - |l2|^2).  Degenerates to a
// Segment (normal matrix) or a Disk (equal eigenvalues).
RegionSpec ellipse_of_2x2(const Eigen::Matrix2cd& a);

// Predicted numerical range of the rank-one operator f -> <f, k_w> psi:
// a segment when k_w and psi are parallel, a centered disk when psi(w) = 0,
// otherwise an ellipse with foci 0 and psi(w).
RegionSpec rank_one_range(const TruncatedSeries& psi, cplx w, std::size_t trunc);

}  // namespace wcolab
