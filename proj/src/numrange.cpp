#include "wcolab/numrange.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "wcolab/dirichlet.hpp"
#include "wcolab/assembly.hpp"

namespace wcolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body) {
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, count);
    if (workers <= 1 || count < 16) {
        for (std::size_t k = 0; k < count; ++k) body(k);
        return;
    }
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t k = t; k < count; k += workers) body(k);
        });
    }
    for (auto& th : pool) th.join();
}

// Top eigenpair by Lanczos with full reorthogonalization.  Deterministic
// start vector; when the Krylov space closes early a fresh orthogonal
// direction is spliced in (beta = 0 decouples the tridiagonal blocks, which
// keeps every Ritz pair valid).  Returns false when the residual target is
// not reached, in which case the caller falls back to the dense solver.
bool lanczos_top(const Eigen::MatrixXcd& h, double target, double& value,
                 Eigen::VectorXcd& vec) {
    const Eigen::Index n = h.rows();
    const int maxit = int(std::min<Eigen::Index>(n, 96));
    Eigen::MatrixXcd basis(n, maxit);
    Eigen::VectorXd alpha(maxit), beta(maxit);

    int seed = 0;
    const auto fresh_direction = [&](int used) {
        Eigen::VectorXcd q(n);
        for (int attempt = 0; attempt < 8; ++attempt) {
            ++seed;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double t = double(i) + 17.0 * seed;
                q[i] = cplx{1.0 + 0.5 * std::cos(0.7 * t), 0.25 * std::sin(1.3 * t)};
            }
            if (used > 0) {
                q -= basis.leftCols(used) * (basis.leftCols(used).adjoint() * q);
                q -= basis.leftCols(used) * (basis.leftCols(used).adjoint() * q);
            }
            if (q.norm() > 1e-6) return Eigen::VectorXcd(q.normalized());
        }
        return Eigen::VectorXcd();
    };

    Eigen::VectorXcd q = fresh_direction(0);
    for (int k = 0; k < maxit; ++k) {
        if (q.size() == 0) return false;
        basis.col(k) = q;
        Eigen::VectorXcd r = h * q;
        alpha[k] = (q.adjoint() * r)[0].real();
        r -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).adjoint() * r);
        r -= basis.leftCols(k + 1) * (basis.leftCols(k + 1).adjoint() * r);
        beta[k] = r.norm();

        const bool closed = beta[k] <= 1e-13 * target;
        if (k >= 2 && (closed || k % 8 == 7 || k == maxit - 1)) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, k + 1);
            for (int i = 0; i <= k; ++i) {
                t(i, i) = alpha[i];
                if (i < k) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
            if (es.info() == Eigen::Success) {
                Eigen::VectorXcd x =
                    basis.leftCols(k + 1) *
                    es.eigenvectors().col(k).cast<cplx>();
                x.normalize();
                const double s = es.eigenvalues()[k];
                if ((h * x - s * x).norm() <= 1e-10 * target) {
                    value = s;
                    vec = std::move(x);
                    return true;
                }
            }
        }
        q = closed ? fresh_direction(k + 1) : Eigen::VectorXcd(r / beta[k]);
        if (closed) beta[k] = 0.0;
    }
    return false;
}

}  // namespace

SupportSample support_function(const Eigen::MatrixXcd& a, double theta) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("support_function: matrix must be square");
    }
    const cplx rot = std::polar(1.0, theta);
    const Eigen::MatrixXcd b = rot * a;
    const Eigen::MatrixXcd h = 0.5 * (b + b.adjoint());
    const double hnorm = h.norm();
    const double target = std::max(1.0, hnorm);

    double s = 0.0;
    Eigen::VectorXcd x;
    bool have = false;
    if (a.rows() >= 160) have = lanczos_top(h, target, s, x);
    if (!have) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("support_function: eigensolver did not converge");
        }
        const Eigen::Index top = a.rows() - 1;
        s = solver.eigenvalues()[top];
        x = solver.eigenvectors().col(top);
    }
    const double residual = (h * x - s * x).norm();
    if (residual > 1e-10 * target) {
        throw std::runtime_error("support_function: eigensolver residual " +
                                 std::to_string(residual) + " exceeds contract");
    }
    return SupportSample{theta, s, (x.adjoint() * (a * x))[0]};
}

RangeBoundary numerical_range_boundary(const Eigen::MatrixXcd& a, std::size_t m) {
    if (m < 8) throw std::invalid_argument("numerical_range_boundary: need m >= 8");
    RangeBoundary out;
    out.matrix_order = std::size_t(a.rows());
    out.samples.resize(m);
    run_indexed(m, [&](std::size_t k) {
        out.samples[k] = support_function(a, kTwoPi * double(k) / double(m));
    });
    return out;
}

ContainmentResult contains_point(const RangeBoundary& boundary, cplx z, double tol) {
    double margin = std::numeric_limits<double>::infinity();
    for (const SupportSample& s : boundary.samples) {
        const double proj = std::cos(s.theta) * z.real() - std::sin(s.theta) * z.imag();
        margin = std::min(margin, s.support - proj);
    }
    return ContainmentResult{margin >= -tol, margin};
}

ContainmentResult contains_point(const Eigen::MatrixXcd& a, cplx z, double tol,
                                 std::size_t m) {
    return contains_point(numerical_range_boundary(a, m), z, tol);
}

RegionSpec RegionSpec::segment(cplx a, cplx b) {
    RegionSpec r;
    r.kind = RegionKind::Segment;
    r.seg_a = a;
    r.seg_b = b;
    return r;
}

RegionSpec RegionSpec::disk(cplx center, double radius) {
    RegionSpec r;
    r.kind = RegionKind::Disk;
    r.center = center;
    r.radius = radius;
    return r;
}

RegionSpec RegionSpec::ellipse(cplx f1, cplx f2, double major, double minor) {
    RegionSpec r;
    r.kind = RegionKind::Ellipse;
    r.focus1 = f1;
    r.focus2 = f2;
    r.major_axis = major;
    r.minor_axis = minor;
    return r;
}

std::vector<cplx> region_boundary_points(const RegionSpec& region,
                                         std::size_t count) {
    std::vector<cplx> pts;
    switch (region.kind) {
        case RegionKind::Segment:
            pts = {region.seg_a, 0.5 * (region.seg_a + region.seg_b), region.seg_b};
            break;
        case RegionKind::Disk:
            pts.reserve(count);
            for (std::size_t k = 0; k < count; ++k) {
                pts.push_back(region.center +
                              std::polar(region.radius, kTwoPi * double(k) / double(count)));
            }
            break;
        case RegionKind::Ellipse: {
            const cplx c = 0.5 * (region.focus1 + region.focus2);
            const cplx d = region.focus2 - region.focus1;
            const cplx u = std::abs(d) > 0.0 ? d / std::abs(d) : cplx{1.0};
            const double a = 0.5 * region.major_axis;
            const double b = 0.5 * region.minor_axis;
            pts.reserve(count);
            for (std::size_t k = 0; k < count; ++k) {
                const double t = kTwoPi * double(k) / double(count);
                pts.push_back(c + u * cplx{a * std::cos(t), b * std::sin(t)});
            }
            break;
        }
    }
    return pts;
}

ContainmentResult contains_region(const RangeBoundary& boundary,
                                  const RegionSpec& region, double tol,
                                  std::size_t boundary_count) {
    ContainmentResult out{true, std::numeric_limits<double>::infinity()};
    for (const cplx& p : region_boundary_points(region, boundary_count)) {
        const ContainmentResult r = contains_point(boundary, p, tol);
        out.contained = out.contained && r.contained;
        out.margin = std::min(out.margin, r.margin);
    }
    return out;
}

ContainmentResult contains_region(const Eigen::MatrixXcd& a,
                                  const RegionSpec& region, double tol,
                                  std::size_t m, std::size_t boundary_count) {
    return contains_region(numerical_range_boundary(a, m), region, tol,
                           boundary_count);
}

RegionSpec ellipse_of_2x2(const Eigen::Matrix2cd& a) {
    const cplx tr = a(0, 0) + a(1, 1);
    const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    const cplx l1 = 0.5 * (tr + disc);
    const cplx l2 = 0.5 * (tr - disc);
    const double gram = (a.adjoint() * a).trace().real();
    const double minor_sq = std::max(0.0, gram - std::norm(l1) - std::norm(l2));
    const double minor = std::sqrt(minor_sq);
    const double sep = std::abs(l1 - l2);
    const double major = std::sqrt(minor_sq + sep * sep);
    const double tol = 1e-12 * (a.norm() + 1.0);
    if (sep <= tol) return RegionSpec::disk(0.5 * (l1 + l2), 0.5 * minor);
    if (minor <= tol) return RegionSpec::segment(l1, l2);
    return RegionSpec::ellipse(l1, l2, major, minor);
}

RegionSpec rank_one_range(const TruncatedSeries& psi, cplx w, std::size_t trunc) {
    if (std::abs(w) >= 1.0) {
        throw std::invalid_argument("rank_one_range: need |w| < 1");
    }
    if (psi.is_zero()) {
        throw std::invalid_argument("rank_one_range: psi must be nonzero");
    }
    const Eigen::VectorXcd u = e_coordinates(psi, trunc);
    const Eigen::VectorXcd v = e_coordinates(kernel_series(w, trunc), trunc);
    const double unorm = u.norm();
    const double vnorm = v.norm();
    const cplx uv = (u.adjoint() * v)[0];  // <psi, k_w>_D at truncation
    if (unorm * vnorm - std::abs(uv) <= 1e-12 * unorm * vnorm) {
        // k_w = c psi: segment [0, conj(c) ||psi||^2]
        const cplx c = (u.adjoint() * v)[0] / cplx{unorm * unorm};
        return RegionSpec::segment(cplx{0.0}, std::conj(c) * unorm * unorm);
    }
    const double knorm = std::sqrt(kernel_norm_sq(w));
    const cplx psi_w = evaluate(psi, w);
    if (std::abs(psi_w) <= 1e-12) {
        return RegionSpec::disk(cplx{0.0}, 0.5 * unorm * knorm);
    }
    const double major = unorm * knorm;
    const double minor = std::sqrt(std::max(0.0, major * major - std::norm(psi_w)));
    return RegionSpec::ellipse(cplx{0.0}, psi_w, major, minor);
}

}  // namespace wcolab
