#include "ellinf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ellinf {

namespace {

// Lagrange (Gauss) reduction of a 2-D lattice basis: afterwards b1 is a
// shortest vector and b2 a shortest vector independent of b1.
void lagrange_reduce(cplx& b1, cplx& b2) {
    if (std::norm(b1) > std::norm(b2)) std::swap(b1, b2);
    for (int iter = 0; iter < 64; ++iter) {
        const double t = (b2 * std::conj(b1)).real() / std::norm(b1);
        const double mu = std::round(t);
        if (mu != 0.0) b2 -= mu * b1;
        if (std::norm(b2) >= std::norm(b1)) break;
        std::swap(b1, b2);
    }
}

// I(k, T) = integral_T^inf u^k exp(-c u^2) du for integer k >= 0.
double gauss_integral(int k, double T, double c) {
    if (k == 0) return 0.5 * std::sqrt(pi / c) * std::erfc(std::sqrt(c) * T);
    if (k == 1) return std::exp(-c * T * T) / (2.0 * c);
    return (std::pow(T, k - 1) * std::exp(-c * T * T) + (k - 1) * gauss_integral(k - 2, T, c)) /
           (2.0 * c);
}

// Bound on sum_{|omega|>R} |omega|^{m-n} exp(-c |omega|^2), c = pi/area,
// without the (pi/area)^m prefactor.  Compares the lattice sum with the
// integral of the same radial profile over the plane: each omitted point owns
// a Voronoi cell of area `area` contained in the annulus |x| > R - mu, on
// which the (eventually decreasing) profile at |omega| is dominated by its
// value at |x| - mu.
double raw_tail_bound(const Lattice& l, double radius, int m, int n) {
    const double inf = std::numeric_limits<double>::infinity();
    if (!(radius > 0)) return inf;
    const double a = l.area();
    const double c = pi / a;
    const double mu = l.covering_radius();
    const int s = m - n;
    const double T = radius - 2.0 * mu;
    const double r_peak = s > 0 ? std::sqrt(s / (2.0 * c)) : 0.0;
    if (!(T > 0.0) || T < r_peak) return inf;
    double integral;
    if (s >= 0)
        integral = gauss_integral(s + 1, T, c) + mu * gauss_integral(s, T, c);
    else
        integral = std::pow(T, s) * (gauss_integral(1, T, c) + mu * gauss_integral(0, T, c));
    return (2.0 * pi / a) * integral;
}

// Smallest radius whose raw tail bound drops below eps, found by bracketing
// and bisection; deterministic for given inputs.
double choose_radius(const Lattice& l, int m, int n, double eps) {
    const double a = l.area();
    const double c = pi / a;
    const int s = m - n;
    const double r_peak = s > 0 ? std::sqrt(s / (2.0 * c)) : 0.0;
    double hi = 2.0 * l.covering_radius() + r_peak + 2.0 * std::sqrt(a / pi);
    int grow = 0;
    while (raw_tail_bound(l, hi, m, n) > eps) {
        hi *= 1.5;
        if (++grow > 300) throw std::runtime_error("gaussian_lattice_sum: tail bound does not converge");
    }
    double lo = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (raw_tail_bound(l, mid, m, n) <= eps)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

}  // namespace

Lattice::Lattice(cplx omega1, cplx omega2) : omega1_(omega1), omega2_(omega2) {
    area_ = (std::conj(omega1) * omega2).imag();
    if (!(area_ > 0.0))
        throw std::invalid_argument(
            "Lattice: basis must be positively oriented and non-degenerate "
            "(Im(conj(omega1)*omega2) > 0), got area = " +
            std::to_string(area_));
    tau_ = omega2_ / omega1_;
    q_ = std::exp(cplx(0.0, 2.0 * pi) * tau_);
    cplx b1 = omega1_, b2 = omega2_;
    lagrange_reduce(b1, b2);
    min_norm_ = std::sqrt(std::norm(b1));
    covering_radius_ = 0.5 * std::max(std::abs(b1 + b2), std::abs(b1 - b2));
}

Lattice make_lattice(cplx omega1, cplx omega2) { return Lattice(omega1, omega2); }

Lattice scale_basis(const Lattice& l, cplx lambda) {
    if (lambda == cplx(0.0, 0.0)) throw std::invalid_argument("scale_basis: lambda must be nonzero");
    return Lattice(lambda * l.omega1(), lambda * l.omega2());
}

Lattice sl2_change_basis(const Lattice& l, const std::int64_t (&g)[2][2]) {
    const std::int64_t det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (det != 1) throw std::invalid_argument("sl2_change_basis: determinant must be 1");
    const cplx w1 = static_cast<double>(g[0][0]) * l.omega1() + static_cast<double>(g[0][1]) * l.omega2();
    const cplx w2 = static_cast<double>(g[1][0]) * l.omega1() + static_cast<double>(g[1][1]) * l.omega2();
    return Lattice(w1, w2);
}

void SummationConfig::validate() const {
    if (!(target_epsilon > 0.0)) throw std::invalid_argument("SummationConfig: target_epsilon must be > 0");
    if (!(radius_margin >= 1.0)) throw std::invalid_argument("SummationConfig: radius_margin must be >= 1");
    if (max_points <= 0) throw std::invalid_argument("SummationConfig: max_points must be > 0");
}

std::vector<LatticePoint> enumerate_shell_points(const Lattice& l, double radius,
                                                 const SummationConfig& cfg) {
    cfg.validate();
    if (radius < 0.0) throw std::invalid_argument("enumerate_shell_points: radius must be >= 0");
    const double a = l.area();
    const double r2max = radius * radius * (1.0 + 1e-12);
    const auto mmax = static_cast<std::int64_t>(std::floor(std::abs(l.omega1()) * radius / a + 1e-9));
    const auto nmax = static_cast<std::int64_t>(std::floor(std::abs(l.omega2()) * radius / a + 1e-9));
    const std::int64_t box = (2 * mmax + 1) * (2 * nmax + 1);
    if (box > 64 * cfg.max_points)
        throw std::runtime_error("enumerate_shell_points: candidate box exceeds max_points budget");

    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(std::min<std::int64_t>(box, cfg.max_points)));
    for (std::int64_t m = -mmax; m <= mmax; ++m) {
        for (std::int64_t n = -nmax; n <= nmax; ++n) {
            if (m == 0 && n == 0) continue;
            const cplx w = static_cast<double>(m) * l.omega2() + static_cast<double>(n) * l.omega1();
            const double n2 = std::norm(w);
            if (n2 <= r2max) pts.push_back({m, n, w, n2});
        }
    }
    if (static_cast<std::int64_t>(pts.size()) > cfg.max_points)
        throw std::runtime_error("enumerate_shell_points: point count " + std::to_string(pts.size()) +
                                 " exceeds max_points = " + std::to_string(cfg.max_points));
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& x, const LatticePoint& y) {
        if (x.norm2 != y.norm2) return x.norm2 < y.norm2;
        if (x.m != y.m) return x.m < y.m;
        return x.n < y.n;
    });
    return pts;
}

double gaussian_tail_bound(const Lattice& l, double radius, int m, int n) {
    if (!(radius > 0)) throw std::invalid_argument("gaussian_tail_bound: radius must be > 0");
    const double raw = raw_tail_bound(l, radius, m, n);
    return std::pow(pi / l.area(), m) * raw;
}

SeriesValue gaussian_lattice_sum_at_radius(const Lattice& l, int m, int n, double radius,
                                           const SummationConfig& cfg) {
    cfg.validate();
    const auto pts = enumerate_shell_points(l, radius, cfg);
    const double c = pi / l.area();
    StableCplxSum acc;
    for (const auto& p : pts) {
        const cplx term = ipow(std::conj(p.omega), m) * ipow(p.omega, -n) * std::exp(-c * p.norm2);
        acc.add(term);
    }
    SeriesValue out;
    out.value = acc.get();
    out.tail_bound = raw_tail_bound(l, radius, m, n);
    out.points_used = static_cast<std::int64_t>(pts.size());
    return out;
}

SeriesValue gaussian_lattice_sum(const Lattice& l, int m, int n, const SummationConfig& cfg) {
    cfg.validate();
    const double r = choose_radius(l, m, n, cfg.target_epsilon) * cfg.radius_margin;
    return gaussian_lattice_sum_at_radius(l, m, n, r, cfg);
}

}  // namespace ellinf
