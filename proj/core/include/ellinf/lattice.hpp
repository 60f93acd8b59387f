#ifndef ELLINF_LATTICE_HPP
#define ELLINF_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "ellinf/numeric.hpp"

namespace ellinf {

/// Oriented rank-2 lattice Z*omega1 + Z*omega2 in the complex plane.
///
/// The basis must be positively oriented: Im(conj(omega1)*omega2) > 0.  The
/// derived quantities (fundamental-domain area, tau = omega2/omega1 and the
/// nome q = exp(2*pi*i*tau)) are computed once at construction.
class Lattice {
public:
    Lattice(cplx omega1, cplx omega2);

    cplx omega1() const { return omega1_; }
    cplx omega2() const { return omega2_; }
    double area() const { return area_; }
    cplx tau() const { return tau_; }
    cplx q() const { return q_; }

    /// Shortest-vector length of the lattice (from a Lagrange-reduced basis).
    double min_norm() const { return min_norm_; }
    /// Upper bound on the covering radius: every point of the plane lies
    /// within this distance of a lattice point.
    double covering_radius() const { return covering_radius_; }

private:
    cplx omega1_, omega2_;
    double area_;
    cplx tau_;
    cplx q_;
    double min_norm_;
    double covering_radius_;
};

Lattice make_lattice(cplx omega1, cplx omega2);

/// Basis scaled by a nonzero complex factor; the point set scales with it.
Lattice scale_basis(const Lattice& l, cplx lambda);

/// Change of basis by an integer matrix [[a, b], [c, d]] with determinant 1:
/// omega1' = a*omega1 + b*omega2, omega2' = c*omega1 + d*omega2.  The point
/// set and orientation are unchanged.
Lattice sl2_change_basis(const Lattice& l, const std::int64_t (&gamma)[2][2]);

struct SummationConfig {
    double target_epsilon = 1e-12;  // absolute tail tolerance
    double radius_margin = 1.2;     // dimensionless safety factor >= 1
    std::int64_t max_points = 4'000'000;

    void validate() const;
    /// Same config with a different tail tolerance.
    SummationConfig with_epsilon(double eps) const {
        SummationConfig c = *this;
        c.target_epsilon = eps;
        return c;
    }
};

/// A numerically evaluated series together with a proven bound on the mass
/// omitted by truncation.
struct SeriesValue {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    std::int64_t points_used = 0;
};

/// Nonzero lattice point m*omega2 + n*omega1 with its integer coordinates.
struct LatticePoint {
    std::int64_t m;
    std::int64_t n;
    cplx omega;
    double norm2;
};

/// All nonzero points with |omega| <= radius, sorted by ascending |omega|
/// with ties broken by (m, n) lexicographic order.  Membership on the sphere
/// |omega| = radius is decided with a tiny relative slack so points landing
/// exactly on the boundary are kept despite rounding.
std::vector<LatticePoint> enumerate_shell_points(const Lattice& l, double radius,
                                                 const SummationConfig& cfg = {});

/// Upper bound on sum_{|omega|>radius} |(pi/area)^m * conj(omega)^m * omega^{-n}|
/// * exp(-pi*|omega|^2/area), by comparison with a Gaussian integral over the
/// plane.  Returns +infinity when the comparison is not valid at this radius
/// (radius too small relative to the integrand peak and the covering radius);
/// the result is monotone nonincreasing in radius.
double gaussian_tail_bound(const Lattice& l, double radius, int m, int n);

/// Compensated, shell-ordered summation of conj(omega)^m * omega^{-n}
/// * exp(-pi*|omega|^2/area) over nonzero lattice points.  The truncation
/// radius is the smallest radius whose tail bound falls below
/// cfg.target_epsilon, multiplied by cfg.radius_margin.  Note the (pi/area)^m
/// prefactor is NOT applied here; see f_mn.
SeriesValue gaussian_lattice_sum(const Lattice& l, int m, int n, const SummationConfig& cfg);

/// Same sum truncated at an explicit radius (tail_bound is the bound at that
/// radius, which may exceed cfg.target_epsilon).
SeriesValue gaussian_lattice_sum_at_radius(const Lattice& l, int m, int n, double radius,
                                           const SummationConfig& cfg);

}  // namespace ellinf

#endif
