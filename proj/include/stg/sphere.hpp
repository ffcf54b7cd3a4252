#pragma once

#include <cstdint>

#include "stg/kform.hpp"

namespace stg {

// Exact point of S^{2k+1} in C^{k+1}, coordinates interleaved as
// (x_1, y_1, ..., x_{k+1}, y_{k+1}) with sum of squares exactly 1.
struct SpherePoint {
    int k = 0;
    std::vector<Rational> xy; // size 2(k+1)
};

SpherePoint make_sphere_point(int k, std::vector<Rational> xy);

// The standard structure evaluated at a point: eta_p as a covector, the Reeb
// vector xi_p, and the ambient endomorphism phi_p = (1 - nu nu^T) J0 obtained
// by projecting the complex structure onto the tangent space.
struct PointwiseACM {
    Vector eta;     // covector coefficients on dx_1, dy_1, ...
    Vector xi;
    Mat phi;        // ambient size 2(k+1)
    Mat tangent_projector; // 1 - nu nu^T
};

PointwiseACM sphere_data(const SpherePoint& p);

// eta(xi) = 1 and phi^2 = -1 + eta (x) xi on the tangent space, exactly.
bool pointwise_acm_ok(const PointwiseACM& d);

struct MomentReport {
    Rational mu;          // value at the point
    Rational dmu_xi;      // must be 0
    Rational dmu_phiX;    // pairing against phi of the fundamental field
    Rational sum_z2;      // sum |z_j|^2 at the point
    bool reeb_basic = false;      // d mu(xi) = 0 as a polynomial identity
    bool s1_invariant_mu = false; // exact Pythagorean rotations
    bool s1_invariant_f = false;  // for the supplied weights
    bool dmu_phiX_nonzero = false;
};

// Flat model R x C^{k+1} with xi = d/ds and the rotation action
// z -> e^{it} z; mu = 1 - sum |z_j|^2. The point is ambient,
// (s, x_1, y_1, ..., x_{k+1}, y_{k+1}). Here d mu(phi X) = 2 sum |z_j|^2
// exactly at every point.
MomentReport moment_check_euclid(int k, const std::vector<Rational>& point,
                                 const std::vector<Rational>& lambda = {});

// Sphere model with the alternating action z_j -> e^{(-1)^j i s} z_j and
// mu(z) = sum (-1)^j |z_j|^2.
MomentReport moment_check_sphere(int k, const SpherePoint& p,
                                 const std::vector<Rational>& lambda = {});

// Distinct exact points via stereographic projection of rational vectors:
// v in Q^{2k+1} -> (2v, |v|^2 - 1)/(|v|^2 + 1).
std::vector<SpherePoint> rational_sphere_points(int k, int count, std::uint64_t seed = 1);

// Exact points on the zero set of the sphere moment map (both parity blocks
// carry mass 1/2), spread by exact rotations.
std::vector<SpherePoint> moment_zero_points(int k, int count, std::uint64_t seed = 1);

} // namespace stg
