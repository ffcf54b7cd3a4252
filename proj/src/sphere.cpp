#include "stg/sphere.hpp"

#include <random>
#include <set>

namespace stg {

namespace {

// J0 on interleaved coordinates: d/dx_j -> d/dy_j, d/dy_j -> -d/dx_j.
Mat std_complex_structure(int pairs) {
    Mat j(2 * pairs);
    for (int p = 1; p <= pairs; ++p) {
        j.at(2 * p, 2 * p - 1) = Rational(1);
        j.at(2 * p - 1, 2 * p) = Rational(-1);
    }
    return j;
}

Rational dot(const Vector& a, const Vector& b) {
    Rational r;
    for (int i = 1; i <= a.dim(); ++i) r += a[i] * b[i];
    return r;
}

// Exact rotation pairs (c, s) with c^2 + s^2 = 1.
const std::vector<std::pair<Rational, Rational>>& pythagorean_pairs() {
    static const std::vector<std::pair<Rational, Rational>> pairs = {
        {Rational(3, 5), Rational(4, 5)},
        {Rational(5, 13), Rational(12, 13)},
        {Rational(8, 17), Rational(15, 17)},
        {Rational(20, 29), Rational(21, 29)},
    };
    return pairs;
}

} // namespace

SpherePoint make_sphere_point(int k, std::vector<Rational> xy) {
    if (static_cast<int>(xy.size()) != 2 * (k + 1))
        throw PreconditionError("sphere point needs 2(k+1) coordinates");
    Rational s;
    for (const auto& c : xy) s += c * c;
    if (s != Rational(1)) throw PreconditionError("point is not on the unit sphere");
    return SpherePoint{k, std::move(xy)};
}

PointwiseACM sphere_data(const SpherePoint& p) {
    int n = 2 * (p.k + 1);
    Vector nu(n);
    for (int i = 1; i <= n; ++i) nu[i] = p.xy[i - 1];
    Mat j0 = std_complex_structure(p.k + 1);
    Vector xi = j0.apply(nu);
    Vector eta = xi; // Euclidean metric: covector = vector components
    Mat proj = Mat::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) proj.at(i, j) -= nu[i] * nu[j];
    PointwiseACM out{std::move(eta), std::move(xi), proj * j0, std::move(proj)};
    return out;
}

bool pointwise_acm_ok(const PointwiseACM& d) {
    if (dot(d.eta, d.xi) != Rational(1)) return false;
    int n = d.phi.dim();
    // phi^2 = -1 + eta (x) xi on tangent vectors: (phi^2 + 1 - xi eta^T) P = 0.
    Mat lhs = d.phi * d.phi + Mat::identity(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) lhs.at(i, j) -= d.xi[i] * d.eta[j];
    return (lhs * d.tangent_projector).is_zero();
}

namespace {

// Common machinery: quadratic forms mu = c0 + p^T M p with exact gradients.
struct Quadratic {
    Rational c0;
    Mat m; // symmetric
    Rational value(const Vector& p) const {
        Rational v = c0;
        for (int i = 1; i <= m.dim(); ++i)
            for (int j = 1; j <= m.dim(); ++j) v += p[i] * m.at(i, j) * p[j];
        return v;
    }
    Vector gradient(const Vector& p) const {
        Vector g = m.apply(p);
        g *= Rational(2);
        return g;
    }
};

bool invariant_under(const Quadratic& q, const Mat& rot) {
    return rot.transposed() * q.m * rot == q.m;
}

Mat block_rotation(int n, int first_pair_index, const Rational& c, const Rational& s) {
    Mat r = Mat::identity(n);
    int a = first_pair_index, b = first_pair_index + 1;
    r.at(a, a) = c;
    r.at(a, b) = -s;
    r.at(b, a) = s;
    r.at(b, b) = c;
    return r;
}

} // namespace

MomentReport moment_check_euclid(int k, const std::vector<Rational>& point,
                                 const std::vector<Rational>& lambda) {
    int pairs = k + 1;
    int n = 1 + 2 * pairs; // (s, x_1, y_1, ...)
    if (static_cast<int>(point.size()) != n)
        throw PreconditionError("euclidean point needs 1 + 2(k+1) coordinates");
    Vector p(n);
    for (int i = 1; i <= n; ++i) p[i] = point[i - 1];

    Quadratic mu;
    mu.c0 = Rational(1);
    mu.m = Mat(n);
    for (int i = 2; i <= n; ++i) mu.m.at(i, i) = Rational(-1);

    Vector xi = Vector::basis(n, 1);
    Mat phi(n); // J0 on the complex block, 0 on d/ds
    for (int q = 1; q <= pairs; ++q) {
        phi.at(1 + 2 * q, 2 * q) = Rational(1);
        phi.at(2 * q, 1 + 2 * q) = Rational(-1);
    }
    Vector fund = phi.apply(p); // X = sum (x_j d/dy_j - y_j d/dx_j); d/ds part is 0

    MomentReport rep;
    rep.mu = mu.value(p);
    Vector grad = mu.gradient(p);
    rep.dmu_xi = dot(grad, xi);
    rep.dmu_phiX = dot(grad, phi.apply(fund));
    for (int q = 1; q <= pairs; ++q)
        rep.sum_z2 += p[2 * q] * p[2 * q] + p[1 + 2 * q] * p[1 + 2 * q];
    rep.dmu_phiX_nonzero = !rep.dmu_phiX.is_zero();
    // mu has no s-dependence and xi is constant: d mu(xi) = 2 p^T M xi.
    rep.reeb_basic = mu.m.apply(xi).is_zero();

    Quadratic f;
    f.m = Mat(n);
    for (int q = 1; q <= pairs; ++q) {
        Rational lq = q <= static_cast<int>(lambda.size()) ? lambda[q - 1] : Rational(q);
        f.m.at(2 * q, 2 * q) = lq;
        f.m.at(1 + 2 * q, 1 + 2 * q) = lq;
    }
    rep.s1_invariant_mu = rep.s1_invariant_f = true;
    for (const auto& [c, s] : pythagorean_pairs()) {
        Mat rot = Mat::identity(n);
        for (int q = 1; q <= pairs; ++q) rot = rot * block_rotation(n, 2 * q, c, s);
        if (!invariant_under(mu, rot)) rep.s1_invariant_mu = false;
        if (!invariant_under(f, rot)) rep.s1_invariant_f = false;
    }
    return rep;
}

MomentReport moment_check_sphere(int k, const SpherePoint& sp, const std::vector<Rational>& lambda) {
    int pairs = k + 1;
    int n = 2 * pairs;
    Vector p(n);
    for (int i = 1; i <= n; ++i) p[i] = sp.xy[i - 1];

    Quadratic mu;
    mu.m = Mat(n);
    for (int q = 1; q <= pairs; ++q) {
        Rational sgn = (q % 2 == 1) ? Rational(-1) : Rational(1); // (-1)^j
        mu.m.at(2 * q - 1, 2 * q - 1) = sgn;
        mu.m.at(2 * q, 2 * q) = sgn;
    }

    PointwiseACM data = sphere_data(sp);
    Mat j0 = std_complex_structure(pairs);
    Mat act(n); // generator of the alternating action
    for (int q = 1; q <= pairs; ++q) {
        Rational sgn = (q % 2 == 1) ? Rational(-1) : Rational(1);
        act.at(2 * q, 2 * q - 1) = sgn;
        act.at(2 * q - 1, 2 * q) = -sgn;
    }
    Vector fund = act.apply(p);

    MomentReport rep;
    rep.mu = mu.value(p);
    Vector grad = mu.gradient(p);
    rep.dmu_xi = dot(grad, data.xi);
    rep.dmu_phiX = dot(grad, data.phi.apply(fund));
    for (int i = 1; i <= n; ++i) rep.sum_z2 += p[i] * p[i];
    rep.dmu_phiX_nonzero = !rep.dmu_phiX.is_zero();
    // d mu(xi) = 2 p^T M J0 p vanishes identically iff M J0 is antisymmetric.
    Mat mj = mu.m * j0;
    rep.reeb_basic = mj.is_antisymmetric();

    Quadratic f;
    f.m = Mat(n);
    for (int q = 1; q <= pairs; ++q) {
        Rational lq = q <= static_cast<int>(lambda.size()) ? lambda[q - 1] : Rational(q);
        f.m.at(2 * q - 1, 2 * q - 1) = lq;
        f.m.at(2 * q, 2 * q) = lq;
    }
    rep.s1_invariant_mu = rep.s1_invariant_f = true;
    for (const auto& [c, s] : pythagorean_pairs()) {
        Mat rot = Mat::identity(n);
        for (int q = 1; q <= pairs; ++q) {
            Rational sq = (q % 2 == 1) ? -s : s;
            rot = rot * block_rotation(n, 2 * q - 1, c, sq);
        }
        if (!invariant_under(mu, rot)) rep.s1_invariant_mu = false;
        if (!invariant_under(f, rot)) rep.s1_invariant_f = false;
    }
    return rep;
}

std::vector<SpherePoint> rational_sphere_points(int k, int count, std::uint64_t seed) {
    if (count < 1) throw PreconditionError("need count >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    int m = 2 * k + 1;
    std::vector<SpherePoint> out;
    std::set<std::vector<std::string>> seen;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Rational> v(m);
        for (auto& c : v) c = Rational(num(rng), den(rng));
        Rational norm2;
        for (const auto& c : v) norm2 += c * c;
        Rational denom = norm2 + Rational(1);
        std::vector<Rational> xy;
        xy.reserve(m + 1);
        for (const auto& c : v) xy.push_back(Rational(2) * c / denom);
        xy.push_back((norm2 - Rational(1)) / denom);
        std::vector<std::string> key;
        for (const auto& c : xy) key.push_back(c.str());
        if (!seen.insert(key).second) continue;
        out.push_back(make_sphere_point(k, std::move(xy)));
    }
    return out;
}

std::vector<SpherePoint> moment_zero_points(int k, int count, std::uint64_t seed) {
    if (count < 1) throw PreconditionError("need count >= 1");
    int pairs = k + 1;
    int n = 2 * pairs;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<SpherePoint> out;
    std::set<std::vector<std::string>> seen;
    while (static_cast<int>(out.size()) < count) {
        // Mass 1/2 in the first block of each parity class, then exact
        // rotations: within blocks, and mixing equal-parity blocks.
        std::vector<Rational> xy(n);
        xy[0] = Rational(1, 2);
        xy[1] = Rational(1, 2); // block 1 (odd class): |z_1|^2 = 1/2
        if (pairs >= 2) {
            xy[2] = Rational(1, 2);
            xy[3] = Rational(1, 2);
        } else {
            // k = 0 has a single block; the even class is empty and mu = -|z_1|^2
            // never vanishes, so there is no zero set.
            throw PreconditionError("moment zero set needs k >= 1");
        }
        int rounds = 3 + static_cast<int>(out.size() % 3);
        for (int t = 0; t < rounds; ++t) {
            const auto& [c, s] = pythagorean_pairs()[pick(rng)];
            int q = 1 + static_cast<int>(rng() % pairs);
            // in-block rotation of block q
            Vector tmp(n);
            for (int i = 1; i <= n; ++i) tmp[i] = xy[i - 1];
            Mat rot = block_rotation(n, 2 * q - 1, c, s);
            tmp = rot.apply(tmp);
            // mix block q with another block of the same parity, if any
            int q2 = q + 2;
            if (q2 <= pairs) {
                Mat mix = Mat::identity(n);
                mix.at(2 * q - 1, 2 * q - 1) = c;
                mix.at(2 * q - 1, 2 * q2 - 1) = -s;
                mix.at(2 * q2 - 1, 2 * q - 1) = s;
                mix.at(2 * q2 - 1, 2 * q2 - 1) = c;
                mix.at(2 * q, 2 * q) = c;
                mix.at(2 * q, 2 * q2) = -s;
                mix.at(2 * q2, 2 * q) = s;
                mix.at(2 * q2, 2 * q2) = c;
                tmp = mix.apply(tmp);
            }
            for (int i = 1; i <= n; ++i) xy[i - 1] = tmp[i];
        }
        std::vector<std::string> key;
        for (const auto& c : xy) key.push_back(c.str());
        if (!seen.insert(key).second) continue;
        out.push_back(make_sphere_point(k, std::move(xy)));
    }
    return out;
}

} // namespace stg
