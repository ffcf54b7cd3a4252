// Acceptance battery: one line per criterion, all checks exact (rational
// arithmetic, zero tolerance). Exits nonzero if any criterion fails.

#include <functional>
#include <iostream>

#include "stg/gallery.hpp"
#include "stg/hermitian.hpp"
#include "stg/sphere.hpp"
#include "stg/warped.hpp"
#include "support.hpp"

using namespace stg;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << name << note << "\n";
    if (!pass) ++failures;
}

KForm seven_dim_expected_torsion() {
    KForm c(7, 3);
    c.add(mindex::from_indices({1, 2, 5}), Rational(-1));
    c.add(mindex::from_indices({1, 3, 6}), Rational(-1));
    c.add(mindex::from_indices({1, 4, 7}), Rational(-1));
    c.add(mindex::from_indices({2, 4, 6}), Rational(-1));
    c.add(mindex::from_indices({2, 3, 7}), Rational(1));
    c.add(mindex::from_indices({3, 4, 5}), Rational(1));
    return c;
}

} // namespace

int main() {
    criterion(1, "st connection of ex_7d_nilpotent reproduces the 12-entry table", [] {
        ACMStructure s = ex_7d_nilpotent();
        Connection conn = st_connection(s);
        struct Entry { int i, j, k, v; };
        const Entry table[] = {
            {5, 1, 2, -1}, {6, 1, 3, -1}, {7, 1, 4, -1},
            {5, 2, 1, 1},  {6, 2, 4, -1}, {7, 2, 3, 1},
            {5, 3, 4, 1},  {6, 3, 1, 1},  {7, 3, 2, -1},
            {5, 4, 3, -1}, {6, 4, 2, 1},  {7, 4, 1, 1},
        };
        for (const auto& e : table) {
            Vector want(7);
            want[e.k] = Rational(e.v);
            if (!(conn.nabla(e.i, e.j) == want)) return false;
        }
        int nonzero = 0;
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                for (int k = 1; k <= 7; ++k)
                    if (!conn.gamma(i, j, k).is_zero()) ++nonzero;
        return nonzero == 12;
    });

    criterion(2, "torsion forms of ex_7d_nilpotent and ex_r_times_g4", [] {
        if (!(torsion(ex_7d_nilpotent()) == seven_dim_expected_torsion())) return false;
        ACMStructure rg = ex_r_times_g4();
        KForm c = torsion(rg);
        // c is a nonzero rational multiple of e2^e3^e4
        Mask m234 = mindex::from_indices({2, 3, 4});
        if (c.terms().size() != 1 || c.coeff(m234).is_zero()) return false;
        if (!wedge(rg.eta, rg.L.d(rg.eta)).is_zero()) return false;
        return !rg.L.d(c).is_zero();
    });

    criterion(3, "classification of the named examples", [] {
        Classification c5 = classify(ex_5d_quasi_sasaki());
        if (c5.primary != PrimaryClass::QuasiSasaki || !c5.deta_decomposable || !c5.is_sst)
            return false;
        Classification su2 = classify(su2_sasaki());
        if (su2.primary != PrimaryClass::AlphaSasaki || !su2.alpha || *su2.alpha != Rational(2))
            return false;
        Classification c7 = classify(ex_7d_nilpotent());
        return c7.is_balanced && c7.primary != PrimaryClass::QuasiSasaki;
    });

    criterion(4, "u(3): S = 0, Killing, dc = 0, d*c = 0, R = 0, Ric = 0", [] {
        ACMStructure s = u_n_canonical_sst(3);
        if (!sasaki_hatakeyama(s).all_zero() || !is_killing(s)) return false;
        KForm c = torsion(s);
        if (!s.L.d(c).is_zero()) return false;
        if (!codifferential(s.L, s.g, c).is_zero()) return false;
        Connection conn = st_connection(s);
        return curvature(s.L, conn).all_zero() && ricci(s.L, conn).is_zero();
    });

    criterion(5, "cylinder bridge: SKT iff SST and balanced iff balanced, all gallery", [] {
        // Run both wings exactly as stated. The balanced wing is expected to
        // fail: over a base with nonzero tr_g(d eta(., phi .)) the cylinder
        // Lee form acquires -1/2 trace in the new direction, so a balanced
        // base (su2_sasaki, ex_5d_quasi_sasaki) has a non-balanced cylinder;
        // in dimension 4 (su2 case) d omega != 0 even rules balanced out
        // definitionally. The SKT wing and the horizontal Lee identity hold
        // on the whole gallery (see the unit suites).
        bool ok = true;
        for (const auto& [name, s] : gallery_st()) {
            Classification cls = classify(s);
            HermitianStructure h = cylinder(s);
            if (is_skt(h) != cls.is_sst) {
                std::cout << "       skt wing fails on " << name << "\n";
                ok = false;
            }
            if (kt_lee(h).is_zero() != cls.is_balanced) {
                std::cout << "       balanced wing fails on " << name << ": kt_lee = "
                          << kt_lee(h).str() << ", base lee = " << lee_form(s).str() << "\n";
                ok = false;
            }
        }
        return ok;
    });

    criterion(6, "warped torsion routes agree; cone dichotomy on su(2) vs 7-dim", [] {
        std::vector<RFun> fs = {RFun(Rational(1)), RFun::r(), RFun::r() * RFun::r(),
                                RFun(Rational(1)) + RFun::r()};
        for (const auto& [name, s] : gallery_st())
            for (const auto& f : fs)
                if (!(warped_torsion_direct(s, f) == warped_torsion_formula(s, f))) return false;
        if (!warped_skt_report(su2_sasaki(), RFun::r()).closed) return false;
        return !warped_skt_report(ex_7d_nilpotent(), RFun::r()).closed;
    });

    criterion(7, "Lee form: triple-formula agreement; dF = lee ^ F in dim 5", [] {
        for (const auto& [name, s] : gallery_st()) {
            KForm lee = lee_form(s); // raises on any internal disagreement
            (void)lee;
            if (s.dim() == 5 && !dim5_lee_identity(s)) return false;
        }
        return true;
    });

    criterion(8, "homothety transform laws and conformal composition", [] {
        for (const auto& [name, s] : gallery_st()) {
            for (Rational a : {Rational(2), Rational(3), Rational(5, 2)}) {
                ACMStructure t = homothety(s, a);
                if (!(t.F == a * s.F)) return false;
                if (!(lee_form(t) == lee_form(s))) return false;
                KForm want = wedge(s.eta, s.L.d(s.eta));
                want *= a - Rational(1);
                want += torsion(s);
                want *= a;
                if (!(torsion(t) == want)) return false;
            }
            ACMStructure u = conformal_const(conformal_const(s, Rational(3, 2)), Rational(4, 3));
            if (!acm_equal(u, conformal_const(s, Rational(2)))) return false;
        }
        return true;
    });

    criterion(9, "d eta - xi -| T = 2F for the cone-convention torsion, all gallery", [] {
        for (const auto& [name, s] : gallery_st()) {
            KForm t = houri_torsion(s);
            if (!(s.L.d(s.eta) - interior(s.xi, t) == Rational(2) * s.F)) return false;
        }
        return true;
    });

    criterion(10, "moment maps at 100 exact points per model", [] {
        std::mt19937_64 rng(424242);
        for (int t = 0; t < 100; ++t) {
            std::vector<Rational> pt(1 + 4);
            for (auto& c : pt) c = stg::test::random_rational(rng, 6, 5);
            MomentReport rep = moment_check_euclid(1, pt);
            if (!rep.dmu_xi.is_zero()) return false;
            if (!(rep.dmu_phiX == Rational(2) * rep.sum_z2)) return false;
        }
        for (const auto& p : rational_sphere_points(1, 50, 9)) {
            if (!moment_check_sphere(1, p).dmu_xi.is_zero()) return false;
        }
        for (const auto& p : rational_sphere_points(2, 50, 10)) {
            if (!moment_check_sphere(2, p).dmu_xi.is_zero()) return false;
        }
        return true;
    });

    criterion(11, "property batteries: d^2 = 0 x200, torsion tensor match, type identities", [] {
        std::mt19937_64 rng(777);
        for (int t = 0; t < 200; ++t) {
            int dim = 3 + static_cast<int>(rng() % 5); // up to 7
            LieAlgebra L = stg::test::random_jacobi_algebra(rng, dim);
            if (!L.jacobi_ok()) return false;
            for (int deg = 1; deg <= std::min(3, dim - 1); ++deg)
                if (!L.d(L.d(stg::test::random_form(rng, dim, deg))).is_zero()) return false;
        }
        for (const auto& [name, s] : gallery_st()) {
            Connection conn = st_connection(s);
            KForm c = torsion(s);
            int n = s.dim();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Vector tv = connection_torsion(s.L, conn, i, j);
                    for (int k = 1; k <= n; ++k)
                        if (!(s.g.pair(tv, Vector::basis(n, k)) == c.eval({i, j, k}))) return false;
                }
            if (!type_check_21_12(s, c)) return false;
            if (!type_check_11(s, s.L.d(s.eta))) return false;
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
