#include "stg/gallery.hpp"

namespace stg {

namespace {

KForm two_form(int n, std::initializer_list<std::tuple<int, int, int>> terms) {
    KForm f(n, 2);
    for (const auto& [c, i, j] : terms) f.add(mindex::from_indices({i, j}), Rational(c));
    return f;
}

ACMStructure from_table(int n, std::vector<KForm> d, int reeb, std::vector<PhiRow> phi_rows) {
    LieAlgebra L(n, std::move(d));
    Metric g = Metric::orthonormal(n);
    Vector xi = Vector::basis(n, reeb);
    Endo phi = complete_phi(L, g, xi, phi_rows);
    return make_acm(std::move(L), std::move(g), std::move(xi), std::move(phi));
}

} // namespace

ACMStructure ex_r_times_g4() {
    int n = 5;
    std::vector<KForm> d(5, KForm(n, 2));
    d[2] = two_form(n, {{-1, 1, 3}, {-1, 2, 4}}); // de^3 = e^3^e^1 + e^4^e^2
    d[3] = two_form(n, {{-1, 1, 4}, {1, 2, 3}});  // de^4 = e^4^e^1 + e^2^e^3
    return from_table(n, std::move(d), 5,
                      {{1, Rational(1), 2}, {3, Rational(1), 4}, {5, Rational(0), 5}});
}

ACMStructure ex_5d_quasi_sasaki() {
    int n = 5;
    std::vector<KForm> d(5, KForm(n, 2));
    d[0] = two_form(n, {{1, 1, 3}, {1, 2, 3}, {-1, 3, 4}, {1, 3, 5}, {1, 2, 5}});
    d[1] = two_form(n, {{2, 1, 2}, {-2, 1, 3}, {1, 1, 4}, {-1, 1, 5}, {-1, 2, 4}, {1, 3, 4}, {1, 4, 5}});
    d[2] = two_form(n, {{-1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {-1, 1, 5}, {2, 2, 4}, {-2, 3, 4}, {1, 4, 5}});
    d[3] = two_form(n, {{-1, 1, 2}, {-1, 2, 3}, {1, 2, 4}, {-1, 2, 5}, {-1, 3, 5}});
    // de^5 = (e^1 + e^4) ^ (e^2 - e^3); with e^1 - e^4 instead, d^2 != 0.
    d[4] = two_form(n, {{1, 1, 2}, {-1, 1, 3}, {-1, 2, 4}, {1, 3, 4}});
    return from_table(n, std::move(d), 5, {{1, Rational(-1), 2}, {3, Rational(-1), 4}});
}

ACMStructure ex_7d_nilpotent() {
    int n = 7;
    std::vector<KForm> d(7, KForm(n, 2));
    d[4] = two_form(n, {{-1, 1, 2}, {1, 3, 4}});
    d[5] = two_form(n, {{-1, 1, 3}, {-1, 2, 4}});
    d[6] = two_form(n, {{-1, 1, 4}, {1, 2, 3}});
    return from_table(n, std::move(d), 5,
                      {{1, Rational(-1), 2}, {3, Rational(-1), 4}, {6, Rational(-1), 7}, {5, Rational(0), 5}});
}

ACMStructure su2_sasaki() {
    int n = 3;
    std::vector<KForm> d(3, KForm(n, 2));
    d[0] = two_form(n, {{-2, 2, 3}});
    d[1] = two_form(n, {{2, 1, 3}});  // -2 e^3^e^1
    d[2] = two_form(n, {{-2, 1, 2}});
    return from_table(n, std::move(d), 1, {{3, Rational(-1), 2}});
}

namespace {

// Complex rational matrices, only what the u(n) builders need.
struct CMat {
    Mat re, im;
    explicit CMat(int n) : re(n), im(n) {}
};

CMat cmul(const CMat& a, const CMat& b) {
    CMat r(a.re.dim());
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

CMat csub(const CMat& a, const CMat& b) {
    CMat r(a.re.dim());
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

// g(X, Y) = -tr(XY); real for anti-Hermitian arguments.
Rational minus_trace_product(const CMat& a, const CMat& b) {
    CMat p = cmul(a, b);
    if (!p.im.trace().is_zero()) throw InternalError("trace pairing is not real");
    return -p.re.trace();
}

} // namespace

ACMStructure u_n_canonical_sst(int n) {
    if (n == 1) {
        LieAlgebra L = LieAlgebra::abelian(1);
        return make_acm(std::move(L), Metric::orthonormal(1), Vector::basis(1, 1), Endo(1));
    }
    if (n != 3) throw PreconditionError("u(n) builder supports n in {1, 3}");

    // Basis of u(3): iE_11, iE_22, iE_33, then (E_jk - E_kj, i(E_jk + E_kj))
    // for (j,k) = (1,2), (1,3), (2,3).
    int dim = 9;
    std::vector<CMat> basis;
    basis.reserve(dim);
    for (int j = 1; j <= 3; ++j) {
        CMat m(3);
        m.im.at(j, j) = Rational(1);
        basis.push_back(m);
    }
    for (auto [j, k] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        CMat a(3);
        a.re.at(j, k) = Rational(1);
        a.re.at(k, j) = Rational(-1);
        basis.push_back(a);
        CMat s(3);
        s.im.at(j, k) = Rational(1);
        s.im.at(k, j) = Rational(1);
        basis.push_back(s);
    }

    Mat gm(dim);
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b) gm.at(a, b) = minus_trace_product(basis[a - 1], basis[b - 1]);
    Metric g(gm);

    // [B_j, B_k] expanded in the basis through the metric pairing.
    std::vector<KForm> d(dim, KForm(dim, 2));
    for (int j = 1; j <= dim; ++j)
        for (int k = j + 1; k <= dim; ++k) {
            CMat br = csub(cmul(basis[j - 1], basis[k - 1]), cmul(basis[k - 1], basis[j - 1]));
            Vector w(dim);
            for (int i = 1; i <= dim; ++i) w[i] = minus_trace_product(br, basis[i - 1]);
            Vector coef = g.inv().apply(w);
            for (int i = 1; i <= dim; ++i)
                if (!coef[i].is_zero()) d[i - 1].add(mindex::from_indices({j, k}), -coef[i]);
        }
    LieAlgebra L(dim, std::move(d));

    // phi: zero on xi = iE_11, rotation iE_22 -> iE_33 on the rest of the
    // torus, A -> S, S -> -A on each root plane.
    Endo phi(dim);
    phi.at(3, 2) = Rational(1);
    phi.at(2, 3) = Rational(-1);
    for (int p = 0; p < 3; ++p) {
        int a = 4 + 2 * p, s = 5 + 2 * p;
        phi.at(s, a) = Rational(1);
        phi.at(a, s) = Rational(-1);
    }
    return make_acm(std::move(L), std::move(g), Vector::basis(dim, 1), std::move(phi));
}

ACMStructure abelian_st(int k) {
    if (k < 0) throw PreconditionError("abelian builder needs k >= 0");
    int n = 2 * k + 1;
    LieAlgebra L = LieAlgebra::abelian(n);
    Endo phi(n);
    for (int i = 1; i <= k; ++i) {
        phi.at(2 * i, 2 * i - 1) = Rational(1);
        phi.at(2 * i - 1, 2 * i) = Rational(-1);
    }
    return make_acm(std::move(L), Metric::orthonormal(n), Vector::basis(n, n), std::move(phi));
}

std::vector<std::string> gallery_names() {
    return {"su2_sasaki",     "ex_r_times_g4", "ex_5d_quasi_sasaki", "ex_7d_nilpotent",
            "u1_canonical_sst", "u3_canonical_sst", "abelian5"};
}

ACMStructure build_example(const std::string& name) {
    if (name == "su2_sasaki") return su2_sasaki();
    if (name == "ex_r_times_g4") return ex_r_times_g4();
    if (name == "ex_5d_quasi_sasaki") return ex_5d_quasi_sasaki();
    if (name == "ex_7d_nilpotent") return ex_7d_nilpotent();
    if (name == "u1_canonical_sst") return u_n_canonical_sst(1);
    if (name == "u3_canonical_sst") return u_n_canonical_sst(3);
    if (name == "abelian5") return abelian_st(2);
    throw PreconditionError("unknown example '" + name + "'");
}

std::vector<std::pair<std::string, ACMStructure>> gallery_st() {
    std::vector<std::pair<std::string, ACMStructure>> out;
    for (const auto& name : gallery_names()) out.emplace_back(name, build_example(name));
    return out;
}

} // namespace stg
