#include "stg/hermitian.hpp"

namespace stg {

namespace {

// Endomorphism A with g(A X, Y) = w(X, Y): A = -g^{-1} W, W_{jk} = w(E_j, E_k).
Endo endo_from_two_form(const Metric& g, const KForm& w) {
    int n = g.dim();
    Mat W(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) W.at(j, k) = w.eval({j, k});
    return -(g.inv() * W);
}

} // namespace

HermitianStructure make_hermitian(LieAlgebra L, Metric g, Endo J) {
    int n = L.dim();
    if (g.dim() != n || J.dim() != n) throw InvariantError("hermitian component dimension mismatch");
    HermitianStructure h{std::move(L), std::move(g), std::move(J), KForm(n, 2)};
    Mat m = h.J.transposed() * h.g.mat();
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) h.omega.add(mindex::from_indices({j, k}), m.at(j, k));
    return h;
}

ValidationReport hermitian_validate(const HermitianStructure& h) {
    int n = h.dim();
    ValidationReport rep;
    rep.checks.push_back({"dimension even", n % 2 == 0, ""});
    rep.checks.push_back({"jacobi (d^2 = 0)", h.L.jacobi_ok(), ""});
    Mat j2 = h.J * h.J;
    rep.checks.push_back({"J^2 = -1", j2 == -Mat::identity(n), ""});
    Mat compat = h.J.transposed() * h.g.mat() * h.J;
    rep.checks.push_back({"J-metric compatibility", compat == h.g.mat(), ""});
    Mat om = h.J.transposed() * h.g.mat();
    rep.checks.push_back({"omega antisymmetric", om.is_antisymmetric(), ""});
    return rep;
}

VectorValued2Form nijenhuis(const HermitianStructure& h) {
    if (!hermitian_validate(h).ok()) throw InvariantError("invalid Hermitian structure");
    int n = h.dim();
    VectorValued2Form out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vector ei = Vector::basis(n, i), ej = Vector::basis(n, j);
            Vector ji = h.J.col(i), jj = h.J.col(j);
            Vector v = h.L.bracket(ji, jj);
            v -= h.L.bracket(ei, ej);
            v -= h.J.apply(h.L.bracket(ji, ej));
            v -= h.J.apply(h.L.bracket(ei, jj));
            out.set(i, j, std::move(v));
        }
    return out;
}

bool is_integrable(const HermitianStructure& h) {
    return nijenhuis(h).all_zero();
}

KForm kt_torsion(const HermitianStructure& h) {
    if (!is_integrable(h)) throw PreconditionError("kt torsion requires an integrable J");
    return h.L.d(h.omega).pullback(h.J);
}

bool is_skt(const HermitianStructure& h) {
    return h.L.d(kt_torsion(h)).is_zero();
}

KForm kt_lee(const HermitianStructure& h) {
    if (!is_integrable(h)) throw PreconditionError("kt Lee form requires an integrable J");
    int n = h.dim();
    KForm dw = h.L.d(h.omega);
    Rational half(1, 2);
    KForm out(n, 1);
    for (int x = 1; x <= n; ++x) {
        Rational v;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Rational& gij = h.g.inv().at(i, j);
                if (gij.is_zero()) continue;
                Vector jj = h.J.col(j);
                std::vector<Vector> args = {Vector::basis(n, x), Vector::basis(n, i), jj};
                v += half * gij * dw.eval(std::span<const Vector>(args.data(), 3));
            }
        out.add(Mask(1) << (x - 1), v);
    }
    return out;
}

bool type_11_wrt_J(const HermitianStructure& h, const KForm& sigma) {
    if (sigma.degree() != 2) throw PreconditionError("type (1,1) check expects a 2-form");
    return sigma.pullback(h.J) == sigma;
}

HermitianStructure cylinder(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("cylinder requires an ST structure");
    int n = s.dim();
    int nk = n + 1;
    std::vector<KForm> d;
    d.reserve(nk);
    for (int i = 1; i <= n; ++i) d.push_back(s.L.d_coframe(i).lifted(nk));
    d.push_back(KForm(nk, 2)); // the new direction is central
    LieAlgebra lk(nk, std::move(d));

    Mat gm(nk);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gm.at(i, j) = s.g.at(i, j);
    gm.at(nk, nk) = Rational(1);
    Metric gk(std::move(gm));

    KForm ds = KForm::monomial(nk, {nk});
    KForm omega = wedge(ds, s.eta.lifted(nk)) + s.F.lifted(nk);
    Endo j = endo_from_two_form(gk, omega);
    return make_hermitian(std::move(lk), std::move(gk), std::move(j));
}

HermitianStructure product(const ACMStructure& sp, const ACMStructure& sm) {
    if (!is_normal(sp) || !is_normal(sm)) throw PreconditionError("product requires normal factors");
    int np = sp.dim(), nm = sm.dim();
    int n = np + nm;
    std::vector<KForm> d;
    d.reserve(n);
    for (int i = 1; i <= np; ++i) d.push_back(sp.L.d_coframe(i).lifted(n));
    for (int i = 1; i <= nm; ++i) d.push_back(sm.L.d_coframe(i).shifted(np, n));
    LieAlgebra lp(n, std::move(d));

    Mat gm(n);
    for (int i = 1; i <= np; ++i)
        for (int j = 1; j <= np; ++j) gm.at(i, j) = sp.g.at(i, j);
    for (int i = 1; i <= nm; ++i)
        for (int j = 1; j <= nm; ++j) gm.at(np + i, np + j) = sm.g.at(i, j);
    Metric g(std::move(gm));

    KForm omega = wedge(sm.eta.shifted(np, n), sp.eta.lifted(n)) + sm.F.shifted(np, n) + sp.F.lifted(n);
    Endo j = endo_from_two_form(g, omega);
    return make_hermitian(std::move(lp), std::move(g), std::move(j));
}

ACMStructure central_extension_st(const HermitianStructure& h, const KForm& sigma) {
    if (!is_integrable(h)) throw PreconditionError("central extension requires an integrable J");
    if (sigma.dim() != h.dim() || sigma.degree() != 2)
        throw PreconditionError("sigma must be a 2-form on the Hermitian algebra");
    if (!h.L.d(sigma).is_zero()) throw PreconditionError("sigma must be closed");
    if (!type_11_wrt_J(h, sigma)) throw PreconditionError("sigma must be of type (1,1)");
    int nh = h.dim();
    int n = nh + 1;
    std::vector<KForm> d;
    d.reserve(n);
    for (int i = 1; i <= nh; ++i) d.push_back(h.L.d_coframe(i).lifted(n));
    d.push_back(sigma.lifted(n)); // d eta = sigma
    LieAlgebra l(n, std::move(d));

    Mat gm(n);
    for (int i = 1; i <= nh; ++i)
        for (int j = 1; j <= nh; ++j) gm.at(i, j) = h.g.at(i, j);
    gm.at(n, n) = Rational(1);
    Metric g(std::move(gm));

    Endo phi(n);
    for (int i = 1; i <= nh; ++i)
        for (int j = 1; j <= nh; ++j) phi.at(i, j) = h.J.at(i, j);

    ACMStructure out = make_acm(std::move(l), std::move(g), Vector::basis(n, n), std::move(phi));
    if (!is_st(out)) throw InternalError("central extension failed to be ST");
    KForm expect = wedge(out.eta, sigma.lifted(n)) + kt_torsion(h).lifted(n);
    if (!(torsion_form_raw(out) == expect))
        throw InternalError("central extension torsion does not split as eta^sigma + lift");
    return out;
}

ACMStructure torus_extension_st(const ACMStructure& s, const KForm& sigma1, const KForm& sigma2,
                                const Rational& par_s, const Rational& par_t) {
    if (!is_st(s)) throw PreconditionError("torus extension requires an ST structure");
    if (par_s * par_s + par_t * par_t != Rational(1))
        throw PreconditionError("parameters must satisfy s^2 + t^2 = 1");
    for (const KForm* sig : {&sigma1, &sigma2}) {
        if (sig->dim() != s.dim() || sig->degree() != 2)
            throw PreconditionError("sigma must be a 2-form on the base algebra");
        if (!s.L.d(*sig).is_zero()) throw PreconditionError("sigma must be closed");
        if (!type_check_11(s, *sig)) throw PreconditionError("sigma must be horizontal of type (1,1)");
    }
    int nb = s.dim();
    int n = nb + 2;
    std::vector<KForm> d;
    d.reserve(n);
    for (int i = 1; i <= nb; ++i) d.push_back(s.L.d_coframe(i).lifted(n));
    d.push_back(sigma1.lifted(n));
    d.push_back(sigma2.lifted(n));
    LieAlgebra l(n, std::move(d));

    Mat gm(n);
    for (int i = 1; i <= nb; ++i)
        for (int j = 1; j <= nb; ++j) gm.at(i, j) = s.g.at(i, j);
    gm.at(n - 1, n - 1) = Rational(1);
    gm.at(n, n) = Rational(1);
    Metric g(std::move(gm));

    Vector xi_hat(n), xi_perp(n), xi_lift(n);
    xi_hat[n - 1] = par_t;
    xi_hat[n] = par_s;
    xi_perp[n - 1] = -par_s;
    xi_perp[n] = par_t;
    for (int i = 1; i <= nb; ++i) xi_lift[i] = s.xi[i];

    Vector eta_vec = s.g.mat().apply(s.xi); // eta on the base
    Endo phi(n);
    for (int j = 1; j <= nb; ++j) {
        Vector col(n);
        Vector base_col = s.phi.col(j);
        for (int i = 1; i <= nb; ++i) col[i] = base_col[i];
        col -= eta_vec[j] * xi_perp;
        for (int i = 1; i <= n; ++i) phi.at(i, j) = col[i];
    }
    // phi^ X1 = -s xi, phi^ X2 = t xi (eta^perp applied to the torus directions).
    for (int i = 1; i <= nb; ++i) {
        phi.at(i, n - 1) = -par_s * xi_lift[i];
        phi.at(i, n) = par_t * xi_lift[i];
    }

    ACMStructure out = make_acm(std::move(l), std::move(g), std::move(xi_hat), std::move(phi));
    if (!is_st(out)) throw InternalError("torus extension failed to be ST");
    KForm eta_perp(n, 1);
    eta_perp.add(Mask(1) << (n - 2), -par_s);
    eta_perp.add(Mask(1) << (n - 1), par_t);
    KForm expect_f = s.F.lifted(n) + wedge(eta_perp, s.eta.lifted(n));
    if (!(out.F == expect_f)) throw InternalError("torus extension F does not split as F + eta^perp ^ eta");
    return out;
}

} // namespace stg
