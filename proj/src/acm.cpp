#include "stg/acm.hpp"

#include <sstream>

namespace stg {

namespace {

std::string pair_str(int i, int j) {
    std::ostringstream os;
    os << "(E" << i << ", E" << j << ")";
    return os.str();
}

} // namespace

ACMStructure make_acm(LieAlgebra L, Metric g, Vector xi, Endo phi) {
    int n = L.dim();
    if (g.dim() != n || xi.dim() != n || phi.dim() != n)
        throw InvariantError("acm component dimension mismatch");
    ACMStructure s{std::move(L), std::move(g), std::move(xi), std::move(phi), KForm(n, 1), KForm(n, 2)};
    s.eta = covector_form(s.g.mat().apply(s.xi));
    Mat m = s.phi.transposed() * s.g.mat(); // m_{jk} = g(phi E_j, E_k)
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
            s.F.add(mindex::from_indices({j, k}), m.at(j, k));
    return s;
}

bool acm_equal(const ACMStructure& a, const ACMStructure& b) {
    return a.L == b.L && a.g == b.g && a.xi == b.xi && a.phi == b.phi;
}

Endo complete_phi(const LieAlgebra& L, const Metric& g, const Vector& xi,
                  const std::vector<PhiRow>& rows) {
    int n = L.dim();
    KForm eta = covector_form(g.mat().apply(xi));
    std::vector<std::optional<KForm>> row(n + 1);
    for (const auto& r : rows) {
        if (r.i < 1 || r.i > n || r.j < 1 || r.j > n)
            throw InvariantError("phi table index out of range");
        if (!row[r.i]) row[r.i] = KForm(n, 1);
        row[r.i]->add(Mask(1) << (r.j - 1), r.c);
    }
    // Propagate e^i o phi = c e^j  =>  e^j o phi = (-e^i + xi^i eta)/c.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= n; ++i) {
            if (!row[i] || row[i]->terms().size() != 1) continue;
            const auto& [m, c] = *row[i]->terms().begin();
            int j = mindex::indices(m)[0];
            KForm implied = (Rational(1) / c) * (xi[i] * eta - KForm::monomial(n, {i}));
            if (!row[j]) {
                row[j] = implied;
                changed = true;
            } else if (!(*row[j] == implied)) {
                throw InvariantError("inconsistent phi completion at row e" + std::to_string(j));
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (row[i]) continue;
        // eta o phi = 0, so the row dual to the Reeb direction is forced.
        bool is_reeb_dual = !eta.coeff(Mask(1) << (i - 1)).is_zero() && eta.terms().size() == 1;
        if (is_reeb_dual)
            row[i] = KForm(n, 1);
        else
            throw InvariantError("phi table leaves row e" + std::to_string(i) + " undetermined");
    }
    Endo phi(n);
    for (int i = 1; i <= n; ++i)
        for (const auto& [m, c] : row[i]->terms()) phi.at(i, mindex::indices(m)[0]) = c;
    return phi;
}

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

ValidationReport validate(const ACMStructure& s) {
    int n = s.dim();
    ValidationReport rep;
    rep.checks.push_back({"dimension odd", n % 2 == 1, n % 2 == 1 ? "" : "n = " + std::to_string(n)});
    rep.checks.push_back({"jacobi (d^2 = 0)", s.L.jacobi_ok(), ""});

    bool unit = s.g.pair(s.xi, s.xi) == Rational(1);
    rep.checks.push_back({"g(xi, xi) = 1", unit, unit ? "" : "got " + s.g.pair(s.xi, s.xi).str()});

    Vector phixi = s.phi.apply(s.xi);
    rep.checks.push_back({"phi(xi) = 0", phixi.is_zero(), phixi.is_zero() ? "" : "phi(xi) = " + phixi.str()});

    // phi^2 = -1 + eta (x) xi as matrices.
    Mat want = -Mat::identity(n);
    Vector eta_vec = s.g.mat().apply(s.xi);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) want.at(i, j) += s.xi[i] * eta_vec[j];
    Mat phi2 = s.phi * s.phi;
    std::string bad;
    for (int j = 1; j <= n && bad.empty(); ++j)
        for (int i = 1; i <= n && bad.empty(); ++i)
            if (phi2.at(i, j) != want.at(i, j)) bad = "column E" + std::to_string(j);
    rep.checks.push_back({"phi^2 = -1 + eta(.)xi", bad.empty(), bad});

    // g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y).
    bad.clear();
    for (int i = 1; i <= n && bad.empty(); ++i)
        for (int j = i; j <= n && bad.empty(); ++j) {
            Rational lhs = s.g.pair(s.phi.col(i), s.phi.col(j));
            Rational rhs = s.g.at(i, j) - eta_vec[i] * eta_vec[j];
            if (lhs != rhs) bad = pair_str(i, j);
        }
    rep.checks.push_back({"phi-metric compatibility", bad.empty(), bad});

    Mat fm = s.phi.transposed() * s.g.mat();
    bool anti = fm.is_antisymmetric();
    rep.checks.push_back({"F antisymmetric", anti, ""});
    return rep;
}

void VectorValued2Form::set(int i, int j, Vector v) {
    if (i == j) {
        if (!v.is_zero()) throw InvariantError("nonzero diagonal in an antisymmetric tensor");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    v_[{i, j}] = std::move(v);
}

Vector VectorValued2Form::at(int i, int j) const {
    if (i == j) return Vector(n_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = v_.find({i, j});
    Vector v = (it == v_.end()) ? Vector(n_) : it->second;
    return flip ? -v : v;
}

bool VectorValued2Form::all_zero() const {
    for (const auto& [ij, v] : v_)
        if (!v.is_zero()) return false;
    return true;
}

VectorValued2Form sasaki_hatakeyama(const ACMStructure& s) {
    if (!validate(s).ok()) throw InvariantError("invalid almost contact metric structure");
    int n = s.dim();
    VectorValued2Form out(n);
    KForm deta = s.L.d(s.eta);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Vector ei = Vector::basis(n, i), ej = Vector::basis(n, j);
            Vector pi = s.phi.col(i), pj = s.phi.col(j);
            Vector bij = s.L.bracket_basis(i, j);
            Vector v = s.L.bracket(pi, pj);
            v += s.phi.apply(s.phi.apply(bij));
            v -= s.phi.apply(s.L.bracket(pi, ej));
            v -= s.phi.apply(s.L.bracket(ei, pj));
            v += deta.eval({i, j}) * s.xi;
            out.set(i, j, std::move(v));
        }
    return out;
}

bool is_normal(const ACMStructure& s) {
    return sasaki_hatakeyama(s).all_zero();
}

bool is_killing(const ACMStructure& s) {
    int n = s.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Vector adi = s.L.bracket(s.xi, Vector::basis(n, i));
            Vector adj = s.L.bracket(s.xi, Vector::basis(n, j));
            Rational v = s.g.pair(adi, Vector::basis(n, j)) + s.g.pair(Vector::basis(n, i), adj);
            if (!v.is_zero()) return false;
        }
    return true;
}

bool is_st(const ACMStructure& s) {
    if (!validate(s).ok()) throw InvariantError("invalid almost contact metric structure");
    bool normal = is_normal(s);
    bool killing = is_killing(s);
    bool algebraic = normal && killing;
    bool derivative = normal && interior(s.xi, s.L.d(s.F)).is_zero();
    if (algebraic != derivative)
        throw InternalError("Killing and xi -| dF characterizations disagree");
    return algebraic;
}

KForm d_phi(const ACMStructure& s, const KForm& a) {
    return s.L.d(a).pullback(s.phi);
}

KForm torsion_form_raw(const ACMStructure& s) {
    return wedge(s.eta, s.L.d(s.eta)) + d_phi(s, s.F);
}

KForm torsion(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("torsion requires an ST structure");
    return torsion_form_raw(s);
}

Connection st_connection(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("st connection requires an ST structure");
    int n = s.dim();
    KForm c = torsion_form_raw(s);
    Rational half(1, 2);
    auto add_half_c = [&](Connection& conn) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                Vector w(n);
                for (int l = 1; l <= n; ++l) w[l] = half * c.eval({i, j, l});
                Vector up = s.g.inv().apply(w);
                for (int k = 1; k <= n; ++k) conn.gamma(i, j, k) += up[k];
            }
    };
    Connection conn = lc_connection(s.L, s.g);
    add_half_c(conn);
    if (s.g.is_orthonormal()) {
        Connection alt = phi_inverse_connection(s.L);
        add_half_c(alt);
        if (!(alt == conn))
            throw InternalError("Koszul and Phi^{-1} routes to the st connection disagree");
    }
    return conn;
}

ParallelReport check_parallel(const ACMStructure& s, const Connection& conn) {
    int n = s.dim();
    ParallelReport rep;
    rep.nabla_g = rep.nabla_xi = rep.nabla_phi = rep.torsion_matches = true;
    std::ostringstream detail;
    for (int i = 1; i <= n && rep.nabla_g; ++i)
        for (int j = 1; j <= n && rep.nabla_g; ++j)
            for (int k = 1; k <= n; ++k) {
                Rational v = s.g.pair(conn.nabla(i, j), Vector::basis(n, k)) +
                             s.g.pair(Vector::basis(n, j), conn.nabla(i, k));
                if (!v.is_zero()) {
                    rep.nabla_g = false;
                    detail << "nabla g != 0 at (E" << i << "; " << pair_str(j, k) << ") ";
                    break;
                }
            }
    for (int i = 1; i <= n; ++i) {
        if (!conn.nabla(Vector::basis(n, i), s.xi).is_zero()) {
            rep.nabla_xi = false;
            detail << "nabla_{E" << i << "} xi != 0 ";
            break;
        }
    }
    for (int i = 1; i <= n && rep.nabla_phi; ++i)
        for (int j = 1; j <= n; ++j) {
            Vector v = conn.nabla(Vector::basis(n, i), s.phi.col(j));
            v -= s.phi.apply(conn.nabla(i, j));
            if (!v.is_zero()) {
                rep.nabla_phi = false;
                detail << "(nabla_{E" << i << "} phi)(E" << j << ") != 0 ";
                break;
            }
        }
    KForm c = torsion_form_raw(s);
    for (int i = 1; i <= n && rep.torsion_matches; ++i)
        for (int j = i + 1; j <= n && rep.torsion_matches; ++j) {
            Vector t = connection_torsion(s.L, conn, i, j);
            for (int k = 1; k <= n; ++k) {
                if (s.g.pair(t, Vector::basis(n, k)) != c.eval({i, j, k})) {
                    rep.torsion_matches = false;
                    detail << "torsion mismatch at (E" << i << ", E" << j << ", E" << k << ") ";
                    break;
                }
            }
        }
    rep.detail = detail.str();
    return rep;
}

std::string primary_class_name(PrimaryClass c) {
    switch (c) {
    case PrimaryClass::CosymplecticCoKaehler: return "cosymplectic-coKaehler";
    case PrimaryClass::QuasiSasaki: return "quasi-Sasaki";
    case PrimaryClass::AlphaSasaki: return "alpha-Sasaki";
    case PrimaryClass::GenericST: return "generic-ST";
    }
    return "?";
}

bool Classification::is_sasaki() const {
    return primary == PrimaryClass::AlphaSasaki && alpha && *alpha == Rational(2);
}

namespace {

// Exact proportionality c = alpha * b; nullopt when not proportional or b = 0.
std::optional<Rational> proportionality(const KForm& c, const KForm& b) {
    if (b.is_zero()) return std::nullopt;
    const auto& [m0, b0] = *b.terms().begin();
    Rational alpha = c.coeff(m0) / b0;
    KForm scaled = b;
    scaled *= alpha;
    if (scaled == c) return alpha;
    return std::nullopt;
}

} // namespace

Classification classify(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("classification requires an ST structure");
    Classification cls;
    KForm c = torsion_form_raw(s);
    KForm deta = s.L.d(s.eta);
    KForm eta_deta = wedge(s.eta, deta);
    KForm eta_f = wedge(s.eta, s.F);

    cls.is_normal = true;
    cls.is_killing = true;
    cls.is_sst = s.L.d(c).is_zero();
    cls.is_balanced = lee_form(s).is_zero();
    cls.deta_decomposable = wedge(deta, deta).is_zero();

    if (c.is_zero()) {
        cls.primary = PrimaryClass::CosymplecticCoKaehler;
        return cls;
    }
    if (auto alpha = proportionality(c, eta_f); alpha && !alpha->is_zero()) {
        cls.primary = PrimaryClass::AlphaSasaki;
        cls.alpha = *alpha;
        return cls;
    }
    if (c == eta_deta) {
        cls.primary = PrimaryClass::QuasiSasaki;
        return cls;
    }
    cls.primary = PrimaryClass::GenericST;
    return cls;
}

KForm lee_form(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("Lee form requires an ST structure");
    int n = s.dim();
    KForm c = torsion_form_raw(s);
    KForm df = s.L.d(s.F);
    KForm dstar_f = codifferential(s.L, s.g, s.F);
    Rational half(1, 2);
    KForm t1(n, 1), t2(n, 1), t3(n, 1);
    for (int x = 1; x <= n; ++x) {
        Vector px = s.phi.col(x);
        Rational v1, v2;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Rational& gij = s.g.inv().at(i, j);
                if (gij.is_zero()) continue;
                Vector pj = s.phi.col(j);
                std::vector<Vector> args1 = {px, Vector::basis(n, i), pj};
                v1 -= half * gij * c.eval(std::span<const Vector>(args1.data(), 3));
                std::vector<Vector> args2 = {Vector::basis(n, x), Vector::basis(n, i), pj};
                v2 += half * gij * df.eval(std::span<const Vector>(args2.data(), 3));
            }
        Rational v3 = -dstar_f.eval(std::span<const Vector>(&px, 1));
        t1.add(Mask(1) << (x - 1), v1);
        t2.add(Mask(1) << (x - 1), v2);
        t3.add(Mask(1) << (x - 1), v3);
    }
    if (!(t1 == t2) || !(t1 == t3))
        throw InternalError("Lee form formulas disagree: " + t1.str() + " | " + t2.str() + " | " + t3.str());
    return t1;
}

bool dim5_lee_identity(const ACMStructure& s) {
    if (s.dim() != 5) throw PreconditionError("dF = lee ^ F identity only applies in dimension 5");
    KForm lee = lee_form(s);
    return s.L.d(s.F) == wedge(lee, s.F);
}

bool type_check_11(const ACMStructure& s, const KForm& b) {
    if (b.degree() != 2) throw PreconditionError("type (1,1) check expects a 2-form");
    if (!interior(s.xi, b).is_zero())
        throw PreconditionError("type (1,1) check requires xi -| b = 0");
    return b.pullback(s.phi) == b;
}

bool type_check_21_12(const ACMStructure& s, const KForm& b) {
    if (b.degree() != 3) throw PreconditionError("type (2,1)+(1,2) check expects a 3-form");
    int n = s.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                Vector ei = Vector::basis(n, i), ej = Vector::basis(n, j), ek = Vector::basis(n, k);
                Vector pi = s.phi.col(i), pj = s.phi.col(j), pk = s.phi.col(k);
                std::vector<Vector> a1 = {pi, pj, ek}, a2 = {pi, ej, pk}, a3 = {ei, pj, pk};
                Rational rhs = b.eval(std::span<const Vector>(a1.data(), 3)) +
                               b.eval(std::span<const Vector>(a2.data(), 3)) +
                               b.eval(std::span<const Vector>(a3.data(), 3));
                if (b.eval({i, j, k}) != rhs) return false;
            }
    return true;
}

ACMStructure homothety(const ACMStructure& s, const Rational& a) {
    if (a.sign() <= 0) throw PreconditionError("homothety factor must be positive");
    if (!is_st(s)) throw PreconditionError("homothety requires an ST structure");
    int n = s.dim();
    Vector eta_vec = s.g.mat().apply(s.xi);
    Mat gm = s.g.mat();
    gm *= a;
    Rational coef = a * (a - Rational(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gm.at(i, j) += coef * eta_vec[i] * eta_vec[j];
    Vector xi = s.xi;
    xi *= Rational(1) / a;
    return make_acm(s.L, Metric(std::move(gm)), std::move(xi), s.phi);
}

ACMStructure conformal_const(const ACMStructure& s, const Rational& lam2) {
    if (lam2.sign() <= 0) throw PreconditionError("conformal factor must be positive");
    if (!is_st(s)) throw PreconditionError("conformal transformation requires an ST structure");
    int n = s.dim();
    Vector eta_vec = s.g.mat().apply(s.xi);
    Mat gm = s.g.mat();
    gm *= lam2;
    Rational coef = Rational(1) - lam2;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) gm.at(i, j) += coef * eta_vec[i] * eta_vec[j];
    return make_acm(s.L, Metric(std::move(gm)), s.xi, s.phi);
}

KForm houri_torsion(const ACMStructure& s) {
    if (!is_st(s)) throw PreconditionError("requires an ST structure");
    KForm deta = s.L.d(s.eta);
    KForm t = d_phi(s, s.F) + wedge(deta, s.eta) - Rational(2) * wedge(s.F, s.eta);
    KForm dt_eta = deta - interior(s.xi, t);
    if (!(dt_eta == Rational(2) * s.F))
        throw InternalError("d eta - xi -| T != 2F");
    return t;
}

FieldEqReport field_eq_report(const ACMStructure& s) {
    Connection conn = st_connection(s);
    KForm c = torsion_form_raw(s);
    FieldEqReport rep;
    rep.ricci = ricci(s.L, conn);
    rep.dstar_c = codifferential(s.L, s.g, c);
    rep.dc = s.L.d(c);
    rep.flat = curvature(s.L, conn).all_zero();
    return rep;
}

namespace {

// Exact row-echelon basis of endomorphisms, for span growth detection.
class EndoSpan {
public:
    explicit EndoSpan(int n) : n_(n) {}

    // Returns true if m was independent and got added.
    bool add(const Endo& m) {
        std::vector<Rational> v = flatten(m);
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero()) continue;
            Rational f = v[pivot];
            for (std::size_t t = 0; t < v.size(); ++t) v[t] -= f * row[t];
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) return false;
        Rational inv = Rational(1) / v[p];
        for (auto& x : v) x *= inv;
        rows_.emplace_back(p, std::move(v));
        return true;
    }

private:
    std::vector<Rational> flatten(const Endo& m) const {
        std::vector<Rational> v;
        v.reserve(static_cast<std::size_t>(n_) * n_);
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) v.push_back(m.at(i, j));
        return v;
    }

    int n_;
    std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

} // namespace

HolonomyReport hol_span(const ACMStructure& s) {
    int n = s.dim();
    Connection conn = st_connection(s);
    CurvatureMap R = curvature(s.L, conn);
    HolonomyReport rep;
    EndoSpan span(n);
    for (const auto& [ij, e] : R.entries()) {
        if (e.is_zero()) continue;
        if (span.add(e)) rep.span_basis.push_back(e);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = rep.span_basis.size();
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b) {
                Endo c = commutator(rep.span_basis[a], rep.span_basis[b]);
                if (c.is_zero()) continue;
                if (span.add(c)) {
                    rep.span_basis.push_back(std::move(c));
                    grew = true;
                }
            }
    }
    for (const Endo& a : rep.span_basis) {
        if (!a.apply(s.xi).is_zero()) rep.kills_xi = false;
        Mat skew = a.transposed() * s.g.mat() + s.g.mat() * a;
        if (!skew.is_zero()) rep.g_skew = false;
        if (!commutator(a, s.phi).is_zero()) rep.commutes_phi = false;
        if (!(s.phi * a).trace().is_zero()) rep.phi_traceless = false;
    }
    return rep;
}

} // namespace stg
