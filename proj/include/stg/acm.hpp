#pragma once

#include <optional>
#include <string>

#include "stg/connection.hpp"

namespace stg {

// Almost contact metric structure on a Lie algebra. eta = g(xi, .) and
// F = g(phi ., .) are computed once at construction; all values are immutable
// afterwards. Construction never validates: validate() reports.
struct ACMStructure {
    LieAlgebra L;
    Metric g;
    Vector xi;
    Endo phi;
    KForm eta; // degree 1
    KForm F;   // degree 2, from the (j < k) entries of phi^T g

    int dim() const { return L.dim(); }
};

ACMStructure make_acm(LieAlgebra L, Metric g, Vector xi, Endo phi);

// One entry of a coframe phi table: e^i o phi += c e^j.
struct PhiRow {
    int i;
    Rational c;
    int j;
};

// Completes a partial coframe table through e^i o phi^2 = -e^i + xi^i eta.
// Rows stated as a single nonzero term propagate; the row dual to the Reeb
// direction is forced to zero when absent. Contradictions and rows that stay
// undetermined are hard errors, never guesses.
Endo complete_phi(const LieAlgebra& L, const Metric& g, const Vector& xi,
                  const std::vector<PhiRow>& rows);

bool acm_equal(const ACMStructure& a, const ACMStructure& b);

struct CheckItem {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckItem> checks;
    bool ok() const;
};

// Exact pass/fail per structure invariant, with the violating basis pair on
// failure: n odd; g(xi,xi) = 1; phi(xi) = 0; phi^2 = -1 + eta (x) xi;
// g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y); F antisymmetric.
ValidationReport validate(const ACMStructure& s);

// Antisymmetric vector-valued 2-form on basis pairs, stored for i < j.
class VectorValued2Form {
public:
    VectorValued2Form() = default;
    explicit VectorValued2Form(int n) : n_(n) {}

    int dim() const { return n_; }
    void set(int i, int j, Vector v);
    Vector at(int i, int j) const;
    bool all_zero() const;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, Vector> v_;
};

// S(X,Y) = [phi X, phi Y] + phi^2 [X,Y] - phi [phi X, Y] - phi [X, phi Y]
//        + d eta(X, Y) xi.
VectorValued2Form sasaki_hatakeyama(const ACMStructure& s);
bool is_normal(const ACMStructure& s);

// Algebraic Killing criterion for left-invariant data:
// g(ad_xi X, Y) + g(X, ad_xi Y) = 0 on all basis pairs.
bool is_killing(const ACMStructure& s);

// normal && Killing; cross-checked against the derivative route
// normal && xi -| dF = 0 (equivalent on left-invariant data).
bool is_st(const ACMStructure& s);

// d^phi a = (d a)(phi ., ..., phi .).
KForm d_phi(const ACMStructure& s, const KForm& a);

// Torsion 3-form c = eta ^ d eta + d^phi F. Requires is_st.
KForm torsion(const ACMStructure& s);

// Same formula without the ST gate; used by reports on arbitrary input.
KForm torsion_form_raw(const ACMStructure& s);

// nabla = nabla^LC + c/2 (index raised by g). For an orthonormal metric the
// result is recomputed independently through phi_inverse_connection and the
// two are compared. Requires is_st.
Connection st_connection(const ACMStructure& s);

struct ParallelReport {
    bool nabla_g = false;
    bool nabla_xi = false;
    bool nabla_phi = false;
    bool torsion_matches = false;
    std::string detail;
    bool ok() const { return nabla_g && nabla_xi && nabla_phi && torsion_matches; }
};

// Verifies nabla g = 0, nabla xi = 0, nabla phi = 0 and that the torsion
// tensor of conn, lowered by g, equals the torsion 3-form of s.
ParallelReport check_parallel(const ACMStructure& s, const Connection& conn);

enum class PrimaryClass {
    CosymplecticCoKaehler, // c = 0
    QuasiSasaki,           // c = eta ^ d eta
    AlphaSasaki,           // c = alpha eta ^ F, alpha != 0 (Sasaki: alpha = 2)
    GenericST,
};

std::string primary_class_name(PrimaryClass c);

struct Classification {
    PrimaryClass primary = PrimaryClass::GenericST;
    std::optional<Rational> alpha; // set iff primary == AlphaSasaki
    bool is_sst = false;           // dc = 0
    bool is_balanced = false;      // Lee form = 0
    bool deta_decomposable = false; // d eta ^ d eta = 0
    bool is_normal = false;
    bool is_killing = false;
    bool is_sasaki() const;
};

Classification classify(const ACMStructure& s);

// Lee 1-form, computed three ways (frame sums as g^{-1} contractions):
//   -1/2 sum c(phi X, E_i, phi E_j) g^{ij}
//    1/2 sum dF(X, E_i, phi E_j) g^{ij}
//   -(d*F)(phi X)
// The three must agree exactly; disagreement raises InternalError.
KForm lee_form(const ACMStructure& s);

// dF = lee ^ F; only defined in dimension 5.
bool dim5_lee_identity(const ACMStructure& s);

// b(phi X, phi Y) = b(X, Y) for a 2-form with xi -| b = 0.
bool type_check_11(const ACMStructure& s, const KForm& b);
// c(X,Y,Z) = c(phi X, phi Y, Z) + c(phi X, Y, phi Z) + c(X, phi Y, phi Z).
bool type_check_21_12(const ACMStructure& s, const KForm& b);

// Transversal homothety by a > 0:
// g~ = a g + a(a-1) eta^2, xi~ = xi/a, eta~ = a eta, phi~ = phi.
ACMStructure homothety(const ACMStructure& s, const Rational& a);

// Transversal conformal change with constant factor lam2 > 0 standing for
// e^{2f}: g~ = lam2 g + (1 - lam2) eta^2, everything else fixed.
ACMStructure conformal_const(const ACMStructure& s, const Rational& lam2);

// T = d^phi F + d eta ^ eta - 2 F ^ eta; satisfies d eta - xi -| T = 2F.
KForm houri_torsion(const ACMStructure& s);

struct FieldEqReport {
    Mat ricci;
    KForm dstar_c;
    KForm dc;
    bool flat = false;
    bool ricci_zero() const { return ricci.is_zero(); }
};

FieldEqReport field_eq_report(const ACMStructure& s);

struct HolonomyReport {
    std::vector<Endo> span_basis; // curvature endomorphisms closed under commutators
    bool kills_xi = true;
    bool g_skew = true;
    bool commutes_phi = true;
    bool phi_traceless = true; // tr(phi A) = 0 for every span element
    bool contained_in_u() const { return kills_xi && g_skew && commutes_phi; }
    bool contained_in_su() const { return contained_in_u() && phi_traceless; }
};

// Lie algebra spanned by the curvature endomorphisms of the st connection,
// closed under commutators until stabilization.
HolonomyReport hol_span(const ACMStructure& s);

} // namespace stg
