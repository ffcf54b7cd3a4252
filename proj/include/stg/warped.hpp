#pragma once

#include "stg/acm.hpp"

namespace stg {

// Polynomial in r with rational coefficients; c[i] is the coefficient of r^i,
// trailing zeros stripped.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    explicit Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static Poly r(); // the variable itself

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& coeff(int i) const;
    Rational leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly derivative() const;
    // Exact division with remainder over the rationals.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    static Poly gcd(Poly a, Poly b); // monic

    std::string str() const; // "r^2 - 2 r + 1/3"

private:
    void trim();
    std::vector<Rational> c_;
};

// Ratio of polynomials in canonical form: gcd removed, denominator monic,
// never zero.
class RFun {
public:
    RFun() : num_(), den_(Rational(1)) {}
    RFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RFun(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
    RFun(Poly num, Poly den);

    static RFun r() { return RFun(Poly::r()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == Poly(Rational(1)); }

    RFun operator-() const;
    RFun& operator+=(const RFun& o);
    RFun& operator-=(const RFun& o);
    RFun& operator*=(const RFun& o);
    RFun& operator/=(const RFun& o);
    friend RFun operator+(RFun a, const RFun& b) { return a += b; }
    friend RFun operator-(RFun a, const RFun& b) { return a -= b; }
    friend RFun operator*(RFun a, const RFun& b) { return a *= b; }
    friend RFun operator/(RFun a, const RFun& b) { return a /= b; }
    friend bool operator==(const RFun&, const RFun&) = default;

    RFun derivative() const;

    std::string str() const;

private:
    Poly num_, den_;
};

// Form on I x N written as a + dr ^ b, where a (degree m) and b (degree m-1)
// are forms on N with coefficients in the rational functions of r.
class WForm {
public:
    WForm() = default;
    WForm(int base_dim, int degree) : n_(base_dim), deg_(degree) {}

    static WForm from_base(const KForm& a); // RFun-constant coefficients
    // dr ^ b with b a base form.
    static WForm dr_wedge_base(const KForm& b);

    int base_dim() const { return n_; }
    int degree() const { return deg_; }
    bool is_zero() const { return a_.empty() && b_.empty(); }
    const std::map<Mask, RFun>& a_terms() const { return a_; }
    const std::map<Mask, RFun>& b_terms() const { return b_; }

    void add_a(Mask m, const RFun& c);
    void add_b(Mask m, const RFun& c);

    WForm operator-() const;
    WForm& operator+=(const WForm& o);
    WForm& operator-=(const WForm& o);
    WForm& operator*=(const RFun& s);
    friend WForm operator+(WForm a, const WForm& b) { return a += b; }
    friend WForm operator-(WForm a, const WForm& b) { return a -= b; }
    friend WForm operator*(const RFun& s, WForm w) { return w *= s; }
    friend bool operator==(const WForm&, const WForm&) = default;

    bool coefficients_polynomial() const;

    // Drops the dr part / keeps it, as base-level data for inspection.
    std::string str() const;

private:
    int n_ = 0;
    int deg_ = 0;
    std::map<Mask, RFun> a_; // degree deg_
    std::map<Mask, RFun> b_; // degree deg_ - 1
};

WForm wwedge(const WForm& x, const WForm& y);

// d(a + dr ^ b) = d_N a + dr ^ (d/dr a - d_N b).
WForm wd(const LieAlgebra& L, const WForm& w);

// Torsion 3-form of the warped metric dr^2 + f(r)^2 g computed from
// d omega_W pulled back through the warped complex structure,
// omega_W = f dr ^ eta + f^2 F. The coframe action of J is
// dr -> -f eta, e^i -> (1/f) e^i(xi) dr + e^i o phi.
WForm warped_torsion_direct(const ACMStructure& s, const RFun& f);

// The closed expression f^2 (c - 2 f' F ^ eta); must equal the direct route.
WForm warped_torsion_formula(const ACMStructure& s, const RFun& f);

enum class WarpedBranch {
    NotClosed,
    ConstantFactor, // f' = 0 and dc = 0
    LinearFactor,   // f linear with d eta = 2 f' F
    ClosedUnlabeled,
};

struct WarpedReport {
    bool closed = false;
    WarpedBranch branch = WarpedBranch::NotClosed;
    RFun f_prime;
    std::optional<Rational> alpha;  // d eta = alpha F, when proportional
    std::optional<Rational> lambda; // alpha / 2, the "d eta = 2 lambda F" reading
    WForm torsion;
};

// Computes wd of the warped torsion; closedness of the result is the ground
// truth, the branch labels are advisory.
WarpedReport warped_skt_report(const ACMStructure& s, const RFun& f);

} // namespace stg
