#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stg/linalg.hpp"

namespace stg {

// A multi-index e^{i1} ^ ... ^ {ik}, i1 < ... < ik, stored as a bitmask with
// bit (i-1) set for index i. The mask is the canonical representation: sorted
// and duplicate-free by construction.
using Mask = std::uint64_t;

namespace mindex {

int degree(Mask m);
std::vector<int> indices(Mask m);
Mask from_indices(std::span<const int> idx);
Mask from_indices(std::initializer_list<int> idx);

// Sign of reordering e^A ^ e^B into the canonical monomial e^{A|B} for
// disjoint A, B: (-1)^{#inversions}. Caller guarantees disjointness.
int merge_sign(Mask a, Mask b);

// Position (1-based) of index i within the ascending index list of m.
int position(Mask m, int i);

std::string str(Mask m); // "e1^e2^e5"

} // namespace mindex

// Sparse alternating k-form on a fixed n-dimensional basis, with exact
// rational coefficients. Evaluation convention carries no 1/k! factors:
// (e^a ^ e^b)(X, Y) = e^a(X) e^b(Y) - e^a(Y) e^b(X), so the coefficient of
// the monomial e^I equals the value on the ascending basis tuple E_I.
class KForm {
public:
    KForm() = default;
    KForm(int dim, int degree);

    // Single canonical monomial with coefficient 1.
    static KForm monomial(int dim, std::initializer_list<int> idx, const Rational& c = Rational(1));

    int dim() const { return dim_; }
    int degree() const { return deg_; }

    bool is_zero() const { return c_.empty(); }
    const std::map<Mask, Rational>& terms() const { return c_; }
    Rational coeff(Mask m) const;

    // Accumulates c onto the monomial m (m must have the right degree).
    void add(Mask m, const Rational& c);

    KForm operator-() const;
    KForm& operator+=(const KForm& o);
    KForm& operator-=(const KForm& o);
    KForm& operator*=(const Rational& s);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const Rational& s, KForm a) { return a *= s; }

    friend bool operator==(const KForm&, const KForm&) = default;

    // Value on a tuple of basis vectors given by 1-based indices.
    Rational eval(std::span<const int> basis_idx) const;
    Rational eval(std::initializer_list<int> basis_idx) const;
    // Multilinear evaluation on arbitrary vectors.
    Rational eval(std::span<const Vector> args) const;

    // Precomposition with an endomorphism in every slot:
    // (pullback(A))(X1,...,Xk) = this(A X1, ..., A Xk).
    KForm pullback(const Endo& a) const;

    // Reinterprets the same monomials in a larger ambient dimension.
    KForm lifted(int new_dim) const;

    // Lift with every basis index moved up by offset.
    KForm shifted(int offset, int new_dim) const;

    std::string str() const; // "-e1^e2^e5 + e3^e4^e5"

private:
    int dim_ = 0;
    int deg_ = 0;
    std::map<Mask, Rational> c_; // zero coefficients absent
};

// 1-form with coefficients row: (sum_i row_i e^i).
KForm covector_form(const Vector& row);

KForm wedge(const KForm& a, const KForm& b);

// Interior product; antiderivation of degree -1 with
// (interior(v, a))(X2,...,Xk) = a(v, X2, ..., Xk). Degree-0 input is an error.
KForm interior(const Vector& v, const KForm& a);

} // namespace stg
