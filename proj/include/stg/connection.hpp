#pragma once

#include <map>
#include <utility>

#include "stg/lie_algebra.hpp"

namespace stg {

// Left-invariant connection, nabla_{E_i} E_j = sum_k Gamma^k_{ij} E_k.
class Connection {
public:
    Connection() = default;
    explicit Connection(int n) : n_(n), gamma_(static_cast<std::size_t>(n) * n * n) {}

    int dim() const { return n_; }
    const Rational& gamma(int i, int j, int k) const { return gamma_[idx(i, j, k)]; }
    Rational& gamma(int i, int j, int k) { return gamma_[idx(i, j, k)]; }

    Vector nabla(int i, int j) const; // nabla_{E_i} E_j
    // Bilinear extension over constant vectors (left-invariant frame).
    Vector nabla(const Vector& x, const Vector& y) const;

    bool is_zero() const;

    friend bool operator==(const Connection&, const Connection&) = default;

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * n_ + (k - 1);
    }

    int n_ = 0;
    std::vector<Rational> gamma_;
};

// Unique torsion-free metric connection from the left-invariant Koszul formula
//   2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
Connection lc_connection(const LieAlgebra& L, const Metric& g);

// The inverse of the wedging isomorphism applied to the coframe table, for an
// orthonormal basis:
//   2 Phi^{-1}((e^j^e^k) (x) e^i) = -e^i(x)(e^j^e^k) + e^k(x)(e^i^e^j) + e^j(x)(e^k^e^i),
// read back as g(nabla_{E_a} Y, Z) = beta_a(Z, Y). Equals lc_connection for the
// identity metric.
Connection phi_inverse_connection(const LieAlgebra& L);

// Codifferential of a k-form (k >= 1) by Levi-Civita contraction:
//   (d*a)(...) = -sum_{i,j} g^{ij} (nabla^LC_{E_i} a)(E_j, ...).
KForm codifferential(const LieAlgebra& L, const Metric& g, const KForm& a);

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z on the
// constant frame, stored for i < j.
class CurvatureMap {
public:
    CurvatureMap() = default;
    CurvatureMap(int n, std::map<std::pair<int, int>, Endo> r) : n_(n), r_(std::move(r)) {}

    int dim() const { return n_; }
    // Antisymmetric access for any i != j.
    Endo at(int i, int j) const;
    const std::map<std::pair<int, int>, Endo>& entries() const { return r_; }
    bool all_zero() const;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, Endo> r_;
};

CurvatureMap curvature(const LieAlgebra& L, const Connection& conn);

// Ric(X, Y) = trace of Z -> R(Z, X) Y, returned as the component matrix
// Ric_{jk} = Ric(E_j, E_k).
Mat ricci(const LieAlgebra& L, const Connection& conn);

// Torsion tensor nabla_X Y - nabla_Y X - [X, Y] on a basis pair.
Vector connection_torsion(const LieAlgebra& L, const Connection& conn, int i, int j);

} // namespace stg
