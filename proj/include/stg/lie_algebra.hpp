#pragma once

#include <vector>

#include "stg/kform.hpp"

namespace stg {

// Lie algebra described by its coframe differentials de^i. Sign conventions:
//   de^i(X, Y) = -e^i([X, Y]), i.e. [E_j, E_k] = -sum_i de^i(E_j, E_k) E_i.
// d on higher forms is the antiderivation extending the coframe table;
// d o d = 0 on everything iff the table satisfies the Jacobi identity.
class LieAlgebra {
public:
    LieAlgebra() = default;
    // d[i-1] must be a 2-form of dimension n (the value of de^i).
    LieAlgebra(int n, std::vector<KForm> d);

    static LieAlgebra abelian(int n);

    int dim() const { return n_; }
    const KForm& d_coframe(int i) const { return d_[i - 1]; } // de^i

    KForm d(const KForm& a) const;
    bool jacobi_ok() const;

    Vector bracket_basis(int j, int k) const;
    Vector bracket(const Vector& x, const Vector& y) const;

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    int n_ = 0;
    std::vector<KForm> d_;
};

} // namespace stg
