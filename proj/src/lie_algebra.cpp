#include "stg/lie_algebra.hpp"

#include <bit>

namespace stg {

LieAlgebra::LieAlgebra(int n, std::vector<KForm> d) : n_(n), d_(std::move(d)) {
    if (static_cast<int>(d_.size()) != n) throw InvariantError("coframe table size mismatch");
    for (const auto& f : d_)
        if (f.dim() != n || f.degree() != 2)
            throw InvariantError("coframe differential must be a 2-form of matching dimension");
}

LieAlgebra LieAlgebra::abelian(int n) {
    return LieAlgebra(n, std::vector<KForm>(n, KForm(n, 2)));
}

KForm LieAlgebra::d(const KForm& a) const {
    if (a.dim() != n_) throw InvariantError("form dimension mismatch");
    KForm out(n_, a.degree() + 1);
    if (a.degree() == 0) return out; // constants are closed
    for (const auto& [m, c] : a.terms()) {
        int p = 0;
        Mask mm = m;
        while (mm) {
            int bit = std::countr_zero(mm);
            int i = bit + 1;
            ++p;
            // d(e^I) = sum_p (-1)^{p-1} de^{i_p} ^ e^{I \ i_p}; the degree-2
            // factor moves to the front without a sign.
            KForm rest(n_, a.degree() - 1);
            rest.add(m & ~(Mask(1) << bit), (p % 2 == 1) ? c : -c);
            out += wedge(d_[i - 1], rest);
            mm &= mm - 1;
        }
    }
    return out;
}

bool LieAlgebra::jacobi_ok() const {
    for (int i = 1; i <= n_; ++i)
        if (!d(d_coframe(i)).is_zero()) return false;
    return true;
}

Vector LieAlgebra::bracket_basis(int j, int k) const {
    Vector out(n_);
    for (int i = 1; i <= n_; ++i) {
        Rational c = d_[i - 1].eval({j, k});
        if (!c.is_zero()) out[i] -= c;
    }
    return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    if (x.dim() != n_ || y.dim() != n_) throw InvariantError("vector dimension mismatch");
    Vector out(n_);
    for (int j = 1; j <= n_; ++j) {
        if (x[j].is_zero()) continue;
        for (int k = 1; k <= n_; ++k) {
            if (y[k].is_zero()) continue;
            Vector b = bracket_basis(j, k);
            if (!b.is_zero()) out += (x[j] * y[k]) * b;
        }
    }
    return out;
}

} // namespace stg
