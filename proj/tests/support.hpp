#pragma once

// Test-only helpers: random exact data, random Jacobi-valid algebras built as
// towers of central extensions, and the Hodge-star route to the codifferential
// used as an independent oracle.

#include <random>

#include "stg/hermitian.hpp"

namespace stg::test {

inline Rational random_rational(std::mt19937_64& rng, int num_range = 4, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

inline KForm random_form(std::mt19937_64& rng, int dim, int degree, int terms = 4) {
    KForm f(dim, degree);
    if (degree > dim) return f;
    std::uniform_int_distribution<int> pick(1, dim);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < degree) {
            int i = pick(rng);
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        f.add(mindex::from_indices(idx), random_rational(rng));
    }
    return f;
}

inline Vector random_vector(std::mt19937_64& rng, int dim) {
    Vector v(dim);
    for (int i = 1; i <= dim; ++i) v[i] = random_rational(rng);
    return v;
}

// Basis of the closed 2-forms of L, by exact elimination of the coefficient
// matrix of d: Lambda^2 -> Lambda^3.
inline std::vector<KForm> closed_two_forms(const LieAlgebra& L) {
    int n = L.dim();
    std::vector<Mask> cols;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cols.push_back(mindex::from_indices({i, j}));
    std::map<Mask, int> row_of;
    std::vector<std::vector<Rational>> rows; // row-major, indexed by 3-monomial
    auto row_for = [&](Mask m) {
        auto it = row_of.find(m);
        if (it != row_of.end()) return it->second;
        int r = static_cast<int>(rows.size());
        row_of.emplace(m, r);
        rows.emplace_back(cols.size());
        return r;
    };
    for (std::size_t c = 0; c < cols.size(); ++c) {
        KForm mono(n, 2);
        mono.add(cols[c], Rational(1));
        KForm dm = L.d(mono);
        for (const auto& [m, coef] : dm.terms()) rows[row_for(m)][c] = coef;
    }
    // exact RREF
    std::size_t rank = 0;
    std::vector<int> pivot_col;
    for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        Rational inv = Rational(1) / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c].is_zero()) continue;
            Rational f = rows[r][c];
            for (std::size_t t = 0; t < cols.size(); ++t) rows[r][t] -= f * rows[rank][t];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++rank;
    }
    std::vector<bool> is_pivot(cols.size(), false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<KForm> basis;
    for (std::size_t free_c = 0; free_c < cols.size(); ++free_c) {
        if (is_pivot[free_c]) continue;
        KForm f(n, 2);
        f.add(cols[free_c], Rational(1));
        for (std::size_t r = 0; r < rank; ++r) {
            if (rows[r][free_c].is_zero()) continue;
            f.add(cols[pivot_col[r]], -rows[r][free_c]);
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

// Random algebra with d^2 = 0 by construction: an abelian core extended by
// random closed 2-forms, one central direction at a time.
inline LieAlgebra random_jacobi_algebra(std::mt19937_64& rng, int dim) {
    std::uniform_int_distribution<int> core_pick(2, std::max(2, dim - 1));
    int core = std::min(core_pick(rng), dim);
    LieAlgebra L = LieAlgebra::abelian(core);
    for (int n = core + 1; n <= dim; ++n) {
        std::vector<KForm> basis = closed_two_forms(L);
        KForm sigma(n, 2);
        for (const auto& b : basis) {
            Rational c = random_rational(rng, 2, 2);
            if (!c.is_zero()) sigma += c * b.lifted(n);
        }
        std::vector<KForm> d;
        for (int i = 1; i < n; ++i) d.push_back(L.d_coframe(i).lifted(n));
        d.push_back(std::move(sigma));
        L = LieAlgebra(n, std::move(d));
    }
    return L;
}

// Hodge star for the orthonormal metric and the standard orientation.
inline KForm hodge_star(const KForm& a) {
    int n = a.dim();
    Mask full = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
    KForm out(n, n - a.degree());
    for (const auto& [m, c] : a.terms()) {
        Mask comp = full & ~m;
        int s = mindex::merge_sign(m, comp);
        out.add(comp, s > 0 ? c : -c);
    }
    return out;
}

// d* = (-1)^{n(k+1)+1} star d star on k-forms; independent of the
// Levi-Civita contraction route.
inline KForm codifferential_by_star(const LieAlgebra& L, const KForm& a) {
    int n = L.dim();
    int k = a.degree();
    KForm sds = hodge_star(L.d(hodge_star(a)));
    int e = n * (k + 1) + 1;
    if (e % 2 != 0) sds *= Rational(-1);
    return sds;
}

// Random ST structure: a central extension of the abelian Kaehler algebra
// R^{2k} by a random J-invariant 2-form (automatically closed here). The
// result is normal with central Reeb direction, so ST by construction.
inline ACMStructure random_st_structure(std::mt19937_64& rng, int k) {
    int n = 2 * k;
    LieAlgebra L = LieAlgebra::abelian(n);
    Endo j(n);
    for (int p = 1; p <= k; ++p) {
        j.at(2 * p, 2 * p - 1) = Rational(1);
        j.at(2 * p - 1, 2 * p) = Rational(-1);
    }
    HermitianStructure h = make_hermitian(std::move(L), Metric::orthonormal(n), std::move(j));
    KForm sigma(n, 2);
    KForm raw = random_form(rng, n, 2, 5);
    sigma = raw + raw.pullback(h.J); // J-invariant part, type (1,1)
    return central_extension_st(h, sigma);
}

} // namespace stg::test
