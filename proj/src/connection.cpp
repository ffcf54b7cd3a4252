#include "stg/connection.hpp"

namespace stg {

Vector Connection::nabla(int i, int j) const {
    Vector v(n_);
    for (int k = 1; k <= n_; ++k) v[k] = gamma(i, j, k);
    return v;
}

Vector Connection::nabla(const Vector& x, const Vector& y) const {
    Vector out(n_);
    for (int i = 1; i <= n_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 1; j <= n_; ++j) {
            if (y[j].is_zero()) continue;
            for (int k = 1; k <= n_; ++k) {
                const Rational& gk = gamma(i, j, k);
                if (!gk.is_zero()) out[k] += x[i] * y[j] * gk;
            }
        }
    }
    return out;
}

bool Connection::is_zero() const {
    for (const auto& x : gamma_)
        if (!x.is_zero()) return false;
    return true;
}

Connection lc_connection(const LieAlgebra& L, const Metric& g) {
    int n = L.dim();
    if (g.dim() != n) throw InvariantError("metric dimension mismatch");
    Connection conn(n);
    std::vector<std::vector<Vector>> br(n + 1, std::vector<Vector>(n + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) br[i][j] = L.bracket_basis(i, j);
    Rational half(1, 2);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Vector w(n); // w_k = g(nabla_{E_i} E_j, E_k)
            for (int k = 1; k <= n; ++k) {
                Vector ek = Vector::basis(n, k);
                w[k] = half * (g.pair(br[i][j], ek) - g.pair(br[j][k], Vector::basis(n, i)) +
                               g.pair(br[k][i], Vector::basis(n, j)));
            }
            Vector gamma = g.inv().apply(w);
            for (int k = 1; k <= n; ++k) conn.gamma(i, j, k) = gamma[k];
        }
    return conn;
}

Connection phi_inverse_connection(const LieAlgebra& L) {
    int n = L.dim();
    // beta_a collects the 2-form component of e^a in Phi^{-1}(d); with the
    // identity metric, Gamma^k_{aj} = beta_a(E_k, E_j).
    std::vector<KForm> beta(n + 1, KForm(n, 2));
    Rational half(1, 2);
    auto wedge_pair = [&](int a, int b) {
        KForm f(n, 2);
        if (a != b)
            f.add(mindex::from_indices({a, b}),
                  Rational(mindex::merge_sign(Mask(1) << (a - 1), Mask(1) << (b - 1))));
        return f;
    };
    for (int i = 1; i <= n; ++i) {
        for (const auto& [m, c] : L.d_coframe(i).terms()) {
            auto idx = mindex::indices(m);
            int j = idx[0], k = idx[1];
            Rational h = half * c;
            KForm ejk(n, 2);
            ejk.add(m, Rational(1));
            beta[i] -= h * ejk;
            beta[k] += h * wedge_pair(i, j); // e^i ^ e^j, zero when i = j
            beta[j] += h * wedge_pair(k, i);
        }
    }
    Connection conn(n);
    for (int a = 1; a <= n; ++a)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) conn.gamma(a, j, k) = beta[a].eval({k, j});
    return conn;
}

namespace {

// (nabla_{E_i} a)(args) for a constant form and constant frame:
// -sum_p a(..., nabla_{E_i} E_{j_p}, ...).
Rational covariant_eval(const LieAlgebra& L, const Connection& conn, const KForm& a, int i,
                        std::span<const int> args) {
    int n = L.dim();
    Rational total;
    std::vector<Vector> slots;
    slots.reserve(args.size());
    for (int j : args) slots.push_back(Vector::basis(n, j));
    for (std::size_t p = 0; p < args.size(); ++p) {
        Vector saved = slots[p];
        slots[p] = conn.nabla(i, args[p]);
        if (!slots[p].is_zero()) total -= a.eval(std::span<const Vector>(slots.data(), slots.size()));
        slots[p] = saved;
    }
    return total;
}

void increasing_tuples(int n, int k, std::vector<int>& cur, int start, auto&& fn) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int i = start; i <= n; ++i) {
        cur.push_back(i);
        increasing_tuples(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

} // namespace

KForm codifferential(const LieAlgebra& L, const Metric& g, const KForm& a) {
    if (a.degree() < 1) throw PreconditionError("codifferential of a degree-0 form");
    if (a.dim() != L.dim()) throw InvariantError("form dimension mismatch");
    int n = L.dim();
    Connection lc = lc_connection(L, g);
    KForm out(n, a.degree() - 1);
    std::vector<int> cur;
    increasing_tuples(n, a.degree() - 1, cur, 1, [&](const std::vector<int>& rest) {
        Rational v;
        std::vector<int> args(rest.size() + 1);
        std::copy(rest.begin(), rest.end(), args.begin() + 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const Rational& gij = g.inv().at(i, j);
                if (gij.is_zero()) continue;
                args[0] = j;
                v -= gij * covariant_eval(L, lc, a, i, args);
            }
        out.add(mindex::from_indices(rest), v);
    });
    return out;
}

Endo CurvatureMap::at(int i, int j) const {
    if (i == j) return Endo(n_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = r_.find({i, j});
    Endo r = (it == r_.end()) ? Endo(n_) : it->second;
    return flip ? -r : r;
}

bool CurvatureMap::all_zero() const {
    for (const auto& [ij, e] : r_)
        if (!e.is_zero()) return false;
    return true;
}

CurvatureMap curvature(const LieAlgebra& L, const Connection& conn) {
    int n = L.dim();
    std::map<std::pair<int, int>, Endo> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Endo r(n);
            Vector bij = L.bracket_basis(i, j);
            for (int k = 1; k <= n; ++k) {
                Vector v = conn.nabla(Vector::basis(n, i), conn.nabla(j, k));
                v -= conn.nabla(Vector::basis(n, j), conn.nabla(i, k));
                v -= conn.nabla(bij, Vector::basis(n, k));
                for (int m = 1; m <= n; ++m) r.at(m, k) = v[m];
            }
            out.emplace(std::make_pair(i, j), std::move(r));
        }
    return CurvatureMap(n, std::move(out));
}

Mat ricci(const LieAlgebra& L, const Connection& conn) {
    int n = L.dim();
    CurvatureMap R = curvature(L, conn);
    Mat ric(n);
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            Rational t;
            for (int i = 1; i <= n; ++i) t += R.at(i, j).at(i, k);
            ric.at(j, k) = t;
        }
    return ric;
}

Vector connection_torsion(const LieAlgebra& L, const Connection& conn, int i, int j) {
    Vector t = conn.nabla(i, j);
    t -= conn.nabla(j, i);
    t -= L.bracket_basis(i, j);
    return t;
}

} // namespace stg
