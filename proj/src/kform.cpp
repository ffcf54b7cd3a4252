#include "stg/kform.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace stg {

namespace mindex {

int degree(Mask m) {
    return std::popcount(m);
}

std::vector<int> indices(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

Mask from_indices(std::span<const int> idx) {
    Mask m = 0;
    for (int i : idx) {
        if (i < 1 || i > 64) throw InvariantError("basis index out of range");
        m |= Mask(1) << (i - 1);
    }
    return m;
}

Mask from_indices(std::initializer_list<int> idx) {
    return from_indices(std::span<const int>(idx.begin(), idx.size()));
}

int merge_sign(Mask a, Mask b) {
    int inversions = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        inversions += std::popcount(a >> (j + 1));
        bb &= bb - 1;
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

int position(Mask m, int i) {
    Mask below = m & ((Mask(1) << (i - 1)) - 1);
    return std::popcount(below) + 1;
}

std::string str(Mask m) {
    if (m == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i : indices(m)) {
        if (!first) os << "^";
        os << "e" << i;
        first = false;
    }
    return os.str();
}

} // namespace mindex

KForm::KForm(int dim, int degree) : dim_(dim), deg_(degree) {
    if (degree < 0 || degree > dim) {
        // A form of degree beyond the dimension is identically zero; keep the
        // requested degree so arithmetic can still type-check.
    }
}

KForm KForm::monomial(int dim, std::initializer_list<int> idx, const Rational& c) {
    KForm f(dim, static_cast<int>(idx.size()));
    f.add(mindex::from_indices(idx), c);
    return f;
}

Rational KForm::coeff(Mask m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Rational(0) : it->second;
}

void KForm::add(Mask m, const Rational& c) {
    if (c.is_zero()) return;
    if (mindex::degree(m) != deg_) throw InvariantError("monomial degree mismatch");
    auto [it, inserted] = c_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

KForm KForm::operator-() const {
    KForm r(dim_, deg_);
    for (const auto& [m, c] : c_) r.c_.emplace(m, -c);
    return r;
}

KForm& KForm::operator+=(const KForm& o) {
    if (dim_ != o.dim_ || deg_ != o.deg_) throw InvariantError("form dimension/degree mismatch");
    for (const auto& [m, c] : o.c_) add(m, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& o) {
    if (dim_ != o.dim_ || deg_ != o.deg_) throw InvariantError("form dimension/degree mismatch");
    for (const auto& [m, c] : o.c_) add(m, -c);
    return *this;
}

KForm& KForm::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& [m, c] : c_) c *= s;
    return *this;
}

Rational KForm::eval(std::span<const int> basis_idx) const {
    if (static_cast<int>(basis_idx.size()) != deg_) throw InvariantError("evaluation arity mismatch");
    if (deg_ == 0) return coeff(0);
    // Sort indices tracking the permutation sign; repeated indices kill the value.
    std::vector<int> idx(basis_idx.begin(), basis_idx.end());
    int sign = 1;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
        if (idx[i] == idx[i + 1]) return Rational(0);
    Rational c = coeff(mindex::from_indices(idx));
    return sign > 0 ? c : -c;
}

Rational KForm::eval(std::initializer_list<int> basis_idx) const {
    return eval(std::span<const int>(basis_idx.begin(), basis_idx.size()));
}

Rational KForm::eval(std::span<const Vector> args) const {
    if (static_cast<int>(args.size()) != deg_) throw InvariantError("evaluation arity mismatch");
    if (deg_ == 0) return coeff(0);
    // Expand multilinearly one slot at a time.
    Rational total;
    std::vector<int> idx(args.size());
    // Depth-first over index assignments; degrees here are tiny (<= 4).
    auto rec = [&](auto&& self, std::size_t slot, Rational factor) -> void {
        if (slot == args.size()) {
            Rational v = eval(std::span<const int>(idx.data(), idx.size()));
            if (!v.is_zero()) total += factor * v;
            return;
        }
        const Vector& v = args[slot];
        for (int i = 1; i <= dim_; ++i) {
            if (v[i].is_zero()) continue;
            idx[slot] = i;
            self(self, slot + 1, factor * v[i]);
        }
    };
    rec(rec, 0, Rational(1));
    return total;
}

KForm KForm::pullback(const Endo& a) const {
    if (a.dim() != dim_) throw InvariantError("pullback dimension mismatch");
    KForm out(dim_, deg_);
    if (deg_ == 0) return *this;
    for (const auto& [m, c] : c_) {
        // e^I o A = product of the rows of A indexed by I.
        KForm acc(dim_, 0);
        acc.add(0, c);
        for (int i : mindex::indices(m)) {
            KForm row(dim_, 1);
            for (int j = 1; j <= dim_; ++j) row.add(Mask(1) << (j - 1), a.at(i, j));
            acc = wedge(acc, row);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

KForm KForm::lifted(int new_dim) const {
    if (new_dim < dim_) throw InvariantError("cannot lift a form to a smaller dimension");
    KForm out(new_dim, deg_);
    for (const auto& [m, c] : c_) out.add(m, c);
    return out;
}

KForm KForm::shifted(int offset, int new_dim) const {
    if (new_dim < dim_ + offset) throw InvariantError("shift does not fit the target dimension");
    KForm out(new_dim, deg_);
    for (const auto& [m, c] : c_) out.add(m << offset, c);
    return out;
}

std::string KForm::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : c_) {
        if (first) {
            if (c == Rational(-1) && m != 0)
                os << "-";
            else if (c != Rational(1) || m == 0)
                os << c << (m == 0 ? "" : " ");
        } else {
            os << (c.sign() > 0 ? " + " : " - ");
            Rational a = c.abs();
            if (a != Rational(1) || m == 0) os << a << (m == 0 ? "" : " ");
        }
        if (m != 0) os << mindex::str(m);
        first = false;
    }
    return os.str();
}

KForm covector_form(const Vector& row) {
    KForm f(row.dim(), 1);
    for (int i = 1; i <= row.dim(); ++i) f.add(Mask(1) << (i - 1), row[i]);
    return f;
}

KForm wedge(const KForm& a, const KForm& b) {
    if (a.dim() != b.dim()) throw InvariantError("wedge dimension mismatch");
    KForm out(a.dim(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            int s = mindex::merge_sign(ma, mb);
            out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

KForm interior(const Vector& v, const KForm& a) {
    if (v.dim() != a.dim()) throw InvariantError("interior product dimension mismatch");
    if (a.degree() < 1) throw PreconditionError("interior product of a degree-0 form");
    KForm out(a.dim(), a.degree() - 1);
    for (const auto& [m, c] : a.terms()) {
        int p = 0;
        Mask mm = m;
        while (mm) {
            int bit = std::countr_zero(mm);
            int i = bit + 1;
            ++p;
            if (!v[i].is_zero()) {
                Rational term = c * v[i];
                if (p % 2 == 0) term = -term;
                out.add(m & ~(Mask(1) << bit), term);
            }
            mm &= mm - 1;
        }
    }
    return out;
}

} // namespace stg
