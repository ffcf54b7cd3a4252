#include "stg/warped.hpp"

#include <sstream>

namespace stg {

Poly Poly::r() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

const Rational& Poly::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Rational Poly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw InvariantError("polynomial division by zero");
    Poly rem = a;
    if (a.degree() < b.degree()) return {Poly(), rem};
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rational f = rem.leading() / b.leading();
        q[shift] += f;
        // rem -= f r^shift b
        std::vector<Rational> sub(shift + b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i) sub[shift + i] = f * b.c_[i];
        rem -= Poly(std::move(sub));
    }
    return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic
    Rational inv = Rational(1) / a.leading();
    std::vector<Rational> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = inv * a.c_[i];
    return Poly(std::move(c));
}

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c == Rational(-1) && i > 0)
                os << "-";
            else if (c != Rational(1) || i == 0)
                os << c << (i > 0 ? " " : "");
            first = false;
        } else {
            os << (c.sign() > 0 ? " + " : " - ");
            Rational a = c.abs();
            if (a != Rational(1) || i == 0) os << a << (i > 0 ? " " : "");
        }
        if (i == 1)
            os << "r";
        else if (i > 1)
            os << "r^" << i;
    }
    return os.str();
}

RFun::RFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvariantError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rational(1));
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
    }
    // make denominator monic
    Rational lead = den_.leading();
    if (lead != Rational(1)) {
        Rational inv = Rational(1) / lead;
        std::vector<Rational> nc, dc;
        for (int i = 0; i <= num_.degree(); ++i) nc.push_back(inv * num_.coeff(i));
        for (int i = 0; i <= den_.degree(); ++i) dc.push_back(inv * den_.coeff(i));
        num_ = Poly(std::move(nc));
        den_ = Poly(std::move(dc));
    }
}

RFun RFun::operator-() const {
    RFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RFun& RFun::operator+=(const RFun& o) {
    *this = RFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RFun& RFun::operator-=(const RFun& o) {
    *this = RFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RFun& RFun::operator*=(const RFun& o) {
    *this = RFun(num_ * o.num_, den_ * o.den_);
    return *this;
}

RFun& RFun::operator/=(const RFun& o) {
    if (o.is_zero()) throw InvariantError("division by the zero rational function");
    *this = RFun(num_ * o.den_, den_ * o.num_);
    return *this;
}

RFun RFun::derivative() const {
    return RFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RFun::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

WForm WForm::from_base(const KForm& a) {
    WForm w(a.dim(), a.degree());
    for (const auto& [m, c] : a.terms()) w.a_[m] = RFun(c);
    return w;
}

WForm WForm::dr_wedge_base(const KForm& b) {
    WForm w(b.dim(), b.degree() + 1);
    for (const auto& [m, c] : b.terms()) w.b_[m] = RFun(c);
    return w;
}

void WForm::add_a(Mask m, const RFun& c) {
    if (c.is_zero()) return;
    if (mindex::degree(m) != deg_) throw InvariantError("monomial degree mismatch");
    auto [it, inserted] = a_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) a_.erase(it);
    }
}

void WForm::add_b(Mask m, const RFun& c) {
    if (c.is_zero()) return;
    if (mindex::degree(m) != deg_ - 1) throw InvariantError("monomial degree mismatch");
    auto [it, inserted] = b_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) b_.erase(it);
    }
}

WForm WForm::operator-() const {
    WForm r(n_, deg_);
    for (const auto& [m, c] : a_) r.a_.emplace(m, -c);
    for (const auto& [m, c] : b_) r.b_.emplace(m, -c);
    return r;
}

WForm& WForm::operator+=(const WForm& o) {
    if (n_ != o.n_ || deg_ != o.deg_) throw InvariantError("warped form dimension/degree mismatch");
    for (const auto& [m, c] : o.a_) add_a(m, c);
    for (const auto& [m, c] : o.b_) add_b(m, c);
    return *this;
}

WForm& WForm::operator-=(const WForm& o) {
    if (n_ != o.n_ || deg_ != o.deg_) throw InvariantError("warped form dimension/degree mismatch");
    for (const auto& [m, c] : o.a_) add_a(m, -c);
    for (const auto& [m, c] : o.b_) add_b(m, -c);
    return *this;
}

WForm& WForm::operator*=(const RFun& s) {
    if (s.is_zero()) {
        a_.clear();
        b_.clear();
        return *this;
    }
    for (auto& [m, c] : a_) c *= s;
    for (auto& [m, c] : b_) c *= s;
    return *this;
}

bool WForm::coefficients_polynomial() const {
    for (const auto& [m, c] : a_)
        if (!c.is_polynomial()) return false;
    for (const auto& [m, c] : b_)
        if (!c.is_polynomial()) return false;
    return true;
}

std::string WForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ") " << mindex::str(m);
        first = false;
    }
    for (const auto& [m, c] : b_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ") dr" << (m == 0 ? "" : "^" + mindex::str(m));
        first = false;
    }
    return os.str();
}

WForm wwedge(const WForm& x, const WForm& y) {
    if (x.base_dim() != y.base_dim()) throw InvariantError("wedge dimension mismatch");
    WForm out(x.base_dim(), x.degree() + y.degree());
    // (ax + dr^bx) ^ (ay + dr^by) = ax^ay + dr^(bx^ay + (-1)^{deg ax} ax^by)
    for (const auto& [ma, ca] : x.a_terms())
        for (const auto& [mb, cb] : y.a_terms()) {
            if (ma & mb) continue;
            int s = mindex::merge_sign(ma, mb);
            out.add_a(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    for (const auto& [ma, ca] : x.b_terms())
        for (const auto& [mb, cb] : y.a_terms()) {
            if (ma & mb) continue;
            int s = mindex::merge_sign(ma, mb);
            out.add_b(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    int sign_ax = (x.degree() % 2 == 0) ? 1 : -1;
    for (const auto& [ma, ca] : x.a_terms())
        for (const auto& [mb, cb] : y.b_terms()) {
            if (ma & mb) continue;
            int s = sign_ax * mindex::merge_sign(ma, mb);
            out.add_b(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

namespace {

// CE differential applied coefficient-wise to an RFun-coefficient base form.
std::map<Mask, RFun> base_d(const LieAlgebra& L, const std::map<Mask, RFun>& part, int deg) {
    std::map<Mask, RFun> out;
    auto add = [&out](Mask m, const RFun& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = out.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [m, c] : part) {
        KForm mono(L.dim(), deg);
        mono.add(m, Rational(1));
        KForm dm = L.d(mono);
        for (const auto& [mm, cc] : dm.terms()) add(mm, c * RFun(cc));
    }
    return out;
}

} // namespace

WForm wd(const LieAlgebra& L, const WForm& w) {
    WForm out(w.base_dim(), w.degree() + 1);
    for (const auto& [m, c] : base_d(L, w.a_terms(), w.degree())) out.add_a(m, c);
    for (const auto& [m, c] : w.a_terms()) out.add_b(m, c.derivative());
    for (const auto& [m, c] : base_d(L, w.b_terms(), w.degree() - 1)) out.add_b(m, -c);
    return out;
}

namespace {

// Pullback through the warped complex structure: dr -> -f eta,
// e^i -> (1/f) e^i(xi) dr + e^i o phi, extended multiplicatively.
WForm warped_j_pullback(const ACMStructure& s, const RFun& f, const WForm& w) {
    int n = s.dim();
    std::vector<WForm> coframe_image(n + 1);
    RFun inv_f = RFun(Rational(1)) / f;
    for (int i = 1; i <= n; ++i) {
        WForm im(n, 1);
        for (int j = 1; j <= n; ++j) {
            const Rational& pij = s.phi.at(i, j);
            if (!pij.is_zero()) im.add_a(Mask(1) << (j - 1), RFun(pij));
        }
        if (!s.xi[i].is_zero()) im.add_b(0, RFun(s.xi[i]) * inv_f);
        coframe_image[i] = std::move(im);
    }
    WForm dr_image(n, 1);
    for (const auto& [m, c] : s.eta.terms()) dr_image.add_a(m, RFun(-c) * f);

    WForm out(n, w.degree());
    for (const auto& [m, c] : w.a_terms()) {
        WForm acc(n, 0);
        acc.add_a(0, c);
        for (int i : mindex::indices(m)) {
            acc = wwedge(acc, coframe_image[i]);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    for (const auto& [m, c] : w.b_terms()) {
        WForm acc(n, 1);
        for (const auto& [dm, dc] : dr_image.a_terms()) acc.add_a(dm, dc * c);
        for (int i : mindex::indices(m)) {
            acc = wwedge(acc, coframe_image[i]);
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

void check_f(const RFun& f) {
    if (f.is_zero()) throw PreconditionError("warping function must be nonzero");
    if (!f.is_polynomial()) throw PreconditionError("warping function must be a polynomial");
}

} // namespace

WForm warped_torsion_direct(const ACMStructure& s, const RFun& f) {
    check_f(f);
    if (!is_st(s)) throw PreconditionError("warped torsion requires an ST structure");
    int n = s.dim();
    WForm omega(n, 2);
    for (const auto& [m, c] : s.eta.terms()) omega.add_b(m, f * RFun(c));
    for (const auto& [m, c] : s.F.terms()) omega.add_a(m, f * f * RFun(c));
    WForm domega = wd(s.L, omega);
    WForm torsion = warped_j_pullback(s, f, domega);
    if (!torsion.coefficients_polynomial())
        throw InternalError("warped torsion has a non-polynomial coefficient");
    return torsion;
}

WForm warped_torsion_formula(const ACMStructure& s, const RFun& f) {
    check_f(f);
    KForm c = torsion(s);
    KForm f_eta = wedge(s.F, s.eta);
    RFun f2 = f * f;
    RFun coef = RFun(Rational(-2)) * f2 * f.derivative();
    WForm out(s.dim(), 3);
    for (const auto& [m, cc] : c.terms()) out.add_a(m, f2 * RFun(cc));
    for (const auto& [m, cc] : f_eta.terms()) out.add_a(m, coef * RFun(cc));
    return out;
}

WarpedReport warped_skt_report(const ACMStructure& s, const RFun& f) {
    WarpedReport rep;
    rep.torsion = warped_torsion_direct(s, f);
    rep.f_prime = f.derivative();
    rep.closed = wd(s.L, rep.torsion).is_zero();

    // d eta = alpha F, when exactly proportional.
    KForm deta = s.L.d(s.eta);
    if (!s.F.is_zero()) {
        const auto& [m0, f0] = *s.F.terms().begin();
        Rational alpha = deta.coeff(m0) / f0;
        KForm scaled = s.F;
        scaled *= alpha;
        if (scaled == deta) {
            rep.alpha = alpha;
            rep.lambda = alpha / Rational(2);
        }
    }

    if (!rep.closed) {
        rep.branch = WarpedBranch::NotClosed;
        return rep;
    }
    if (rep.f_prime.is_zero()) {
        rep.branch = WarpedBranch::ConstantFactor;
        return rep;
    }
    bool linear = f.is_polynomial() && f.num().degree() == 1;
    if (linear && rep.alpha && *rep.alpha == Rational(2) * f.derivative().num().coeff(0)) {
        rep.branch = WarpedBranch::LinearFactor;
        return rep;
    }
    rep.branch = WarpedBranch::ClosedUnlabeled;
    return rep;
}

} // namespace stg
