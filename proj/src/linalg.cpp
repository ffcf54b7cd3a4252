#include "stg/linalg.hpp"

#include <sstream>

namespace stg {

Vector Vector::basis(int dim, int i) {
    Vector v(dim);
    v[i] = Rational(1);
    return v;
}

bool Vector::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Vector::operator-() const {
    Vector r(dim());
    for (int i = 1; i <= dim(); ++i) r[i] = -(*this)[i];
    return r;
}

Vector& Vector::operator+=(const Vector& o) {
    if (dim() != o.dim()) throw InvariantError("vector dimension mismatch");
    for (int i = 1; i <= dim(); ++i) (*this)[i] += o[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    if (dim() != o.dim()) throw InvariantError("vector dimension mismatch");
    for (int i = 1; i <= dim(); ++i) (*this)[i] -= o[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& s) {
    for (int i = 1; i <= dim(); ++i) (*this)[i] *= s;
    return *this;
}

std::string Vector::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= dim(); ++i) {
        const Rational& c = (*this)[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c == Rational(1)) {
            } else if (c == Rational(-1)) {
                os << "-";
            } else {
                os << c << " ";
            }
            first = false;
        } else {
            if (c.sign() > 0)
                os << " + ";
            else
                os << " - ";
            Rational a = c.abs();
            if (a != Rational(1)) os << a << " ";
        }
        os << "E" << i;
    }
    if (first) return "0";
    return os.str();
}

Mat Mat::identity(int n) {
    Mat m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

Vector Mat::apply(const Vector& v) const {
    if (v.dim() != n_) throw InvariantError("matrix/vector dimension mismatch");
    Vector r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Vector Mat::col(int j) const {
    Vector r(n_);
    for (int i = 1; i <= n_; ++i) r[i] = at(i, j);
    return r;
}

Mat Mat::operator-() const {
    Mat r(n_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
    return r;
}

Mat& Mat::operator+=(const Mat& o) {
    if (n_ != o.n_) throw InvariantError("matrix dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    if (n_ != o.n_) throw InvariantError("matrix dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Mat& Mat::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.n_ != b.n_) throw InvariantError("matrix dimension mismatch");
    Mat r(a.n_);
    for (int i = 1; i <= a.n_; ++i)
        for (int k = 1; k <= a.n_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

Mat Mat::transposed() const {
    Mat r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rational Mat::trace() const {
    Rational t;
    for (int i = 1; i <= n_; ++i) t += at(i, i);
    return t;
}

bool Mat::is_symmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Mat::is_antisymmetric() const {
    for (int i = 1; i <= n_; ++i)
        for (int j = i; j <= n_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

Mat Mat::inverse() const {
    Mat a(*this);
    Mat r = Mat::identity(n_);
    for (int col = 1; col <= n_; ++col) {
        int pivot = 0;
        for (int row = col; row <= n_; ++row)
            if (!a.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot == 0) throw InvariantError("singular matrix has no inverse");
        if (pivot != col) {
            for (int j = 1; j <= n_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(r.at(pivot, j), r.at(col, j));
            }
        }
        Rational inv_p = Rational(1) / a.at(col, col);
        for (int j = 1; j <= n_; ++j) {
            a.at(col, j) *= inv_p;
            r.at(col, j) *= inv_p;
        }
        for (int row = 1; row <= n_; ++row) {
            if (row == col) continue;
            Rational f = a.at(row, col);
            if (f.is_zero()) continue;
            for (int j = 1; j <= n_; ++j) {
                a.at(row, j) -= f * a.at(col, j);
                r.at(row, j) -= f * r.at(col, j);
            }
        }
    }
    return r;
}

Mat commutator(const Mat& a, const Mat& b) {
    return a * b - b * a;
}

namespace {

// Pivots of an elimination without row exchanges are the ratios of successive
// leading principal minors; a zero pivot means some leading minor vanishes,
// which already fails Sylvester's criterion.
bool positive_definite(const Mat& g) {
    int n = g.dim();
    Mat a(g);
    for (int k = 1; k <= n; ++k) {
        if (a.at(k, k).sign() <= 0) return false;
        for (int i = k + 1; i <= n; ++i) {
            Rational f = a.at(i, k) / a.at(k, k);
            if (f.is_zero()) continue;
            for (int j = k; j <= n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

} // namespace

Metric::Metric(Mat g) : g_(std::move(g)) {
    if (!g_.is_symmetric()) throw InvariantError("metric is not symmetric");
    if (!positive_definite(g_)) throw InvariantError("metric is not positive definite");
    ginv_ = g_.inverse();
}

Rational Metric::pair(const Vector& x, const Vector& y) const {
    Rational r;
    for (int i = 1; i <= dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 1; j <= dim(); ++j) r += x[i] * g_.at(i, j) * y[j];
    }
    return r;
}

} // namespace stg
