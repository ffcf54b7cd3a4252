#pragma once

#include <vector>

#include "stg/rational.hpp"

namespace stg {

// Dense rational vector of a fixed ambient dimension. Indices are 1-based
// throughout the public API, matching the coframe names e1..en.
class Vector {
public:
    Vector() = default;
    explicit Vector(int dim) : c_(dim) {}
    Vector(std::initializer_list<Rational> init) : c_(init) {}

    static Vector basis(int dim, int i);

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[i - 1]; }
    Rational& operator[](int i) { return c_[i - 1]; }

    bool is_zero() const;

    Vector operator-() const;
    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& s);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& s, Vector v) { return v *= s; }

    friend bool operator==(const Vector&, const Vector&) = default;

    std::string str() const; // "E1 - 2 E3" style

private:
    std::vector<Rational> c_;
};

// Square rational matrix; as an endomorphism, column j is the image of E_j,
// so at(i, j) = e^i(A E_j).
class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static Mat identity(int n);

    int dim() const { return n_; }
    const Rational& at(int i, int j) const { return a_[idx(i, j)]; }
    Rational& at(int i, int j) { return a_[idx(i, j)]; }

    bool is_zero() const;

    Vector apply(const Vector& v) const;
    Vector col(int j) const;

    Mat operator-() const;
    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(const Rational& s);
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Rational& s, Mat m) { return m *= s; }
    friend Mat operator*(const Mat& a, const Mat& b);

    Mat transposed() const;
    Rational trace() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;

    // Gauss-Jordan inverse; throws InvariantError on singular input.
    Mat inverse() const;

    friend bool operator==(const Mat&, const Mat&) = default;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

    int n_ = 0;
    std::vector<Rational> a_;
};

using Endo = Mat;

Mat commutator(const Mat& a, const Mat& b);

// Symmetric positive definite rational metric with cached exact inverse.
// Definiteness is decided by Sylvester's criterion on leading principal
// minors, in exact arithmetic.
class Metric {
public:
    Metric() = default;
    explicit Metric(Mat g);

    static Metric orthonormal(int n) { return Metric(Mat::identity(n)); }

    int dim() const { return g_.dim(); }
    const Mat& mat() const { return g_; }
    const Mat& inv() const { return ginv_; }
    const Rational& at(int i, int j) const { return g_.at(i, j); }

    Rational pair(const Vector& x, const Vector& y) const;
    bool is_orthonormal() const { return g_ == Mat::identity(g_.dim()); }

    friend bool operator==(const Metric& a, const Metric& b) { return a.g_ == b.g_; }

private:
    Mat g_;
    Mat ginv_;
};

} // namespace stg
