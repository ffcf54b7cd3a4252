#pragma once

#include "stg/acm.hpp"

namespace stg {

// Hermitian structure on an even-dimensional Lie algebra; omega = g(J., .) is
// cached at construction.
struct HermitianStructure {
    LieAlgebra L;
    Metric g;
    Endo J;
    KForm omega; // degree 2

    int dim() const { return L.dim(); }
};

HermitianStructure make_hermitian(LieAlgebra L, Metric g, Endo J);

// n even; J^2 = -1; g(JX, JY) = g(X, Y); omega antisymmetric; Jacobi.
ValidationReport hermitian_validate(const HermitianStructure& h);

// N(X,Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY].
VectorValued2Form nijenhuis(const HermitianStructure& h);
bool is_integrable(const HermitianStructure& h);

// Torsion 3-form c_J = d omega(J., J., J.); requires integrability.
KForm kt_torsion(const HermitianStructure& h);
bool is_skt(const HermitianStructure& h);

// theta(X) = 1/2 sum_{i,j} g^{ij} d omega(X, E_i, J E_j).
KForm kt_lee(const HermitianStructure& h);

// Is sigma J-invariant, sigma(JX, JY) = sigma(X, Y)?
bool type_11_wrt_J(const HermitianStructure& h, const KForm& sigma);

// Cylinder over an ST structure: one extra central direction T appended as the
// last basis vector, g_K = g + (ds)^2, omega_K = ds ^ eta + F. The induced J
// has J T = xi, J xi = -T and J = phi horizontally.
HermitianStructure cylinder(const ACMStructure& s);

// Product of two normal structures on L+ (+) L-, with
// omega_P = eta- ^ eta+ + F- + F+ and g_P = g+ + g-. The minus factor
// occupies the shifted index block.
HermitianStructure product(const ACMStructure& sp, const ACMStructure& sm);

// Central extension of an integrable Hermitian structure by a closed (1,1)
// 2-form sigma: ACM structure on L (+) R xi with d eta = sigma, phi = J
// horizontally, phi xi = 0. The new direction is the last basis vector.
ACMStructure central_extension_st(const HermitianStructure& h, const KForm& sigma);

// Two-torus extension of a normal ST structure by closed horizontal (1,1)
// forms sigma1, sigma2, with exact unit parameters (s, t), s^2 + t^2 = 1:
//   xi^ = t X1 + s X2,  phi^ = phi + eta^perp (x) xi - eta (x) xi^perp.
// X1, X2 are the two appended basis directions with d omega_i = sigma_i.
ACMStructure torus_extension_st(const ACMStructure& s, const KForm& sigma1, const KForm& sigma2,
                                const Rational& par_s, const Rational& par_t);

} // namespace stg
