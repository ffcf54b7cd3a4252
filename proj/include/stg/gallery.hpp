#pragma once

#include "stg/acm.hpp"

namespace stg {

// Concrete structures used throughout the test batteries and addressable from
// the CLI by name.

// R x G with the 4-dimensional solvable factor
// de^3 = e^3^e^1 + e^4^e^2, de^4 = e^4^e^1 + e^2^e^3; eta = e^5 = dt.
// ST but not SST: the torsion is 2 e^2^e^3^e^4 with d c != 0.
ACMStructure ex_r_times_g4();

// 5-dimensional quasi-Sasaki solvable algebra with decomposable d eta.
ACMStructure ex_5d_quasi_sasaki();

// 7-dimensional 2-step nilpotent algebra,
// de^5 = -e^12 + e^34, de^6 = -e^13 - e^24, de^7 = -e^14 + e^23.
// eta = e^5: the unique coframe choice compatible with phi(xi) = 0 and
// xi -| F = 0 for the phi table e^1 o phi = -e^2, e^3 o phi = -e^4,
// e^6 o phi = -e^7. Balanced, not quasi-Sasaki, st connection not flat.
ACMStructure ex_7d_nilpotent();

// su(2) with de^1 = -2 e^23 (cyclic), d eta = 2F: Sasaki (alpha = 2).
ACMStructure su2_sasaki();

// Canonical left-invariant structure on u(n), n in {1, 3}: metric -tr(XY) on
// the matrix basis {iE_jj, E_jk - E_kj, i(E_jk + E_kj)}, xi = iE_11,
// phi(iE_22) = iE_33, phi = +/-i on the root planes. Torsion is closed and
// coclosed and the connection is flat.
ACMStructure u_n_canonical_sst(int n);

// Abelian R^{2k+1} with the standard block phi; cosymplectic.
ACMStructure abelian_st(int k);

std::vector<std::string> gallery_names();
ACMStructure build_example(const std::string& name);

// Every gallery structure paired with its name (all pass is_st).
std::vector<std::pair<std::string, ACMStructure>> gallery_st();

} // namespace stg
