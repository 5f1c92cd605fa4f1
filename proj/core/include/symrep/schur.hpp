#pragma once

#include <map>

#include "symrep/partition.hpp"
#include "symrep/polynomial.hpp"

namespace symrep {

/// Elementary Schur polynomial S_k: 0 for k < 0, 1 for k = 0, otherwise
/// the sum over k_1 + 2 k_2 + ... = k of prod x_i^{k_i} / k_i!.
GradedPolynomial elementary_schur(int k);

/// Jacobi-Trudi determinant det(S_{la_i + j - i}).
GradedPolynomial schur_poly(const Partition& la);

/// P_rho = prod_i rho_i x_{rho_i}.
GradedPolynomial power_monomial(const Partition& rho);

/// Coefficients of P_rho in the Schur basis: {la : chi^la(c_rho)}.
std::map<Partition, Integer> frobenius_expand(const Partition& rho, int cap = 12);

/// S_la = sum_rho chi^la(c_rho) x^rho / Z_rho.
GradedPolynomial schur_in_monomials(const Partition& la, int cap = 12);

/// Contravariant pairing: substitute x_n -> (1/n) d/dx_n in f, apply to g,
/// take the value at 0.  On monomials this is delta times
/// prod a_i! / i^{a_i}.
Rational contravariant_form(const GradedPolynomial& f, const GradedPolynomial& g);

} // namespace symrep
