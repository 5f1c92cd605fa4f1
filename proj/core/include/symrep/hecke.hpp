#pragma once

#include "symrep/matrix.hpp"

namespace symrep {

/// Irreducible module L(a,b) of the rank-two degenerate affine Hecke
/// algebra H_2 = < s, x, y | xy = yx, s^2 = 1, sx = ys - 1 >.
/// One-dimensional when b = a +- 1, two-dimensional otherwise.
struct HeckeModuleLab {
    Rational a;
    Rational b;
    int dim = 0;
    ExactMatrix x, y, s;
};

HeckeModuleLab hecke_L(const Rational& a, const Rational& b);

/// True iff an invertible intertwiner L(a,b) -> L(c,d) exists, solved as
/// the linear system M rho_{a,b}(g) = rho_{c,d}(g) M over g in {x, y, s}.
/// Both modules must be two-dimensional.
bool hecke_iso_check(const Rational& a, const Rational& b,
                     const Rational& c, const Rational& d);

/// The swap case L(a,b) vs L(b,a).  Requires a != b and a != b +- 1.
bool hecke_iso_check(const Rational& a, const Rational& b);

} // namespace symrep
