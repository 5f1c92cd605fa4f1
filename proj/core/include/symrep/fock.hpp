#pragma once

#include <map>

#include "symrep/partition.hpp"
#include "symrep/polynomial.hpp"

namespace symrep {

/// Finite exact-rational combination of basis vectors v_la, truncated at a
/// degree cap.  Operations that would create a partition beyond the cap
/// raise truncation_error rather than dropping terms.
struct FockVector {
    std::map<Partition, Rational> terms;
    int cap = 12;

    static FockVector basis(const Partition& la, int cap = 12);

    void add(const Partition& la, const Rational& c);
    bool is_zero() const { return terms.empty(); }

    FockVector operator+(const FockVector& rhs) const;
    FockVector operator-(const FockVector& rhs) const;
    bool operator==(const FockVector& rhs) const { return terms == rhs.terms; }

    /// Orthonormal pairing (v_la, v_mu) = delta.
    Rational pair(const FockVector& rhs) const;
};

/// The hook add/remove operator: for k > 0 removes skew hooks of size k
/// with sign (-1)^leg; for k < 0 adds them with the same sign.  k = 0 is
/// rejected, its action is not well defined on this space.
FockVector lambda_op(int k, const FockVector& v);

/// [Lambda_n, Lambda_k] v_la - n delta_{n,-k} v_la; must be zero.
/// The cap must leave room for the intermediate hook additions.
FockVector heisenberg_residual(int n, int k, const Partition& la, int cap);

/// chi^la(c_rho) as the coefficient of v_0 in Lambda_{rho_1}...v_la.
Integer fock_character(const Partition& la, const Partition& rho);

/// Residuals of the boson-fermion correspondence at v_la in direction n:
/// sigma intertwines Lambda_{-n} with n x_n and Lambda_n with d/dx_n.
struct BosonResidual {
    GradedPolynomial raising;  // sigma(Lambda_{-n} v_la) - n x_n S_la
    GradedPolynomial lowering; // sigma(Lambda_n  v_la) - dS_la/dx_n
};

BosonResidual boson_image_residual(const Partition& la, int n, int cap = 12);

} // namespace symrep
