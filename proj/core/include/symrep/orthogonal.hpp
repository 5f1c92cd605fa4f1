#pragma once

#include "symrep/matrix.hpp"
#include "symrep/tableau.hpp"

namespace symrep {

/// Young's orthogonal form, for straight or skew shapes.  Generators are
/// symmetric orthogonal matrices built directly from the recurrence
/// s_k w_T = rho w_T + sqrt(1 - rho^2) w_{s_k T}.
struct OrthogonalRep {
    SkewShape shape;
    std::vector<StandardTableau> basis;
    std::vector<FloatMatrix> gens; // gens[k-1] is the matrix of s_k

    int n() const { return shape.size(); }
    std::size_t dim() const { return basis.size(); }
};

OrthogonalRep orthogonal_rep(const SkewShape& shape);

inline OrthogonalRep orthogonal_rep(const Partition& la) {
    return orthogonal_rep(SkewShape(la, Partition{}));
}

FloatMatrix rep_matrix(const OrthogonalRep& rep, const Permutation& w);

/// Compares the action of the simple transpositions on the orthonormal
/// basis v_j = (e_1 + ... + e_{j-1} - (j-1) e_j) / sqrt(j(j-1)) of the sum-
/// zero subspace of the natural permutation module with orthogonal_rep of
/// (n-1, 1), entrywise within tol.
bool natural_module_check(int n, double tol = 1e-9);

} // namespace symrep
