#pragma once

#include "symrep/matrix.hpp"
#include "symrep/tableau.hpp"

namespace symrep {

/// Young's seminormal form: exact rational matrices of the simple
/// transpositions in the GZ basis ordered by content vector.
struct SeminormalRep {
    Partition lambda;
    std::vector<StandardTableau> basis;
    std::vector<ExactMatrix> gens; // gens[k-1] is the matrix of s_k

    int n() const { return lambda.size(); }
    std::size_t dim() const { return basis.size(); }
};

SeminormalRep seminormal_rep(const Partition& la);

/// Matrix of an arbitrary permutation, multiplied out along a reduced word.
ExactMatrix rep_matrix(const SeminormalRep& rep, const Permutation& w);

/// Matrix of the Jucys-Murphy element L_k = sum of (m,k) for m < k.
/// Diagonal, with entries the contents of the box holding k.
ExactMatrix jm_matrix(const SeminormalRep& rep, int k);

} // namespace symrep
