#pragma once

#include <map>

#include "symrep/permutation.hpp"
#include "symrep/skew.hpp"

namespace symrep {

/// Murnaghan-Nakayama evaluation of the (skew) character on the class of
/// cycle type rho.  Exact, memoized.
Integer mn_character(const SkewShape& shape, const Partition& rho);

inline Integer mn_character(const Partition& la, const Partition& rho) {
    return mn_character(SkewShape(la, Partition{}), rho);
}

/// Closed form on the full cycle: (-1)^leg on a skew hook, 0 otherwise.
Integer hook_cycle_character(const SkewShape& shape);

struct CharacterTable {
    int n = 0;
    std::vector<Partition> row_labels; // characters, canonical order
    std::vector<Partition> col_labels; // classes, canonical order
    std::vector<std::vector<Integer>> entries;
    std::vector<Integer> class_sizes;
};

CharacterTable character_table(int n, int cap = 12);

/// Branching multiplicities of res_{S_{n-1}} V^la, computed by character
/// inner products over S_{n-1}.
std::map<Partition, Integer> restriction_multiplicities(const Partition& la);

/// Exact rational element of the group algebra of S_n.
struct GroupAlgebraElement {
    int n = 0;
    std::map<Permutation, Rational> coeffs;

    void add(const Permutation& g, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs.erase(it);
        }
    }
};

GroupAlgebraElement algebra_identity(int n);
GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// e_la = sum_g dim(la) chi^la(type g) / n! g.
GroupAlgebraElement central_idempotent(int n, const Partition& la, int cap = 5);

} // namespace symrep
