#pragma once

#include <string>
#include <vector>

#include "symrep/partition.hpp"

namespace symrep {

/// Element of S_n in one-line notation; images are 1-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// Simple transposition s_k = (k, k+1) in S_n, 1 <= k < n.
    static Permutation simple(int k, int n);
    /// Transposition (a, b) in S_n.
    static Permutation transposition(int a, int b, int n);
    /// Parses one-line "2,1,4,3" or cycle notation "(1 2)(3 4)".
    /// Cycle notation needs n; pass 0 to use the largest letter mentioned.
    static Permutation parse(const std::string& text, int n = 0);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    /// (a*b)(i) = a(b(i)).
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

Partition cycle_type(const Permutation& w);
/// (1..rho_1)(rho_1+1..rho_1+rho_2)...
Permutation class_representative(const Partition& rho);
Integer class_size(const Partition& rho);

/// Number of inversions.
int coxeter_length(const Permutation& w);
/// Generator indices k_1..k_l with s_{k_1}...s_{k_l} = w and l = length(w).
std::vector<int> reduced_word(const Permutation& w);

/// All of S_n, lexicographic in one-line notation.
std::vector<Permutation> all_permutations(int n);

} // namespace symrep
