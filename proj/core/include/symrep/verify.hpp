#pragma once

#include <string>
#include <vector>

namespace symrep {

struct VerifyResult {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    void note(const std::string& msg) { failures.push_back(msg); }
    void merge(const VerifyResult& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
};

/// Seminormal generators satisfy the Coxeter relations exactly, orthogonal
/// generators within tol (and G^T G = I); JM matrices are diagonal with
/// content entries and satisfy s_k L_k = L_{k+1} s_k - 1.  All la |- m <= n.
VerifyResult verify_coxeter(int n, double tol);

/// Exact row/column orthogonality of the character table, dimension column,
/// and sum of squared dimensions = m! for m <= n.
VerifyResult verify_orthogonality(int n);

/// Three-way character agreement (recursion, seminormal trace, Fock
/// pairing), skew full-cycle values, and branching multiplicities, m <= n.
VerifyResult verify_characters(int n);

/// Heisenberg commutation residuals vanish for |la| <= max_size and
/// 1 <= |n|,|k| <= max_index with the given cap.
VerifyResult verify_fock(int max_size, int max_index, int cap);

/// Boson-fermion correspondence residuals vanish for |la| <= max_size,
/// 1 <= n <= max_index.
VerifyResult verify_boson(int max_size, int max_index, int cap);

} // namespace symrep
