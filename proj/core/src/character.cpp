#include "symrep/character.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

#include "symrep/tableau.hpp"

namespace symrep {

namespace {

using MemoKey = std::tuple<Partition, Partition, Partition>;

// Partitions nu with inner <= nu <= outer, |outer/nu| = strip, and
// outer/nu a skew hook; paired with (-1)^leg.
std::vector<std::pair<Partition, int>> strip_removals(const Partition& outer,
                                                      const Partition& inner,
                                                      int strip) {
    std::vector<std::pair<Partition, int>> out;
    for (const Partition& nu : partitions_of(outer.size() - strip)) {
        if (!outer.contains(nu) || !nu.contains(inner)) continue;
        SkewShape hook(outer, nu);
        if (!is_skew_hook(hook)) continue;
        out.emplace_back(nu, leg(hook) % 2 == 0 ? 1 : -1);
    }
    return out;
}

Integer mn_recurse(const Partition& outer, const Partition& inner,
                   const Partition& rho, std::map<MemoKey, Integer>& memo) {
    if (rho.size() == 0) return 1;
    const MemoKey key{outer, inner, rho};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int strip = rho.parts().front();
    std::vector<int> rest_parts(rho.parts().begin() + 1, rho.parts().end());
    const Partition rest(rest_parts);

    Integer total = 0;
    for (const auto& [nu, sign] : strip_removals(outer, inner, strip))
        total += sign * mn_recurse(nu, inner, rest, memo);
    memo.emplace(key, total);
    return total;
}

std::map<MemoKey, Integer>& shared_memo() {
    static std::map<MemoKey, Integer> memo;
    return memo;
}
std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

Integer mn_character(const SkewShape& shape, const Partition& rho) {
    if (shape.size() != rho.size())
        throw domain_error("mn_character: shape size and cycle type size differ");
    std::lock_guard<std::mutex> lock(memo_mutex());
    return mn_recurse(shape.outer(), shape.inner(), rho, shared_memo());
}

Integer hook_cycle_character(const SkewShape& shape) {
    if (shape.size() == 0) throw domain_error("hook_cycle_character: empty shape");
    if (!is_skew_hook(shape)) return 0;
    return leg(shape) % 2 == 0 ? 1 : -1;
}

CharacterTable character_table(int n, int cap) {
    if (n < 1) throw domain_error("character_table: n must be >= 1");
    if (n > cap) throw resource_error("character_table: n exceeds the configured cap");
    CharacterTable t;
    t.n = n;
    t.row_labels = partitions_of(n);
    t.col_labels = t.row_labels;
    for (const Partition& rho : t.col_labels) t.class_sizes.push_back(class_size(rho));
    for (const Partition& la : t.row_labels) {
        std::vector<Integer> row;
        row.reserve(t.col_labels.size());
        for (const Partition& rho : t.col_labels) row.push_back(mn_character(la, rho));
        t.entries.push_back(std::move(row));
    }
    return t;
}

std::map<Partition, Integer> restriction_multiplicities(const Partition& la) {
    const int n = la.size();
    if (n < 1) throw domain_error("restriction_multiplicities: empty partition");
    const Integer order = factorial(n - 1);
    std::map<Partition, Integer> out;
    for (const Partition& mu : partitions_of(n - 1)) {
        Integer sum = 0;
        for (const Partition& rho : partitions_of(n - 1)) {
            // Embed the S_{n-1} class into S_n by appending a fixed point.
            auto parts = rho.parts();
            parts.push_back(1);
            std::sort(parts.rbegin(), parts.rend());
            sum += class_size(rho) * mn_character(la, Partition(parts)) *
                   mn_character(mu, rho);
        }
        if (sum % order != 0)
            throw domain_error("restriction inner product is not integral");
        Integer mult = sum / order;
        if (mult != 0) out.emplace(mu, mult);
    }
    return out;
}

GroupAlgebraElement algebra_identity(int n) {
    GroupAlgebraElement e;
    e.n = n;
    e.add(Permutation::identity(n), 1);
    return e;
}

GroupAlgebraElement convolve(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n != b.n) throw domain_error("convolve: mismatched group degrees");
    GroupAlgebraElement out;
    out.n = a.n;
    for (const auto& [g, cg] : a.coeffs)
        for (const auto& [h, ch] : b.coeffs) out.add(g.compose(h), cg * ch);
    return out;
}

GroupAlgebraElement central_idempotent(int n, const Partition& la, int cap) {
    if (la.size() != n) throw domain_error("central_idempotent: |la| must equal n");
    if (n > cap) throw resource_error("central_idempotent: n exceeds the configured cap");
    const Integer dim = hook_dimension(la);
    const Integer order = factorial(n);
    // chi(g^{-1}) = chi(g) in S_n since g and g^{-1} share a cycle type.
    std::map<Partition, Rational> by_type;
    for (const Partition& rho : partitions_of(n))
        by_type.emplace(rho, Rational(dim * mn_character(la, rho), order));
    GroupAlgebraElement e;
    e.n = n;
    for (const Permutation& g : all_permutations(n)) e.add(g, by_type.at(cycle_type(g)));
    return e;
}

} // namespace symrep
