#include "symrep/seminormal.hpp"

#include <algorithm>
#include <map>

namespace symrep {

namespace {

int find_index(const std::vector<StandardTableau>& basis, const StandardTableau& t) {
    auto it = std::lower_bound(
        basis.begin(), basis.end(), t,
        [](const StandardTableau& a, const StandardTableau& b) {
            return a.content_vector() < b.content_vector();
        });
    if (it == basis.end() || !(*it == t))
        throw domain_error("tableau not found in basis");
    return static_cast<int>(it - basis.begin());
}

} // namespace

SeminormalRep seminormal_rep(const Partition& la) {
    if (la.empty()) throw domain_error("seminormal_rep: empty partition");
    SeminormalRep rep;
    rep.lambda = la;
    rep.basis = standard_tableaux(la);
    const int n = la.size();
    const std::size_t d = rep.basis.size();

    std::vector<int> lengths(d);
    for (std::size_t j = 0; j < d; ++j)
        lengths[j] = coxeter_length(tableau_word(rep.basis[j]));

    for (int k = 1; k < n; ++k) {
        ExactMatrix g(d);
        for (std::size_t j = 0; j < d; ++j) {
            const StandardTableau& t = rep.basis[j];
            const int diff = t.box_of(k + 1).content() - t.box_of(k).content();
            if (diff == 1 || diff == -1) {
                // k and k+1 adjacent in a row (+1) or a column (-1).
                g(j, j) = diff;
                continue;
            }
            const Rational rho = Rational(1) / diff;
            const StandardTableau s = admissible_transposition(t, k);
            const int i = find_index(rep.basis, s);
            g(j, j) = rho;
            // In the tableau's own normalization the partner coefficient is
            // 1 going up in length and 1 - rho^2 coming down.
            if (lengths[i] > lengths[j])
                g(i, j) = 1;
            else
                g(i, j) = 1 - rho * rho;
        }
        rep.gens.push_back(std::move(g));
    }
    return rep;
}

ExactMatrix rep_matrix(const SeminormalRep& rep, const Permutation& w) {
    if (w.degree() != rep.n())
        throw domain_error("permutation degree does not match representation");
    ExactMatrix m = ExactMatrix::identity(rep.dim());
    for (int k : reduced_word(w)) m = m * rep.gens[k - 1];
    return m;
}

ExactMatrix jm_matrix(const SeminormalRep& rep, int k) {
    if (k < 1 || k > rep.n()) throw domain_error("jm_matrix: k out of range");
    ExactMatrix m(rep.dim());
    for (int a = 1; a < k; ++a)
        m = m + rep_matrix(rep, Permutation::transposition(a, k, rep.n()));
    return m;
}

} // namespace symrep
