#include "symrep/orthogonal.hpp"

#include <algorithm>
#include <cmath>

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

OrthogonalRep orthogonal_rep(const SkewShape& shape) {
    if (shape.size() == 0) throw domain_error("orthogonal_rep: empty shape");
    OrthogonalRep rep;
    rep.shape = shape;
    rep.basis = standard_tableaux(shape);
    const int n = shape.size();
    const std::size_t d = rep.basis.size();

    for (int k = 1; k < n; ++k) {
        FloatMatrix g(d);
        for (std::size_t j = 0; j < d; ++j) {
            const StandardTableau& t = rep.basis[j];
            const int diff = t.box_of(k + 1).content() - t.box_of(k).content();
            if (diff == 1 || diff == -1) {
                g(j, j) = diff;
                continue;
            }
            const double rho = 1.0 / diff;
            const int i = find_index(rep.basis, admissible_transposition(t, k));
            g(j, j) = rho;
            g(static_cast<std::size_t>(i), j) = std::sqrt(1.0 - rho * rho);
        }
        rep.gens.push_back(std::move(g));
    }
    return rep;
}

FloatMatrix rep_matrix(const OrthogonalRep& rep, const Permutation& w) {
    if (w.degree() != rep.n())
        throw domain_error("permutation degree does not match representation");
    FloatMatrix m = FloatMatrix::identity(rep.dim());
    for (int k : reduced_word(w)) m = m * rep.gens[k - 1];
    return m;
}

bool natural_module_check(int n, double tol) {
    if (n < 2) throw domain_error("natural_module_check: n must be >= 2");
    // Basis v_j, 2 <= j <= n, expressed in the standard basis e_1..e_n.
    std::vector<std::vector<double>> v(n - 1, std::vector<double>(n, 0.0));
    for (int j = 2; j <= n; ++j) {
        const double norm = 1.0 / std::sqrt(double(j) * (j - 1));
        for (int i = 1; i < j; ++i) v[j - 2][i - 1] = norm;
        v[j - 2][j - 1] = -(j - 1) * norm;
    }

    const OrthogonalRep rep = orthogonal_rep(Partition(std::vector<int>{n - 1, 1}));
    if (rep.dim() != static_cast<std::size_t>(n - 1)) return false;

    for (int k = 1; k < n; ++k) {
        // Matrix of s_k on {v_j}: s_k permutes coordinates k, k+1; expand
        // the image in the v basis using orthonormality.
        FloatMatrix m(n - 1);
        for (int col = 0; col < n - 1; ++col) {
            std::vector<double> img = v[col];
            std::swap(img[k - 1], img[k]);
            for (int row = 0; row < n - 1; ++row) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += v[row][i] * img[i];
                m(row, col) = dot;
            }
        }
        if (max_abs_diff(m, rep.gens[k - 1]) > tol) return false;
    }
    return true;
}

} // namespace symrep
