#include "symrep/verify.hpp"

#include <cmath>

#include "symrep/character.hpp"
#include "symrep/fock.hpp"
#include "symrep/orthogonal.hpp"
#include "symrep/seminormal.hpp"

namespace symrep {

namespace {

bool float_equal(const FloatMatrix& a, const FloatMatrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

} // namespace

VerifyResult verify_coxeter(int n, double tol) {
    VerifyResult res;
    for (int m = 1; m <= n; ++m) {
        for (const Partition& la : partitions_of(m)) {
            const std::string tag = "lambda=" + la.to_string();
            const SeminormalRep rep = seminormal_rep(la);
            const auto id = ExactMatrix::identity(rep.dim());
            const int g = m - 1;
            for (int k = 0; k < g; ++k) {
                if (!(rep.gens[k] * rep.gens[k] == id))
                    res.note(tag + ": seminormal s_" + std::to_string(k + 1) + "^2 != 1");
                if (k + 1 < g) {
                    const auto& a = rep.gens[k];
                    const auto& b = rep.gens[k + 1];
                    if (!(a * b * a == b * a * b))
                        res.note(tag + ": seminormal braid relation fails at k=" +
                                 std::to_string(k + 1));
                }
                for (int j = k + 2; j < g; ++j)
                    if (!(rep.gens[k] * rep.gens[j] == rep.gens[j] * rep.gens[k]))
                        res.note(tag + ": seminormal commuting relation fails");
            }
            // JM spectrum and the defining relation s_k L_k = L_{k+1} s_k - 1.
            std::vector<ExactMatrix> jm;
            for (int k = 1; k <= m; ++k) jm.push_back(jm_matrix(rep, k));
            for (int k = 1; k <= m; ++k) {
                for (std::size_t r = 0; r < rep.dim(); ++r)
                    for (std::size_t c = 0; c < rep.dim(); ++c) {
                        const Rational expect =
                            (r == c) ? Rational(rep.basis[r].box_of(k).content()) : Rational(0);
                        if (jm[k - 1](r, c) != expect) {
                            res.note(tag + ": L_" + std::to_string(k) +
                                     " is not diagonal with content entries");
                            r = c = rep.dim();
                        }
                    }
            }
            for (int k = 1; k < m; ++k)
                if (!(rep.gens[k - 1] * jm[k - 1] == jm[k] * rep.gens[k - 1] - id))
                    res.note(tag + ": s_k L_k = L_{k+1} s_k - 1 fails at k=" +
                             std::to_string(k));

            const OrthogonalRep orep = orthogonal_rep(la);
            const auto fid = FloatMatrix::identity(orep.dim());
            for (int k = 0; k < g; ++k) {
                const auto& gk = orep.gens[k];
                if (!(gk == gk.transpose()))
                    res.note(tag + ": orthogonal generator not symmetric");
                if (!float_equal(gk.transpose() * gk, fid, tol))
                    res.note(tag + ": orthogonal generator fails G^T G = I");
                if (!float_equal(gk * gk, fid, tol))
                    res.note(tag + ": orthogonal s^2 != 1");
                if (k + 1 < g &&
                    !float_equal(gk * orep.gens[k + 1] * gk,
                                 orep.gens[k + 1] * gk * orep.gens[k + 1], tol))
                    res.note(tag + ": orthogonal braid relation fails");
                for (int j = k + 2; j < g; ++j)
                    if (!float_equal(gk * orep.gens[j], orep.gens[j] * gk, tol))
                        res.note(tag + ": orthogonal commuting relation fails");
            }
            // Conjugate forms share traces on every generator.
            for (int k = 0; k < g; ++k) {
                const double exact = static_cast<double>(rep.gens[k].trace());
                if (std::fabs(exact - orep.gens[k].trace()) > tol)
                    res.note(tag + ": seminormal and orthogonal traces differ");
            }
        }
    }
    return res;
}

VerifyResult verify_orthogonality(int n) {
    VerifyResult res;
    for (int m = 1; m <= n; ++m) {
        const CharacterTable t = character_table(m, n);
        const std::size_t r = t.row_labels.size();
        const Integer order = factorial(m);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                Integer sum = 0;
                for (std::size_t k = 0; k < r; ++k)
                    sum += t.class_sizes[k] * t.entries[i][k] * t.entries[j][k];
                const Integer expect = (i == j) ? order : Integer(0);
                if (sum != expect)
                    res.note("n=" + std::to_string(m) + ": row orthogonality fails");
            }
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < r; ++k) {
                Integer sum = 0;
                for (std::size_t i = 0; i < r; ++i)
                    sum += t.entries[i][j] * t.entries[i][k];
                const Integer expect = (j == k) ? order / t.class_sizes[j] : Integer(0);
                if (sum != expect)
                    res.note("n=" + std::to_string(m) + ": column orthogonality fails");
            }
        // The identity class (1,...,1) is last in decreasing lex order.
        Integer sq = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const Integer d = t.entries[i][r - 1];
            if (d != hook_dimension(t.row_labels[i]))
                res.note("n=" + std::to_string(m) + ": dimension column mismatch");
            sq += d * d;
        }
        if (sq != order)
            res.note("n=" + std::to_string(m) + ": sum of squared dimensions != n!");
    }
    return res;
}

VerifyResult verify_characters(int n) {
    VerifyResult res;
    for (int m = 1; m <= n; ++m) {
        for (const Partition& la : partitions_of(m)) {
            const SeminormalRep rep = seminormal_rep(la);
            for (const Partition& rho : partitions_of(m)) {
                const Integer mn = mn_character(la, rho);
                const Integer fock = fock_character(la, rho);
                const Rational tr = rep_matrix(rep, class_representative(rho)).trace();
                if (Rational(mn) != tr || mn != fock)
                    res.note("chi disagreement at lambda=" + la.to_string() +
                             " rho=" + rho.to_string());
            }
            // Branching must be the removable-node indicator.
            if (m >= 1) {
                auto mult = restriction_multiplicities(la);
                std::map<Partition, Integer> expect;
                for (const Node& a : removable_nodes(la))
                    expect.emplace(la.with_removed(a), 1);
                if (mult != expect)
                    res.note("branching mismatch at lambda=" + la.to_string());
            }
        }
        // Skew full-cycle values against the closed form.
        for (const Partition& la : partitions_of(m))
            for (int inner_size = 0; inner_size < m; ++inner_size)
                for (const Partition& mu : partitions_of(inner_size)) {
                    if (!la.contains(mu)) continue;
                    const SkewShape s(la, mu);
                    const Partition full(std::vector<int>{s.size()});
                    if (hook_cycle_character(s) != mn_character(s, full))
                        res.note("skew full-cycle mismatch at " + la.to_string() +
                                 "/" + mu.to_string());
                }
    }
    return res;
}

VerifyResult verify_fock(int max_size, int max_index, int cap) {
    VerifyResult res;
    for (int sz = 0; sz <= max_size; ++sz)
        for (const Partition& la : partitions_of(sz))
            for (int a = 1; a <= max_index; ++a)
                for (int b = 1; b <= max_index; ++b)
                    for (int sa : {1, -1})
                        for (int sb : {1, -1}) {
                            const int n = sa * a, k = sb * b;
                            if (sz + std::abs(n) + std::abs(k) > cap) continue;
                            if (!heisenberg_residual(n, k, la, cap).is_zero())
                                res.note("Heisenberg residual nonzero at lambda=" +
                                         la.to_string() + " n=" + std::to_string(n) +
                                         " k=" + std::to_string(k));
                        }
    return res;
}

VerifyResult verify_boson(int max_size, int max_index, int cap) {
    VerifyResult res;
    for (int sz = 0; sz <= max_size; ++sz)
        for (const Partition& la : partitions_of(sz))
            for (int n = 1; n <= max_index; ++n) {
                if (sz + n > cap) continue;
                const BosonResidual r = boson_image_residual(la, n, cap);
                if (!r.raising.is_zero() || !r.lowering.is_zero())
                    res.note("boson-fermion residual nonzero at lambda=" +
                             la.to_string() + " n=" + std::to_string(n));
            }
    return res;
}

} // namespace symrep
