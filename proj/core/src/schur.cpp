#include "symrep/schur.hpp"

#include "symrep/character.hpp"

namespace symrep {

GradedPolynomial elementary_schur(int k) {
    GradedPolynomial p;
    if (k < 0) return p;
    for (const Partition& mu : partitions_of(k)) {
        // mu as exponent multiplicities: x_i^{l_i} with coefficient 1/prod l_i!.
        GradedPolynomial::Exponents exps(k, 0);
        for (int part : mu.parts()) ++exps[part - 1];
        Integer denom = 1;
        for (int e : exps) denom *= factorial(e);
        p.add_term(std::move(exps), Rational(Integer(1), denom));
    }
    return p;
}

namespace {

// Cofactor expansion along the first row.  Shapes at desk scale have few
// rows, so the factorial blowup never bites.
GradedPolynomial poly_det(const std::vector<std::vector<GradedPolynomial>>& m) {
    const size_t n = m.size();
    if (n == 0) return GradedPolynomial::constant(1);
    if (n == 1) return m[0][0];
    GradedPolynomial det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<GradedPolynomial>> minor(n - 1);
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        GradedPolynomial term = m[0][j] * poly_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace

GradedPolynomial schur_poly(const Partition& la) {
    const int l = la.rows();
    std::vector<std::vector<GradedPolynomial>> m(l, std::vector<GradedPolynomial>(l));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            m[i - 1][j - 1] = elementary_schur(la.row(i) + j - i);
    return poly_det(m);
}

GradedPolynomial power_monomial(const Partition& rho) {
    GradedPolynomial p = GradedPolynomial::constant(1);
    for (int part : rho.parts())
        p = p * (GradedPolynomial::variable(part) * Rational(part));
    return p;
}

std::map<Partition, Integer> frobenius_expand(const Partition& rho, int cap) {
    if (rho.size() > cap)
        throw resource_error("frobenius_expand: |rho| exceeds the configured cap");
    std::map<Partition, Integer> out;
    for (const Partition& la : partitions_of(rho.size())) {
        Integer chi = mn_character(la, rho);
        if (chi != 0) out.emplace(la, chi);
    }
    return out;
}

GradedPolynomial schur_in_monomials(const Partition& la, int cap) {
    if (la.size() > cap)
        throw resource_error("schur_in_monomials: |la| exceeds the configured cap");
    GradedPolynomial p;
    for (const Partition& rho : partitions_of(la.size())) {
        // x^rho / Z_rho with Z_rho = prod l_i! over part multiplicities.
        GradedPolynomial::Exponents exps;
        for (int part : rho.parts()) {
            if (static_cast<int>(exps.size()) < part) exps.resize(part, 0);
            ++exps[part - 1];
        }
        Integer z = 1;
        for (int e : exps) z *= factorial(e);
        p.add_term(std::move(exps), Rational(mn_character(la, rho), z));
    }
    return p;
}

Rational contravariant_form(const GradedPolynomial& f, const GradedPolynomial& g) {
    Rational total = 0;
    for (const auto& [e, cf] : f.terms()) {
        auto it = g.terms().find(e);
        if (it == g.terms().end()) continue;
        // Matching monomials pair to prod a_i! / i^{a_i}.
        Rational weight = 1;
        for (size_t i = 0; i < e.size(); ++i) {
            weight *= factorial(e[i]);
            for (int t = 0; t < e[i]; ++t) weight /= Integer(i + 1);
        }
        total += cf * it->second * weight;
    }
    return total;
}

} // namespace symrep
