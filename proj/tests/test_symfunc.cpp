#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "symrep/character.hpp"
#include "symrep/schur.hpp"

using namespace symrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Coefficients of z^0..z^K in exp(sum_{n<=K} x_n z^n), the generating
// function that defines the elementary Schur polynomials.
std::vector<GradedPolynomial> generating_function(int K) {
    std::vector<GradedPolynomial> arg(K + 1);
    for (int n = 1; n <= K; ++n) arg[n] = GradedPolynomial::variable(n);

    std::vector<GradedPolynomial> out(K + 1);
    out[0] = GradedPolynomial::constant(1);
    std::vector<GradedPolynomial> pw = out; // arg^m, updated in place
    Rational mfact = 1;
    for (int m = 1; m <= K; ++m) {
        std::vector<GradedPolynomial> next(K + 1);
        for (int i = 0; i <= K; ++i)
            for (int j = 1; i + j <= K; ++j)
                next[i + j] = next[i + j] + pw[i] * arg[j];
        pw = next;
        mfact *= m;
        const Rational inv = Rational(1) / mfact;
        for (int d = 0; d <= K; ++d) out[d] = out[d] + pw[d] * inv;
    }
    return out;
}

// The pairing computed the long way: substitute x_n -> (1/n) d/dx_n in f,
// apply the resulting operator to g, take the value at 0.
Rational pairing_by_differentiation(const GradedPolynomial& f,
                                    const GradedPolynomial& g) {
    Rational total = 0;
    for (const auto& [exps, c] : f.terms()) {
        GradedPolynomial cur = g;
        Rational scale = c;
        for (size_t i = 0; i < exps.size(); ++i)
            for (int t = 0; t < exps[i]; ++t) {
                cur = cur.derivative(static_cast<int>(i) + 1);
                scale /= static_cast<int>(i) + 1;
            }
        total += scale * cur.constant_term();
    }
    return total;
}

} // namespace

TEST_CASE("elementary schur polynomials") {
    CHECK(elementary_schur(-3).is_zero());
    CHECK(elementary_schur(0) == GradedPolynomial::constant(1));
    CHECK(elementary_schur(1) == GradedPolynomial::variable(1));

    GradedPolynomial s2;
    s2.add_term({2}, Rational(1, 2));
    s2.add_term({0, 1}, 1);
    CHECK(elementary_schur(2) == s2);

    GradedPolynomial s4;
    s4.add_term({4}, Rational(1, 24));
    s4.add_term({2, 1}, Rational(1, 2));
    s4.add_term({0, 2}, Rational(1, 2));
    s4.add_term({1, 0, 1}, 1);
    s4.add_term({0, 0, 0, 1}, 1);
    CHECK(elementary_schur(4) == s4);

    const auto gf = generating_function(8);
    for (int k = 0; k <= 8; ++k) {
        CHECK(elementary_schur(k) == gf[k]);
        CHECK(elementary_schur(k).is_homogeneous(k));
    }
}

TEST_CASE("schur polynomials, frozen shapes") {
    CHECK(schur_poly(Partition{}) == GradedPolynomial::constant(1));
    CHECK(schur_poly(P({3})) == elementary_schur(3));

    GradedPolynomial s11;
    s11.add_term({2}, Rational(1, 2));
    s11.add_term({0, 1}, -1);
    CHECK(schur_poly(P({1, 1})) == s11);

    GradedPolynomial s21;
    s21.add_term({3}, Rational(1, 3));
    s21.add_term({0, 0, 1}, -1);
    CHECK(schur_poly(P({2, 1})) == s21);

    GradedPolynomial s22;
    s22.add_term({4}, Rational(1, 12));
    s22.add_term({1, 0, 1}, -1);
    s22.add_term({0, 2}, 1);
    CHECK(schur_poly(P({2, 2})) == s22);

    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            CHECK(schur_poly(la).is_homogeneous(n));
}

TEST_CASE("power sum monomials") {
    CHECK(power_monomial(Partition{}) == GradedPolynomial::constant(1));
    GradedPolynomial p21;
    p21.add_term({1, 1}, 2);
    CHECK(power_monomial(P({2, 1})) == p21);
    GradedPolynomial p33;
    p33.add_term({0, 0, 2}, 9);
    CHECK(power_monomial(P({3, 3})) == p33);
}

TEST_CASE("frobenius expansion") {
    const auto ones = frobenius_expand(P({1, 1}));
    CHECK(ones.at(P({2})) == 1);
    CHECK(ones.at(P({1, 1})) == 1);
    const auto two = frobenius_expand(P({2}));
    CHECK(two.at(P({2})) == 1);
    CHECK(two.at(P({1, 1})) == -1);

    // P_rho = sum_la chi^la(c_rho) S_la as polynomials.
    for (int n = 1; n <= 5; ++n)
        for (const Partition& rho : partitions_of(n)) {
            GradedPolynomial sum;
            for (const auto& [la, chi] : frobenius_expand(rho)) {
                CHECK(chi == mn_character(la, rho));
                sum = sum + schur_poly(la) * Rational(chi);
            }
            CHECK(sum == power_monomial(rho));
        }
}

TEST_CASE("schur via characters equals jacobi-trudi") {
    for (int n = 0; n <= 6; ++n)
        for (const Partition& la : partitions_of(n))
            CHECK(schur_in_monomials(la) == schur_poly(la));
}

TEST_CASE("contravariant form on monomials") {
    const auto one = GradedPolynomial::constant(1);
    CHECK(contravariant_form(one, one) == 1);

    GradedPolynomial x1sq;
    x1sq.add_term({2}, 1);
    GradedPolynomial x2;
    x2.add_term({0, 1}, 1);
    CHECK(contravariant_form(x1sq, x1sq) == 2);
    CHECK(contravariant_form(x2, x2) == Rational(1, 2));
    CHECK(contravariant_form(x1sq, x2) == 0);

    GradedPolynomial x1x2;
    x1x2.add_term({1, 1}, 1);
    CHECK(contravariant_form(x1x2, x1x2) == Rational(1, 2));
}

TEST_CASE("contravariant form matches differentiation") {
    std::vector<GradedPolynomial> samples;
    for (int n = 0; n <= 4; ++n)
        for (const Partition& la : partitions_of(n)) {
            samples.push_back(schur_poly(la));
            samples.push_back(power_monomial(la));
        }
    samples.push_back(samples[3] * samples[5]);
    for (const auto& f : samples)
        for (const auto& g : samples)
            CHECK(contravariant_form(f, g) == pairing_by_differentiation(f, g));
}

TEST_CASE("schur orthonormality and character recovery") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n)) {
            const auto s_la = schur_poly(la);
            for (const Partition& mu : partitions_of(n))
                CHECK(contravariant_form(s_la, schur_poly(mu)) ==
                      Rational(la == mu ? 1 : 0));
            for (const Partition& rho : partitions_of(n))
                CHECK(contravariant_form(s_la, power_monomial(rho)) ==
                      Rational(mn_character(la, rho)));
        }
}

TEST_CASE("graded degree") {
    CHECK(GradedPolynomial::degree({1, 2}) == 5);
    CHECK(GradedPolynomial::degree({}) == 0);
    GradedPolynomial mixed;
    mixed.add_term({1}, 1);
    mixed.add_term({0, 1}, 1);
    CHECK_FALSE(mixed.is_homogeneous(1));
}
