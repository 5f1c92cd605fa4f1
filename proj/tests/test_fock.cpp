#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symrep/character.hpp"
#include "symrep/fock.hpp"
#include "symrep/schur.hpp"
#include "symrep/verify.hpp"

using namespace symrep;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

} // namespace

TEST_CASE("hook operators, explicit values") {
    const auto v1 = FockVector::basis(P({1}));
    const auto out = lambda_op(1, v1);
    REQUIRE(out.terms.size() == 1);
    CHECK(out.terms.at(Partition{}) == 1);

    const auto raised = lambda_op(-2, FockVector::basis(Partition{}));
    REQUIRE(raised.terms.size() == 2);
    CHECK(raised.terms.at(P({2})) == 1);
    CHECK(raised.terms.at(P({1, 1})) == -1);

    const auto lowered = lambda_op(2, FockVector::basis(P({2, 2})));
    REQUIRE(lowered.terms.size() == 2);
    CHECK(lowered.terms.at(P({2})) == 1);
    CHECK(lowered.terms.at(P({1, 1})) == -1);

    CHECK(lambda_op(3, FockVector::basis(P({2}))).is_zero());
    CHECK_THROWS_AS(lambda_op(0, v1), domain_error);
}

TEST_CASE("truncation is an error, not silent") {
    auto v = FockVector::basis(P({3}), 4);
    CHECK_NOTHROW(lambda_op(-1, v));
    CHECK_THROWS_AS(lambda_op(-2, v), truncation_error);
}

TEST_CASE("graded dimensions") {
    // Every degree-6 basis vector is reachable from the vacuum by raising
    // operators, so the degree-6 component has dimension p(6).
    std::set<Partition> reached{Partition{}};
    for (int step = 0; step < 6; ++step) {
        std::set<Partition> next;
        for (const Partition& la : reached)
            for (int k = 1; k <= 6; ++k) {
                if (la.size() + k > 6) continue;
                const auto out = lambda_op(-k, FockVector::basis(la, 6));
                for (const auto& [mu, c] : out.terms) next.insert(mu);
            }
        reached.insert(next.begin(), next.end());
    }
    int count = 0;
    for (const Partition& la : reached)
        if (la.size() == 6) ++count;
    CHECK(count == static_cast<int>(partitions_of(6).size()));
}

TEST_CASE("heisenberg relations") {
    // [Lambda_2, Lambda_{-2}] v_0 = 2 v_0, written out by hand.
    const auto up = lambda_op(-2, FockVector::basis(Partition{}, 8));
    const auto down_up = lambda_op(2, up);
    REQUIRE(down_up.terms.size() == 1);
    CHECK(down_up.terms.at(Partition{}) == 2);

    CHECK(heisenberg_residual(2, -2, Partition{}, 8).is_zero());
    CHECK(heisenberg_residual(1, 1, P({2, 1}), 10).is_zero());
    CHECK(heisenberg_residual(-2, 3, P({1, 1}), 12).is_zero());

    const auto result = verify_fock(6, 3, 14);
    for (const auto& f : result.failures) MESSAGE(f);
    CHECK(result.ok());
}

TEST_CASE("characters by hook removal") {
    CHECK(fock_character(P({2, 1}), P({3})) == -1);
    CHECK(fock_character(P({2, 2}), P({2, 2})) == 2);
    CHECK(fock_character(P({2, 2}), P({2, 1, 1})) == 0);
    for (int n = 1; n <= 5; ++n)
        for (const Partition& la : partitions_of(n))
            for (const Partition& rho : partitions_of(n))
                CHECK(fock_character(la, rho) == mn_character(la, rho));
}

TEST_CASE("boson-fermion correspondence residuals") {
    for (int n = 1; n <= 3; ++n) {
        const auto r0 = boson_image_residual(Partition{}, n);
        CHECK(r0.raising.is_zero());
        CHECK(r0.lowering.is_zero());
    }
    const auto r = boson_image_residual(P({2, 1}), 2);
    CHECK(r.raising.is_zero());
    CHECK(r.lowering.is_zero());

    const auto result = verify_boson(5, 3, 12);
    for (const auto& f : result.failures) MESSAGE(f);
    CHECK(result.ok());
}

TEST_CASE("pairing") {
    auto v = FockVector::basis(P({2}));
    auto w = FockVector::basis(P({1, 1}));
    CHECK(v.pair(v) == 1);
    CHECK(v.pair(w) == 0);
    const auto mix = v - w;
    CHECK(mix.pair(mix) == 2);
}
