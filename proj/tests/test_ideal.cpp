#include "borelkit/ideal.hpp"

#include <algorithm>

#include "borelkit/json_io.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace borelkit;
using testing::random_ideal;

namespace {

const RingContext kR2(2);
const RingContext kR3(3);

Monomial m(std::vector<std::int64_t> exp) { return Monomial(std::move(exp)); }

MonomialIdeal ideal2(std::vector<Monomial> gens) { return MonomialIdeal(kR2, std::move(gens)); }

// Brute-force membership semantics oracle: checks a predicate against every
// monomial up to the given degree.
template <class Pred>
bool holds_up_to_degree(int nvars, std::int64_t max_degree, Pred&& pred) {
    for (std::int64_t d = 0; d <= max_degree; ++d) {
        for (const Monomial& u : monomials_of_degree(nvars, d)) {
            if (!pred(u)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_CASE("minimalize produces the divisibility antichain") {
    MonomialIdeal a = ideal2({m({2, 0}), m({3, 0}), m({1, 1})});
    CHECK(a.generators() == std::vector<Monomial>{m({2, 0}), m({1, 1})});

    MonomialIdeal b = ideal2({Monomial::unit(2), m({1, 0})});
    CHECK(b.is_unit());
    CHECK(b.generators() == std::vector<Monomial>{Monomial::unit(2)});

    MonomialIdeal c(kR3, {m({1, 1, 0}), m({0, 1, 1}), m({1, 0, 1})});
    CHECK(c.generators().size() == 3);

    CHECK(MonomialIdeal(kR2).is_zero());
}

TEST_CASE("minimalize is idempotent and order independent") {
    Rng rng(101);
    for (int iter = 0; iter < 100; ++iter) {
        int n = static_cast<int>(rng.uniform(2, 4));
        RingContext ctx(n);
        MonomialIdeal ideal = random_ideal(rng, ctx, 8, 5);
        std::vector<Monomial> gens = ideal.generators();
        for (int shuffle = 0; shuffle < 3; ++shuffle) {
            for (std::size_t i = gens.size(); i > 1; --i) {
                std::swap(gens[i - 1],
                          gens[static_cast<std::size_t>(rng.uniform(0,
                              static_cast<std::int64_t>(i) - 1))]);
            }
            CHECK(MonomialIdeal(ctx, gens) == ideal);
        }
    }
}

TEST_CASE("membership") {
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(ideal.contains(m({2, 1})));
    CHECK_FALSE(ideal.contains(m({0, 3})));
    CHECK_FALSE(MonomialIdeal(kR2).contains(m({1, 1})));
    CHECK(MonomialIdeal::unit_ideal(kR2).contains(Monomial::unit(2)));
}

TEST_CASE("sum, product, intersection") {
    MonomialIdeal x1 = ideal2({m({1, 0})});
    MonomialIdeal x2 = ideal2({m({0, 1})});
    CHECK(x1 * x2 == ideal2({m({1, 1})}));
    CHECK(intersect(ideal2({m({2, 0})}), x2) == ideal2({m({2, 1})}));
    CHECK(ideal2({m({2, 0}), m({1, 1})}) * x1 == ideal2({m({3, 0}), m({2, 1})}));
}

TEST_CASE("colon by a monomial") {
    CHECK(colon(ideal2({m({2, 0}), m({1, 1})}), m({1, 0})) ==
          ideal2({m({1, 0}), m({0, 1})}));
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(colon(ideal, Monomial::unit(2)) == ideal);
    CHECK(colon(ideal2({m({0, 2})}), m({0, 1})) == ideal2({m({0, 1})}));
}

TEST_CASE("colon by an ideal") {
    CHECK(colon(ideal2({m({1, 1})}), ideal2({m({1, 0}), m({0, 1})})) ==
          ideal2({m({1, 1})}));
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(colon(ideal, MonomialIdeal::unit_ideal(kR2)) == ideal);
    CHECK(colon(ideal2({m({1, 0})}), ideal2({m({0, 1})})) == ideal2({m({1, 0})}));
    CHECK_THROWS_AS(colon(ideal, MonomialIdeal(kR2)), DegenerateIdealError);
}

TEST_CASE("saturation by a monomial") {
    CHECK(saturate(ideal2({m({0, 2})}), m({0, 1})) == MonomialIdeal::unit_ideal(kR2));
    CHECK(saturate(ideal2({m({2, 1})}), m({0, 1})) == ideal2({m({2, 0})}));
    CHECK(saturate(ideal2({m({1, 0})}), m({0, 1})) == ideal2({m({1, 0})}));
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(saturate(ideal, Monomial::unit(2)) == ideal);
}

TEST_CASE("saturation by an ideal") {
    MonomialIdeal maximal = prefix_ideal(kR2, 2);
    CHECK(saturate(ideal2({m({0, 2})}), maximal) == ideal2({m({0, 2})}));
    CHECK(saturate(ideal2({m({2, 0}), m({1, 1})}), maximal) == ideal2({m({1, 0})}));
    CHECK(saturate(MonomialIdeal::unit_ideal(kR2), maximal) ==
          MonomialIdeal::unit_ideal(kR2));
    // Needs more colon rounds than 1 + max exponent; exercises the larger cap.
    CHECK(saturate(ideal2({m({3, 0}), m({0, 3})}), maximal) ==
          MonomialIdeal::unit_ideal(kR2));
}

TEST_CASE("prefix ideals") {
    CHECK(prefix_ideal(kR3, 1) == MonomialIdeal(kR3, {m({1, 0, 0})}));
    CHECK(prefix_ideal(kR3, 2) == MonomialIdeal(kR3, {m({1, 0, 0}), m({0, 1, 0})}));
    CHECK(prefix_ideal(kR2, 2).generators().size() == 2);
    CHECK_THROWS_AS(prefix_ideal(kR2, 3), Error);
}

TEST_CASE("degree and max index") {
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(ideal_degree(ideal) == 2);
    CHECK(ideal_max_index(ideal) == 2);
    CHECK(ideal_degree(ideal2({m({1, 0})})) == 1);
    CHECK(ideal_max_index(ideal2({m({1, 0})})) == 1);
    MonomialIdeal mixed = ideal2({m({2, 0}), m({0, 3})});
    CHECK(ideal_degree(mixed) == 3);
    CHECK(ideal_max_index(mixed) == 2);
    CHECK_THROWS_AS(ideal_degree(MonomialIdeal(kR2)), DegenerateIdealError);
}

TEST_CASE("degree slices") {
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(degree_slice(ideal, 2) == std::vector<Monomial>{m({2, 0}), m({1, 1})});
    CHECK(degree_slice(ideal2({m({0, 2})}), 3) ==
          std::vector<Monomial>{m({1, 2}), m({0, 3})});
    CHECK(degree_slice(ideal, 1).empty());
}

TEST_CASE("truncation") {
    CHECK(truncate_from(ideal2({m({2, 0}), m({0, 3})}), 3) ==
          ideal2({m({3, 0}), m({2, 1}), m({0, 3})}));
    CHECK(truncate_from(ideal2({m({1, 0})}), 1) == ideal2({m({1, 0})}));
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(truncate_from(ideal, 2) == ideal);
    CHECK_THROWS_AS(truncate_from(ideal, 1), Error);
}

TEST_CASE("powers") {
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    CHECK(pow(ideal, 1) == ideal);
    CHECK(pow(prefix_ideal(kR2, 2), 2) == ideal2({m({2, 0}), m({1, 1}), m({0, 2})}));
    CHECK(pow(ideal, 2) == ideal2({m({4, 0}), m({3, 1}), m({2, 2})}));
}

TEST_CASE("ideal text form") {
    CHECK(to_string(ideal2({m({2, 0}), m({1, 1})})) == "ideal(x1^2, x1*x2)");
    CHECK(to_string(MonomialIdeal(kR2)) == "ideal()");
    CHECK(to_string(MonomialIdeal::unit_ideal(kR2)) == "ideal(1)");
}

TEST_CASE("ideal JSON form round trips and minimalizes") {
    MonomialIdeal ideal = ideal2({m({2, 0}), m({1, 1})});
    nlohmann::json j = to_json(ideal);
    CHECK(j.dump() == R"({"gens":[[2,0],[1,1]],"n":2})");
    CHECK(ideal_from_json(j) == ideal);

    // Non-minimal generator lists are accepted and minimalized.
    nlohmann::json raw = {{"n", 2}, {"gens", {{2, 0}, {3, 0}, {1, 1}}}};
    CHECK(ideal_from_json(raw) == ideal);

    Rng rng(2222);
    for (int iter = 0; iter < 40; ++iter) {
        int n = static_cast<int>(rng.uniform(2, 4));
        RingContext ctx(n);
        MonomialIdeal sample = random_ideal(rng, ctx, 6, 4);
        CHECK(ideal_from_json(to_json(sample)) == sample);
    }
}

TEST_CASE("membership semantics of sum, intersection, colon on random ideals") {
    Rng rng(202);
    for (int iter = 0; iter < 60; ++iter) {
        int n = static_cast<int>(rng.uniform(2, 3));
        RingContext ctx(n);
        MonomialIdeal a = random_ideal(rng, ctx, 5, 3);
        MonomialIdeal b = random_ideal(rng, ctx, 5, 3);
        std::int64_t limit = ideal_degree(a) + ideal_degree(b) + 2;
        MonomialIdeal sum = a + b;
        MonomialIdeal inter = intersect(a, b);
        MonomialIdeal quot = colon(a, b);
        bool ok = holds_up_to_degree(n, limit, [&](const Monomial& u) {
            if (sum.contains(u) != (a.contains(u) || b.contains(u))) {
                return false;
            }
            if (inter.contains(u) != (a.contains(u) && b.contains(u))) {
                return false;
            }
            bool lifts = true;
            for (const Monomial& v : b.generators()) {
                lifts = lifts && a.contains(u * v);
            }
            return quot.contains(u) == lifts;
        });
        CHECK(ok);
    }
}

TEST_CASE("saturation is a fixpoint and truncation brackets the ideal") {
    Rng rng(303);
    for (int iter = 0; iter < 60; ++iter) {
        int n = static_cast<int>(rng.uniform(2, 3));
        RingContext ctx(n);
        MonomialIdeal ideal = random_ideal(rng, ctx, 5, 4);
        Monomial v = testing::random_monomial(rng, n, 2);
        MonomialIdeal saturated = saturate(ideal, v);
        CHECK(colon(saturated, v) == saturated);

        std::int64_t e = ideal_degree(ideal) + rng.uniform(0, 2);
        MonomialIdeal truncated = truncate_from(ideal, e);
        CHECK(ideal.includes(truncated));
        bool members_agree = holds_up_to_degree(n, e + 2, [&](const Monomial& u) {
            if (u.degree() < e) {
                return true;
            }
            return ideal.contains(u) == truncated.contains(u);
        });
        CHECK(members_agree);
    }
}
