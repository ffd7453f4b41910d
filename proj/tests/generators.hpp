#pragma once

// Shared randomized-instance builders for the test and acceptance suites.

#include <vector>

#include "borelkit/borel.hpp"
#include "borelkit/ideal.hpp"
#include "borelkit/rng.hpp"

namespace borelkit::testing {

inline Monomial random_monomial(Rng& rng, int nvars, std::int64_t max_degree) {
    std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars), 0);
    std::int64_t degree = rng.uniform(1, max_degree);
    for (std::int64_t t = 0; t < degree; ++t) {
        exp[static_cast<std::size_t>(rng.uniform(1, nvars)) - 1] += 1;
    }
    return Monomial(std::move(exp));
}

/// Arbitrary nonzero, non-unit monomial ideal: not Borel type in general.
inline MonomialIdeal random_ideal(Rng& rng, const RingContext& ctx, int max_gens,
                                  std::int64_t max_degree) {
    for (;;) {
        std::vector<Monomial> gens;
        int count = static_cast<int>(rng.uniform(1, max_gens));
        for (int i = 0; i < count; ++i) {
            gens.push_back(random_monomial(rng, ctx.nvars(), max_degree));
        }
        MonomialIdeal ideal(ctx, std::move(gens));
        if (!ideal.is_zero() && !ideal.is_unit()) {
            return ideal;
        }
    }
}

/// Feasible random budget for random_borel over this ring.
inline BorelBudget random_budget(Rng& rng, int nvars, std::int64_t max_exponent = 3) {
    BorelBudget budget;
    budget.q = static_cast<int>(rng.uniform(1, nvars));
    budget.max_exponent = rng.uniform(1, max_exponent);
    budget.stratum_sizes.push_back(static_cast<int>(rng.uniform(0, 2)));
    for (int i = 1; i <= nvars - budget.q; ++i) {
        int previous = budget.stratum_sizes.back();
        bool can_grow = i == 1 || previous > 0;
        budget.stratum_sizes.push_back(can_grow ? static_cast<int>(rng.uniform(0, 2)) : 0);
    }
    return budget;
}

inline MonomialIdeal random_borel_sample(Rng& rng, const RingContext& ctx,
                                         std::int64_t max_exponent = 3) {
    return random_borel(ctx, random_budget(rng, ctx.nvars(), max_exponent), rng.next());
}

}  // namespace borelkit::testing
