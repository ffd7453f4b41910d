#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "borelkit/ideal.hpp"

namespace borelkit {

/// Witness for reg(I): the least e >= deg(I) whose truncation is stable,
/// together with the search trace and the bound that limited the search.
struct RegularityCertificate {
    std::int64_t reg = 0;
    /// Consecutive degrees from deg(I) up; every entry before the last is
    /// unstable, the last is stable with e == reg.
    std::vector<std::pair<std::int64_t, bool>> trace;
    /// m(I) * (deg(I) - 1) + 1.
    std::int64_t bound_used = 0;
};

struct StratumEntry {
    Monomial v;        // factor in the allowed variable prefix
    std::int64_t a;    // positive exponent of the stratum variable
    bool operator==(const StratumEntry&) const = default;
};

/// Generator-shape decomposition of a Borel-type ideal: pure powers
/// x_1^{a_1}..x_q^{a_q}, extra generators inside the first q variables
/// (stratum 0), and for each later variable x_{q+i} the generators
/// v * x_{q+i}^a with v in the preceding variables.
struct BorelStructure {
    int q = 0;
    std::vector<std::int64_t> pure_exponents;        // a_1..a_q
    std::vector<Monomial> stratum0;
    std::vector<std::vector<StratumEntry>> strata;   // index i-1 holds stratum i
    bool operator==(const BorelStructure&) const = default;
};

/// Supports of the associated primes of S/I, each a sorted list of 1-based
/// variable indices.
using AssociatedPrimes = std::set<std::vector<int>>;

/// Decider straight from the defining property: for every j,
/// (I : x_j^inf) == (I : (x_1..x_j)^inf). Rejects zero and unit ideals.
bool is_borel_definitional(const MonomialIdeal& ideal);

/// Decider via the exchange criterion reduced to minimal generators: for every
/// generator u and j < m(u), some power x_j^t lifts u / x_{m(u)}^{nu} back
/// into I; the existential over t is decided by saturation membership.
bool is_borel_exchange(const MonomialIdeal& ideal);

/// Smallest t > 0 with x_j^t * u / x_{m(u)}^{nu_{m(u)}(u)} in I, found by
/// bounded forward search; nullopt when no witness exists within the cap.
/// Diagnostics only; the decider itself never searches.
std::optional<std::int64_t> exchange_witness(const MonomialIdeal& ideal, const Monomial& u,
                                             int j);

/// Stability: for every generator u and j < m(u), x_j * u / x_{m(u)} stays in
/// the ideal. Checking generators suffices. Rejects the zero ideal.
bool is_stable(const MonomialIdeal& ideal);

/// Least e in [deg(I), m(I)(deg(I)-1)+1] with a stable truncation; for
/// Borel-type input this equals reg(I). Throws NotBorelTypeError when the
/// whole range fails, which certifies the input is not of Borel type.
RegularityCertificate regularity(const MonomialIdeal& ideal);

/// Reads the structure off G(I). Throws StructureViolationError when a pure
/// power is missing below q or the chain condition fails, i.e. when the input
/// is not of Borel type.
BorelStructure decompose_structure(const MonomialIdeal& ideal);

/// Checks the structure shape: pure powers exactly for 1..q, every stratum
/// factor inside its allowed prefix, and the divisor-chain condition between
/// consecutive nonempty strata (i >= 2). True certifies Borel type.
bool validate_structure(const RingContext& ctx, const BorelStructure& s);

/// Ideal generated by the structure's generator list (minimalized).
MonomialIdeal assemble_structure(const RingContext& ctx, const BorelStructure& s);

/// Size budget for random Borel-type ideals.
struct BorelBudget {
    int q = 1;
    std::int64_t max_exponent = 2;
    /// r_0 .. r_{n-q}; shorter lists mean trailing zeros.
    std::vector<int> stratum_sizes;
};

/// Draws a Borel-type ideal by the structure recipe: pure powers, stratum-0
/// monomials, and each deeper stratum factor a random multiple of a factor one
/// stratum down. Deterministic in the seed; the output always satisfies the
/// definitional property.
MonomialIdeal random_borel(const RingContext& ctx, const BorelBudget& budget,
                           std::uint64_t seed);

/// Associated primes of S/I via recursive coprime splitting into irreducible
/// components, cross-checked against the colon-witness enumeration; the two
/// routes must agree. Rejects zero and unit ideals.
AssociatedPrimes associated_primes(const MonomialIdeal& ideal,
                                   std::int64_t budget = 200'000);
AssociatedPrimes associated_primes_by_splitting(const MonomialIdeal& ideal);
AssociatedPrimes associated_primes_by_witness(const MonomialIdeal& ideal,
                                              std::int64_t budget = 200'000);

/// True iff every support is an initial segment {1..r}.
bool check_initial_segments(const AssociatedPrimes& primes);

}  // namespace borelkit
