#include "borelkit/borel.hpp"

#include <algorithm>

#include "borelkit/rng.hpp"

namespace borelkit {

namespace {

void require_proper(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw DegenerateIdealError("operation needs a nonzero ideal");
    }
    if (ideal.is_unit()) {
        throw DegenerateIdealError("operation needs a proper (non-unit) ideal");
    }
}

std::int64_t max_exponent(const MonomialIdeal& ideal) {
    std::int64_t m = 0;
    for (const Monomial& g : ideal.generators()) {
        for (std::int64_t e : g.exponents()) {
            m = std::max(m, e);
        }
    }
    return m;
}

// x_j * u / x_i, assuming x_i | u.
Monomial exchange_step(const Monomial& u, int j, int i) {
    std::vector<std::int64_t> exp(u.exponents());
    exp[static_cast<std::size_t>(i - 1)] -= 1;
    exp[static_cast<std::size_t>(j - 1)] += 1;
    return Monomial(std::move(exp));
}

// u with the top variable cleared: u / x_{m(u)}^{nu_{m(u)}(u)}.
Monomial clear_top_variable(const Monomial& u, int top) {
    std::vector<std::int64_t> exp(u.exponents());
    exp[static_cast<std::size_t>(top - 1)] = 0;
    return Monomial(std::move(exp));
}

}  // namespace

bool is_borel_definitional(const MonomialIdeal& ideal) {
    require_proper(ideal);
    const RingContext& ctx = ideal.ring();
    for (int j = 1; j <= ctx.nvars(); ++j) {
        MonomialIdeal by_variable = saturate(ideal, Monomial::variable(ctx.nvars(), j));
        MonomialIdeal by_prefix = saturate(ideal, prefix_ideal(ctx, j));
        if (!(by_variable == by_prefix)) {
            return false;
        }
    }
    return true;
}

bool is_borel_exchange(const MonomialIdeal& ideal) {
    require_proper(ideal);
    const RingContext& ctx = ideal.ring();
    // One saturation per j serves every generator.
    std::vector<MonomialIdeal> saturated;
    saturated.reserve(static_cast<std::size_t>(ctx.nvars()));
    for (int j = 1; j <= ctx.nvars(); ++j) {
        saturated.push_back(saturate(ideal, Monomial::variable(ctx.nvars(), j)));
    }
    for (const Monomial& u : ideal.generators()) {
        int top = max_index(u);
        if (top < 2) {
            continue;
        }
        Monomial cleared = clear_top_variable(u, top);
        for (int j = 1; j < top; ++j) {
            if (!saturated[static_cast<std::size_t>(j - 1)].contains(cleared)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::int64_t> exchange_witness(const MonomialIdeal& ideal, const Monomial& u,
                                             int j) {
    require_proper(ideal);
    int top = max_index(u);
    if (j < 1 || j >= top) {
        throw Error("exchange witness needs 1 <= j < m(u)");
    }
    __int128 wide = static_cast<__int128>(max_exponent(ideal)) * ideal.ring().nvars() +
                    ideal_degree(ideal);
    std::int64_t cap = wide > static_cast<__int128>(INT64_MAX)
                           ? INT64_MAX
                           : static_cast<std::int64_t>(wide);
    Monomial candidate = clear_top_variable(u, top);
    Monomial step = Monomial::variable(ideal.ring().nvars(), j);
    for (std::int64_t t = 1; t <= cap; ++t) {
        candidate = candidate * step;
        if (ideal.contains(candidate)) {
            return t;
        }
    }
    return std::nullopt;
}

bool is_stable(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw DegenerateIdealError("stability needs a nonzero ideal");
    }
    for (const Monomial& u : ideal.generators()) {
        int top = max_index(u);
        for (int j = 1; j < top; ++j) {
            if (!ideal.contains(exchange_step(u, j, top))) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Stability of I_{>=e} without materializing the truncation: its generators
// are the degree-e slice, and the exchanged monomials stay in degree e, where
// membership in I_{>=e} and in I coincide.
bool truncation_is_stable(const MonomialIdeal& ideal, std::int64_t e) {
    for (const Monomial& u : degree_slice(ideal, e)) {
        int top = max_index(u);
        for (int j = 1; j < top; ++j) {
            if (!ideal.contains(exchange_step(u, j, top))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

RegularityCertificate regularity(const MonomialIdeal& ideal) {
    require_proper(ideal);
    std::int64_t degree = ideal_degree(ideal);
    std::int64_t bound = 0;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(ideal_max_index(ideal)), degree - 1,
                               &bound) ||
        __builtin_add_overflow(bound, std::int64_t{1}, &bound)) {
        throw OverflowError("regularity search bound overflow");
    }
    RegularityCertificate cert;
    cert.bound_used = bound;
    for (std::int64_t e = degree; e <= bound; ++e) {
        bool stable = truncation_is_stable(ideal, e);
        cert.trace.emplace_back(e, stable);
        if (stable) {
            cert.reg = e;
            return cert;
        }
    }
    throw NotBorelTypeError("no stable truncation up to degree " + std::to_string(bound) +
                            ": the ideal is not of Borel type");
}

BorelStructure decompose_structure(const MonomialIdeal& ideal) {
    require_proper(ideal);
    int n = ideal.ring().nvars();
    std::vector<std::int64_t> pure(static_cast<std::size_t>(n) + 1, 0);
    int q = 0;
    for (const Monomial& g : ideal.generators()) {
        int top = max_index(g);
        if (g.exponent(top) == g.degree()) {  // pure power of x_top
            pure[static_cast<std::size_t>(top)] = g.exponent(top);
            q = std::max(q, top);
        }
    }
    if (q == 0) {
        throw StructureViolationError("no pure-power generator: not of Borel type");
    }
    BorelStructure s;
    s.q = q;
    for (int j = 1; j <= q; ++j) {
        if (pure[static_cast<std::size_t>(j)] == 0) {
            throw StructureViolationError("missing pure power of x" + std::to_string(j) +
                                          ": not of Borel type");
        }
        s.pure_exponents.push_back(pure[static_cast<std::size_t>(j)]);
    }
    s.strata.resize(static_cast<std::size_t>(n - q));
    for (const Monomial& g : ideal.generators()) {
        int top = max_index(g);
        if (top <= q) {
            if (g.exponent(top) != g.degree()) {
                s.stratum0.push_back(g);
            }
            continue;
        }
        StratumEntry entry{clear_top_variable(g, top), g.exponent(top)};
        if (entry.v.is_unit()) {
            // A pure power above q would have raised q in the first pass.
            throw std::logic_error("pure power above q survived decomposition");
        }
        s.strata[static_cast<std::size_t>(top - q - 1)].push_back(std::move(entry));
    }
    for (std::size_t i = 1; i < s.strata.size(); ++i) {
        for (const StratumEntry& entry : s.strata[i]) {
            bool chained = false;
            for (const StratumEntry& below : s.strata[i - 1]) {
                if (divides(below.v, entry.v)) {
                    chained = true;
                    break;
                }
            }
            if (!chained) {
                throw StructureViolationError("chain condition fails in stratum " +
                                              std::to_string(i + 1) + ": not of Borel type");
            }
        }
    }
    if (!(assemble_structure(ideal.ring(), s) == ideal)) {
        throw std::logic_error("structure decomposition does not reassemble to its source");
    }
    return s;
}

bool validate_structure(const RingContext& ctx, const BorelStructure& s) {
    int n = ctx.nvars();
    if (s.q < 1 || s.q > n) {
        return false;
    }
    if (s.pure_exponents.size() != static_cast<std::size_t>(s.q)) {
        return false;
    }
    for (std::int64_t a : s.pure_exponents) {
        if (a < 1) {
            return false;
        }
    }
    if (s.strata.size() != static_cast<std::size_t>(n - s.q)) {
        return false;
    }
    for (const Monomial& v : s.stratum0) {
        // No pure powers here: those live in pure_exponents, and a unit would
        // collapse the ideal.
        if (v.nvars() != n || v.is_unit() || max_index(v) > s.q ||
            v.exponent(max_index(v)) == v.degree()) {
            return false;
        }
    }
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        int prefix = s.q + static_cast<int>(i);  // allowed variables for v
        for (const StratumEntry& entry : s.strata[i]) {
            if (entry.v.nvars() != n || entry.v.is_unit() || entry.a < 1 ||
                max_index(entry.v) > prefix) {
                return false;
            }
            if (i >= 1) {
                bool chained = false;
                for (const StratumEntry& below : s.strata[i - 1]) {
                    if (divides(below.v, entry.v)) {
                        chained = true;
                        break;
                    }
                }
                if (!chained) {
                    return false;
                }
            }
        }
    }
    return true;
}

MonomialIdeal assemble_structure(const RingContext& ctx, const BorelStructure& s) {
    int n = ctx.nvars();
    std::vector<Monomial> gens;
    for (int j = 1; j <= s.q; ++j) {
        gens.push_back(
            Monomial::variable_power(n, j, s.pure_exponents[static_cast<std::size_t>(j - 1)]));
    }
    gens.insert(gens.end(), s.stratum0.begin(), s.stratum0.end());
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        int var = s.q + static_cast<int>(i) + 1;
        for (const StratumEntry& entry : s.strata[i]) {
            gens.push_back(entry.v * Monomial::variable_power(n, var, entry.a));
        }
    }
    return MonomialIdeal(ctx, std::move(gens));
}

namespace {

Monomial random_monomial_in_prefix(Rng& rng, int nvars, int prefix, std::int64_t degree) {
    std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars), 0);
    for (std::int64_t t = 0; t < degree; ++t) {
        exp[static_cast<std::size_t>(rng.uniform(1, prefix)) - 1] += 1;
    }
    return Monomial(std::move(exp));
}

}  // namespace

MonomialIdeal random_borel(const RingContext& ctx, const BorelBudget& budget,
                           std::uint64_t seed) {
    int n = ctx.nvars();
    if (budget.q < 1 || budget.q > n) {
        throw Error("random_borel: q must lie in [1, nvars]");
    }
    if (budget.max_exponent < 1) {
        throw Error("random_borel: max_exponent must be positive");
    }
    if (budget.stratum_sizes.size() > static_cast<std::size_t>(n - budget.q) + 1) {
        throw Error("random_borel: too many stratum sizes for this ring");
    }
    auto size_at = [&](std::size_t i) -> int {
        return i < budget.stratum_sizes.size() ? budget.stratum_sizes[i] : 0;
    };
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n - budget.q); ++i) {
        if (size_at(i) < 0) {
            throw Error("random_borel: stratum sizes must be nonnegative");
        }
        if (i >= 2 && size_at(i) > 0 && size_at(i - 1) == 0) {
            throw Error("random_borel: stratum " + std::to_string(i) +
                        " has no stratum below it to chain to");
        }
    }

    Rng rng(seed);
    BorelStructure s;
    s.q = budget.q;
    for (int j = 1; j <= s.q; ++j) {
        s.pure_exponents.push_back(rng.uniform(1, budget.max_exponent));
    }
    for (int r = 0; r < size_at(0); ++r) {
        // Degree >= 2 inside the first q variables; degree-1 draws would just
        // shadow a pure power, and a pure-power draw is absorbed anyway.
        s.stratum0.push_back(random_monomial_in_prefix(
            rng, n, s.q, rng.uniform(2, std::max<std::int64_t>(2, budget.max_exponent))));
    }
    s.strata.resize(static_cast<std::size_t>(n - s.q));
    for (std::size_t i = 0; i < s.strata.size(); ++i) {
        int count = size_at(i + 1);
        int prefix = s.q + static_cast<int>(i);
        for (int r = 0; r < count; ++r) {
            Monomial v(std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
            if (i == 0) {
                v = random_monomial_in_prefix(rng, n, prefix,
                                              rng.uniform(1, budget.max_exponent));
            } else {
                const auto& below = s.strata[i - 1];
                const StratumEntry& parent =
                    below[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(below.size()) - 1))];
                v = parent.v * random_monomial_in_prefix(
                                   rng, n, prefix, rng.uniform(0, budget.max_exponent));
            }
            s.strata[i].push_back(StratumEntry{v, rng.uniform(1, budget.max_exponent)});
        }
    }
    return assemble_structure(ctx, s);
}

namespace {

using GensKey = std::vector<std::vector<std::int64_t>>;

GensKey key_of(const MonomialIdeal& ideal) {
    GensKey key;
    key.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        key.push_back(g.exponents());
    }
    return key;
}

std::vector<int> support_of(const MonomialIdeal& ideal) {
    std::vector<int> support;
    for (const Monomial& g : ideal.generators()) {
        support.push_back(max_index(g));
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    return support;
}

// Recursive coprime splitting: a generator g = a * b with coprime nonunit
// parts splits I = (G, a*b) into (G, a) and (G, b). Leaves are irreducible
// (all generators pure powers of distinct variables).
void split_components(const MonomialIdeal& ideal, std::set<GensKey>& visited,
                      std::vector<MonomialIdeal>& components) {
    if (!visited.insert(key_of(ideal)).second) {
        return;
    }
    const std::vector<Monomial>& gens = ideal.generators();
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const Monomial& g = gens[k];
        int low = 0;
        for (int i = 1; i <= g.nvars(); ++i) {
            if (g.exponent(i) > 0) {
                low = i;
                break;
            }
        }
        if (low == 0 || g.exponent(low) == g.degree()) {
            continue;  // unit cannot appear; pure powers stay
        }
        Monomial head = Monomial::variable_power(g.nvars(), low, g.exponent(low));
        Monomial tail = quotient(g, head);
        for (const Monomial& piece : {head, tail}) {
            std::vector<Monomial> raw = gens;
            raw[k] = piece;
            split_components(MonomialIdeal(ideal.ring(), std::move(raw)), visited, components);
        }
        return;
    }
    components.push_back(ideal);
}

}  // namespace

AssociatedPrimes associated_primes_by_splitting(const MonomialIdeal& ideal) {
    require_proper(ideal);
    std::set<GensKey> visited;
    std::vector<MonomialIdeal> components;
    split_components(ideal, visited, components);
    std::sort(components.begin(), components.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) {
                  return key_of(a) < key_of(b);
              });
    components.erase(std::unique(components.begin(), components.end()), components.end());
    // Drop components containing the intersection of the others; what remains
    // is the unique irredundant irreducible decomposition.
    bool changed = true;
    while (changed && components.size() > 1) {
        changed = false;
        for (std::size_t k = 0; k < components.size(); ++k) {
            MonomialIdeal rest(ideal.ring());
            bool first = true;
            for (std::size_t m = 0; m < components.size(); ++m) {
                if (m == k) {
                    continue;
                }
                rest = first ? components[m] : intersect(rest, components[m]);
                first = false;
            }
            if (components[k].includes(rest)) {
                components.erase(components.begin() + static_cast<std::ptrdiff_t>(k));
                changed = true;
                break;
            }
        }
    }
    AssociatedPrimes primes;
    for (const MonomialIdeal& component : components) {
        primes.insert(support_of(component));
    }
    return primes;
}

AssociatedPrimes associated_primes_by_witness(const MonomialIdeal& ideal, std::int64_t budget) {
    require_proper(ideal);
    // Every associated prime is (I : u) for a monomial u, and capping each
    // exponent of u at the matching exponent of lcm(G(I)) never changes the
    // colon, so divisors of the lcm see every witness.
    Monomial top = ideal.generators().front();
    for (const Monomial& g : ideal.generators()) {
        top = lcm(top, g);
    }
    __int128 count = 1;
    for (std::int64_t e : top.exponents()) {
        count *= static_cast<__int128>(e) + 1;
        if (count > static_cast<__int128>(budget)) {
            throw BudgetExceededError("associated-prime witness search would visit too many "
                                      "divisors");
        }
    }
    int n = ideal.ring().nvars();
    AssociatedPrimes primes;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
    for (;;) {
        MonomialIdeal quotient_ideal = colon(ideal, Monomial{std::vector<std::int64_t>(a)});
        bool prime = !quotient_ideal.is_zero() && !quotient_ideal.is_unit();
        for (const Monomial& g : quotient_ideal.generators()) {
            if (g.degree() != 1) {
                prime = false;
                break;
            }
        }
        if (prime) {
            primes.insert(support_of(quotient_ideal));
        }
        int pos = 0;
        while (pos < n && a[static_cast<std::size_t>(pos)] ==
                              top.exponents()[static_cast<std::size_t>(pos)]) {
            a[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) {
            break;
        }
        a[static_cast<std::size_t>(pos)] += 1;
    }
    return primes;
}

bool check_initial_segments(const AssociatedPrimes& primes) {
    for (const std::vector<int>& support : primes) {
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (support[i] != static_cast<int>(i) + 1) {
                return false;
            }
        }
    }
    return true;
}

AssociatedPrimes associated_primes(const MonomialIdeal& ideal, std::int64_t budget) {
    AssociatedPrimes by_splitting = associated_primes_by_splitting(ideal);
    AssociatedPrimes by_witness = associated_primes_by_witness(ideal, budget);
    if (by_splitting != by_witness) {
        throw std::logic_error("associated-prime routes disagree");
    }
    return by_splitting;
}

}  // namespace borelkit
