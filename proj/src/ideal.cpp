#include "borelkit/ideal.hpp"

#include <algorithm>

namespace borelkit {

namespace {

void require_same_ring(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    if (lhs.ring().nvars() != rhs.ring().nvars()) {
        throw ContextMismatchError("ideals come from different rings");
    }
}

void require_member_shape(const MonomialIdeal& ideal, const Monomial& u) {
    if (u.nvars() != ideal.ring().nvars()) {
        throw ContextMismatchError("monomial does not belong to this ring");
    }
}

// Unique divisibility antichain generating the same ideal. Sorting first means
// every potential divisor of a candidate is already in `kept`.
std::vector<Monomial> minimalize(std::vector<Monomial> raw) {
    std::sort(raw.begin(), raw.end(), canonical_less);
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Monomial> kept;
    for (const Monomial& candidate : raw) {
        bool redundant = false;
        for (const Monomial& g : kept) {
            if (divides(g, candidate)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(candidate);
        }
    }
    return kept;
}

// Largest exponent appearing anywhere in the generators.
std::int64_t max_exponent(const MonomialIdeal& ideal) {
    std::int64_t m = 0;
    for (const Monomial& g : ideal.generators()) {
        for (std::int64_t e : g.exponents()) {
            m = std::max(m, e);
        }
    }
    return m;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ctx) : ctx_(std::move(ctx)) {}

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> generators)
    : ctx_(std::move(ctx)) {
    for (const Monomial& g : generators) {
        if (g.nvars() != ctx_.nvars()) {
            throw ContextMismatchError("generator does not belong to this ring");
        }
    }
    gens_ = minimalize(std::move(generators));
}

MonomialIdeal::MonomialIdeal(RingContext ctx, std::vector<Monomial> gens, AlreadyMinimalTag)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

MonomialIdeal MonomialIdeal::unit_ideal(RingContext ctx) {
    int n = ctx.nvars();
    return MonomialIdeal(std::move(ctx), {Monomial::unit(n)});
}

bool MonomialIdeal::contains(const Monomial& u) const {
    require_member_shape(*this, u);
    for (const Monomial& g : gens_) {
        if (g.degree() > u.degree()) {
            break;  // generators are sorted by degree
        }
        if (divides(g, u)) {
            return true;
        }
    }
    return false;
}

bool MonomialIdeal::includes(const MonomialIdeal& other) const {
    require_same_ring(*this, other);
    for (const Monomial& g : other.gens_) {
        if (!contains(g)) {
            return false;
        }
    }
    return true;
}

bool MonomialIdeal::operator==(const MonomialIdeal& rhs) const {
    return ctx_.nvars() == rhs.ctx_.nvars() && gens_ == rhs.gens_;
}

MonomialIdeal operator+(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_ring(lhs, rhs);
    std::vector<Monomial> raw(lhs.generators());
    raw.insert(raw.end(), rhs.generators().begin(), rhs.generators().end());
    return MonomialIdeal(lhs.ring(), std::move(raw));
}

MonomialIdeal operator*(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_ring(lhs, rhs);
    std::vector<Monomial> raw;
    raw.reserve(lhs.generators().size() * rhs.generators().size());
    for (const Monomial& a : lhs.generators()) {
        for (const Monomial& b : rhs.generators()) {
            raw.push_back(a * b);
        }
    }
    return MonomialIdeal(lhs.ring(), std::move(raw));
}

MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
    require_same_ring(lhs, rhs);
    std::vector<Monomial> raw;
    raw.reserve(lhs.generators().size() * rhs.generators().size());
    for (const Monomial& a : lhs.generators()) {
        for (const Monomial& b : rhs.generators()) {
            raw.push_back(lcm(a, b));
        }
    }
    return MonomialIdeal(lhs.ring(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
    require_member_shape(ideal, v);
    std::vector<Monomial> raw;
    raw.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) {
        raw.push_back(quotient(g, gcd(g, v)));
    }
    return MonomialIdeal(ideal.ring(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
    require_same_ring(ideal, divisor);
    if (divisor.is_zero()) {
        throw DegenerateIdealError("colon by the zero ideal");
    }
    bool first = true;
    MonomialIdeal result(ideal.ring());
    for (const Monomial& v : divisor.generators()) {
        MonomialIdeal piece = colon(ideal, v);
        result = first ? piece : intersect(result, piece);
        first = false;
    }
    return result;
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& v) {
    require_member_shape(ideal, v);
    // (I : v^k) stabilizes once k*nu_i(v) clears every exponent in G(I), so
    // 1 + max exponent colon steps always reach the fixpoint.
    std::int64_t cap = 1 + max_exponent(ideal);
    MonomialIdeal current = ideal;
    for (std::int64_t step = 0; step < cap; ++step) {
        MonomialIdeal next = colon(current, v);
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
    MonomialIdeal next = colon(current, v);
    if (next == current) {
        return current;
    }
    throw std::logic_error("saturation by a monomial failed to stabilize within its cap");
}

MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& divisor) {
    require_same_ring(ideal, divisor);
    if (divisor.is_zero()) {
        throw DegenerateIdealError("saturation by the zero ideal");
    }
    // Each generator v of J satisfies u*v^(D+1) in I for u in (I : v^inf),
    // D = max exponent in G(I); pigeonholing over the #G(J) generators bounds
    // the power of J needed, hence the iteration count.
    std::int64_t cap =
        static_cast<std::int64_t>(divisor.generators().size()) * (max_exponent(ideal) + 1) + 1;
    MonomialIdeal current = ideal;
    for (std::int64_t step = 0; step < cap; ++step) {
        MonomialIdeal next = colon(current, divisor);
        if (next == current) {
            return current;
        }
        current = std::move(next);
    }
    MonomialIdeal next = colon(current, divisor);
    if (next == current) {
        return current;
    }
    throw std::logic_error("saturation by an ideal failed to stabilize within its cap");
}

MonomialIdeal prefix_ideal(const RingContext& ctx, int j) {
    if (j < 1 || j > ctx.nvars()) {
        throw Error("prefix ideal index out of range");
    }
    std::vector<Monomial> gens;
    gens.reserve(static_cast<std::size_t>(j));
    for (int i = 1; i <= j; ++i) {
        gens.push_back(Monomial::variable(ctx.nvars(), i));
    }
    return MonomialIdeal(ctx, std::move(gens));
}

std::int64_t ideal_degree(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw DegenerateIdealError("deg(I) of the zero ideal");
    }
    return ideal.generators().back().degree();  // canonical order is degree-ascending
}

int ideal_max_index(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw DegenerateIdealError("m(I) of the zero ideal");
    }
    int m = 0;
    for (const Monomial& g : ideal.generators()) {
        m = std::max(m, max_index(g));
    }
    return m;
}

std::vector<Monomial> degree_slice(const MonomialIdeal& ideal, std::int64_t d) {
    std::vector<Monomial> slice;
    if (ideal.is_zero() || d < 0) {
        return slice;
    }
    for (Monomial& u : monomials_of_degree(ideal.ring().nvars(), d)) {
        if (ideal.contains(u)) {
            slice.push_back(std::move(u));
        }
    }
    return slice;
}

MonomialIdeal truncate_from(const MonomialIdeal& ideal, std::int64_t e) {
    if (ideal.is_zero()) {
        throw DegenerateIdealError("truncation of the zero ideal");
    }
    if (e < ideal_degree(ideal)) {
        throw Error("truncation degree below deg(I)");
    }
    // Monomials of one fixed degree form an antichain, so the slice is already
    // the minimal generating set, in canonical order.
    return MonomialIdeal(ideal.ring(), degree_slice(ideal, e),
                         MonomialIdeal::AlreadyMinimalTag{});
}

MonomialIdeal pow(const MonomialIdeal& ideal, int k) {
    if (k < 1) {
        throw Error("ideal power needs k >= 1");
    }
    MonomialIdeal result = ideal;
    for (int i = 1; i < k; ++i) {
        result = result * ideal;
    }
    return result;
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string out = "ideal(";
    bool first = true;
    for (const Monomial& g : ideal.generators()) {
        if (!first) {
            out += ", ";
        }
        out += to_string(ideal.ring(), g);
        first = false;
    }
    out += ")";
    return out;
}

}  // namespace borelkit
