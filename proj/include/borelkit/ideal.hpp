#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borelkit/monomial.hpp"

namespace borelkit {

/// Monomial ideal held as its unique minimal generating antichain, canonically
/// sorted. The zero ideal is the empty generator list; the unit ideal is {1}.
/// Immutable value type; every operation below is a pure function.
class MonomialIdeal {
public:
    /// The zero ideal.
    explicit MonomialIdeal(RingContext ctx);

    /// Minimalizes: drops duplicates and every generator divisible by another.
    MonomialIdeal(RingContext ctx, std::vector<Monomial> generators);

    static MonomialIdeal unit_ideal(RingContext ctx);

    const RingContext& ring() const noexcept { return ctx_; }
    const std::vector<Monomial>& generators() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_unit(); }

    /// Monomial membership: some generator divides u.
    bool contains(const Monomial& u) const;

    /// Ideal inclusion: other is a subset of this ideal.
    bool includes(const MonomialIdeal& other) const;

    /// Equality of ideals; sound and complete because minimal generator
    /// antichains are unique. Variable names do not participate.
    bool operator==(const MonomialIdeal& rhs) const;

private:
    struct AlreadyMinimalTag {};
    MonomialIdeal(RingContext ctx, std::vector<Monomial> gens, AlreadyMinimalTag);

    friend MonomialIdeal truncate_from(const MonomialIdeal&, std::int64_t);

    RingContext ctx_;
    std::vector<Monomial> gens_;
};

MonomialIdeal operator+(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal operator*(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal intersect(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

/// (I : v) for a single monomial v.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);

/// (I : J). Throws DegenerateIdealError when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

/// (I : v^inf), computed as the fixpoint of repeated colon by v.
MonomialIdeal saturate(const MonomialIdeal& ideal, const Monomial& v);

/// (I : J^inf), the fixpoint of repeated colon by J. J must be nonzero.
MonomialIdeal saturate(const MonomialIdeal& ideal, const MonomialIdeal& divisor);

/// (x_1, ..., x_j); 1 <= j <= nvars.
MonomialIdeal prefix_ideal(const RingContext& ctx, int j);

/// deg(I): highest degree among minimal generators. Throws on the zero ideal.
std::int64_t ideal_degree(const MonomialIdeal& ideal);

/// m(I): max of max_index over minimal generators. Throws on the zero ideal.
int ideal_max_index(const MonomialIdeal& ideal);

/// All monomials of degree exactly d lying in the ideal, canonical order.
std::vector<Monomial> degree_slice(const MonomialIdeal& ideal, std::int64_t d);

/// I_{>=e}: the ideal generated by every monomial of I of degree >= e, which
/// for e >= deg(I) is generated exactly in degree e. Requires nonzero I and
/// e >= deg(I).
MonomialIdeal truncate_from(const MonomialIdeal& ideal, std::int64_t e);

/// I^k for k >= 1.
MonomialIdeal pow(const MonomialIdeal& ideal, int k);

/// Text form: `ideal(x1^2, x1*x2)`; `ideal()` for the zero ideal.
std::string to_string(const MonomialIdeal& ideal);

}  // namespace borelkit
