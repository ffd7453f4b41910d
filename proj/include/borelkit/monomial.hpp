#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "borelkit/errors.hpp"

namespace borelkit {

/// Ring context: the number of variables and their display names.
/// Coefficients never appear anywhere; everything downstream is exponent-vector
/// combinatorics over this context.
class RingContext {
public:
    explicit RingContext(int nvars);
    RingContext(int nvars, std::vector<std::string> names);

    int nvars() const noexcept { return nvars_; }

    /// Name of x_index, 1-based.
    const std::string& var_name(int index) const;

    bool operator==(const RingContext&) const = default;

private:
    int nvars_ = 0;
    std::vector<std::string> names_;
};

/// Monomial as a dense vector of nonnegative exponents. Immutable value type.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> exponents);

    static Monomial unit(int nvars);
    static Monomial variable(int nvars, int index);  // x_index, 1-based
    static Monomial variable_power(int nvars, int index, std::int64_t exponent);

    int nvars() const noexcept { return static_cast<int>(exp_.size()); }
    std::int64_t exponent(int index) const;  // 1-based
    const std::vector<std::int64_t>& exponents() const noexcept { return exp_; }
    std::int64_t degree() const noexcept { return degree_; }
    bool is_unit() const noexcept { return degree_ == 0; }

    bool operator==(const Monomial&) const = default;

private:
    std::vector<std::int64_t> exp_;
    std::int64_t degree_ = 0;
};

/// Componentwise sum of exponents; throws OverflowError if a component or the
/// degree would overflow.
Monomial operator*(const Monomial& u, const Monomial& v);

/// True iff u divides v (componentwise <=).
bool divides(const Monomial& u, const Monomial& v);

/// Exact quotient u / v. Throws Error unless v divides u.
Monomial quotient(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);

/// m(u): the largest index i with x_i | u; 0 for the unit monomial.
int max_index(const Monomial& u);

/// Canonical order: degree first, then lexicographically larger exponent
/// vector first. Total, and fixed across all outputs and file formats.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Number of monomials of the given degree, C(degree + nvars - 1, nvars - 1).
std::int64_t monomial_count(int nvars, std::int64_t degree);

/// All monomials of the given degree in canonical order.
/// Throws BudgetExceededError when the count exceeds the enumeration guard.
std::vector<Monomial> monomials_of_degree(int nvars, std::int64_t degree);

/// Text form: `x1^2*x3`, or `1` for the unit.
std::string to_string(const RingContext& ctx, const Monomial& u);

}  // namespace borelkit
