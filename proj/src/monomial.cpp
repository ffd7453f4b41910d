#include "borelkit/monomial.hpp"

#include <algorithm>
#include <set>

namespace borelkit {

namespace {

// Degree slices are enumerated by stars and bars; refuse sizes that would
// hang the process instead of computing.
constexpr std::int64_t kEnumerationGuard = 5'000'000;

std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(nvars));
    for (int i = 1; i <= nvars; ++i) {
        names.push_back("x" + std::to_string(i));
    }
    return names;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("exponent overflow");
    }
    return out;
}

}  // namespace

RingContext::RingContext(int nvars) : RingContext(nvars, default_names(nvars)) {}

RingContext::RingContext(int nvars, std::vector<std::string> names)
    : nvars_(nvars), names_(std::move(names)) {
    if (nvars_ < 2) {
        throw Error("ring context needs at least 2 variables");
    }
    if (names_.size() != static_cast<std::size_t>(nvars_)) {
        throw Error("ring context needs one name per variable");
    }
    std::set<std::string> distinct(names_.begin(), names_.end());
    if (distinct.size() != names_.size()) {
        throw Error("ring context variable names must be pairwise distinct");
    }
}

const std::string& RingContext::var_name(int index) const {
    if (index < 1 || index > nvars_) {
        throw Error("variable index out of range");
    }
    return names_[static_cast<std::size_t>(index - 1)];
}

Monomial::Monomial(std::vector<std::int64_t> exponents) : exp_(std::move(exponents)) {
    for (std::int64_t e : exp_) {
        if (e < 0) {
            throw Error("monomial exponents must be nonnegative");
        }
        degree_ = checked_add(degree_, e);
    }
}

Monomial Monomial::unit(int nvars) {
    return Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0));
}

Monomial Monomial::variable(int nvars, int index) {
    return variable_power(nvars, index, 1);
}

Monomial Monomial::variable_power(int nvars, int index, std::int64_t exponent) {
    if (index < 1 || index > nvars) {
        throw Error("variable index out of range");
    }
    std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars), 0);
    exp[static_cast<std::size_t>(index - 1)] = exponent;
    return Monomial(std::move(exp));
}

std::int64_t Monomial::exponent(int index) const {
    if (index < 1 || index > nvars()) {
        throw Error("variable index out of range");
    }
    return exp_[static_cast<std::size_t>(index - 1)];
}

namespace {

void require_same_context(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) {
        throw ContextMismatchError("monomials come from different rings");
    }
}

}  // namespace

Monomial operator*(const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    std::vector<std::int64_t> exp(u.exponents());
    for (std::size_t i = 0; i < exp.size(); ++i) {
        exp[i] = checked_add(exp[i], v.exponents()[i]);
    }
    return Monomial(std::move(exp));
}

bool divides(const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    for (std::size_t i = 0; i < u.exponents().size(); ++i) {
        if (u.exponents()[i] > v.exponents()[i]) {
            return false;
        }
    }
    return true;
}

Monomial quotient(const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    if (!divides(v, u)) {
        throw Error("quotient requires exact divisibility");
    }
    std::vector<std::int64_t> exp(u.exponents());
    for (std::size_t i = 0; i < exp.size(); ++i) {
        exp[i] -= v.exponents()[i];
    }
    return Monomial(std::move(exp));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    std::vector<std::int64_t> exp(u.exponents());
    for (std::size_t i = 0; i < exp.size(); ++i) {
        exp[i] = std::max(exp[i], v.exponents()[i]);
    }
    return Monomial(std::move(exp));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
    require_same_context(u, v);
    std::vector<std::int64_t> exp(u.exponents());
    for (std::size_t i = 0; i < exp.size(); ++i) {
        exp[i] = std::min(exp[i], v.exponents()[i]);
    }
    return Monomial(std::move(exp));
}

int max_index(const Monomial& u) {
    for (int i = u.nvars(); i >= 1; --i) {
        if (u.exponents()[static_cast<std::size_t>(i - 1)] > 0) {
            return i;
        }
    }
    return 0;  // m(1) = 0 by convention
}

bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return a.exponents() > b.exponents();
}

std::int64_t monomial_count(int nvars, std::int64_t degree) {
    if (nvars < 1 || degree < 0) {
        throw Error("monomial_count needs nvars >= 1 and degree >= 0");
    }
    // C(degree + nvars - 1, nvars - 1), with the smaller symmetric index.
    __int128 count = 1;
    for (std::int64_t k = 1; k <= nvars - 1; ++k) {
        count = count * (static_cast<__int128>(degree) + k) / k;  // exact at each step
        if (count > static_cast<__int128>(INT64_MAX)) {
            throw OverflowError("monomial count overflow");
        }
    }
    return static_cast<std::int64_t>(count);
}

std::vector<Monomial> monomials_of_degree(int nvars, std::int64_t degree) {
    if (nvars < 1 || degree < 0) {
        throw Error("monomials_of_degree needs nvars >= 1 and degree >= 0");
    }
    std::int64_t count = monomial_count(nvars, degree);
    if (count > kEnumerationGuard) {
        throw BudgetExceededError("degree slice has " + std::to_string(count) +
                                  " monomials, above the enumeration guard");
    }
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count));
    // Compositions of `degree` into nvars parts, lexicographically descending:
    // exactly the canonical order within one degree.
    std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars), 0);
    exp[0] = degree;
    for (;;) {
        out.emplace_back(exp);
        int last = -1;
        for (int i = nvars - 2; i >= 0; --i) {
            if (exp[static_cast<std::size_t>(i)] > 0) {
                last = i;
                break;
            }
        }
        if (last < 0) {
            break;
        }
        std::int64_t tail = 1;
        for (int i = last + 1; i < nvars; ++i) {
            tail += exp[static_cast<std::size_t>(i)];
            exp[static_cast<std::size_t>(i)] = 0;
        }
        exp[static_cast<std::size_t>(last)] -= 1;
        exp[static_cast<std::size_t>(last + 1)] = tail;
    }
    return out;
}

std::string to_string(const RingContext& ctx, const Monomial& u) {
    if (u.nvars() != ctx.nvars()) {
        throw ContextMismatchError("monomial does not belong to this ring");
    }
    if (u.is_unit()) {
        return "1";
    }
    std::string out;
    for (int i = 1; i <= u.nvars(); ++i) {
        std::int64_t e = u.exponent(i);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += ctx.var_name(i);
        if (e > 1) {
            out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace borelkit
