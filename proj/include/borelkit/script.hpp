#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "borelkit/betti.hpp"
#include "borelkit/borel.hpp"
#include "borelkit/ideal.hpp"

namespace borelkit {

/// Ideal expression AST. Binary operators are left-associative; the printer
/// inserts parentheses so that print-then-parse reproduces the tree exactly.
struct IdealExpr {
    enum class Kind { Literal, Ident, Sum, Product, Power, Intersect, Colon, Sat, Trunc };

    Kind kind = Kind::Literal;
    std::vector<Monomial> literal;    // Literal: generators as written
    std::string ident;                // Ident
    std::vector<IdealExpr> children;  // operands / function arguments
    std::int64_t number = 0;          // Power exponent or Trunc degree

    bool operator==(const IdealExpr&) const = default;
};

struct RandBorelArgs {
    int q = 1;
    std::int64_t max_exponent = 2;
    std::vector<int> sizes;
    std::optional<std::uint64_t> seed;  // falls back to the global seed

    bool operator==(const RandBorelArgs&) const = default;
};

struct Command {
    enum class Kind { IsBorel, Reg, RegCheck, Stable, Decompose, Ass, Betti, Eq, RandBorel };

    Kind kind = Kind::Reg;
    std::vector<IdealExpr> exprs;
    std::optional<std::int64_t> level;    // Stable: truncation degree
    std::optional<RandBorelArgs> rand;    // RandBorel

    bool operator==(const Command&) const = default;
};

struct Statement {
    enum class Kind { Ring, Let, Command };

    Kind kind = Kind::Ring;
    int ring_nvars = 0;                   // Ring
    std::string name;                     // Let
    std::optional<IdealExpr> expr;        // Let
    std::optional<Command> command;       // Command

    bool operator==(const Statement&) const = default;
};

struct Script {
    std::vector<Statement> statements;

    bool operator==(const Script&) const = default;
};

/// Parses a script; statically checks the one-ring-first rule, reserved names,
/// and that identifiers are bound before use. Throws ParseError with position.
Script parse_script(std::string_view text);

/// Canonical text form; parse_script(print_script(s)) == s for every script.
std::string print_script(const Script& script);

struct RunOptions {
    bool json = false;
    bool quiet = false;
    std::uint64_t seed = 0;
    std::int64_t betti_budget = kDefaultBettiBudget;
};

/// Runs the script, writing one report per command to `out` (text, or one
/// key-sorted JSON object per line with options.json). Errors propagate as the
/// exception classes from errors.hpp.
void run_script(const Script& script, const RunOptions& options, std::ostream& out);

}  // namespace borelkit
