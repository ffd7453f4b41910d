#pragma once

// Random script ASTs for print-then-parse round-trip checks. Generated scripts
// are syntactically valid (ring first, identifiers bound before use) but are
// not meant to be executed.

#include <string>
#include <vector>

#include "borelkit/rng.hpp"
#include "borelkit/script.hpp"

namespace borelkit::testing {

inline Monomial random_literal_monomial(Rng& rng, int nvars) {
    std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars), 0);
    for (auto& e : exp) {
        e = rng.uniform(0, 3);
    }
    return Monomial(std::move(exp));
}

inline IdealExpr random_expr(Rng& rng, int nvars, const std::vector<std::string>& bound,
                             int depth) {
    IdealExpr node;
    std::int64_t choice = depth <= 0 ? rng.uniform(0, 1) : rng.uniform(0, 8);
    auto child = [&] { return random_expr(rng, nvars, bound, depth - 1); };
    switch (choice) {
        case 0: {
            node.kind = IdealExpr::Kind::Literal;
            std::int64_t count = rng.uniform(0, 3);
            for (std::int64_t i = 0; i < count; ++i) {
                node.literal.push_back(random_literal_monomial(rng, nvars));
            }
            break;
        }
        case 1:
            if (!bound.empty()) {
                node.kind = IdealExpr::Kind::Ident;
                node.ident = bound[static_cast<std::size_t>(
                    rng.uniform(0, static_cast<std::int64_t>(bound.size()) - 1))];
            } else {
                node.kind = IdealExpr::Kind::Literal;
                node.literal.push_back(random_literal_monomial(rng, nvars));
            }
            break;
        case 2:
        case 3:
            node.kind = choice == 2 ? IdealExpr::Kind::Sum : IdealExpr::Kind::Product;
            node.children.push_back(child());
            node.children.push_back(child());
            break;
        case 4:
            node.kind = IdealExpr::Kind::Power;
            node.children.push_back(child());
            node.number = rng.uniform(1, 3);
            break;
        case 5:
        case 6:
        case 7:
            node.kind = choice == 5   ? IdealExpr::Kind::Intersect
                        : choice == 6 ? IdealExpr::Kind::Colon
                                      : IdealExpr::Kind::Sat;
            node.children.push_back(child());
            node.children.push_back(child());
            break;
        case 8:
            node.kind = IdealExpr::Kind::Trunc;
            node.children.push_back(child());
            node.number = rng.uniform(0, 6);
            break;
    }
    return node;
}

inline Script random_script(Rng& rng) {
    Script script;
    int nvars = static_cast<int>(rng.uniform(2, 4));
    Statement ring;
    ring.kind = Statement::Kind::Ring;
    ring.ring_nvars = nvars;
    script.statements.push_back(ring);

    std::vector<std::string> bound;
    std::int64_t lets = rng.uniform(1, 4);
    for (std::int64_t i = 0; i < lets; ++i) {
        Statement let;
        let.kind = Statement::Kind::Let;
        let.name = std::string(1, static_cast<char>('A' + rng.uniform(0, 25))) +
                   std::to_string(i);
        let.expr = random_expr(rng, nvars, bound, 3);
        bound.push_back(let.name);
        script.statements.push_back(std::move(let));
    }

    std::int64_t commands = rng.uniform(1, 3);
    for (std::int64_t i = 0; i < commands; ++i) {
        Command cmd;
        cmd.kind = static_cast<Command::Kind>(rng.uniform(0, 8));
        switch (cmd.kind) {
            case Command::Kind::Eq:
                cmd.exprs.push_back(random_expr(rng, nvars, bound, 2));
                cmd.exprs.push_back(random_expr(rng, nvars, bound, 2));
                break;
            case Command::Kind::Stable:
                cmd.exprs.push_back(random_expr(rng, nvars, bound, 2));
                cmd.level = rng.uniform(0, 5);
                break;
            case Command::Kind::RandBorel: {
                RandBorelArgs args;
                args.q = static_cast<int>(rng.uniform(1, nvars));
                args.max_exponent = rng.uniform(1, 3);
                std::int64_t sizes = rng.uniform(0, 2);
                for (std::int64_t s = 0; s < sizes; ++s) {
                    args.sizes.push_back(static_cast<int>(rng.uniform(0, 2)));
                }
                if (rng.uniform(0, 1) == 1) {
                    args.seed = rng.next();
                }
                cmd.rand = args;
                break;
            }
            default:
                cmd.exprs.push_back(random_expr(rng, nvars, bound, 2));
                break;
        }
        Statement stmt;
        stmt.kind = Statement::Kind::Command;
        stmt.command = std::move(cmd);
        script.statements.push_back(std::move(stmt));
    }
    return script;
}

}  // namespace borelkit::testing
