#include "borelkit/script.hpp"

#include <charconv>
#include <map>
#include <ostream>
#include <set>

#include "borelkit/json_io.hpp"

namespace borelkit {

namespace {

constexpr int kMaxRingVars = 31;  // keeps Betti bitmask complexes representable

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

struct Token {
    enum class Kind { End, Ident, Int, Plus, Star, Caret, Equals, LParen, RParen, Comma, Semi };

    Kind kind = Kind::End;
    std::string text;
    std::uint64_t value = 0;
    int line = 1;
    int column = 1;
};

const char* token_name(Token::Kind kind) {
    switch (kind) {
        case Token::Kind::End: return "end of input";
        case Token::Kind::Ident: return "identifier";
        case Token::Kind::Int: return "integer";
        case Token::Kind::Plus: return "'+'";
        case Token::Kind::Star: return "'*'";
        case Token::Kind::Caret: return "'^'";
        case Token::Kind::Equals: return "'='";
        case Token::Kind::LParen: return "'('";
        case Token::Kind::RParen: return "')'";
        case Token::Kind::Comma: return "','";
        case Token::Kind::Semi: return "';'";
    }
    return "token";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (c == '\n') {
            ++line;
            column = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++column;
            ++i;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) {
            std::size_t start = i;
            while (i < src.size() &&
                   ((src[i] >= 'A' && src[i] <= 'Z') || (src[i] >= 'a' && src[i] <= 'z') ||
                    (src[i] >= '0' && src[i] <= '9') || src[i] == '_')) {
                ++i;
            }
            tok.kind = Token::Kind::Ident;
            tok.text = std::string(src.substr(start, i - start));
            column += static_cast<int>(i - start);
        } else if (c >= '0' && c <= '9') {
            std::size_t start = i;
            while (i < src.size() && src[i] >= '0' && src[i] <= '9') {
                ++i;
            }
            tok.kind = Token::Kind::Int;
            auto digits = src.substr(start, i - start);
            auto result = std::from_chars(digits.data(), digits.data() + digits.size(),
                                          tok.value);
            if (result.ec != std::errc()) {
                throw ParseError("integer literal out of range", line, column);
            }
            column += static_cast<int>(i - start);
        } else {
            switch (c) {
                case '+': tok.kind = Token::Kind::Plus; break;
                case '*': tok.kind = Token::Kind::Star; break;
                case '^': tok.kind = Token::Kind::Caret; break;
                case '=': tok.kind = Token::Kind::Equals; break;
                case '(': tok.kind = Token::Kind::LParen; break;
                case ')': tok.kind = Token::Kind::RParen; break;
                case ',': tok.kind = Token::Kind::Comma; break;
                case ';': tok.kind = Token::Kind::Semi; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line,
                                     column);
            }
            ++i;
            ++column;
        }
        tokens.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.column = column;
    tokens.push_back(std::move(end));
    return tokens;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

const std::set<std::string>& reserved_words() {
    static const std::set<std::string> words = {
        "ring",   "ideal",     "intersect", "colon", "sat",  "trunc", "isborel", "reg",
        "regcheck", "stable",  "decompose", "ass",   "betti", "eq",   "randborel"};
    return words;
}

const std::map<std::string, Command::Kind>& command_words() {
    static const std::map<std::string, Command::Kind> words = {
        {"isborel", Command::Kind::IsBorel},   {"reg", Command::Kind::Reg},
        {"regcheck", Command::Kind::RegCheck}, {"stable", Command::Kind::Stable},
        {"decompose", Command::Kind::Decompose}, {"ass", Command::Kind::Ass},
        {"betti", Command::Kind::Betti},       {"eq", Command::Kind::Eq},
        {"randborel", Command::Kind::RandBorel}};
    return words;
}

// "x12" -> 12; nullopt when the identifier is not a variable.
std::optional<int> variable_index(const std::string& text) {
    if (text.size() < 2 || text[0] != 'x') {
        return std::nullopt;
    }
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            return std::nullopt;
        }
    }
    int value = 0;
    auto result = std::from_chars(text.data() + 1, text.data() + text.size(), value);
    if (result.ec != std::errc()) {
        return INT32_MAX;  // absurd index: still reserved, never valid in a ring
    }
    return value;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    Script parse() {
        Script script;
        while (peek().kind != Token::Kind::End) {
            script.statements.push_back(parse_statement());
        }
        return script;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    Token advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        throw ParseError(message, at.line, at.column);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) {
            fail("expected " + what + ", found " + token_name(peek().kind), peek());
        }
        return advance();
    }

    std::int64_t expect_int64(const std::string& what) {
        Token tok = expect(Token::Kind::Int, what);
        if (tok.value > static_cast<std::uint64_t>(INT64_MAX)) {
            fail(what + " out of range", tok);
        }
        return static_cast<std::int64_t>(tok.value);
    }

    void require_ring(const Token& at) const {
        if (nvars_ == 0) {
            fail("ring not declared", at);
        }
    }

    Statement parse_statement() {
        const Token& tok = peek();
        if (tok.kind != Token::Kind::Ident) {
            fail("expected statement", tok);
        }
        if (tok.text == "ring") {
            return parse_ring();
        }
        if (auto it = command_words().find(tok.text); it != command_words().end()) {
            require_ring(tok);
            Statement stmt;
            stmt.kind = Statement::Kind::Command;
            stmt.command = parse_command(it->second);
            expect(Token::Kind::Semi, "';'");
            return stmt;
        }
        return parse_let();
    }

    Statement parse_ring() {
        Token keyword = advance();
        if (nvars_ != 0) {
            fail("ring redeclared", keyword);
        }
        Token count = expect(Token::Kind::Int, "variable count");
        if (count.value < 2 || count.value > kMaxRingVars) {
            fail("ring needs between 2 and " + std::to_string(kMaxRingVars) + " variables",
                 count);
        }
        expect(Token::Kind::Semi, "';'");
        nvars_ = static_cast<int>(count.value);
        Statement stmt;
        stmt.kind = Statement::Kind::Ring;
        stmt.ring_nvars = nvars_;
        return stmt;
    }

    Statement parse_let() {
        Token name = advance();
        if (reserved_words().count(name.text)) {
            fail("'" + name.text + "' is reserved", name);
        }
        if (variable_index(name.text)) {
            fail("variable names are reserved", name);
        }
        require_ring(name);
        expect(Token::Kind::Equals, "'='");
        Statement stmt;
        stmt.kind = Statement::Kind::Let;
        stmt.name = name.text;
        stmt.expr = parse_expr();
        expect(Token::Kind::Semi, "';'");
        bound_.insert(name.text);
        return stmt;
    }

    Command parse_command(Command::Kind kind) {
        advance();  // command word
        Command cmd;
        cmd.kind = kind;
        switch (kind) {
            case Command::Kind::IsBorel:
            case Command::Kind::Reg:
            case Command::Kind::RegCheck:
            case Command::Kind::Decompose:
            case Command::Kind::Ass:
            case Command::Kind::Betti:
                cmd.exprs.push_back(parse_expr());
                break;
            case Command::Kind::Eq:
                cmd.exprs.push_back(parse_expr());
                cmd.exprs.push_back(parse_expr());
                break;
            case Command::Kind::Stable:
                cmd.exprs.push_back(parse_expr());
                cmd.level = expect_int64("truncation degree");
                break;
            case Command::Kind::RandBorel:
                cmd.rand = parse_randborel_args();
                break;
        }
        return cmd;
    }

    RandBorelArgs parse_randborel_args() {
        RandBorelArgs args;
        std::set<std::string> seen;
        bool has_q = false;
        while (peek().kind == Token::Kind::Ident) {
            Token key = advance();
            if (!seen.insert(key.text).second) {
                fail("duplicate randborel argument '" + key.text + "'", key);
            }
            expect(Token::Kind::Equals, "'='");
            if (key.text == "q") {
                std::int64_t q = expect_int64("q");
                if (q < 1 || q > nvars_) {
                    fail("q must lie in [1, " + std::to_string(nvars_) + "]", key);
                }
                args.q = static_cast<int>(q);
                has_q = true;
            } else if (key.text == "maxexp") {
                args.max_exponent = expect_int64("maxexp");
                if (args.max_exponent < 1) {
                    fail("maxexp must be positive", key);
                }
            } else if (key.text == "seed") {
                args.seed = expect(Token::Kind::Int, "seed").value;
            } else if (key.text == "sizes") {
                args.sizes.push_back(static_cast<int>(expect_int64("stratum size")));
                while (peek().kind == Token::Kind::Comma) {
                    advance();
                    args.sizes.push_back(static_cast<int>(expect_int64("stratum size")));
                }
            } else {
                fail("unknown randborel argument '" + key.text + "'", key);
            }
        }
        if (!has_q) {
            fail("randborel needs q=<int>", peek());
        }
        return args;
    }

    IdealExpr parse_expr() {
        IdealExpr lhs = parse_term();
        while (peek().kind == Token::Kind::Plus) {
            advance();
            IdealExpr node;
            node.kind = IdealExpr::Kind::Sum;
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_term());
            lhs = std::move(node);
        }
        return lhs;
    }

    IdealExpr parse_term() {
        IdealExpr lhs = parse_factor();
        while (peek().kind == Token::Kind::Star) {
            advance();
            IdealExpr node;
            node.kind = IdealExpr::Kind::Product;
            node.children.push_back(std::move(lhs));
            node.children.push_back(parse_factor());
            lhs = std::move(node);
        }
        return lhs;
    }

    IdealExpr parse_factor() {
        IdealExpr base = parse_atom();
        if (peek().kind == Token::Kind::Caret) {
            Token caret = advance();
            std::int64_t k = expect_int64("power exponent");
            if (k < 1) {
                fail("ideal power needs k >= 1", caret);
            }
            IdealExpr node;
            node.kind = IdealExpr::Kind::Power;
            node.children.push_back(std::move(base));
            node.number = k;
            return node;
        }
        return base;
    }

    IdealExpr parse_pair(IdealExpr::Kind kind) {
        IdealExpr node;
        node.kind = kind;
        expect(Token::Kind::LParen, "'('");
        node.children.push_back(parse_expr());
        expect(Token::Kind::Comma, "','");
        if (kind == IdealExpr::Kind::Trunc) {
            node.number = expect_int64("truncation degree");
        } else {
            node.children.push_back(parse_expr());
        }
        expect(Token::Kind::RParen, "')'");
        return node;
    }

    IdealExpr parse_atom() {
        const Token& tok = peek();
        if (tok.kind == Token::Kind::LParen) {
            advance();
            IdealExpr inner = parse_expr();
            expect(Token::Kind::RParen, "')'");
            return inner;
        }
        if (tok.kind != Token::Kind::Ident) {
            fail("expected ideal expression", tok);
        }
        if (tok.text == "ideal") {
            return parse_literal();
        }
        if (tok.text == "intersect") {
            advance();
            return parse_pair(IdealExpr::Kind::Intersect);
        }
        if (tok.text == "colon") {
            advance();
            return parse_pair(IdealExpr::Kind::Colon);
        }
        if (tok.text == "sat") {
            advance();
            return parse_pair(IdealExpr::Kind::Sat);
        }
        if (tok.text == "trunc") {
            advance();
            return parse_pair(IdealExpr::Kind::Trunc);
        }
        if (reserved_words().count(tok.text)) {
            fail("'" + tok.text + "' is reserved", tok);
        }
        if (variable_index(tok.text)) {
            fail("a variable is not an ideal expression", tok);
        }
        if (!bound_.count(tok.text)) {
            fail("unbound identifier '" + tok.text + "'", tok);
        }
        IdealExpr node;
        node.kind = IdealExpr::Kind::Ident;
        node.ident = advance().text;
        return node;
    }

    IdealExpr parse_literal() {
        advance();  // 'ideal'
        expect(Token::Kind::LParen, "'('");
        IdealExpr node;
        node.kind = IdealExpr::Kind::Literal;
        if (peek().kind != Token::Kind::RParen) {
            node.literal.push_back(parse_monomial());
            while (peek().kind == Token::Kind::Comma) {
                advance();
                node.literal.push_back(parse_monomial());
            }
        }
        expect(Token::Kind::RParen, "')'");
        return node;
    }

    Monomial parse_monomial() {
        if (peek().kind == Token::Kind::Int) {
            Token one = advance();
            if (one.value != 1) {
                fail("a monomial factor must be '1' or a variable power", one);
            }
            return Monomial::unit(nvars_);
        }
        std::vector<std::int64_t> exp(static_cast<std::size_t>(nvars_), 0);
        parse_monomial_factor(exp);
        while (peek().kind == Token::Kind::Star) {
            advance();
            parse_monomial_factor(exp);
        }
        return Monomial(std::move(exp));
    }

    void parse_monomial_factor(std::vector<std::int64_t>& exp) {
        Token tok = expect(Token::Kind::Ident, "variable");
        auto index = variable_index(tok.text);
        if (!index) {
            fail("expected a variable like x1", tok);
        }
        if (*index < 1 || *index > nvars_) {
            fail("variable index out of range for this ring", tok);
        }
        std::int64_t e = 1;
        if (peek().kind == Token::Kind::Caret) {
            advance();
            e = expect_int64("exponent");
        }
        std::int64_t& slot = exp[static_cast<std::size_t>(*index - 1)];
        if (__builtin_add_overflow(slot, e, &slot)) {
            fail("exponent out of range", tok);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int nvars_ = 0;
    std::set<std::string> bound_;
};

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

std::string monomial_text(const Monomial& u) {
    return to_string(RingContext(u.nvars()), u);
}

bool is_atomic(const IdealExpr& expr) {
    switch (expr.kind) {
        case IdealExpr::Kind::Sum:
        case IdealExpr::Kind::Product:
        case IdealExpr::Kind::Power:
            return false;
        default:
            return true;  // literals, idents and function forms self-delimit
    }
}

void print_expr(std::string& out, const IdealExpr& expr);

void print_wrapped(std::string& out, const IdealExpr& expr, bool wrap) {
    if (wrap) {
        out += "(";
        print_expr(out, expr);
        out += ")";
    } else {
        print_expr(out, expr);
    }
}

void print_expr(std::string& out, const IdealExpr& expr) {
    switch (expr.kind) {
        case IdealExpr::Kind::Literal: {
            out += "ideal(";
            for (std::size_t i = 0; i < expr.literal.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                out += monomial_text(expr.literal[i]);
            }
            out += ")";
            break;
        }
        case IdealExpr::Kind::Ident:
            out += expr.ident;
            break;
        case IdealExpr::Kind::Sum:
            print_expr(out, expr.children[0]);
            out += " + ";
            // parenthesize a right-nested sum to keep the tree left-associative
            print_wrapped(out, expr.children[1], expr.children[1].kind == IdealExpr::Kind::Sum);
            break;
        case IdealExpr::Kind::Product:
            print_wrapped(out, expr.children[0],
                          expr.children[0].kind == IdealExpr::Kind::Sum);
            out += " * ";
            print_wrapped(out, expr.children[1],
                          expr.children[1].kind == IdealExpr::Kind::Sum ||
                              expr.children[1].kind == IdealExpr::Kind::Product);
            break;
        case IdealExpr::Kind::Power:
            print_wrapped(out, expr.children[0], !is_atomic(expr.children[0]));
            out += "^" + std::to_string(expr.number);
            break;
        case IdealExpr::Kind::Intersect:
        case IdealExpr::Kind::Colon:
        case IdealExpr::Kind::Sat: {
            const char* name = expr.kind == IdealExpr::Kind::Intersect ? "intersect"
                               : expr.kind == IdealExpr::Kind::Colon   ? "colon"
                                                                       : "sat";
            out += name;
            out += "(";
            print_expr(out, expr.children[0]);
            out += ", ";
            print_expr(out, expr.children[1]);
            out += ")";
            break;
        }
        case IdealExpr::Kind::Trunc:
            out += "trunc(";
            print_expr(out, expr.children[0]);
            out += ", " + std::to_string(expr.number) + ")";
            break;
    }
}

std::string expr_text(const IdealExpr& expr) {
    std::string out;
    print_expr(out, expr);
    return out;
}

std::string command_text(const Command& cmd) {
    switch (cmd.kind) {
        case Command::Kind::IsBorel: return "isborel " + expr_text(cmd.exprs[0]);
        case Command::Kind::Reg: return "reg " + expr_text(cmd.exprs[0]);
        case Command::Kind::RegCheck: return "regcheck " + expr_text(cmd.exprs[0]);
        case Command::Kind::Stable:
            return "stable " + expr_text(cmd.exprs[0]) + " " + std::to_string(*cmd.level);
        case Command::Kind::Decompose: return "decompose " + expr_text(cmd.exprs[0]);
        case Command::Kind::Ass: return "ass " + expr_text(cmd.exprs[0]);
        case Command::Kind::Betti: return "betti " + expr_text(cmd.exprs[0]);
        case Command::Kind::Eq:
            return "eq " + expr_text(cmd.exprs[0]) + " " + expr_text(cmd.exprs[1]);
        case Command::Kind::RandBorel: {
            const RandBorelArgs& args = *cmd.rand;
            std::string out = "randborel q=" + std::to_string(args.q) +
                              " maxexp=" + std::to_string(args.max_exponent);
            if (!args.sizes.empty()) {
                out += " sizes=";
                for (std::size_t i = 0; i < args.sizes.size(); ++i) {
                    if (i > 0) {
                        out += ",";
                    }
                    out += std::to_string(args.sizes[i]);
                }
            }
            if (args.seed) {
                out += " seed=" + std::to_string(*args.seed);
            }
            return out;
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Interpreter
// ---------------------------------------------------------------------------

MonomialIdeal eval_expr(const IdealExpr& expr, const RingContext& ctx,
                        const std::map<std::string, MonomialIdeal>& env) {
    switch (expr.kind) {
        case IdealExpr::Kind::Literal:
            return MonomialIdeal(ctx, expr.literal);
        case IdealExpr::Kind::Ident:
            return env.at(expr.ident);  // parser guarantees the binding exists
        case IdealExpr::Kind::Sum:
            return eval_expr(expr.children[0], ctx, env) +
                   eval_expr(expr.children[1], ctx, env);
        case IdealExpr::Kind::Product:
            return eval_expr(expr.children[0], ctx, env) *
                   eval_expr(expr.children[1], ctx, env);
        case IdealExpr::Kind::Power:
            return pow(eval_expr(expr.children[0], ctx, env), static_cast<int>(expr.number));
        case IdealExpr::Kind::Intersect:
            return intersect(eval_expr(expr.children[0], ctx, env),
                             eval_expr(expr.children[1], ctx, env));
        case IdealExpr::Kind::Colon:
            return colon(eval_expr(expr.children[0], ctx, env),
                         eval_expr(expr.children[1], ctx, env));
        case IdealExpr::Kind::Sat:
            return saturate(eval_expr(expr.children[0], ctx, env),
                            eval_expr(expr.children[1], ctx, env));
        case IdealExpr::Kind::Trunc:
            return truncate_from(eval_expr(expr.children[0], ctx, env), expr.number);
    }
    throw std::logic_error("unhandled expression kind");
}

std::string bool_text(bool value) { return value ? "true" : "false"; }

std::string prime_text(const RingContext& ctx, const std::vector<int>& support) {
    std::string out = "(";
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += ctx.var_name(support[i]);
    }
    out += ")";
    return out;
}

struct Report {
    nlohmann::json json;
    std::string text;
};

Report run_command(const Command& cmd, const RingContext& ctx,
                   const std::map<std::string, MonomialIdeal>& env,
                   const RunOptions& options) {
    Report report;
    switch (cmd.kind) {
        case Command::Kind::IsBorel: {
            MonomialIdeal ideal = eval_expr(cmd.exprs[0], ctx, env);
            bool definitional = is_borel_definitional(ideal);
            bool exchange = is_borel_exchange(ideal);
            bool structural = false;
            try {
                structural = validate_structure(ctx, decompose_structure(ideal));
            } catch (const StructureViolationError&) {
                structural = false;
            }
            bool agree = definitional == exchange && exchange == structural;
            report.json = {{"agree", agree},
                           {"command", "isborel"},
                           {"definitional", definitional},
                           {"exchange", exchange},
                           {"structural", structural}};
            report.text = "isborel: definitional=" + bool_text(definitional) +
                          " exchange=" + bool_text(exchange) +
                          " structural=" + bool_text(structural) +
                          " agree=" + bool_text(agree);
            break;
        }
        case Command::Kind::Reg: {
            RegularityCertificate cert = regularity(eval_expr(cmd.exprs[0], ctx, env));
            report.json = {{"certificate", to_json(cert)}, {"command", "reg"}};
            report.text = "reg: reg=" + std::to_string(cert.reg) +
                          " bound=" + std::to_string(cert.bound_used) + " trace=[";
            for (std::size_t i = 0; i < cert.trace.size(); ++i) {
                if (i > 0) {
                    report.text += " ";
                }
                report.text += std::to_string(cert.trace[i].first) + ":" +
                               (cert.trace[i].second ? "stable" : "unstable");
            }
            report.text += "]";
            break;
        }
        case Command::Kind::RegCheck: {
            MonomialIdeal ideal = eval_expr(cmd.exprs[0], ctx, env);
            RegularityCertificate cert = regularity(ideal);
            std::int64_t oracle = regularity_oracle(ideal, options.betti_budget);
            bool equal = cert.reg == oracle;
            report.json = {{"command", "regcheck"},
                           {"equal", equal},
                           {"oracle", oracle},
                           {"reg", cert.reg}};
            report.text = "regcheck: reg=" + std::to_string(cert.reg) +
                          " oracle=" + std::to_string(oracle) + " equal=" + bool_text(equal);
            break;
        }
        case Command::Kind::Stable: {
            MonomialIdeal truncated =
                truncate_from(eval_expr(cmd.exprs[0], ctx, env), *cmd.level);
            bool stable = is_stable(truncated);
            report.json = {{"command", "stable"}, {"e", *cmd.level}, {"stable", stable}};
            report.text = "stable: e=" + std::to_string(*cmd.level) +
                          " stable=" + bool_text(stable);
            break;
        }
        case Command::Kind::Decompose: {
            BorelStructure s = decompose_structure(eval_expr(cmd.exprs[0], ctx, env));
            report.json = {{"command", "decompose"}, {"structure", to_json(s)}};
            report.text = "decompose: q=" + std::to_string(s.q) + " pure=[";
            for (std::size_t i = 0; i < s.pure_exponents.size(); ++i) {
                if (i > 0) {
                    report.text += ",";
                }
                report.text += std::to_string(s.pure_exponents[i]);
            }
            report.text += "] counts=[" + std::to_string(s.stratum0.size());
            for (const auto& stratum : s.strata) {
                report.text += "," + std::to_string(stratum.size());
            }
            report.text += "]";
            for (const Monomial& v : s.stratum0) {
                report.text += "\n  stratum0: " + to_string(ctx, v);
            }
            for (std::size_t i = 0; i < s.strata.size(); ++i) {
                for (const StratumEntry& entry : s.strata[i]) {
                    report.text += "\n  stratum" + std::to_string(i + 1) + ": v=" +
                                   to_string(ctx, entry.v) + " a=" + std::to_string(entry.a);
                }
            }
            break;
        }
        case Command::Kind::Ass: {
            AssociatedPrimes primes =
                associated_primes(eval_expr(cmd.exprs[0], ctx, env), options.betti_budget);
            bool initial = check_initial_segments(primes);
            report.json = {{"command", "ass"},
                           {"initial_segments", initial},
                           {"primes", to_json(primes).at("primes")}};
            report.text = "ass: primes=";
            bool first = true;
            for (const std::vector<int>& support : primes) {
                if (!first) {
                    report.text += " ";
                }
                report.text += prime_text(ctx, support);
                first = false;
            }
            report.text += " initial_segments=" + bool_text(initial);
            break;
        }
        case Command::Kind::Betti: {
            BettiTable table =
                betti_table(eval_expr(cmd.exprs[0], ctx, env), options.betti_budget);
            report.json = {{"command", "betti"}, {"table", to_json(table)}};
            std::string grid = render_betti_grid(table);
            if (!grid.empty() && grid.back() == '\n') {
                grid.pop_back();
            }
            report.text = "betti:\n" + grid;
            break;
        }
        case Command::Kind::Eq: {
            bool equal =
                eval_expr(cmd.exprs[0], ctx, env) == eval_expr(cmd.exprs[1], ctx, env);
            report.json = {{"command", "eq"}, {"equal", equal}};
            report.text = "eq: " + bool_text(equal);
            break;
        }
        case Command::Kind::RandBorel: {
            const RandBorelArgs& args = *cmd.rand;
            BorelBudget budget;
            budget.q = args.q;
            budget.max_exponent = args.max_exponent;
            budget.stratum_sizes = args.sizes;
            std::uint64_t seed = args.seed.value_or(options.seed);
            MonomialIdeal ideal = random_borel(ctx, budget, seed);
            report.json = {{"command", "randborel"},
                           {"ideal", to_json(ideal)},
                           {"seed", seed}};
            report.text = "randborel: seed=" + std::to_string(seed) + " " + to_string(ideal);
            break;
        }
    }
    return report;
}

}  // namespace

Script parse_script(std::string_view text) {
    return Parser(text).parse();
}

std::string print_script(const Script& script) {
    std::string out;
    for (const Statement& stmt : script.statements) {
        switch (stmt.kind) {
            case Statement::Kind::Ring:
                out += "ring " + std::to_string(stmt.ring_nvars) + ";\n";
                break;
            case Statement::Kind::Let:
                out += stmt.name + " = " + expr_text(*stmt.expr) + ";\n";
                break;
            case Statement::Kind::Command:
                out += command_text(*stmt.command) + ";\n";
                break;
        }
    }
    return out;
}

void run_script(const Script& script, const RunOptions& options, std::ostream& out) {
    std::optional<RingContext> ctx;
    std::map<std::string, MonomialIdeal> env;
    for (const Statement& stmt : script.statements) {
        if (stmt.kind != Statement::Kind::Ring && !ctx) {
            // parse_script rules this out; hand-built scripts may not.
            throw Error("ring not declared");
        }
        switch (stmt.kind) {
            case Statement::Kind::Ring:
                ctx.emplace(stmt.ring_nvars);
                break;
            case Statement::Kind::Let:
                env.insert_or_assign(stmt.name, eval_expr(*stmt.expr, *ctx, env));
                break;
            case Statement::Kind::Command: {
                Report report = run_command(*stmt.command, *ctx, env, options);
                if (!options.quiet) {
                    out << (options.json ? report.json.dump() : report.text) << "\n";
                }
                break;
            }
        }
    }
}

}  // namespace borelkit
