#include "smf/covariant.hpp"
#include <map>
#include <stdexcept>
#include <cctype>

namespace smf {

MPoly transvectant(const MPoly& f, const MPoly& g, int k) {
    int m = f.x_degree_if_homogeneous();
    int n = g.x_degree_if_homogeneous();
    if (m < 0 || n < 0)
        throw std::invalid_argument("transvectant: arguments must be homogeneous in x1,x2");
    if (k < 0 || k > m || k > n)
        throw std::invalid_argument("transvectant: k > min(deg f, deg g)");

    Rational pref = make_rational(factorial(m - k) * factorial(n - k),
                                  factorial(m) * factorial(n));

    // iterated derivative ladders: df[j] = d^k f / dx1^{k-j} dx2^j
    std::vector<MPoly> df(k + 1), dg(k + 1);
    {
        MPoly base = f;
        for (int i = 0; i < k; ++i) base = base.dx1();
        df[0] = base;
        for (int j = 1; j <= k; ++j) {
            // swap one dx1 for a dx2: recompute from f
            MPoly p = f;
            for (int i = 0; i < k - j; ++i) p = p.dx1();
            for (int i = 0; i < j; ++i) p = p.dx2();
            df[j] = p;
        }
        for (int j = 0; j <= k; ++j) {
            MPoly p = g;
            for (int i = 0; i < j; ++i) p = p.dx1();
            for (int i = 0; i < k - j; ++i) p = p.dx2();
            dg[j] = p;
        }
    }

    MPoly sum;
    for (int j = 0; j <= k; ++j) {
        Rational c = Rational(binomial(k, j));
        if (j & 1) c = -c;
        sum = sum + (df[j] * dg[j]) * c;
    }
    return sum * pref;
}

const MPoly& universal_sextic() {
    static MPoly f = [] {
        MPoly p;
        for (int i = 0; i <= 6; ++i) {
            std::array<int, 9> e{};
            e[i] = 1;
            e[7] = 6 - i;
            e[8] = i;
            p.add_term(Monomial::from_exponents(e), Rational(binomial(6, i)));
        }
        return p;
    }();
    return f;
}

namespace {

struct Recipe {
    const char* name;
    const char* lhs;  // first transvectant argument (generator name or "f")
    const char* rhs;  // second argument
    int rhs_pow;      // power applied to rhs
    int k;
    int deg_a, deg_x;
};

// Grace-Young generator table.
const Recipe kRecipes[] = {
    {"C_{1,6}", "f", nullptr, 0, 0, 1, 6},
    {"C_{2,0}", "f", "f", 1, 6, 2, 0},
    {"C_{2,4}", "f", "f", 1, 4, 2, 4},
    {"C_{2,8}", "f", "f", 1, 2, 2, 8},
    {"C_{3,2}", "C_{1,6}", "C_{2,4}", 1, 4, 3, 2},
    {"C_{3,6}", "f", "C_{2,4}", 1, 2, 3, 6},
    {"C_{3,8}", "f", "C_{2,4}", 1, 1, 3, 8},
    {"C_{3,12}", "f", "C_{2,8}", 1, 1, 3, 12},
    {"C_{4,0}", "C_{2,4}", "C_{2,4}", 1, 4, 4, 0},
    {"C_{4,4}", "f", "C_{3,2}", 1, 2, 4, 4},
    {"C_{4,6}", "f", "C_{3,2}", 1, 1, 4, 6},
    {"C_{4,10}", "C_{2,8}", "C_{2,4}", 1, 1, 4, 10},
    {"C_{5,2}", "C_{2,4}", "C_{3,2}", 1, 2, 5, 2},
    {"C_{5,4}", "C_{2,4}", "C_{3,2}", 1, 1, 5, 4},
    {"C_{5,8}", "C_{2,8}", "C_{3,2}", 1, 1, 5, 8},
    {"C_{6,0}", "C_{3,2}", "C_{3,2}", 1, 2, 6, 0},
    {"C_{6,6}^{(1)}", "C_{3,6}", "C_{3,2}", 1, 1, 6, 6},
    {"C_{6,6}^{(2)}", "C_{3,8}", "C_{3,2}", 1, 2, 6, 6},
    {"C_{7,2}", "f", "C_{3,2}", 2, 4, 7, 2},
    {"C_{7,4}", "f", "C_{3,2}", 2, 3, 7, 4},
    {"C_{8,2}", "C_{2,4}", "C_{3,2}", 2, 3, 8, 2},
    {"C_{9,4}", "C_{3,8}", "C_{3,2}", 2, 4, 9, 4},
    {"C_{10,0}", "f", "C_{3,2}", 3, 6, 10, 0},
    {"C_{10,2}", "f", "C_{3,2}", 3, 5, 10, 2},
    {"C_{12,2}", "C_{3,8}", "C_{3,2}", 3, 6, 12, 2},
    {"C_{15,0}", "C_{3,8}", "C_{3,2}", 4, 8, 15, 0},
};

// The recipe table lists every generator after its dependencies, so the whole
// ring can be built in one pass. Thread-safe static init gives read-many use.
const std::map<std::string, Covariant>& all_generators() {
    static const std::map<std::string, Covariant> cache = [] {
        std::map<std::string, Covariant> m;
        auto resolve = [&m](const char* arg) -> const MPoly& {
            if (std::string(arg) == "f") return universal_sextic();
            auto it = m.find(arg);
            if (it == m.end())
                throw std::logic_error(std::string("recipe out of order: ") + arg);
            return it->second.poly;
        };
        for (const auto& r : kRecipes) {
            Covariant c;
            if (!r.rhs) {
                c.poly = universal_sextic();
            } else {
                const MPoly& lhs = resolve(r.lhs);
                MPoly rhs = resolve(r.rhs);
                if (r.rhs_pow > 1) rhs = rhs.pow(r.rhs_pow);
                c.poly = transvectant(lhs, rhs, r.k);
            }
            c.deg_a = r.deg_a;
            c.deg_x = r.deg_x;
            if (c.poly.is_zero())
                throw std::logic_error(std::string("generator vanished: ") + r.name);
            if (c.poly.a_degree_if_homogeneous() != r.deg_a ||
                c.poly.x_degree_if_homogeneous() != r.deg_x)
                throw std::logic_error(std::string("generator degree mismatch: ") + r.name);
            m.emplace(r.name, std::move(c));
        }
        return m;
    }();
    return cache;
}

} // namespace

const Covariant& generator(const std::string& name) {
    const auto& cache = all_generators();
    auto it = cache.find(name);
    if (it == cache.end())
        throw std::invalid_argument("unknown covariant generator: " + name);
    return it->second;
}

std::vector<std::string> generator_names() {
    std::vector<std::string> v;
    for (const auto& r : kRecipes) v.push_back(r.name);
    return v;
}

// ---------------------------------------------------------------------------
// expression grammar:
//   expr    ::= ['-'] term (('+'|'-') term)*
//   term    ::= int-literal? product | int-literal
//   product ::= factor ('*'? factor)*
//   factor  ::= name ('^' int)? | '(' expr ')' ('^' int)?
// names: C_{a,b} optionally followed by ^{(i)}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Integer parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit((unsigned char)s[start])))
            fail("expected integer");
        return Integer(s.substr(start, pos - start));
    }

    int parse_exponent() {
        skip_ws();
        if (peek() == '{') {
            ++pos;
            Integer e = parse_int();
            skip_ws();
            if (peek() != '}') fail("expected '}' after exponent");
            ++pos;
            return (int)e.get_si();
        }
        return (int)parse_int().get_si();
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos;
        if (peek() != 'C') fail("expected generator name");
        ++pos;
        if (peek() != '_') fail("expected '_' in generator name");
        ++pos;
        if (peek() != '{') fail("expected '{' in generator name");
        size_t brace = pos;
        while (pos < s.size() && s[pos] != '}') ++pos;
        if (pos >= s.size()) fail("unterminated generator name");
        ++pos; // '}'
        std::string name = s.substr(start, pos - start);
        // superscript label ^{(i)} or ^(i) (part of the name, not a power)
        size_t save = pos;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            size_t caret = pos;
            ++pos;
            skip_ws();
            bool braced = pos < s.size() && s[pos] == '{';
            if (braced) { ++pos; skip_ws(); }
            if (pos < s.size() && s[pos] == '(') {
                while (pos < s.size() && s[pos] != ')') ++pos;
                if (pos >= s.size()) fail("unterminated superscript label");
                ++pos;
                if (braced) {
                    skip_ws();
                    if (pos >= s.size() || s[pos] != '}') fail("expected '}' after label");
                    ++pos;
                }
                // normalize to ^{(i)}
                std::string label = s.substr(caret, pos - caret);
                std::string norm = "^{(";
                for (char ch : label)
                    if (std::isdigit((unsigned char)ch)) norm += ch;
                norm += ")}";
                return name + norm;
            }
            pos = save; // plain power, handled by caller
        } else {
            pos = save;
        }
        return name;
    }

    ExprPtr make_literal(const Integer& v) {
        auto e = std::make_shared<CovariantExpr>();
        e->kind = CovariantExpr::Kind::Literal;
        e->literal = v;
        return e;
    }

    ExprPtr parse_factor() {
        skip_ws();
        ExprPtr base;
        if (peek() == '(') {
            ++pos;
            base = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos;
        } else if (peek() == 'C') {
            std::string name = parse_name();
            generator(name); // resolve now: unknown names are parse errors
            base = std::make_shared<CovariantExpr>();
            base->kind = CovariantExpr::Kind::Name;
            base->name = name;
        } else if (std::isdigit((unsigned char)peek())) {
            return make_literal(parse_int());
        } else {
            fail("expected factor");
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            int e = parse_exponent();
            if (e < 0) fail("negative exponent");
            auto p = std::make_shared<CovariantExpr>();
            p->kind = CovariantExpr::Kind::Pow;
            p->exponent = e;
            p->args.push_back(base);
            return p;
        }
        return base;
    }

    bool at_factor_start() {
        char c = peek();
        return c == '(' || c == 'C' || std::isdigit((unsigned char)c);
    }

    ExprPtr parse_product() {
        ExprPtr acc = parse_factor();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
            } else if (!at_factor_start()) {
                break;
            }
            auto rhs = parse_factor();
            auto m = std::make_shared<CovariantExpr>();
            m->kind = CovariantExpr::Kind::Mul;
            m->args = {acc, rhs};
            acc = m;
        }
        return acc;
    }

    ExprPtr parse_sum() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') { neg = true; ++pos; }
        else if (peek() == '+') ++pos;
        ExprPtr acc = parse_product();
        if (neg) {
            auto m = std::make_shared<CovariantExpr>();
            m->kind = CovariantExpr::Kind::Mul;
            m->args = {make_literal(Integer(-1)), acc};
            acc = m;
        }
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            char c = s[pos];
            if (c != '+' && c != '-') break;
            ++pos;
            auto rhs = parse_product();
            auto node = std::make_shared<CovariantExpr>();
            node->kind = c == '+' ? CovariantExpr::Kind::Add : CovariantExpr::Kind::Sub;
            node->args = {acc, rhs};
            acc = node;
        }
        return acc;
    }
};

struct EvalResult {
    MPoly poly;
    bool is_scalar = false; // pure literal, bidegree-free
    int deg_a = 0, deg_x = 0;
};

EvalResult eval_node(const ExprPtr& e) {
    switch (e->kind) {
        case CovariantExpr::Kind::Literal: {
            EvalResult r;
            r.poly = MPoly::constant(Rational(e->literal));
            r.is_scalar = true;
            return r;
        }
        case CovariantExpr::Kind::Name: {
            const Covariant& g = generator(e->name);
            return {g.poly, false, g.deg_a, g.deg_x};
        }
        case CovariantExpr::Kind::Pow: {
            EvalResult b = eval_node(e->args[0]);
            EvalResult r;
            r.poly = b.poly.pow(e->exponent);
            r.is_scalar = b.is_scalar;
            r.deg_a = b.deg_a * e->exponent;
            r.deg_x = b.deg_x * e->exponent;
            return r;
        }
        case CovariantExpr::Kind::Mul: {
            EvalResult a = eval_node(e->args[0]);
            EvalResult b = eval_node(e->args[1]);
            EvalResult r;
            r.poly = a.poly * b.poly;
            r.is_scalar = a.is_scalar && b.is_scalar;
            r.deg_a = a.deg_a + b.deg_a;
            r.deg_x = a.deg_x + b.deg_x;
            return r;
        }
        case CovariantExpr::Kind::Add:
        case CovariantExpr::Kind::Sub: {
            EvalResult a = eval_node(e->args[0]);
            EvalResult b = eval_node(e->args[1]);
            bool mismatch = false;
            if (!a.is_scalar && !b.is_scalar)
                mismatch = a.deg_a != b.deg_a || a.deg_x != b.deg_x;
            else if (a.is_scalar != b.is_scalar)
                mismatch = !(a.is_scalar ? b : a).poly.is_zero() &&
                           ((a.is_scalar ? b.deg_a : a.deg_a) != 0 ||
                            (a.is_scalar ? b.deg_x : a.deg_x) != 0);
            if (mismatch)
                throw std::invalid_argument("covariant expression is not bihomogeneous");
            EvalResult r;
            r.poly = e->kind == CovariantExpr::Kind::Add ? a.poly + b.poly : a.poly - b.poly;
            r.is_scalar = a.is_scalar && b.is_scalar;
            r.deg_a = a.is_scalar ? b.deg_a : a.deg_a;
            r.deg_x = a.is_scalar ? b.deg_x : a.deg_x;
            return r;
        }
    }
    throw std::logic_error("bad expression node");
}

} // namespace

ExprPtr parse_expr(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.parse_sum();
    if (!p.eof()) p.fail("trailing input");
    return e;
}

Covariant eval_expr(const ExprPtr& e) {
    EvalResult r = eval_node(e);
    Covariant c;
    c.poly = r.poly;
    if (r.poly.is_zero()) {
        c.deg_a = r.deg_a;
        c.deg_x = r.deg_x;
        return c;
    }
    c.deg_a = r.poly.a_degree_if_homogeneous();
    c.deg_x = r.poly.x_degree_if_homogeneous();
    if (c.deg_a < 0 || c.deg_x < 0)
        throw std::invalid_argument("covariant expression is not bihomogeneous");
    return c;
}

Covariant eval_expr(const std::string& text) {
    return eval_expr(parse_expr(text));
}

} // namespace smf
