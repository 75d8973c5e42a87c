#include "eds/dsl.hpp"

#include "eds/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace eds {

namespace {

struct Token {
    enum Kind { ident, number, sym, end } kind = end;
    std::string text;
    int line = 0;
    int col = 0;
};

using Statement = std::vector<Token>;

// Splits the source into logical statements; a trailing `\` joins the next line.
std::vector<Statement> tokenize(const std::string& src) {
    std::vector<Statement> out;
    Statement cur;
    std::istringstream in(src);
    std::string line;
    int lineno = 0;
    bool continued = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        Statement toks;
        size_t i = 0;
        while (i < line.size()) {
            char c = line[i];
            int col = static_cast<int>(i) + 1;
            if (c == '#') break;
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                size_t j = i;
                while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
                toks.push_back({Token::ident, line.substr(i, j - i), lineno, col});
                i = j;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t j = i;
                while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
                if (j < line.size() && line[j] == '.')
                    throw ParseError("decimal literals are not supported; write a fraction", lineno, col);
                toks.push_back({Token::number, line.substr(i, j - i), lineno, col});
                i = j;
                continue;
            }
            std::string two = line.substr(i, 2);
            if (two == "/\\" || two == "!=" || two == "->") {
                toks.push_back({Token::sym, two, lineno, col});
                i += 2;
                continue;
            }
            if (std::string("()[],;:=+-*/^\\").find(c) == std::string::npos)
                throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
            toks.push_back({Token::sym, std::string(1, c), lineno, col});
            ++i;
        }
        bool cont = !toks.empty() && toks.back().kind == Token::sym && toks.back().text == "\\";
        if (cont) toks.pop_back();
        for (auto& t : toks) {
            if (t.text == "\\") throw ParseError("stray '\\'", t.line, t.col);
            cur.push_back(t);
        }
        continued = cont;
        if (!continued && !cur.empty()) {
            cur.push_back({Token::end, "", lineno, static_cast<int>(line.size()) + 1});
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) {
        cur.push_back({Token::end, "", lineno, 1});
        out.push_back(std::move(cur));
    }
    return out;
}

struct Value {
    enum Kind { scalar, form, lie } kind = scalar;
    ScalarExpr s;
    DifferentialForm f;
    LieExpr l;

    static Value of(ScalarExpr e) {
        Value v;
        v.s = std::move(e);
        return v;
    }
    static Value of(DifferentialForm e) {
        Value v;
        v.kind = form;
        v.f = std::move(e);
        return v;
    }
    static Value of(LieExpr e) {
        Value v;
        v.kind = lie;
        v.l = std::move(e);
        return v;
    }
    bool zero() const {
        switch (kind) {
            case scalar: return s.is_zero();
            case form: return f.is_zero();
            default: return l.is_zero();
        }
    }
};

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::scalar: return "scalar";
        case Value::form: return "form";
        default: return "Lie expression";
    }
}

class Parser {
public:
    Parser(SystemFile& f, std::map<std::string, DifferentialForm>& forms, const Statement& toks)
        : f_(f), forms_(forms), toks_(toks) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Token::end; }
    bool is_sym(const std::string& s) const { return peek().kind == Token::sym && peek().text == s; }
    bool is_ident(const std::string& s) const { return peek().kind == Token::ident && peek().text == s; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Token::end) ++pos_;
        return t;
    }
    [[noreturn]] void fail(const std::string& what, const Token& t) const { throw ParseError(what, t.line, t.col); }
    [[noreturn]] void fail(const std::string& what) const { fail(what, peek()); }
    std::string describe(const Token& t) const { return t.kind == Token::end ? "end of line" : "'" + t.text + "'"; }

    void expect(const std::string& s) {
        if (!is_sym(s)) fail("expected '" + s + "', found " + describe(peek()));
        next();
    }
    void expect_keyword(const std::string& s) {
        if (!is_ident(s)) fail("expected '" + s + "', found " + describe(peek()));
        next();
    }
    std::string ident() {
        if (peek().kind != Token::ident) fail("expected identifier, found " + describe(peek()));
        return next().text;
    }
    void expect_end() {
        if (!at_end()) fail("unexpected " + describe(peek()));
    }

    // sum := wedge (('+'|'-') wedge)*
    Value expr() {
        Value v = wedge_term();
        while (is_sym("+") || is_sym("-")) {
            const Token& op = next();
            Value r = wedge_term();
            v = add(v, op.text == "-" ? negate(r) : r, op);
        }
        return v;
    }

    Value wedge_term() {
        Value v = product();
        while (is_sym("/\\")) {
            const Token& op = next();
            Value r = product();
            DifferentialForm a = as_form(v, op), b = as_form(r, op);
            int dim = static_cast<int>(f_.system.chart.base().size());
            if (a.degree() + b.degree() > dim)
                fail("wedge of degree " + std::to_string(a.degree()) + " and " + std::to_string(b.degree()) +
                         " forms exceeds the chart dimension",
                     op);
            v = Value::of(wedge(a, b));
        }
        return v;
    }

    Value product() {
        Value v = unary();
        while (is_sym("*") || is_sym("/")) {
            const Token& op = next();
            Value r = unary();
            v = op.text == "*" ? multiply(v, r, op) : divide(v, r, op);
        }
        return v;
    }

    Value unary() {
        if (is_sym("-")) {
            next();
            return negate(unary());
        }
        if (is_sym("+")) {
            next();
            return unary();
        }
        return power();
    }

    Value power() {
        const Token& start = peek();
        Value base = atom();
        if (!is_sym("^")) return base;
        const Token& op = next();
        Value e = unary_exponent();
        if (base.kind != Value::scalar) fail("'^' needs a scalar base; use /\\ for wedge", op);
        return Value::of(raise(base.s, constant(e, op), start));
    }

    // Exponents bind tightly: u^-1, u^(n+1), u^n^2 is u^(n^2).
    Value unary_exponent() {
        if (is_sym("-")) {
            next();
            return negate(unary_exponent());
        }
        return power();
    }

    Value atom() {
        const Token& t = peek();
        if (t.kind == Token::number) {
            next();
            return Value::of(ScalarExpr(ParamRational(Rational(t.text))));
        }
        if (is_sym("(")) {
            next();
            Value v = expr();
            expect(")");
            return v;
        }
        if (is_sym("[")) {
            const Token& open = next();
            Value a = expr();
            expect(",");
            Value b = expr();
            expect("]");
            return Value::of(bracket(as_lie(a, open), as_lie(b, open), RelationTable()));
        }
        if (t.kind != Token::ident) fail("expected expression, found " + describe(t));
        next();
        const std::string& n = t.text;
        if ((n == "Dx" || n == "Dt" || n == "d") && is_sym("(")) {
            next();
            Value v = expr();
            expect(")");
            if (n == "d") return Value::of(eds::d(as_form(v, t), f_.system.chart));
            if (v.kind != Value::scalar) fail(n + " needs a scalar argument", t);
            return Value::of(total_diff(v.s, n == "Dx" ? 'x' : 't', f_.system.chart));
        }
        return lookup(t);
    }

    Value lookup(const Token& t) {
        const std::string& n = t.text;
        const Chart& chart = f_.system.chart;
        for (auto& p : f_.system.params)
            if (p.name == n) return Value::of(ScalarExpr::param(n));
        try {
            if (chart.is_coordinate(n)) return Value::of(ScalarExpr::coord(n));
        } catch (const JetOrderError& e) {
            fail(e.what(), t);
        }
        if (n.size() > 1 && n[0] == 'd' && chart.is_base(n.substr(1)))
            return Value::of(DifferentialForm::differential(n.substr(1)));
        for (auto& g : f_.lie_generators)
            if (g == n) return Value::of(LieExpr::gen(n));
        if (auto it = forms_.find(n); it != forms_.end()) return Value::of(it->second);
        fail("undeclared identifier '" + n + "'", t);
    }

    Value negate(const Value& v) {
        switch (v.kind) {
            case Value::scalar: return Value::of(-v.s);
            case Value::form: return Value::of(-v.f);
            default: return Value::of(-v.l);
        }
    }

    Value add(const Value& a, const Value& b, const Token& op) {
        if (a.kind == b.kind) {
            switch (a.kind) {
                case Value::scalar: return Value::of(a.s + b.s);
                case Value::lie: return Value::of(a.l + b.l);
                case Value::form:
                    if (a.f.degree() != b.f.degree() && !a.f.is_zero() && !b.f.is_zero())
                        fail("sum of forms of different degree", op);
                    if (a.f.is_zero()) return b;
                    if (b.f.is_zero()) return a;
                    return Value::of(a.f + b.f);
            }
        }
        if (a.kind == Value::scalar && a.zero()) return b;
        if (b.kind == Value::scalar && b.zero()) return a;
        if (a.kind != Value::lie && b.kind != Value::lie) {
            DifferentialForm fa = as_form(a, op), fb = as_form(b, op);
            if (fa.degree() != fb.degree()) fail("sum of forms of different degree", op);
            return Value::of(fa + fb);
        }
        fail(std::string("cannot add ") + kind_name(a.kind) + " and " + kind_name(b.kind), op);
    }

    Value multiply(const Value& a, const Value& b, const Token& op) {
        if (a.kind == Value::scalar && b.kind == Value::scalar) return Value::of(a.s * b.s);
        if (a.kind == Value::scalar) return scale(b, a.s);
        if (b.kind == Value::scalar) return scale(a, b.s);
        if (a.kind == Value::form && b.kind == Value::form) fail("use /\\ to wedge forms", op);
        fail(std::string("cannot multiply ") + kind_name(a.kind) + " and " + kind_name(b.kind), op);
    }

    Value scale(const Value& v, const ScalarExpr& c) {
        if (v.kind == Value::form) return Value::of(v.f * c);
        return Value::of(v.l * c);
    }

    Value divide(const Value& a, const Value& b, const Token& op) {
        if (b.kind != Value::scalar) fail("divisor must be a scalar", op);
        if (b.s.is_zero()) fail("division by zero", op);
        ScalarExpr inv;
        if (b.s.is_constant()) {
            inv = ScalarExpr(ParamRational(1) / b.s.constant());
        } else if (b.s.is_single_term()) {
            inv = b.s.inverse();
        } else {
            fail("division by a sum is not supported", op);
        }
        if (a.kind == Value::scalar) return Value::of(a.s * inv);
        return scale(a, inv);
    }

    ParamRational constant(const Value& v, const Token& at) {
        if (v.kind != Value::scalar || !v.s.is_constant()) fail("expected a constant expression", at);
        return v.s.constant();
    }

    ScalarExpr raise(const ScalarExpr& base, const ParamRational& e, const Token& at) {
        if (base.is_single_term() || base.is_zero() || (e.is_integer() && e.to_rational() >= 0)) {
            try {
                return base.pow(e);
            } catch (const Error& err) {
                fail(err.what(), at);
            }
        }
        for (auto& a : f_.system.chart.aux()) {
            ScalarExpr def;
            for (auto& [c, k] : a.terms) def += ScalarExpr::coord(c).scaled(k);
            if (def == base) return ScalarExpr::coord(a.name, e);
        }
        fail("power of " + base.str() + " needs an auxiliary coordinate (coord NAME = ...)", at);
    }

    DifferentialForm as_form(const Value& v, const Token& at) {
        if (v.kind == Value::form) return v.f;
        if (v.kind == Value::scalar) return DifferentialForm::scalar(v.s);
        fail("expected a form, found a Lie expression", at);
    }

    LieExpr as_lie(const Value& v, const Token& at) {
        if (v.kind == Value::lie) return v.l;
        if (v.zero()) return LieExpr();
        fail(std::string("expected a Lie expression, found a ") + kind_name(v.kind), at);
    }

    ScalarExpr scalar() {
        const Token& at = peek();
        Value v = expr();
        if (v.kind != Value::scalar) fail(std::string("expected a scalar, found a ") + kind_name(v.kind), at);
        return v.s;
    }
    DifferentialForm form() {
        const Token& at = peek();
        return as_form(expr(), at);
    }
    LieExpr lie() {
        const Token& at = peek();
        return as_lie(expr(), at);
    }

    // lhs (= | !=) rhs over parameters.
    void relation(AssumptionSet& a) {
        const Token& at = peek();
        ScalarExpr lhs = scalar();
        bool eq = is_sym("=");
        if (!eq && !is_sym("!=")) fail("expected '=' or '!='");
        next();
        ScalarExpr rhs = scalar();
        ParamRational l = constant(Value::of(lhs), at), r = constant(Value::of(rhs), at);
        try {
            if (!eq) {
                a.add_disequality(l - r);
            } else if (l.den().is_constant() && l.num().size() == 1 && l.params().size() == 1 &&
                       l == ParamRational::param(*l.params().begin())) {
                a.add_substitution(*l.params().begin(), r);
            } else {
                a.add_equality(l - r);
            }
            a.check_consistent();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(e.what(), at);
        }
    }

    LieSymbol generator_symbol(const Token& at) {
        LieExpr e = lie();
        if (e.terms().size() != 1 || !(e.terms().begin()->second == ScalarExpr(1)))
            fail("expected a single Lie symbol", at);
        return e.terms().begin()->first;
    }

    std::pair<LieSymbol, LieSymbol> bracket_key() {
        const Token& open = peek();
        expect("[");
        LieSymbol a = generator_symbol(peek());
        expect(",");
        LieSymbol b = generator_symbol(peek());
        expect("]");
        if (a == b) fail("bracket of a symbol with itself", open);
        return {a, b};
    }

    void statement();

private:
    void declared_once(const std::string& kind, const std::string& name, const Token& at);
    SystemFile& f_;
    std::map<std::string, DifferentialForm>& forms_;
    const Statement& toks_;
    size_t pos_ = 0;
};

template <class Vec>
bool has_name(const Vec& v, const std::string& n) {
    for (auto& x : v)
        if (x.name == n) return true;
    return false;
}

void Parser::declared_once(const std::string& kind, const std::string& name, const Token& at) {
    bool dup = false;
    if (kind == "connection") dup = has_name(f_.connections, name);
    if (kind == "realize") dup = has_name(f_.realizations, name);
    if (kind == "conservation") dup = has_name(f_.conservation, name);
    if (kind == "backlund") dup = has_name(f_.backlund, name);
    if (kind == "case") dup = has_name(f_.cases, name);
    if (kind == "table") dup = has_name(f_.tables, name);
    if (kind == "constraints") dup = has_name(f_.constraints, name);
    if (dup) fail(kind + " " + name + " declared twice", at);
}

void Parser::statement() {
    const Token& kw = peek();
    std::string k = ident();
    ExteriorSystem& sys = f_.system;
    auto fresh_name = [&](const Token& at, const std::string& n) {
        bool taken = sys.chart.is_coordinate(n) || has_name(sys.params, n) || forms_.count(n);
        for (auto& g : f_.lie_generators) taken = taken || g == n;
        if (taken) fail("identifier '" + n + "' already declared", at);
    };

    if (k == "system") {
        if (!sys.name.empty()) fail("system declared twice", kw);
        sys.name = ident();
        expect_end();
    } else if (k == "param") {
        const Token& at = peek();
        Parameter p;
        p.name = ident();
        fresh_name(at, p.name);
        while (is_ident("nonzero") || is_ident("integer")) {
            if (next().text == "nonzero") {
                p.nonzero = true;
            } else {
                p.integer = true;
            }
        }
        sys.params.push_back(p);
        if (p.nonzero) sys.assumptions.add_nonzero(p.name);
        if (p.integer) sys.assumptions.add_integer(p.name);
        if (is_sym("=")) {
            const Token& eq = next();
            ParamRational v = constant(expr(), eq);
            if (v.params().count(p.name)) fail("parameter defined in terms of itself", eq);
            sys.assumptions.add_substitution(p.name, v);
            f_.param_values.push_back(p.name);
        }
        expect_end();
    } else if (k == "assume") {
        relation(sys.assumptions);
        expect_end();
    } else if (k == "coord") {
        const Token& at = peek();
        std::string first = ident();
        if (is_sym("=")) {
            next();
            fresh_name(at, first);
            const Token& vt = peek();
            ScalarExpr def = scalar();
            AuxDefinition a{first, {}};
            for (auto& [pm, c] : def.terms()) {
                if (pm.size() != 1 || !(pm.begin()->second == ParamRational(1)) || !sys.chart.is_base(pm.begin()->first))
                    fail("auxiliary coordinate must be a linear combination of base coordinates", vt);
                a.terms.emplace_back(pm.begin()->first, c);
            }
            if (a.terms.empty()) fail("auxiliary coordinate defined as zero", vt);
            sys.chart.add_aux(a);
            expect_end();
            return;
        }
        fresh_name(at, first);
        sys.chart.add_base(first);
        while (!at_end()) {
            const Token& t = peek();
            std::string n = ident();
            fresh_name(t, n);
            sys.chart.add_base(n);
        }
    } else if (k == "potential") {
        while (!at_end()) {
            const Token& t = peek();
            std::string n = ident();
            fresh_name(t, n);
            sys.chart.add_potential(n);
        }
    } else if (k == "generator") {
        if (at_end()) fail("expected generator names");
        while (!at_end()) {
            const Token& t = peek();
            std::string n = ident();
            fresh_name(t, n);
            f_.lie_generators.push_back(n);
            f_.table.add_generator(n);
        }
    } else if (k == "bracket") {
        const Token& at = peek();
        auto [a, b] = bracket_key();
        expect("=");
        LieExpr v = lie();
        expect_end();
        if (f_.table.lookup(a, b)) fail("bracket declared twice", at);
        try {
            f_.table.set(a, b, v);
        } catch (const Error& e) {
            fail(e.what(), at);
        }
    } else if (k == "form") {
        const Token& at = peek();
        std::string n = ident();
        fresh_name(at, n);
        expect("=");
        DifferentialForm v = form();
        expect_end();
        forms_[n] = v;
        sys.generators.push_back({n, v});
    } else if (k == "connection") {
        const Token& at = peek();
        Connection c;
        c.name = ident();
        declared_once(k, c.name, at);
        expect(":");
        expect_keyword("A");
        expect("=");
        c.A = lie();
        expect(";");
        expect_keyword("B");
        expect("=");
        c.B = lie();
        expect_end();
        f_.connections.push_back(c);
    } else if (k == "realize") {
        const Token& at = peek();
        NamedRealization r;
        r.name = ident();
        declared_once(k, r.name, at);
        expect(":");
        do {
            const Token& gt = peek();
            std::string g = ident();
            bool known = false;
            for (auto& x : f_.lie_generators) known = known || x == g;
            if (!known) fail("undeclared generator '" + g + "'", gt);
            if (r.map.count(g)) fail("generator " + g + " mapped twice", gt);
            expect("->");
            r.map[g] = lie();
        } while (is_sym(",") && (next(), true));
        expect_end();
        try {
            realization_closure(r.map);
        } catch (const Error& e) {
            fail(e.what(), at);
        }
        f_.realizations.push_back(r);
    } else if (k == "conservation") {
        const Token& at = peek();
        ConservationCandidate c;
        c.name = ident();
        declared_once(k, c.name, at);
        expect(":");
        expect_keyword("g");
        const Token& eq = peek();
        expect("=");
        expect("(");
        c.g.push_back(scalar());
        while (is_sym(",")) {
            next();
            c.g.push_back(scalar());
        }
        expect(")");
        if (c.g.size() != sys.generators.size())
            fail("expected " + std::to_string(sys.generators.size()) + " multipliers, one per form", eq);
        if (is_sym(";")) {
            next();
            expect_keyword("omega");
            expect("=");
            c.omega = form();
        }
        expect_end();
        f_.conservation.push_back(c);
    } else if (k == "backlund") {
        const Token& at = peek();
        BacklundSystem b;
        b.name = ident();
        declared_once(k, b.name, at);
        expect(":");
        expect_keyword("F");
        expect("=");
        b.F = scalar();
        expect(";");
        expect_keyword("G");
        expect("=");
        b.G = scalar();
        if (is_sym(";")) {
            next();
            expect_keyword("potential");
            expect("=");
            b.potential = scalar();
        }
        expect_end();
        f_.backlund.push_back(b);
    } else if (k == "case") {
        const Token& at = peek();
        NamedCase c;
        c.name = ident();
        declared_once(k, c.name, at);
        expect(":");
        if (!at_end()) {
            relation(c.assumptions);
            while (is_sym(",")) {
                next();
                relation(c.assumptions);
            }
        }
        expect_end();
        f_.cases.push_back(c);
    } else if (k == "table") {
        const Token& at = peek();
        NamedTable t;
        t.name = ident();
        declared_once(k, t.name, at);
        expect(":");
        while (!at_end()) {
            const Token& et = peek();
            auto [a, b] = bracket_key();
            expect("=");
            LieExpr v = lie();
            if (t.table.lookup(a, b)) fail("bracket declared twice", et);
            t.table.set(a, b, v);
            if (!is_sym(";")) break;
            next();
        }
        expect_end();
        t.table.set_closed(true);
        f_.tables.push_back(t);
    } else if (k == "constraints") {
        const Token& at = peek();
        NamedConstraints c;
        c.name = ident();
        declared_once(k, c.name, at);
        expect(":");
        while (!at_end()) {
            LieExpr lhs = lie();
            LieExpr rhs;
            if (is_sym("=")) {
                next();
                rhs = lie();
            }
            c.relations.push_back(lhs - rhs);
            if (!is_sym(";")) break;
            next();
        }
        expect_end();
        f_.constraints.push_back(c);
    } else {
        fail("unknown statement '" + k + "'", kw);
    }
}

template <class T>
const T& find_named(const std::vector<T>& v, const std::string& name, const std::string& kind) {
    for (auto& x : v)
        if (x.name == name) return x;
    throw Error("no " + kind + " named " + name);
}

Statement tokens_of(const std::string& text) {
    auto st = tokenize(text);
    if (st.size() != 1) throw ParseError("expected a single expression", 1, 1);
    return st[0];
}

std::string lie_text(const LieExpr& e) { return e.str(); }

std::string param_text(const ParamRational& r) { return r.str(); }

}  // namespace

const Connection& SystemFile::connection(const std::string& n) const { return find_named(connections, n, "connection"); }
const NamedRealization& SystemFile::realization(const std::string& n) const {
    return find_named(realizations, n, "realization");
}
const ConservationCandidate& SystemFile::candidate(const std::string& n) const {
    return find_named(conservation, n, "conservation candidate");
}
const BacklundSystem& SystemFile::backlund_system(const std::string& n) const {
    return find_named(backlund, n, "backlund system");
}
const NamedCase& SystemFile::assumption_case(const std::string& n) const { return find_named(cases, n, "case"); }
const NamedTable& SystemFile::named_table(const std::string& n) const { return find_named(tables, n, "table"); }
const NamedConstraints& SystemFile::constraint_set(const std::string& n) const {
    return find_named(constraints, n, "constraint set");
}

SystemFile parse_system(const std::string& source) {
    SystemFile f;
    std::map<std::string, DifferentialForm> forms;
    for (auto& st : tokenize(source)) {
        Parser p(f, forms, st);
        try {
            p.statement();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), st.front().line, st.front().col);
        }
    }
    if (f.system.name.empty()) throw ParseError("missing `system NAME`", 1, 1);
    return f;
}

SystemFile load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

namespace {

std::map<std::string, DifferentialForm> form_scope(const SystemFile& f) {
    std::map<std::string, DifferentialForm> m;
    for (auto& g : f.system.generators) m[g.name] = g.form;
    return m;
}

template <class Fn>
auto with_parser(const SystemFile& f, const std::string& text, Fn fn) {
    SystemFile scope = f;
    auto forms = form_scope(f);
    Statement st = tokens_of(text);
    Parser p(scope, forms, st);
    auto out = fn(p);
    p.expect_end();
    return out;
}

}  // namespace

void parse_relation(const SystemFile& f, const std::string& text, AssumptionSet& a) {
    with_parser(f, text, [&](Parser& p) {
        p.relation(a);
        return 0;
    });
}

ScalarExpr parse_scalar(const SystemFile& f, const std::string& text) {
    return with_parser(f, text, [](Parser& p) { return p.scalar(); });
}

DifferentialForm parse_form(const SystemFile& f, const std::string& text) {
    return with_parser(f, text, [](Parser& p) { return p.form(); });
}

LieExpr parse_lie(const SystemFile& f, const std::string& text) {
    return with_parser(f, text, [](Parser& p) { return p.lie(); });
}

std::string render_form(const DifferentialForm& f) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto& [b, c] : f.components()) {
        std::string wedges;
        for (auto& x : b) wedges += (wedges.empty() ? "d" : " /\\ d") + x;
        std::string t;
        if (b.empty()) {
            t = c.str();
        } else if (c == ScalarExpr(1)) {
            t = wedges;
        } else if (c == ScalarExpr(-1)) {
            t = "-" + wedges;
        } else {
            std::string cs = c.str();
            t = (cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs) + "*" + wedges;
        }
        if (first) {
            s = t;
        } else if (t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
        first = false;
    }
    return s;
}

namespace {

std::vector<std::string> relation_lines(const AssumptionSet& a, const std::set<std::string>& skip_subs,
                                        const std::set<std::string>& skip_nonzero) {
    std::vector<std::string> out;
    for (auto& [p, v] : a.substitutions())
        if (!skip_subs.count(p)) out.push_back(p + " = " + param_text(v));
    for (auto& p : a.nonzero_params())
        if (!skip_nonzero.count(p)) out.push_back(p + " != 0");
    for (auto& d : a.disequalities()) out.push_back(param_text(d) + " != 0");
    return out;
}

}  // namespace

std::string render_system(const SystemFile& f) {
    const ExteriorSystem& sys = f.system;
    std::ostringstream o;
    o << "system " << sys.name << "\n";
    std::map<std::string, ParamRational> subs(sys.assumptions.substitutions().begin(),
                                              sys.assumptions.substitutions().end());
    std::set<std::string> declared_values(f.param_values.begin(), f.param_values.end());
    std::set<std::string> flagged;
    for (auto& p : sys.params) {
        o << "param " << p.name;
        if (p.nonzero) o << " nonzero";
        if (p.integer) o << " integer";
        if (p.nonzero) flagged.insert(p.name);
        if (declared_values.count(p.name)) o << " = " << param_text(subs.at(p.name));
        o << "\n";
    }
    for (auto& line : relation_lines(sys.assumptions, declared_values, flagged)) o << "assume " << line << "\n";
    if (!sys.chart.base().empty()) {
        o << "coord";
        for (auto& c : sys.chart.base()) o << " " << c;
        o << "\n";
    }
    for (auto& a : sys.chart.aux()) {
        ScalarExpr def;
        for (auto& [c, k] : a.terms) def += ScalarExpr::coord(c).scaled(k);
        o << "coord " << a.name << " = " << def.str() << "\n";
    }
    if (!sys.chart.potentials().empty()) {
        o << "potential";
        for (auto& p : sys.chart.potentials()) o << " " << p;
        o << "\n";
    }
    if (!f.lie_generators.empty()) {
        o << "generator";
        for (auto& g : f.lie_generators) o << " " << g;
        o << "\n";
    }
    for (auto& g : sys.generators) o << "form " << g.name << " = " << render_form(g.form) << "\n";
    for (auto& [k, v] : f.table.entries())
        o << "bracket [" << k.first.str() << ", " << k.second.str() << "] = " << lie_text(v) << "\n";
    for (auto& c : f.connections)
        o << "connection " << c.name << " : A = " << lie_text(c.A) << " ; B = " << lie_text(c.B) << "\n";
    for (auto& r : f.realizations) {
        o << "realize " << r.name << " :";
        bool first = true;
        for (auto& [g, v] : r.map) {
            o << (first ? " " : ", ") << g << " -> " << lie_text(v);
            first = false;
        }
        o << "\n";
    }
    for (auto& c : f.conservation) {
        o << "conservation " << c.name << " : g = (";
        for (size_t i = 0; i < c.g.size(); ++i) o << (i ? ", " : "") << c.g[i].str();
        o << ")";
        if (c.omega) o << " ; omega = " << render_form(*c.omega);
        o << "\n";
    }
    for (auto& b : f.backlund) {
        o << "backlund " << b.name << " : F = " << b.F.str() << " ; G = " << b.G.str();
        if (b.potential) o << " ; potential = " << b.potential->str();
        o << "\n";
    }
    for (auto& c : f.cases) {
        o << "case " << c.name << " :";
        auto lines = relation_lines(c.assumptions, {}, {});
        for (size_t i = 0; i < lines.size(); ++i) o << (i ? ", " : " ") << lines[i];
        o << "\n";
    }
    for (auto& t : f.tables) {
        o << "table " << t.name << " :";
        bool first = true;
        for (auto& [k, v] : t.table.entries()) {
            o << (first ? " " : " ; ") << "[" << k.first.str() << ", " << k.second.str() << "] = " << lie_text(v);
            first = false;
        }
        o << "\n";
    }
    for (auto& c : f.constraints) {
        o << "constraints " << c.name << " :";
        for (size_t i = 0; i < c.relations.size(); ++i) o << (i ? " ; " : " ") << lie_text(c.relations[i]) << " = 0";
        o << "\n";
    }
    return o.str();
}

}  // namespace eds
