#include "loewy/session.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "loewy/checkers.hpp"
#include "loewy/invariants.hpp"

namespace loewy {
namespace {

using ordered = nlohmann::ordered_json;

[[noreturn]] void fail_at(unsigned line, unsigned col, const std::string& msg) {
    throw usage_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg);
}

[[noreturn]] void fail_line(unsigned line, const std::string& msg) {
    throw usage_error("line " + std::to_string(line) + ": " + msg);
}

// ---------- tokens ----------

struct Token {
    enum class Kind { ident, number, punct, flag, end };
    Kind kind = Kind::end;
    std::string text;
    char ch = 0;
    unsigned col = 0;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex_line(const std::string& s, unsigned line) {
    static const std::string punct = "()[],=^*+-";
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '#') break;
        unsigned col = static_cast<unsigned>(i) + 1;
        if (c == '-' && i + 2 < s.size() && s[i + 1] == '-' && ident_start(s[i + 2])) {
            std::size_t j = i + 2;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Token::Kind::flag, s.substr(i + 2, j - i - 2), 0, col});
            i = j;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            out.push_back({Token::Kind::ident, s.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i > 15) fail_at(line, col, "number has too many digits");
            out.push_back({Token::Kind::number, s.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        if (punct.find(c) != std::string::npos) {
            out.push_back({Token::Kind::punct, std::string(1, c), c, col});
            ++i;
            continue;
        }
        fail_at(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::end, "", 0, static_cast<unsigned>(s.size()) + 1});
    return out;
}

struct Cursor {
    const std::vector<Token>& ts;
    unsigned line;
    std::size_t pos = 0;

    const Token& peek() const { return ts[pos]; }
    Token take() {
        Token t = ts[pos];
        if (t.kind != Token::Kind::end) ++pos;
        return t;
    }
    bool at_punct(char c) const {
        return peek().kind == Token::Kind::punct && peek().ch == c;
    }
    void expect_punct(char c, const std::string& where) {
        if (!at_punct(c)) fail_at(line, peek().col, "expected '" + std::string(1, c) + "' " + where);
        take();
    }
    unsigned long long expect_number(const std::string& what) {
        if (peek().kind != Token::Kind::number) fail_at(line, peek().col, "expected " + what);
        return std::stoull(take().text);
    }
    std::string expect_ident(const std::string& what) {
        if (peek().kind != Token::Kind::ident) fail_at(line, peek().col, "expected " + what);
        return take().text;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::end) fail_at(line, peek().col, "unexpected trailing input");
    }
};

// ---------- polynomial expressions ----------
// expr := [sign] term { sign term }; term := factor { '*' factor };
// factor := INT | VAR ['^' INT]. Integer coefficients only, so the canonical
// text printed by Polynomial::str always reparses to the same polynomial.

Field ring_field(unsigned long ch) { return ch == 0 ? Field::rationals() : Field::prime(ch); }

Polynomial parse_poly(Cursor& cur, const std::vector<std::string>& vars, const Field& f) {
    unsigned nv = static_cast<unsigned>(vars.size());
    auto var_index = [&](const Token& t) -> unsigned {
        for (unsigned i = 0; i < nv; ++i)
            if (vars[i] == t.text) return i;
        fail_at(cur.line, t.col, "unknown variable '" + t.text + "'");
    };
    Polynomial p = Polynomial::zero(nv, f);
    bool lead = true;
    while (true) {
        long long sign = 1;
        if (cur.at_punct('+') || cur.at_punct('-')) {
            sign = cur.at_punct('-') ? -1 : 1;
            cur.take();
        } else if (!lead) {
            break;
        }
        Scalar coeff = Scalar::from_int(f, sign);
        Monomial mono = Monomial::one(nv);
        while (true) {
            const Token& t = cur.peek();
            if (t.kind == Token::Kind::number) {
                coeff = coeff * Scalar::from_int(f, static_cast<long long>(std::stoull(cur.take().text)));
            } else if (t.kind == Token::Kind::ident) {
                Token v = cur.take();
                unsigned idx = var_index(v);
                unsigned long long e = 1;
                if (cur.at_punct('^')) {
                    cur.take();
                    e = cur.expect_number("an exponent");
                    if (e > 64) fail_at(cur.line, v.col, "exponent exceeds 64");
                }
                mono = mono.times(Monomial::var(idx, nv, static_cast<unsigned>(e)));
                if (mono.deg > 64) fail_at(cur.line, v.col, "term degree exceeds 64");
            } else {
                fail_at(cur.line, t.col, "expected a coefficient or a variable");
            }
            if (cur.at_punct('*')) {
                cur.take();
                continue;
            }
            break;
        }
        if (!coeff.is_zero()) p = p + Polynomial::from_terms({{mono, coeff}}, nv, f);
        lead = false;
    }
    return p;
}

// comma-separated list ending at ')', each entry remembered with its start column
std::vector<std::pair<Polynomial, unsigned>> parse_poly_list(Cursor& cur,
                                                             const std::vector<std::string>& vars,
                                                             const Field& f, bool allow_empty) {
    std::vector<std::pair<Polynomial, unsigned>> out;
    if (cur.at_punct(')')) {
        if (!allow_empty) fail_at(cur.line, cur.peek().col, "expected at least one element");
        return out;
    }
    while (true) {
        unsigned col = cur.peek().col;
        out.emplace_back(parse_poly(cur, vars, f), col);
        if (cur.at_punct(',')) {
            cur.take();
            continue;
        }
        break;
    }
    return out;
}

Polynomial poly_from_text(const std::string& text, const std::vector<std::string>& vars,
                          const Field& f, unsigned line) {
    std::vector<Token> ts = lex_line(text, line);
    Cursor cur{ts, line};
    Polynomial p = parse_poly(cur, vars, f);
    cur.expect_end();
    return p;
}

// ---------- parse-time name table ----------

struct RingSig {
    bool semigroup = false;
    unsigned long characteristic = 0;
    std::vector<std::string> vars;
};

struct ParseState {
    std::map<std::string, RingSig> rings;
    std::map<std::string, std::string> module_ring;
    bool taken(const std::string& n) const { return rings.count(n) || module_ring.count(n); }
};

const RingSig& expect_ring(Cursor& cur, const ParseState& st, std::string& name_out) {
    Token t = cur.take();
    if (t.kind != Token::Kind::ident) fail_at(cur.line, t.col, "expected a ring name");
    auto it = st.rings.find(t.text);
    if (it == st.rings.end()) {
        if (st.module_ring.count(t.text))
            fail_at(cur.line, t.col, "'" + t.text + "' is a module, not a ring");
        fail_at(cur.line, t.col, "unknown ring '" + t.text + "'");
    }
    name_out = t.text;
    return it->second;
}

// ---------- declarations ----------

Statement parse_ring_decl(Cursor& cur, ParseState& st) {
    Statement out;
    out.kind = Statement::Kind::declaration;
    out.line = cur.line;
    Declaration& d = out.decl;

    Token name = cur.take();
    if (name.kind != Token::Kind::ident) fail_at(cur.line, name.col, "expected a ring name");
    if (st.taken(name.text)) fail_at(cur.line, name.col, "name '" + name.text + "' is already declared");
    d.name = name.text;
    cur.expect_punct('=', "after the ring name");
    Token head = cur.take();
    if (head.kind != Token::Kind::ident || (head.text != "quotient" && head.text != "semigroup"))
        fail_at(cur.line, head.col, "expected quotient(...) or semigroup(...)");
    cur.expect_punct('(', "after '" + head.text + "'");

    if (head.text == "semigroup") {
        d.kind = Declaration::Kind::ring_semigroup;
        while (true) {
            unsigned col = cur.peek().col;
            unsigned long long v = cur.expect_number("a semigroup generator");
            if (v == 0) fail_at(cur.line, col, "semigroup generators must be positive");
            if (v > 1000000) fail_at(cur.line, col, "semigroup generator is too large");
            d.numbers.push_back(static_cast<long long>(v));
            if (cur.at_punct(',')) {
                cur.take();
                continue;
            }
            break;
        }
        cur.expect_punct(')', "to close semigroup(...)");
        long long g = 0;
        for (long long v : d.numbers) g = std::gcd(g, v);
        if (g != 1)
            fail_at(cur.line, name.col,
                    "semigroup generators must have gcd 1, got gcd " + std::to_string(g));
        st.rings[d.name] = {true, 0, {"t"}};
        return out;
    }

    d.kind = Declaration::Kind::ring_quotient;
    Token fld = cur.take();
    if (fld.kind != Token::Kind::ident || (fld.text != "Q" && fld.text != "Fp"))
        fail_at(cur.line, fld.col, "expected a coefficient field, Q or Fp(p)");
    if (fld.text == "Fp") {
        cur.expect_punct('(', "after Fp");
        unsigned pcol = cur.peek().col;
        unsigned long long p = cur.expect_number("a prime characteristic");
        cur.expect_punct(')', "to close Fp(...)");
        try {
            (void)Field::prime(static_cast<unsigned long>(p));
        } catch (const usage_error& e) {
            fail_at(cur.line, pcol, e.what());
        }
        d.characteristic = static_cast<unsigned long>(p);
    }
    cur.expect_punct('[', "before the variable list");
    while (true) {
        Token v = cur.take();
        if (v.kind != Token::Kind::ident) fail_at(cur.line, v.col, "expected a variable name");
        if (std::find(d.vars.begin(), d.vars.end(), v.text) != d.vars.end())
            fail_at(cur.line, v.col, "duplicate variable '" + v.text + "'");
        d.vars.push_back(v.text);
        if (cur.at_punct(',')) {
            cur.take();
            continue;
        }
        break;
    }
    if (d.vars.size() > kMaxVars)
        fail_at(cur.line, name.col, "too many variables, the cap is " + std::to_string(kMaxVars));
    cur.expect_punct(']', "to close the variable list");
    cur.expect_punct(',', "between the polynomial ring and the ideal");
    Token id = cur.take();
    if (id.kind != Token::Kind::ident || id.text != "ideal")
        fail_at(cur.line, id.col, "expected ideal(...)");
    cur.expect_punct('(', "after 'ideal'");
    Field f = ring_field(d.characteristic);
    auto gens = parse_poly_list(cur, d.vars, f, true);
    cur.expect_punct(')', "to close ideal(...)");
    cur.expect_punct(')', "to close quotient(...)");
    for (auto& [p, col] : gens) {
        if (p.is_zero()) fail_at(cur.line, col, "zero generator in ideal");
        if (!p.is_homogeneous()) {
            if (!p.constant_coefficient().is_zero())
                fail_at(cur.line, col,
                        "generator has a constant term, the quotient is not local at the origin");
            fail_at(cur.line, col, "generator is not homogeneous");
        }
        if (p.degree() == 0) fail_at(cur.line, col, "constant generator defines the zero ring");
        d.gens.push_back(p.str(d.vars));
    }
    st.rings[d.name] = {false, d.characteristic, d.vars};
    return out;
}

Statement parse_module_decl(Cursor& cur, ParseState& st) {
    Statement out;
    out.kind = Statement::Kind::declaration;
    out.line = cur.line;
    Declaration& d = out.decl;

    Token name = cur.take();
    if (name.kind != Token::Kind::ident) fail_at(cur.line, name.col, "expected a module name");
    if (st.taken(name.text)) fail_at(cur.line, name.col, "name '" + name.text + "' is already declared");
    d.name = name.text;
    cur.expect_punct('=', "after the module name");
    Token head = cur.take();
    if (head.kind != Token::Kind::ident || (head.text != "cyclic" && head.text != "koszul"))
        fail_at(cur.line, head.col, "expected cyclic(...) or koszul(...)");
    d.kind = head.text == "cyclic" ? Declaration::Kind::module_cyclic : Declaration::Kind::module_koszul;
    cur.expect_punct('(', "after '" + head.text + "'");
    const RingSig& sig = expect_ring(cur, st, d.ring);
    if (sig.semigroup && d.kind == Declaration::Kind::module_koszul)
        fail_at(cur.line, head.col, "koszul modules need a polynomial quotient ring");
    cur.expect_punct(',', "between the ring and the module data");
    Token kw = cur.take();
    const char* want = d.kind == Declaration::Kind::module_cyclic ? "ideal" : "elements";
    if (kw.kind != Token::Kind::ident || kw.text != want)
        fail_at(cur.line, kw.col, std::string("expected ") + want + "(...)");
    cur.expect_punct('(', std::string("after '") + want + "'");
    Field f = ring_field(sig.characteristic);
    auto polys = parse_poly_list(cur, sig.vars, f, d.kind == Declaration::Kind::module_cyclic);
    cur.expect_punct(')', std::string("to close ") + want + "(...)");
    cur.expect_punct(')', std::string("to close ") + head.text + "(...)");

    if (sig.semigroup) {
        if (polys.size() != 1)
            fail_at(cur.line, kw.col, "a semigroup module is cut out by a single power t^k");
        const Polynomial& p = polys[0].first;
        unsigned col = polys[0].second;
        if (p.terms().size() != 1 || !p.terms()[0].coeff.is_one())
            fail_at(cur.line, col, "a semigroup module generator must be a monic power t^k");
        unsigned k = p.terms()[0].mono.exp[0];
        if (k == 0) fail_at(cur.line, col, "the exponent in t^k must be positive");
        d.numbers.push_back(static_cast<long long>(k));
        d.gens.push_back(p.str(sig.vars));
    } else {
        for (auto& [p, col] : polys) {
            if (p.is_zero()) fail_at(cur.line, col, "zero element in the module data");
            if (!p.is_homogeneous()) fail_at(cur.line, col, "module data must be homogeneous");
            if (d.kind == Declaration::Kind::module_koszul && p.degree() == 0)
                fail_at(cur.line, col, "koszul elements must have positive degree");
            d.gens.push_back(p.str(sig.vars));
        }
    }
    st.module_ring[d.name] = d.ring;
    return out;
}

// ---------- commands ----------

Statement parse_command(Cursor& cur, ParseState& st, const Token& head) {
    Statement out;
    out.line = cur.line;

    if (head.text == "invariants") {
        out.kind = Statement::Kind::invariants;
        expect_ring(cur, st, out.ring);
        return out;
    }

    if (head.text == "verify") {
        Token mode = cur.take();
        if (mode.kind != Token::Kind::ident || (mode.text != "main" && mode.text != "all"))
            fail_at(cur.line, mode.col, "expected 'main' or 'all' after verify");
        expect_ring(cur, st, out.ring);
        if (mode.text == "main") {
            out.kind = Statement::Kind::verify_main;
            Token m = cur.take();
            if (m.kind != Token::Kind::ident) fail_at(cur.line, m.col, "expected a module name");
            auto it = st.module_ring.find(m.text);
            if (it == st.module_ring.end()) fail_at(cur.line, m.col, "unknown module '" + m.text + "'");
            if (it->second != out.ring)
                fail_at(cur.line, m.col, "module '" + m.text + "' is declared over ring '" +
                                             it->second + "', not '" + out.ring + "'");
            out.module = m.text;
            return out;
        }
        out.kind = Statement::Kind::verify_all;
        if (cur.peek().kind == Token::Kind::flag) {
            Token fl = cur.take();
            if (fl.text != "seed") fail_at(cur.line, fl.col, "unknown flag --" + fl.text);
            out.seed = cur.expect_number("a seed value");
        }
        return out;
    }

    if (head.text == "fuzz") {
        out.kind = Statement::Kind::fuzz;
        FuzzSpec& fz = out.fuzz;
        bool have_family = false, have_count = false, have_seed = false, have_box = false;
        while (cur.peek().kind == Token::Kind::flag) {
            Token fl = cur.take();
            if (fl.text == "family") {
                if (have_family) fail_at(cur.line, fl.col, "duplicate flag --family");
                have_family = true;
                std::string v = cur.expect_ident("a family name");
                while (cur.at_punct('-')) {
                    cur.take();
                    v += "-" + cur.expect_ident("the rest of the family name");
                }
                if (v == "mixed") fz.family = FuzzFamily::mixed;
                else if (v == "artinian-ci") fz.family = FuzzFamily::artinian;
                else if (v == "graded-ci") fz.family = FuzzFamily::graded;
                else if (v == "semigroup-symmetric") fz.family = FuzzFamily::semigroup;
                else fail_at(cur.line, fl.col, "unknown fuzz family '" + v + "'");
            } else if (fl.text == "count") {
                if (have_count) fail_at(cur.line, fl.col, "duplicate flag --count");
                have_count = true;
                unsigned long long v = cur.expect_number("a case count");
                if (v < 1 || v > 20000) fail_at(cur.line, fl.col, "fuzz count must be between 1 and 20000");
                fz.count = static_cast<unsigned>(v);
            } else if (fl.text == "seed") {
                if (have_seed) fail_at(cur.line, fl.col, "duplicate flag --seed");
                have_seed = true;
                fz.seed = cur.expect_number("a seed value");
            } else if (fl.text == "box") {
                if (have_box) fail_at(cur.line, fl.col, "duplicate flag --box");
                have_box = true;
                unsigned long long m = cur.expect_number("a multiplicity bound");
                cur.expect_punct(',', "between the box bounds");
                unsigned long long fb = cur.expect_number("a frobenius bound");
                if (m < 2 || m > 10) fail_at(cur.line, fl.col, "box multiplicity bound must be between 2 and 10");
                if (fb < 3 || fb > 100) fail_at(cur.line, fl.col, "box frobenius bound must be between 3 and 100");
                fz.box_mult = static_cast<long long>(m);
                fz.box_frob = static_cast<long long>(fb);
            } else {
                fail_at(cur.line, fl.col, "unknown flag --" + fl.text);
            }
        }
        if (!have_family || !have_count || !have_seed)
            fail_at(cur.line, cur.peek().col, "fuzz needs --family, --count and --seed");
        return out;
    }

    if (head.text == "set") {
        Token what = cur.take();
        if (what.kind != Token::Kind::ident || what.text != "truncation")
            fail_at(cur.line, what.col, "expected 'truncation'");
        out.kind = Statement::Kind::set_truncation;
        unsigned col = cur.peek().col;
        unsigned long long v = cur.expect_number("a truncation depth");
        if (v < 1 || v > 1000) fail_at(cur.line, col, "truncation must be between 1 and 1000");
        out.truncation = static_cast<unsigned>(v);
        return out;
    }

    fail_at(cur.line, head.col, "unknown command '" + head.text + "'");
}

Statement parse_statement(Cursor& cur, ParseState& st) {
    Token head = cur.take();
    if (head.kind != Token::Kind::ident) fail_at(cur.line, head.col, "expected a command");
    if (head.text == "ring") return parse_ring_decl(cur, st);
    if (head.text == "module") return parse_module_decl(cur, st);
    return parse_command(cur, st, head);
}

// ---------- execution ----------

struct RingEntry {
    Declaration decl;
    LocalAlgebraHandle handle;
    const char* backend;
};

struct ModuleEntry {
    Declaration decl;
    ModuleReport report;
};

struct ExecState {
    std::map<std::string, RingEntry> rings;
    std::map<std::string, ModuleEntry> modules;
    std::optional<unsigned> truncation;
};

RingEntry build_ring(const Declaration& d, unsigned line) {
    if (d.kind == Declaration::Kind::ring_semigroup)
        return {d, LocalAlgebraHandle(SemigroupRing::build(d.numbers)), "semigroup"};
    Field f = ring_field(d.characteristic);
    unsigned nv = static_cast<unsigned>(d.vars.size());
    std::vector<Polynomial> gens;
    for (const std::string& g : d.gens) gens.push_back(poly_from_text(g, d.vars, f, line));
    GradedAlgebra ga = GradedAlgebra::build(Ideal(gens, nv, f));
    if (ga.dimension() == 0)
        return {d, LocalAlgebraHandle(ArtinianAlgebra::build(Ideal(gens, nv, f))), "artinian"};
    return {d, LocalAlgebraHandle(std::move(ga)), "graded"};
}

ModuleEntry build_module(const ExecState& st, const Declaration& d, unsigned line) {
    const RingEntry& re = st.rings.at(d.ring);
    if (re.handle.backend() == LocalAlgebraHandle::Backend::semigroup)
        return {d, semigroup_cyclic_report(re.handle.as_semigroup(), d.numbers.at(0), d.name)};
    Field f = ring_field(re.decl.characteristic);
    std::vector<Polynomial> polys;
    for (const std::string& g : d.gens) polys.push_back(poly_from_text(g, re.decl.vars, f, line));
    if (re.handle.backend() == LocalAlgebraHandle::Backend::artinian) {
        if (d.kind == Declaration::Kind::module_koszul)
            fail_line(line, "koszul modules need a ring of positive dimension");
        return {d, module_report(FiniteModuleA::cyclic(re.handle.as_artinian(), polys), d.name)};
    }
    const GradedAlgebra& g = re.handle.as_graded();
    if (d.kind == Declaration::Kind::module_koszul)
        return {d, module_report(GradedModule::koszul(g, polys), d.name)};
    return {d, module_report(GradedModule::cyclic(g, polys), d.name)};
}

// the ring-level sweep always gets one canonical test module
std::vector<ModuleReport> canonical_modules(const RingEntry& re, const RingAnalysis& an) {
    switch (re.handle.backend()) {
        case LocalAlgebraHandle::Backend::artinian:
            return {module_report(FiniteModuleA::free_module(re.handle.as_artinian(), 1), "A")};
        case LocalAlgebraHandle::Backend::graded: {
            const GradedAlgebra& g = re.handle.as_graded();
            if (an.chain && !an.chain->forms.empty()) {
                const Polynomial& x = an.chain->forms[0];
                try {
                    GradedModule k = GradedModule::koszul(g, {x});
                    return {module_report(k, "A/(" + x.str(re.decl.vars) + ")")};
                } catch (const usage_error&) {
                    // the sampled form is a zerodivisor, fall back to the free module
                }
            }
            return {module_report(GradedModule::cyclic(g, {}), "A")};
        }
        case LocalAlgebraHandle::Backend::semigroup: {
            const SemigroupRing& s = re.handle.as_semigroup();
            long long e = s.multiplicity();
            return {semigroup_cyclic_report(s, e, "A/(t^" + std::to_string(e) + ")")};
        }
    }
    return {};
}

// ---------- rendering ----------

ordered ext_json(const ExtInt& e) {
    switch (e.kind) {
        case ExtInt::Kind::finite: return e.value;
        case ExtInt::Kind::plus_inf: return "inf";
        case ExtInt::Kind::minus_inf: return "-inf";
        case ExtInt::Kind::na: break;
    }
    return nullptr;
}

ordered invariants_json(const InvariantReport& r) {
    ordered inv;
    inv["ord"] = r.ord;
    inv["loewy"] = ext_json(r.loewy);
    inv["e"] = r.multiplicity;
    inv["index"] = ext_json(r.index);
    inv["theta"] = ext_json(r.theta);
    inv["rho"] = ext_json(r.rho);
    if (r.theta_seq.empty()) {
        inv["theta_seq"] = nullptr;
    } else {
        ordered arr = ordered::array();
        for (const ExtInt& e : r.theta_seq) arr.push_back(ext_json(e));
        inv["theta_seq"] = arr;
    }
    ordered reg;
    reg["value"] = r.reg;
    reg["certified_to"] = r.reg_certified_to ? ordered(*r.reg_certified_to) : ordered(nullptr);
    inv["reg"] = reg;
    inv["g_cm"] = r.g_cm;
    return inv;
}

ordered verdicts_json(const std::vector<Verdict>& vs) {
    ordered arr = ordered::array();
    for (const Verdict& v : vs) {
        ordered o;
        o["id"] = v.id;
        o["status"] = status_name(v.status);
        const std::string& w = v.witness.empty() ? v.reason : v.witness;
        if (!w.empty()) o["witness"] = w;
        arr.push_back(o);
    }
    return arr;
}

ordered ring_doc(const char* command, const RingEntry& re, const ModuleEntry* mod,
                 const InvariantReport& r, const std::vector<Verdict>& vs, std::uint64_t seed,
                 unsigned cap) {
    ordered doc;
    doc["version"] = kToolVersion;
    ordered in;
    in["command"] = command;
    in["ring"] = print_declaration(re.decl);
    if (mod) in["module"] = print_declaration(mod->decl);
    in["backend"] = re.backend;
    in["truncation"] = cap;
    doc["input"] = in;
    doc["invariants"] = invariants_json(r);
    doc["verdicts"] = verdicts_json(vs);
    doc["seed"] = seed;
    doc["ms"] = 0;
    return doc;
}

std::string ring_table(const char* command, const RingEntry& re, const ModuleEntry* mod,
                       const InvariantReport& r, const std::vector<Verdict>& vs, std::uint64_t seed,
                       unsigned cap, unsigned long long ms) {
    std::ostringstream o;
    o << command << " " << re.decl.name;
    if (mod) o << " " << mod->decl.name;
    o << "  [" << re.backend << "]  seed " << seed << "  truncation " << cap << "\n";
    o << "  ord        " << r.ord << "\n";
    o << "  loewy      " << r.loewy.str() << "\n";
    o << "  e          " << r.multiplicity << "\n";
    o << "  index      " << r.index.str() << "\n";
    o << "  theta      " << r.theta.str() << "\n";
    o << "  rho        " << r.rho.str() << "\n";
    o << "  theta_seq  ";
    if (r.theta_seq.empty()) {
        o << "n/a";
    } else {
        for (std::size_t i = 0; i < r.theta_seq.size(); ++i)
            o << (i ? ", " : "") << r.theta_seq[i].str();
    }
    o << "\n";
    o << "  reg        " << r.reg;
    if (r.reg_certified_to) o << " (certified to degree " << *r.reg_certified_to << ")";
    o << "\n";
    o << "  g_cm       " << (r.g_cm ? "yes" : "no") << "\n";
    if (!vs.empty()) {
        o << "  verdicts\n";
        for (const Verdict& v : vs) {
            std::string st = status_name(v.status);
            o << "    " << st << std::string(st.size() < 8 ? 8 - st.size() : 1, ' ') << v.id;
            const std::string& w = v.witness.empty() ? v.reason : v.witness;
            if (!w.empty()) o << "  " << w;
            o << "\n";
        }
    }
    o << "  ms         " << ms << "\n";
    return o.str();
}

const char* family_name(FuzzFamily f) {
    switch (f) {
        case FuzzFamily::mixed: return "mixed";
        case FuzzFamily::artinian: return "artinian-ci";
        case FuzzFamily::graded: return "graded-ci";
        case FuzzFamily::semigroup: return "semigroup-symmetric";
    }
    return "mixed";
}

std::string hex_digest(std::uint64_t d) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

unsigned long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return static_cast<unsigned long long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count());
}

struct Outcome {
    unsigned long fails = 0;
    unsigned long unknowns = 0;
};

void tally(const std::vector<Verdict>& vs, Outcome& oc) {
    for (const Verdict& v : vs) {
        if (v.status == VerdictStatus::fails) ++oc.fails;
        if (v.status == VerdictStatus::unknown) ++oc.unknowns;
    }
}

void maybe_small_field_warning(const Statement& s, const RingEntry& re, SessionResult& res) {
    if (re.decl.kind != Declaration::Kind::ring_quotient) return;
    unsigned long ch = re.decl.characteristic;
    if (ch == 0 || ch >= 1000) return;
    bool randomized = re.handle.backend() == LocalAlgebraHandle::Backend::graded ||
                      s.kind == Statement::Kind::verify_all;
    if (!randomized) return;
    res.warnings.push_back("line " + std::to_string(s.line) + ": warning: coefficient field F_" +
                           std::to_string(ch) +
                           " is small; randomized superficial sampling may be unlucky");
}

void execute_statement(const Statement& s, const SessionOptions& opt, ExecState& st,
                       SessionResult& res, Outcome& oc) {
    using K = Statement::Kind;
    switch (s.kind) {
        case K::declaration:
            if (s.decl.kind == Declaration::Kind::ring_quotient ||
                s.decl.kind == Declaration::Kind::ring_semigroup) {
                st.rings.emplace(s.decl.name, build_ring(s.decl, s.line));
            } else {
                st.modules.emplace(s.decl.name, build_module(st, s.decl, s.line));
            }
            return;
        case K::set_truncation:
            st.truncation = s.truncation;
            return;
        case K::fuzz: {
            auto t0 = std::chrono::steady_clock::now();
            FuzzSpec fz = s.fuzz;
            fz.jobs = opt.jobs;
            FuzzResult r = run_fuzz(fz);
            oc.fails += r.failed_verdicts;
            oc.unknowns += r.unknown_verdicts;
            unsigned long long ms = elapsed_ms(t0);
            if (opt.format == "table") {
                std::ostringstream o;
                o << "fuzz " << family_name(fz.family) << "  count " << fz.count << "  seed "
                  << fz.seed << "  box " << fz.box_mult << "," << fz.box_frob << "\n";
                o << "  cases    " << fz.count << "\n";
                o << "  failed   " << r.failed_verdicts << "\n";
                o << "  unknown  " << r.unknown_verdicts << "\n";
                o << "  digest   " << hex_digest(r.digest) << "\n";
                o << "  ms       " << ms << "\n";
                res.documents.push_back(o.str());
            } else {
                ordered doc;
                doc["version"] = kToolVersion;
                ordered in;
                in["command"] = "fuzz";
                in["family"] = family_name(fz.family);
                in["count"] = fz.count;
                in["box"] = ordered::array({fz.box_mult, fz.box_frob});
                doc["input"] = in;
                doc["cases"] = fz.count;
                doc["failed"] = r.failed_verdicts;
                doc["unknown"] = r.unknown_verdicts;
                doc["digest"] = hex_digest(r.digest);
                doc["seed"] = fz.seed;
                doc["ms"] = ms;
                res.documents.push_back(doc.dump(2) + "\n");
            }
            return;
        }
        default:
            break;
    }

    const RingEntry& re = st.rings.at(s.ring);
    std::uint64_t seed = s.seed.value_or(opt.seed);
    auto t0 = std::chrono::steady_clock::now();
    RingAnalysis an = analyze(re.handle, seed);
    unsigned cap = st.truncation.value_or(an.report.default_cap);
    an.report.default_cap = cap;
    maybe_small_field_warning(s, re, res);

    const ModuleEntry* mod = nullptr;
    std::vector<Verdict> vs;
    const char* command = "invariants";
    if (s.kind == K::verify_main) {
        command = "verify main";
        mod = &st.modules.at(s.module);
        std::vector<Verdict> all = check_module_bounds(an, {mod->report});
        for (auto& v : all)
            if (v.id == "loewy_ge_ord") vs.push_back(std::move(v));
    } else if (s.kind == K::verify_all) {
        command = "verify all";
        std::vector<ModuleReport> mods = canonical_modules(re, an);
        vs = check_all(re.handle, an, mods, seed);
    }
    tally(vs, oc);
    unsigned long long ms = elapsed_ms(t0);
    if (opt.format == "table") {
        res.documents.push_back(ring_table(command, re, mod, an.report, vs, seed, cap, ms));
    } else {
        ordered doc = ring_doc(command, re, mod, an.report, vs, seed, cap);
        doc["ms"] = ms;
        res.documents.push_back(doc.dump(2) + "\n");
    }
}

}  // namespace

std::string print_declaration(const Declaration& d) {
    auto join = [](const std::vector<std::string>& v, const char* sep) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += sep;
            out += v[i];
        }
        return out;
    };
    switch (d.kind) {
        case Declaration::Kind::ring_quotient: {
            std::string field =
                d.characteristic == 0 ? "Q" : "Fp(" + std::to_string(d.characteristic) + ")";
            return "ring " + d.name + " = quotient(" + field + "[" + join(d.vars, ",") +
                   "], ideal(" + join(d.gens, ", ") + "))";
        }
        case Declaration::Kind::ring_semigroup: {
            std::vector<std::string> ns;
            for (long long v : d.numbers) ns.push_back(std::to_string(v));
            return "ring " + d.name + " = semigroup(" + join(ns, ", ") + ")";
        }
        case Declaration::Kind::module_cyclic:
            return "module " + d.name + " = cyclic(" + d.ring + ", ideal(" + join(d.gens, ", ") +
                   "))";
        case Declaration::Kind::module_koszul:
            return "module " + d.name + " = koszul(" + d.ring + ", elements(" +
                   join(d.gens, ", ") + "))";
    }
    return "";
}

std::vector<Statement> parse_session(const std::string& text) {
    std::vector<Statement> out;
    ParseState st;
    std::istringstream in(text);
    std::string line;
    unsigned line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::vector<Token> ts = lex_line(line, line_no);
        if (ts.front().kind == Token::Kind::end) continue;
        Cursor cur{ts, line_no};
        out.push_back(parse_statement(cur, st));
        cur.expect_end();
    }
    return out;
}

SessionResult run_session(const std::string& text, const SessionOptions& opt) {
    SessionResult res;
    std::vector<Statement> sts;
    try {
        sts = parse_session(text);
    } catch (const usage_error& e) {
        res.warnings.push_back(std::string("error: ") + e.what());
        res.exit_code = 2;
        return res;
    }
    ExecState st;
    st.truncation = opt.truncation;
    Outcome oc;
    for (const Statement& s : sts) {
        try {
            execute_statement(s, opt, st, res, oc);
        } catch (const usage_error& e) {
            std::string w = e.what();
            if (w.rfind("line ", 0) != 0) w = "line " + std::to_string(s.line) + ": " + w;
            res.warnings.push_back("error: " + w);
            res.exit_code = 2;
            return res;
        }
    }
    res.exit_code = oc.fails ? 1 : (oc.unknowns ? 3 : 0);
    return res;
}

}  // namespace loewy
