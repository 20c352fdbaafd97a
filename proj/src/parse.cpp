// Copyright 2026 The twistcoh Authors
// SPDX-License-Identifier: Apache-2.0

#include "twistcoh/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace twistcoh {

namespace {

enum class Tok { ident, integer, sym, newline, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    long value = 0;  // integer tokens
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur_.line, cur_.col);
    }

  private:
    void advance() {
        for (;;) {
            while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r'))
                step();
            if (pos_ < s_.size() && s_[pos_] == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') step();
                continue;
            }
            break;
        }
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::end;
            cur_.text.clear();
            return;
        }
        char c = s_[pos_];
        if (c == '\n') {
            step();
            cur_.kind = Tok::newline;
            cur_.text = "\n";
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                num += s_[pos_];
                step();
            }
            cur_.kind = Tok::integer;
            cur_.text = num;
            try {
                cur_.value = std::stol(num);
            } catch (const std::out_of_range&) {
                throw ParseError("integer literal out of range: " + num, cur_.line, cur_.col);
            }
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                id += s_[pos_];
                step();
            }
            cur_.kind = Tok::ident;
            cur_.text = id;
            return;
        }
        static const std::string syms = "[]=+-*/^():,";
        if (syms.find(c) != std::string::npos) {
            cur_.kind = Tok::sym;
            cur_.text = std::string(1, c);
            step();
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void step() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token cur_;
};

bool is_sym(const Token& t, const char* s) { return t.kind == Tok::sym && t.text == s; }

// Splits identifiers like "e12" / "x3" into (letter, index); index 0 when the
// identifier is not of that shape.
std::pair<char, int> split_indexed(const std::string& id) {
    if (id.size() < 2) return {0, 0};
    char c = id[0];
    for (size_t k = 1; k < id.size(); ++k)
        if (!std::isdigit((unsigned char)id[k])) return {0, 0};
    int idx = std::stoi(id.substr(1));
    return {c, idx};
}

// A parsed sum of exterior monomials over one generator letter.
using GenForm = std::map<ExtIndex, Poly>;

class ExprParser {
  public:
    ExprParser(Lexer& lx, char gen, int nvars, int gen_count)
        : lx_(lx), gen_(gen), nvars_(nvars), gen_count_(gen_count) {}

    // expr := term (('+'|'-') term)*, ends at newline/end/']' boundary
    GenForm parse() {
        GenForm out;
        bool neg = false;
        if (is_sym(lx_.peek(), "-")) {
            lx_.take();
            neg = true;
        } else if (is_sym(lx_.peek(), "+")) {
            lx_.take();
        }
        for (;;) {
            parse_term(out, neg);
            const Token& t = lx_.peek();
            if (is_sym(t, "+")) {
                lx_.take();
                neg = false;
            } else if (is_sym(t, "-")) {
                lx_.take();
                neg = true;
            } else {
                break;
            }
        }
        // drop zeros
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

  private:
    void parse_term(GenForm& out, bool neg) {
        Poly coeff = Poly::constant(nvars_, neg ? Rational(-1) : Rational(1));
        ExtIndex idx;
        int sign = 1;
        bool any = false;
        for (;;) {
            const Token& t = lx_.peek();
            if (t.kind == Tok::integer) {
                coeff = coeff * Poly::constant(nvars_, parse_rational());
            } else if (t.kind == Tok::ident) {
                auto [letter, k] = split_indexed(t.text);
                if (letter == 'x') {
                    if (k < 1 || k > nvars_)
                        lx_.fail("variable " + t.text + " out of range (n = " +
                                 std::to_string(nvars_) + ")");
                    lx_.take();
                    int e = parse_exponent();
                    Exponents ev(nvars_, 0);
                    ev[k - 1] = e;
                    coeff = coeff * Poly::monomial(nvars_, ev, Rational(1));
                } else if (letter == gen_) {
                    if (k < 1 || k > gen_count_)
                        lx_.fail("generator " + t.text + " out of range (count = " +
                                 std::to_string(gen_count_) + ")");
                    lx_.take();
                    auto merged = wedge_merge(idx, ExtIndex{k});
                    if (!merged) {
                        coeff = Poly(nvars_);  // repeated generator: the term vanishes
                        merged = std::make_pair(idx, 1);
                    }
                    idx = merged->first;
                    sign *= merged->second;
                } else {
                    lx_.fail("unexpected identifier '" + t.text + "'");
                }
            } else if (is_sym(t, "(")) {
                lx_.take();
                ExprParser inner(lx_, gen_, nvars_, gen_count_);
                GenForm g = inner.parse();
                if (!is_sym(lx_.peek(), ")")) lx_.fail("expected ')'");
                lx_.take();
                Poly p(nvars_);
                for (auto& [I, q] : g) {
                    if (!I.empty()) lx_.fail("generators are not allowed inside parentheses");
                    p += q;
                }
                int e = parse_exponent();
                Poly pw = Poly::constant(nvars_, Rational(1));
                for (int r = 0; r < e; ++r) pw = pw * p;
                coeff = coeff * pw;
            } else {
                if (!any) lx_.fail("expected a term");
                break;
            }
            any = true;
            const Token& nx = lx_.peek();
            if (is_sym(nx, "*")) {
                lx_.take();
                continue;
            }
            if (is_sym(nx, "^")) {
                // wedge: '^' between generator-class tokens
                Token save = lx_.peek();
                lx_.take();
                const Token& after = lx_.peek();
                if (after.kind == Tok::ident && split_indexed(after.text).first == gen_) continue;
                throw ParseError("expected generator after '^'", save.line, save.col);
            }
            // implicit juxtaposition is not allowed; the term ends here
            break;
        }
        if (sign < 0) coeff = -coeff;
        Poly& slot = out.emplace(idx, Poly(nvars_)).first->second;
        slot += coeff;
    }

    Rational parse_rational() {
        Token n = lx_.take();
        long num = n.value;
        int e = 1;
        if (is_sym(lx_.peek(), "/")) {
            lx_.take();
            if (lx_.peek().kind != Tok::integer) lx_.fail("expected denominator");
            Token d = lx_.take();
            if (d.value == 0) throw ParseError("zero denominator", d.line, d.col);
            e = parse_int_exponent();
            Rational r = Rational(num) / Rational(d.value);
            return pow_rational(r, e);
        }
        e = parse_int_exponent();
        return pow_rational(Rational(num), e);
    }

    // '^' INT after a scalar primary; 1 when absent
    int parse_int_exponent() {
        if (!is_sym(lx_.peek(), "^")) return 1;
        // only an integer may follow here (wedge is meaningless after a scalar)
        Token caret = lx_.take();
        if (lx_.peek().kind != Tok::integer)
            throw ParseError("expected integer exponent", caret.line, caret.col);
        return (int)lx_.take().value;
    }

    int parse_exponent() {
        if (!is_sym(lx_.peek(), "^")) return 1;
        Token caret = lx_.take();
        if (lx_.peek().kind != Tok::integer)
            throw ParseError("expected integer exponent", caret.line, caret.col);
        Token e = lx_.take();
        if (e.value < 0) throw ParseError("negative exponent", e.line, e.col);
        return (int)e.value;
    }

    static Rational pow_rational(const Rational& r, int e) {
        Rational out(1);
        for (int k = 0; k < e; ++k) out *= r;
        return out;
    }

    Lexer& lx_;
    char gen_;
    int nvars_;
    int gen_count_;
};

void skip_newlines(Lexer& lx) {
    while (lx.peek().kind == Tok::newline) lx.take();
}

void expect_line_end(Lexer& lx) {
    if (lx.peek().kind != Tok::newline && lx.peek().kind != Tok::end)
        lx.fail("unexpected trailing token '" + lx.peek().text + "'");
}

struct RawSections {
    // section name -> list of (key tokens..., '=' consumed externally)
    std::string model_name = "model";
};

MixedForm genform_to_mixed(const AlgebroidModel& m, const GenForm& g) {
    MixedForm f = MixedForm::zero(m.rank, m.nvars, 1);
    std::map<int, Cochain> per_degree;
    for (auto& [I, p] : g) {
        int d = (int)I.size();
        auto it = per_degree.find(d);
        if (it == per_degree.end())
            it = per_degree.emplace(d, Cochain::zero(m.rank, m.nvars, d, 1)).first;
        it->second.add(I, 0, p);
    }
    for (auto& [d, w] : per_degree) f.set_component(w);
    return f;
}

// Intermediate, pre-validation contents of a model file.
struct FileData {
    std::string name;
    std::string kind;
    int rank = -1;
    int nvars = 0;
    std::optional<GenForm> pi;  // poisson: d-generator form of degree 2
    std::map<std::pair<int, int>, GenForm> brackets;
    std::map<int, GenForm> anchors;  // e_i -> d-generator degree-1 form
    int fiber = 1;
    bool has_connection = false;
    std::map<std::pair<int, int>, GenForm> nabla;  // (i, a) -> v-generator form
    std::optional<GenForm> theta;
    std::optional<GenForm> psi;
    int conn_line = 1, conn_col = 1;
};

FileData read_file_data(Lexer& lx) {
    FileData fd;
    std::string section;
    bool model_seen = false;

    auto require_model = [&](const Token& at) {
        if (!model_seen)
            throw ParseError("the [model] section must precede '" + at.text + "'", at.line,
                             at.col);
    };

    skip_newlines(lx);
    while (lx.peek().kind != Tok::end) {
        if (is_sym(lx.peek(), "[")) {
            lx.take();
            if (lx.peek().kind != Tok::ident) lx.fail("expected section name");
            section = lx.take().text;
            if (!is_sym(lx.peek(), "]")) lx.fail("expected ']'");
            lx.take();
            expect_line_end(lx);
            skip_newlines(lx);
            if (section == "model") model_seen = true;
            if (section == "connection") {
                fd.has_connection = true;
                fd.conn_line = lx.peek().line;
                fd.conn_col = lx.peek().col;
            }
            continue;
        }
        Token key = lx.peek();
        if (key.kind != Tok::ident) lx.fail("expected a key or section header");

        if (section == "model") {
            lx.take();
            if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
            lx.take();
            if (key.text == "name") {
                if (lx.peek().kind != Tok::ident) lx.fail("expected a name");
                fd.name = lx.take().text;
            } else if (key.text == "kind") {
                if (lx.peek().kind != Tok::ident) lx.fail("expected a kind");
                fd.kind = lx.take().text;
                if (fd.kind != "lie_algebra" && fd.kind != "action" && fd.kind != "poisson")
                    throw ParseError("unknown kind '" + fd.kind + "'", key.line, key.col);
            } else if (key.text == "rank") {
                if (lx.peek().kind != Tok::integer) lx.fail("expected an integer");
                fd.rank = (int)lx.take().value;
            } else if (key.text == "vars") {
                if (lx.peek().kind != Tok::integer) lx.fail("expected an integer");
                fd.nvars = (int)lx.take().value;
            } else if (key.text == "pi") {
                ExprParser ep(lx, 'd', fd.nvars, fd.nvars);
                fd.pi = ep.parse();
            } else {
                throw ParseError("unknown [model] key '" + key.text + "'", key.line, key.col);
            }
        } else if (section == "bracket") {
            require_model(key);
            auto [c, i] = split_indexed(key.text);
            if (c != 'e' || i < 1 || i > fd.rank)
                throw ParseError("expected a generator e1..e" + std::to_string(fd.rank), key.line,
                                 key.col);
            lx.take();
            if (!is_sym(lx.peek(), "^")) lx.fail("expected '^'");
            lx.take();
            Token second = lx.peek();
            auto [c2, j] = split_indexed(second.text);
            if (second.kind != Tok::ident || c2 != 'e' || j < 1 || j > fd.rank)
                throw ParseError("expected a generator e1..e" + std::to_string(fd.rank),
                                 second.line, second.col);
            lx.take();
            if (i >= j)
                throw ParseError("bracket keys must have increasing indices", key.line, key.col);
            if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
            lx.take();
            ExprParser ep(lx, 'e', fd.nvars, fd.rank);
            fd.brackets[{i, j}] = ep.parse();
        } else if (section == "anchor") {
            require_model(key);
            auto [c, i] = split_indexed(key.text);
            if (c != 'e' || i < 1 || i > fd.rank)
                throw ParseError("expected a generator e1..e" + std::to_string(fd.rank), key.line,
                                 key.col);
            lx.take();
            if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
            lx.take();
            ExprParser ep(lx, 'd', fd.nvars, fd.nvars);
            fd.anchors[i] = ep.parse();
        } else if (section == "connection") {
            if (key.text == "fiber") {
                lx.take();
                if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
                lx.take();
                if (lx.peek().kind != Tok::integer) lx.fail("expected an integer");
                fd.fiber = (int)lx.take().value;
            } else {
                require_model(key);
                auto [c, i] = split_indexed(key.text);
                if (c != 'e' || i < 1 || i > fd.rank)
                    throw ParseError("expected a generator e1..e" + std::to_string(fd.rank),
                                     key.line, key.col);
                lx.take();
                if (!is_sym(lx.peek(), ":")) lx.fail("expected ':'");
                lx.take();
                Token vt = lx.peek();
                auto [cv, a] = split_indexed(vt.text);
                if (vt.kind != Tok::ident || cv != 'v' || a < 1 || a > fd.fiber)
                    throw ParseError("expected a fiber generator v1..v" + std::to_string(fd.fiber),
                                     vt.line, vt.col);
                lx.take();
                if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
                lx.take();
                ExprParser ep(lx, 'v', fd.nvars, fd.fiber);
                fd.nabla[{i, a}] = ep.parse();
            }
        } else if (section == "theta" || section == "psi") {
            require_model(key);
            if (key.text != section)
                throw ParseError("expected key '" + section + "'", key.line, key.col);
            lx.take();
            if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
            lx.take();
            ExprParser ep(lx, 'e', fd.nvars, fd.rank);
            (section == "theta" ? fd.theta : fd.psi) = ep.parse();
        } else if (section.empty()) {
            lx.fail("expected a section header before content");
        } else {
            throw ParseError("unknown section '" + section + "'", key.line, key.col);
        }
        expect_line_end(lx);
        skip_newlines(lx);
    }
    return fd;
}

std::vector<Rational> constant_section(const GenForm& g, int rank, const char* what) {
    std::vector<Rational> out(rank, Rational(0));
    for (auto& [I, p] : g) {
        if (I.empty()) {
            if (!p.is_zero())
                throw ValidationError(std::string(what) + ": degree-0 part must vanish");
            continue;
        }
        if (I.size() != 1)
            throw ValidationError(std::string(what) + ": expected a linear combination of e_k");
        if (!p.is_constant())
            throw ValidationError(std::string(what) + ": coefficients must be constants");
        out[I[0] - 1] = p.constant_term();
    }
    return out;
}

VectorField genform_to_vf(const GenForm& g, int nvars, const char* what) {
    VectorField vf(nvars, Poly(nvars));
    for (auto& [I, p] : g) {
        if (I.size() != 1)
            throw ValidationError(std::string(what) + ": expected a vector field (d_k terms)");
        vf[I[0] - 1] = p;
    }
    return vf;
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
    Lexer lx(text);
    FileData fd = read_file_data(lx);

    ParsedInput out;
    if (fd.kind.empty()) throw ValidationError("[model] must set kind");
    if (fd.kind == "lie_algebra") {
        if (fd.rank < 0) throw ValidationError("[model] must set rank");
        if (fd.nvars != 0) throw ValidationError("lie_algebra models have vars = 0");
        std::map<std::pair<int, int>, std::vector<Rational>> consts;
        for (auto& [ij, g] : fd.brackets)
            consts[ij] = constant_section(g, fd.rank, "bracket");
        out.model = std::make_unique<AlgebroidModel>(
            build_lie_algebra(fd.rank, consts, fd.name));
    } else if (fd.kind == "action") {
        if (fd.rank < 0) throw ValidationError("[model] must set rank");
        std::map<std::pair<int, int>, std::vector<Rational>> consts;
        for (auto& [ij, g] : fd.brackets)
            consts[ij] = constant_section(g, fd.rank, "bracket");
        std::vector<VectorField> action(fd.rank, vf_zero(fd.nvars));
        for (auto& [i, g] : fd.anchors) action[i - 1] = genform_to_vf(g, fd.nvars, "anchor");
        out.model = std::make_unique<AlgebroidModel>(
            build_action_algebroid(consts, fd.rank, fd.nvars, action, fd.name));
    } else {  // poisson
        if (!fd.pi) throw ValidationError("poisson models require pi in [model]");
        if (!fd.brackets.empty() || !fd.anchors.empty())
            throw ValidationError("poisson models derive [bracket] and [anchor] from pi");
        Multivector pi = Multivector::zero(fd.nvars, 2);
        for (auto& [I, p] : *fd.pi) {
            if (I.size() != 2) throw ValidationError("pi must be a bivector (d_i^d_j terms)");
            pi.add(I, p);
        }
        out.model = std::make_unique<AlgebroidModel>(build_poisson_algebroid(pi, fd.name));
    }

    const AlgebroidModel& m = *out.model;
    if (fd.has_connection) {
        std::vector<std::vector<std::vector<Poly>>> gamma(
            m.rank, std::vector<std::vector<Poly>>(fd.fiber,
                                                   std::vector<Poly>(fd.fiber, Poly(m.nvars))));
        for (auto& [ia, g] : fd.nabla) {
            auto [i, a] = ia;
            for (auto& [I, p] : g) {
                if (I.size() != 1)
                    throw ValidationError("connection: expected a combination of v_b terms");
                gamma[i - 1][a - 1][I[0] - 1] = p;
            }
        }
        out.conn = build_connection(m, fd.fiber, gamma);
    }
    if (fd.theta) out.theta = genform_to_mixed(m, *fd.theta);
    if (fd.psi) out.psi = genform_to_mixed(m, *fd.psi);
    return out;
}

MixedForm parse_form_text(const std::string& text, const AlgebroidModel& m,
                          const std::string& key) {
    Lexer lx(text);
    skip_newlines(lx);
    // optional [key] section header
    if (is_sym(lx.peek(), "[")) {
        lx.take();
        Token name = lx.peek();
        if (name.kind != Tok::ident || name.text != key)
            throw ParseError("expected section [" + key + "]", name.line, name.col);
        lx.take();
        if (!is_sym(lx.peek(), "]")) lx.fail("expected ']'");
        lx.take();
        skip_newlines(lx);
    }
    Token k = lx.peek();
    if (k.kind != Tok::ident || k.text != key)
        throw ParseError("expected key '" + key + "'", k.line, k.col);
    lx.take();
    if (!is_sym(lx.peek(), "=")) lx.fail("expected '='");
    lx.take();
    ExprParser ep(lx, 'e', m.nvars, m.rank);
    GenForm g = ep.parse();
    expect_line_end(lx);
    skip_newlines(lx);
    if (lx.peek().kind != Tok::end) lx.fail("unexpected content after the form");
    return genform_to_mixed(m, g);
}

namespace {

// coeff * e^I in re-parsable form; omits the coefficient when it is 1.
std::string scaled_gen(const Poly& p, const ExtIndex& I, char gen) {
    std::string mono = ext_str(I, gen);
    if (I.empty()) {
        return p.terms().size() > 1 ? "(" + p.str() + ")" : p.str();
    }
    if (p.is_constant() && p.constant_term() == Rational(1)) return mono;
    if (p.terms().size() > 1) return "(" + p.str() + ")*" + mono;
    return p.str() + "*" + mono;
}

std::string gen_combination(const std::map<ExtIndex, Poly>& terms, char gen) {
    std::ostringstream os;
    bool first = true;
    for (auto& [I, p] : terms) {
        if (p.is_zero()) continue;
        // fold a leading minus of a one-term coefficient into the separator so
        // the output never contains "+ -"
        bool neg = !first && p.terms().size() == 1 && p.terms().begin()->second < Rational(0);
        if (!first) os << (neg ? " - " : " + ");
        first = false;
        os << scaled_gen(neg ? -p : p, I, gen);
    }
    return first ? "0" : os.str();
}

std::string vf_combination(const VectorField& vf, char gen) {
    std::map<ExtIndex, Poly> terms;
    for (int k = 0; k < (int)vf.size(); ++k)
        if (!vf[k].is_zero()) terms[{k + 1}] = vf[k];
    return gen_combination(terms, gen);
}

}  // namespace

std::string form_str(const MixedForm& f) {
    std::map<ExtIndex, Poly> terms;
    for (auto& [d, w] : f.comp)
        for (auto& [I, v] : w.values)
            if (!v[0].is_zero()) terms[I] = v[0];
    return gen_combination(terms, 'e');
}

std::string print_input(const ParsedInput& in) {
    const AlgebroidModel& m = *in.model;
    std::ostringstream os;
    os << "[model]\n";
    if (!m.name.empty()) os << "name = " << m.name << "\n";
    switch (m.kind) {
        case AlgebroidModel::Kind::lie_algebra:
            os << "kind = lie_algebra\n";
            os << "rank = " << m.rank << "\n";
            break;
        case AlgebroidModel::Kind::action:
            os << "kind = action\n";
            os << "rank = " << m.rank << "\n";
            os << "vars = " << m.nvars << "\n";
            break;
        case AlgebroidModel::Kind::poisson: {
            os << "kind = poisson\n";
            os << "vars = " << m.nvars << "\n";
            // reconstruct pi from the structure data: pi_ij = <pi, dx_i^dx_j>
            // is exactly the anchor pairing a(dx_i)_j
            std::map<ExtIndex, Poly> pi;
            for (int i = 1; i <= m.nvars; ++i)
                for (int j = i + 1; j <= m.nvars; ++j) {
                    const Poly& p = m.anchor[i - 1][j - 1];
                    if (!p.is_zero()) pi[{i, j}] = p;
                }
            os << "pi = " << gen_combination(pi, 'd') << "\n";
            break;
        }
    }
    if (m.kind != AlgebroidModel::Kind::poisson) {
        bool any = false;
        for (auto& [ij, c] : m.structure) {
            bool nz = false;
            for (auto& p : c) nz = nz || !p.is_zero();
            if (nz) any = true;
        }
        if (any) {
            os << "\n[bracket]\n";
            for (auto& [ij, c] : m.structure) {
                std::map<ExtIndex, Poly> rhs;
                for (int k = 0; k < m.rank; ++k)
                    if (!c[k].is_zero()) rhs[{k + 1}] = c[k];
                if (rhs.empty()) continue;
                os << "e" << ij.first << " ^ e" << ij.second << " = "
                   << gen_combination(rhs, 'e') << "\n";
            }
        }
    }
    if (m.kind == AlgebroidModel::Kind::action) {
        bool any = false;
        for (auto& vf : m.anchor)
            for (auto& p : vf) any = any || !p.is_zero();
        if (any) {
            os << "\n[anchor]\n";
            for (int i = 1; i <= m.rank; ++i) {
                std::string rhs = vf_combination(m.anchor[i - 1], 'd');
                if (rhs != "0") os << "e" << i << " = " << rhs << "\n";
            }
        }
    }
    if (in.conn) {
        os << "\n[connection]\n";
        os << "fiber = " << in.conn->fiber << "\n";
        for (int i = 1; i <= m.rank; ++i)
            for (int a = 1; a <= in.conn->fiber; ++a) {
                std::map<ExtIndex, Poly> rhs;
                for (int b = 1; b <= in.conn->fiber; ++b) {
                    const Poly& g = in.conn->gamma[i - 1][a - 1][b - 1];
                    if (!g.is_zero()) rhs[{b}] = g;
                }
                if (rhs.empty()) continue;
                os << "e" << i << " : v" << a << " = " << gen_combination(rhs, 'v') << "\n";
            }
    }
    if (in.theta) os << "\n[theta]\ntheta = " << form_str(*in.theta) << "\n";
    if (in.psi) os << "\n[psi]\npsi = " << form_str(*in.psi) << "\n";
    return os.str();
}

bool models_equal(const AlgebroidModel& a, const AlgebroidModel& b) {
    if (a.kind != b.kind || a.rank != b.rank || a.nvars != b.nvars || a.name != b.name ||
        a.weight_shift != b.weight_shift)
        return false;
    for (int i = 1; i <= a.rank; ++i)
        if (a.anchor[i - 1] != b.anchor[i - 1]) return false;
    for (int i = 1; i <= a.rank; ++i)
        for (int j = i + 1; j <= a.rank; ++j)
            if (a.bracket_coeffs(i, j) != b.bracket_coeffs(i, j)) return false;
    return true;
}

}  // namespace twistcoh
