#include "bilag/parametric.hpp"
#include "bilag/catalog.hpp"
#include "bilag/embedded_data.hpp"
#include "bilag/exterior.hpp"
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bilag {

namespace {

std::vector<std::string>& name_table() {
    static std::vector<std::string> t;
    return t;
}

std::map<std::string, std::size_t>& id_table() {
    static std::map<std::string, std::size_t> t;
    return t;
}

void accumulate(ParamPoly& p, ParamPoly::Monomial m, const Rational& c) {
    if (c == 0) return;
    auto it = p.terms.find(m);
    if (it == p.terms.end()) {
        p.terms.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

ParamPoly::Monomial merge_monomials(const ParamPoly::Monomial& a, const ParamPoly::Monomial& b) {
    ParamPoly::Monomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        } else if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else {
            r.push_back(b[j++]);
        }
    }
    r.insert(r.end(), a.begin() + i, a.end());
    r.insert(r.end(), b.begin() + j, b.end());
    return r;
}

} // namespace

std::size_t ParamPoly::var_id(const std::string& name) {
    auto& ids = id_table();
    if (const auto it = ids.find(name); it != ids.end()) return it->second;
    name_table().push_back(name);
    ids.emplace(name, name_table().size() - 1);
    return name_table().size() - 1;
}

const std::string& ParamPoly::var_name(std::size_t id) { return name_table().at(id); }

ParamPoly ParamPoly::constant(const Rational& c) {
    ParamPoly p;
    if (c != 0) p.terms.emplace(Monomial{}, c);
    return p;
}

ParamPoly ParamPoly::variable(const std::string& name) {
    ParamPoly p;
    p.terms.emplace(Monomial{{var_id(name), 1u}}, Rational(1));
    return p;
}

ParamPoly add(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [m, c] : b.terms) accumulate(r, m, c);
    return r;
}

ParamPoly sub(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r = a;
    for (const auto& [m, c] : b.terms) accumulate(r, m, -c);
    return r;
}

ParamPoly mul(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) accumulate(r, merge_monomials(ma, mb), ca * cb);
    return r;
}

ParamPoly scale(const Rational& c, const ParamPoly& a) {
    ParamPoly r;
    if (c == 0) return r;
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, c * v);
    return r;
}

ParamPoly negate(const ParamPoly& a) { return scale(Rational(-1), a); }

std::string to_string(const ParamPoly& p) {
    if (p.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string body;
        if (m.empty()) {
            body = to_string(mag);
        } else {
            if (mag != 1) body = to_string(mag) + "*";
            bool firstVar = true;
            for (const auto& [id, e] : m) {
                if (!firstVar) body += "*";
                firstVar = false;
                body += ParamPoly::var_name(id);
                if (e > 1) body += "^" + std::to_string(e);
            }
        }
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

ParamPoly substitute(const ParamPoly& p, const std::map<std::string, Rational>& values) {
    std::map<std::size_t, Rational> byId;
    for (const auto& [name, v] : values) byId.emplace(ParamPoly::var_id(name), v);
    ParamPoly r;
    for (const auto& [m, c] : p.terms) {
        Rational coeff = c;
        ParamPoly::Monomial rest;
        for (const auto& [id, e] : m) {
            const auto it = byId.find(id);
            if (it == byId.end()) {
                rest.emplace_back(id, e);
            } else {
                for (unsigned k = 0; k < e; ++k) coeff *= it->second;
            }
        }
        accumulate(r, std::move(rest), coeff);
    }
    return r;
}

ParamVector param_add(const ParamVector& u, const ParamVector& v) {
    if (u.coords.size() != v.coords.size())
        throw std::invalid_argument("param_add: dimension mismatch");
    ParamVector r;
    r.coords.reserve(u.coords.size());
    for (std::size_t i = 0; i < u.coords.size(); ++i)
        r.coords.push_back(add(u.coords[i], v.coords[i]));
    return r;
}

ParamVector param_scale(const ParamPoly& c, const ParamVector& u) {
    ParamVector r;
    r.coords.reserve(u.coords.size());
    for (const auto& x : u.coords) r.coords.push_back(mul(c, x));
    return r;
}

bool param_is_zero(const ParamVector& u) {
    for (const auto& x : u.coords)
        if (!x.is_zero()) return false;
    return true;
}

ParamVector parametric_bracket(const LieAlgebra& g, const ParamVector& u, const ParamVector& v) {
    const std::size_t n = g.dim;
    if (u.coords.size() != n || v.coords.size() != n)
        throw std::invalid_argument("parametric_bracket: dimension mismatch");
    ParamVector r;
    r.coords.assign(n, ParamPoly{});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const ParamPoly coef = sub(mul(u.coords[i], v.coords[j]), mul(u.coords[j], v.coords[i]));
            if (coef.is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k) {
                const Rational c = g.structure_constant(k, i, j);
                if (c != 0) r.coords[k] = add(r.coords[k], scale(c, coef));
            }
        }
    return r;
}

namespace {

// Perfect-matching expansion: pair idx[0] with each later index, sign by the
// number of indices skipped.
ParamPoly pfaffian_rec(const ParamGram& m, const std::vector<std::size_t>& idx) {
    if (idx.empty()) return ParamPoly::constant(1);
    ParamPoly r;
    for (std::size_t p = 1; p < idx.size(); ++p) {
        const ParamPoly& mij = m.at(idx[0], idx[p]);
        if (mij.is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(idx.size() - 2);
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        ParamPoly term = mul(mij, pfaffian_rec(m, rest));
        if (p % 2 == 0) term = negate(term);
        r = add(r, term);
    }
    return r;
}

ParamPoly determinant_rec(const ParamGram& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) {
    if (rows.empty()) return ParamPoly::constant(1);
    ParamPoly r;
    const std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
    for (std::size_t p = 0; p < cols.size(); ++p) {
        const ParamPoly& e = m.at(rows[0], cols[p]);
        if (e.is_zero()) continue;
        std::vector<std::size_t> subCols;
        subCols.reserve(cols.size() - 1);
        for (std::size_t q = 0; q < cols.size(); ++q)
            if (q != p) subCols.push_back(cols[q]);
        ParamPoly term = mul(e, determinant_rec(m, subRows, subCols));
        if (p % 2 == 1) term = negate(term);
        r = add(r, term);
    }
    return r;
}

} // namespace

ParamPoly parametric_pfaffian(const ParamGram& m) {
    if (m.n % 2 != 0) throw std::invalid_argument("parametric_pfaffian: odd dimension");
    std::vector<std::size_t> idx(m.n);
    for (std::size_t i = 0; i < m.n; ++i) idx[i] = i;
    return pfaffian_rec(m, idx);
}

ParamPoly parametric_determinant(const ParamGram& m) {
    std::vector<std::size_t> idx(m.n);
    for (std::size_t i = 0; i < m.n; ++i) idx[i] = i;
    return determinant_rec(m, idx, idx);
}

// ---- data-driven lemma checks ----

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct Token {
    enum Kind { ident, number, plus, minus, star, caret, lparen, rparen, end } kind = end;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        if (std::isalpha(c)) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::ident, s.substr(i, j - i)});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            out.push_back({Token::number, s.substr(i, j - i)});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (s[i]) {
            case '+': k = Token::plus; break;
            case '-': k = Token::minus; break;
            case '*': k = Token::star; break;
            case '^': k = Token::caret; break;
            case '(': k = Token::lparen; break;
            case ')': k = Token::rparen; break;
            default:
                throw std::runtime_error(std::string("unexpected character '") + s[i] +
                                         "' in expression: " + s);
        }
        out.push_back({k, std::string(1, s[i])});
        ++i;
    }
    out.push_back({Token::end, ""});
    return out;
}

// expr := term ((+|-) term)* ; term := factor (* factor)* ;
// factor := atom (^ uint)? ; atom := - atom | ( expr ) | ident | number
class ExprParser {
  public:
    explicit ExprParser(const std::string& s) : src_(s), toks_(tokenize(s)) {}

    ParamPoly parse() {
        ParamPoly p = expr();
        if (peek().kind != Token::end)
            throw std::runtime_error("trailing input in expression: " + src_);
        return p;
    }

  private:
    std::string src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }

    ParamPoly expr() {
        ParamPoly p = term();
        while (peek().kind == Token::plus || peek().kind == Token::minus) {
            const bool isPlus = take().kind == Token::plus;
            const ParamPoly q = term();
            p = isPlus ? add(p, q) : sub(p, q);
        }
        return p;
    }

    ParamPoly term() {
        ParamPoly p = factor();
        while (peek().kind == Token::star) {
            take();
            p = mul(p, factor());
        }
        return p;
    }

    ParamPoly factor() {
        ParamPoly p = atom();
        if (peek().kind == Token::caret) {
            take();
            if (peek().kind != Token::number || peek().text.find('/') != std::string::npos)
                throw std::runtime_error("expected integer exponent in expression: " + src_);
            const unsigned long e = std::stoul(take().text);
            ParamPoly r = ParamPoly::constant(1);
            for (unsigned long k = 0; k < e; ++k) r = mul(r, p);
            p = std::move(r);
        }
        return p;
    }

    ParamPoly atom() {
        switch (peek().kind) {
            case Token::minus:
                take();
                return negate(atom());
            case Token::lparen: {
                take();
                ParamPoly p = expr();
                if (peek().kind != Token::rparen)
                    throw std::runtime_error("expected ')' in expression: " + src_);
                take();
                return p;
            }
            case Token::ident:
                return ParamPoly::variable(take().text);
            case Token::number: {
                const auto v = parse_rational(take().text);
                if (!v) throw std::runtime_error("bad numeric literal in expression: " + src_);
                return ParamPoly::constant(*v);
            }
            default:
                throw std::runtime_error("unexpected token in expression: " + src_);
        }
    }
};

ParamPoly parse_poly(const std::string& s) { return ExprParser(s).parse(); }

std::optional<std::size_t> basis_index(const std::string& name, std::size_t dim) {
    if (name.size() != 2 || name[0] != 'e' || name[1] < '1' || name[1] > '9') return std::nullopt;
    const std::size_t k = static_cast<std::size_t>(name[1] - '1');
    if (k >= dim) return std::nullopt;
    return k;
}

std::optional<std::pair<std::size_t, std::size_t>> form_index(const std::string& name,
                                                              std::size_t dim) {
    if (name.size() != 3 || name[0] != 'a') return std::nullopt;
    if (name[1] < '1' || name[1] > '9' || name[2] < '1' || name[2] > '9') return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(name[1] - '1');
    const std::size_t j = static_cast<std::size_t>(name[2] - '1');
    if (i >= j || j >= dim) return std::nullopt;
    return std::make_pair(i, j);
}

// Split a polynomial in e-symbols with parameter coefficients into coordinates.
ParamVector decompose_vec(const ParamPoly& p, std::size_t dim, const std::string& context) {
    ParamVector r;
    r.coords.assign(dim, ParamPoly{});
    for (const auto& [m, c] : p.terms) {
        std::optional<std::size_t> which;
        ParamPoly::Monomial rest;
        bool bad = false;
        for (const auto& [id, e] : m) {
            const auto bi = basis_index(ParamPoly::var_name(id), dim);
            if (!bi) {
                rest.emplace_back(id, e);
            } else if (which || e != 1) {
                bad = true;
                break;
            } else {
                which = *bi;
            }
        }
        if (bad || !which)
            throw std::runtime_error("expression is not linear in e1..e" + std::to_string(dim) +
                                     ": " + context);
        accumulate(r.coords[*which], std::move(rest), c);
    }
    return r;
}

// Split a polynomial in a_jk symbols into an antisymmetric coefficient matrix.
ParamGram decompose_family(const ParamPoly& p, std::size_t dim, const std::string& context) {
    ParamGram g;
    g.n = dim;
    g.a.assign(dim * dim, ParamPoly{});
    for (const auto& [m, c] : p.terms) {
        std::optional<std::pair<std::size_t, std::size_t>> which;
        ParamPoly::Monomial rest;
        bool bad = false;
        for (const auto& [id, e] : m) {
            const auto fi = form_index(ParamPoly::var_name(id), dim);
            if (!fi) {
                rest.emplace_back(id, e);
            } else if (which || e != 1) {
                bad = true;
                break;
            } else {
                which = *fi;
            }
        }
        if (bad || !which)
            throw std::runtime_error("expression is not linear in the basis 2-forms: " + context);
        accumulate(g.at(which->first, which->second), rest, c);
        accumulate(g.at(which->second, which->first), std::move(rest), -c);
    }
    return g;
}

struct LemmaSpec {
    std::string id;
    std::string algebraName;
    std::vector<std::pair<std::string, std::string>> vecs;
    std::string familyExpr;
    std::vector<std::string> checks;
};

std::vector<LemmaSpec> parse_lemma_data(const std::string& text) {
    std::vector<LemmaSpec> out;
    std::optional<LemmaSpec> cur;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    const auto fail = [&lineno](const std::string& msg) {
        throw std::runtime_error("lemma data line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.starts_with("lemma ")) {
            if (cur) fail("missing 'end' before a new lemma");
            cur = LemmaSpec{};
            cur->id = trim(line.substr(6));
            if (cur->id.empty()) fail("empty lemma id");
            continue;
        }
        if (!cur) fail("directive outside a lemma block: " + line);
        if (line == "end") {
            out.push_back(std::move(*cur));
            cur.reset();
        } else if (line.starts_with("algebra ")) {
            cur->algebraName = trim(line.substr(8));
        } else if (line.starts_with("vec ")) {
            const auto eq = line.find('=');
            if (eq == std::string::npos) fail("vec line without '='");
            cur->vecs.emplace_back(trim(line.substr(4, eq - 4)), trim(line.substr(eq + 1)));
        } else if (line.starts_with("family ")) {
            cur->familyExpr = trim(line.substr(7));
        } else if (line.starts_with("check ")) {
            cur->checks.push_back(trim(line.substr(6)));
        } else {
            fail("unrecognized line: " + line);
        }
    }
    if (cur) fail("unterminated lemma block " + cur->id);
    return out;
}

const std::vector<LemmaSpec>& lemma_specs() {
    static const std::vector<LemmaSpec> specs = parse_lemma_data(detail::embedded_lemmas_text);
    return specs;
}

const LoadedCatalog& builtin_catalog() {
    static const LoadedCatalog cat = load_catalog();
    return cat;
}

const ParamVector& named_vec(const std::map<std::string, ParamVector>& vecs,
                             const std::string& name, const std::string& context) {
    const auto it = vecs.find(name);
    if (it == vecs.end())
        throw std::runtime_error("unknown vector '" + name + "' in: " + context);
    return it->second;
}

// LHS of a bracket check: [u,v] with operands that are names or nested brackets.
class BracketTermParser {
  public:
    BracketTermParser(const std::string& s, const LieAlgebra& g,
                      const std::map<std::string, ParamVector>& vecs)
        : s_(s), g_(g), vecs_(vecs) {}

    ParamVector parse() {
        const ParamVector v = operand();
        skip_ws();
        if (pos_ != s_.size()) throw std::runtime_error("trailing input in bracket term: " + s_);
        return v;
    }

  private:
    const std::string& s_;
    const LieAlgebra& g_;
    const std::map<std::string, ParamVector>& vecs_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c)
            throw std::runtime_error(std::string("expected '") + c + "' in bracket term: " + s_);
        ++pos_;
    }

    ParamVector operand() {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '[') {
            ++pos_;
            const ParamVector u = operand();
            expect(',');
            const ParamVector v = operand();
            expect(']');
            return parametric_bracket(g_, u, v);
        }
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return named_vec(vecs_, s_.substr(b, pos_ - b), s_);
    }
};

LemmaCheck compare_param_vectors(const std::string& label, const ParamVector& got,
                                 const ParamVector& want) {
    LemmaCheck c{label, true, ""};
    for (std::size_t i = 0; i < got.coords.size(); ++i) {
        if (got.coords[i] == want.coords[i]) continue;
        c.pass = false;
        c.detail = "e" + std::to_string(i + 1) + " coefficient: got " + to_string(got.coords[i]) +
                   ", want " + to_string(want.coords[i]);
        return c;
    }
    return c;
}

LemmaCheck compare_polys(const std::string& label, const ParamPoly& got, const ParamPoly& want) {
    LemmaCheck c{label, true, ""};
    if (!(got == want)) {
        c.pass = false;
        c.detail = "got " + to_string(got) + ", want " + to_string(want);
    }
    return c;
}

ParamPoly pairing_value(const ParamGram& fam, const ParamVector& u, const ParamVector& v) {
    ParamPoly r;
    for (std::size_t i = 0; i < fam.n; ++i) {
        if (u.coords[i].is_zero()) continue;
        for (std::size_t j = 0; j < fam.n; ++j) {
            if (fam.at(i, j).is_zero() || v.coords[j].is_zero()) continue;
            r = add(r, mul(u.coords[i], mul(fam.at(i, j), v.coords[j])));
        }
    }
    return r;
}

// Generators closed, linearly independent, and as many as dim ker(d|Lambda^2).
LemmaCheck family_spans_closed_check(const std::string& label, const LieAlgebra& g,
                                     const ParamGram& fam) {
    LemmaCheck c{label, false, ""};
    const std::size_t n = fam.n;
    std::set<std::size_t> params;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (const auto& [m, v] : fam.at(i, j).terms) {
                if (m.size() != 1 || m[0].second != 1) {
                    c.detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") is not linear homogeneous in the parameters";
                    return c;
                }
                params.insert(m[0].first);
            }
    std::vector<KForm> gens;
    for (const std::size_t pid : params) {
        KForm f;
        f.degree = 2;
        const ParamPoly::Monomial key{{pid, 1u}};
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const auto it = fam.at(i, j).terms.find(key);
                if (it != fam.at(i, j).terms.end()) f.add_term({i, j}, it->second);
            }
        if (!ce_differential(g, f).is_zero()) {
            c.detail = "generator at " + ParamPoly::var_name(pid) + " is not closed";
            return c;
        }
        gens.push_back(std::move(f));
    }
    Matrix m(gens.size(), n * (n - 1) / 2);
    for (std::size_t r = 0; r < gens.size(); ++r) {
        std::size_t col = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) m.at(r, col++) = gens[r].coeff({i, j});
    }
    if (rref(m).rank != gens.size()) {
        c.detail = "generators are linearly dependent";
        return c;
    }
    const std::size_t closedDim = closed_two_forms_basis(g).size();
    if (gens.size() != closedDim) {
        c.detail = "family dimension " + std::to_string(gens.size()) +
                   " != closed 2-form dimension " + std::to_string(closedDim);
        return c;
    }
    c.pass = true;
    return c;
}

} // namespace

LemmaReport verify_lemma_identity(const std::string& lemmaId) {
    const LemmaSpec* spec = nullptr;
    for (const auto& s : lemma_specs())
        if (s.id == lemmaId) {
            spec = &s;
            break;
        }
    if (!spec) throw std::invalid_argument("unknown lemma id: " + lemmaId);

    const LieAlgebra g = entry(builtin_catalog(), spec->algebraName).algebra();

    std::map<std::string, ParamVector> vecs;
    for (const auto& [name, exprText] : spec->vecs)
        vecs.emplace(name, decompose_vec(parse_poly(exprText), g.dim, exprText));

    std::optional<ParamGram> fam;
    if (!spec->familyExpr.empty())
        fam = decompose_family(parse_poly(spec->familyExpr), g.dim, spec->familyExpr);
    std::optional<ParamPoly> pfCache;
    const auto pf = [&]() -> const ParamPoly& {
        if (!fam) throw std::runtime_error("lemma " + lemmaId + ": Pfaffian check without a family");
        if (!pfCache) pfCache = parametric_pfaffian(*fam);
        return *pfCache;
    };

    LemmaReport rep;
    rep.lemmaId = lemmaId;
    for (const std::string& body : spec->checks) {
        if (body.starts_with("bracket ")) {
            const std::string rest = trim(body.substr(8));
            const auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error("bracket check without '=': " + body);
            const ParamVector got = BracketTermParser(trim(rest.substr(0, eq)), g, vecs).parse();
            const ParamVector want = decompose_vec(parse_poly(rest.substr(eq + 1)), g.dim, body);
            rep.checks.push_back(compare_param_vectors(body, got, want));
        } else if (body.starts_with("pairing ")) {
            const std::string rest = trim(body.substr(8));
            const auto lp = rest.find('('), rp = rest.find(')');
            if (!rest.starts_with("omega(") || rp == std::string::npos)
                throw std::runtime_error("malformed pairing check: " + body);
            const std::string inside = rest.substr(lp + 1, rp - lp - 1);
            const auto comma = inside.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("malformed pairing check: " + body);
            const auto eq = rest.find('=', rp);
            if (eq == std::string::npos)
                throw std::runtime_error("pairing check without '=': " + body);
            if (!fam) throw std::runtime_error("lemma " + lemmaId + ": pairing check without a family");
            const ParamVector& u = named_vec(vecs, trim(inside.substr(0, comma)), body);
            const ParamVector& v = named_vec(vecs, trim(inside.substr(comma + 1)), body);
            rep.checks.push_back(
                compare_polys(body, pairing_value(*fam, u, v), parse_poly(rest.substr(eq + 1))));
        } else if (body == "family_spans_closed") {
            if (!fam)
                throw std::runtime_error("lemma " + lemmaId + ": span check without a family");
            rep.checks.push_back(family_spans_closed_check(body, g, *fam));
        } else if (body.starts_with("pfaffian_propto ")) {
            const std::string rest = trim(body.substr(16));
            const auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw std::runtime_error("pfaffian_propto check without ':': " + body);
            const auto r = parse_rational(trim(rest.substr(0, colon)));
            if (!r) throw std::runtime_error("bad scalar in pfaffian_propto check: " + body);
            const ParamPoly want = scale(*r, parse_poly(rest.substr(colon + 1)));
            rep.checks.push_back(compare_polys(body, pf(), want));
        } else if (body.starts_with("pfaffian_zero_when ")) {
            std::map<std::string, Rational> values;
            std::istringstream list(body.substr(19));
            std::string item;
            while (std::getline(list, item, ',')) {
                const auto eq = item.find('=');
                const auto v = eq == std::string::npos
                                   ? std::nullopt
                                   : parse_rational(trim(item.substr(eq + 1)));
                if (!v) throw std::runtime_error("malformed substitution in check: " + body);
                values.emplace(trim(item.substr(0, eq)), *v);
            }
            const ParamPoly left = substitute(pf(), values);
            LemmaCheck c{body, left.is_zero(), ""};
            if (!c.pass) c.detail = "Pfaffian specializes to " + to_string(left);
            rep.checks.push_back(std::move(c));
        } else if (body == "pfaffian_sq_det") {
            const ParamPoly& p = pf();
            rep.checks.push_back(compare_polys(body, mul(p, p), parametric_determinant(*fam)));
        } else {
            throw std::runtime_error("lemma " + lemmaId + ": unrecognized check: " + body);
        }
    }
    return rep;
}

std::vector<std::string> lemma_ids() {
    std::vector<std::string> ids;
    ids.reserve(lemma_specs().size());
    for (const auto& s : lemma_specs()) ids.push_back(s.id);
    return ids;
}

} // namespace bilag
