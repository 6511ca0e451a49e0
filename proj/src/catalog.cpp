#include "bilag/catalog.hpp"
#include "bilag/embedded_data.hpp"
#include <cctype>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace bilag {

namespace {

[[noreturn]] void fail(std::string msg, std::size_t line = 0, std::size_t col = 0) {
    throw CatalogParseError{std::move(msg), line, col};
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (const char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

LieAlgebra algebra_from_tokens(const std::vector<std::string>& tokens, std::size_t dim,
                               const std::string& name) {
    LieAlgebra g;
    g.name = name;
    g.dim = dim;
    g.c.assign(dim, std::vector<Rational>(dim * (dim - 1) / 2, Rational(0)));
    // coefficient of alpha_jk in d alpha_i is -c^i_{jk}
    for (std::size_t k = 0; k < dim; ++k) {
        const KForm f = parse_salamon_token(tokens.at(k), dim);
        for (const auto& [idx, c] : f.coeffs)
            g.c[k][LieAlgebra::pair_index(dim, idx[0], idx[1])] = -c;
    }
    return g;
}

} // namespace

LieAlgebra CatalogEntry::algebra() const { return algebra_from_tokens(dalphaTokens, dim, name); }

KForm parse_salamon_token(const std::string& token, std::size_t dim) {
    KForm f;
    f.degree = 2;
    const std::string t = trim(token);
    if (t.empty()) fail("empty 2-form token", 0, 1);
    if (t == "0") return f;
    std::size_t i = 0;
    Rational sign = 1;
    if (t[i] == '+' || t[i] == '-') {
        if (t[i] == '-') sign = -1;
        ++i;
    }
    while (true) {
        std::size_t start = i;
        while (i < t.size() &&
               (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '/'))
            ++i;
        if (i == start) fail("expected a digit pair in 2-form token '" + t + "'", 0, i + 1);
        std::string run = t.substr(start, i - start);
        Rational coef = sign;
        if (i < t.size() && t[i] == '*') {
            const auto c = parse_rational(run);
            if (!c) fail("bad coefficient '" + run + "' in 2-form token '" + t + "'", 0, start + 1);
            coef *= *c;
            ++i;
            start = i;
            while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
            run = t.substr(start, i - start);
        }
        if (run.size() != 2 || !all_digits(run))
            fail("expected a digit pair, got '" + run + "' in 2-form token '" + t + "'", 0,
                 start + 1);
        const std::size_t a = static_cast<std::size_t>(run[0] - '0');
        const std::size_t b = static_cast<std::size_t>(run[1] - '0');
        if (a < 1 || a > dim || b < 1 || b > dim || a == b)
            fail("index pair '" + run + "' invalid in dimension " + std::to_string(dim) +
                     " in 2-form token '" + t + "'",
                 0, start + 1);
        f.add_term({a - 1, b - 1}, coef); // sorts and signs: 42 = -24
        if (i == t.size()) break;
        if (t[i] == '+') {
            sign = 1;
        } else if (t[i] == '-') {
            sign = -1;
        } else {
            fail(std::string("expected '+' or '-', got '") + t[i] + "' in 2-form token '" + t +
                     "'",
                 0, i + 1);
        }
        ++i;
    }
    return f;
}

std::vector<KForm> parse_salamon(const std::vector<std::string>& tokens, std::size_t dim) {
    std::vector<KForm> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(parse_salamon_token(t, dim));
    return out;
}

std::string serialize_form(const KForm& f) {
    if (f.degree != 2) throw std::invalid_argument("serialize_form: need a 2-form");
    if (f.coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [idx, c] : f.coeffs) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        std::string body;
        if (mag != 1) body = to_string(mag) + "*";
        body += std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1);
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? "-" : "+") + body;
        }
    }
    return out;
}

Vector parse_vector(const std::string& s, std::size_t dim) {
    Vector v(dim, Rational(0));
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    skip();
    if (i == s.size()) fail("empty vector expression", 0, 1);
    Rational sign = 1;
    if (s[i] == '+' || s[i] == '-') {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    while (true) {
        skip();
        Rational coef = sign;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            const std::size_t start = i;
            while (i < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
            const auto c = parse_rational(s.substr(start, i - start));
            if (!c) fail("bad coefficient in vector '" + s + "'", 0, start + 1);
            coef *= *c;
            skip();
            if (i >= s.size() || s[i] != '*')
                fail("expected '*' after the coefficient in vector '" + s + "'", 0, i + 1);
            ++i;
            skip();
        }
        if (i >= s.size() || s[i] != 'e')
            fail("expected a basis symbol e1..e" + std::to_string(dim) + " in vector '" + s + "'",
                 0, i + 1);
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a basis index in vector '" + s + "'", 0, i + 1);
        const std::size_t k = static_cast<std::size_t>(s[i] - '0');
        ++i;
        if (k < 1 || k > dim)
            fail("basis index out of range in vector '" + s + "'", 0, i);
        v[k - 1] += coef;
        skip();
        if (i == s.size()) break;
        if (s[i] == '+') {
            sign = 1;
        } else if (s[i] == '-') {
            sign = -1;
        } else {
            fail(std::string("expected '+' or '-', got '") + s[i] + "' in vector '" + s + "'", 0,
                 i + 1);
        }
        ++i;
    }
    return v;
}

std::string serialize_vector(const Vector& v) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        const bool neg = v[i] < 0;
        const Rational mag = neg ? Rational(-v[i]) : v[i];
        std::string body;
        if (mag != 1) body = to_string(mag) + "*";
        body += "e" + std::to_string(i + 1);
        if (first) {
            out = (neg ? "-" : "") + body;
            first = false;
        } else {
            out += (neg ? "-" : "+") + body;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Semantic per-entry validation; problems are flagged, not fatal.
void validate_entry(const CatalogEntry& e, LoadedCatalog& cat) {
    const auto flag = [&](const std::string& what) { cat.flagged.emplace_back(e.name, what); };
    const LieAlgebra g = e.algebra();
    if (!check_jacobi(g).pass) {
        flag("structure constants violate the Jacobi identity");
        return;
    }
    const auto series = lower_central_series(g);
    if (series.empty() || series.back() != 0) flag("lower central series does not reach 0");
    if (e.expectedBetti) {
        const auto [b1, b2] = betti_numbers(g);
        if (std::pair(b1, b2) != *e.expectedBetti)
            flag("computed Betti numbers (" + std::to_string(b1) + "," + std::to_string(b2) +
                 ") differ from the listed ones");
    }
    if (e.symplecticForm) {
        const auto verdict = is_symplectic(g, *e.symplecticForm);
        if (verdict == SymplecticVerdict::notClosed) flag("listed 2-form is not closed");
        if (verdict == SymplecticVerdict::degenerate) flag("listed 2-form is degenerate");
    }
    if (e.witnessF.has_value() != e.witnessG.has_value()) {
        flag("foliation pair is incomplete");
    } else if (e.witnessF) {
        if (!e.symplecticForm) {
            flag("foliation pair listed without a symplectic form");
        } else {
            const Subspace f = make_subspace(g, *e.witnessF);
            const Subspace g2 = make_subspace(g, *e.witnessG);
            const auto rep = verify_bilagrangian(g, *e.symplecticForm, f, g2);
            if (!rep.pass()) {
                std::string what = "witness pair fails:";
                if (!rep.fSubalgebra) what += " F-not-subalgebra";
                if (!rep.g2Subalgebra) what += " G-not-subalgebra";
                if (!rep.fLagrangian) what += " F-not-Lagrangian";
                if (!rep.g2Lagrangian) what += " G-not-Lagrangian";
                if (!rep.complementary) what += " not-complementary";
                flag(what);
            }
        }
    }
    if (!e.salamonTuple.empty()) {
        const auto toks = split(e.salamonTuple, ',');
        if (toks.size() != e.dim) {
            flag("salamon tuple arity differs from dim");
            return;
        }
        const LieAlgebra gs = algebra_from_tokens(toks, e.dim, e.name + " (salamon)");
        std::vector<int> perm = e.aliasPerm;
        if (perm.empty())
            for (std::size_t i = 0; i < e.dim; ++i) perm.push_back(static_cast<int>(i + 1));
        if (perm.size() != e.dim) {
            flag("salamon_map arity differs from dim");
            return;
        }
        std::vector<Vector> target(e.dim);
        std::vector<bool> used(e.dim, false);
        for (std::size_t i = 0; i < e.dim; ++i) {
            const int v = perm[i];
            const std::size_t a = static_cast<std::size_t>(v < 0 ? -v : v);
            if (v == 0 || a > e.dim || used[a - 1]) {
                flag("salamon_map is not a signed permutation");
                return;
            }
            used[a - 1] = true;
            target[i] = scale(v < 0 ? Rational(-1) : Rational(1), basis_vector(e.dim, a - 1));
        }
        const auto apply = [&](const Vector& x) {
            Vector r(e.dim, Rational(0));
            for (std::size_t i = 0; i < e.dim; ++i)
                if (x[i] != 0) r = add(r, scale(x[i], target[i]));
            return r;
        };
        for (std::size_t i = 0; i < e.dim; ++i)
            for (std::size_t j = i + 1; j < e.dim; ++j) {
                const Vector lhs = bracket(g, target[i], target[j]);
                const Vector rhs =
                    apply(bracket(gs, basis_vector(e.dim, i), basis_vector(e.dim, j)));
                if (lhs != rhs) {
                    flag("salamon_map does not intertwine the salamon-tuple brackets");
                    return;
                }
            }
    }
}

LoadedCatalog parse_catalog_text(const std::string& text) {
    LoadedCatalog cat;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::optional<CatalogEntry> cur;

    const auto need_dim = [&]() {
        if (!cur->dim) fail("'dim' must precede this field", lineno, 1);
        return cur->dim;
    };
    const auto reparse = [&](auto&& fn) {
        try {
            return fn();
        } catch (const CatalogParseError& e) {
            fail(e.message, lineno, e.column);
        }
    };

    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.starts_with("entry ")) {
            if (cur) fail("missing 'end' before a new entry", lineno, 1);
            cur = CatalogEntry{};
            cur->name = trim(line.substr(6));
            if (cur->name.empty()) fail("empty entry name", lineno, 7);
            continue;
        }
        if (!cur) fail("directive outside an entry: " + line, lineno, 1);
        if (line == "end") {
            if (!cur->dim) fail("entry without 'dim'", lineno, 1);
            if (cur->dalphaTokens.empty()) fail("entry without 'dalpha'", lineno, 1);
            validate_entry(*cur, cat);
            cat.entries.push_back(std::move(*cur));
            cur.reset();
        } else if (line.starts_with("dim ")) {
            const std::string t = trim(line.substr(4));
            if (!all_digits(t)) fail("malformed dimension '" + t + "'", lineno, 5);
            cur->dim = std::stoul(t);
            if (cur->dim < 1 || cur->dim > 9) fail("dimension out of range", lineno, 5);
        } else if (line.starts_with("dalpha ")) {
            const std::size_t dim = need_dim();
            cur->dalphaTokens = split(line.substr(7), ',');
            if (cur->dalphaTokens.size() != dim)
                fail("expected " + std::to_string(dim) + " dalpha tokens", lineno, 8);
            for (const auto& t : cur->dalphaTokens)
                reparse([&] { return parse_salamon_token(t, dim); });
        } else if (line.starts_with("omega_source ")) {
            cur->formSource = trim(line.substr(13));
            if (cur->formSource != "BM" && cur->formSource != "K")
                fail("omega_source must be BM or K", lineno, 14);
        } else if (line.starts_with("omega ")) {
            const std::size_t dim = need_dim();
            cur->symplecticForm =
                reparse([&] { return parse_salamon_token(trim(line.substr(6)), dim); });
        } else if (line.starts_with("foliationF ") || line.starts_with("foliationG ")) {
            const std::size_t dim = need_dim();
            std::vector<Vector> vs;
            for (const auto& t : split(line.substr(11), ';'))
                vs.push_back(reparse([&] { return parse_vector(t, dim); }));
            (line[9] == 'F' ? cur->witnessF : cur->witnessG) = std::move(vs);
        } else if (line.starts_with("flat ")) {
            const std::string t = trim(line.substr(5));
            if (t != "yes" && t != "no") fail("flat must be yes or no", lineno, 6);
            cur->expectedFlat = (t == "yes");
        } else if (line.starts_with("betti ")) {
            const auto parts = split(line.substr(6), ',');
            if (parts.size() != 2 || !all_digits(parts[0]) || !all_digits(parts[1]))
                fail("malformed betti pair", lineno, 7);
            cur->expectedBetti = {std::stoul(parts[0]), std::stoul(parts[1])};
        } else if (line.starts_with("salamon_map ")) {
            cur->aliasPerm.clear();
            for (const auto& t : split(line.substr(12), ',')) {
                try {
                    cur->aliasPerm.push_back(std::stoi(t));
                } catch (const std::exception&) {
                    fail("malformed salamon_map item '" + t + "'", lineno, 13);
                }
            }
        } else if (line.starts_with("salamon ")) {
            cur->salamonTuple = trim(line.substr(8));
        } else if (line.starts_with("knumber ")) {
            const std::string t = trim(line.substr(8));
            if (!all_digits(t)) fail("malformed knumber '" + t + "'", lineno, 9);
            cur->khakimdjanovNumber = t;
        } else {
            fail("unrecognized line: " + line, lineno, 1);
        }
    }
    if (cur) fail("unterminated entry " + cur->name, lineno, 1);
    return cat;
}

std::string normalize_alias(const std::string& s) {
    std::string out;
    for (const char c : s)
        if (c != ' ' && c != '\t' && c != '(' && c != ')') out += c;
    return out;
}

std::size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t subst = diag + (a[i - 1] == b[j - 1] ? 0 : 1);
            diag = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, subst});
        }
    }
    return row[b.size()];
}

} // namespace

LoadedCatalog load_catalog() { return parse_catalog_text(detail::embedded_catalog_text); }

LoadedCatalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open catalog file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_catalog_text(ss.str());
}

const CatalogEntry& entry(const LoadedCatalog& cat, const std::string& name) {
    const std::string q = normalize_alias(name);
    for (const auto& e : cat.entries) {
        if (normalize_alias(e.name) == q) return e;
        if (!e.khakimdjanovNumber.empty() && e.khakimdjanovNumber == q) return e;
        if (!e.salamonTuple.empty() && normalize_alias(e.salamonTuple) == q) return e;
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::string bestName;
    for (const auto& e : cat.entries) {
        const std::size_t d = edit_distance(normalize_alias(e.name), q);
        if (d < best) {
            best = d;
            bestName = e.name;
        }
    }
    fail("unknown algebra '" + name + "'" +
         (bestName.empty() ? std::string()
                           : "; nearest catalog name is '" + bestName + "'"));
}

} // namespace bilag
