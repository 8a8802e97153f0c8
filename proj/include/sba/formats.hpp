#pragma once

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bialgebra.hpp"
#include "expr.hpp"

namespace sba {

using Bindings = std::map<std::string, Gauss>;

struct ParamDecl {
    std::string name;
    std::optional<Poly> value;       // `param p = 1/2`
    std::vector<Gauss> choices;      // `choice eps = 1, -1`
    std::string section;             // block where it was declared
    int line = 0;
};

struct Require {
    Poly lhs, rhs;
    std::string op;
    std::string text;
    int line = 0;
};

// One coefficient line: f k i j, ft i j k, r i j, w i j k.
struct Entry {
    std::vector<int> idx;  // 0-based
    Poly value;
    int line = 0, col = 0;
};

// Parsed .salg / .sbia / automorphism / r-matrix text. Lines before any
// section header belong to [base]. `r` lines go to the r-block named by the
// current section ([r], [rdual], [rfamily], [rdualfamily]); `w i j k` lines
// give a wedge-basis coefficient of X_i^X_j^X_k ([schouten], [schoutendual],
// [schoutenfamily], [schoutendualfamily]).
struct SourceFile {
    std::string path;
    std::string name;
    std::vector<std::string> aliases, notes;
    std::map<std::string, std::string> meta;
    std::vector<int> grades;
    std::vector<ParamDecl> params;
    std::vector<Require> requires_;
    std::vector<Entry> f, ft;
    std::map<std::string, std::vector<Entry>> rblocks, wblocks;
    std::map<std::string, std::string> section_names;  // section -> name
    std::map<std::string, Poly> lets;
    std::vector<std::vector<Poly>> matrix;  // `A = [[...]]`
    int matrix_line = 0;
    bool has_dual = false;

    bool has_block(const std::string& b) const { return rblocks.count(b) || wblocks.count(b); }
    const std::vector<Entry>& rblock(const std::string& b) const {
        static const std::vector<Entry> none;
        auto it = rblocks.find(b);
        return it == rblocks.end() ? none : it->second;
    }
    const std::vector<Entry>& wblock(const std::string& b) const {
        static const std::vector<Entry> none;
        auto it = wblocks.find(b);
        return it == wblocks.end() ? none : it->second;
    }

    const ParamDecl* param(const std::string& p) const {
        for (const auto& d : params)
            if (d.name == p) return &d;
        return nullptr;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

inline bool is_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

inline std::string unquote(const std::string& v, int line, int col) {
    if (v.size() < 2 || v.front() != '"' || v.back() != '"') throw ParseError("expected a quoted string", line, col);
    return v.substr(1, v.size() - 2);
}

// Splits a bracketed list at top-level commas.
inline std::vector<std::pair<std::string, int>> split_top(const std::string& s, int base_col) {
    std::vector<std::pair<std::string, int>> out;
    int depth = 0;
    size_t start = 0;
    for (size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || (s[k] == ',' && depth == 0)) {
            out.push_back({s.substr(start, k - start), base_col + static_cast<int>(start)});
            start = k + 1;
        } else if (s[k] == '[' || s[k] == '(') ++depth;
        else if (s[k] == ']' || s[k] == ')') --depth;
    }
    return out;
}

}  // namespace detail

inline SourceFile parse_source(const std::string& text, const std::string& path = "<input>") {
    SourceFile sf;
    sf.path = path;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    std::string section = "base";
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        // strip comments outside quotes
        bool q = false;
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] == '"') q = !q;
            if (s[k] == '#' && !q) { s = s.substr(0, k); break; }
        }
        size_t lead = s.find_first_not_of(" \t");
        if (lead == std::string::npos) continue;
        int col0 = static_cast<int>(lead) + 1;
        std::string t = detail::trim(s);
        if (t.front() == '[' && t.back() == ']' && t.find('=') == std::string::npos) {
            section = detail::trim(t.substr(1, t.size() - 2));
            static const std::set<std::string> known{"base", "dual", "r", "rdual", "rfamily",
                                                     "rdualfamily", "schouten", "schoutendual",
                                                     "schoutenfamily", "schoutendualfamily"};
            if (!known.count(section)) throw ParseError("unknown section [" + section + "]", line, col0);
            if (section == "dual") sf.has_dual = true;
            continue;
        }
        std::istringstream ws(t);
        std::string kw;
        ws >> kw;
        auto rest_col = [&](const std::string& part) {
            return col0 + static_cast<int>(t.find(part));
        };
        if (kw == "f" || kw == "ft" || kw == "r" || kw == "w") {
            size_t eq = t.find('=');
            if (eq == std::string::npos) throw ParseError("expected '='", line, col0 + static_cast<int>(t.size()));
            std::istringstream is(t.substr(kw.size(), eq - kw.size()));
            std::vector<int> idx;
            std::string tok;
            while (is >> tok) {
                int c = col0 + static_cast<int>(kw.size());
                try {
                    size_t used = 0;
                    int v = std::stoi(tok, &used);
                    if (used != tok.size() || v < 1) throw std::invalid_argument("");
                    idx.push_back(v - 1);
                } catch (const std::exception&) {
                    throw ParseError("bad index '" + tok + "'", line, c);
                }
            }
            size_t want = kw == "r" ? 2 : 3;
            if (idx.size() != want)
                throw ParseError(kw + " expects " + std::to_string(want) + " indices", line, col0);
            std::string rhs = t.substr(eq + 1);
            int rc = col0 + static_cast<int>(eq) + 1;
            Entry e{idx, parse_expr(rhs, line, rc), line, col0};
            if (kw == "f") {
                if (idx[1] > idx[2]) throw ParseError("only i <= j entries are permitted in 'f k i j'", line, col0);
                sf.f.push_back(std::move(e));
            } else if (kw == "ft") {
                if (idx[0] > idx[1]) throw ParseError("only i <= j entries are permitted in 'ft i j k'", line, col0);
                sf.ft.push_back(std::move(e));
                sf.has_dual = true;
            } else if (kw == "r") {
                std::string blk = (section == "base" || section == "dual") ? "r" : section;
                sf.rblocks[blk].push_back(std::move(e));
            } else {
                if (idx[0] > idx[1] || idx[1] > idx[2]) throw ParseError("w expects i <= j <= k", line, col0);
                sf.wblocks[section].push_back(std::move(e));
            }
            continue;
        }
        if (kw == "param" || kw == "choice") {
            std::string body = detail::trim(t.substr(kw.size()));
            size_t eq = body.find('=');
            std::string nm = detail::trim(body.substr(0, eq));
            if (!detail::is_ident(nm) || nm == "i") throw ParseError("bad parameter name", line, rest_col(body));
            ParamDecl d{nm, std::nullopt, {}, section, line};
            if (kw == "choice") {
                if (eq == std::string::npos) throw ParseError("choice needs values", line, col0);
                std::string vals = body.substr(eq + 1);
                for (auto& [v, c] : detail::split_top(vals, rest_col(body) + static_cast<int>(eq) + 1))
                    d.choices.push_back(parse_scalar(detail::trim(v), line, c));
            } else if (eq != std::string::npos) {
                d.value = parse_expr(body.substr(eq + 1), line, rest_col(body) + static_cast<int>(eq) + 1);
            }
            if (sf.param(nm)) throw ParseError("duplicate parameter '" + nm + "'", line, col0);
            sf.params.push_back(std::move(d));
            continue;
        }
        if (kw == "require") {
            std::string body = t.substr(kw.size());
            static const char* ops[] = {"!=", ">=", "<=", "==", ">", "<"};
            size_t at = std::string::npos;
            std::string op;
            for (const char* o : ops) {
                size_t p = body.find(o);
                if (p != std::string::npos && (at == std::string::npos || p < at ||
                                               (p == at && std::string(o).size() > op.size()))) {
                    at = p;
                    op = o;
                }
            }
            if (at == std::string::npos) throw ParseError("require needs a comparison", line, col0);
            int bc = col0 + static_cast<int>(kw.size());
            Require r{parse_expr(body.substr(0, at), line, bc), parse_expr(body.substr(at + op.size()), line,
                                                                             bc + static_cast<int>(at + op.size())),
                      op, detail::trim(body), line};
            sf.requires_.push_back(std::move(r));
            continue;
        }
        if (kw == "let") {
            std::string body = detail::trim(t.substr(3));
            size_t eq = body.find('=');
            if (eq == std::string::npos) throw ParseError("expected '='", line, col0);
            std::string nm = detail::trim(body.substr(0, eq));
            if (!detail::is_ident(nm)) throw ParseError("bad name in let", line, col0 + 4);
            sf.lets[nm] = parse_expr(body.substr(eq + 1), line, col0 + 4 + static_cast<int>(eq) + 1);
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw ParseError("unrecognized line", line, col0);
        std::string key = detail::trim(t.substr(0, eq));
        std::string val = detail::trim(t.substr(eq + 1));
        int vcol = col0 + static_cast<int>(t.find_first_not_of(" \t", eq + 1));
        if (key == "grades") {
            std::istringstream gs(val);
            std::string tok;
            std::vector<int> g;
            while (gs >> tok) {
                if (tok != "0" && tok != "1") throw ParseError("grades must be 0 or 1", line, vcol);
                g.push_back(tok == "1");
            }
            if (section == "base" || sf.grades.empty()) sf.grades = g;
            else if (g != sf.grades) throw ParseError("dual grading differs from base", line, vcol);
        } else if (key == "A") {
            if (val.size() < 4 || val.substr(0, 2) != "[[" || val.substr(val.size() - 2) != "]]")
                throw ParseError("matrix must look like [[...],[...]]", line, vcol);
            std::string inner = val.substr(1, val.size() - 2);
            for (auto& [row, rc] : detail::split_top(inner, vcol + 1)) {
                std::string rt = detail::trim(row);
                if (rt.size() < 2 || rt.front() != '[' || rt.back() != ']') throw ParseError("bad matrix row", line, rc);
                std::vector<Poly> cells;
                for (auto& [cell, cc] : detail::split_top(rt.substr(1, rt.size() - 2), rc + 1))
                    cells.push_back(parse_expr(cell, line, cc));
                sf.matrix.push_back(std::move(cells));
            }
            for (const auto& row : sf.matrix)
                if (row.size() != sf.matrix.size()) throw ParseError("matrix must be square", line, vcol);
            sf.matrix_line = line;
        } else if (key == "name") {
            std::string v = detail::unquote(val, line, vcol);
            if (section == "base" && sf.name.empty()) sf.name = v;
            sf.section_names[section] = v;
        } else if (key == "alias") {
            sf.aliases.push_back(detail::unquote(val, line, vcol));
        } else if (key == "note") {
            sf.notes.push_back(detail::unquote(val, line, vcol));
        } else if (detail::is_ident(key)) {
            sf.meta[key] = val.size() >= 2 && val.front() == '"' ? detail::unquote(val, line, vcol) : val;
        } else {
            throw ParseError("unrecognized key '" + key + "'", line, col0);
        }
    }
    return sf;
}

inline SourceFile load_source(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_source(ss.str(), path);
    } catch (ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.what(), e.line,
                         e.column);
    }
}

// ---------------------------------------------------------------------------
// Parameter binding and range validation

struct BindError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Gauss eval_bound(const Poly& p, const Bindings& b, int line) {
    try {
        return p.evaluate(b);
    } catch (const std::invalid_argument& e) {
        throw BindError(std::string(e.what()) + " (line " + std::to_string(line) + ")");
    }
}

inline bool require_holds(const Require& r, const Bindings& b) {
    Gauss l = eval_bound(r.lhs, b, r.line), x = eval_bound(r.rhs, b, r.line);
    if (r.op == "==") return l == x;
    if (r.op == "!=") return l != x;
    if (!l.is_real() || !x.is_real()) throw BindError("ordering comparison of non-real values: " + r.text);
    int c = cmp(l.re, x.re);
    if (r.op == "<") return c < 0;
    if (r.op == "<=") return c <= 0;
    if (r.op == ">") return c > 0;
    return c >= 0;
}

// Parameters occurring in a set of requires, restricted to one section's scope.
inline std::set<std::string> vars_of(const Require& r) {
    auto a = r.lhs.variables(), b = r.rhs.variables();
    a.insert(b.begin(), b.end());
    return a;
}

// Resolves declared parameters: explicit overrides, then defaults. Throws on
// unknown names, bad choices, or an unsatisfied range condition.
inline Bindings resolve_params(const SourceFile& sf, const Bindings& overrides, bool allow_missing = false) {
    Bindings b;
    for (const auto& [k, v] : overrides) {
        const ParamDecl* d = sf.param(k);
        if (!d) continue;  // overrides may target other files of a run
        if (!d->choices.empty() && std::find(d->choices.begin(), d->choices.end(), v) == d->choices.end())
            throw BindError("parameter " + k + " = " + to_string(v) + " is not an allowed choice");
        b[k] = v;
    }
    for (const auto& d : sf.params) {
        if (b.count(d.name)) continue;
        if (d.value) b[d.name] = eval_bound(*d.value, b, d.line);
        else if (!allow_missing) throw BindError("unbound parameter " + d.name + " (line " + std::to_string(d.line) + ")");
    }
    for (const auto& r : sf.requires_) {
        bool bound = true;
        for (const auto& v : vars_of(r)) bound = bound && b.count(v);
        if (!bound) {
            if (allow_missing) continue;
            throw BindError("unbound parameter in require: " + r.text);
        }
        if (!require_holds(r, b)) throw BindError("parameter out of range: " + r.text);
    }
    return b;
}

// Random rational in a small box; denominators up to 7.
inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span * 6, span * 6), den(1, 7);
    return make_rational(num(rng), den(rng));
}

// Samples in-range values for every parameter without a fixed value.
// Choice parameters range over their listed values.
inline Bindings sample_params(const SourceFile& sf, std::mt19937_64& rng, const Bindings& fixed = {},
                              int max_tries = 5000) {
    for (int t = 0; t < max_tries; ++t) {
        Bindings b = fixed;
        for (const auto& d : sf.params) {
            if (b.count(d.name)) continue;
            if (!d.choices.empty()) {
                std::uniform_int_distribution<size_t> pick(0, d.choices.size() - 1);
                b[d.name] = d.choices[pick(rng)];
            } else if (!d.value) {
                b[d.name] = Gauss(random_rational(rng));
            }
        }
        try {
            return resolve_params(sf, b);
        } catch (const BindError&) {
        }
    }
    throw BindError("could not sample parameters satisfying the range conditions of " + sf.name);
}

// All combinations of choice parameters.
inline std::vector<Bindings> choice_combinations(const SourceFile& sf) {
    std::vector<Bindings> out{{}};
    for (const auto& d : sf.params) {
        if (d.choices.empty()) continue;
        std::vector<Bindings> next;
        for (const auto& b : out)
            for (const auto& c : d.choices) {
                Bindings nb = b;
                nb[d.name] = c;
                next.push_back(std::move(nb));
            }
        out = std::move(next);
    }
    return out;
}

inline Grading grading_of(const SourceFile& sf) {
    if (sf.grades.empty()) return Grading::standard22();
    return Grading(sf.grades);
}

inline void check_index(const Entry& e, int n) {
    for (int x : e.idx)
        if (x >= n) throw ParseError("index out of range", e.line, e.col);
}

inline SuperAlgebra build_algebra(const SourceFile& sf, const Bindings& b) {
    SuperAlgebra A(sf.name, grading_of(sf));
    for (const auto& e : sf.f) {
        check_index(e, A.n);
        Gauss v = eval_bound(e.value, b, e.line);
        if (!v.is_zero() && ((A.grading[e.idx[0]] + A.grading[e.idx[1]] + A.grading[e.idx[2]]) & 1))
            throw ParseError("entry violates the grading selection rule", e.line, e.col);
        if (e.idx[1] == e.idx[2] && A.grading[e.idx[1]] == 0 && !v.is_zero())
            throw ParseError("bracket of an even generator with itself must vanish", e.line, e.col);
        A.set(e.idx[0], e.idx[1], e.idx[2], v);
    }
    for (const auto& d : sf.params)
        if (b.count(d.name)) A.params[d.name] = b.at(d.name);
    A.notes = sf.notes;
    return A;
}

inline DualStructure build_dual(const SourceFile& sf, const Bindings& b) {
    auto it = sf.section_names.find("dual");
    DualStructure d(it != sf.section_names.end() ? it->second : sf.name, grading_of(sf));
    for (const auto& e : sf.ft) {
        check_index(e, d.n);
        Gauss v = eval_bound(e.value, b, e.line);
        if (!v.is_zero() && ((d.grading[e.idx[0]] + d.grading[e.idx[1]] + d.grading[e.idx[2]]) & 1))
            throw ParseError("entry violates the grading selection rule", e.line, e.col);
        if (e.idx[0] == e.idx[1] && d.grading[e.idx[0]] == 0 && !v.is_zero())
            throw ParseError("bracket of an even generator with itself must vanish", e.line, e.col);
        d.set(e.idx[0], e.idx[1], e.idx[2], v);
    }
    for (const auto& p : sf.params)
        if (b.count(p.name)) d.params[p.name] = b.at(p.name);
    d.notes = sf.notes;
    return d;
}

// r^{ij} as an n x n matrix; entries are taken literally (no reflection).
inline Matrix build_r(const std::vector<Entry>& entries, int n, const Bindings& b) {
    Matrix r(n, n);
    for (const auto& e : entries) {
        check_index(e, n);
        r(e.idx[0], e.idx[1]) += eval_bound(e.value, b, e.line);
    }
    return r;
}

// Automorphism matrix after substituting `let` bindings.
inline Matrix build_matrix(const SourceFile& sf, const Bindings& extra = {}) {
    if (sf.matrix.empty()) throw ParseError("no matrix 'A = [[...]]' found", 1, 1);
    Bindings b = extra;
    for (const auto& [k, v] : sf.lets) b[k] = eval_bound(v, b, sf.matrix_line);
    int n = static_cast<int>(sf.matrix.size());
    Matrix A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Poly& p = sf.matrix[i][j];
            if (!p.is_zero() && !p.is_monomial())
                throw ParseError("matrix entries must be monomials in the declared parameters", sf.matrix_line, 1);
            A(i, j) = eval_bound(p, b, sf.matrix_line);
        }
    return A;
}

// ---------------------------------------------------------------------------
// Catalog

inline std::string catalog_dir() {
    if (const char* e = std::getenv("SBA_CATALOG_DIR"); e && *e) return e;
#ifdef SBA_DEFAULT_CATALOG
    return SBA_DEFAULT_CATALOG;
#else
    return "catalog";
#endif
}

inline std::string normalize_name(const std::string& s) {
    std::string o;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}' && c != '\\')
            o += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return o;
}

struct Catalog {
    std::vector<SourceFile> algebras, duals, pairs;

    static std::vector<SourceFile> load_dir(const std::filesystem::path& dir, const std::string& ext) {
        std::vector<SourceFile> out;
        if (!std::filesystem::exists(dir)) return out;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(dir))
            if (e.path().extension() == ext) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& p : files) {
            SourceFile sf = load_source(p.string());
            sf.meta.emplace("file", p.stem().string());
            out.push_back(std::move(sf));
        }
        return out;
    }

    static Catalog load(const std::string& dir = catalog_dir()) {
        Catalog c;
        std::filesystem::path root(dir);
        if (!std::filesystem::exists(root / "algebras")) throw ParseError("catalog not found at " + dir, 0, 0);
        c.algebras = load_dir(root / "algebras", ".salg");
        c.duals = load_dir(root / "duals", ".sbia");
        c.pairs = load_dir(root / "pairs", ".sbia");
        return c;
    }

    static const SourceFile* find_in(const std::vector<SourceFile>& v, const std::string& key) {
        std::string k = normalize_name(key);
        // a dual file is keyed by its dual name, not by the base it pairs with
        auto key_of = [](const SourceFile& sf) {
            auto it = sf.section_names.find("dual");
            return it != sf.section_names.end() && !sf.rblocks.count("r") ? it->second : sf.name;
        };
        for (const auto& sf : v)
            if (normalize_name(sf.meta.at("file")) == k || normalize_name(key_of(sf)) == k) return &sf;
        for (const auto& sf : v)
            for (const auto& a : sf.aliases)
                if (normalize_name(a) == k) return &sf;
        return nullptr;
    }

    const SourceFile& algebra(const std::string& key) const {
        if (auto* p = find_in(algebras, key)) return *p;
        throw ParseError("unknown catalog algebra '" + key + "'", 0, 0);
    }
    const SourceFile& dual(const std::string& key) const {
        if (auto* p = find_in(duals, key)) return *p;
        throw ParseError("unknown catalog dual '" + key + "'", 0, 0);
    }
    const SourceFile& pair(const std::string& key) const {
        if (auto* p = find_in(pairs, key)) return *p;
        throw ParseError("unknown catalog pair '" + key + "'", 0, 0);
    }
};

// Resolves `catalog:NAME`, `catalog-pair:NAME` or a file path.
inline SourceFile resolve_source(const std::string& uri, const Catalog* cat = nullptr) {
    auto with = [&](auto fn) {
        if (cat) return fn(*cat);
        Catalog c = Catalog::load();
        return fn(c);
    };
    if (uri.rfind("catalog-pair:", 0) == 0) {
        std::string k = uri.substr(13);
        return with([&](const Catalog& c) { return c.pair(k); });
    }
    if (uri.rfind("catalog:", 0) == 0) {
        std::string k = uri.substr(8);
        return with([&](const Catalog& c) {
            if (auto* p = Catalog::find_in(c.algebras, k)) return *p;
            if (auto* p = Catalog::find_in(c.duals, k)) return *p;
            if (auto* p = Catalog::find_in(c.pairs, k)) return *p;
            throw ParseError("unknown catalog entry '" + k + "'", 0, 0);
        });
    }
    return load_source(uri);
}

}  // namespace sba
