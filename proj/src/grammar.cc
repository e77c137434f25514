#include "incl/grammar.hh"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace incl {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Cfg parse_cfg(std::istream& in, const std::string& origin) {
    struct RawRule { std::string lhs; std::vector<std::vector<std::string>> alts; size_t line; };
    std::vector<RawRule> rules;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        if (toks.size() < 2 || toks[1] != "->")
            throw ParseError(origin, lineno, "expected '<lhs> -> <alternatives>'");
        if (toks[0] == "eps") throw ParseError(origin, lineno, "'eps' is reserved");
        RawRule rule{toks[0], {{}}, lineno};
        for (size_t i = 2; i < toks.size(); ++i) {
            if (toks[i] == "|") rule.alts.emplace_back();
            else rule.alts.back().push_back(toks[i]);
        }
        rules.push_back(std::move(rule));
    }
    if (rules.empty()) throw ParseError(origin, lineno == 0 ? 1 : lineno, "no rules");

    Cfg g;
    std::map<std::string, Var> vars;
    for (const auto& r : rules) {
        if (!vars.count(r.lhs)) {
            vars.emplace(r.lhs, static_cast<Var>(g.var_names.size()));
            g.var_names.push_back(r.lhs);
        }
    }
    for (const auto& r : rules) {
        Var lhs = vars.at(r.lhs);
        for (const auto& alt : r.alts) {
            CfgProduction p{lhs, {}};
            for (const auto& tok : alt) {
                if (tok == "eps") continue;
                auto it = vars.find(tok);
                if (it != vars.end()) p.rhs.push_back({true, it->second});
                else p.rhs.push_back({false, g.terminals.intern(tok)});
            }
            g.prods.push_back(std::move(p));
        }
    }
    return g;
}

Cfg parse_cfg_string(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    return parse_cfg(in, origin);
}

Cfg load_cfg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_cfg(in, path);
}

// ---- CNF conversion ----------------------------------------------------------

namespace {

struct Work {
    std::vector<std::string> names;
    std::vector<CfgProduction> prods;
    Var start = 0;

    Var fresh(std::string base) {
        while (std::find(names.begin(), names.end(), base) != names.end()) base += "'";
        names.push_back(base);
        return static_cast<Var>(names.size() - 1);
    }

    std::vector<bool> productive() const {
        std::vector<bool> p(names.size(), false);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& prod : prods) {
                if (p[prod.lhs]) continue;
                bool all = true;
                for (const auto& s : prod.rhs)
                    if (s.is_var && !p[s.id]) { all = false; break; }
                if (all) { p[prod.lhs] = true; grew = true; }
            }
        }
        return p;
    }

    std::vector<bool> reachable() const {
        std::vector<bool> r(names.size(), false);
        r[start] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& prod : prods) {
                if (!r[prod.lhs]) continue;
                for (const auto& s : prod.rhs)
                    if (s.is_var && !r[s.id]) { r[s.id] = true; grew = true; }
            }
        }
        return r;
    }

    std::vector<bool> nullable() const {
        std::vector<bool> nu(names.size(), false);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& prod : prods) {
                if (nu[prod.lhs]) continue;
                bool all = true;
                for (const auto& s : prod.rhs)
                    if (!s.is_var || !nu[s.id]) { all = false; break; }
                if (all) { nu[prod.lhs] = true; grew = true; }
            }
        }
        return nu;
    }

    void drop_useless() {
        auto p = productive();
        std::erase_if(prods, [&](const CfgProduction& prod) {
            if (!p[prod.lhs]) return true;
            for (const auto& s : prod.rhs)
                if (s.is_var && !p[s.id]) return true;
            return false;
        });
        auto r = reachable();
        std::erase_if(prods, [&](const CfgProduction& prod) { return !r[prod.lhs]; });
    }

    bool on_some_rhs(Var v) const {
        for (const auto& prod : prods)
            for (const auto& s : prod.rhs)
                if (s.is_var && s.id == v) return true;
        return false;
    }
};

}  // namespace

CnfGrammar to_cnf(const Cfg& g_in) {
    Work w{g_in.var_names, g_in.prods, 0};

    if (!w.productive()[w.start])
        throw std::invalid_argument(
            "grammar generates the empty language (start symbol is unproductive)");
    w.drop_useless();

    // start isolation, only when the start symbol both recurs and is nullable
    if (w.on_some_rhs(w.start) && w.nullable()[w.start]) {
        Var fresh = w.fresh("%S");
        w.prods.push_back({fresh, {{true, w.start}}});
        w.start = fresh;
    }

    // terminal lifting in long right-hand sides
    std::map<Sym, Var> lifted;
    std::vector<CfgProduction> lift_prods;
    for (size_t pi = 0; pi < w.prods.size(); ++pi) {
        if (w.prods[pi].rhs.size() < 2) continue;
        for (auto& s : w.prods[pi].rhs) {
            if (s.is_var) continue;
            auto it = lifted.find(s.id);
            Var v;
            if (it == lifted.end()) {
                v = w.fresh("%T" + g_in.terminals.token(s.id));
                lift_prods.push_back({v, {{false, s.id}}});
                lifted.emplace(s.id, v);
            } else {
                v = it->second;
            }
            s = {true, v};
        }
    }
    w.prods.insert(w.prods.end(), lift_prods.begin(), lift_prods.end());

    // binarization
    size_t chain_counter = 0;
    std::vector<CfgProduction> binarized;
    for (const auto& prod : w.prods) {
        if (prod.rhs.size() <= 2) { binarized.push_back(prod); continue; }
        Var lhs = prod.lhs;
        for (size_t i = 0; i + 2 < prod.rhs.size(); ++i) {
            Var rest = w.fresh("%B" + std::to_string(chain_counter++));
            binarized.push_back({lhs, {prod.rhs[i], {true, rest}}});
            lhs = rest;
        }
        binarized.push_back({lhs, {prod.rhs[prod.rhs.size() - 2], prod.rhs.back()}});
    }
    w.prods = std::move(binarized);

    // ε-elimination except at the start
    auto nu = w.nullable();
    bool start_eps = nu[w.start];
    std::vector<CfgProduction> no_eps;
    for (const auto& prod : w.prods) {
        const auto& rhs = prod.rhs;
        size_t n = rhs.size();
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            CfgProduction variant{prod.lhs, {}};
            bool valid = true;
            for (size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    if (!(rhs[i].is_var && nu[rhs[i].id])) { valid = false; break; }
                } else {
                    variant.rhs.push_back(rhs[i]);
                }
            }
            if (valid && !variant.rhs.empty()) no_eps.push_back(std::move(variant));
        }
    }
    w.prods = std::move(no_eps);

    // unit elimination
    std::vector<std::vector<bool>> unit(w.names.size(), std::vector<bool>(w.names.size(), false));
    for (size_t v = 0; v < w.names.size(); ++v) unit[v][v] = true;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& prod : w.prods) {
            if (prod.rhs.size() != 1 || !prod.rhs[0].is_var) continue;
            for (size_t v = 0; v < w.names.size(); ++v) {
                if (unit[v][prod.lhs] && !unit[v][prod.rhs[0].id]) {
                    unit[v][prod.rhs[0].id] = true;
                    grew = true;
                }
            }
        }
    }
    std::vector<CfgProduction> final_prods;
    for (size_t v = 0; v < w.names.size(); ++v) {
        for (size_t y = 0; y < w.names.size(); ++y) {
            if (!unit[v][y]) continue;
            for (const auto& prod : w.prods) {
                if (prod.lhs != y) continue;
                if (prod.rhs.size() == 1 && prod.rhs[0].is_var) continue;
                final_prods.push_back({static_cast<Var>(v), prod.rhs});
            }
        }
    }
    w.prods = std::move(final_prods);
    w.drop_useless();

    // renumber: start first, then kept variables in prior index order
    std::vector<bool> keep(w.names.size(), false);
    keep[w.start] = true;
    for (const auto& prod : w.prods) {
        keep[prod.lhs] = true;
        for (const auto& s : prod.rhs)
            if (s.is_var) keep[s.id] = true;
    }
    std::vector<Var> remap(w.names.size(), 0);
    CnfGrammar out;
    out.terminals = g_in.terminals;
    out.start_eps = start_eps;
    remap[w.start] = 0;
    out.var_names.push_back(w.names[w.start]);
    for (size_t v = 0; v < w.names.size(); ++v) {
        if (!keep[v] || v == w.start) continue;
        remap[v] = static_cast<Var>(out.var_names.size());
        out.var_names.push_back(w.names[v]);
    }
    out.terminal_prods.resize(out.var_names.size());
    std::set<std::pair<Var, std::vector<CfgSymbol>>> seen;
    for (const auto& prod : w.prods) {
        std::pair<Var, std::vector<CfgSymbol>> key{prod.lhs, prod.rhs};
        if (!seen.insert(key).second) continue;
        Var lhs = remap[prod.lhs];
        if (prod.rhs.size() == 1) {
            out.terminal_prods[lhs].push_back(prod.rhs[0].id);
        } else {
            out.binaries.push_back({lhs, remap[prod.rhs[0].id], remap[prod.rhs[1].id]});
        }
    }
    out.validate();
    return out;
}

void CnfGrammar::validate() const {
    std::vector<bool> has_prod(n_vars(), false);
    if (start_eps && n_vars() > 0) has_prod[0] = true;
    for (size_t v = 0; v < n_vars(); ++v)
        if (!terminal_prods[v].empty()) has_prod[v] = true;
    for (const auto& b : binaries) {
        if (b.lhs >= n_vars() || b.left >= n_vars() || b.right >= n_vars())
            throw std::logic_error("cnf: variable index out of range");
        has_prod[b.lhs] = true;
    }
    for (size_t v = 0; v < n_vars(); ++v)
        if (!has_prod[v])
            throw std::logic_error("cnf: variable '" + var_names[v] + "' has no production");
    if (n_vars() == 0) throw std::logic_error("cnf: no start variable");
}

// ---- word-set equations --------------------------------------------------------

GrammarWordVector base_vector(const CnfGrammar& g) {
    GrammarWordVector b(g.n_vars());
    if (g.start_eps) b[0].insert(Word{});
    for (size_t v = 0; v < g.n_vars(); ++v)
        for (Sym s : g.terminal_prods[v]) b[v].insert(Word{s});
    return b;
}

GrammarWordVector fn_g(const CnfGrammar& g, const GrammarWordVector& x) {
    GrammarWordVector out(g.n_vars());
    for (const CnfBinary& b : g.binaries) {
        for (const Word& u : x[b.left]) {
            for (const Word& v : x[b.right]) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                out[b.lhs].insert(uv);
            }
        }
    }
    return out;
}

bool cyk_member(const CnfGrammar& g, const Word& u) {
    if (g.n_vars() > 64) throw std::invalid_argument("cyk: more than 64 variables");
    if (u.empty()) return g.start_eps;
    const size_t n = u.size();
    // table[i][l] = variable mask deriving u[i .. i+l)
    std::vector<std::vector<uint64_t>> table(n, std::vector<uint64_t>(n + 1, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t v = 0; v < g.n_vars(); ++v)
            for (Sym s : g.terminal_prods[v])
                if (s == u[i]) table[i][1] |= uint64_t{1} << v;
    for (size_t len = 2; len <= n; ++len) {
        for (size_t i = 0; i + len <= n; ++i) {
            uint64_t mask = 0;
            for (size_t k = 1; k < len; ++k) {
                uint64_t lm = table[i][k];
                uint64_t rm = table[i + k][len - k];
                if (!lm || !rm) continue;
                for (const CnfBinary& b : g.binaries)
                    if ((lm >> b.left & 1) && (rm >> b.right & 1)) mask |= uint64_t{1} << b.lhs;
            }
            table[i][len] = mask;
        }
    }
    return table[0][n] & 1;
}

}  // namespace incl
