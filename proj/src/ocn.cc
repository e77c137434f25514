#include "incl/ocn.hh"

#include <fstream>
#include <limits>
#include <sstream>

namespace incl {

State Ocn::add_state(const std::string& name) {
    names_.push_back(name);
    index_built_ = false;
    return static_cast<State>(names_.size() - 1);
}

void Ocn::add_transition(State src, Sym sym, int delta, State dst) {
    if (src >= n_states() || dst >= n_states())
        throw std::invalid_argument("ocn transition endpoint out of range");
    if (sym >= n_syms()) throw std::invalid_argument("ocn transition symbol out of range");
    if (delta < -1 || delta > 1)
        throw std::invalid_argument("ocn transition delta must be -1, 0 or +1");
    trans_.push_back({src, sym, delta, dst});
    index_built_ = false;
}

std::optional<State> Ocn::find_state(const std::string& name) const {
    for (size_t q = 0; q < names_.size(); ++q)
        if (names_[q] == name) return static_cast<State>(q);
    return std::nullopt;
}

const std::vector<OcnTrans>& Ocn::by_symbol(Sym s) const {
    if (!index_built_) {
        by_sym_.assign(n_syms(), {});
        for (const OcnTrans& t : trans_) by_sym_[t.sym].push_back(t);
        index_built_ = true;
    }
    return by_sym_.at(s);
}

bool MacroState::any_reachable() const {
    for (int64_t n : v_)
        if (n != kBot) return true;
    return false;
}

bool MacroState::leq(const MacroState& other) const {
    for (size_t q = 0; q < v_.size(); ++q)
        if (v_[q] > other.v_[q]) return false;  // ⊥ = -1 sits below every value
    return true;
}

MacroState macro_init(const Ocn& o, Config c) {
    if (c.state >= o.n_states()) throw std::invalid_argument("configuration state out of range");
    if (c.counter < 0) throw std::invalid_argument("configuration counter must be nonnegative");
    MacroState m(o.n_states());
    m.raise_to(c.state, c.counter);
    return m;
}

MacroState macro_step(const Ocn& o, const MacroState& m, Sym s) {
    if (s >= o.n_syms()) throw std::invalid_argument("macro_step: unknown symbol id");
    MacroState out(o.n_states());
    for (const OcnTrans& t : o.by_symbol(s)) {
        int64_t n = m.get(t.src);
        if (n == MacroState::kBot) continue;
        if (n == std::numeric_limits<int64_t>::max())
            throw std::overflow_error("ocn counter overflow");
        int64_t n2 = n + t.delta;
        if (n2 < 0) continue;
        out.raise_to(t.dst, n2);
    }
    return out;
}

bool trace_member(const Ocn& o, Config c, const Word& u) {
    MacroState m = macro_init(o, c);
    for (Sym s : u) {
        m = macro_step(o, m, s);
        if (!m.any_reachable()) return false;
    }
    return m.any_reachable();
}

// ---- order -------------------------------------------------------------------

namespace {

std::vector<std::optional<Sym>> build_symmap(const SymbolTable& from, const SymbolTable& to) {
    std::vector<std::optional<Sym>> map(from.size());
    for (Sym s = 0; s < from.size(); ++s) map[s] = to.find(from.token(s));
    return map;
}

}  // namespace

OcnOrder::OcnOrder(Ocn o, Config c, const SymbolTable& universe)
    : o_(std::move(o)), c_(c), symmap_(build_symmap(universe, o_.alphabet())) {}

const MacroState& OcnOrder::key(const Word& u) const {
    auto it = keys_.find(u);
    if (it != keys_.end()) return it->second;
    MacroState m(o_.n_states());
    if (u.empty()) {
        m = macro_init(o_, c_);
    } else {
        Sym raw = u.back();
        if (raw >= symmap_.size())
            throw std::invalid_argument("word symbol #" + std::to_string(raw) +
                                        " outside the order's universe");
        Word rest(u.begin(), u.end() - 1);
        const MacroState& kr = key(rest);
        if (symmap_[raw]) m = macro_step(o_, kr, *symmap_[raw]);
        // dead letter: stays all-⊥
    }
    return keys_.emplace(u, std::move(m)).first->second;
}

bool OcnOrder::leq(const Word& u, const Word& v) const { return key(u).leq(key(v)); }

OcnOrder ocn_order(const Ocn& o, Config c, const SymbolTable& universe) {
    return OcnOrder(o, c, universe);
}

Verdict nfa_include_ocn_traces(const Nfa& a, const Ocn& o, Config c,
                               const WordRunOptions& opts) {
    SymbolTable universe(a.alphabet().tokens());
    for (const auto& t : o.alphabet().tokens()) universe.intern(t);
    Nfa au = re_alphabet(a, universe);
    OcnOrder qo = ocn_order(o, c, universe);
    auto symmap = build_symmap(universe, o.alphabet());
    auto l2 = [&o, c, symmap](const Word& w) {
        Word mapped;
        mapped.reserve(w.size());
        for (Sym s : w) {
            if (s >= symmap.size() || !symmap[s]) return false;
            mapped.push_back(*symmap[s]);
        }
        return trace_member(o, c, mapped);
    };
    return nfa_include_words(au, l2, qo, opts);
}

// ---- text format ----------------------------------------------------------------

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

Ocn parse_ocn(std::istream& in, const std::string& origin) {
    struct Pending { std::string src, sym, delta, dst; size_t line; };
    std::vector<std::pair<std::string, size_t>> states;
    std::vector<Pending> pending;
    SymbolTable alphabet;

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "state") {
            if (toks.size() != 2) throw ParseError(origin, lineno, "state needs a name");
            states.emplace_back(toks[1], lineno);
        } else if (toks[0] == "trans") {
            if (toks.size() != 5)
                throw ParseError(origin, lineno, "trans needs <src> <symbol> <delta> <dst>");
            alphabet.intern(toks[2]);
            pending.push_back({toks[1], toks[2], toks[3], toks[4], lineno});
        } else {
            throw ParseError(origin, lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    Ocn out(alphabet);
    for (const auto& [name, ln] : states) {
        if (out.find_state(name)) throw ParseError(origin, ln, "duplicate state '" + name + "'");
        out.add_state(name);
    }
    for (const auto& p : pending) {
        auto src = out.find_state(p.src);
        if (!src) throw ParseError(origin, p.line, "unknown state '" + p.src + "'");
        auto dst = out.find_state(p.dst);
        if (!dst) throw ParseError(origin, p.line, "unknown state '" + p.dst + "'");
        int delta = 0;
        try {
            size_t used = 0;
            delta = std::stoi(p.delta, &used);
            if (used != p.delta.size()) throw std::invalid_argument(p.delta);
        } catch (const std::exception&) {
            throw ParseError(origin, p.line, "bad delta '" + p.delta + "'");
        }
        if (delta < -1 || delta > 1)
            throw ParseError(origin, p.line, "delta must be -1, 0 or +1");
        out.add_transition(*src, *out.alphabet().find(p.sym), delta, *dst);
    }
    return out;
}

Ocn parse_ocn_string(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    return parse_ocn(in, origin);
}

Ocn load_ocn(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_ocn(in, path);
}

Config parse_config(const Ocn& o, const std::string& text) {
    auto pos = text.rfind(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("configuration must be <state>:<nat>, got '" + text + "'");
    std::string name = text.substr(0, pos);
    std::string num = text.substr(pos + 1);
    auto q = o.find_state(name);
    if (!q) throw std::invalid_argument("unknown ocn state '" + name + "'");
    int64_t n = 0;
    try {
        size_t used = 0;
        n = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad counter value '" + num + "'");
    }
    if (n < 0) throw std::invalid_argument("counter value must be nonnegative");
    return Config{*q, n};
}

}  // namespace incl
