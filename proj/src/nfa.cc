#include "incl/nfa.hh"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace incl {

// ---- StateRelation --------------------------------------------------------

StateRelation StateRelation::empty(size_t n) {
    StateRelation r;
    r.rows.assign(n, StateSet(n));
    return r;
}

StateRelation StateRelation::identity(size_t n) {
    StateRelation r = empty(n);
    for (size_t q = 0; q < n; ++q) r.rows[q].set(q);
    return r;
}

StateRelation StateRelation::full(size_t n) {
    StateRelation r;
    StateSet row(n);
    row.set();
    r.rows.assign(n, row);
    return r;
}

bool StateRelation::subset_of(const StateRelation& other) const {
    for (size_t q = 0; q < rows.size(); ++q)
        if (!rows[q].is_subset_of(other.rows[q])) return false;
    return true;
}

bool StateRelation::intersects(const StateSet& a, const StateSet& b) const {
    for (size_t p = a.find_first(); p != kNoState; p = a.find_next(p))
        if (rows[p].intersects(b)) return true;
    return false;
}

size_t StateRelation::count() const {
    size_t n = 0;
    for (const auto& row : rows) n += row.count();
    return n;
}

size_t hash_value(const StateRelation& r) {
    size_t seed = r.rows.size();
    for (const auto& row : r.rows) boost::hash_combine(seed, boost::hash_value(row));
    return seed;
}

StateRelation compose(const StateRelation& r, const StateRelation& s) {
    StateRelation out = StateRelation::empty(r.size());
    for (size_t q = 0; q < r.size(); ++q)
        for (size_t m = r.rows[q].find_first(); m != kNoState; m = r.rows[q].find_next(m))
            out.rows[q] |= s.rows[m];
    return out;
}

// ---- Nfa -------------------------------------------------------------------

State Nfa::add_state(const std::string& name, bool is_initial, bool is_final) {
    State q = static_cast<State>(names_.size());
    names_.push_back(name);
    initials_.push_back(is_initial);
    finals_.push_back(is_final);
    index_built_ = false;
    return q;
}

void Nfa::add_transition(State src, Sym sym, State dst) {
    if (src >= n_states() || dst >= n_states())
        throw std::invalid_argument("transition endpoint out of range");
    if (sym >= n_syms())
        throw std::invalid_argument("transition symbol out of range");
    trans_.push_back({src, sym, dst});
    index_built_ = false;
}

std::optional<State> Nfa::find_state(const std::string& name) const {
    for (size_t q = 0; q < names_.size(); ++q)
        if (names_[q] == name) return static_cast<State>(q);
    return std::nullopt;
}

void Nfa::set_initials(StateSet s) {
    s.resize(n_states());
    initials_ = std::move(s);
}

void Nfa::set_finals(StateSet s) {
    s.resize(n_states());
    finals_ = std::move(s);
}

void Nfa::ensure_index() const {
    if (index_built_) return;
    fwd_.assign(n_syms(), std::vector<StateSet>(n_states(), StateSet(n_states())));
    bwd_.assign(n_syms(), std::vector<StateSet>(n_states(), StateSet(n_states())));
    for (const Trans& t : trans_) {
        fwd_[t.sym][t.src].set(t.dst);
        bwd_[t.sym][t.dst].set(t.src);
    }
    index_built_ = true;
}

const StateSet& Nfa::targets(State q, Sym a) const {
    ensure_index();
    return fwd_[a][q];
}

const StateSet& Nfa::sources(State q, Sym a) const {
    ensure_index();
    return bwd_[a][q];
}

StateSet Nfa::make_set(std::initializer_list<State> qs) const {
    StateSet s(n_states());
    for (State q : qs) s.set(q);
    return s;
}

bool Nfa::operator==(const Nfa& other) const {
    return alphabet_.tokens() == other.alphabet_.tokens() && names_ == other.names_ &&
           initials_ == other.initials_ && finals_ == other.finals_ && trans_ == other.trans_;
}

std::vector<State> set_members(const StateSet& s) {
    std::vector<State> out;
    for (size_t q = s.find_first(); q != kNoState; q = s.find_next(q))
        out.push_back(static_cast<State>(q));
    return out;
}

// ---- transformers ----------------------------------------------------------

StateSet pre_step(const Nfa& a, Sym s, const StateSet& x) {
    if (s >= a.n_syms()) throw std::invalid_argument("pre_step: unknown symbol id");
    StateSet out(a.n_states());
    for (size_t q = x.find_first(); q != kNoState; q = x.find_next(q))
        out |= a.sources(static_cast<State>(q), s);
    return out;
}

StateSet post_step(const Nfa& a, Sym s, const StateSet& x) {
    if (s >= a.n_syms()) throw std::invalid_argument("post_step: unknown symbol id");
    StateSet out(a.n_states());
    for (size_t q = x.find_first(); q != kNoState; q = x.find_next(q))
        out |= a.targets(static_cast<State>(q), s);
    return out;
}

StateSet pre_word(const Nfa& a, const Word& u, StateSet x) {
    for (auto it = u.rbegin(); it != u.rend(); ++it) x = pre_step(a, *it, x);
    return x;
}

StateSet post_word(const Nfa& a, const Word& u, StateSet x) {
    for (Sym s : u) x = post_step(a, s, x);
    return x;
}

bool member(const Nfa& a, const Word& u) {
    return post_word(a, u, a.initials()).intersects(a.finals());
}

bool member_tokens(const Nfa& a, const std::vector<std::string>& tokens) {
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) {
        auto s = a.alphabet().find(t);
        if (!s) return false;
        w.push_back(*s);
    }
    return member(a, w);
}

StateRelation letter_relation(const Nfa& a, Sym s) {
    StateRelation r = StateRelation::empty(a.n_states());
    for (State q = 0; q < a.n_states(); ++q) r.rows[q] = a.targets(q, s);
    return r;
}

StateRelation ctx(const Nfa& a, const Word& u) {
    StateRelation r = StateRelation::identity(a.n_states());
    for (Sym s : u) r = compose(r, letter_relation(a, s));
    return r;
}

StateRelation max_simulation(const Nfa& a) {
    const size_t n = a.n_states();
    StateRelation rel = StateRelation::full(n);
    // F-consistency: p ≼ q requires p ∈ F ⇒ q ∈ F.
    for (State p = 0; p < n; ++p)
        if (a.finals().test(p)) rel.rows[p] &= a.finals();
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p) {
            for (size_t q = rel.rows[p].find_first(); q != kNoState;
                 q = rel.rows[p].find_next(q)) {
                bool ok = true;
                for (Sym s = 0; s < a.n_syms() && ok; ++s) {
                    const StateSet& moves = a.targets(p, s);
                    const StateSet& answers = a.targets(static_cast<State>(q), s);
                    for (size_t p2 = moves.find_first(); p2 != kNoState;
                         p2 = moves.find_next(p2)) {
                        if (!rel.rows[p2].intersects(answers)) { ok = false; break; }
                    }
                }
                if (!ok) {
                    rel.reset(p, static_cast<State>(q));
                    changed = true;
                }
            }
        }
    }
    return rel;
}

bool forall_exists_leq(const StateSet& x, const StateSet& y, const StateRelation& rel) {
    for (size_t p = x.find_first(); p != kNoState; p = x.find_next(p))
        if (!rel.rows[p].intersects(y)) return false;
    return true;
}

// ---- constructions ----------------------------------------------------------

Nfa reverse(const Nfa& a) {
    Nfa r(a.alphabet());
    for (State q = 0; q < a.n_states(); ++q)
        r.add_state(a.state_name(q), a.finals().test(q), a.initials().test(q));
    for (const Trans& t : a.transitions()) r.add_transition(t.dst, t.sym, t.src);
    return r;
}

Nfa quotient_left(const Nfa& a, Sym s) {
    Nfa q = a;
    q.set_initials(post_step(a, s, a.initials()));
    return q;
}

Nfa with_initials(const Nfa& a, StateSet initials) {
    Nfa out = a;
    out.set_initials(std::move(initials));
    return out;
}

Nfa with_finals(const Nfa& a, StateSet finals) {
    Nfa out = a;
    out.set_finals(std::move(finals));
    return out;
}

namespace {

SymbolTable merge_alphabets(const SymbolTable& a, const SymbolTable& b) {
    SymbolTable out(a.tokens());
    for (const auto& t : b.tokens()) out.intern(t);
    return out;
}

std::string set_name(const Nfa& a, const StateSet& s) {
    std::string name = "{";
    bool first = true;
    for (size_t q = s.find_first(); q != kNoState; q = s.find_next(q)) {
        if (!first) name += ",";
        name += a.state_name(static_cast<State>(q));
        first = false;
    }
    return name + "}";
}

}  // namespace

Nfa product(const Nfa& a, const Nfa& b) {
    SymbolTable alpha = merge_alphabets(a.alphabet(), b.alphabet());
    Nfa out(alpha);

    // shared symbols, as (out sym, a sym, b sym)
    std::vector<std::tuple<Sym, Sym, Sym>> shared;
    for (Sym sa = 0; sa < a.n_syms(); ++sa) {
        auto sb = b.alphabet().find(a.alphabet().token(sa));
        if (sb) shared.emplace_back(*alpha.find(a.alphabet().token(sa)), sa, *sb);
    }

    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>> queue;
    auto get = [&](State p, State q) {
        auto it = index.find({p, q});
        if (it != index.end()) return it->second;
        State fresh = out.add_state("(" + a.state_name(p) + "," + b.state_name(q) + ")",
                                    a.initials().test(p) && b.initials().test(q),
                                    a.finals().test(p) && b.finals().test(q));
        index.emplace(std::make_pair(p, q), fresh);
        queue.emplace_back(p, q);
        return fresh;
    };

    for (size_t p = a.initials().find_first(); p != kNoState; p = a.initials().find_next(p))
        for (size_t q = b.initials().find_first(); q != kNoState; q = b.initials().find_next(q))
            get(static_cast<State>(p), static_cast<State>(q));

    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        State src = index.at({p, q});
        for (auto [so, sa, sb] : shared) {
            const StateSet& ta = a.targets(p, sa);
            const StateSet& tb = b.targets(q, sb);
            for (size_t p2 = ta.find_first(); p2 != kNoState; p2 = ta.find_next(p2))
                for (size_t q2 = tb.find_first(); q2 != kNoState; q2 = tb.find_next(q2))
                    out.add_transition(src, so, get(static_cast<State>(p2), static_cast<State>(q2)));
        }
    }
    return out;
}

Nfa determinize(const Nfa& a) {
    Nfa out(a.alphabet());
    std::unordered_map<StateSet, State, boost::hash<StateSet>> index;
    std::deque<StateSet> queue;

    auto get = [&](const StateSet& s) {
        auto it = index.find(s);
        if (it != index.end()) return it->second;
        State fresh = out.add_state(set_name(a, s), false, s.intersects(a.finals()));
        index.emplace(s, fresh);
        queue.push_back(s);
        return fresh;
    };

    State start = get(a.initials());
    (void)start;
    while (!queue.empty()) {
        StateSet s = queue.front();
        queue.pop_front();
        State src = index.at(s);
        for (Sym sym = 0; sym < a.n_syms(); ++sym)
            out.add_transition(src, sym, get(post_step(a, sym, s)));
    }
    StateSet ini(out.n_states());
    ini.set(0);
    out.set_initials(ini);
    return out;
}

Nfa complement_dfa(const Nfa& d) {
    if (d.initials().count() != 1)
        throw std::invalid_argument("complement_dfa: input must have exactly one initial state");
    for (State q = 0; q < d.n_states(); ++q)
        for (Sym s = 0; s < d.n_syms(); ++s)
            if (d.targets(q, s).count() > 1)
                throw std::invalid_argument("complement_dfa: input is nondeterministic");

    Nfa out(d.alphabet());
    for (State q = 0; q < d.n_states(); ++q)
        out.add_state(d.state_name(q), d.initials().test(q), !d.finals().test(q));

    bool need_sink = false;
    for (State q = 0; q < d.n_states() && !need_sink; ++q)
        for (Sym s = 0; s < d.n_syms() && !need_sink; ++s)
            if (d.targets(q, s).none()) need_sink = true;

    State sink = 0;
    if (need_sink || d.n_states() == 0) sink = out.add_state("{sink}", d.n_states() == 0, true);

    for (State q = 0; q < d.n_states(); ++q) {
        for (Sym s = 0; s < d.n_syms(); ++s) {
            const StateSet& t = d.targets(q, s);
            if (t.none()) {
                out.add_transition(q, s, sink);
            } else {
                out.add_transition(q, s, static_cast<State>(t.find_first()));
            }
        }
    }
    if (need_sink || d.n_states() == 0)
        for (Sym s = 0; s < d.n_syms(); ++s) out.add_transition(sink, s, sink);
    return out;
}

Nfa trim(const Nfa& a) {
    const size_t n = a.n_states();
    StateSet reach = a.initials();
    bool grew = true;
    while (grew) {
        grew = false;
        for (Sym s = 0; s < a.n_syms(); ++s) {
            StateSet next = post_step(a, s, reach);
            next -= reach;
            if (next.any()) { reach |= next; grew = true; }
        }
    }
    StateSet coreach = a.finals();
    grew = true;
    while (grew) {
        grew = false;
        for (Sym s = 0; s < a.n_syms(); ++s) {
            StateSet prev = pre_step(a, s, coreach);
            prev -= coreach;
            if (prev.any()) { coreach |= prev; grew = true; }
        }
    }
    StateSet keep = reach & coreach;

    Nfa out(a.alphabet());
    std::vector<State> remap(n, 0);
    for (size_t q = keep.find_first(); q != kNoState; q = keep.find_next(q))
        remap[q] = out.add_state(a.state_name(static_cast<State>(q)),
                                 a.initials().test(q), a.finals().test(q));
    for (const Trans& t : a.transitions())
        if (keep.test(t.src) && keep.test(t.dst))
            out.add_transition(remap[t.src], t.sym, remap[t.dst]);
    return out;
}

Nfa universal_nfa(const SymbolTable& alphabet) {
    Nfa out(alphabet);
    State q = out.add_state("u", true, true);
    for (Sym s = 0; s < out.n_syms(); ++s) out.add_transition(q, s, q);
    return out;
}

Nfa re_alphabet(const Nfa& a, const SymbolTable& universe) {
    Nfa out(universe);
    for (State q = 0; q < a.n_states(); ++q)
        out.add_state(a.state_name(q), a.initials().test(q), a.finals().test(q));
    for (const Trans& t : a.transitions()) {
        auto s = universe.find(a.alphabet().token(t.sym));
        if (!s) throw std::invalid_argument("re_alphabet: universe misses token '" +
                                            a.alphabet().token(t.sym) + "'");
        out.add_transition(t.src, *s, t.dst);
    }
    return out;
}

// ---- text format -------------------------------------------------------------

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

Nfa parse_nfa(std::istream& in, const std::string& origin) {
    SymbolTable alphabet;
    struct PendingTrans { std::string src, sym, dst; size_t line; };
    struct PendingState { std::string name; bool ini, fin; size_t line; };
    std::vector<PendingState> states;
    std::vector<PendingTrans> pending;

    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(strip_comment(line));
        if (toks.empty()) continue;
        if (toks[0] == "alphabet") {
            for (size_t i = 1; i < toks.size(); ++i) alphabet.intern(toks[i]);
        } else if (toks[0] == "state") {
            if (toks.size() < 2) throw ParseError(origin, lineno, "state needs a name");
            bool ini = false, fin = false;
            for (size_t i = 2; i < toks.size(); ++i) {
                if (toks[i] == "initial") ini = true;
                else if (toks[i] == "final") fin = true;
                else throw ParseError(origin, lineno, "unknown state attribute '" + toks[i] + "'");
            }
            states.push_back({toks[1], ini, fin, lineno});
        } else if (toks[0] == "trans") {
            if (toks.size() != 4)
                throw ParseError(origin, lineno, "trans needs <src> <symbol> <dst>");
            pending.push_back({toks[1], toks[2], toks[3], lineno});
        } else {
            throw ParseError(origin, lineno, "unknown directive '" + toks[0] + "'");
        }
    }

    Nfa out(alphabet);
    std::unordered_map<std::string, State> by_name;
    for (const auto& s : states) {
        if (by_name.count(s.name)) throw ParseError(origin, s.line, "duplicate state '" + s.name + "'");
        by_name[s.name] = out.add_state(s.name, s.ini, s.fin);
    }
    for (const auto& t : pending) {
        auto src = by_name.find(t.src);
        if (src == by_name.end()) throw ParseError(origin, t.line, "unknown state '" + t.src + "'");
        auto dst = by_name.find(t.dst);
        if (dst == by_name.end()) throw ParseError(origin, t.line, "unknown state '" + t.dst + "'");
        auto sym = out.alphabet().find(t.sym);
        if (!sym) throw ParseError(origin, t.line, "unknown symbol '" + t.sym + "'");
        out.add_transition(src->second, *sym, dst->second);
    }
    return out;
}

Nfa parse_nfa_string(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    return parse_nfa(in, origin);
}

Nfa load_nfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_nfa(in, path);
}

std::string to_text(const Nfa& a) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& t : a.alphabet().tokens()) out << " " << t;
    out << "\n";
    for (State q = 0; q < a.n_states(); ++q) {
        out << "state " << a.state_name(q);
        if (a.initials().test(q)) out << " initial";
        if (a.finals().test(q)) out << " final";
        out << "\n";
    }
    for (const Trans& t : a.transitions())
        out << "trans " << a.state_name(t.src) << " " << a.alphabet().token(t.sym) << " "
            << a.state_name(t.dst) << "\n";
    return out.str();
}

}  // namespace incl
