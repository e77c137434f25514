#include "incl/cfg_inclusion.hh"

#include <algorithm>

namespace incl {

namespace {

std::vector<std::optional<Sym>> build_symmap(const SymbolTable& from, const SymbolTable& to) {
    std::vector<std::optional<Sym>> map(from.size());
    for (Sym s = 0; s < from.size(); ++s) map[s] = to.find(from.token(s));
    return map;
}

SymbolTable merged_universe(const SymbolTable& a, const SymbolTable& b) {
    SymbolTable u(a.tokens());
    for (const auto& t : b.tokens()) u.intern(t);
    return u;
}

}  // namespace

CtxQuasiorder::CtxQuasiorder(CtxKind kind, Nfa a, const SymbolTable& universe)
    : kind_(kind), a_(std::move(a)), symmap_(build_symmap(universe, a_.alphabet())) {
    letter_.reserve(a_.n_syms());
    for (Sym s = 0; s < a_.n_syms(); ++s) letter_.push_back(letter_relation(a_, s));
}

const StateRelation& CtxQuasiorder::key(const Word& u) const {
    auto it = keys_.find(u);
    if (it != keys_.end()) return it->second;
    StateRelation r;
    if (u.empty()) {
        r = StateRelation::identity(a_.n_states());
    } else {
        Sym raw = u.back();
        if (raw >= symmap_.size())
            throw std::invalid_argument("word symbol #" + std::to_string(raw) +
                                        " outside the order's universe");
        Word rest(u.begin(), u.end() - 1);
        const StateRelation& kr = key(rest);
        r = symmap_[raw] ? compose(kr, letter_[*symmap_[raw]])
                         : StateRelation::empty(a_.n_states());
    }
    return keys_.emplace(u, std::move(r)).first->second;
}

Nfa CtxQuasiorder::separator_automaton(const StateRelation& r) const {
    // Accepts x#y iff x leads I to some q, (q,q') ∈ r, and y leads q' to F;
    // equivalently x w y ∈ L(A) whenever r = ctx_A(w).
    std::string sep = "#";
    while (a_.alphabet().find(sep)) sep += "#";
    SymbolTable alpha(a_.alphabet().tokens());
    Sym hash = alpha.intern(sep);

    Nfa b(alpha);
    const size_t n = a_.n_states();
    for (size_t q = 0; q < n; ++q)
        b.add_state(a_.state_name(static_cast<State>(q)) + ".pre", a_.initials().test(q), false);
    for (size_t q = 0; q < n; ++q)
        b.add_state(a_.state_name(static_cast<State>(q)) + ".post", false, a_.finals().test(q));
    for (const Trans& t : a_.transitions()) {
        b.add_transition(t.src, t.sym, t.dst);
        b.add_transition(static_cast<State>(n + t.src), t.sym, static_cast<State>(n + t.dst));
    }
    for (size_t p = 0; p < n; ++p)
        for (size_t q = r.rows[p].find_first(); q != kNoState; q = r.rows[p].find_next(q))
            b.add_transition(static_cast<State>(p), hash, static_cast<State>(n + q));
    return b;
}

bool CtxQuasiorder::leq(const Word& u, const Word& v) const {
    const StateRelation& ku = key(u);
    const StateRelation& kv = key(v);
    if (kind_ == CtxKind::state_contexts) return ku.subset_of(kv);
    auto it = myhill_memo_.find({ku, kv});
    if (it != myhill_memo_.end()) return it->second;
    bool r = nfa_include_antichain(separator_automaton(ku), separator_automaton(kv)).included;
    myhill_memo_.emplace(std::make_pair(ku, kv), r);
    return r;
}

CtxQuasiorder ctx_order(const Nfa& a, const SymbolTable& universe) {
    return CtxQuasiorder(CtxKind::state_contexts, a, universe);
}

CtxQuasiorder myhill_order(const Nfa& a, const SymbolTable& universe) {
    return CtxQuasiorder(CtxKind::myhill, a, universe);
}

// ---- word-based decider -------------------------------------------------------

Verdict cfg_include_words(const CnfGrammar& g, const std::function<bool(const Word&)>& l2_member,
                          const CtxQuasiorder& qo, const CfgWordRunOptions& opts) {
    auto leq = [&qo](const Word& u, const Word& v) { return qo.leq(u, v); };
    GrammarWordVector base = base_vector(g);

    auto f = [&](const GrammarWordVector& x) {
        GrammarWordVector y = fn_g(g, x);
        for (size_t i = 0; i < base.size(); ++i)
            for (const Word& w : base[i]) y[i].insert(w);
        if (opts.prune) {
            for (auto& comp : y) {
                std::vector<Word> kept = minor(comp.items(), leq);
                WordSet pruned;
                for (auto& w : kept) pruned.insert(w);
                comp = std::move(pruned);
            }
        }
        return y;
    };
    auto conv = [&](const GrammarWordVector& fx, const GrammarWordVector& x) {
        for (size_t i = 0; i < fx.size(); ++i)
            if (!sqsubseteq(fx[i].items(), x[i].items(), leq)) return false;
        return true;
    };
    KleeneHooks<GrammarWordVector> hooks;
    hooks.frontier = [](const GrammarWordVector& v) {
        size_t m = 0;
        for (const auto& c : v) m = std::max(m, c.size());
        return m;
    };
    if (opts.trace) hooks.on_iterate = [&](const GrammarWordVector& v) { opts.trace->push_back(v); };

    auto [y, stats] = kleene(conv, f, GrammarWordVector(g.n_vars()), opts.cap, hooks);
    if (opts.out_vector) *opts.out_vector = y;

    Verdict out;
    out.stats = stats;
    std::vector<Word> failing;
    for (const Word& u : y[0])
        if (!l2_member(u)) failing.push_back(u);
    if (failing.empty()) {
        out.included = true;
    } else {
        out.included = false;
        out.witness = pick_minimal_witness(failing, leq);
    }
    return out;
}

Verdict cfg_include_words(const CnfGrammar& g, const Nfa& a, CtxKind kind,
                          const CfgWordRunOptions& opts) {
    SymbolTable universe = merged_universe(g.terminals, a.alphabet());
    CtxQuasiorder qo = kind == CtxKind::state_contexts ? ctx_order(a, universe)
                                                       : myhill_order(a, universe);
    return cfg_include_words(g, make_member_fn(a, universe), qo, opts);
}

// ---- relation antichains --------------------------------------------------------

bool RelationAntichain::insert(const StateRelation& r, const Word& tag) {
    for (TaggedRelation& e : elems_) {
        if (e.rel.subset_of(r)) {
            if (e.rel == r && shortlex_less(tag, e.tag)) e.tag = tag;
            return false;
        }
    }
    std::erase_if(elems_, [&](const TaggedRelation& e) { return r.subset_of(e.rel); });
    elems_.push_back({r, tag});
    return true;
}

bool RelationAntichain::below(const RelationAntichain& other) const {
    for (const TaggedRelation& e : elems_) {
        bool dominated = false;
        for (const TaggedRelation& t : other.elems_) {
            if (t.rel.subset_of(e.rel)) { dominated = true; break; }
        }
        if (!dominated) return false;
    }
    return true;
}

namespace {

RelationAntichainVector fn_g_abstract_impl(const CnfGrammar& g, const RelationAntichainVector& x) {
    RelationAntichainVector out(g.n_vars());
    for (const CnfBinary& b : g.binaries) {
        for (const TaggedRelation& l : x[b.left]) {
            for (const TaggedRelation& r : x[b.right]) {
                Word tag = l.tag;
                tag.insert(tag.end(), r.tag.begin(), r.tag.end());
                out[b.lhs].insert(compose(l.rel, r.rel), tag);
            }
        }
    }
    return out;
}

/// α(b⃗): per-variable minors of the context relations of the base words,
/// with ctx(ε) the identity relation.
RelationAntichainVector alpha_base(const CnfGrammar& g, const CtxQuasiorder& qo) {
    RelationAntichainVector out(g.n_vars());
    GrammarWordVector base = base_vector(g);
    for (size_t i = 0; i < base.size(); ++i)
        for (const Word& w : base[i]) out[i].insert(qo.key(w), w);
    return out;
}

}  // namespace

RelationAntichainVector fn_g_abstract(const CnfGrammar& g, const Nfa& a,
                                      const RelationAntichainVector& x) {
    (void)a;
    return fn_g_abstract_impl(g, x);
}

Verdict cfg_include_antichain(const CnfGrammar& g, const Nfa& a,
                              const CfgAntichainRunOptions& opts) {
    SymbolTable universe = merged_universe(g.terminals, a.alphabet());
    CtxQuasiorder qo = ctx_order(a, universe);  // supplies memoized ctx keys
    RelationAntichainVector base = alpha_base(g, qo);

    auto f = [&](const RelationAntichainVector& x) {
        RelationAntichainVector y = fn_g_abstract_impl(g, x);
        for (size_t i = 0; i < base.size(); ++i)
            for (const TaggedRelation& e : base[i]) y[i].insert(e.rel, e.tag);
        return y;
    };
    auto conv = [](const RelationAntichainVector& fx, const RelationAntichainVector& x) {
        for (size_t i = 0; i < fx.size(); ++i)
            if (!fx[i].below(x[i])) return false;
        return true;
    };
    KleeneHooks<RelationAntichainVector> hooks;
    hooks.frontier = [](const RelationAntichainVector& v) {
        size_t m = 0;
        for (const auto& c : v) m = std::max(m, c.size());
        return m;
    };
    if (opts.trace)
        hooks.on_iterate = [&](const RelationAntichainVector& v) { opts.trace->push_back(v); };

    auto [y, stats] = kleene(conv, f, RelationAntichainVector(g.n_vars()), opts.cap, hooks);
    if (opts.out_vector) *opts.out_vector = y;

    Verdict out;
    out.stats = stats;
    out.included = true;
    std::optional<Word> witness;
    for (const TaggedRelation& e : y[0]) {
        if (!e.rel.intersects(a.initials(), a.finals())) {
            out.included = false;
            if (!witness || shortlex_less(e.tag, *witness)) witness = e.tag;
        }
    }
    if (!out.included) out.witness = witness;
    return out;
}

}  // namespace incl
