#include "incl/regular_inclusion.hh"

#include <algorithm>

namespace incl {

namespace {

std::vector<std::optional<Sym>> build_symmap(const SymbolTable& from, const SymbolTable& to) {
    std::vector<std::optional<Sym>> map(from.size());
    for (Sym s = 0; s < from.size(); ++s) map[s] = to.find(from.token(s));
    return map;
}

SymbolTable merged_universe(const Nfa& a1, const Nfa& a2) {
    SymbolTable u(a1.alphabet().tokens());
    for (const auto& t : a2.alphabet().tokens()) u.intern(t);
    return u;
}

Word extend_front(Sym a, const Word& w) {
    Word out;
    out.reserve(w.size() + 1);
    out.push_back(a);
    out.insert(out.end(), w.begin(), w.end());
    return out;
}

Word extend_back(const Word& w, Sym a) {
    Word out = w;
    out.push_back(a);
    return out;
}

}  // namespace

WordVector pre_transform(const Nfa& a1, const WordVector& x) {
    WordVector out(a1.n_states());
    for (const Trans& t : a1.transitions())
        for (const Word& w : x[t.dst]) out[t.src].insert(extend_front(t.sym, w));
    return out;
}

WordVector post_transform(const Nfa& a1, const WordVector& x) {
    WordVector out(a1.n_states());
    for (const Trans& t : a1.transitions())
        for (const Word& w : x[t.src]) out[t.dst].insert(extend_back(w, t.sym));
    return out;
}

std::function<bool(const Word&)> make_member_fn(const Nfa& a2, const SymbolTable& universe) {
    auto map = build_symmap(universe, a2.alphabet());
    const Nfa* target = &a2;
    return [map, target](const Word& w) {
        Word mapped;
        mapped.reserve(w.size());
        for (Sym s : w) {
            if (s >= map.size() || !map[s]) return false;
            mapped.push_back(*map[s]);
        }
        return member(*target, mapped);
    };
}

Verdict nfa_include_words(const Nfa& a1, const Nfa& a2, OrderKind kind, OrderSide side,
                          const WordRunOptions& opts) {
    SymbolTable universe = merged_universe(a1, a2);
    Nfa a1u = re_alphabet(a1, universe);
    WordQuasiorder qo = [&] {
        switch (kind) {
            case OrderKind::state_based:
                return side == OrderSide::left ? state_left(a2, universe) : state_right(a2, universe);
            case OrderKind::simulation:
                return side == OrderSide::left ? sim_left(a2, universe) : sim_right(a2, universe);
            default:
                return side == OrderSide::left ? nerode_left(a2, universe) : nerode_right(a2, universe);
        }
    }();
    return nfa_include_words(a1u, make_member_fn(a2, universe), qo, opts);
}

// ---- antichain --------------------------------------------------------------

bool TaggedAntichain::insert(const StateSet& s, const Word& tag) {
    for (TaggedSet& e : elems_) {
        if (dominates(e.set, s)) {
            if (e.set == s && shortlex_less(tag, e.tag)) e.tag = tag;
            return false;
        }
    }
    std::erase_if(elems_, [&](const TaggedSet& e) { return dominates(s, e.set); });
    elems_.push_back({s, tag});
    return true;
}

bool TaggedAntichain::below(const TaggedAntichain& other) const {
    for (const TaggedSet& e : elems_) {
        bool dominated = false;
        for (const TaggedSet& t : other.elems_) {
            if (dominates(t.set, e.set)) { dominated = true; break; }
        }
        if (!dominated) return false;
    }
    return true;
}

std::vector<StateSet> alpha(const Nfa& a2, const WordSet& x) {
    std::vector<StateSet> pres;
    pres.reserve(x.size());
    for (const Word& u : x) pres.push_back(pre_word(a2, u, a2.finals()));
    return minor(pres, [](const StateSet& a, const StateSet& b) { return a.is_subset_of(b); });
}

bool gamma_member(const Nfa& a2, const std::vector<StateSet>& s, const Word& v) {
    StateSet pre = pre_word(a2, v, a2.finals());
    for (const StateSet& y : s)
        if (y.is_subset_of(pre)) return true;
    return false;
}

namespace {

struct PairContext {
    std::vector<std::optional<Sym>> symmap;  // a1 syms -> a2 syms
    StateSet f2, i2, f2c;
    size_t n2;
};

PairContext make_context(const Nfa& a1, const Nfa& a2) {
    PairContext ctx;
    ctx.symmap = build_symmap(a1.alphabet(), a2.alphabet());
    ctx.f2 = a2.finals();
    ctx.i2 = a2.initials();
    ctx.f2c = ~a2.finals();
    ctx.n2 = a2.n_states();
    return ctx;
}

AntichainVector antichain_step(const Nfa& a1, const Nfa& a2, const PairContext& ctx,
                               const AntichainVector& x, bool dual) {
    auto keep = dual ? TaggedAntichain::Keep::maximal : TaggedAntichain::Keep::minimal;
    AntichainVector out(a1.n_states(), TaggedAntichain(keep));
    for (const Trans& t : a1.transitions()) {
        for (const TaggedSet& e : x[t.dst]) {
            StateSet next;
            if (ctx.symmap[t.sym]) {
                if (dual) {
                    // cpre_a(S) = (pre_a(S^c))^c
                    next = ~pre_step(a2, *ctx.symmap[t.sym], ~e.set);
                } else {
                    next = pre_step(a2, *ctx.symmap[t.sym], e.set);
                }
            } else {
                // dead letter: pre is empty, so cpre is the full set
                next = StateSet(ctx.n2);
                if (dual) next.set();
            }
            out[t.src].insert(next, extend_front(t.sym, e.tag));
        }
    }
    return out;
}

Verdict antichain_run(const Nfa& a1, const Nfa& a2, bool dual, const AntichainRunOptions& opts) {
    PairContext ctx = make_context(a1, a2);
    auto keep = dual ? TaggedAntichain::Keep::maximal : TaggedAntichain::Keep::minimal;
    const StateSet& base = dual ? ctx.f2c : ctx.f2;

    auto f = [&](const AntichainVector& x) {
        AntichainVector y = antichain_step(a1, a2, ctx, x, dual);
        for (size_t q = a1.finals().find_first(); q != kNoState; q = a1.finals().find_next(q))
            y[q].insert(base, Word{});
        return y;
    };
    auto conv = [](const AntichainVector& fx, const AntichainVector& x) {
        for (size_t q = 0; q < fx.size(); ++q)
            if (!fx[q].below(x[q])) return false;
        return true;
    };
    KleeneHooks<AntichainVector> hooks;
    hooks.frontier = [](const AntichainVector& v) {
        size_t m = 0;
        for (const auto& c : v) m = std::max(m, c.size());
        return m;
    };
    if (opts.trace) hooks.on_iterate = [&](const AntichainVector& v) { opts.trace->push_back(v); };

    auto [y, stats] =
        kleene(conv, f, AntichainVector(a1.n_states(), TaggedAntichain(keep)), opts.cap, hooks);
    if (opts.out_vector) *opts.out_vector = y;

    Verdict out;
    out.stats = stats;
    out.included = true;
    std::optional<Word> witness;
    for (size_t q = a1.initials().find_first(); q != kNoState; q = a1.initials().find_next(q)) {
        for (const TaggedSet& e : y[q]) {
            bool violates = dual ? ctx.i2.is_subset_of(e.set) : !e.set.intersects(ctx.i2);
            if (violates) {
                out.included = false;
                if (!witness || shortlex_less(e.tag, *witness)) witness = e.tag;
            }
        }
    }
    if (!out.included) out.witness = witness;
    return out;
}

}  // namespace

AntichainVector antichain_pre(const Nfa& a1, const Nfa& a2, const AntichainVector& x) {
    return antichain_step(a1, a2, make_context(a1, a2), x, false);
}

Verdict nfa_include_antichain(const Nfa& a1, const Nfa& a2, const AntichainRunOptions& opts) {
    return antichain_run(a1, a2, false, opts);
}

Verdict nfa_include_antichain_dual(const Nfa& a1, const Nfa& a2,
                                   const AntichainRunOptions& opts) {
    return antichain_run(a1, a2, true, opts);
}

// ---- greatest fixpoint -------------------------------------------------------

std::vector<Nfa> wpre_transform(const Nfa& a1, const std::vector<Nfa>& y) {
    std::vector<Nfa> out;
    out.reserve(a1.n_states());
    for (State q = 0; q < a1.n_states(); ++q) {
        // dedup incoming (source, symbol) pairs
        std::vector<std::pair<State, Sym>> in;
        for (const Trans& t : a1.transitions())
            if (t.dst == q && std::find(in.begin(), in.end(), std::make_pair(t.src, t.sym)) == in.end())
                in.emplace_back(t.src, t.sym);
        if (in.empty()) {
            out.push_back(universal_nfa(a1.alphabet()));
            continue;
        }
        Nfa acc = quotient_left(y[in[0].first], in[0].second);
        for (size_t i = 1; i < in.size(); ++i)
            acc = trim(product(acc, quotient_left(y[in[i].first], in[i].second)));
        out.push_back(trim(acc));
    }
    return out;
}

Verdict nfa_include_gfp(const Nfa& a1_in, const Nfa& a2_in, const GfpRunOptions& opts) {
    SymbolTable universe = merged_universe(a1_in, a2_in);
    Nfa a1 = re_alphabet(a1_in, universe);
    // A deterministic representation keeps the iterated quotient/product
    // components small; the iterates stay plain Nfa values throughout.
    Nfa l2 = trim(determinize(re_alphabet(a2_in, universe)));

    auto lang_equal = [](const Nfa& x, const Nfa& y) {
        return nfa_include_antichain(x, y).included && nfa_include_antichain(y, x).included;
    };
    auto f = [&](const std::vector<Nfa>& ys) {
        std::vector<Nfa> next = wpre_transform(a1, ys);
        for (size_t q = a1.initials().find_first(); q != kNoState; q = a1.initials().find_next(q))
            next[q] = trim(product(l2, next[q]));
        return next;
    };
    auto conv = [&](const std::vector<Nfa>& fx, const std::vector<Nfa>& x) {
        for (size_t q = 0; q < fx.size(); ++q)
            if (!lang_equal(fx[q], x[q])) return false;
        return true;
    };

    // Per-component descending chains have at most 2^{|Q2|} elements, and a
    // strict step shrinks at least one component.
    std::optional<uint64_t> cap;
    if (a2_in.n_states() < 58) {
        uint64_t chain = (uint64_t{1} << a2_in.n_states()) - 1;
        cap = uint64_t{a1.n_states()} * chain + 1;
    }

    KleeneHooks<std::vector<Nfa>> hooks;
    hooks.frontier = [](const std::vector<Nfa>& v) {
        size_t m = 0;
        for (const auto& c : v) m = std::max(m, c.n_states());
        return m;
    };
    if (opts.trace) hooks.on_iterate = [&](const std::vector<Nfa>& v) { opts.trace->push_back(v); };

    std::vector<Nfa> top(a1.n_states(), universal_nfa(universe));
    Verdict out;
    try {
        auto [y, stats] = kleene(conv, f, std::move(top), cap, hooks);
        if (opts.out_vector) *opts.out_vector = y;
        out.stats = stats;
        out.included = true;
        for (size_t q = a1.finals().find_first(); q != kNoState; q = a1.finals().find_next(q)) {
            if (!member(y[q], Word{})) { out.included = false; break; }
        }
    } catch (const KleeneCapExceeded& e) {
        throw InternalError(
            "gfp iteration bound exceeded; the language-equivalence check is defective: " +
            std::string(e.what()));
    }
    return out;
}

}  // namespace incl
