// Deciders for L(A1) ⊆ L2: word-based Kleene iteration for any consistent
// word quasiorder, the antichain algorithm over ⟨℘(Q2),⊆⟩ and its dual over
// ⟨℘(Q2),⊇⟩, and the quotient-based greatest-fixpoint algorithm.

#ifndef INCL_REGULAR_INCLUSION_HH_
#define INCL_REGULAR_INCLUSION_HH_

#include <functional>
#include <optional>

#include "incl/foundations.hh"
#include "incl/nfa.hh"
#include "incl/symbols.hh"
#include "incl/word_orders.hh"

namespace incl {

/// Raised when an internal consistency bound is violated; callers should
/// treat it as a defect, not as a property of the input.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

struct Verdict {
    bool included = false;
    std::optional<Word> witness;  // only set by witness-producing algorithms
    KleeneStats stats;
};

using WordVector = std::vector<WordSet>;

/// ⟨∪_{q -a-> q'} a·X_q'⟩_q : one left-concatenation step through A1.
WordVector pre_transform(const Nfa& a1, const WordVector& x);
/// ⟨∪_{q' -a-> q} X_q'·a⟩_q : the right-concatenation mirror.
WordVector post_transform(const Nfa& a1, const WordVector& x);

struct WordRunOptions {
    bool prune = true;
    std::optional<uint64_t> cap;           // default: none
    std::vector<WordVector>* trace = nullptr;
    WordVector* out_vector = nullptr;      // the converged iterate
};

/// Among the failing words, the shortlex-least ⩽-minimal one (elements with
/// something strictly below them are skipped; equivalent minima all count).
/// Minimal counterexamples reproduce the worked regressions regardless of
/// set iteration order.
template <typename Leq>
Word pick_minimal_witness(const std::vector<Word>& failing, Leq&& leq) {
    const Word* best = nullptr;
    for (const Word& u : failing) {
        bool minimal = true;
        for (const Word& v : failing) {
            if (leq(v, u) && !leq(u, v)) { minimal = false; break; }
        }
        if (minimal && (!best || shortlex_less(u, *best))) best = &u;
    }
    return *best;
}

/// Word-based inclusion: Kleene-iterate the word-set equations of A1 with
/// abstract convergence ⊑ of the given order, then membership-scan the
/// output components (initial states for left orders, final for right).
/// Order must expose side() and leq(); words range over A1's alphabet ids.
template <typename Order>
Verdict nfa_include_words(const Nfa& a1, const std::function<bool(const Word&)>& l2_member,
                          const Order& qo, const WordRunOptions& opts = {}) {
    const bool left = qo.side() == OrderSide::left;
    const StateSet& base_states = left ? a1.finals() : a1.initials();
    const StateSet& scan_states = left ? a1.initials() : a1.finals();
    auto leq = [&qo](const Word& u, const Word& v) { return qo.leq(u, v); };

    auto f = [&](const WordVector& x) {
        WordVector y = left ? pre_transform(a1, x) : post_transform(a1, x);
        for (size_t q = base_states.find_first(); q != kNoState; q = base_states.find_next(q))
            y[q].insert(Word{});
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
    auto conv = [&](const WordVector& fx, const WordVector& x) {
        for (size_t q = 0; q < fx.size(); ++q)
            if (!sqsubseteq(fx[q].items(), x[q].items(), leq)) return false;
        return true;
    };
    KleeneHooks<WordVector> hooks;
    hooks.frontier = [](const WordVector& v) {
        size_t m = 0;
        for (const auto& c : v) m = std::max(m, c.size());
        return m;
    };
    if (opts.trace) hooks.on_iterate = [&](const WordVector& v) { opts.trace->push_back(v); };

    auto [y, stats] = kleene(conv, f, WordVector(a1.n_states()), opts.cap, hooks);
    if (opts.out_vector) *opts.out_vector = y;

    Verdict out;
    out.stats = stats;
    std::vector<Word> failing;
    for (size_t q = scan_states.find_first(); q != kNoState; q = scan_states.find_next(q))
        for (const Word& u : y[q])
            if (!l2_member(u)) failing.push_back(u);
    if (failing.empty()) {
        out.included = true;
    } else {
        out.included = false;
        out.witness = pick_minimal_witness(failing, leq);
    }
    return out;
}

/// Membership test of L(a2) for words over `universe` ids; tokens missing
/// from a2's alphabet make membership fail.
std::function<bool(const Word&)> make_member_fn(const Nfa& a2, const SymbolTable& universe);

/// Convenience entry: builds the shared alphabet, the requested order over
/// it, and runs the word algorithm on the pair.
Verdict nfa_include_words(const Nfa& a1, const Nfa& a2, OrderKind kind, OrderSide side,
                          const WordRunOptions& opts = {});

// ---- antichain algorithms -------------------------------------------------

struct TaggedSet {
    StateSet set;
    Word tag;  // a generating word: set = pre_tag(F2) (cpre for the dual)
};

/// Antichain of state sets with witness tags, kept minimal either under ⊆
/// (keep_minimal) or under ⊇ (keep_maximal, for the dual algorithm).
class TaggedAntichain {
public:
    enum class Keep { minimal, maximal };

    explicit TaggedAntichain(Keep keep = Keep::minimal) : keep_(keep) {}

    bool dominates(const StateSet& t, const StateSet& s) const {
        return keep_ == Keep::minimal ? t.is_subset_of(s) : s.is_subset_of(t);
    }

    /// Insert; dominated candidates are dropped, dominated incumbents
    /// evicted. On set equality the shortlex-least tag wins.
    bool insert(const StateSet& s, const Word& tag);

    const std::vector<TaggedSet>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    /// this ⊑ other : every element here is dominated by one of other's.
    bool below(const TaggedAntichain& other) const;

private:
    Keep keep_;
    std::vector<TaggedSet> elems_;
};

using AntichainVector = std::vector<TaggedAntichain>;

/// α(X) = ⌊{pre_u(F2) | u ∈ X}⌋, untagged.
std::vector<StateSet> alpha(const Nfa& a2, const WordSet& x);
/// v ∈ γ(S) decided without materializing γ.
bool gamma_member(const Nfa& a2, const std::vector<StateSet>& s, const Word& v);

/// One application of the abstract predecessor: component q collects
/// ⌊{pre_a(S) | q -a-> q', S ∈ X_q'}⌋, tags extended to a·tag.
AntichainVector antichain_pre(const Nfa& a1, const Nfa& a2, const AntichainVector& x);

struct AntichainRunOptions {
    std::optional<uint64_t> cap;
    std::vector<AntichainVector>* trace = nullptr;
    AntichainVector* out_vector = nullptr;
};

Verdict nfa_include_antichain(const Nfa& a1, const Nfa& a2,
                              const AntichainRunOptions& opts = {});
Verdict nfa_include_antichain_dual(const Nfa& a1, const Nfa& a2,
                                   const AntichainRunOptions& opts = {});

// ---- greatest fixpoint -----------------------------------------------------

/// Weakest precondition over A1: component q' is the intersection of a⁻¹X_q
/// over incoming transitions q -a-> q'; the empty intersection is Σ*.
/// All vector components must share A1's alphabet.
std::vector<Nfa> wpre_transform(const Nfa& a1, const std::vector<Nfa>& y);

struct GfpRunOptions {
    std::vector<std::vector<Nfa>>* trace = nullptr;
    std::vector<Nfa>* out_vector = nullptr;
};

/// Downward Kleene iteration of λY. L2^{I1} ∩ wpre(Y) from ⟨Σ*,…⟩ with
/// language-equivalence convergence; true iff ε ∈ Y_q for all q ∈ F1.
/// Not witness-producing.
Verdict nfa_include_gfp(const Nfa& a1, const Nfa& a2, const GfpRunOptions& opts = {});

}  // namespace incl

#endif  // INCL_REGULAR_INCLUSION_HH_
