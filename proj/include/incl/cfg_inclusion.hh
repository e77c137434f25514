// CFG ⊆ regular deciders: word-based iteration with the Myhill or the
// state-context quasiorder, and the relation-antichain algorithm.

#ifndef INCL_CFG_INCLUSION_HH_
#define INCL_CFG_INCLUSION_HH_

#include <unordered_map>

#include "incl/grammar.hh"
#include "incl/nfa.hh"
#include "incl/regular_inclusion.hh"

namespace incl {

enum class CtxKind { state_contexts, myhill };

/// Two-sided word quasiorder keyed by the context relation ctx_A(u) of a
/// fixed automaton: either plain relation inclusion (state contexts) or the
/// Myhill order, decided through a separator-symbol automaton inclusion.
class CtxQuasiorder {
public:
    CtxKind kind() const { return kind_; }
    size_t universe_size() const { return symmap_.size(); }

    bool leq(const Word& u, const Word& v) const;
    const StateRelation& key(const Word& u) const;

private:
    friend CtxQuasiorder ctx_order(const Nfa&, const SymbolTable&);
    friend CtxQuasiorder myhill_order(const Nfa&, const SymbolTable&);

    CtxQuasiorder(CtxKind kind, Nfa a, const SymbolTable& universe);

    Nfa separator_automaton(const StateRelation& r) const;

    CtxKind kind_;
    Nfa a_;
    std::vector<std::optional<Sym>> symmap_;  // universe sym -> a syms
    std::vector<StateRelation> letter_;       // per a-symbol step relations
    mutable std::unordered_map<Word, StateRelation, WordHash> keys_;
    mutable std::unordered_map<std::pair<StateRelation, StateRelation>, bool,
                               boost::hash<std::pair<StateRelation, StateRelation>>>
        myhill_memo_;
};

CtxQuasiorder ctx_order(const Nfa& a, const SymbolTable& universe);
CtxQuasiorder myhill_order(const Nfa& a, const SymbolTable& universe);
inline CtxQuasiorder ctx_order(const Nfa& a) { return ctx_order(a, a.alphabet()); }
inline CtxQuasiorder myhill_order(const Nfa& a) { return myhill_order(a, a.alphabet()); }

using GrammarTrace = std::vector<GrammarWordVector>;

struct CfgWordRunOptions {
    bool prune = true;
    std::optional<uint64_t> cap;
    GrammarTrace* trace = nullptr;
    GrammarWordVector* out_vector = nullptr;
};

/// Kleene-iterate the grammar equations with abstract convergence ⊑ of the
/// given order; the start component is then membership-scanned.
Verdict cfg_include_words(const CnfGrammar& g, const std::function<bool(const Word&)>& l2_member,
                          const CtxQuasiorder& qo, const CfgWordRunOptions& opts = {});

/// Convenience entry over an automaton target: shared alphabet, order over
/// it, membership through it.
Verdict cfg_include_words(const CnfGrammar& g, const Nfa& a, CtxKind kind,
                          const CfgWordRunOptions& opts = {});

// ---- relation antichains ----------------------------------------------------

struct TaggedRelation {
    StateRelation rel;
    Word tag;
};

/// Antichain of context relations with witness tags, minimal under ⊆.
class RelationAntichain {
public:
    bool insert(const StateRelation& r, const Word& tag);
    bool below(const RelationAntichain& other) const;

    const std::vector<TaggedRelation>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<TaggedRelation> elems_;
};

using RelationAntichainVector = std::vector<RelationAntichain>;

/// Component i collects ⌊{X_j ∘ X_k | X_i → X_j X_k}⌋; witness tags
/// concatenate.
RelationAntichainVector fn_g_abstract(const CnfGrammar& g, const Nfa& a,
                                      const RelationAntichainVector& x);

struct CfgAntichainRunOptions {
    std::optional<uint64_t> cap;
    std::vector<RelationAntichainVector>* trace = nullptr;
    RelationAntichainVector* out_vector = nullptr;
};

/// Relation-antichain decider; false iff some relation in the start
/// component misses I×F, with that element's tag as witness.
Verdict cfg_include_antichain(const CnfGrammar& g, const Nfa& a,
                              const CfgAntichainRunOptions& opts = {});

}  // namespace incl

#endif  // INCL_CFG_INCLUSION_HH_
