// Word quasiorders consistent with a regular language: Nerode, state-based
// and simulation-based, on either side. Each instance memoizes the per-word
// pre/post state sets that drive its decision procedure.

#ifndef INCL_WORD_ORDERS_HH_
#define INCL_WORD_ORDERS_HH_

#include <unordered_map>
#include <utility>

#include "incl/nfa.hh"
#include "incl/symbols.hh"

namespace incl {

enum class OrderSide { left, right };
enum class OrderKind { state_based, simulation, nerode };

/// A decidable quasiorder on words, packaged with the side on which it is
/// consistent with its language. Words range over a fixed universe alphabet
/// (the target automaton's own alphabet unless widened at construction);
/// universe symbols missing from the target behave as dead letters.
///
/// Instances memoize per-word keys and are meant to live for one decision
/// run; clone per thread instead of sharing.
class WordQuasiorder {
public:
    OrderSide side() const { return side_; }
    OrderKind kind() const { return kind_; }
    size_t universe_size() const { return symmap_.size(); }

    bool leq(const Word& u, const Word& v) const;

    /// pre_u(F) for left orders, post_u(I) for right orders; memoized so that
    /// extending a known word by one letter costs a single step.
    const StateSet& key(const Word& u) const;

private:
    friend WordQuasiorder state_left(const Nfa&, const SymbolTable&);
    friend WordQuasiorder state_right(const Nfa&, const SymbolTable&);
    friend WordQuasiorder sim_left(const Nfa&, const SymbolTable&);
    friend WordQuasiorder sim_right(const Nfa&, const SymbolTable&);
    friend WordQuasiorder nerode_left(const Nfa&, const SymbolTable&);
    friend WordQuasiorder nerode_right(const Nfa&, const SymbolTable&);

    WordQuasiorder(OrderSide side, OrderKind kind, Nfa a2, const SymbolTable& universe);

    bool nerode_leq(const StateSet& ku, const StateSet& kv) const;

    OrderSide side_;
    OrderKind kind_;
    Nfa a2_;
    std::vector<std::optional<Sym>> symmap_;  // universe sym -> a2 sym
    StateSet base_;                           // F (left) or I (right)
    StateRelation simrel_;                    // simulation kinds only
    mutable std::unordered_map<Word, StateSet, WordHash> keys_;
    mutable std::unordered_map<std::pair<StateSet, StateSet>, bool,
                               boost::hash<std::pair<StateSet, StateSet>>>
        nerode_memo_;
};

// u ≤ v  ⟺  pre_u(F) ⊆ pre_v(F)          (resp. post over I, mirrored)
WordQuasiorder state_left(const Nfa& a2, const SymbolTable& universe);
WordQuasiorder state_right(const Nfa& a2, const SymbolTable& universe);
// u ≤ v  ⟺  pre_u(F) ≼^{∀∃} pre_v(F) w.r.t. the greatest simulation of the
// reverse automaton (left) or of the automaton itself (right)
WordQuasiorder sim_left(const Nfa& a2, const SymbolTable& universe);
WordQuasiorder sim_right(const Nfa& a2, const SymbolTable& universe);
// u ≤ v  ⟺  L u⁻¹ ⊆ L v⁻¹ (left) / u⁻¹L ⊆ v⁻¹L (right), decided as an NFA
// inclusion between re-final/re-initial copies of the target automaton
WordQuasiorder nerode_left(const Nfa& a2, const SymbolTable& universe);
WordQuasiorder nerode_right(const Nfa& a2, const SymbolTable& universe);

inline WordQuasiorder state_left(const Nfa& a2) { return state_left(a2, a2.alphabet()); }
inline WordQuasiorder state_right(const Nfa& a2) { return state_right(a2, a2.alphabet()); }
inline WordQuasiorder sim_left(const Nfa& a2) { return sim_left(a2, a2.alphabet()); }
inline WordQuasiorder sim_right(const Nfa& a2) { return sim_right(a2, a2.alphabet()); }
inline WordQuasiorder nerode_left(const Nfa& a2) { return nerode_left(a2, a2.alphabet()); }
inline WordQuasiorder nerode_right(const Nfa& a2) { return nerode_right(a2, a2.alphabet()); }

/// True iff q1 refines q2 on all sampled pairs: q1.leq(u,v) implies q2.leq(u,v).
bool refines(const WordQuasiorder& q1, const WordQuasiorder& q2,
             const std::vector<Word>& samples);

}  // namespace incl

#endif  // INCL_WORD_ORDERS_HH_
