// One-counter nets: macro-state semantics over max reachable counters, the
// induced right trace-consistent word quasiorder, and NFA ⊆ trace-set
// decision through the word-based algorithm.

#ifndef INCL_OCN_HH_
#define INCL_OCN_HH_

#include <unordered_map>

#include "incl/nfa.hh"
#include "incl/regular_inclusion.hh"
#include "incl/symbols.hh"

namespace incl {

struct OcnTrans {
    State src;
    Sym sym;
    int delta;  // in {-1, 0, +1}
    State dst;
};

class Ocn {
public:
    Ocn() = default;
    explicit Ocn(SymbolTable alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(const std::string& name);
    void add_transition(State src, Sym sym, int delta, State dst);

    const SymbolTable& alphabet() const { return alphabet_; }
    size_t n_states() const { return names_.size(); }
    size_t n_syms() const { return alphabet_.size(); }
    const std::string& state_name(State q) const { return names_.at(q); }
    std::optional<State> find_state(const std::string& name) const;
    const std::vector<OcnTrans>& transitions() const { return trans_; }
    /// Transitions labelled by a given symbol.
    const std::vector<OcnTrans>& by_symbol(Sym s) const;

private:
    SymbolTable alphabet_;
    std::vector<std::string> names_;
    std::vector<OcnTrans> trans_;
    mutable bool index_built_ = false;
    mutable std::vector<std::vector<OcnTrans>> by_sym_;
};

struct Config {
    State state;
    int64_t counter;  // ≥ 0
};

/// Per-state maximum counter value reachable by one word, ⊥ where the state
/// is unreachable. Finite summary of the configuration set after a word.
class MacroState {
public:
    static constexpr int64_t kBot = -1;

    explicit MacroState(size_t n) : v_(n, kBot) {}

    int64_t get(State q) const { return v_[q]; }
    void raise_to(State q, int64_t n) { if (n > v_[q]) v_[q] = n; }
    size_t size() const { return v_.size(); }
    bool any_reachable() const;
    /// Pointwise order with ⊥ below every value.
    bool leq(const MacroState& other) const;
    bool operator==(const MacroState&) const = default;

private:
    std::vector<int64_t> v_;
};

MacroState macro_init(const Ocn& o, Config c);
MacroState macro_step(const Ocn& o, const MacroState& m, Sym s);
bool trace_member(const Ocn& o, Config c, const Word& u);

/// Right trace-consistent quasiorder: pointwise comparison of memoized
/// macro states.
class OcnOrder {
public:
    OrderSide side() const { return OrderSide::right; }
    bool leq(const Word& u, const Word& v) const;
    const MacroState& key(const Word& u) const;

private:
    friend OcnOrder ocn_order(const Ocn&, Config, const SymbolTable&);
    OcnOrder(Ocn o, Config c, const SymbolTable& universe);

    Ocn o_;
    Config c_;
    std::vector<std::optional<Sym>> symmap_;
    mutable std::unordered_map<Word, MacroState, WordHash> keys_;
};

OcnOrder ocn_order(const Ocn& o, Config c, const SymbolTable& universe);
inline OcnOrder ocn_order(const Ocn& o, Config c) { return ocn_order(o, c, o.alphabet()); }

/// L(A) ⊆ T(c): the right word-based algorithm with trace membership.
Verdict nfa_include_ocn_traces(const Nfa& a, const Ocn& o, Config c,
                               const WordRunOptions& opts = {});

// Text format:
//   state <name>
//   trans <src> <symbol> <delta> <dst>     delta in {-1, 0, +1}
Ocn parse_ocn(std::istream& in, const std::string& origin = "<ocn>");
Ocn parse_ocn_string(const std::string& text, const std::string& origin = "<ocn>");
Ocn load_ocn(const std::string& path);

/// "<state>:<nat>" as passed on the command line.
Config parse_config(const Ocn& o, const std::string& text);

}  // namespace incl

#endif  // INCL_OCN_HH_
