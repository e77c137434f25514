// Nondeterministic finite automata over token alphabets: word/state
// transformers, reverse, product, subset construction, quotients, and the
// maximal simulation preorder.

#ifndef INCL_NFA_HH_
#define INCL_NFA_HH_

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "incl/symbols.hh"

namespace incl {

using State = uint32_t;
using StateSet = boost::dynamic_bitset<uint64_t>;

constexpr size_t kNoState = StateSet::npos;

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& origin, size_t line, const std::string& what)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

struct Trans {
    State src;
    Sym sym;
    State dst;
    bool operator==(const Trans&) const = default;
};

/// Subset of Q x Q of a fixed automaton, stored row-wise as bitsets.
struct StateRelation {
    std::vector<StateSet> rows;

    static StateRelation empty(size_t n);
    static StateRelation identity(size_t n);
    static StateRelation full(size_t n);

    size_t size() const { return rows.size(); }
    bool contains(State p, State q) const { return rows[p].test(q); }
    void set(State p, State q) { rows[p].set(q); }
    void reset(State p, State q) { rows[p].reset(q); }
    bool subset_of(const StateRelation& other) const;
    /// R ∩ (A×B) ≠ ∅
    bool intersects(const StateSet& a, const StateSet& b) const;
    size_t count() const;
    bool operator==(const StateRelation&) const = default;
};

size_t hash_value(const StateRelation& r);
StateRelation compose(const StateRelation& r, const StateRelation& s);

class Nfa {
public:
    Nfa() = default;
    explicit Nfa(SymbolTable alphabet) : alphabet_(std::move(alphabet)) {}

    State add_state(const std::string& name, bool is_initial, bool is_final);
    void add_transition(State src, Sym sym, State dst);

    const SymbolTable& alphabet() const { return alphabet_; }
    size_t n_states() const { return names_.size(); }
    size_t n_syms() const { return alphabet_.size(); }
    const std::string& state_name(State q) const { return names_.at(q); }
    const std::vector<std::string>& state_names() const { return names_; }
    std::optional<State> find_state(const std::string& name) const;

    const StateSet& initials() const { return initials_; }
    const StateSet& finals() const { return finals_; }
    void set_initials(StateSet s);
    void set_finals(StateSet s);

    const std::vector<Trans>& transitions() const { return trans_; }

    /// δ(q, a)
    const StateSet& targets(State q, Sym a) const;
    /// {p | q ∈ δ(p, a)}
    const StateSet& sources(State q, Sym a) const;

    StateSet empty_set() const { return StateSet(n_states()); }
    StateSet make_set(std::initializer_list<State> qs) const;

    bool operator==(const Nfa& other) const;

private:
    void ensure_index() const;

    SymbolTable alphabet_;
    std::vector<std::string> names_;
    StateSet initials_, finals_;
    std::vector<Trans> trans_;

    mutable bool index_built_ = false;
    mutable std::vector<std::vector<StateSet>> fwd_;  // [sym][src] -> targets
    mutable std::vector<std::vector<StateSet>> bwd_;  // [sym][dst] -> sources
};

// ---- word/state transformers -------------------------------------------

StateSet pre_step(const Nfa& a, Sym s, const StateSet& x);
StateSet post_step(const Nfa& a, Sym s, const StateSet& x);
StateSet pre_word(const Nfa& a, const Word& u, StateSet x);
StateSet post_word(const Nfa& a, const Word& u, StateSet x);
bool member(const Nfa& a, const Word& u);
/// Membership of a token word; unknown tokens make it fail (not error).
bool member_tokens(const Nfa& a, const std::vector<std::string>& tokens);

StateRelation letter_relation(const Nfa& a, Sym s);
StateRelation ctx(const Nfa& a, const Word& u);

/// Greatest simulation preorder: largest relation where related states match
/// finals and every move of the smaller is answered by the larger.
StateRelation max_simulation(const Nfa& a);

/// X ≤^{∀∃} Y : every x in X is related below some y in Y.
bool forall_exists_leq(const StateSet& x, const StateSet& y, const StateRelation& rel);

// ---- constructions -------------------------------------------------------

Nfa reverse(const Nfa& a);
/// Same automaton with I replaced by post_step(a, s, I); accepts s⁻¹L(a).
Nfa quotient_left(const Nfa& a, Sym s);
Nfa product(const Nfa& a, const Nfa& b);
/// Accessible subset construction; no sink added unless reached.
Nfa determinize(const Nfa& a);
/// Complement of a deterministic automaton; completes it with a sink first.
/// Nondeterministic input is an error.
Nfa complement_dfa(const Nfa& d);
/// Restrict to states both reachable from I and co-reachable to F.
Nfa trim(const Nfa& a);
Nfa universal_nfa(const SymbolTable& alphabet);
/// Same language, alphabet widened to `universe` (must contain every token).
Nfa re_alphabet(const Nfa& a, const SymbolTable& universe);
Nfa with_initials(const Nfa& a, StateSet initials);
Nfa with_finals(const Nfa& a, StateSet finals);

// ---- text format ---------------------------------------------------------
//
//   # comment
//   alphabet <tok> <tok> ...
//   state <name> [initial] [final]
//   trans <src> <symbol> <dst>

Nfa parse_nfa(std::istream& in, const std::string& origin = "<nfa>");
Nfa parse_nfa_string(const std::string& text, const std::string& origin = "<nfa>");
Nfa load_nfa(const std::string& path);
std::string to_text(const Nfa& a);

/// Iterate the members of a state set.
std::vector<State> set_members(const StateSet& s);

}  // namespace incl

#endif  // INCL_NFA_HH_
