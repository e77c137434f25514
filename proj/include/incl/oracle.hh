// Independent brute-force reference deciders for differential testing.
// Deliberately naive; shares the parsers and basic automaton constructions
// with the main library but none of the antichain machinery.

#ifndef INCL_ORACLE_HH_
#define INCL_ORACLE_HH_

#include <functional>
#include <optional>

#include "incl/grammar.hh"
#include "incl/nfa.hh"
#include "incl/symbols.hh"

namespace incl {

struct OracleResult {
    bool included;
    /// Shortest word in L(A1) ∖ L(A2), lexicographic-least by symbol token
    /// order among the shortest.
    std::optional<Word> witness;
};

/// Textbook product–complement emptiness over the determinized target.
OracleResult oracle_nfa_inclusion(const Nfa& a1, const Nfa& a2);

enum class BoundedVerdict {
    refuted,                // counterexample found; conclusive
    inconclusive_positive,  // no counterexample up to the bound
};

struct BoundedResult {
    BoundedVerdict verdict;
    std::optional<Word> witness;
    bool refuted() const { return verdict == BoundedVerdict::refuted; }
};

/// Test all words of length ≤ maxlen over `alphabet`: any word of the left
/// language outside L2 refutes the inclusion; finding none is reported as
/// inconclusive-positive, distinct from a proof.
BoundedResult oracle_bounded(const std::function<bool(const Word&)>& left_member,
                             const SymbolTable& alphabet,
                             const std::function<bool(const Word&)>& l2_member, size_t maxlen);

/// Earley recognizer for general CFGs (ε-productions included); the
/// conversion-independent membership reference.
bool earley_member(const Cfg& g, const Word& u);

/// All words of length ≤ maxlen, shortlex order. Enumeration helper.
std::vector<Word> all_words_upto(const SymbolTable& alphabet, size_t maxlen);

}  // namespace incl

#endif  // INCL_ORACLE_HH_
