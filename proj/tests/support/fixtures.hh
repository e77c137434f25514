// Shared regression fixtures. Each builder mirrors one of the worked
// instances exercised throughout the test suites.

#ifndef TESTS_SUPPORT_FIXTURES_HH_
#define TESTS_SUPPORT_FIXTURES_HH_

#include "incl/grammar.hh"
#include "incl/nfa.hh"
#include "incl/ocn.hh"

namespace fixtures {

using namespace incl;

// L = (b*a)*, two states, q1 initial and final.
inline Nfa fig1() {
    Nfa a(SymbolTable({"a", "b"}));
    State q1 = a.add_state("q1", true, true);
    State q2 = a.add_state("q2", false, false);
    a.add_transition(q1, 0, q1);
    a.add_transition(q1, 1, q2);
    a.add_transition(q2, 0, q1);
    a.add_transition(q2, 1, q2);
    return a;
}

// L = a*(a+b+c), the left side of the running inclusion pair.
inline Nfa fig2a1() {
    Nfa a(SymbolTable({"a", "b", "c"}));
    State q1 = a.add_state("q1", true, false);
    State q2 = a.add_state("q2", false, true);
    a.add_transition(q1, 0, q1);
    a.add_transition(q1, 0, q2);
    a.add_transition(q1, 1, q2);
    a.add_transition(q1, 2, q2);
    return a;
}

// L = a*(a(a+b)*a + a+c + ab + bb), the right side of the pair.
inline Nfa fig2a2() {
    Nfa a(SymbolTable({"a", "b", "c"}));
    State q1 = a.add_state("q1", true, false);
    State q2 = a.add_state("q2", false, false);
    State q3 = a.add_state("q3", false, false);
    State q4 = a.add_state("q4", false, false);
    State q5 = a.add_state("q5", false, true);
    a.add_transition(q1, 0, q1);
    a.add_transition(q1, 0, q2);
    a.add_transition(q1, 0, q3);
    a.add_transition(q1, 0, q4);
    a.add_transition(q1, 1, q4);
    a.add_transition(q3, 0, q5);
    a.add_transition(q3, 0, q3);
    a.add_transition(q3, 1, q3);
    a.add_transition(q2, 2, q5);
    a.add_transition(q2, 0, q2);
    a.add_transition(q4, 1, q5);
    return a;
}

// L = (b + ab*a)(a+b)*, the regular target of the grammar inclusion runs.
inline Nfa fig4() {
    Nfa a(SymbolTable({"a", "b"}));
    State q1 = a.add_state("q1", true, false);
    State q2 = a.add_state("q2", false, false);
    State q3 = a.add_state("q3", false, true);
    a.add_transition(q1, 0, q2);
    a.add_transition(q2, 0, q3);
    a.add_transition(q2, 1, q2);
    a.add_transition(q3, 0, q3);
    a.add_transition(q3, 1, q3);
    a.add_transition(q1, 1, q3);
    return a;
}

// Two-state automaton with L = (ba+)*, included in fig1's (b*a)*.
inline Nfa bgfp() {
    Nfa a(SymbolTable({"a", "b"}));
    State q3 = a.add_state("q3", true, true);
    State q4 = a.add_state("q4", false, false);
    a.add_transition(q3, 1, q4);
    a.add_transition(q4, 0, q3);
    a.add_transition(q4, 0, q4);
    return a;
}

// Single-state automaton for a*.
inline Nfa astar() {
    Nfa a(SymbolTable({"a"}));
    State q = a.add_state("q0", true, true);
    a.add_transition(q, 0, q);
    return a;
}

// NFA for (b*a)+, the expected intermediate gfp component.
inline Nfa bstar_a_plus() {
    Nfa a(SymbolTable({"a", "b"}));
    State s0 = a.add_state("s0", true, false);
    State s1 = a.add_state("s1", false, true);
    a.add_transition(s0, 1, s0);
    a.add_transition(s0, 0, s1);
    a.add_transition(s1, 1, s0);
    a.add_transition(s1, 0, s1);
    return a;
}

// NFA for a*b over {a, b}.
inline Nfa astar_b() {
    Nfa a(SymbolTable({"a", "b"}));
    State s0 = a.add_state("s0", true, false);
    State s1 = a.add_state("s1", false, true);
    a.add_transition(s0, 0, s0);
    a.add_transition(s0, 1, s1);
    return a;
}

// Three-state one-counter net over {a}: q1 -a,+1-> q2, q2 -a,0-> q3,
// q3 -a,-1-> q1 with a q3 -a,+1-> q3 loop.
inline Ocn fig3ocn() {
    Ocn o(SymbolTable({"a"}));
    State q1 = o.add_state("q1");
    State q2 = o.add_state("q2");
    State q3 = o.add_state("q3");
    o.add_transition(q1, 0, +1, q2);
    o.add_transition(q2, 0, 0, q3);
    o.add_transition(q3, 0, -1, q1);
    o.add_transition(q3, 0, +1, q3);
    return o;
}

// X0 -> X0 X1 | X1 X0 | b ; X1 -> a, generating a*ba*.
inline CnfGrammar gex() {
    CnfGrammar g;
    g.var_names = {"X0", "X1"};
    g.terminals = SymbolTable({"b", "a"});
    g.binaries = {{0, 0, 1}, {0, 1, 0}};
    g.terminal_prods = {{0}, {1}};  // X0 -> b, X1 -> a
    g.validate();
    return g;
}

// Shorthand: word from concatenated single-char tokens of `t`'s alphabet.
inline Word w(const SymbolTable& t, const std::string& text) { return parse_word(text, t); }
inline Word w(const Nfa& a, const std::string& text) { return parse_word(text, a.alphabet()); }

inline WordSet words(const SymbolTable& t, std::initializer_list<std::string> texts) {
    WordSet s;
    for (const auto& x : texts) s.insert(parse_word(x, t));
    return s;
}

}  // namespace fixtures

#endif  // TESTS_SUPPORT_FIXTURES_HH_
