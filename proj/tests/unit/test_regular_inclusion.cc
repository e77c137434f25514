#include "doctest.h"

#include <algorithm>

#include "incl/oracle.hh"
#include "incl/regular_inclusion.hh"
#include "incl/word_orders.hh"
#include "support/fixtures.hh"
#include "support/gen.hh"

using namespace incl;
using fixtures::w;
using fixtures::words;

namespace {

StateSet named_set(const Nfa& a, std::initializer_list<const char*> names) {
    StateSet s(a.n_states());
    for (const char* n : names) s.set(*a.find_state(n));
    return s;
}

bool same_antichain(const std::vector<StateSet>& a, std::vector<StateSet> b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : a) {
        auto it = std::find(b.begin(), b.end(), x);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

std::vector<StateSet> untag(const TaggedAntichain& ac) {
    std::vector<StateSet> out;
    for (const auto& e : ac) out.push_back(e.set);
    return out;
}

bool lang_equal(const Nfa& x, const Nfa& y) {
    return nfa_include_antichain(x, y).included && nfa_include_antichain(y, x).included;
}

}  // namespace

TEST_SUITE("regular_inclusion") {

TEST_CASE("pre_transform reproduces the running iterates") {
    Nfa a1 = fixtures::fig2a1();
    WordVector empty(2);
    WordVector out = pre_transform(a1, empty);
    CHECK(out[0].empty());
    CHECK(out[1].empty());

    WordVector x1(2);
    x1[1].insert(Word{});
    out = pre_transform(a1, x1);
    CHECK(out[0].same_elements(words(a1.alphabet(), {"a", "b", "c"})));
    CHECK(out[1].empty());

    WordVector x2(2);
    for (const Word& u : words(a1.alphabet(), {"a", "b", "c"})) x2[0].insert(u);
    x2[1].insert(Word{});
    out = pre_transform(a1, x2);
    CHECK(out[0].same_elements(words(a1.alphabet(), {"aa", "ab", "ac", "a", "b", "c"})));
    CHECK(out[1].empty());
}

TEST_CASE("post_transform mirrors with right concatenation") {
    Nfa a = fixtures::fig1();
    WordVector x(2);
    x[0].insert(Word{});
    WordVector out = post_transform(a, x);
    CHECK(out[0].same_elements(words(a.alphabet(), {"a"})));
    CHECK(out[1].same_elements(words(a.alphabet(), {"b"})));
    CHECK(post_transform(a, WordVector(2))[0].empty());
}

TEST_CASE("word algorithm, Nerode-left, reproduces the worked run") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    std::vector<WordVector> trace;
    WordVector out;
    WordRunOptions opts;
    opts.prune = false;
    opts.trace = &trace;
    opts.out_vector = &out;
    Verdict v = nfa_include_words(a1, a2, OrderKind::nerode, OrderSide::left, opts);

    CHECK_FALSE(v.included);
    REQUIRE(v.witness);
    CHECK(format_word(*v.witness, a1.alphabet()) == "c");
    CHECK(v.stats.iterations == 3);
    CHECK(out[0].same_elements(words(a1.alphabet(), {"a", "b", "c"})));
    CHECK(out[1].same_elements(words(a1.alphabet(), {""})));
    // convergence was detected between the 3rd and 2nd iterates
    REQUIRE(trace.size() == 3);
    CHECK(trace[2][0].same_elements(words(a1.alphabet(), {"aa", "ab", "ac", "a", "b", "c"})));
    auto qo = nerode_left(a2, a1.alphabet());
    auto leq = [&](const Word& x, const Word& y) { return qo.leq(x, y); };
    CHECK(sqsubseteq(trace[2][0].items(), trace[1][0].items(), leq));
}

TEST_CASE("word algorithm, state-left, converges one iterate later") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    WordVector out;
    WordRunOptions opts;
    opts.prune = false;
    opts.out_vector = &out;
    Verdict v = nfa_include_words(a1, a2, OrderKind::state_based, OrderSide::left, opts);
    CHECK_FALSE(v.included);
    CHECK(v.stats.iterations == 4);
    CHECK(out[0].same_elements(words(a1.alphabet(), {"aa", "ab", "ac", "a", "b", "c"})));
    CHECK(out[1].same_elements(words(a1.alphabet(), {""})));
}

TEST_CASE("word algorithm, simulation-left, matches the Nerode-shaped output") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    WordVector out;
    WordRunOptions opts;
    opts.prune = false;
    opts.out_vector = &out;
    Verdict v = nfa_include_words(a1, a2, OrderKind::simulation, OrderSide::left, opts);
    CHECK_FALSE(v.included);
    CHECK(out[0].same_elements(words(a1.alphabet(), {"a", "b", "c"})));
    CHECK(out[1].same_elements(words(a1.alphabet(), {""})));
}

TEST_CASE("word algorithm on an empty left language") {
    Nfa a1(SymbolTable({"a"}));
    a1.add_state("q", true, false);  // no finals
    Verdict v = nfa_include_words(a1, fixtures::fig1(), OrderKind::state_based,
                                  OrderSide::left, {});
    CHECK(v.included);
}

TEST_CASE("pruning keeps verdicts and shrinks frontiers") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    for (OrderKind k : {OrderKind::state_based, OrderKind::simulation, OrderKind::nerode}) {
        WordRunOptions plain;
        plain.prune = false;
        WordRunOptions pruned;
        pruned.prune = true;
        Verdict v1 = nfa_include_words(a1, a2, k, OrderSide::left, plain);
        Verdict v2 = nfa_include_words(a1, a2, k, OrderSide::left, pruned);
        CHECK(v1.included == v2.included);
        CHECK(v2.stats.max_frontier <= v1.stats.max_frontier);
    }
}

TEST_CASE("alpha and gamma_member") {
    Nfa a2 = fixtures::fig2a2();
    WordSet just_eps;
    just_eps.insert(Word{});
    auto a_eps = alpha(a2, just_eps);
    REQUIRE(a_eps.size() == 1);
    CHECK(a_eps[0] == a2.finals());
    CHECK(alpha(a2, WordSet{}).empty());

    std::vector<StateSet> s = {named_set(a2, {"q2"})};
    CHECK(gamma_member(a2, s, w(a2, "ac")));       // {q2} ⊆ pre_ac(F) = {q1,q2}
    CHECK_FALSE(gamma_member(a2, s, w(a2, "ab")));  // pre_ab(F) = {q1}
    CHECK(gamma_member(a2, s, w(a2, "c")));
}

TEST_CASE("antichain_pre matches the hand-computed steps") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();

    AntichainVector x(2);
    x[1].insert(a2.finals(), Word{});
    AntichainVector step1 = antichain_pre(a1, a2, x);
    CHECK(same_antichain(untag(step1[0]),
                         {named_set(a2, {"q3"}), named_set(a2, {"q4"}), named_set(a2, {"q2"})}));
    CHECK(step1[1].size() == 0);

    // second application plus the base element, then the minor
    AntichainVector x2 = step1;
    x2[1].insert(a2.finals(), Word{});
    AntichainVector step2 = antichain_pre(a1, a2, x2);
    for (const auto& e : x2[1]) step2[1].insert(e.set, e.tag);
    CHECK(same_antichain(untag(step2[0]),
                         {named_set(a2, {"q3"}), named_set(a2, {"q4"}), named_set(a2, {"q2"}),
                          named_set(a2, {"q1"})}));
}

TEST_CASE("antichain decider on the fixture pairs") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    Verdict v = nfa_include_antichain(a1, a2);
    CHECK_FALSE(v.included);
    REQUIRE(v.witness);
    CHECK(member(a1, *v.witness));
    CHECK_FALSE(member(a2, *v.witness));

    CHECK(nfa_include_antichain(fixtures::fig1(), fixtures::fig1()).included);
    CHECK(nfa_include_antichain(fixtures::bgfp(), fixtures::fig1()).included);
    CHECK_FALSE(nfa_include_antichain(fixtures::fig1(), fixtures::bgfp()).included);

    Nfa empty(SymbolTable({"a"}));
    empty.add_state("q", true, false);
    CHECK(nfa_include_antichain(empty, a2).included);
}

TEST_CASE("dual antichain decider agrees with the primal") {
    CHECK_FALSE(nfa_include_antichain_dual(fixtures::fig2a1(), fixtures::fig2a2()).included);
    CHECK(nfa_include_antichain_dual(fixtures::fig1(), fixtures::fig1()).included);
    CHECK(nfa_include_antichain_dual(fixtures::bgfp(), fixtures::fig1()).included);

    gen::Rng rng(31415);
    for (int i = 0; i < 60; ++i) {
        Nfa a = gen::random_nfa(rng);
        Nfa b = gen::random_nfa(rng);
        Verdict p = nfa_include_antichain(a, b);
        Verdict d = nfa_include_antichain_dual(a, b);
        CHECK(p.included == d.included);
        if (d.witness) {
            CHECK(member(a, *d.witness));
            CHECK_FALSE(make_member_fn(b, a.alphabet())(*d.witness));
        }
    }
}

TEST_CASE("antichain witnesses certify the refutation") {
    gen::Rng rng(161803);
    for (int i = 0; i < 80; ++i) {
        Nfa a = gen::random_nfa(rng);
        Nfa b = gen::random_nfa(rng);
        Verdict v = nfa_include_antichain(a, b);
        if (!v.included) {
            REQUIRE(v.witness);
            CHECK(member(a, *v.witness));
            CHECK_FALSE(make_member_fn(b, a.alphabet())(*v.witness));
        }
    }
}

TEST_CASE("weakest precondition of the top vector") {
    Nfa b = fixtures::bgfp();
    std::vector<Nfa> top = {universal_nfa(b.alphabet()), universal_nfa(b.alphabet())};
    std::vector<Nfa> w1 = wpre_transform(b, top);
    CHECK(lang_equal(w1[0], top[0]));
    CHECK(lang_equal(w1[1], top[1]));

    // a state with no incoming transitions gets the universal language
    Nfa line(SymbolTable({"a"}));
    State p = line.add_state("p", true, false);
    State q = line.add_state("q", false, true);
    line.add_transition(p, 0, q);
    std::vector<Nfa> res = wpre_transform(line, {universal_nfa(line.alphabet()),
                                                 universal_nfa(line.alphabet())});
    CHECK(lang_equal(res[0], universal_nfa(line.alphabet())));
}

TEST_CASE("gfp decider reproduces the two-state worked example") {
    Nfa b = fixtures::bgfp();
    Nfa a = fixtures::fig1();
    std::vector<std::vector<Nfa>> trace;
    std::vector<Nfa> out;
    GfpRunOptions opts;
    opts.trace = &trace;
    opts.out_vector = &out;
    Verdict v = nfa_include_gfp(b, a, opts);
    CHECK(v.included);
    CHECK(v.stats.iterations <= 4);

    // after two refinements the second component is (b*a)+,
    // and the converged first component is the whole target language
    REQUIRE(trace.size() >= 2);
    CHECK(lang_equal(trace[1][1], fixtures::bstar_a_plus()));
    CHECK(lang_equal(out[0], fixtures::fig1()));
    CHECK(lang_equal(out[1], fixtures::bstar_a_plus()));

    // iterates descend and stay upward closed for the state-left order
    std::vector<Nfa> prev = {universal_nfa(b.alphabet()), universal_nfa(b.alphabet())};
    for (const auto& step : trace) {
        for (size_t q = 0; q < step.size(); ++q)
            CHECK(nfa_include_antichain(step[q], prev[q]).included);
        prev = step;
    }
    auto qo = state_left(a);
    auto samples = all_words_upto(a.alphabet(), 5);
    for (const auto& step : trace)
        for (const Nfa& comp : step)
            for (const Word& u : samples)
                for (const Word& v2 : samples)
                    if (member(comp, u) && qo.leq(u, v2)) CHECK(member(comp, v2));
}

TEST_CASE("gfp decider on the remaining fixtures") {
    CHECK_FALSE(nfa_include_gfp(fixtures::fig2a1(), fixtures::fig2a2()).included);
    CHECK(nfa_include_gfp(fixtures::fig1(), fixtures::fig1()).included);

    // no final states: trivially included
    Nfa nofinal(SymbolTable({"a"}));
    State q = nofinal.add_state("q", true, false);
    nofinal.add_transition(q, 0, q);
    CHECK(nfa_include_gfp(nofinal, fixtures::fig1()).included);
}

TEST_CASE("antichain iterates are the abstraction of the word iterates") {
    // lockstep on the running pair: iterate n of the antichain run equals
    // α(word iterate n), componentwise
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();

    std::vector<WordVector> wtrace;
    WordRunOptions wopts;
    wopts.prune = false;
    wopts.trace = &wtrace;
    nfa_include_words(a1, a2, OrderKind::state_based, OrderSide::left, wopts);

    std::vector<AntichainVector> strace;
    AntichainRunOptions sopts;
    sopts.trace = &strace;
    nfa_include_antichain(a1, a2, sopts);

    size_t n = std::min(wtrace.size(), strace.size());
    REQUIRE(n >= 3);
    for (size_t i = 0; i < n; ++i)
        for (size_t q = 0; q < a1.n_states(); ++q)
            CHECK(same_antichain(untag(strace[i][q]), alpha(a2, wtrace[i][q])));
}

TEST_CASE("verdicts agree across every algorithm and the oracle") {
    gen::Rng rng(271828);
    for (int i = 0; i < 60; ++i) {
        Nfa a = gen::random_nfa(rng, 5, 2);
        Nfa b = gen::random_nfa(rng, 5, 2);
        bool expected = oracle_nfa_inclusion(a, b).included;
        CHECK(nfa_include_antichain(a, b).included == expected);
        CHECK(nfa_include_antichain_dual(a, b).included == expected);
        CHECK(nfa_include_gfp(a, b).included == expected);
        for (OrderKind k : {OrderKind::state_based, OrderKind::simulation, OrderKind::nerode})
            for (OrderSide s : {OrderSide::left, OrderSide::right})
                CHECK(nfa_include_words(a, b, k, s, {}).included == expected);
    }
}

TEST_CASE("words over symbols absent from the target refute inclusion") {
    Nfa a1(SymbolTable({"a", "z"}));
    State p = a1.add_state("p", true, false);
    State q = a1.add_state("q", false, true);
    a1.add_transition(p, 1, q);  // accepts exactly "z"
    Nfa a2 = fixtures::fig1();   // over {a, b}
    CHECK_FALSE(nfa_include_antichain(a1, a2).included);
    CHECK_FALSE(nfa_include_antichain_dual(a1, a2).included);
    CHECK_FALSE(nfa_include_gfp(a1, a2).included);
    CHECK_FALSE(nfa_include_words(a1, a2, OrderKind::state_based, OrderSide::left, {}).included);
    // extra target symbols are ignored
    CHECK(nfa_include_antichain(fixtures::fig1(), fixtures::fig1()).included);
}

}  // TEST_SUITE
