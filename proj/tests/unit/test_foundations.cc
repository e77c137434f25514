#include "doctest.h"

#include <numeric>

#include "incl/foundations.hh"
#include "incl/regular_inclusion.hh"
#include "incl/word_orders.hh"
#include "support/fixtures.hh"
#include "support/gen.hh"

using namespace incl;
using fixtures::w;

namespace {

// divisibility on positive ints: a partial order with rich incomparability
bool divides(int a, int b) { return b % a == 0; }

std::vector<int> random_ints(gen::Rng& rng, size_t maxn) {
    std::vector<int> v;
    size_t n = rng.range(0, maxn);
    for (size_t i = 0; i < n; ++i) v.push_back(static_cast<int>(rng.range(1, 40)));
    return v;
}

}  // namespace

TEST_SUITE("foundations") {

TEST_CASE("sqsubseteq on trivial shapes") {
    auto leq = [](int a, int b) { return divides(a, b); };
    CHECK(sqsubseteq<int>({}, {1, 2, 3}, leq));
    CHECK(sqsubseteq<int>({}, {}, leq));
    CHECK_FALSE(sqsubseteq<int>({5}, {}, leq));
    CHECK(sqsubseteq<int>({4, 6, 8}, {2}, leq));
    CHECK_FALSE(sqsubseteq<int>({4, 9}, {2}, leq));
}

TEST_CASE("sqsubseteq matches the worked Nerode-left instance") {
    // {aa,ab,ac,a,b,c} ⊑ {a,b,c} under the Nerode-left order of the target
    // language because c sits below each two-letter word.
    Nfa a2 = fixtures::fig2a2();
    auto qo = nerode_left(a2);
    auto leq = [&](const Word& u, const Word& v) { return qo.leq(u, v); };
    std::vector<Word> big = {w(a2, "aa"), w(a2, "ab"), w(a2, "ac"),
                             w(a2, "a"),  w(a2, "b"),  w(a2, "c")};
    std::vector<Word> small = {w(a2, "a"), w(a2, "b"), w(a2, "c")};
    CHECK(qo.leq(w(a2, "c"), w(a2, "aa")));
    CHECK(sqsubseteq(big, small, leq));
    // a ⋠ c: xa ∈ L for x = ab but xc never is, so {c} ⋢ {a}
    std::vector<Word> just_c = {w(a2, "c")};
    std::vector<Word> just_a = {w(a2, "a")};
    CHECK_FALSE(sqsubseteq(just_c, just_a, leq));
}

TEST_CASE("minor keeps exactly the minimal state sets") {
    // {{q1,q3},{q3},{q4}} under ⊆ has minimal sets {q3} and {q4}
    auto leq = [](const StateSet& a, const StateSet& b) { return a.is_subset_of(b); };
    StateSet s13(4), s3(4), s4(4);
    s13.set(1); s13.set(3);
    s3.set(3);
    s4.set(0);
    std::vector<StateSet> in = {s13, s3, s4};
    auto out = minor(in, leq);

    // independent check: enumerate the minimal elements by pairwise tests
    std::vector<StateSet> expected;
    for (const auto& x : in) {
        bool minimal = true;
        for (const auto& y : in)
            if (y != x && leq(y, x)) minimal = false;
        if (minimal) expected.push_back(x);
    }
    CHECK(out == expected);
    CHECK(out == std::vector<StateSet>{s3, s4});
}

TEST_CASE("minor of singleton and empty") {
    auto leq = [](int a, int b) { return divides(a, b); };
    CHECK(minor<int>({7}, leq) == std::vector<int>{7});
    CHECK(minor<int>({}, leq).empty());
}

TEST_CASE("minor laws hold on random samples") {
    gen::Rng rng(20240811);
    auto leq = [](int a, int b) { return divides(a, b); };
    for (int iter = 0; iter < 1000; ++iter) {
        auto xs = random_ints(rng, 12);
        auto m = minor(xs, leq);
        CHECK(sqsubseteq(xs, m, leq));
        CHECK(sqsubseteq(m, xs, leq));
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = 0; j < m.size(); ++j)
                if (i != j) CHECK_FALSE(divides(m[i], m[j]));
        // idempotence up to mutual ⊑
        auto mm = minor(m, leq);
        CHECK(sqsubseteq(m, mm, leq));
        CHECK(sqsubseteq(mm, m, leq));
    }
}

TEST_CASE("sqsubseteq is reflexive and transitive on sampled sets") {
    gen::Rng rng(7);
    auto leq = [](int a, int b) { return divides(a, b); };
    auto sub = [&](const std::vector<int>& x, const std::vector<int>& y) {
        return sqsubseteq(x, y, leq);
    };
    for (int iter = 0; iter < 300; ++iter) {
        auto a = random_ints(rng, 8);
        auto b = random_ints(rng, 8);
        auto c = random_ints(rng, 8);
        CHECK(sub(a, a));
        if (sub(a, b) && sub(b, c)) CHECK(sub(a, c));
    }
}

TEST_CASE("antichain container maintains pairwise incomparability") {
    gen::Rng rng(99);
    auto leq = [](int a, int b) { return divides(a, b); };
    for (int iter = 0; iter < 200; ++iter) {
        Antichain<int, bool (*)(int, int)> ac(+[](int a, int b) { return divides(a, b); });
        auto xs = random_ints(rng, 15);
        for (int x : xs) ac.insert(x);
        for (size_t i = 0; i < ac.size(); ++i)
            for (size_t j = 0; j < ac.size(); ++j)
                if (i != j) CHECK_FALSE(leq(ac.elements()[i], ac.elements()[j]));
        CHECK(sqsubseteq(xs, ac.elements(), leq));
    }
}

TEST_CASE("kleene stops at an immediate fixed point") {
    auto conv = [](int a, int b) { return a == b; };
    auto [v, stats] = kleene(conv, [](int x) { return x; }, 42);
    CHECK(v == 42);
    CHECK(stats.iterations == 1);
}

TEST_CASE("kleene reproduces the Nerode-left word iteration") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    auto qo = nerode_left(a2);
    auto leq = [&](const Word& u, const Word& v) { return qo.leq(u, v); };
    auto f = [&](const WordVector& x) {
        WordVector y = pre_transform(a1, x);
        for (size_t q = a1.finals().find_first(); q != kNoState; q = a1.finals().find_next(q))
            y[q].insert(Word{});
        return y;
    };
    auto conv = [&](const WordVector& fx, const WordVector& x) {
        for (size_t q = 0; q < fx.size(); ++q)
            if (!sqsubseteq(fx[q].items(), x[q].items(), leq)) return false;
        return true;
    };
    auto [y, stats] = kleene(conv, f, WordVector(a1.n_states()));
    CHECK(y[0].same_elements(fixtures::words(a1.alphabet(), {"a", "b", "c"})));
    CHECK(y[1].same_elements(fixtures::words(a1.alphabet(), {""})));
    CHECK(stats.iterations == 3);  // convergence detected comparing the 3rd iterate
}

TEST_CASE("kleene converges one step later under the state-left order") {
    Nfa a1 = fixtures::fig2a1();
    Nfa a2 = fixtures::fig2a2();
    auto qo = state_left(a2);
    Verdict v = nfa_include_words(a1, make_member_fn(a2, a1.alphabet()), qo,
                                  {.prune = false});
    CHECK(v.stats.iterations == 4);
}

TEST_CASE("kleene reports a breached iteration cap") {
    auto conv = [](int, int) { return false; };
    CHECK_THROWS_AS(kleene(conv, [](int x) { return x + 1; }, 0, uint64_t{10}),
                    KleeneCapExceeded);
    try {
        kleene(conv, [](int x) { return x + 1; }, 0, uint64_t{10});
    } catch (const KleeneCapExceeded& e) {
        CHECK(e.cap() == 10);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
}

TEST_CASE("kleene with ⊑ convergence lands on a ⊑-postfixpoint") {
    gen::Rng rng(4242);
    for (int iter = 0; iter < 50; ++iter) {
        Nfa a1 = gen::random_nfa(rng, 4, 2);
        Nfa a2 = gen::random_nfa(rng, 4, 2);
        SymbolTable universe(a1.alphabet().tokens());
        for (const auto& t : a2.alphabet().tokens()) universe.intern(t);
        Nfa a1u = re_alphabet(a1, universe);
        auto qo = state_left(a2, universe);
        auto leq = [&](const Word& u, const Word& v) { return qo.leq(u, v); };
        auto f = [&](const WordVector& x) {
            WordVector y = pre_transform(a1u, x);
            for (size_t q = a1u.finals().find_first(); q != kNoState;
                 q = a1u.finals().find_next(q))
                y[q].insert(Word{});
            return y;
        };
        auto conv = [&](const WordVector& fx, const WordVector& x) {
            for (size_t q = 0; q < fx.size(); ++q)
                if (!sqsubseteq(fx[q].items(), x[q].items(), leq)) return false;
            return true;
        };
        auto [y, stats] = kleene(conv, f, WordVector(a1u.n_states()));
        WordVector fy = f(y);
        CHECK(conv(fy, y));
    }
}

}  // TEST_SUITE
