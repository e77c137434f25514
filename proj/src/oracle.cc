#include "incl/oracle.hh"

#include <algorithm>
#include <deque>
#include <set>

namespace incl {

OracleResult oracle_nfa_inclusion(const Nfa& a1, const Nfa& a2) {
    SymbolTable universe(a1.alphabet().tokens());
    for (const auto& t : a2.alphabet().tokens()) universe.intern(t);
    Nfa p = product(re_alphabet(a1, universe),
                    complement_dfa(determinize(re_alphabet(a2, universe))));

    // BFS with ascending symbol expansion discovers states in shortlex order
    // of their least reaching word.
    const size_t n = p.n_states();
    std::vector<int64_t> parent(n, -1);
    std::vector<Sym> via(n, 0);
    std::vector<bool> seen(n, false);
    std::deque<State> queue;

    auto reconstruct = [&](State q) {
        Word w;
        for (State at = q; parent[at] >= 0; at = static_cast<State>(parent[at]))
            w.push_back(via[at]);
        std::reverse(w.begin(), w.end());
        return w;
    };

    for (size_t q = p.initials().find_first(); q != kNoState; q = p.initials().find_next(q)) {
        seen[q] = true;
        if (p.finals().test(q)) return {false, Word{}};
        queue.push_back(static_cast<State>(q));
    }
    while (!queue.empty()) {
        State q = queue.front();
        queue.pop_front();
        for (Sym s = 0; s < p.n_syms(); ++s) {
            const StateSet& ts = p.targets(q, s);
            for (size_t t = ts.find_first(); t != kNoState; t = ts.find_next(t)) {
                if (seen[t]) continue;
                seen[t] = true;
                parent[t] = q;
                via[t] = s;
                if (p.finals().test(t)) return {false, reconstruct(static_cast<State>(t))};
                queue.push_back(static_cast<State>(t));
            }
        }
    }
    return {true, std::nullopt};
}

std::vector<Word> all_words_upto(const SymbolTable& alphabet, size_t maxlen) {
    std::vector<Word> out;
    out.push_back({});
    const size_t k = alphabet.size();
    if (k == 0) return out;
    std::vector<Word> layer = {{}};
    for (size_t len = 1; len <= maxlen; ++len) {
        std::vector<Word> next;
        next.reserve(layer.size() * k);
        for (const Word& w : layer) {
            for (Sym s = 0; s < k; ++s) {
                Word w2 = w;
                w2.push_back(s);
                next.push_back(std::move(w2));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

BoundedResult oracle_bounded(const std::function<bool(const Word&)>& left_member,
                             const SymbolTable& alphabet,
                             const std::function<bool(const Word&)>& l2_member, size_t maxlen) {
    for (const Word& w : all_words_upto(alphabet, maxlen))
        if (left_member(w) && !l2_member(w)) return {BoundedVerdict::refuted, w};
    return {BoundedVerdict::inconclusive_positive, std::nullopt};
}

// ---- Earley -------------------------------------------------------------------

bool earley_member(const Cfg& g, const Word& u) {
    struct Item {
        uint32_t prod;
        uint32_t dot;
        uint32_t from;
        auto operator<=>(const Item&) const = default;
    };
    const size_t n = u.size();
    std::vector<std::set<Item>> chart(n + 1);
    std::vector<std::deque<Item>> work(n + 1);

    auto push = [&](size_t pos, Item item) {
        if (chart[pos].insert(item).second) work[pos].push_back(item);
    };

    for (uint32_t p = 0; p < g.prods.size(); ++p)
        if (g.prods[p].lhs == 0) push(0, {p, 0, 0});

    for (size_t pos = 0; pos <= n; ++pos) {
        while (!work[pos].empty()) {
            Item it = work[pos].front();
            work[pos].pop_front();
            const CfgProduction& prod = g.prods[it.prod];
            if (it.dot < prod.rhs.size()) {
                const CfgSymbol& next = prod.rhs[it.dot];
                if (next.is_var) {
                    // predict
                    for (uint32_t p = 0; p < g.prods.size(); ++p)
                        if (g.prods[p].lhs == next.id) push(pos, {p, 0, static_cast<uint32_t>(pos)});
                    // nullable completion may already be recorded
                    for (const Item& done : chart[pos]) {
                        const CfgProduction& dp = g.prods[done.prod];
                        if (done.from == pos && done.dot == dp.rhs.size() && dp.lhs == next.id)
                            push(pos, {it.prod, it.dot + 1, it.from});
                    }
                } else if (pos < n && next.id == u[pos]) {
                    push(pos + 1, {it.prod, it.dot + 1, it.from});
                }
            } else {
                // complete
                Var lhs = prod.lhs;
                for (const Item& wait : chart[it.from]) {
                    const CfgProduction& wp = g.prods[wait.prod];
                    if (wait.dot < wp.rhs.size() && wp.rhs[wait.dot].is_var &&
                        wp.rhs[wait.dot].id == lhs)
                        push(pos, {wait.prod, wait.dot + 1, wait.from});
                }
            }
        }
    }
    for (const Item& it : chart[n])
        if (it.from == 0 && g.prods[it.prod].lhs == 0 &&
            it.dot == g.prods[it.prod].rhs.size())
            return true;
    return false;
}

}  // namespace incl
