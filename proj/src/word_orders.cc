#include "incl/word_orders.hh"

#include "incl/regular_inclusion.hh"

namespace incl {

namespace {

std::vector<std::optional<Sym>> build_symmap(const SymbolTable& universe, const SymbolTable& target) {
    std::vector<std::optional<Sym>> map(universe.size());
    for (Sym s = 0; s < universe.size(); ++s) map[s] = target.find(universe.token(s));
    return map;
}

}  // namespace

WordQuasiorder::WordQuasiorder(OrderSide side, OrderKind kind, Nfa a2, const SymbolTable& universe)
    : side_(side), kind_(kind), a2_(std::move(a2)), symmap_(build_symmap(universe, a2_.alphabet())) {
    base_ = side_ == OrderSide::left ? a2_.finals() : a2_.initials();
    if (kind_ == OrderKind::simulation)
        simrel_ = side_ == OrderSide::left ? max_simulation(reverse(a2_)) : max_simulation(a2_);
}

const StateSet& WordQuasiorder::key(const Word& u) const {
    auto it = keys_.find(u);
    if (it != keys_.end()) return it->second;
    StateSet k;
    if (u.empty()) {
        k = base_;
    } else {
        // Left orders: pre_{au} = pre_a ∘ pre_u, so strip the head; right
        // orders mirror on the tail. Either way one step from a known word.
        Sym raw = side_ == OrderSide::left ? u.front() : u.back();
        if (raw >= symmap_.size())
            throw std::invalid_argument("word symbol #" + std::to_string(raw) +
                                        " outside the order's universe");
        Word rest = side_ == OrderSide::left ? Word(u.begin() + 1, u.end())
                                             : Word(u.begin(), u.end() - 1);
        const StateSet& kr = key(rest);
        if (symmap_[raw]) {
            k = side_ == OrderSide::left ? pre_step(a2_, *symmap_[raw], kr)
                                         : post_step(a2_, *symmap_[raw], kr);
        } else {
            k = a2_.empty_set();  // dead letter: no transitions carry it
        }
    }
    return keys_.emplace(u, std::move(k)).first->second;
}

bool WordQuasiorder::nerode_leq(const StateSet& ku, const StateSet& kv) const {
    auto it = nerode_memo_.find({ku, kv});
    if (it != nerode_memo_.end()) return it->second;
    // L u⁻¹ = W_{I, pre_u(F)} and u⁻¹L = W_{post_u(I), F}: compare the
    // re-final (resp. re-initial) copies of the automaton.
    Nfa lhs = side_ == OrderSide::left ? with_finals(a2_, ku) : with_initials(a2_, ku);
    Nfa rhs = side_ == OrderSide::left ? with_finals(a2_, kv) : with_initials(a2_, kv);
    bool r = nfa_include_antichain(lhs, rhs).included;
    nerode_memo_.emplace(std::make_pair(ku, kv), r);
    return r;
}

bool WordQuasiorder::leq(const Word& u, const Word& v) const {
    const StateSet& ku = key(u);
    const StateSet& kv = key(v);
    switch (kind_) {
        case OrderKind::state_based: return ku.is_subset_of(kv);
        case OrderKind::simulation: return forall_exists_leq(ku, kv, simrel_);
        case OrderKind::nerode: return nerode_leq(ku, kv);
    }
    return false;
}

WordQuasiorder state_left(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::left, OrderKind::state_based, a2, universe);
}
WordQuasiorder state_right(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::right, OrderKind::state_based, a2, universe);
}
WordQuasiorder sim_left(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::left, OrderKind::simulation, a2, universe);
}
WordQuasiorder sim_right(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::right, OrderKind::simulation, a2, universe);
}
WordQuasiorder nerode_left(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::left, OrderKind::nerode, a2, universe);
}
WordQuasiorder nerode_right(const Nfa& a2, const SymbolTable& universe) {
    return WordQuasiorder(OrderSide::right, OrderKind::nerode, a2, universe);
}

bool refines(const WordQuasiorder& q1, const WordQuasiorder& q2,
             const std::vector<Word>& samples) {
    for (const Word& u : samples)
        for (const Word& v : samples)
            if (q1.leq(u, v) && !q2.leq(u, v)) return false;
    return true;
}

}  // namespace incl
