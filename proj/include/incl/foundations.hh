// Order-theoretic primitives: set lifting of a quasiorder, minors,
// antichain containers, and the generic Kleene iteration loop.

#ifndef INCL_FOUNDATIONS_HH_
#define INCL_FOUNDATIONS_HH_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace incl {

/// Thrown when a Kleene iteration exceeds its configured cap. Indicates a
/// mis-specified convergence relation, not bad input.
class KleeneCapExceeded : public std::runtime_error {
public:
    explicit KleeneCapExceeded(uint64_t cap)
        : std::runtime_error("kleene: iteration cap " + std::to_string(cap) +
                             " exceeded (convergence relation never held)"),
          cap_(cap) {}
    uint64_t cap() const { return cap_; }

private:
    uint64_t cap_;
};

struct KleeneStats {
    uint64_t iterations = 0;  // number of applications of the functional
    size_t max_frontier = 0;  // largest per-component set size observed
};

/// X \sqsubseteq Y: every x in X is dominated from below by some y in Y.
template <typename T, typename Leq>
bool sqsubseteq(const std::vector<T>& X, const std::vector<T>& Y, Leq&& leq) {
    for (const T& x : X) {
        bool dominated = false;
        for (const T& y : Y) {
            if (leq(y, x)) { dominated = true; break; }
        }
        if (!dominated) return false;
    }
    return true;
}

/// Minor of X: an antichain of minimal elements of X with X ⊑ ⌊X⌋.
/// Quasiorders admit several minors; we keep the first-encountered
/// representative of each equivalence class, scanning in insertion order.
template <typename T, typename Leq>
std::vector<T> minor(const std::vector<T>& X, Leq&& leq) {
    std::vector<T> kept;
    for (const T& x : X) {
        bool dominated = false;
        for (const T& r : kept) {
            if (leq(r, x)) { dominated = true; break; }
        }
        if (dominated) continue;
        std::erase_if(kept, [&](const T& r) { return leq(x, r); });
        kept.push_back(x);
    }
    return kept;
}

/// A ⊑-minimal set of pairwise incomparable elements, maintained under
/// insertion. `insert` returns false when the candidate is dominated by
/// (or equivalent to) an existing element.
template <typename T, typename Leq>
class Antichain {
public:
    Antichain() = default;
    explicit Antichain(Leq leq) : leq_(std::move(leq)) {}

    bool insert(T x) {
        for (const T& r : elems_) {
            if (leq_(r, x)) return false;
        }
        std::erase_if(elems_, [&](const T& r) { return leq_(x, r); });
        elems_.push_back(std::move(x));
        return true;
    }

    const std::vector<T>& elements() const { return elems_; }
    size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

private:
    std::vector<T> elems_;
    Leq leq_;
};

template <typename V>
struct KleeneHooks {
    std::function<size_t(const V&)> frontier;    // per-iterate size measure
    std::function<void(const V&)> on_iterate;    // called with each f^n(a), n >= 1
};

/// Kleene(conv, f, a): iterate x := f(x) from a until conv(f(x), x) holds;
/// returns the last x for which it did (f is applied once per round and the
/// result reused as the next iterate).
template <typename V, typename Conv, typename F>
std::pair<V, KleeneStats> kleene(Conv&& conv, F&& f, V a,
                                 std::optional<uint64_t> cap = std::nullopt,
                                 const KleeneHooks<V>& hooks = {}) {
    KleeneStats stats;
    V x = std::move(a);
    for (;;) {
        V fx = f(x);
        ++stats.iterations;
        if (hooks.frontier) {
            size_t m = hooks.frontier(fx);
            if (m > stats.max_frontier) stats.max_frontier = m;
        }
        if (hooks.on_iterate) hooks.on_iterate(fx);
        if (conv(fx, x)) return {std::move(x), stats};
        x = std::move(fx);
        if (cap && stats.iterations >= *cap) throw KleeneCapExceeded(*cap);
    }
}

}  // namespace incl

#endif  // INCL_FOUNDATIONS_HH_
