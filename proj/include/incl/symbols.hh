// Symbol tables, words over interned symbols, and insertion-ordered word sets.

#ifndef INCL_SYMBOLS_HH_
#define INCL_SYMBOLS_HH_

#include <boost/functional/hash.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace incl {

using Sym = uint32_t;
using Word = std::vector<Sym>;

/// Alphabet symbols are arbitrary tokens; multi-character tokens are allowed.
/// Ids are dense and follow declaration order.
class SymbolTable {
public:
    SymbolTable() = default;
    explicit SymbolTable(const std::vector<std::string>& tokens) {
        for (const auto& t : tokens) intern(t);
    }

    Sym intern(const std::string& token) {
        auto it = ids_.find(token);
        if (it != ids_.end()) return it->second;
        Sym id = static_cast<Sym>(tokens_.size());
        tokens_.push_back(token);
        ids_.emplace(token, id);
        return id;
    }

    std::optional<Sym> find(const std::string& token) const {
        auto it = ids_.find(token);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& token(Sym s) const { return tokens_.at(s); }
    size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

    bool all_single_char() const {
        for (const auto& t : tokens_)
            if (t.size() != 1) return false;
        return true;
    }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Sym> ids_;
};

struct WordHash {
    size_t operator()(const Word& w) const { return boost::hash_range(w.begin(), w.end()); }
};

/// Lexicographic comparison by symbol id (declaration order of tokens).
inline bool lex_less(const Word& u, const Word& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

/// Shorter first, then lexicographic. Used for deterministic witness picks.
inline bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return lex_less(u, v);
}

/// Finite set of words with deterministic (insertion-order) iteration.
class WordSet {
public:
    bool insert(const Word& w) {
        if (!seen_.insert(w).second) return false;
        items_.push_back(w);
        return true;
    }

    bool contains(const Word& w) const { return seen_.count(w) != 0; }
    size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Word>& items() const { return items_; }

    bool same_elements(const WordSet& other) const {
        if (size() != other.size()) return false;
        for (const auto& w : items_)
            if (!other.contains(w)) return false;
        return true;
    }

private:
    std::vector<Word> items_;
    std::unordered_set<Word, WordHash> seen_;
};

/// A word on the command line is a whitespace-free concatenation when every
/// alphabet token is a single character, and a comma-separated token list
/// otherwise. An empty string denotes the empty word.
Word parse_word(const std::string& text, const SymbolTable& table);

std::string format_word(const Word& w, const SymbolTable& table);

}  // namespace incl

#endif  // INCL_SYMBOLS_HH_
