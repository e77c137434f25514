#include "incl/symbols.hh"

#include <sstream>

namespace incl {

// ---- words ------------------------------------------------------------------

Word parse_word(const std::string& text, const SymbolTable& table) {
    Word w;
    if (text.empty()) return w;
    auto intern_or_throw = [&](const std::string& tok) {
        auto s = table.find(tok);
        if (!s) throw std::invalid_argument("unknown symbol '" + tok + "'");
        w.push_back(*s);
    };
    if (text.find(',') != std::string::npos) {
        std::string tok;
        std::istringstream in(text);
        while (std::getline(in, tok, ',')) intern_or_throw(tok);
    } else if (table.all_single_char()) {
        for (char c : text) intern_or_throw(std::string(1, c));
    } else {
        intern_or_throw(text);
    }
    return w;
}

std::string format_word(const Word& w, const SymbolTable& table) {
    std::string out;
    bool glue = table.all_single_char();
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !glue) out += ",";
        out += table.token(w[i]);
    }
    return out;
}

}  // namespace incl
