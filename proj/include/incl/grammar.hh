// Context-free grammars: text format, Chomsky normal form conversion, the
// per-variable word-set transformer, and CYK membership.

#ifndef INCL_GRAMMAR_HH_
#define INCL_GRAMMAR_HH_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "incl/nfa.hh"
#include "incl/symbols.hh"

namespace incl {

using Var = uint32_t;

struct CfgSymbol {
    bool is_var;
    uint32_t id;  // variable index or terminal Sym
    auto operator<=>(const CfgSymbol&) const = default;
};

struct CfgProduction {
    Var lhs;
    std::vector<CfgSymbol> rhs;  // empty = ε
};

/// General CFG as parsed; variable 0 is the start symbol.
struct Cfg {
    std::vector<std::string> var_names;
    SymbolTable terminals;
    std::vector<CfgProduction> prods;

    size_t n_vars() const { return var_names.size(); }
};

struct CnfBinary {
    Var lhs, left, right;
    bool operator==(const CnfBinary&) const = default;
};

/// Grammar in Chomsky normal form; variable 0 is the start symbol and the
/// only one allowed to derive ε.
struct CnfGrammar {
    std::vector<std::string> var_names;
    SymbolTable terminals;
    std::vector<CnfBinary> binaries;                // global insertion order
    std::vector<std::vector<Sym>> terminal_prods;   // per variable
    bool start_eps = false;

    size_t n_vars() const { return var_names.size(); }
    /// Shape and "every variable has a production" checks; throws on defect.
    void validate() const;
};

// Text format, one rule per line:
//   X -> A B | a | eps
// LHS symbols define the nonterminal set; the first LHS is the start symbol.
Cfg parse_cfg(std::istream& in, const std::string& origin = "<cfg>");
Cfg parse_cfg_string(const std::string& text, const std::string& origin = "<cfg>");
Cfg load_cfg(const std::string& path);

/// CNF conversion: useless-symbol removal, conditional start isolation,
/// terminal lifting, binarization, ε-elimination (except at the start),
/// unit elimination. Grammars with an empty language are rejected.
CnfGrammar to_cnf(const Cfg& g);

using GrammarWordVector = std::vector<WordSet>;

/// ⟨{β | X_i → β, β terminal or ε}⟩_i
GrammarWordVector base_vector(const CnfGrammar& g);
/// Component i collects X_j · X_k over the binary productions X_i → X_j X_k.
GrammarWordVector fn_g(const CnfGrammar& g, const GrammarWordVector& x);

bool cyk_member(const CnfGrammar& g, const Word& u);

}  // namespace incl

#endif  // INCL_GRAMMAR_HH_
