#pragma once

// Definition files: a plain-text language for posets, algebras, maps,
// predicates, valuations and transformers. Names resolve against earlier
// definitions first and then the built-in catalog. Every error is a
// ParseError carrying file, line and column.
//
//   poset N            algebra N on <poset|extnn>     map f : X -> Y { a |-> b; }
//     elems a b c        op s arity k tag T           predicate f on X = pred{ a -> 1; }
//     le a b             table s { (a,b) -> c; }      valuation m on X = val{ 1/2 @ a; }
//   end                  builtin add|max|min|mul|     valuation m on X = sup{ val{..}; .. }
//                          scale [p/q]|const p/q
//                      end
//
//   transformer t : X -> Y over R { x |-> delta y; x' |-> join(delta y, delta y'); }
//   transformer t : X -> Y over R { x |-> table{ <0,1> -> 1; ... }; }
//   ptransformer s : X -> Y over R { <0,1> |-> <1,1>; }
//
// `builtin` implements the most recent `op` of an extnn algebra; a bare
// `scale` is the parametric family. `#` starts a comment.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "powdom/algebra.hpp"
#include "powdom/funcspace.hpp"
#include "powdom/monad.hpp"
#include "powdom/poset.hpp"
#include "powdom/powerdomain.hpp"
#include "powdom/ratalgebra.hpp"

namespace powdom {

struct SourceLoc {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// An element of T Y written as a term over point masses, or as a table.
struct FunctionalExpr {
  struct Node {
    /// "delta" for a point mass, otherwise an operation symbol.
    std::string head;
    Elem point = 0;
    std::vector<Node> args;
  };
  std::optional<Node> term;
  /// (predicate on Y as carrier indices, value), when given as a table.
  std::vector<std::pair<std::vector<Elem>, Elem>> table;
};

struct TransformerDef {
  std::string name;
  PosetPtr x;
  PosetPtr y;
  std::string algebra;
  /// One entry per element of X, in element order.
  std::vector<FunctionalExpr> values;
  SourceLoc loc;
};

struct PTransformerDef {
  std::string name;
  PosetPtr x;
  PosetPtr y;
  std::string algebra;
  /// Predicates on Y mapped to predicates on X, as carrier indices.
  std::vector<std::pair<std::vector<Elem>, std::vector<Elem>>> entries;
  SourceLoc loc;
};

using ValuationValue = std::variant<SimpleValuation, SubFn, SupFn>;

std::string valuationStr(const ValuationValue& v);

class Workspace {
 public:
  /// Parses and adds every definition. Throws ParseError.
  void load(std::string_view text, const std::string& file = "<input>");
  void loadFile(const std::string& path);

  /// File definitions first, then the catalog. Throw UnknownName.
  PosetPtr poset(std::string_view name) const;
  bool isFiniteAlgebra(std::string_view name) const;
  bool isRatAlgebra(std::string_view name) const;
  const FinAlgebra& finiteAlgebra(std::string_view name) const;
  const RatAlgebra& ratAlgebra(std::string_view name) const;
  const MonoMap& map(std::string_view name) const;
  const Predicate& predicate(std::string_view name) const;
  const ValuationValue& valuation(std::string_view name) const;
  const TransformerDef& transformer(std::string_view name) const;
  const PTransformerDef& ptransformer(std::string_view name) const;

  const std::map<std::string, PosetPtr, std::less<>>& posets() const noexcept { return posets_; }
  const std::map<std::string, FinAlgebra, std::less<>>& finiteAlgebras() const noexcept {
    return finite_;
  }
  const std::map<std::string, RatAlgebra, std::less<>>& ratAlgebras() const noexcept {
    return rational_;
  }
  const std::map<std::string, ValuationValue, std::less<>>& valuations() const noexcept {
    return valuations_;
  }
  const std::map<std::string, TransformerDef, std::less<>>& transformers() const noexcept {
    return transformers_;
  }
  const std::map<std::string, PTransformerDef, std::less<>>& ptransformers() const noexcept {
    return ptransformers_;
  }

 private:
  friend class DefinitionParser;

  std::map<std::string, PosetPtr, std::less<>> posets_;
  std::map<std::string, FinAlgebra, std::less<>> finite_;
  std::map<std::string, RatAlgebra, std::less<>> rational_;
  std::map<std::string, MonoMap, std::less<>> maps_;
  std::map<std::string, Predicate, std::less<>> predicates_;
  std::map<std::string, ValuationValue, std::less<>> valuations_;
  std::map<std::string, TransformerDef, std::less<>> transformers_;
  std::map<std::string, PTransformerDef, std::less<>> ptransformers_;
};

/// Materializes a transformer in the monad over its algebra. Throws
/// TypeMismatch when m's algebra differs, NonMonotoneResult when the values
/// are not monotone in x or a table is not monotone.
StateTransformer buildTransformer(const ContinuationMonad& m, const TransformerDef& def);
/// Throws NonMonotoneResult when the map is not monotone and UnknownElement
/// when a predicate on Y is missing from the table.
PredicateTransformer buildPTransformer(const ContinuationMonad& m, const PTransformerDef& def);

}  // namespace powdom
