#pragma once

#include <pontcalc/bundle.hpp>

#include <cstdint>
#include <memory>
#include <string_view>

namespace pontcalc {

// Surface syntax for bundles (whitespace-insensitive):
//   bundle := term ( '+' term )* ;
//   term   := ( nat '*' )? factor ;
//   factor := 'U' '(' ident ')' | '1' | 'dual' '(' bundle ')' | '(' bundle ')' ;
// Duplicate root names denote the same rank-two summand repeated.
struct BundleExpr {
  enum class Kind { plane, line, sum, repeat, dual };
  Kind kind = Kind::line;
  std::string root;          // plane
  std::uint64_t count = 0;   // repeat, >= 1
  std::shared_ptr<const BundleExpr> a, b;
};

using BundleExprPtr = std::shared_ptr<const BundleExpr>;

// Produces an AST or throws ParseError carrying the byte offset and expected
// token set; a repeat count of zero throws ValueError.
BundleExprPtr parse_bundle_expr(std::string_view text);

// Bundle over the ambient ring spanned by the expression's own roots.
FormalBundle elaborate(const BundleExpr& ast);
// Bundle over a caller-supplied ambient ring.
FormalBundle elaborate(const BundleExpr& ast, const VarSet& ambient);

inline std::string serialize(const FormalBundle& bundle) {
  return bundle.to_string();
}

}  // namespace pontcalc
