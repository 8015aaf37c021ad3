#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "critgraph/constructions.hpp"

namespace critgraph {

class ExprError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Affine index a*k + b*i + c over the family parameter k and an optional
/// case index i.
struct IndexExpr {
  int k_coef = 0;
  int i_coef = 0;
  int constant = 0;

  static IndexExpr constant_of(int c) { return {0, 0, c}; }
  /// Throws ExprError when the expression uses i and no binding is given.
  int eval(int k, std::optional<int> i) const;
  bool uses_index() const { return i_coef != 0; }
  std::string to_string() const;
  /// Parses forms such as "0", "i", "i+1", "2k", "2k-1", "i-2".
  static IndexExpr parse(std::string_view text);

  friend bool operator==(const IndexExpr&, const IndexExpr&) = default;
};

/// A label whose index may depend on k and i, e.g. u[i+1] or w[2k].
struct LabelPattern {
  LabelLetter letter = LabelLetter::U;
  IndexExpr index;

  static LabelPattern fixed(VertexLabel l) { return {l.letter, IndexExpr::constant_of(l.index)}; }
  VertexLabel eval(int k, std::optional<int> i) const { return {letter, index.eval(k, i)}; }
  std::string to_string() const;
  static LabelPattern parse(std::string_view text);
};

/// Set expressions over G_k labels, as used in the coloring schedules:
/// literal sets, the classes U1/U2/W/V1/V2, closed ranges [a_i, a_j],
/// stepped ranges [a_i : a_j] (indices i, i+2, ...), union and difference.
///
/// Text form: "{x1,y1} + U2 + [u[i+2]:u[2k-1]] - {w[i]}". Union and
/// difference share one precedence level and associate to the left.
class LabelSetExpr {
 public:
  enum class Kind { Literal, Class, Range, StepRange, Union, Difference };

  static LabelSetExpr literal(std::vector<LabelPattern> labels);
  static LabelSetExpr of_class(LabelClass c);
  static LabelSetExpr range(LabelPattern lo, LabelPattern hi);
  static LabelSetExpr step_range(LabelPattern lo, LabelPattern hi);
  static LabelSetExpr parse(std::string_view text);

  friend LabelSetExpr operator+(const LabelSetExpr& a, const LabelSetExpr& b);
  friend LabelSetExpr operator-(const LabelSetExpr& a, const LabelSetExpr& b);

  Kind kind() const;
  std::string to_string() const;

 private:
  struct Node;
  explicit LabelSetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  friend struct ExprEvaluator;

  std::shared_ptr<const Node> node_;
};

enum class BoundaryPolicy {
  /// Every label must exist and every range must satisfy j >= i.
  Strict,
  /// A range with j < i is empty, range endpoints are clipped to the label
  /// universe, and literal labels outside it are dropped.
  Lenient,
};

struct EvalContext {
  int k = 1;
  std::optional<int> index;
  BoundaryPolicy policy = BoundaryPolicy::Strict;
};

struct EvalResult {
  LabelSet labels;
  /// True when the lenient policy changed the outcome somewhere.
  bool boundary_adjusted = false;
};

/// Evaluates over the label universe of G_k.
EvalResult evaluate(const LabelSetExpr& expr, const EvalContext& context);

/// Strict evaluation without a case index.
LabelSet eval_expr(const LabelSetExpr& expr, int k);

/// Label universe of G_k.
LabelSet g_universe(int k);

}  // namespace critgraph
