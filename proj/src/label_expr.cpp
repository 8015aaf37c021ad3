#include "critgraph/label_expr.hpp"

#include <cctype>

namespace critgraph {

int IndexExpr::eval(int k, std::optional<int> i) const {
  if (i_coef != 0 && !i) throw ExprError("index expression '" + to_string() + "' needs a value for i");
  return k_coef * k + i_coef * i.value_or(0) + constant;
}

std::string IndexExpr::to_string() const {
  std::string out;
  auto term = [&out](int coef, const char* var) {
    if (coef == 0) return;
    if (!out.empty()) out += coef > 0 ? "+" : "-";
    else if (coef < 0) out += "-";
    int mag = coef < 0 ? -coef : coef;
    if (mag != 1 || !*var) out += std::to_string(mag);
    out += var;
  };
  term(k_coef, "k");
  term(i_coef, "i");
  if (constant != 0 || out.empty()) {
    if (out.empty()) out = std::to_string(constant);
    else out += (constant > 0 ? "+" : "-") + std::to_string(constant < 0 ? -constant : constant);
  }
  return out;
}

IndexExpr IndexExpr::parse(std::string_view text) {
  IndexExpr out;
  std::size_t pos = 0;
  bool any = false;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (any) {
      throw ExprError("bad index expression '" + std::string(text) + "'");
    }
    int mag = 0;
    bool digits = false;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      mag = mag * 10 + (text[pos] - '0');
      digits = true;
      ++pos;
    }
    if (pos < text.size() && (text[pos] == 'k' || text[pos] == 'i')) {
      (text[pos] == 'k' ? out.k_coef : out.i_coef) += sign * (digits ? mag : 1);
      ++pos;
    } else if (digits) {
      out.constant += sign * mag;
    } else {
      throw ExprError("bad index expression '" + std::string(text) + "'");
    }
    any = true;
    skip();
  }
  if (!any) throw ExprError("empty index expression");
  return out;
}

std::string LabelPattern::to_string() const {
  static constexpr char kLetters[] = {'u', 'v', 'w', 'x', 'y'};
  std::string out(1, kLetters[static_cast<int>(letter)]);
  if (!index.uses_index() && index.k_coef == 0 && index.constant >= 0)
    return out + std::to_string(index.constant);
  return out + "[" + index.to_string() + "]";
}

LabelPattern LabelPattern::parse(std::string_view text) {
  auto bad = [&] { return ExprError("bad label pattern '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  LabelPattern out;
  switch (text[0]) {
    case 'u': out.letter = LabelLetter::U; break;
    case 'v': out.letter = LabelLetter::V; break;
    case 'w': out.letter = LabelLetter::W; break;
    case 'x': out.letter = LabelLetter::X; break;
    case 'y': out.letter = LabelLetter::Y; break;
    default: throw bad();
  }
  auto rest = text.substr(1);
  if (rest.size() >= 2 && rest.front() == '[' && rest.back() == ']') {
    out.index = IndexExpr::parse(rest.substr(1, rest.size() - 2));
  } else {
    if (rest.empty()) throw bad();
    for (char c : rest)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw bad();
    out.index = IndexExpr::constant_of(std::stoi(std::string(rest)));
  }
  return out;
}

struct LabelSetExpr::Node {
  Kind kind;
  std::vector<LabelPattern> labels;  // Literal; Range/StepRange use [0], [1]
  LabelClass cls = LabelClass::U1;
  std::shared_ptr<const Node> lhs, rhs;
};

LabelSetExpr LabelSetExpr::literal(std::vector<LabelPattern> labels) {
  return LabelSetExpr(std::make_shared<const Node>(Node{Kind::Literal, std::move(labels), LabelClass::U1, nullptr, nullptr}));
}

LabelSetExpr LabelSetExpr::of_class(LabelClass c) {
  return LabelSetExpr(std::make_shared<const Node>(Node{Kind::Class, {}, c, nullptr, nullptr}));
}

LabelSetExpr LabelSetExpr::range(LabelPattern lo, LabelPattern hi) {
  return LabelSetExpr(std::make_shared<const Node>(Node{Kind::Range, {lo, hi}, LabelClass::U1, nullptr, nullptr}));
}

LabelSetExpr LabelSetExpr::step_range(LabelPattern lo, LabelPattern hi) {
  return LabelSetExpr(std::make_shared<const Node>(Node{Kind::StepRange, {lo, hi}, LabelClass::U1, nullptr, nullptr}));
}

LabelSetExpr operator+(const LabelSetExpr& a, const LabelSetExpr& b) {
  using Node = LabelSetExpr::Node;
  return LabelSetExpr(std::make_shared<const Node>(
      Node{LabelSetExpr::Kind::Union, {}, LabelClass::U1, a.node_, b.node_}));
}

LabelSetExpr operator-(const LabelSetExpr& a, const LabelSetExpr& b) {
  using Node = LabelSetExpr::Node;
  return LabelSetExpr(std::make_shared<const Node>(
      Node{LabelSetExpr::Kind::Difference, {}, LabelClass::U1, a.node_, b.node_}));
}

LabelSetExpr::Kind LabelSetExpr::kind() const { return node_->kind; }

struct ExprEvaluator {
  static const LabelSetExpr::Node& node(const LabelSetExpr& e) { return *e.node_; }

  static std::string text(const LabelSetExpr::Node& n) {
    using Kind = LabelSetExpr::Kind;
    switch (n.kind) {
      case Kind::Literal: {
        std::string out = "{";
        for (std::size_t i = 0; i < n.labels.size(); ++i)
          out += (i ? "," : "") + n.labels[i].to_string();
        return out + "}";
      }
      case Kind::Class: return to_string(n.cls);
      case Kind::Range: return "[" + n.labels[0].to_string() + "," + n.labels[1].to_string() + "]";
      case Kind::StepRange:
        return "[" + n.labels[0].to_string() + ":" + n.labels[1].to_string() + "]";
      case Kind::Union:
      case Kind::Difference: {
        std::string rhs = text(*n.rhs);
        if (n.rhs->kind == Kind::Union || n.rhs->kind == Kind::Difference) rhs = "(" + rhs + ")";
        return text(*n.lhs) + (n.kind == Kind::Union ? " + " : " - ") + rhs;
      }
    }
    return {};
  }

  const EvalContext& ctx;
  const LabelSet& universe;
  const std::map<LabelClass, LabelSet>& classes;
  bool adjusted = false;

  int max_index(LabelLetter letter) const {
    switch (letter) {
      case LabelLetter::U:
      case LabelLetter::V:
      case LabelLetter::W: return 2 * ctx.k;
      case LabelLetter::X: return 3;
      case LabelLetter::Y: return 2;
    }
    return 0;
  }
  int min_index(LabelLetter letter) const {
    return letter == LabelLetter::U || letter == LabelLetter::V ? 0 : 1;
  }

  LabelSet eval(const LabelSetExpr::Node& n) {
    using Kind = LabelSetExpr::Kind;
    const bool strict = ctx.policy == BoundaryPolicy::Strict;
    switch (n.kind) {
      case Kind::Literal: {
        LabelSet out;
        for (const auto& p : n.labels) {
          VertexLabel l = p.eval(ctx.k, ctx.index);
          if (universe.contains(l)) {
            out.insert(l);
          } else if (strict) {
            throw ExprError("label " + l.to_string() + " does not exist in G_" +
                            std::to_string(ctx.k));
          } else {
            adjusted = true;
          }
        }
        return out;
      }
      case Kind::Class: return classes.at(n.cls);
      case Kind::Range:
      case Kind::StepRange: {
        const LabelPattern& lo = n.labels[0];
        const LabelPattern& hi = n.labels[1];
        if (lo.letter != hi.letter)
          throw ExprError("range " + text(n) + " mixes label letters");
        if (lo.letter == LabelLetter::X || lo.letter == LabelLetter::Y)
          throw ExprError("range " + text(n) + " must be over u, v or w labels");
        int a = lo.index.eval(ctx.k, ctx.index);
        int b = hi.index.eval(ctx.k, ctx.index);
        const int step = n.kind == Kind::StepRange ? 2 : 1;
        if (b < a) {
          if (strict)
            throw ExprError("range " + text(n) + " evaluates to [" + std::to_string(a) + ", " +
                            std::to_string(b) + "] with upper bound below lower bound");
          adjusted = true;
          return {};
        }
        const int lo_ok = min_index(lo.letter), hi_ok = max_index(lo.letter);
        if (a < lo_ok || b > hi_ok) {
          if (strict)
            throw ExprError("range " + text(n) + " leaves the label universe of G_" +
                            std::to_string(ctx.k));
          adjusted = true;
        }
        LabelSet out;
        for (int t = a; t <= b; t += step)
          if (t >= lo_ok && t <= hi_ok) out.insert({lo.letter, t});
        return out;
      }
      case Kind::Union: {
        LabelSet out = eval(*n.lhs);
        LabelSet rhs = eval(*n.rhs);
        out.insert(rhs.begin(), rhs.end());
        return out;
      }
      case Kind::Difference: {
        LabelSet out = eval(*n.lhs);
        for (const auto& l : eval(*n.rhs)) out.erase(l);
        return out;
      }
    }
    return {};
  }
};

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LabelSetExpr parse() {
    LabelSetExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ExprError("cannot parse set expression '" + std::string(text_) + "': " + why +
                    " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LabelSetExpr expr() {
    LabelSetExpr lhs = term();
    for (;;) {
      if (eat('+'))
        lhs = lhs + term();
      else if (eat('-'))
        lhs = lhs - term();
      else
        return lhs;
    }
  }

  LabelSetExpr term() {
    skip();
    if (eat('(')) {
      LabelSetExpr e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (eat('{')) {
      std::vector<LabelPattern> labels;
      if (eat('}')) return LabelSetExpr::literal({});
      do {
        labels.push_back(pattern());
      } while (eat(','));
      if (!eat('}')) fail("expected '}'");
      return LabelSetExpr::literal(std::move(labels));
    }
    if (eat('[')) {
      LabelPattern lo = pattern();
      bool stepped;
      if (eat(':'))
        stepped = true;
      else if (eat(','))
        stepped = false;
      else
        fail("expected ',' or ':' in range");
      LabelPattern hi = pattern();
      if (!eat(']')) fail("expected ']'");
      return stepped ? LabelSetExpr::step_range(lo, hi) : LabelSetExpr::range(lo, hi);
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    auto word = text_.substr(start, pos_ - start);
    if (auto c = parse_label_class(word)) return LabelSetExpr::of_class(*c);
    pos_ = start;
    fail("expected a set, range or class name");
  }

  LabelPattern pattern() {
    skip();
    std::size_t start = pos_;
    if (pos_ >= text_.size()) fail("expected a label");
    ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unclosed label index");
      pos_ = close + 1;
    } else {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    try {
      return LabelPattern::parse(text_.substr(start, pos_ - start));
    } catch (const ExprError&) {
      pos_ = start;
      fail("bad label");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LabelSetExpr LabelSetExpr::parse(std::string_view text) { return Parser(text).parse(); }

std::string LabelSetExpr::to_string() const { return ExprEvaluator::text(*node_); }

LabelSet g_universe(int k) {
  LabelSet out;
  for (int i = 0; i <= 2 * k; ++i) {
    out.insert(VertexLabel::u(i));
    out.insert(VertexLabel::v(i));
    if (i >= 1) out.insert(VertexLabel::w(i));
  }
  for (int i = 1; i <= 3; ++i) out.insert(VertexLabel::x(i));
  out.insert(VertexLabel::y(1));
  out.insert(VertexLabel::y(2));
  return out;
}

EvalResult evaluate(const LabelSetExpr& expr, const EvalContext& context) {
  if (context.k < 1) throw ExprError("evaluation requires k >= 1");
  const LabelSet universe = g_universe(context.k);
  const auto classes = class_sets(context.k);
  ExprEvaluator ev{context, universe, classes};
  EvalResult out;
  out.labels = ev.eval(ExprEvaluator::node(expr));
  out.boundary_adjusted = ev.adjusted;
  return out;
}

LabelSet eval_expr(const LabelSetExpr& expr, int k) {
  return evaluate(expr, {k, std::nullopt, BoundaryPolicy::Strict}).labels;
}

}  // namespace critgraph
