#include <pontcalc/bundle_parse.hpp>

#include <cctype>
#include <limits>

namespace pontcalc {

namespace {

constexpr long kMaxRank = 1'000'000;  // guards elaboration of huge repeats

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  BundleExprPtr parse() {
    BundleExprPtr b = parse_bundle();
    skip_ws();
    if (pos_ != text_.size()) throw error({"'+'", "end of input"});
    return b;
  }

private:
  BundleExprPtr parse_bundle() {
    BundleExprPtr left = parse_term();
    while (true) {
      skip_ws();
      if (!match('+')) return left;
      BundleExprPtr right = parse_term();
      auto sum = std::make_shared<BundleExpr>();
      sum->kind = BundleExpr::Kind::sum;
      sum->a = std::move(left);
      sum->b = std::move(right);
      left = std::move(sum);
    }
  }

  BundleExprPtr parse_term() {
    skip_ws();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      const std::uint64_t count = parse_nat();
      skip_ws();
      if (match('*')) {
        if (count == 0)
          throw ValueError("repeat count 0 at offset " + std::to_string(start));
        BundleExprPtr child = parse_factor();
        auto rep = std::make_shared<BundleExpr>();
        rep->kind = BundleExpr::Kind::repeat;
        rep->count = count;
        rep->a = std::move(child);
        return rep;
      }
      if (count == 1 && text_.substr(start, pos_ - start) == "1") {
        auto line = std::make_shared<BundleExpr>();
        line->kind = BundleExpr::Kind::line;
        return line;
      }
      throw error({"'*'"});
    }
    return parse_factor();
  }

  BundleExprPtr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) throw error(factor_expected());
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BundleExprPtr inner = parse_bundle();
      expect(')');
      return inner;
    }
    if (c == '1') {
      ++pos_;
      auto line = std::make_shared<BundleExpr>();
      line->kind = BundleExpr::Kind::line;
      return line;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::string word = parse_ident();
      if (word == "U") {
        expect('(');
        skip_ws();
        if (pos_ >= text_.size() ||
            !std::isalpha(static_cast<unsigned char>(text_[pos_])))
          throw error({"identifier"});
        auto plane = std::make_shared<BundleExpr>();
        plane->kind = BundleExpr::Kind::plane;
        plane->root = parse_ident();
        expect(')');
        return plane;
      }
      if (word == "dual") {
        expect('(');
        BundleExprPtr inner = parse_bundle();
        expect(')');
        auto d = std::make_shared<BundleExpr>();
        d->kind = BundleExpr::Kind::dual;
        d->a = std::move(inner);
        return d;
      }
      pos_ = start;
      throw error(factor_expected());
    }
    throw error(factor_expected());
  }

  static std::vector<std::string> factor_expected() {
    return {"'U'", "'dual'", "'1'", "'('", "integer"};
  }

  std::uint64_t parse_nat() {
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit =
          static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw ValueError("repeat count overflows at offset " +
                         std::to_string(start));
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::string parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool match(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!match(c)) throw error({std::string("'") + c + "'"});
  }

  ParseError error(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(pos_) +
                      ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return ParseError(pos_, std::move(expected), msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void collect(const BundleExpr& node, std::uint64_t mult,
             std::vector<std::string>& roots, long& lines) {
  switch (node.kind) {
    case BundleExpr::Kind::plane:
      if (mult > static_cast<std::uint64_t>(kMaxRank) ||
          static_cast<long>(mult) > kMaxRank - static_cast<long>(roots.size()))
        throw ValueError("bundle too large to elaborate");
      for (std::uint64_t i = 0; i < mult; ++i) roots.push_back(node.root);
      return;
    case BundleExpr::Kind::line:
      if (mult > static_cast<std::uint64_t>(kMaxRank) ||
          lines > kMaxRank - static_cast<long>(mult))
        throw ValueError("bundle too large to elaborate");
      lines += static_cast<long>(mult);
      return;
    case BundleExpr::Kind::sum:
      collect(*node.a, mult, roots, lines);
      collect(*node.b, mult, roots, lines);
      return;
    case BundleExpr::Kind::repeat: {
      if (node.count != 0 &&
          mult > static_cast<std::uint64_t>(kMaxRank) / node.count)
        throw ValueError("bundle too large to elaborate");
      collect(*node.a, mult * node.count, roots, lines);
      return;
    }
    case BundleExpr::Kind::dual:
      collect(*node.a, mult, roots, lines);
      return;
  }
}

}  // namespace

BundleExprPtr parse_bundle_expr(std::string_view text) {
  return Parser(text).parse();
}

FormalBundle elaborate(const BundleExpr& ast, const VarSet& ambient) {
  std::vector<std::string> roots;
  long lines = 0;
  collect(ast, 1, roots, lines);
  return FormalBundle(ambient, std::move(roots), lines);
}

FormalBundle elaborate(const BundleExpr& ast) {
  std::vector<std::string> roots;
  long lines = 0;
  collect(ast, 1, roots, lines);
  return FormalBundle(root_varset(roots), roots, lines);
}

}  // namespace pontcalc
