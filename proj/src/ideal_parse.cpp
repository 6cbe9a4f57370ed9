#include <pontcalc/ideal_parse.hpp>

#include <cctype>

namespace pontcalc {

namespace {

class IdealParser {
public:
  IdealParser(std::string_view text, int r) : text_(text), r_(r) {}

  std::pair<IdealExpr, IdealExpr> parse_check() {
    IdealExpr lhs = parse_expr();
    skip_ws();
    if (!match_word("subset")) throw error({"'subset'"});
    IdealExpr rhs = parse_expr();
    expect_end();
    return {std::move(lhs), std::move(rhs)};
  }

  IdealExpr parse_single() {
    IdealExpr e = parse_expr();
    expect_end();
    return e;
  }

private:
  IdealExpr parse_expr() {
    IdealExpr left = parse_term();
    while (true) {
      skip_ws();
      if (!match('+')) return left;
      left = left + parse_term();
    }
  }

  IdealExpr parse_term() {
    IdealExpr left = parse_factor();
    while (true) {
      skip_ws();
      if (!match('*')) return left;
      left = left * parse_factor();
    }
  }

  IdealExpr parse_factor() {
    IdealExpr base = parse_atom();
    skip_ws();
    if (match('^')) {
      skip_ws();
      const std::size_t start = pos_;
      const int k = parse_int(false);
      if (k < 1)
        throw ValueError("ideal power must be positive at offset " +
                         std::to_string(start));
      return pow(base, k);
    }
    return base;
  }

  IdealExpr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw error({"'J'", "'L'", "'('"});
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IdealExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == 'J') {
      ++pos_;
      expect('(');
      skip_ws();
      const int d = parse_int(true);
      expect(')');
      return IdealExpr::J(r_, d);
    }
    if (c == 'L') {
      ++pos_;
      return IdealExpr::L(r_);
    }
    throw error({"'J'", "'L'", "'('"});
  }

  int parse_int(bool allow_negative) {
    bool negative = false;
    if (allow_negative && pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw error({"integer"});
    long value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000)
        throw ValueError("integer literal too large at offset " +
                         std::to_string(pos_));
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  bool match_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[end])) ||
         text_[end] == '_'))
      return false;
    pos_ = end;
    return true;
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

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) throw error({"end of input"});
  }

  ParseError error(std::vector<std::string> expected) const {
    std::string msg =
        "syntax error at offset " + std::to_string(pos_) + ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    return ParseError(pos_, std::move(expected), msg);
  }

  std::string_view text_;
  int r_;
  std::size_t pos_ = 0;
};

}  // namespace

std::pair<IdealExpr, IdealExpr> parse_ideal_check(std::string_view text,
                                                  int r) {
  return IdealParser(text, r).parse_check();
}

IdealExpr parse_ideal_expr(std::string_view text, int r) {
  return IdealParser(text, r).parse_single();
}

}  // namespace pontcalc
