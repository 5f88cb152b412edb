#include "snc/parser.hpp"

#include "sn/multi_index.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace snc {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  Ast parse() {
    Ast a = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) fail_at(at, "integer too large");
    return std::stoi(d);
  }

  Ast expr() {
    std::vector<Ast> terms;
    std::vector<bool> negated;
    negated.push_back(accept('-'));
    terms.push_back(term());
    for (;;) {
      if (accept('+')) {
        negated.push_back(false);
      } else if (accept('-')) {
        negated.push_back(true);
      } else {
        break;
      }
      terms.push_back(term());
    }
    if (terms.size() == 1 && !negated[0]) return std::move(terms[0]);
    return Ast::sum(std::move(terms), std::move(negated));
  }

  Ast term() {
    std::vector<Ast> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors[0]);
    return Ast::product(std::move(factors));
  }

  Ast factor() {
    Ast base = atom();
    if (!accept('^')) return base;
    const bool neg = accept('-');
    const int e = small_int();
    return Ast::power(std::move(base), neg ? -e : e);
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int coordinate() {
    const std::size_t at = pos_;
    const int i = small_int();
    if (i < 1 || i > n_) fail_at(at, "index " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
    return i;
  }

  std::vector<int> coordinate_set() {
    std::vector<int> out;
    skip_space();
    const std::size_t at = pos_;
    out.push_back(coordinate());
    while (accept(',')) {
      const int i = coordinate();
      if (i <= out.back()) fail_at(at, "index set must be strictly increasing");
      out.push_back(i);
    }
    return out;
  }

  std::vector<int> exponents(std::size_t count) {
    std::vector<int> out;
    skip_space();
    const std::size_t at = pos_;
    out.push_back(small_int());
    while (accept(',')) out.push_back(small_int());
    if (out.size() != count)
      fail_at(at, "expected " + std::to_string(count) + " exponents, got " + std::to_string(out.size()));
    return out;
  }

  Ast atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Ast inner = expr();
      expect(')');
      return inner;
    }
    if (at_digit()) {
      const std::string num = digits();
      sn::Scalar q(num, 10);
      if (accept('/')) {
        const std::size_t at = pos_;
        const sn::Scalar den(digits(), 10);
        if (den == 0) fail_at(at, "zero denominator");
        q /= den;
      }
      return Ast::rational(q);
    }
    const std::size_t at = pos_;
    const std::string w = word();
    if (w.empty()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (w == "x" || w == "y") {
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        return Ast::variable(w[0], coordinate());
      if (n_ == 1) return Ast::variable(w[0], 1);
      fail_at(at, "variable '" + w + "' needs an index");
    }
    if (w == "E") {
      expect('[');
      std::vector<int> set = coordinate_set();
      expect(']');
      expect('(');
      std::vector<int> alpha = exponents(set.size());
      expect('|');
      std::vector<int> beta = exponents(set.size());
      expect(')');
      return Ast::mat_unit(std::move(set), std::move(alpha), std::move(beta));
    }
    if (w == "mu") {
      expect('[');
      std::vector<int> set = coordinate_set();
      expect(']');
      expect('(');
      Ast payload = expr();
      expect(')');
      return Ast::mu(std::move(set), std::move(payload));
    }
    if (w == "theta") {
      expect('[');
      std::vector<int> set = coordinate_set();
      expect(';');
      const std::size_t ij_at = pos_;
      const int i = coordinate();
      expect(',');
      const int j = coordinate();
      expect(']');
      bool has_i = false;
      bool has_j = false;
      for (int c : set) {
        has_i = has_i || c == i;
        has_j = has_j || c == j;
      }
      if (i == j || !has_i || !has_j) fail_at(ij_at, "theta needs distinct i, j inside the index set");
      return Ast::theta(std::move(set), i, j);
    }
    if (w == "elem") {
      expect('[');
      std::vector<int> set = coordinate_set();
      expect(']');
      expect('(');
      Ast coef = expr();
      expect(';');
      std::vector<int> alpha = exponents(set.size());
      expect(';');
      std::vector<int> beta = exponents(set.size());
      expect(')');
      return Ast::elem(std::move(set), std::move(coef), std::move(alpha), std::move(beta));
    }
    fail_at(at, "unknown name '" + w + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Ast parse_expression(std::string_view text, int n) {
  sn::check_arity(n);
  return Parser(text, n).parse();
}

}  // namespace snc
