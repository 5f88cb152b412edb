#include "snc/ast.hpp"

#include <utility>

namespace snc {

Ast Ast::rational(const sn::Scalar& q) {
  Ast a;
  a.kind = Kind::Rational;
  a.value = q;
  a.value.canonicalize();
  return a;
}

Ast Ast::variable(char v, int index) {
  Ast a;
  a.kind = Kind::Var;
  a.var = v;
  a.index = index;
  return a;
}

Ast Ast::mat_unit(std::vector<int> set, std::vector<int> alpha, std::vector<int> beta) {
  Ast a;
  a.kind = Kind::MatUnit;
  a.set = std::move(set);
  a.alpha = std::move(alpha);
  a.beta = std::move(beta);
  return a;
}

Ast Ast::mu(std::vector<int> set, Ast payload) {
  Ast a;
  a.kind = Kind::Mu;
  a.set = std::move(set);
  a.children.push_back(std::move(payload));
  return a;
}

Ast Ast::theta(std::vector<int> set, int i, int j) {
  Ast a;
  a.kind = Kind::Theta;
  a.set = std::move(set);
  a.i = i;
  a.j = j;
  return a;
}

Ast Ast::elem(std::vector<int> set, Ast coef, std::vector<int> alpha, std::vector<int> beta) {
  Ast a;
  a.kind = Kind::Elem;
  a.set = std::move(set);
  a.children.push_back(std::move(coef));
  a.alpha = std::move(alpha);
  a.beta = std::move(beta);
  return a;
}

Ast Ast::sum(std::vector<Ast> terms, std::vector<bool> negated) {
  Ast a;
  a.kind = Kind::Sum;
  a.children = std::move(terms);
  a.negated = std::move(negated);
  return a;
}

Ast Ast::product(std::vector<Ast> factors) {
  Ast a;
  a.kind = Kind::Product;
  a.children = std::move(factors);
  return a;
}

Ast Ast::power(Ast base, int exponent) {
  Ast a;
  a.kind = Kind::Power;
  a.children.push_back(std::move(base));
  a.exponent = exponent;
  return a;
}

bool operator==(const Ast& a, const Ast& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Ast::Kind::Rational:
      return a.value == b.value;
    case Ast::Kind::Var:
      return a.var == b.var && a.index == b.index;
    case Ast::Kind::MatUnit:
      return a.set == b.set && a.alpha == b.alpha && a.beta == b.beta;
    case Ast::Kind::Mu:
      return a.set == b.set && a.children == b.children;
    case Ast::Kind::Theta:
      return a.set == b.set && a.i == b.i && a.j == b.j;
    case Ast::Kind::Elem:
      return a.set == b.set && a.alpha == b.alpha && a.beta == b.beta && a.children == b.children;
    case Ast::Kind::Sum:
      return a.negated == b.negated && a.children == b.children;
    case Ast::Kind::Product:
      return a.children == b.children;
    case Ast::Kind::Power:
      return a.exponent == b.exponent && a.children == b.children;
  }
  return false;
}

namespace {

std::string list_text(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out;
}

std::string wrapped(const Ast& a, bool wrap) { return wrap ? "(" + to_text(a) + ")" : to_text(a); }

}  // namespace

std::string to_text(const Ast& a) {
  switch (a.kind) {
    case Ast::Kind::Rational:
      return sn::format_scalar(a.value);
    case Ast::Kind::Var:
      return std::string(1, a.var) + std::to_string(a.index);
    case Ast::Kind::MatUnit:
      return "E[" + list_text(a.set) + "](" + list_text(a.alpha) + "|" + list_text(a.beta) + ")";
    case Ast::Kind::Mu:
      return "mu[" + list_text(a.set) + "](" + to_text(a.children.at(0)) + ")";
    case Ast::Kind::Theta:
      return "theta[" + list_text(a.set) + ";" + std::to_string(a.i) + "," + std::to_string(a.j) + "]";
    case Ast::Kind::Elem:
      return "elem[" + list_text(a.set) + "](" + to_text(a.children.at(0)) + "; " + list_text(a.alpha) + "; " +
             list_text(a.beta) + ")";
    case Ast::Kind::Sum: {
      std::string out;
      for (std::size_t k = 0; k < a.children.size(); ++k) {
        if (k == 0) {
          if (a.negated[k]) out += "-";
        } else {
          out += a.negated[k] ? " - " : " + ";
        }
        out += wrapped(a.children[k], a.children[k].kind == Ast::Kind::Sum);
      }
      return out;
    }
    case Ast::Kind::Product: {
      std::string out;
      for (std::size_t k = 0; k < a.children.size(); ++k) {
        if (k) out += "*";
        const auto kind = a.children[k].kind;
        out += wrapped(a.children[k], kind == Ast::Kind::Sum || kind == Ast::Kind::Product);
      }
      return out;
    }
    case Ast::Kind::Power: {
      const auto kind = a.children.at(0).kind;
      const bool wrap = kind == Ast::Kind::Sum || kind == Ast::Kind::Product || kind == Ast::Kind::Power;
      return wrapped(a.children[0], wrap) + "^" + std::to_string(a.exponent);
    }
  }
  return {};
}

}  // namespace snc
