#include "polyforge/expr/infix.hpp"

#include <cctype>
#include <string>

#include "polyforge/error.hpp"

namespace polyforge::expr {
namespace {

class Parser {
 public:
  Parser(std::string_view s, DagBuilder& b) : s_(s), b_(b) {}

  NodeRef parse() {
    NodeRef e = sum();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError(why + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  NodeRef sum() {
    std::vector<NodeRef> terms;
    if (eat('-')) {
      terms.push_back(b_.neg(product()));
    } else {
      eat('+');
      terms.push_back(product());
    }
    for (;;) {
      if (eat('+')) {
        terms.push_back(product());
      } else if (eat('-')) {
        terms.push_back(b_.neg(product()));
      } else {
        break;
      }
    }
    return b_.add(std::move(terms));
  }

  bool starts_primary() {
    char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '[';
  }

  NodeRef product() {
    std::vector<NodeRef> fs{power()};
    for (;;) {
      if (eat('*')) {
        fs.push_back(power());
      } else if (starts_primary()) {
        fs.push_back(power());
      } else {
        break;
      }
    }
    return b_.mul(std::move(fs));
  }

  NodeRef power() {
    NodeRef base = primary();
    if (!eat('^')) return base;
    NodeRef exp = power();
    mpz_class k = constant_value(exp);
    if (k < 0) fail("negative exponent");
    return b_.pow(base, k);
  }

  NodeRef primary() {
    char c = peek();
    if (c == '(' || c == '[') {
      ++pos_;
      NodeRef e = sum();
      if (!eat(c == '(' ? ')' : ']')) fail("unbalanced bracket");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return b_.neg(primary());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return b_.constant(mpz_class(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return b_.var(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  DagBuilder& b_;
  std::size_t pos_ = 0;
};

}  // namespace

NodeRef parse_infix(std::string_view text, DagBuilder& b) { return Parser(text, b).parse(); }

mpz_class constant_value(const NodeRef& e) {
  switch (e->op) {
    case Op::Const:
      return e->value;
    case Op::Add: {
      mpz_class s = 0;
      for (const auto& a : e->args) s += constant_value(a);
      return s;
    }
    case Op::Mul: {
      mpz_class s = 1;
      for (const auto& a : e->args) s *= constant_value(a);
      return s;
    }
    case Op::Neg:
      return -constant_value(e->args[0]);
    case Op::Pow: {
      if (!e->value.fits_ulong_p() || e->value > 1u << 24)
        throw ParseError("constant exponent too large");
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), constant_value(e->args[0]).get_mpz_t(), e->value.get_ui());
      return r;
    }
    default:
      throw ParseError("expected a constant expression");
  }
}

}  // namespace polyforge::expr
