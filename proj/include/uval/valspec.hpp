#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <variant>

#include "cones.hpp"
#include "error.hpp"
#include "lefschetz.hpp"
#include "poly.hpp"
#include "valuation.hpp"

namespace uval {

// Recursive-descent parser for valuation expressions, e.g.
//   "tau[2,0] - 2*tau[2,1]",  "4*s - t^2",  "3/(8π)*F(mu[1,0])",  "iota(u^2)".
// Grammar (implicit multiplication binds tighter than * and /, so 3/8π is 3/(8π)):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := ('-' | '+') factor | juxt
//   juxt    := power power*
//   power   := primary ('^' ['-'] integer)?
//   primary := number | pi | π | atom | name '(' expr ')' | '(' expr ')'
// Atoms: mu[k,q] tau[k,q] pi[k,r] nu[k,p] t s u chi vol.  Functions: F iota L Lambda H.
class ValSpecParser {
 public:
  using Value = std::variant<Scalar, Valuation>;

  ValSpecParser(std::string_view text, int n) : src_(text), n_(n) {
    if (n < 0) throw IndexError("negative dimension");
  }

  Valuation parse() {
    skip_ws();
    if (pos_ >= src_.size()) fail("empty expression");
    Value v = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return as_valuation(v);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool at(std::string_view s) {
    skip_ws();
    return src_.substr(pos_, s.size()) == s;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  Valuation as_valuation(const Value& v) const {
    if (auto s = std::get_if<Scalar>(&v)) return *s * chi(n_);
    return std::get<Valuation>(v);
  }

  static Value add(const Value& a, const Value& b, bool minus, const ValSpecParser& p) {
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
      return minus ? std::get<Scalar>(a) - std::get<Scalar>(b) : std::get<Scalar>(a) + std::get<Scalar>(b);
    Valuation x = p.as_valuation(a), y = p.as_valuation(b);
    return minus ? x - y : x + y;
  }

  static Value mul(const Value& a, const Value& b) {
    const Scalar* sa = std::get_if<Scalar>(&a);
    const Scalar* sb = std::get_if<Scalar>(&b);
    if (sa && sb) return *sa * *sb;
    if (sa) return *sa * std::get<Valuation>(b);
    if (sb) return *sb * std::get<Valuation>(a);
    return multiply(std::get<Valuation>(a), std::get<Valuation>(b));
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = add(v, term(), false, *this);
      else if (eat('-')) v = add(v, term(), true, *this);
      else return v;
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      if (eat('*')) {
        v = mul(v, factor());
      } else if (at("/")) {
        const std::size_t where = pos_;
        ++pos_;
        Value d = factor();
        const Scalar* s = std::get_if<Scalar>(&d);
        if (!s) fail_at("division by a valuation", where);
        if (!s->is_monomial()) fail_at("divisor must be a nonzero single term", where);
        v = mul(v, Value(s->inverse()));
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (eat('-')) return mul(Value(Scalar(-1)), factor());
    if (eat('+')) return factor();
    return juxt();
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);
    return std::isdigit(c) || std::isalpha(c) || c == '(' || at("π");
  }

  Value juxt() {
    Value v = power();
    while (starts_primary()) v = mul(v, power());
    return v;
  }

  Value power() {
    const std::size_t start = pos_;
    Value base = primary();
    if (!eat('^')) return base;
    bool neg = eat('-');
    skip_ws();
    const std::size_t e_at = pos_;
    long e = integer();
    if (neg) e = -e;
    if (auto s = std::get_if<Scalar>(&base)) {
      if (s->is_zero() && e < 0) fail_at("zero to a negative power", e_at);
      if (e < 0 && !s->is_monomial()) fail_at("negative power of a multi-term scalar", e_at);
      return s->pow(int(e));
    }
    if (e < 0) fail_at("negative power of a valuation", e_at);
    (void)start;
    Valuation r = chi(n_);
    for (long i = 0; i < e; ++i) r = multiply(r, std::get<Valuation>(base));
    return r;
  }

  long integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail_at("integer too large", start);
    return std::stol(std::string(src_.substr(start, pos_ - start)));
  }

  Value number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    Integer num(std::string(src_.substr(start, pos_ - start)));
    Integer den = 1;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (frac == pos_) fail("digits expected after '.'");
      for (std::size_t i = frac; i < pos_; ++i) {
        num = num * 10 + (src_[i] - '0');
        den *= 10;
      }
    }
    return Scalar(make_rational(num, den));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  std::pair<int, int> index_pair() {
    expect('[');
    skip_ws();
    const int a = int(integer());
    expect(',');
    skip_ws();
    const int b = int(integer());
    expect(']');
    return {a, b};
  }

  Value primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const std::size_t start = pos_;
    const unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (std::isdigit(c)) return number();
    if (eat('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (at("π")) {
      pos_ += std::string_view("π").size();
      return Scalar::pi(1);
    }
    if (!std::isalpha(c)) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    const std::string id = identifier();
    try {
      if (id == "pi") {
        if (at("[")) {
          auto [k, r] = index_pair();
          return primitive_general(n_, k, r);
        }
        return Scalar::pi(1);
      }
      if (id == "mu" || id == "tau" || id == "nu") {
        auto [k, q] = index_pair();
        if (id == "mu") return mu(n_, k, q);
        if (id == "tau") return tau(n_, k, q);
        check_degree(n_, k);
        return nu(n_, k, q);
      }
      if (id == "t") return from_monomial(n_, variable_t());
      if (id == "s") return from_monomial(n_, variable_s());
      if (id == "u") return from_monomial(n_, variable_u());
      if (id == "chi") return chi(n_);
      if (id == "vol") return vol(n_);
      if (id == "F" || id == "iota" || id == "L" || id == "Lambda" || id == "H") {
        expect('(');
        Valuation arg = as_valuation(expr());
        expect(')');
        if (id == "F") return fourier(arg);
        if (id == "iota") return iota(arg);
        if (id == "L") return apply_L(arg);
        if (id == "Lambda") return apply_Lambda(arg);
        return apply_H(arg);
      }
    } catch (const IndexError& e) {
      throw IndexError(std::string(e.what()) + " (at offset " + std::to_string(start) + ")");
    } catch (const DomainError& e) {
      throw DomainError(std::string(e.what()) + " (at offset " + std::to_string(start) + ")");
    }
    fail_at("unknown name '" + id + "'", start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int n_;
};

inline Valuation parse_valspec(std::string_view text, int n) { return ValSpecParser(text, n).parse(); }

}  // namespace uval
