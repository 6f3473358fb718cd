// Text grammar for polynomials: terms joined by + / -, a term is an
// optional integer coefficient and a product of var or var^k joined by *.
// Whitespace is insignificant. print() emits the canonical normal form and
// parse(print(f)) == f.
#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "cy7/polynomial.hpp"

namespace cy7 {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

namespace detail {

class PolyParser {
public:
  PolyParser(const std::string& text, RingPtr ring, MonomialOrder ord)
      : s_(text), ring_(std::move(ring)), ord_(ord) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip_ws();
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = (get() == '-');
    parse_term(terms, neg);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = get();
      if (c != '+' && c != '-')
        throw ParseError("expected '+' or '-'", pos_ - 1);
      parse_term(terms, c == '-');
      skip_ws();
    }
    return Polynomial::from_terms(ring_, ord_, std::move(terms));
  }

private:
  void parse_term(std::vector<Term>& terms, bool negate) {
    skip_ws();
    const auto& F = ring_->field;
    fp_t coeff = 1;
    Monomial mono;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos_ >= s_.size())
        break;
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = F.mul(coeff, parse_integer());
        saw_factor = true;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [idx, exp] = parse_var_power();
        for (int k = 0; k < exp; ++k) mono = mono * Monomial::var(idx);
        saw_factor = true;
      } else {
        if (!saw_factor) throw ParseError("expected a term", pos_);
        break;
      }
      skip_ws();
      if (pos_ < s_.size() && peek() == '*') {
        get();
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!saw_factor) throw ParseError("empty term", pos_);
    if (negate) coeff = F.neg(coeff);
    if (coeff) terms.push_back({mono, coeff});
  }

  fp_t parse_integer() {
    const auto& F = ring_->field;
    fp_t v = 0;
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = F.add(F.mul(v, 10 % F.p()), F.from_int(s_[pos_] - '0'));
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", pos_);
    return v;
  }

  std::pair<int, int> parse_var_power() {
    size_t start = pos_;
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      name += s_[pos_++];
    }
    int idx = ring_->var_index(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    int exp = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip_ws();
      exp = 0;
      size_t estart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        exp = exp * 10 + (s_[pos_++] - '0');
      if (pos_ == estart) throw ParseError("expected exponent", pos_);
      if (exp > 200) throw ParseError("exponent too large", estart);
    }
    return {idx, exp};
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }

  const std::string& s_;
  RingPtr ring_;
  MonomialOrder ord_;
  size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse(const std::string& text, const RingPtr& ring,
                        MonomialOrder ord) {
  return detail::PolyParser(text, ring, ord).run();
}

inline Polynomial parse(const std::string& text, const RingPtr& ring) {
  return parse(text, ring, ring->order);
}

inline Polynomial parse_homogeneous(const std::string& text, const RingPtr& ring) {
  Polynomial f = parse(text, ring);
  if (!f.is_homogeneous())
    throw ParseError("polynomial is not homogeneous", 0);
  return f;
}

inline std::string print(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Ring& R = *f.ring();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    fp_t c = t.c;
    if (first) {
      first = false;
    } else {
      out << (c <= R.p() / 2 ? " + " : " - ");
      if (c > R.p() / 2) c = R.field.neg(c);
    }
    bool need_coeff = (c != 1) || t.m.is_one();
    bool printed = false;
    if (need_coeff) {
      out << c;
      printed = true;
    }
    for (int i = 0; i < R.nvars(); ++i) {
      if (!t.m[i]) continue;
      if (printed) out << "*";
      out << R.vars[i];
      if (t.m[i] > 1) out << "^" << static_cast<int>(t.m[i]);
      printed = true;
    }
  }
  return out.str();
}

} // namespace cy7
