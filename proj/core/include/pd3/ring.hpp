#pragma once

// Integral group rings Z[G] over the contexts of group.hpp, plus the
// two-dimensional quotient R = Z[a]/(a^2 - 1).

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "pd3/group.hpp"

namespace pd3 {

using Integer = mpz_class;

// Finitely supported integer combination of group elements.  Zero
// coefficients are never stored, so equality is map equality.
class RingElement {
 public:
  using Terms = std::map<GroupElement, Integer>;

  explicit RingElement(const GroupContext& ctx) : ctx_(&ctx) {}
  RingElement(const GroupContext& ctx, long n);
  explicit RingElement(const GroupElement& g, const Integer& coefficient = 1);

  const GroupContext& context() const noexcept { return *ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t support_size() const noexcept { return terms_.size(); }
  Integer coefficient(const GroupElement& g) const;
  // Largest group-element length in the support; 0 for zero.
  int length() const noexcept;

  void add_term(const GroupElement& g, const Integer& c);

  RingElement& operator+=(const RingElement& y);
  RingElement& operator-=(const RingElement& y);
  RingElement& operator*=(const Integer& n);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator-(RingElement x) { return x *= -1; }
  friend RingElement operator*(RingElement x, const Integer& n) { return x *= n; }
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.ctx_ == y.ctx_ && x.terms_ == y.terms_;
  }

 private:
  const GroupContext* ctx_;
  Terms terms_;
};

RingElement ring_multiply(const RingElement& x, const RingElement& y);
// Left multiplication by a single group element, g * x.
RingElement left_translate(const GroupElement& g, const RingElement& x);

// w1(a) = w, w1(b) = w1(c) = 1.
struct OrientationCharacter {
  int w = 1;

  static OrientationCharacter trivial() { return {1}; }
  static OrientationCharacter nontrivial() { return {-1}; }
  int operator()(const GroupElement& g) const noexcept {
    return g.a_exponent() ? w : 1;
  }
};

// g -> w1(g) g^{-1}, extended linearly.
RingElement involute(const RingElement& x, OrientationCharacter chi = {});
Integer augment(const RingElement& x);
RingElement induced_ring_map(const GroupHom& h, const RingElement& x);

// u + v a in R = Z[a]/(a^2 - 1).
struct RElement {
  Integer u = 0;
  Integer v = 0;

  RElement() = default;
  RElement(Integer u_, Integer v_) : u(std::move(u_)), v(std::move(v_)) {}

  bool is_zero() const { return u == 0 && v == 0; }
  // a -> +1 or a -> -1.
  Integer evaluate(int sign) const { return sign > 0 ? Integer(u + v) : Integer(u - v); }

  friend RElement operator+(const RElement& x, const RElement& y) {
    return {x.u + y.u, x.v + y.v};
  }
  friend RElement operator-(const RElement& x, const RElement& y) {
    return {x.u - y.u, x.v - y.v};
  }
  friend RElement operator*(const RElement& x, const RElement& y) {
    return {x.u * y.u + x.v * y.v, x.u * y.v + x.v * y.u};
  }
  friend bool operator==(const RElement& x, const RElement& y) {
    return x.u == y.u && x.v == y.v;
  }
};

// Image under Pi -> Pi/Pi' (or S3 -> S3/B): every element goes to a^epsilon.
RElement to_r(const RingElement& x);
std::string format_r(const RElement& x);

// Grammar: sums and differences of terms, each a `*`-product of integers,
// words `x^k`, or parenthesised sub-expressions.  Whitespace is ignored.
RingElement parse_element(const GroupContext& ctx, std::string_view text);
// Canonical text: shortlex term order, signed integer coefficients.
std::string format_element(const RingElement& x);

}  // namespace pd3
