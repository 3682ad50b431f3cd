#include "pd3/ring.hpp"

#include <cctype>
#include <charconv>

namespace pd3 {

RingElement::RingElement(const GroupContext& ctx, long n) : ctx_(&ctx) {
  if (n != 0) terms_.emplace(GroupElement(ctx), Integer(n));
}

RingElement::RingElement(const GroupElement& g, const Integer& coefficient)
    : ctx_(&g.context()) {
  if (coefficient != 0) terms_.emplace(g, coefficient);
}

Integer RingElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

int RingElement::length() const noexcept {
  int best = 0;
  for (const auto& [g, c] : terms_) best = std::max(best, g.length());
  return best;
}

void RingElement::add_term(const GroupElement& g, const Integer& c) {
  if (&g.context() != ctx_) {
    throw ContextMismatch("term from " + g.context().name() + " added to element of " +
                          ctx_->name());
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

RingElement& RingElement::operator+=(const RingElement& y) {
  if (y.ctx_ != ctx_) throw ContextMismatch("add: " + ctx_->name() + " vs " + y.ctx_->name());
  for (const auto& [g, c] : y.terms_) add_term(g, c);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& y) {
  if (y.ctx_ != ctx_) throw ContextMismatch("sub: " + ctx_->name() + " vs " + y.ctx_->name());
  for (const auto& [g, c] : y.terms_) add_term(g, -c);
  return *this;
}

RingElement& RingElement::operator*=(const Integer& n) {
  if (n == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= n;
  return *this;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  if (x.ctx_ != y.ctx_) {
    throw ContextMismatch("multiply: " + x.ctx_->name() + " vs " + y.ctx_->name());
  }
  RingElement out(*x.ctx_);
  for (const auto& [g, c] : x.terms_) {
    for (const auto& [h, d] : y.terms_) out.add_term(multiply(g, h), c * d);
  }
  return out;
}

RingElement ring_multiply(const RingElement& x, const RingElement& y) { return x * y; }

RingElement left_translate(const GroupElement& g, const RingElement& x) {
  RingElement out(x.context());
  for (const auto& [h, c] : x.terms()) out.add_term(multiply(g, h), c);
  return out;
}

RingElement involute(const RingElement& x, OrientationCharacter chi) {
  RingElement out(x.context());
  for (const auto& [g, c] : x.terms()) out.add_term(invert(g), c * chi(g));
  return out;
}

Integer augment(const RingElement& x) {
  Integer sum = 0;
  for (const auto& [g, c] : x.terms()) sum += c;
  return sum;
}

RingElement induced_ring_map(const GroupHom& h, const RingElement& x) {
  if (&x.context() != &h.source()) {
    throw ContextMismatch("ring map source is " + h.source().name() + ", element lives in " +
                          x.context().name());
  }
  RingElement out(h.target());
  for (const auto& [g, c] : x.terms()) out.add_term(h(g), c);
  return out;
}

RElement to_r(const RingElement& x) {
  RElement out;
  for (const auto& [g, c] : x.terms()) (g.a_exponent() ? out.v : out.u) += c;
  return out;
}

std::string format_r(const RElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  if (x.u != 0) out = x.u.get_str();
  if (x.v != 0) {
    Integer mag = abs(x.v);
    std::string term = mag == 1 ? "a" : mag.get_str() + "*a";
    if (out.empty()) {
      out = (x.v < 0 ? "-" : "") + term;
    } else {
      out += (x.v < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ElementParser {
 public:
  ElementParser(const GroupContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

  RingElement parse() {
    RingElement value = expression();
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected character", i_);
    return value;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  RingElement expression() {
    RingElement sum(ctx_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = s_[i_] == '-';
      ++i_;
    }
    RingElement t = term();
    sum += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = s_[i_] == '-';
      ++i_;
      t = term();
      sum += negate ? -t : t;
    }
    return sum;
  }

  RingElement term() {
    RingElement value = factor();
    while (peek() == '*') {
      ++i_;
      value = value * factor();
    }
    return value;
  }

  RingElement factor() {
    const char ch = peek();
    if (ch == '(') {
      ++i_;
      RingElement inner = expression();
      if (peek() != ')') throw SyntaxError("expected ')'", i_);
      ++i_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Integer n(std::string(s_.substr(start, i_ - start)));
      RingElement out(ctx_);
      out.add_term(GroupElement(ctx_), n);
      return out;
    }
    if (ch == 'a' || ch == 'b' || ch == 'c') {
      const std::size_t start = i_;
      ++i_;
      int k = 1;
      if (peek() == '^') {
        ++i_;
        skip();
        const std::size_t estart = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        auto digits = s_.substr(estart, i_ - estart);
        if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0) {
          throw SyntaxError("expected nonzero integer exponent", estart);
        }
      }
      const auto g = static_cast<Generator>(ch);
      if (!ctx_.has_symbol(g)) {
        throw UnknownSymbol(std::string("generator '") + ch + "' is not in " + ctx_.name() +
                            " (position " + std::to_string(start) + ")");
      }
      return RingElement(normalize(ctx_, Word{{g, k}}));
    }
    throw SyntaxError(ch == '\0' ? "unexpected end of input" : "unexpected character", i_);
  }

  const GroupContext& ctx_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

RingElement parse_element(const GroupContext& ctx, std::string_view text) {
  return ElementParser(ctx, text).parse();
}

std::string format_element(const RingElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : x.terms()) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    std::string body;
    if (g.is_identity()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = g.to_string();
    } else {
      body = mag.get_str() + "*" + g.to_string();
    }
    if (first) {
      out = (negative ? "-" : "") + body;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
  }
  return out;
}

}  // namespace pd3
