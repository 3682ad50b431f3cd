#include "pd3/group.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <unordered_set>

namespace pd3 {

namespace {

bool is_generator_letter(char ch) { return ch == 'a' || ch == 'b' || ch == 'c'; }

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

std::vector<RewriteRule> s3_rules() {
  return {{"aa", ""}, {"bbb", ""}, {"ba", "abb"}};
}

std::vector<RewriteRule> pi_rules() {
  return {{"aa", ""}, {"bbb", ""}, {"ccc", ""}, {"ba", "abb"}, {"ca", "acc"}};
}

std::vector<RewriteRule> free_rules() {
  return {{"aA", ""}, {"Aa", ""}, {"bB", ""},
          {"Bb", ""}, {"cC", ""}, {"Cc", ""}};
}

}  // namespace

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  skip_space(text, i);
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space(text, i);
    if (i != text.size()) throw SyntaxError("trailing input after identity", i);
    return out;
  }
  while (true) {
    skip_space(text, i);
    if (i >= text.size() || !is_generator_letter(text[i])) {
      throw SyntaxError("expected generator a, b or c", i);
    }
    Syllable syl{static_cast<Generator>(text[i]), 1};
    ++i;
    skip_space(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space(text, i);
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      int k = 0;
      auto digits = text.substr(start, i - start);
      if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || k == 0) {
        throw SyntaxError("expected nonzero integer exponent", start);
      }
      syl.exponent = k;
    }
    out.push_back(syl);
    skip_space(text, i);
    if (i == text.size()) break;
    if (text[i] != '*') throw SyntaxError("expected '*'", i);
    ++i;
  }
  return out;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += '*';
    out += static_cast<char>(s.gen);
    if (s.exponent != 1) out += '^' + std::to_string(s.exponent);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupContext

GroupContext::GroupContext(GroupId id, std::string name, std::string symbols,
                           std::vector<RewriteRule> rules, bool free)
    : id_(id),
      name_(std::move(name)),
      symbols_(std::move(symbols)),
      rules_(std::move(rules)),
      free_(free) {
  for (const auto& r : rules_) max_lhs_ = std::max(max_lhs_, r.lhs.size());
}

GroupContext::GroupContext(std::string name, std::string symbols,
                           std::vector<RewriteRule> rules)
    : GroupContext(GroupId::Custom, std::move(name), std::move(symbols),
                   std::move(rules), false) {}

const GroupContext& GroupContext::get(GroupId id) {
  static const GroupContext s3(GroupId::S3, "S3", "ab", s3_rules(), false);
  static const GroupContext pi(GroupId::Pi, "Pi", "abc", pi_rules(), false);
  static const GroupContext z2(GroupId::Z2, "Z2", "a", {{"aa", ""}}, false);
  static const GroupContext z3(GroupId::Z3, "Z3", "b", {{"bbb", ""}}, false);
  // Pi' is the a-free part of Pi and shares its rules.
  static const GroupContext pi_prime(GroupId::PiPrime, "PiPrime", "bc",
                                     pi_rules(), false);
  static const GroupContext free_abc(GroupId::Free, "Free", "abc", free_rules(),
                                     true);
  switch (id) {
    case GroupId::S3: return s3;
    case GroupId::Pi: return pi;
    case GroupId::Z2: return z2;
    case GroupId::Z3: return z3;
    case GroupId::PiPrime: return pi_prime;
    case GroupId::Free: return free_abc;
    case GroupId::Custom: break;
  }
  throw UnknownSymbol("no built-in context for custom group id");
}

const GroupContext& GroupContext::by_name(std::string_view name) {
  std::string lower;
  for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "s3") return get(GroupId::S3);
  if (lower == "pi") return get(GroupId::Pi);
  if (lower == "z2") return get(GroupId::Z2);
  if (lower == "z3") return get(GroupId::Z3);
  if (lower == "piprime" || lower == "pi'") return get(GroupId::PiPrime);
  if (lower == "free") return get(GroupId::Free);
  throw UnknownSymbol("unknown group '" + std::string(name) + "'");
}

bool GroupContext::is_finite() const noexcept {
  return id_ == GroupId::S3 || id_ == GroupId::Z2 || id_ == GroupId::Z3;
}

bool GroupContext::has_symbol(Generator g) const noexcept {
  return symbols_.find(static_cast<char>(g)) != std::string::npos;
}

std::string GroupContext::power(Generator g, int k) const {
  if (!has_symbol(g)) {
    throw UnknownSymbol(std::string("generator '") + static_cast<char>(g) +
                        "' is not in " + name_);
  }
  const char letter = static_cast<char>(g);
  if (k >= 0) return std::string(static_cast<std::size_t>(k), letter);
  if (free_) {
    return std::string(static_cast<std::size_t>(-k),
                       static_cast<char>(std::toupper(letter)));
  }
  // Finite order: find the torsion rule x^n -> 1.
  for (const auto& r : rules_) {
    if (r.rhs.empty() && !r.lhs.empty() &&
        std::all_of(r.lhs.begin(), r.lhs.end(), [&](char ch) { return ch == letter; })) {
      const int n = static_cast<int>(r.lhs.size());
      const int e = ((k % n) + n) % n;
      return std::string(static_cast<std::size_t>(e), letter);
    }
  }
  throw UnknownSymbol(std::string("generator '") + letter + "' has no inverse in " +
                      name_);
}

std::string GroupContext::reduce(std::string w) const {
  // Rules here terminate: each step lowers (#a, sum of a-positions, length)
  // lexicographically.  The cap only guards ad-hoc rule sets.
  std::size_t steps = 0;
  const std::size_t cap = 1'000'000;
  std::size_t i = 0;
  while (i < w.size()) {
    bool fired = false;
    for (const auto& r : rules_) {
      if (w.compare(i, r.lhs.size(), r.lhs) == 0) {
        w.replace(i, r.lhs.size(), r.rhs);
        i = i + 1 >= max_lhs_ ? i + 1 - max_lhs_ : 0;
        fired = true;
        if (++steps > cap) throw Error("rewriting did not terminate in " + name_);
        break;
      }
    }
    if (!fired) ++i;
  }
  return w;
}

bool GroupContext::is_irreducible(std::string_view letters) const {
  for (const auto& r : rules_) {
    if (letters.find(r.lhs) != std::string_view::npos) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// GroupElement

Word GroupElement::word() const {
  Word w;
  for (char ch : nf_) {
    const bool inverse = std::isupper(static_cast<unsigned char>(ch));
    const auto g = static_cast<Generator>(std::tolower(static_cast<unsigned char>(ch)));
    const int step = inverse ? -1 : 1;
    if (!w.empty() && w.back().gen == g && (w.back().exponent > 0) == (step > 0)) {
      w.back().exponent += step;
    } else {
      w.push_back({g, step});
    }
  }
  return w;
}

int GroupElement::length() const noexcept {
  int runs = 0;
  for (std::size_t i = 0; i < nf_.size(); ++i) {
    if (i == 0 || nf_[i] != nf_[i - 1]) ++runs;
  }
  return runs;
}

std::strong_ordering operator<=>(const GroupElement& x, const GroupElement& y) {
  if (auto c = x.nf_.size() <=> y.nf_.size(); c != 0) return c;
  if (auto c = x.nf_.compare(y.nf_); c != 0) return c < 0 ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
  return std::less<const GroupContext*>{}(x.ctx_, y.ctx_)   ? std::strong_ordering::less
         : std::less<const GroupContext*>{}(y.ctx_, x.ctx_) ? std::strong_ordering::greater
                                                            : std::strong_ordering::equal;
}

GroupElement from_irreducible(const GroupContext& ctx, std::string letters) {
  GroupElement g(ctx);
  g.nf_ = std::move(letters);
  return g;
}

GroupElement normalize(const GroupContext& ctx, const Word& w) {
  std::string letters;
  for (const auto& s : w) {
    if (s.exponent == 0) throw SyntaxError("zero exponent", 0);
    letters += ctx.power(s.gen, s.exponent);
  }
  return from_irreducible(ctx, ctx.reduce(std::move(letters)));
}

GroupElement normalize(const GroupContext& ctx, std::string_view text) {
  return normalize(ctx, parse_word(text));
}

GroupElement multiply(const GroupElement& x, const GroupElement& y) {
  if (&x.context() != &y.context()) {
    throw ContextMismatch("multiply: " + x.context().name() + " vs " +
                          y.context().name());
  }
  if (x.is_identity()) return y;
  if (y.is_identity()) return x;
  return from_irreducible(x.context(), x.context().reduce(x.letters() + y.letters()));
}

GroupElement invert(const GroupElement& x) {
  const auto& ctx = x.context();
  std::string letters;
  const auto& nf = x.letters();
  for (auto it = nf.rbegin(); it != nf.rend(); ++it) {
    const char ch = *it;
    if (std::isupper(static_cast<unsigned char>(ch))) {
      letters += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    } else {
      letters += ctx.power(static_cast<Generator>(ch), -1);
    }
  }
  return from_irreducible(ctx, ctx.reduce(std::move(letters)));
}

GroupElement generator(const GroupContext& ctx, Generator g) {
  return normalize(ctx, Word{{g, 1}});
}

std::vector<GroupElement> enumerate(const GroupContext& ctx,
                                    std::optional<int> max_len) {
  if (!max_len && !ctx.is_finite()) {
    throw InfiniteEnumeration("cannot enumerate all of " + ctx.name());
  }
  std::vector<std::string> steps;
  for (char ch : ctx.symbols()) {
    steps.emplace_back(1, ch);
    if (ctx.id() == GroupId::Free) {
      steps.emplace_back(1, static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
  }
  std::set<GroupElement> seen;
  std::deque<GroupElement> frontier;
  GroupElement one(ctx);
  seen.insert(one);
  frontier.push_back(one);
  while (!frontier.empty()) {
    GroupElement g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : steps) {
      GroupElement h = from_irreducible(ctx, ctx.reduce(g.letters() + s));
      if (max_len && h.length() > *max_len) continue;
      if (seen.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Confluence

ConfluenceReport check_confluence(const GroupContext& ctx) {
  ConfluenceReport report;
  const auto& rules = ctx.rules();
  auto check = [&](const std::string& overlap, const std::string& left,
                   const std::string& right) {
    ++report.pairs_checked;
    std::string l = ctx.reduce(left);
    std::string r = ctx.reduce(right);
    if (l != r && report.confluent) {
      report.confluent = false;
      report.failure = CriticalPair{overlap, l, r};
    }
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const auto& r1 = rules[i];
      const auto& r2 = rules[j];
      // Proper overlaps: suffix of r1.lhs equals prefix of r2.lhs.
      for (std::size_t k = 1; k < r1.lhs.size() && k < r2.lhs.size(); ++k) {
        if (r1.lhs.compare(r1.lhs.size() - k, k, r2.lhs, 0, k) == 0) {
          std::string overlap = r1.lhs + r2.lhs.substr(k);
          check(overlap, r1.rhs + r2.lhs.substr(k),
                r1.lhs.substr(0, r1.lhs.size() - k) + r2.rhs);
        }
      }
      // Inclusions: r2.lhs occurs inside r1.lhs.
      if (i != j && r2.lhs.size() <= r1.lhs.size()) {
        for (std::size_t pos = r1.lhs.find(r2.lhs); pos != std::string::npos;
             pos = r1.lhs.find(r2.lhs, pos + 1)) {
          check(r1.lhs, r1.rhs,
                r1.lhs.substr(0, pos) + r2.rhs + r1.lhs.substr(pos + r2.lhs.size()));
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Homomorphisms

GroupHom::GroupHom(const GroupContext& source, const GroupContext& target,
                   std::map<Generator, Word> images)
    : source_(&source), target_(&target), images_(std::move(images)) {
  for (char ch : source.symbols()) {
    const auto g = static_cast<Generator>(ch);
    auto it = images_.find(g);
    if (it == images_.end()) {
      throw InvalidHom(std::string("no image for generator '") + ch + "'");
    }
    std::string img;
    for (const auto& s : it->second) img += target.power(s.gen, s.exponent);
    img = target.reduce(std::move(img));
    letter_images_[ch] = img;
    if (source.id() == GroupId::Free) {
      letter_images_[static_cast<char>(std::toupper(static_cast<unsigned char>(ch)))] =
          invert(from_irreducible(target, img)).letters();
    }
  }
  auto map_letters = [&](const std::string& w) {
    std::string out;
    for (char ch : w) out += letter_images_.at(ch);
    return target.reduce(std::move(out));
  };
  for (const auto& r : source.rules()) {
    if (map_letters(r.lhs) != map_letters(r.rhs)) {
      throw InvalidHom("relation " + r.lhs + " = " + (r.rhs.empty() ? "1" : r.rhs) +
                       " of " + source.name() + " fails in " + target.name());
    }
  }
}

GroupHom GroupHom::identity(const GroupContext& ctx) {
  std::map<Generator, Word> images;
  for (char ch : ctx.symbols()) {
    images[static_cast<Generator>(ch)] = Word{{static_cast<Generator>(ch), 1}};
  }
  return GroupHom(ctx, ctx, std::move(images));
}

GroupElement GroupHom::operator()(const GroupElement& x) const {
  if (&x.context() != source_) {
    throw ContextMismatch("hom source is " + source_->name() + ", element lives in " +
                          x.context().name());
  }
  std::string out;
  for (char ch : x.letters()) out += letter_images_.at(ch);
  return from_irreducible(*target_, target_->reduce(std::move(out)));
}

GroupElement apply_hom(const GroupHom& h, const GroupElement& x) { return h(x); }

namespace homs {

namespace {
const GroupContext& S3() { return GroupContext::get(GroupId::S3); }
const GroupContext& Pi() { return GroupContext::get(GroupId::Pi); }
Word gen(Generator g) { return Word{{g, 1}}; }
}  // namespace

GroupHom retraction_b() {
  return GroupHom(Pi(), S3(),
                  {{Generator::a, gen(Generator::a)},
                   {Generator::b, gen(Generator::b)},
                   {Generator::c, Word{}}});
}

GroupHom retraction_c() {
  return GroupHom(Pi(), S3(),
                  {{Generator::a, gen(Generator::a)},
                   {Generator::b, Word{}},
                   {Generator::c, gen(Generator::b)}});
}

GroupHom abelianization() {
  return GroupHom(Pi(), GroupContext::get(GroupId::Z2),
                  {{Generator::a, gen(Generator::a)},
                   {Generator::b, Word{}},
                   {Generator::c, Word{}}});
}

GroupHom inclusion_b() {
  return GroupHom(S3(), Pi(),
                  {{Generator::a, gen(Generator::a)}, {Generator::b, gen(Generator::b)}});
}

GroupHom inclusion_c() {
  return GroupHom(S3(), Pi(),
                  {{Generator::a, gen(Generator::a)}, {Generator::b, gen(Generator::c)}});
}

GroupHom inclusion_a_s3() {
  return GroupHom(GroupContext::get(GroupId::Z2), S3(),
                  {{Generator::a, gen(Generator::a)}});
}

GroupHom inclusion_a_pi() {
  return GroupHom(GroupContext::get(GroupId::Z2), Pi(),
                  {{Generator::a, gen(Generator::a)}});
}

GroupHom inclusion_b_s3() {
  return GroupHom(GroupContext::get(GroupId::Z3), S3(),
                  {{Generator::b, gen(Generator::b)}});
}

}  // namespace homs

}  // namespace pd3
