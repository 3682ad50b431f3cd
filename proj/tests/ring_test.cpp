#include <doctest.h>

#include "oracles.hpp"
#include "pd3/ring.hpp"
#include "pd3/ring_matrix.hpp"

using namespace pd3;

namespace {

const GroupContext& S3() { return GroupContext::get(GroupId::S3); }
const GroupContext& Pi() { return GroupContext::get(GroupId::Pi); }
const GroupContext& PiPrime() { return GroupContext::get(GroupId::PiPrime); }

RingElement el(const GroupContext& g, std::string_view s) { return parse_element(g, s); }

// Z[S3] as dense coefficient maps keyed by permutation.
using Dense = std::map<oracle::Perm, mpz_class>;

Dense dense(const RingElement& x) {
  Dense out;
  for (const auto& [g, c] : x.terms()) out[oracle::perm_of_letters(g.letters())] += c;
  return out;
}

Dense convolve(const Dense& x, const Dense& y) {
  Dense out;
  for (const auto& [p, c] : x) {
    for (const auto& [q, d] : y) out[oracle::compose(p, q)] += c * d;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

RingElement random_element(std::mt19937_64& rng, const std::vector<GroupElement>& support) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  RingElement x(support.front().context());
  for (const auto& g : support) x.add_term(g, coeff(rng));
  return x;
}

}  // namespace

TEST_CASE("ring products") {
  CHECK((el(S3(), "a+1") * el(S3(), "a-1")).is_zero());
  const RingElement nu = el(S3(), "b^2+b+1") * el(S3(), "a+1");
  CHECK(nu.support_size() == 6);
  for (const auto& [g, c] : nu.terms()) CHECK(c == 1);
  CHECK((el(S3(), "b*a+b+1") * el(S3(), "-b^2*a+b*a+b-1")).is_zero());
  CHECK(el(S3(), "2*a - a - a").is_zero());
}

TEST_CASE("Z[S3] products agree with the dense regular representation") {
  std::mt19937_64 rng(11);
  const auto all = enumerate(S3(), std::nullopt);
  for (int t = 0; t < 200; ++t) {
    const RingElement x = random_element(rng, all);
    const RingElement y = random_element(rng, all);
    CHECK(dense(x * y) == convolve(dense(x), dense(y)));
    CHECK(augment(x * y) == augment(x) * augment(y));
  }
}

TEST_CASE("Z[Pi] products are associative and distributive on a ball") {
  std::mt19937_64 rng(13);
  const auto ball = enumerate(Pi(), 2);
  for (int t = 0; t < 50; ++t) {
    std::vector<GroupElement> pick;
    for (int i = 0; i < 4; ++i) pick.push_back(ball[rng() % ball.size()]);
    const RingElement x = random_element(rng, pick);
    const RingElement y = random_element(rng, pick);
    const RingElement z = random_element(rng, pick);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(involute(x * y) == involute(y) * involute(x));
  }
}

TEST_CASE("involution, augmentation and induced maps") {
  CHECK(involute(el(S3(), "a")) == el(S3(), "a"));
  CHECK(involute(el(S3(), "b^2*a")) == el(S3(), "a*b"));
  CHECK(involute(el(S3(), "a+1"), OrientationCharacter::nontrivial()) == el(S3(), "1-a"));
  CHECK(augment(el(S3(), "a+1")) == 2);
  CHECK(augment(el(S3(), "-b^2*a+b*a+b-1")) == 0);
  CHECK(augment(el(S3(), "b^2+b+1") * el(S3(), "a+1")) == 6);
  CHECK(induced_ring_map(homs::retraction_b(), el(Pi(), "c^2*a+a-1")) == el(S3(), "2*a-1"));
  CHECK(to_r(el(Pi(), "b^2*a+a-1")) == RElement(-1, 2));
  const auto id = GroupHom::identity(S3());
  CHECK(induced_ring_map(id, el(S3(), "a*b-3")) == el(S3(), "a*b-3"));
}

TEST_CASE("element syntax") {
  CHECK(el(S3(), "b^2*a + a - 1") == el(S3(), "a*b + a - 1"));
  CHECK(el(S3(), "0").is_zero());
  const RingElement x = el(S3(), "a - b^2*a");
  CHECK(el(S3(), format_element(x)) == x);
  CHECK(format_element(x) == "a - a*b");
  CHECK(el(S3(), "(b-1)*(b*a-1)") == el(S3(), "b*b*a - b - b*a + 1"));
  CHECK_THROWS_AS(el(S3(), "a +"), SyntaxError);
  CHECK_THROWS_AS(el(S3(), "c"), Error);
}

TEST_CASE("restriction of scalars to the index-two subgroup") {
  const RingMatrix ra = restrict_scalars(el(Pi(), "a"));
  CHECK(ra(0, 0).is_zero());
  CHECK(ra(0, 1) == RingElement(PiPrime(), 1));
  CHECK(ra(1, 0) == RingElement(PiPrime(), 1));
  CHECK(ra(1, 1).is_zero());
  const RingMatrix rb = restrict_scalars(el(Pi(), "b"));
  CHECK(rb(0, 0) == el(PiPrime(), "b"));
  CHECK(rb(1, 1) == el(PiPrime(), "b^2"));
  CHECK(rb(0, 1).is_zero());
  CHECK(restrict_scalars(RingElement(Pi(), 1)) == RingMatrix::identity(PiPrime(), 2));
  // Columns hold coordinates, so restriction reverses products.
  std::mt19937_64 rng(17);
  const auto ball = enumerate(Pi(), 2);
  for (int t = 0; t < 30; ++t) {
    const RingElement x = random_element(rng, {ball[rng() % ball.size()], ball[rng() % ball.size()]});
    const RingElement y = random_element(rng, {ball[rng() % ball.size()], ball[rng() % ball.size()]});
    CHECK(restrict_scalars(x * y) == compose(restrict_scalars(y), restrict_scalars(x)));
  }
}

TEST_CASE("ring matrices") {
  RingMatrix m(S3(), 2, 2);
  m(0, 0) = el(S3(), "a+1");
  m(0, 1) = el(S3(), "b");
  m(1, 1) = el(S3(), "b^2*a+a-1");
  CHECK(involuted_transpose(involuted_transpose(m)) == m);
  CHECK(compose(RingMatrix::identity(S3(), 2), m) == m);
  CHECK_FALSE(m.is_diagonal());
  const auto v = apply(m, {RingElement(S3(), 1), RingElement(S3(), 0)});
  CHECK(v[0] == el(S3(), "a+1"));
  CHECK(v[1].is_zero());
}
