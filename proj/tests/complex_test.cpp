#include <doctest.h>

#include "oracles.hpp"
#include "pd3/checks.hpp"
#include "pd3/complex.hpp"
#include "pd3/corpus.hpp"
#include "pd3/tensor.hpp"

using namespace pd3;

namespace {

const GroupContext& S3() { return GroupContext::get(GroupId::S3); }
const GroupContext& Pi() { return GroupContext::get(GroupId::Pi); }
const GroupContext& Free() { return GroupContext::get(GroupId::Free); }

RingElement el(const GroupContext& g, std::string_view s) { return parse_element(g, s); }

const Catalog& corpus() { return Catalog::embedded(); }

Chain translate(const GroupElement& g, const Chain& c) {
  Chain out = c;
  for (auto& x : out.coords) x = left_translate(g, x);
  return out;
}

}  // namespace

TEST_CASE("Fox derivatives of the relators") {
  CHECK(fox_derivative(parse_word("a^2"), Generator::a, Pi()) == el(Pi(), "a+1"));
  CHECK(fox_derivative(parse_word("a*b*a*b^-2"), Generator::b, S3()) == el(S3(), "a-b-1"));
  CHECK(fox_derivative(parse_word("a*b*a*b^-2"), Generator::a, S3()) == el(S3(), "b^2*a+1"));
  CHECK(fox_derivative(parse_word("a*b*a*b^-2"), Generator::c, S3()).is_zero());
}

TEST_CASE("fundamental identity of the Fox calculus on random free words") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::string text = oracle::random_free_word(rng, "abc", 12);
    const Word w = parse_word(text);
    RingElement sum(Free());
    for (const auto x : {Generator::a, Generator::b, Generator::c}) {
      sum += fox_derivative(w, x, Free()) * (RingElement(generator(Free(), x)) - RingElement(Free(), 1));
    }
    CHECK_MESSAGE(sum == RingElement(normalize(Free(), w)) - RingElement(Free(), 1), text);
  }
}

TEST_CASE("Fox-Lyndon complexes match the displayed matrices") {
  CHECK(build_fox_lyndon(corpus().presentation("s3")) == corpus().complex("k_displayed"));
  CHECK(build_fox_lyndon(corpus().presentation("pi")) == corpus().complex("l_displayed"));
  const auto k = build_fox_lyndon(corpus().presentation("s3"));
  CHECK(k.differential(1)(0, 0) == el(S3(), "a-1"));
  CHECK(k.differential(2)(0, 1) == el(S3(), "b^2*a+1"));
  CHECK(k.differential(2)(1, 1) == el(S3(), "a-b-1"));
  const auto l = build_fox_lyndon(corpus().presentation("pi"));
  CHECK(l.differential(2)(0, 0) == el(Pi(), "a+1"));
  CHECK(l.differential(2)(0, 2) == el(Pi(), "c^2*a+1"));
  CHECK(l.differential(2)(2, 2) == el(Pi(), "a-c-1"));

  Presentation bare;
  bare.group = &S3();
  bare.generators = {Generator::a, Generator::b};
  const auto b = build_fox_lyndon(bare);
  CHECK(b.rank(2) == 0);
  CHECK(b.differential(1) == k.differential(1));
}

TEST_CASE("attaching the top cell") {
  const auto k = build_fox_lyndon(corpus().presentation("s3"));
  const auto c = attach_top_cell(k, corpus().chain("psi").coords);
  CHECK(c.is_chain_complex());
  CHECK(c.differential(3) == RingMatrix::column(S3(), corpus().chain("psi").coords));
  CHECK(corpus().chain("psi").coords[1] == el(S3(), "-b*a+a+b^2-b"));
  CHECK_THROWS_AS(attach_top_cell(k, {RingElement(S3(), 1), RingElement(S3(), 0)}), NotACycle);
  const auto l = build_fox_lyndon(corpus().presentation("pi"));
  CHECK(attach_top_cell(l, corpus().chain("theta").coords).is_chain_complex());
  CHECK(attach_top_cell(l, corpus().chain("xi").coords).is_chain_complex());
}

TEST_CASE("boundary squares to zero on every constructed complex") {
  for (const char* name : {"k", "l", "x", "y", "z"}) {
    const auto cx = assemble_complex(corpus(), name);
    CHECK_MESSAGE(cx.is_chain_complex(), name);
    CHECK_MESSAGE(dual_conjugate_transpose(cx).is_chain_complex(), name);
    if (&cx.context() == &Pi()) {
      CHECK_MESSAGE(restrict_to_index_two(cx).is_chain_complex(), name);
      CHECK_MESSAGE(push_forward(cx, homs::retraction_b()).is_chain_complex(), name);
      CHECK_MESSAGE(push_forward(cx, homs::abelianization()).is_chain_complex(), name);
    }
  }
  const auto y = assemble_complex(corpus(), "y");
  for (int d = 2; d <= 3; ++d) {
    for (std::size_t i = 0; i < y.rank(d); ++i) {
      for (const auto& x : y.boundary(y.boundary(y.cell(d, i))).coords) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("diagonal bases") {
  const auto x = assemble_complex(corpus(), "x");
  CHECK(x.differential(2).is_diagonal());
  CHECK(x.differential(2)(0, 0) == el(S3(), "a+1"));
  CHECK(x.differential(2)(1, 1) == el(S3(), "b^2*a+a-1"));
  const auto y = assemble_complex(corpus(), "y");
  CHECK(y.differential(2).is_diagonal());
  CHECK(y.differential(2)(2, 2) == el(Pi(), "c^2*a+a-1"));
  const auto k = attach_top_cell(build_fox_lyndon(corpus().presentation("s3")),
                                 corpus().chain("psi").coords);
  CHECK(change_basis(k, BasisChange::identity()) == k);
  // A forward matrix whose stated inverse is wrong is rejected.
  auto bad = corpus().basis("x_ef").at(1).value();
  bad.inverse = bad.forward;
  CHECK_THROWS_AS(change_basis(k, BasisChange({std::nullopt, bad})), NotInvertible);
}

TEST_CASE("self-duality") {
  for (const char* name : {"x", "y", "z"}) {
    const auto rep = self_duality_check(assemble_complex(corpus(), name));
    CHECK_MESSAGE(rep.ok(), name << ": " << rep.detail);
  }
  const auto x = assemble_complex(corpus(), "x");
  CHECK(dual_conjugate_transpose(dual_conjugate_transpose(x)) == x);

  // Doubling psi breaks the transpose equality.
  const auto k = build_fox_lyndon(corpus().presentation("s3"));
  auto psi2 = corpus().chain("psi").coords;
  for (auto& v : psi2) v *= 2;
  const auto doubled = change_basis(attach_top_cell(k, psi2), corpus().basis("x_ef"));
  const auto rep = self_duality_check(doubled);
  CHECK(rep.d2_hermitian);
  CHECK_FALSE(rep.d3_is_transpose_of_d1);

  // So does any single-term perturbation of d3.
  std::mt19937_64 rng(5);
  const auto all = enumerate(S3(), std::nullopt);
  for (int t = 0; t < 20; ++t) {
    auto d = x.differentials();
    const std::size_t row = rng() % 2;
    d[2](row, 0) += RingElement(all[rng() % all.size()], 1 + static_cast<long>(rng() % 3));
    const FreeComplex perturbed(S3(), x.ranks(), d);
    CHECK_FALSE(self_duality_check(perturbed).ok());
  }
}

TEST_CASE("index-two restriction and push-forward") {
  const auto y = assemble_complex(corpus(), "y");
  const auto r = restrict_to_index_two(y);
  CHECK(r.ranks() == std::vector<std::size_t>{2, 6, 6, 2});
  CHECK(&r.context() == &GroupContext::get(GroupId::PiPrime));
  const auto ab = push_forward(y, homs::abelianization());
  CHECK(ab.ranks() == y.ranks());
}

TEST_CASE("tensor products and the Koszul sign") {
  const auto y = assemble_complex(corpus(), "y");
  const auto a = generator(Pi(), Generator::a);
  const Chain e1 = y.cell(1, 0);
  const Chain ae1 = translate(a, e1);
  CHECK(transpose_tau(tensor(e1, ae1)) == tensor(ae1, e1) * -1);
  CHECK(transpose_tau(transpose_tau(tensor(y.cell(2, 1), ae1))) == tensor(y.cell(2, 1), ae1));
  // d(x (x) y) = dx (x) y when y has degree 0.
  CHECK(tensor_boundary(tensor(e1, y.cell(0, 0)), y) ==
        tensor(y.boundary(e1), y.cell(0, 0)));
  const auto ball = enumerate(Pi(), 1);
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q + p <= 4 && q <= 3; ++q) {
      for (std::size_t i = 0; i < y.rank(p); ++i) {
        for (std::size_t j = 0; j < y.rank(q); ++j) {
          for (const auto& g : ball) {
            const auto t = tensor(y.cell(p, i), translate(g, y.cell(q, j)));
            CHECK(tensor_boundary(tensor_boundary(t, y), y).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("diagonal tables") {
  for (const auto& [cx_name, table_name] : {std::pair{"x", "diagonal_x"}, std::pair{"y", "diagonal_y"}}) {
    const auto cx = assemble_complex(corpus(), cx_name);
    const auto table = corpus().diagonal(table_name);
    CHECK(verify_degrees(table).ok());
    CHECK(verify_counit(table, cx).ok());
    CHECK(verify_chain_map(table, cx).ok());
    // Equivariance of the extension to translated cells.
    const auto ball = enumerate(cx.context(), cx.context().is_finite() ? std::optional<int>{}
                                                                         : std::optional<int>{2});
    for (int d = 0; d <= table.max_degree(); ++d) {
      for (std::size_t i = 0; i < cx.rank(d); ++i) {
        for (const auto& g : ball) {
          CHECK(table.of_chain(translate(g, cx.cell(d, i))) ==
                act_diagonal(g, table.of_chain(cx.cell(d, i))));
        }
      }
    }
  }
  // Dropping a term from a table entry breaks the chain-map property.
  const auto y = assemble_complex(corpus(), "y");
  auto table = corpus().diagonal("diagonal_y");
  auto& f1 = table.cells.at({2, 0});
  REQUIRE_FALSE(f1.is_zero());
  const auto [key, c] = *f1.terms().begin();
  f1.add_term(key, -c);
  CHECK_FALSE(verify_chain_map(table, y).ok());
}

TEST_CASE("cellular maps") {
  const auto x = assemble_complex(corpus(), "x");
  const auto y = assemble_complex(corpus(), "y");
  for (const char* name : {"inclusion_b", "inclusion_c", "retraction_b", "retraction_c"}) {
    const auto m = corpus().cellular_map(name);
    const auto hom = std::string(name) == "inclusion_b"    ? homs::inclusion_b()
                     : std::string(name) == "inclusion_c"  ? homs::inclusion_c()
                     : std::string(name) == "retraction_b" ? homs::retraction_b()
                                                           : homs::retraction_c();
    auto fox = [&](const std::string& p) { return build_fox_lyndon(corpus().presentation(p)); };
    const ChainMap f(fox(m.source), fox(m.target), hom, m.cells);
    CHECK_MESSAGE(verify_chain_map(f).ok(), name);
    const bool from_s3 = m.source == "s3";
    const ChainMap g = f.transported(from_s3 ? x : y, corpus().basis(from_s3 ? "x_ef" : "y_ef"),
                                     from_s3 ? y : x, corpus().basis(from_s3 ? "y_ef" : "x_ef"));
    CHECK_MESSAGE(verify_chain_map(g).ok(), name);
    if (from_s3) {
      CHECK_MESSAGE(verify_compatibility(g, corpus().diagonal("diagonal_x"),
                                         corpus().diagonal("diagonal_y"))
                        .ok(),
                    name);
    }
  }
}
