// Acceptance run: one PASS/FAIL line per criterion, with the time bound used.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>

#include "oracles.hpp"
#include "pd3/bar.hpp"
#include "pd3/checks.hpp"
#include "pd3/corpus.hpp"
#include "pd3/homology.hpp"
#include "pd3/lifting.hpp"
#include "pd3/r_module.hpp"
#include "pd3/tensor.hpp"

using namespace pd3;

namespace {

const Catalog& corpus() { return Catalog::embedded(); }

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

std::string show(const std::vector<AbelianGroupDescriptor>& hs) {
  std::string out = "(";
  for (std::size_t i = 0; i < hs.size(); ++i) out += (i ? ", " : "") + hs[i].to_string();
  return out + ")";
}

AbelianGroupDescriptor group(std::size_t free_rank, std::vector<long> torsion) {
  AbelianGroupDescriptor d;
  d.free_rank = free_rank;
  for (long t : torsion) d.torsion.push_back(t);
  return d;
}

const std::vector<AbelianGroupDescriptor> kSphere = {group(1, {}), group(0, {}), group(0, {}),
                                                     group(1, {})};
const std::vector<AbelianGroupDescriptor> kLens = {group(1, {}), group(0, {2}), group(0, {}),
                                                   group(1, {})};

Outcome universal_cover() {
  Outcome o;
  const auto h = homology(flatten_complex(assemble_complex(corpus(), "x")));
  o.require(h == kSphere, "H(X~) = " + show(h));
  o.require(h == corpus().expected("homology_x_universal").groups, "corpus value differs");
  return o;
}

Outcome integral_homology() {
  Outcome o;
  for (const char* name : {"x", "y"}) {
    const auto h = homology(augment_complex(assemble_complex(corpus(), name)));
    o.require(h == kLens, std::string("H(") + name + ") = " + show(h));
  }
  return o;
}

Outcome fox_matrices() {
  Outcome o;
  o.require(build_fox_lyndon(corpus().presentation("s3")) == corpus().complex("k_displayed"),
            "S3 matrices differ");
  o.require(build_fox_lyndon(corpus().presentation("pi")) == corpus().complex("l_displayed"),
            "Pi matrices differ");
  return o;
}

Outcome self_duality() {
  Outcome o;
  for (const char* name : {"x", "y", "z"}) {
    const auto cx = assemble_complex(corpus(), name);
    const auto rep = self_duality_check(cx);
    o.require(cx.differential(2).is_diagonal(), std::string(name) + ": d2 not diagonal");
    o.require(rep.ok(), std::string(name) + ": " + rep.detail);
  }
  return o;
}

Outcome annihilators() {
  Outcome o;
  const auto& s3 = GroupContext::get(GroupId::S3);
  const std::vector<std::pair<const char*, const char*>> pairs = {{"a+1", "ann_f1"},
                                                                  {"b^2*a+a-1", "ann_f2"}};
  for (const auto& [d, gen] : pairs) {
    const IntMatrix ann = annihilator_lattice(parse_element(s3, d));
    o.require(ann.cols() == 6, "lattice not 6-dimensional");
    o.require(lattices_equal(ann, principal_ideal_lattice(corpus().element(gen))),
              std::string("Ann(") + d + ") differs");
  }
  return o;
}

Outcome lifting() {
  Outcome o;
  const auto rep = lifting_check(assemble_complex(corpus(), "x"), corpus().element("lift_p"),
                                 corpus().element("lift_q"), corpus().element("ann_f1"),
                                 corpus().element("ann_f2"));
  o.require(rep.cases.size() == 9, std::to_string(rep.cases.size()) + " cases");
  for (const auto& c : rep.cases) o.require(c.ok, "(" + c.p + ", " + c.q + "): " + c.residual);
  return o;
}

Outcome h3_generator() {
  Outcome o;
  const auto rep = h3_generator_check(assemble_complex(corpus(), "x"), corpus().element("beta"),
                                      corpus().element("nu"));
  o.require(rep.kernel_rank == 1, "kernel rank " + std::to_string(rep.kernel_rank));
  o.require(rep.generator_content == 1, "generator not primitive");
  o.require(rep.nu_is_beta_times_a_plus_1, "nu != beta (a+1)");
  o.require(rep.nu_support == 6, "nu support " + std::to_string(rep.nu_support));
  o.require(rep.ok(), rep.detail);
  return o;
}

GroupHom hom_named(const std::string& name) {
  if (name == "retraction_b") return homs::retraction_b();
  if (name == "retraction_c") return homs::retraction_c();
  if (name == "inclusion_b") return homs::inclusion_b();
  return homs::inclusion_c();
}

// The corpus map moved into the diagonal bases of X and Y.
ChainMap diagonal_map(const std::string& name) {
  const auto m = corpus().cellular_map(name);
  auto fox = [](const std::string& p) { return build_fox_lyndon(corpus().presentation(p)); };
  auto full = [](const std::string& p) { return assemble_complex(corpus(), p == "s3" ? "x" : "y"); };
  auto basis = [](const std::string& p) { return corpus().basis(p == "s3" ? "x_ef" : "y_ef"); };
  const ChainMap f(fox(m.source), fox(m.target), hom_named(name), m.cells);
  return f.transported(full(m.source), basis(m.source), full(m.target), basis(m.target));
}

Outcome diagonals() {
  Outcome o;
  const auto tx = corpus().diagonal("diagonal_x");
  const auto ty = corpus().diagonal("diagonal_y");
  for (const auto& [name, table] : {std::pair{"x", &tx}, std::pair{"y", &ty}}) {
    const auto cx = assemble_complex(corpus(), name);
    for (const auto& rep : {verify_counit(*table, cx), verify_chain_map(*table, cx)}) {
      for (const auto& f : rep.failures) o.require(false, std::string(name) + " " + rep.mode + " " + f.cell);
    }
  }
  for (const std::string name : {"retraction_b", "retraction_c"}) {
    const auto rep = verify_compatibility(diagonal_map(name), ty, tx);
    std::string cells;
    for (const auto& f : rep.failures) cells += " " + f.cell;
    o.require(rep.ok(), name + " residual on" + cells);
  }
  return o;
}

Outcome cup_square() {
  Outcome o;
  const auto b = betti_mod_p(augment_complex(assemble_complex(corpus(), "y")), 2);
  o.require(b == std::vector<std::size_t>{1, 1, 1, 1}, "mod-2 Betti numbers differ");
  const auto want = corpus().expected("betti_y_f2").values;
  o.require(std::vector<long>(b.begin(), b.end()) == want, "corpus value differs");
  const auto y8 = run_check("Y8", corpus());
  o.require(y8.status == Status::Pass, "Y8 " + y8.status_string());
  return o;
}

Outcome truncated_searches() {
  Outcome o;
  CheckOptions opts;
  opts.max_length = 5;
  for (const char* id : {"Y5", "Y6"}) {
    const auto r = run_check(id, corpus(), opts);
    o.require(r.status == Status::Partial && r.radius == 5, std::string(id) + " " + r.status_string());
  }
  return o;
}

Outcome orientability() {
  Outcome o;
  const auto rep = orientability_check(build_fox_lyndon(corpus().presentation("pi")).differential(2));
  o.require(rep.i_matches_model, "I(pi) invariants " + rep.i.to_string());
  o.require(rep.cases.size() == 2, "expected w = +1 and w = -1");
  for (const auto& c : rep.cases) {
    o.require(c.j_matches_model, "J at w = " + std::to_string(c.w) + " off model");
    o.require(c.matches_i == (c.w == 1), "match pattern wrong at w = " + std::to_string(c.w));
  }
  return o;
}

Outcome group_homology() {
  Outcome o;
  o.require(bar_homology(GroupContext::get(GroupId::Z2), 3) == group(0, {2}), "H3(Z/2)");
  o.require(bar_homology(GroupContext::get(GroupId::S3), 3) == group(0, {6}), "H3(S3)");
  const auto mv = mayer_vietoris_h3();
  o.require(mv.primary_parts() == std::vector<Integer>{2, 3, 3}, "H3(pi) = " + mv.to_string());
  return o;
}

Outcome double_cover() {
  Outcome o;
  for (const char* name : {"y", "z"}) {
    const auto h = homology(augment_complex(restrict_to_index_two(assemble_complex(corpus(), name))));
    o.require(h.at(1) == group(0, {3, 3}), std::string("H1(") + name + "') = " + h.at(1).to_string());
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  std::size_t failures = 0;
  for (const auto id : {GroupId::S3, GroupId::Pi}) {
    if (!check_confluence(GroupContext::get(id)).confluent) ++failures;
  }
  const auto& free = GroupContext::get(GroupId::Free);
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const Word w = parse_word(oracle::random_free_word(rng, "abc", 12));
    RingElement sum(free);
    for (const auto x : {Generator::a, Generator::b, Generator::c}) {
      sum += fox_derivative(w, x, free) * (RingElement(generator(free, x)) - RingElement(free, 1));
    }
    if (!(sum == RingElement(normalize(free, w)) - RingElement(free, 1))) ++failures;
  }
  for (const char* name : {"k", "l", "x", "y", "z"}) {
    const auto cx = assemble_complex(corpus(), name);
    if (!cx.is_chain_complex()) ++failures;
    if (!dual_conjugate_transpose(cx).is_chain_complex()) ++failures;
    if (&cx.context() == &GroupContext::get(GroupId::Pi) &&
        !restrict_to_index_two(cx).is_chain_complex()) {
      ++failures;
    }
  }
  std::uniform_int_distribution<int> entry(-9, 9);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a(dim(rng), dim(rng));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    }
    const auto s = smith_normal_form(a);
    bool good = s.U * a * s.V == s.D && s.U * s.U_inv == IntMatrix::identity(a.rows()) &&
                s.V * s.V_inv == IntMatrix::identity(a.cols());
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      good = good && d[i] > 0 && (i == 0 || d[i] % d[i - 1] == 0);
    }
    std::vector<std::vector<mpz_class>> rows(a.rows(), std::vector<mpz_class>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
    }
    good = good && s.rank == oracle::bareiss_rank(rows);
    if (!good) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " property failures");
  return o;
}

Outcome mutation_audit() {
  Outcome o;
  const auto sites = corpus().mutation_sites();
  constexpr std::size_t kSamples = 20;
  SuiteOptions opts;
  opts.max_length = 3;
  opts.jobs = 4;
  std::size_t caught = 0;
  for (std::size_t k = 0; k < kSamples; ++k) {
    const MutationSite& site = sites[(2 * k + 1) * sites.size() / (2 * kSamples)];
    const Report r = run_suite(corpus().with_mutation(site), opts);
    if (r.count(Status::Fail) > 0) {
      ++caught;
    } else {
      o.require(false, "undetected: " + site.describe());
    }
  }
  o.note = std::to_string(caught) + "/" + std::to_string(kSamples) + " caught" +
           (o.note.empty() ? "" : "; " + o.note);
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double bound_ms;  // 0: no time bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "X5 universal cover homology (Z, 0, 0, Z)", 1000, universal_cover},
      {2, "X5b/Y7 integral homology of X and Y", 1000, integral_homology},
      {3, "X1/Y1 Fox-Lyndon matrices equal the displayed ones", 0, fox_matrices},
      {4, "X3/Y2/X4/Y3/Z1 hermitian diagonal d2, d3 = transposed d1", 0, self_duality},
      {5, "X6 annihilator lattices", 1000, annihilators},
      {6, "X7 lifting identity on 9 basis pairs", 0, lifting},
      {7, "X8 H3 generator nu.g, nu = beta(a+1)", 0, h3_generator},
      {8, "Y9/Y10 counit, chain map, retraction compatibility", 5000, diagonals},
      {9, "Y8 mod-2 Betti numbers and u cup u", 0, cup_square},
      {10, "Y5/Y6 truncated searches at L = 5", 300000, truncated_searches},
      {11, "O1 orientation character w = 1 forced", 0, orientability},
      {12, "H1 bar homology and Mayer-Vietoris", 60000, group_homology},
      {13, "Y11 H1 of the double covers", 0, double_cover},
      {14, "property suites", 0, property_suites},
      {15, "mutation audit, 20 samples", 0, mutation_audit},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (c.bound_ms > 0 && ms >= c.bound_ms) o.require(false, "over time bound");
    if (!o.ok) ++failed;
    char timing[64];
    if (c.bound_ms > 0) {
      std::snprintf(timing, sizeof timing, "%.1f ms < %.0f ms", ms, c.bound_ms);
    } else {
      std::snprintf(timing, sizeof timing, "%.1f ms", ms);
    }
    std::printf("criterion %2d %s  %s  [%s]%s%s\n", c.number, o.ok ? "PASS" : "FAIL", c.name,
                timing, o.note.empty() ? "" : "  ", o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed;
}
