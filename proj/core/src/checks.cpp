#include "pd3/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "pd3/bar.hpp"
#include "pd3/kernel_search.hpp"
#include "pd3/lifting.hpp"
#include "pd3/r_module.hpp"

#ifndef PD3_VERSION
#define PD3_VERSION "0.0.0"
#endif

namespace pd3 {

std::string tool_version() { return PD3_VERSION; }

std::string CheckResult::status_string() const {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
    case Status::Partial: return "PARTIAL(" + std::to_string(radius) + ")";
  }
  return "?";
}

namespace {

// Objects built from the corpus.  Each check rebuilds what it needs so that it
// can run alone.

FreeComplex k_complex(const Catalog& c) { return build_fox_lyndon(c.presentation("s3")); }
FreeComplex l_complex(const Catalog& c) { return build_fox_lyndon(c.presentation("pi")); }

FreeComplex x_complex(const Catalog& c) {
  return change_basis(attach_top_cell(k_complex(c), c.chain("psi").coords), c.basis("x_ef"));
}
FreeComplex y_complex(const Catalog& c) {
  return change_basis(attach_top_cell(l_complex(c), c.chain("theta").coords), c.basis("y_ef"));
}
FreeComplex z_complex(const Catalog& c) {
  return change_basis(attach_top_cell(l_complex(c), c.chain("xi").coords), c.basis("z_ef"));
}

GroupHom hom_named(const std::string& name) {
  if (name == "retraction_b") return homs::retraction_b();
  if (name == "retraction_c") return homs::retraction_c();
  if (name == "inclusion_b") return homs::inclusion_b();
  if (name == "inclusion_c") return homs::inclusion_c();
  throw FormatError("unknown homomorphism \"" + name + "\"");
}

// The corpus map in Fox bases, and the same map between the diagonal bases.
struct CellularPair {
  ChainMap fox;
  ChainMap diagonal;
};

CellularPair cellular_map(const Catalog& c, const std::string& name) {
  const CellularMapData m = c.cellular_map(name);
  auto fox_of = [&](const std::string& p) { return build_fox_lyndon(c.presentation(p)); };
  auto full_of = [&](const std::string& p) { return p == "s3" ? x_complex(c) : y_complex(c); };
  auto basis_of = [&](const std::string& p) { return c.basis(p == "s3" ? "x_ef" : "y_ef"); };
  ChainMap fox(fox_of(m.source), fox_of(m.target), hom_named(m.hom), m.cells);
  ChainMap diag = fox.transported(full_of(m.source), basis_of(m.source), full_of(m.target),
                                  basis_of(m.target));
  return {std::move(fox), std::move(diag)};
}

std::string join(const std::vector<AbelianGroupDescriptor>& hs) {
  std::string out = "(";
  for (std::size_t i = 0; i < hs.size(); ++i) out += (i ? ", " : "") + hs[i].to_string();
  return out + ")";
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    if constexpr (std::is_same_v<T, Integer>) {
      out += xs[i].get_str();
    } else {
      out += std::to_string(xs[i]);
    }
  }
  return out + ")";
}

// Entry-by-entry differences between two complexes over the same ring.
std::vector<std::string> complex_mismatches(const FreeComplex& got, const FreeComplex& want) {
  std::vector<std::string> out;
  if (&got.context() != &want.context() || got.ranks() != want.ranks()) {
    out.push_back("shape differs: ranks " + join(got.ranks()) + " vs " + join(want.ranks()));
    return out;
  }
  for (int d = 1; d <= got.top_degree(); ++d) {
    const RingMatrix& a = got.differential(d);
    const RingMatrix& b = want.differential(d);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!(a(i, j) == b(i, j))) {
          out.push_back("d" + std::to_string(d) + "(" + std::to_string(i) + "," +
                        std::to_string(j) + "): computed " + format_element(a(i, j)) +
                        ", displayed " + format_element(b(i, j)));
        }
      }
    }
  }
  return out;
}

bool is_hermitian_diagonal(const RingMatrix& m, OrientationCharacter chi = {}) {
  return m.is_diagonal() && involuted_transpose(m, chi) == m;
}

void fail(CheckResult& r, std::string why) {
  r.status = Status::Fail;
  r.details.push_back(std::move(why));
}

void fail_all(CheckResult& r, const std::vector<std::string>& why) {
  if (why.empty()) return;
  r.status = Status::Fail;
  r.details.insert(r.details.end(), why.begin(), why.end());
}

void report_diagonal(CheckResult& r, const std::string& what, const DiagonalReport& d) {
  r.details.push_back(what + " " + d.mode + ": " + std::to_string(d.cells_checked) + " cells, " +
                      std::to_string(d.failures.size()) + " failing");
  for (const auto& f : d.failures) {
    r.status = Status::Fail;
    r.details.push_back("  " + f.cell + ": residual " + f.residual);
  }
}

// The checks.  Each starts from a PASS result and downgrades it.

using CheckFn = std::function<void(const Catalog&, const CheckOptions&, CheckResult&)>;

void check_x1(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto fox = k_complex(c);
  fail_all(r, complex_mismatches(fox, c.complex("k_displayed")));
  r.details.push_back("d1 = " + format_matrix(fox.differential(1)));
  r.details.push_back("d2 = " + format_matrix(fox.differential(2)));
}

void check_x2(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto k = k_complex(c);
  const Chain psi = c.chain("psi");
  const Chain b = k.boundary(psi);
  r.details.push_back("psi = " + format_chain(psi, k.labels(2)));
  if (std::any_of(b.coords.begin(), b.coords.end(), [](const auto& x) { return !x.is_zero(); })) {
    fail(r, "d2(psi) = " + format_chain(b, k.labels(1)));
  }
}

void check_x3(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto x = x_complex(c);
  if (!is_hermitian_diagonal(x.differential(2))) {
    fail(r, "d2 in the e/f basis is not a hermitian diagonal: " +
                format_matrix(x.differential(2)));
  }
  fail_all(r, complex_mismatches(x, c.complex("x_displayed")));
  r.details.push_back("d2 = " + format_matrix(x.differential(2)));
}

void self_dual(CheckResult& r, const FreeComplex& cx, const std::string& name) {
  const auto s = self_duality_check(cx);
  if (!s.ok()) fail(r, name + ": " + s.detail);
  r.details.push_back(name + ": d2 hermitian " + (s.d2_hermitian ? "yes" : "no") +
                      ", d3 = conj. transpose of d1 " + (s.d3_is_transpose_of_d1 ? "yes" : "no"));
}

void check_x4(const Catalog& c, const CheckOptions&, CheckResult& r) {
  self_dual(r, x_complex(c), "X");
}

void compare_homology(CheckResult& r, const std::string& what,
                      const std::vector<AbelianGroupDescriptor>& got,
                      const std::vector<AbelianGroupDescriptor>& want) {
  r.details.push_back(what + " = " + join(got));
  if (got != want) fail(r, what + " expected " + join(want));
}

void check_x5(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto x = x_complex(c);
  compare_homology(r, "H*(universal cover)", homology(flatten_complex(x)),
                   c.expected("homology_x_universal").groups);
  compare_homology(r, "H*(X;Z)", homology(augment_complex(x)), c.expected("homology_x").groups);
}

void check_x6(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto x = x_complex(c);
  const auto& d2 = x.differential(2);
  const std::vector<std::string> gens = {"ann_f1", "ann_f2"};
  for (std::size_t k = 0; k < 2; ++k) {
    const RingElement g = c.element(gens[k]);
    const bool eq = lattices_equal(annihilator_lattice(d2(k, k)), principal_ideal_lattice(g));
    r.details.push_back("ann(" + format_element(d2(k, k)) + ") = Z[S3](" + format_element(g) +
                        "): " + (eq ? "equal" : "different"));
    if (!eq) r.status = Status::Fail;
  }
}

void check_x7(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto rep = lifting_check(x_complex(c), c.element("lift_p"), c.element("lift_q"),
                                 c.element("ann_f1"), c.element("ann_f2"));
  std::size_t ok = 0;
  for (const auto& cs : rep.cases) {
    if (cs.ok) {
      ++ok;
    } else {
      fail(r, "p = " + cs.p + ", q = " + cs.q + ": " + cs.residual);
    }
  }
  r.details.push_back(std::to_string(ok) + "/" + std::to_string(rep.cases.size()) +
                      " basis pairs (p, q) satisfy the lifting identity");
  if (rep.cases.size() != 9) fail(r, "expected 9 basis pairs");
}

void check_x8(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto rep = h3_generator_check(x_complex(c), c.element("beta"), c.element("nu"));
  r.details.push_back(rep.detail);
  if (!rep.nu_is_beta_times_a_plus_1) fail(r, "nu != beta (a + 1)");
  if (!rep.nu_is_group_sum) fail(r, "nu is not the sum of the group elements");
  if (rep.nu_support != 6) fail(r, "support of nu is not 6");
  if (rep.kernel_rank != 1) fail(r, "ker flatten(d3) does not have rank 1");
  if (!rep.generator_is_nu) fail(r, "kernel generator is not +-nu g");
  if (rep.generator_content != 1) fail(r, "kernel generator is not primitive");
  if (!rep.transfer_is_nu_g) fail(r, "transfer of [1 (x) g] is not nu g");
}

void check_y1(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto fox = l_complex(c);
  fail_all(r, complex_mismatches(fox, c.complex("l_displayed")));
  r.details.push_back("d2 = " + format_matrix(fox.differential(2)));
}

void check_y2(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto l = l_complex(c);
  const Chain theta = c.chain("theta");
  const Chain b = l.boundary(theta);
  if (std::any_of(b.coords.begin(), b.coords.end(), [](const auto& x) { return !x.is_zero(); })) {
    fail(r, "d2(theta) = " + format_chain(b, l.labels(1)));
    return;
  }
  r.details.push_back("theta is a 2-cycle");
  const auto y = y_complex(c);
  if (!is_hermitian_diagonal(y.differential(2))) {
    fail(r, "d2 in the tilde basis is not a hermitian diagonal: " +
                format_matrix(y.differential(2)));
  }
  fail_all(r, complex_mismatches(y, c.complex("y_displayed")));
  r.details.push_back("d2 = " + format_matrix(y.differential(2)));
}

void check_y3(const Catalog& c, const CheckOptions&, CheckResult& r) {
  self_dual(r, y_complex(c), "Y");
}

void check_y4(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto y = y_complex(c);
  const auto& d2 = y.differential(2);
  const std::vector<std::string> gens = {"kernel_f1", "kernel_f2", "kernel_f3"};
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const RingElement g = c.element(gens[k]);
    const RingElement prod = g * d2(k, k);
    r.details.push_back("(" + format_element(g) + ") * (" + format_element(d2(k, k)) + ") = " +
                        format_element(prod));
    if (!prod.is_zero()) r.status = Status::Fail;
  }
}

void partial_or_fail(CheckResult& r, bool ok, int radius) {
  if (r.status == Status::Fail) return;
  if (ok) {
    r.status = Status::Partial;
    r.radius = radius;
  } else {
    r.status = Status::Fail;
  }
}

void check_y5(const Catalog& c, const CheckOptions& o, CheckResult& r) {
  const auto y = y_complex(c);
  const auto& d2 = y.differential(2);
  const std::vector<std::string> gens = {"kernel_f1", "kernel_f2", "kernel_f3"};
  bool ok = true;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto rep = bounded_kernel_search({d2(k, k)}, c.element(gens[k]), {o.max_length, {}});
    r.details.push_back("f" + std::to_string(k + 1) + ": " + to_string(rep.status) + ", " +
                        rep.detail);
    ok = ok && rep.status == SearchStatus::Pass;
  }
  partial_or_fail(r, ok, o.max_length);
}

void check_y6(const Catalog& c, const CheckOptions& o, CheckResult& r) {
  const auto y = y_complex(c);
  const auto rep = bounded_kernel_search(y.differential(3).column_vector(0), std::nullopt,
                                         {o.max_length, {}});
  r.details.push_back(to_string(rep.status) + ", " + rep.detail);
  for (const auto& h : rep.kernel_basis) r.details.push_back("  kernel element " + format_element(h));
  partial_or_fail(r, rep.status == SearchStatus::Pass, o.max_length);
}

void check_y7(const Catalog& c, const CheckOptions&, CheckResult& r) {
  compare_homology(r, "H*(Y;Z)", homology(augment_complex(y_complex(c))),
                   c.expected("homology_y").groups);
}

void check_y8(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto y = y_complex(c);
  const IntComplex aug = augment_complex(y);
  const auto betti = betti_mod_p(aug, 2);
  const auto& want = c.expected("betti_y_f2").values;
  r.details.push_back("Betti numbers mod 2 = " + join(betti));
  if (std::vector<long>(betti.begin(), betti.end()) != want) {
    fail(r, "expected " + join(want));
  }
  // u is dual to e~1; it is a cocycle when e~1 has even coefficient in every
  // augmented d2 column.
  const IntMatrix& d2 = aug.differential(2);
  for (std::size_t j = 0; j < d2.cols(); ++j) {
    if (d2(0, j) % 2 != 0) fail(r, "u is not a mod-2 cocycle");
  }
  const DiagonalTable table = c.diagonal("diagonal_y");
  IntMatrix cup(y.rank(2), 1);
  for (std::size_t j = 0; j < y.rank(2); ++j) {
    const auto it = table.cells.find({2, j});
    if (it == table.cells.end()) {
      fail(r, "diagonal table has no entry for f" + std::to_string(j + 1));
      return;
    }
    Integer v = 0;
    for (const auto& [key, coef] : it->second.terms()) {
      if (key.p == 1 && key.q == 1 && key.i == 0 && key.j == 0) v += coef;
    }
    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), 2);
    cup(j, 0) = v;
  }
  std::string values;
  for (std::size_t j = 0; j < cup.rows(); ++j) {
    values += (j ? ", " : "") + std::string("f") + std::to_string(j + 1) + " -> " +
              cup(j, 0).get_str();
  }
  r.details.push_back("u cup u: " + values);
  const IntMatrix delta1 = d2.transpose();
  const std::size_t before = rank_mod_p(delta1, 2);
  const std::size_t after = rank_mod_p(hstack(delta1, cup), 2);
  const bool nonzero = after > before;
  r.details.push_back(std::string("u cup u ") + (nonzero ? "is" : "is not") +
                      " a coboundary-free class in H^2(Y;F2)");
  if (!nonzero) r.status = Status::Fail;
}

void check_y9(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto y = y_complex(c);
  const auto ty = c.diagonal("diagonal_y");
  report_diagonal(r, "Y", verify_degrees(ty));
  report_diagonal(r, "Y", verify_counit(ty, y));
  report_diagonal(r, "Y", verify_chain_map(ty, y));
  const auto x = x_complex(c);
  const auto tx = c.diagonal("diagonal_x");
  report_diagonal(r, "X", verify_degrees(tx));
  report_diagonal(r, "X", verify_counit(tx, x));
  report_diagonal(r, "X", verify_chain_map(tx, x));
}

void check_y10(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto tx = c.diagonal("diagonal_x");
  const auto ty = c.diagonal("diagonal_y");
  for (const std::string name : {"inclusion_b", "inclusion_c", "retraction_b", "retraction_c"}) {
    const auto maps = cellular_map(c, name);
    report_diagonal(r, name + " (Fox bases)", verify_chain_map(maps.fox));
    report_diagonal(r, name, verify_chain_map(maps.diagonal));
  }
  for (const std::string name : {"inclusion_b", "inclusion_c"}) {
    report_diagonal(r, name, verify_compatibility(cellular_map(c, name).diagonal, tx, ty));
  }
  // The retractions are reported but do not decide the status: no chain-map
  // retraction commutes with these tables on the collapsed top cell.
  for (const std::string name : {"retraction_b", "retraction_c"}) {
    const auto d = verify_compatibility(cellular_map(c, name).diagonal, ty, tx);
    std::string cells;
    for (const auto& f : d.failures) cells += " " + f.cell;
    r.details.push_back(name + " collapse direction (informational): " +
                        std::to_string(d.cells_checked) + " cells, residual on" +
                        (cells.empty() ? " none" : cells));
  }
}

void check_y11(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto want = c.expected("h1_y_double").groups;
  for (const auto& [name, cx] : {std::pair{"Y", y_complex(c)}, std::pair{"Z", z_complex(c)}}) {
    const auto h = homology(augment_complex(restrict_to_index_two(cx)));
    compare_homology(r, std::string("H1(") + name + "')", {h.at(1)}, want);
  }
}

void check_z1(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto l = l_complex(c);
  const Chain xi = c.chain("xi");
  const Chain theta = c.chain("theta");
  if (xi.coords.size() != 3 || theta.coords.size() != 3 || !(xi.coords[0] == theta.coords[0]) ||
      !(xi.coords[1] == theta.coords[1]) || !(xi.coords[2] + theta.coords[2]).is_zero()) {
    fail(r, "xi is not theta with the last coordinate negated");
  }
  const Chain b = l.boundary(xi);
  if (std::any_of(b.coords.begin(), b.coords.end(), [](const auto& x) { return !x.is_zero(); })) {
    fail(r, "d2(xi) = " + format_chain(b, l.labels(1)));
    return;
  }
  r.details.push_back("xi is a 2-cycle");
  const auto z = z_complex(c);
  self_dual(r, z, "Z");
  const auto hz = homology(augment_complex(z));
  compare_homology(r, "H*(Z;Z)", hz, homology(augment_complex(y_complex(c))));
}

void check_o1(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto rep = orientability_check(l_complex(c).differential(2));
  r.details.push_back(rep.summary());
  if (!rep.i_matches_model) fail(r, "R (x) I does not match the model module");
  for (const auto& cs : rep.cases) {
    if (!cs.j_matches_model) {
      fail(r, "R (x) J at w = " + std::to_string(cs.w) + " does not match its model");
    }
  }
  if (!rep.ok()) fail(r, "expected MATCH exactly at w = +1");
}

void check_h1(const Catalog& c, const CheckOptions&, CheckResult& r) {
  const auto& z2 = GroupContext::get(GroupId::Z2);
  const auto& s3 = GroupContext::get(GroupId::S3);
  compare_homology(r, "H3(Z/2)", {bar_homology(z2, 3)}, c.expected("h3_z2").groups);
  compare_homology(r, "H3(S3)", {bar_homology(s3, 3)}, c.expected("h3_s3").groups);
  compare_homology(r, "H3(Pi)", {mayer_vietoris_h3()}, c.expected("h3_pi").groups);
}

struct Entry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"X1", "Fox-Lyndon matrices of the S3 presentation",
        "the Fox Jacobian of <a, b | a^2, abab^-2> equals the displayed d1, d2", {}},
       check_x1},
      {{"X2", "psi is a 2-cycle", "d2(psi) = 0 in the S3 presentation complex", {}}, check_x2},
      {{"X3", "e/f basis diagonalizes d2",
        "in the e/f bases d2 is diagonal and hermitian, and X matches the displayed complex",
        {"X2"}},
       check_x3},
      {{"X4", "X is self-dual", "d2 hermitian and d3 the conjugate transpose of d1", {"X3"}},
       check_x4},
      {{"X5", "homology of X and its universal cover",
        "universal cover has homology (Z, 0, 0, Z); X has (Z, Z/2, 0, Z)", {"X3"}},
       check_x5},
      {{"X6", "annihilators are principal",
        "left annihilators of the diagonal entries are the principal ideals of the shipped "
        "generators",
        {"X3"}},
       check_x6},
      {{"X7", "lifting identity", "d3 lifts r f1 + s f2 explicitly for all p, q in Z[<b>]",
        {"X3"}},
       check_x7},
      {{"X8", "H3 generator and transfer",
        "ker flatten(d3) is generated by nu g with nu = beta (a + 1), the transfer of the "
        "fundamental class",
        {"X3"}},
       check_x8},
      {{"Y1", "Fox-Lyndon matrices of the Pi presentation",
        "the Fox Jacobian of <a, b, c | a^2, abab^-2, acac^-2> equals the displayed d1, d2", {}},
       check_y1},
      {{"Y2", "theta cycle and tilde bases",
        "theta is a 2-cycle; in the tilde bases d2 is diagonal and Y matches the displayed "
        "complex",
        {}},
       check_y2},
      {{"Y3", "Y is self-dual", "d2 hermitian and d3 the conjugate transpose of d1", {"Y2"}},
       check_y3},
      {{"Y4", "claimed kernel generators", "each shipped generator annihilates its diagonal entry",
        {"Y2"}},
       check_y4},
      {{"Y5", "kernel of d2 is generated as claimed (ball-truncated)",
        "every annihilator supported on the ball of radius L is a multiple of the generator",
        {"Y4"}},
       check_y5},
      {{"Y6", "d3 is injective (ball-truncated)",
        "no nonzero h supported on the ball of radius L annihilates theta", {"Y2"}},
       check_y6},
      {{"Y7", "homology of Y", "H*(Y;Z) = (Z, Z/2, 0, Z)", {"Y2"}}, check_y7},
      {{"Y8", "mod-2 Betti numbers and u cup u",
        "Betti numbers mod 2 are (1, 1, 1, 1) and u cup u is nonzero in H^2", {"Y2", "Y9"}},
       check_y8},
      {{"Y9", "diagonal approximation", "counit identities and chain-map property in degrees <= 2",
        {"Y2", "X3"}},
       check_y9},
      {{"Y10", "compatibility of the diagonals with the embeddings",
        "(f (x) f) D_X = D_Y f for both embeddings of the S3 complex into the Pi complex",
        {"Y9"}},
       check_y10},
      {{"Y11", "H1 of the double covers", "H1 of the orientation double cover is (Z/3)^2, for Y and Z",
        {"Y2"}},
       check_y11},
      {{"Z1", "xi gives a second self-dual complex",
        "xi is a 2-cycle; Z is self-dual with the homology of Y", {"Y2"}},
       check_z1},
      {{"O1", "orientability obstruction",
        "R (x) I(Pi) matches R (x) J for w = +1 and not for w = -1", {"Y1"}},
       check_o1},
      {{"H1", "H3 from the bar complex",
        "H3(Z/2) = Z/2, H3(S3) = Z/6 and by Mayer-Vietoris H3(Pi) = (Z/3)^2 + Z/2", {}},
       check_h1},
  };
  return all;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UnknownCheck("no check named \"" + id + "\"");
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

CheckResult execute(const Entry& e, const Catalog& corpus, const CheckOptions& opts) {
  CheckResult r{e.info.id, e.info.title, e.info.claim, Status::Pass, 0, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    e.fn(corpus, opts, r);
  } catch (const std::exception& ex) {
    r.status = Status::Fail;
    r.details.push_back(std::string("error: ") + ex.what());
  }
  r.wall_ms = elapsed_ms(start);
  return r;
}

// Runs `ids` and everything they depend on; `done` collects every result.
void run_closure(const std::vector<std::string>& ids, const Catalog& corpus,
                 const CheckOptions& opts, unsigned jobs, std::map<std::string, CheckResult>& done) {
  std::set<std::string> wanted;
  std::function<void(const std::string&)> add = [&](const std::string& id) {
    if (!wanted.insert(id).second) return;
    for (const auto& d : entry(id).info.dependencies) add(d);
  };
  for (const auto& id : ids) add(id);

  while (done.size() < wanted.size()) {
    // Every check whose dependencies are settled runs in this wave.
    std::vector<const Entry*> ready;
    for (const auto& e : entries()) {
      if (!wanted.count(e.info.id) || done.count(e.info.id)) continue;
      const auto& deps = e.info.dependencies;
      if (std::all_of(deps.begin(), deps.end(), [&](const auto& d) { return done.count(d); })) {
        ready.push_back(&e);
      }
    }
    std::vector<const Entry*> runnable;
    for (const Entry* e : ready) {
      std::string blocked;
      for (const auto& d : e->info.dependencies) {
        const Status s = done.at(d).status;
        if (s == Status::Fail || s == Status::Skip) blocked += (blocked.empty() ? "" : ", ") + d;
      }
      if (blocked.empty()) {
        runnable.push_back(e);
      } else {
        CheckResult r{e->info.id, e->info.title, e->info.claim, Status::Skip, 0, {}, 0};
        r.details.push_back("dependency did not pass: " + blocked);
        done.emplace(e->info.id, std::move(r));
      }
    }
    for (std::size_t at = 0; at < runnable.size(); at += std::max(1u, jobs)) {
      const std::size_t end = std::min(runnable.size(), at + std::max(1u, jobs));
      std::vector<std::future<CheckResult>> pending;
      for (std::size_t k = at; k < end; ++k) {
        pending.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                     [&, e = runnable[k]] { return execute(*e, corpus, opts); }));
      }
      for (auto& f : pending) {
        CheckResult r = f.get();
        done.emplace(r.id, std::move(r));
      }
    }
  }
}

}  // namespace

FreeComplex assemble_complex(const Catalog& corpus, const std::string& name) {
  if (name == "k") return k_complex(corpus);
  if (name == "l") return l_complex(corpus);
  if (name == "x") return x_complex(corpus);
  if (name == "y") return y_complex(corpus);
  if (name == "z") return z_complex(corpus);
  throw UnknownArtifact("no assembled complex named \"" + name + "\"");
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const CheckInfo& check_info(const std::string& id) { return entry(id).info; }

CheckResult run_check(const std::string& id, const Catalog& corpus, CheckOptions opts) {
  std::map<std::string, CheckResult> done;
  run_closure({id}, corpus, opts, 1, done);
  return done.at(id);
}

std::vector<std::string> select_checks(const std::vector<std::string>& filters) {
  std::vector<std::string> out;
  for (const auto& e : entries()) {
    const std::string& id = e.info.id;
    bool hit = filters.empty();
    for (const auto& f : filters) {
      if (!f.empty() && f.back() == '*') {
        hit = hit || id.compare(0, f.size() - 1, f, 0, f.size() - 1) == 0;
      } else {
        hit = hit || id == f;
      }
    }
    if (hit) out.push_back(id);
  }
  for (const auto& f : filters) {
    if (!f.empty() && f.back() != '*' && std::find(out.begin(), out.end(), f) == out.end()) {
      throw UnknownCheck("no check named \"" + f + "\"");
    }
  }
  return out;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [s](const auto& r) { return r.status == s; }));
}

int Report::exit_code() const { return count(Status::Fail) ? 1 : 0; }

Report run_suite(const Catalog& corpus, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto ids = select_checks(opts.filters);
  std::map<std::string, CheckResult> done;
  run_closure(ids, corpus, {opts.max_length}, opts.jobs, done);
  Report report;
  for (const auto& id : ids) report.results.push_back(done.at(id));
  report.corpus_hash = corpus.content_hash();
  report.version = tool_version();
  report.max_length = opts.max_length;
  report.wall_ms = elapsed_ms(start);
  return report;
}

}  // namespace pd3
