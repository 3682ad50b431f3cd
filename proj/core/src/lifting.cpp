#include "pd3/lifting.hpp"

namespace pd3 {

bool LiftingReport::ok() const {
  if (cases.empty()) return false;
  for (const auto& c : cases) {
    if (!c.ok) return false;
  }
  return true;
}

LiftingReport lifting_check(const FreeComplex& cx, const RingElement& lift_p,
                            const RingElement& lift_q, const RingElement& ann1,
                            const RingElement& ann2) {
  if (cx.top_degree() != 3 || cx.rank(2) != 2 || cx.rank(3) != 1) {
    throw ShapeMismatch("lifting check expects ranks (.., 2, 1) in degrees 2, 3");
  }
  const auto& ctx = cx.context();
  const std::vector<RingElement> basis = {RingElement(ctx, 1), parse_element(ctx, "b"),
                                          parse_element(ctx, "b^2")};
  LiftingReport report;
  for (const auto& p : basis) {
    for (const auto& q : basis) {
      const RingElement x = p * lift_p + q * lift_q;
      const Chain lhs = cx.boundary(Chain{3, {x}});
      const Chain rhs{2, {p * ann1, q * ann2}};
      LiftingCase c{format_element(p), format_element(q), lhs == rhs, ""};
      if (!c.ok) {
        c.residual = "lhs " + format_chain(lhs, cx.labels(2)) + ", rhs " +
                     format_chain(rhs, cx.labels(2));
      }
      report.cases.push_back(std::move(c));
    }
  }
  return report;
}

bool H3GeneratorReport::ok() const {
  return nu_is_beta_times_a_plus_1 && nu_is_group_sum && nu_support == 6 && kernel_rank == 1 &&
         generator_is_nu && generator_content == 1 && transfer_is_nu_g;
}

H3GeneratorReport h3_generator_check(const FreeComplex& cx, const RingElement& beta,
                                     const RingElement& nu) {
  const auto& ctx = cx.context();
  H3GeneratorReport r;
  r.nu_is_beta_times_a_plus_1 = nu == beta * parse_element(ctx, "a + 1");
  RingElement group_sum(ctx);
  const auto elements = enumerate(ctx, std::nullopt);
  for (const auto& s : elements) group_sum.add_term(s, 1);
  r.nu_is_group_sum = nu == group_sum;
  r.nu_support = nu.support_size();

  const IntMatrix d3 = flatten(cx.differential(3));
  const IntMatrix kernel = kernel_basis(d3);
  r.kernel_rank = kernel.cols();
  const auto nu_coords = coordinates(nu);
  if (r.kernel_rank == 1) {
    r.generator_content = gcd_of_entries(kernel);
    // Columns of the flattened matrix are (g . top cell) in enumeration
    // order, which is also the coordinate order of nu.
    int sign = 0;
    bool match = kernel.rows() == nu_coords.size();
    for (std::size_t i = 0; match && i < kernel.rows(); ++i) {
      if (sign == 0 && nu_coords[i] != 0) sign = kernel(i, 0) == nu_coords[i] ? 1 : -1;
      match = kernel(i, 0) == sign * nu_coords[i];
    }
    r.generator_is_nu = match && sign != 0;
  }
  // Transfer of [1 (x) g]: the sum of all deck translates of the top cell.
  RingElement transfer(ctx);
  for (const auto& s : elements) transfer += left_translate(s, RingElement(ctx, 1));
  const Chain tr{3, {transfer}};
  const Chain boundary = cx.boundary(tr);
  bool cycle = true;
  for (const auto& x : boundary.coords) cycle = cycle && x.is_zero();
  r.transfer_is_nu_g = cycle && transfer == nu;
  r.detail = "ker flatten(d3) rank " + std::to_string(r.kernel_rank) + ", generator content " +
             r.generator_content.get_str() + ", |supp nu| = " + std::to_string(r.nu_support);
  return r;
}

}  // namespace pd3
