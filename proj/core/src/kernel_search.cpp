#include "pd3/kernel_search.hpp"

#include <map>
#include <unordered_map>

#include "pd3/int_matrix.hpp"
#include "pd3/lattice.hpp"

namespace pd3 {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Pass: return "PASS";
    case SearchStatus::Inconclusive: return "INCONCLUSIVE";
    case SearchStatus::Fail: return "FAIL";
  }
  return "?";
}

namespace {

class ElementIndex {
 public:
  std::size_t operator()(const GroupElement& g) {
    auto [it, inserted] = index_.try_emplace(g, index_.size());
    return it->second;
  }

 private:
  std::unordered_map<GroupElement, std::size_t> index_;
};

SparseVector sparse_coordinates(const RingElement& x, ElementIndex& index) {
  SparseVector v;
  for (const auto& [g, c] : x.terms()) v.emplace(index(g), c);
  return v;
}

}  // namespace

KernelSearchReport bounded_kernel_search(const std::vector<RingElement>& d,
                                         const std::optional<RingElement>& claimed,
                                         KernelSearchOptions opts) {
  if (d.empty()) throw ShapeMismatch("bounded_kernel_search needs at least one component");
  if (opts.radius < 0) throw Error("ball radius must be non-negative");
  const auto& ctx = d.front().context();
  KernelSearchReport r;
  r.radius = opts.radius;

  const auto ball = enumerate(ctx, opts.radius);
  r.unknowns = ball.size();

  // Column j holds the coefficients of ball[j] * d_k, rows indexed by
  // (component, group element) pairs as they occur.
  std::map<std::pair<std::size_t, GroupElement>, std::size_t> rows;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns(ball.size());
  for (std::size_t j = 0; j < ball.size(); ++j) {
    for (std::size_t k = 0; k < d.size(); ++k) {
      const RingElement product = left_translate(ball[j], d[k]);
      for (const auto& [g, c] : product.terms()) {
        auto [it, inserted] = rows.try_emplace({k, g}, rows.size());
        columns[j].emplace_back(it->second, c);
      }
    }
  }
  r.equations = rows.size();
  IntMatrix system(rows.size(), ball.size());
  for (std::size_t j = 0; j < ball.size(); ++j) {
    for (const auto& [i, c] : columns[j]) system(i, j) = c;
  }

  const IntMatrix kernel = kernel_basis(system);
  for (std::size_t col = 0; col < kernel.cols(); ++col) {
    RingElement h(ctx);
    for (std::size_t j = 0; j < ball.size(); ++j) h.add_term(ball[j], kernel(j, col));
    for (const auto& dk : d) {
      if (!(h * dk).is_zero()) {
        r.status = SearchStatus::Fail;
        r.detail = "internal error: kernel vector " + format_element(h) + " does not annihilate";
        return r;
      }
    }
    r.kernel_basis.push_back(std::move(h));
  }

  if (!claimed) {
    if (r.kernel_basis.empty()) {
      r.status = SearchStatus::Pass;
      r.detail = "no nonzero h on ball(" + std::to_string(opts.radius) + ") annihilates";
    } else {
      r.status = SearchStatus::Fail;
      r.detail = "nonzero annihilator " + format_element(r.kernel_basis.front());
    }
    return r;
  }

  const RingElement& y = *claimed;
  for (const auto& dk : d) {
    const RingElement prod = y * dk;
    if (!prod.is_zero()) {
      r.status = SearchStatus::Fail;
      r.detail = "claimed generator does not annihilate: product " + format_element(prod);
      return r;
    }
  }
  r.slack = opts.slack.value_or(y.length() + 2);
  ElementIndex index;
  LatticeEchelon span;
  for (const auto& g : enumerate(ctx, opts.radius + r.slack)) {
    span.insert(sparse_coordinates(left_translate(g, y), index));
  }
  for (const auto& h : r.kernel_basis) {
    if (span.contains(sparse_coordinates(h, index))) {
      ++r.verified_members;
    } else if (r.detail.empty()) {
      r.detail = "kernel element " + format_element(h) + " not reached with slack " +
                 std::to_string(r.slack);
    }
  }
  r.status = r.verified_members == r.kernel_basis.size() ? SearchStatus::Pass
                                                         : SearchStatus::Inconclusive;
  if (r.status == SearchStatus::Pass) {
    r.detail = "kernel of rank " + std::to_string(r.kernel_basis.size()) + " on ball(" +
               std::to_string(opts.radius) + ") lies in the claimed ideal";
  }
  return r;
}

}  // namespace pd3
