#include "pd3/bar.hpp"

#include <algorithm>
#include <unordered_map>

namespace pd3 {

namespace {

constexpr std::size_t kMaxOrder = 6;

std::size_t power(std::size_t base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::size_t BarComplex::index(const std::vector<GroupElement>& tuple) const {
  std::size_t out = 0;
  for (const auto& g : tuple) {
    auto it = std::find(letters.begin(), letters.end(), g);
    if (it == letters.end()) throw Error("degenerate or foreign bar tuple");
    out = out * letters.size() + static_cast<std::size_t>(it - letters.begin());
  }
  return out;
}

std::vector<GroupElement> BarComplex::tuple(int degree, std::size_t index) const {
  std::vector<GroupElement> out(static_cast<std::size_t>(degree), GroupElement(*group));
  for (int i = degree - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = letters[index % letters.size()];
    index /= letters.size();
  }
  return out;
}

BarComplex bar_complex(const GroupContext& g, int top_degree) {
  const auto elements = enumerate(g, std::nullopt);
  if (elements.size() > kMaxOrder || top_degree > 4) {
    throw GroupTooLarge("bar complex limited to |G| <= 6 and degree <= 4 (|" + g.name() +
                        "| = " + std::to_string(elements.size()) + ", degree " +
                        std::to_string(top_degree) + ")");
  }
  BarComplex bar;
  bar.group = &g;
  for (const auto& x : elements) {
    if (!x.is_identity()) bar.letters.push_back(x);
  }
  const std::size_t m = bar.letters.size();
  // prod[i][j] = index of letters[i] * letters[j], or m for the identity.
  std::vector<std::vector<std::size_t>> prod(m, std::vector<std::size_t>(m, m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto p = multiply(bar.letters[i], bar.letters[j]);
      if (!p.is_identity()) {
        prod[i][j] = static_cast<std::size_t>(
            std::find(bar.letters.begin(), bar.letters.end(), p) - bar.letters.begin());
      }
    }
  }
  for (int k = 0; k <= top_degree; ++k) bar.chains.ranks.push_back(power(m, k));
  for (int k = 1; k <= top_degree; ++k) {
    IntMatrix d(power(m, k - 1), power(m, k));
    std::vector<std::size_t> t(static_cast<std::size_t>(k));
    for (std::size_t col = 0; col < d.cols(); ++col) {
      std::size_t rest = col;
      for (int i = k - 1; i >= 0; --i) {
        t[static_cast<std::size_t>(i)] = rest % m;
        rest /= m;
      }
      auto encode = [&](const std::vector<std::size_t>& u) {
        std::size_t out = 0;
        for (auto x : u) out = out * m + x;
        return out;
      };
      // Face 0 drops g1, face k drops gk, inner faces multiply neighbours.
      d(encode({t.begin() + 1, t.end()}), col) += 1;
      for (int i = 1; i < k; ++i) {
        const std::size_t p = prod[t[static_cast<std::size_t>(i - 1)]][t[static_cast<std::size_t>(i)]];
        if (p == m) continue;
        std::vector<std::size_t> u;
        for (int s = 0; s < k; ++s) {
          if (s == i - 1) {
            u.push_back(p);
          } else if (s != i) {
            u.push_back(t[static_cast<std::size_t>(s)]);
          }
        }
        d(encode(u), col) += i % 2 ? -1 : 1;
      }
      d(encode({t.begin(), t.end() - 1}), col) += k % 2 ? -1 : 1;
    }
    bar.chains.differentials.push_back(std::move(d));
  }
  return bar;
}

BarHomology::BarHomology(const GroupContext& g, int n) : n_(n) {
  if (n < 0 || n > 3) {
    throw GroupTooLarge("bar homology limited to degrees 0..3, asked for " + std::to_string(n));
  }
  bar_ = bar_complex(g, n + 1);
  const std::size_t dim = bar_.chains.ranks[static_cast<std::size_t>(n)];
  IntMatrix cycles, coords;
  if (n == 0) {
    cycles = IntMatrix::identity(dim);
    coords = IntMatrix::identity(dim);
  } else {
    auto k = kernel_with_coordinates(bar_.chains.differential(n));
    cycles = std::move(k.basis);
    coords = std::move(k.coordinates);
  }
  cycle_coordinates_ = coords;
  const IntMatrix relations = coords * bar_.chains.differential(n + 1);
  auto snf = smith_normal_form(relations, {.left = true, .right = false});
  summand_transform_ = snf.U;
  const auto diag = snf.diagonal();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < cycles.cols(); ++i) {
    if (i < diag.size()) {
      if (diag[i] == 1) continue;
      orders_.push_back(diag[i]);
    } else {
      orders_.push_back(0);
    }
    keep.push_back(i);
  }
  summand_rows_ = keep;
  generators_ = IntMatrix(dim, keep.size());
  const IntMatrix lifted = cycles * snf.U_inv;
  for (std::size_t s = 0; s < keep.size(); ++s) {
    for (std::size_t r = 0; r < dim; ++r) generators_(r, s) = lifted(r, keep[s]);
  }
  descriptor_ = AbelianGroupDescriptor::from_factors(0, orders_);
}

std::vector<Integer> BarHomology::coordinates(const std::vector<Integer>& cycle) const {
  IntMatrix v(cycle.size(), 1);
  for (std::size_t i = 0; i < cycle.size(); ++i) v(i, 0) = cycle[i];
  const IntMatrix y = summand_transform_ * (cycle_coordinates_ * v);
  std::vector<Integer> out;
  for (std::size_t s = 0; s < summand_rows_.size(); ++s) {
    Integer c = y(summand_rows_[s], 0);
    if (orders_[s] != 0) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), orders_[s].get_mpz_t());
    out.push_back(c);
  }
  return out;
}

AbelianGroupDescriptor bar_homology(const GroupContext& g, int n) {
  return BarHomology(g, n).descriptor();
}

IntMatrix induced_map(const GroupHom& h, int n) {
  const BarHomology source(h.source(), n);
  const BarHomology target(h.target(), n);
  const auto& sb = source.bar();
  const auto& tb = target.bar();
  const std::size_t target_dim = tb.chains.ranks[static_cast<std::size_t>(n)];
  IntMatrix out(target.orders().size(), source.orders().size());
  for (std::size_t s = 0; s < source.orders().size(); ++s) {
    std::vector<Integer> image(target_dim);
    for (std::size_t r = 0; r < source.generators().rows(); ++r) {
      const Integer& c = source.generators()(r, s);
      if (c == 0) continue;
      std::vector<GroupElement> t;
      bool degenerate = false;
      for (const auto& g : sb.tuple(n, r)) {
        t.push_back(h(g));
        degenerate = degenerate || t.back().is_identity();
      }
      if (!degenerate) image[tb.index(t)] += c;
    }
    const auto coords = target.coordinates(image);
    for (std::size_t i = 0; i < coords.size(); ++i) out(i, s) = coords[i];
  }
  return out;
}

AbelianGroupDescriptor mayer_vietoris_h3() {
  const auto iota = homs::inclusion_a_s3();
  const BarHomology s3(iota.target(), 3);
  const IntMatrix map = induced_map(iota, 3);
  const std::size_t k = s3.orders().size();
  // Relations of H3(S3) + H3(S3), then the image columns (x, -x).
  std::vector<std::vector<Integer>> columns;
  for (std::size_t copy = 0; copy < 2; ++copy) {
    for (std::size_t i = 0; i < k; ++i) {
      if (s3.orders()[i] == 0) continue;
      std::vector<Integer> col(2 * k);
      col[copy * k + i] = s3.orders()[i];
      columns.push_back(std::move(col));
    }
  }
  for (std::size_t s = 0; s < map.cols(); ++s) {
    std::vector<Integer> col(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      col[i] = map(i, s);
      col[k + i] = -map(i, s);
    }
    columns.push_back(std::move(col));
  }
  IntMatrix presentation(2 * k, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < 2 * k; ++i) presentation(i, j) = columns[j][i];
  }
  const auto factors = invariant_factors(presentation);
  return AbelianGroupDescriptor::from_factors(2 * k - factors.size(), factors);
}

}  // namespace pd3
