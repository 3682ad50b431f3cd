#include "pd3/homology.hpp"

#include <algorithm>
#include <unordered_map>

namespace pd3 {

AbelianGroupDescriptor AbelianGroupDescriptor::from_factors(
    std::size_t free_rank, const std::vector<Integer>& factors) {
  AbelianGroupDescriptor out;
  out.free_rank = free_rank;
  for (const auto& f : factors) {
    Integer m = abs(f);
    if (m == 0) {
      ++out.free_rank;
    } else if (m != 1) {
      out.torsion.push_back(m);
    }
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

std::string AbelianGroupDescriptor::to_string() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<Integer> AbelianGroupDescriptor::primary_parts() const {
  std::vector<Integer> out;
  for (Integer t : torsion) {
    for (Integer p = 2; p * p <= t; ++p) {
      Integer q = 1;
      while (t % p == 0) {
        t /= p;
        q *= p;
      }
      if (q > 1) out.push_back(q);
    }
    if (t > 1) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const std::vector<GroupElement>& elements_of(const GroupContext& ctx) {
  if (!ctx.is_finite()) {
    throw InfiniteGroup(ctx.name() + " is infinite; flattening needs a finite group");
  }
  static const auto s3 = enumerate(GroupContext::get(GroupId::S3), std::nullopt);
  static const auto z2 = enumerate(GroupContext::get(GroupId::Z2), std::nullopt);
  static const auto z3 = enumerate(GroupContext::get(GroupId::Z3), std::nullopt);
  switch (ctx.id()) {
    case GroupId::S3: return s3;
    case GroupId::Z2: return z2;
    case GroupId::Z3: return z3;
    default: throw InfiniteGroup(ctx.name() + " is not a supported finite group");
  }
}

std::unordered_map<GroupElement, std::size_t> index_of(const std::vector<GroupElement>& els) {
  std::unordered_map<GroupElement, std::size_t> idx;
  for (std::size_t i = 0; i < els.size(); ++i) idx.emplace(els[i], i);
  return idx;
}

}  // namespace

std::vector<Integer> coordinates(const RingElement& x) {
  const auto& els = elements_of(x.context());
  const auto idx = index_of(els);
  std::vector<Integer> out(els.size());
  for (const auto& [g, c] : x.terms()) out[idx.at(g)] = c;
  return out;
}

IntMatrix flatten(const RingMatrix& m) {
  const auto& els = elements_of(m.context());
  const auto idx = index_of(els);
  const std::size_t n = els.size();
  IntMatrix out(m.rows() * n, m.cols() * n);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& entry = m(i, j);
      if (entry.is_zero()) continue;
      for (std::size_t gi = 0; gi < n; ++gi) {
        for (const auto& [h, c] : entry.terms()) {
          const std::size_t k = idx.at(multiply(els[gi], h));
          out(i * n + k, j * n + gi) += c;
        }
      }
    }
  }
  return out;
}

IntComplex flatten_complex(const FreeComplex& cx) {
  const std::size_t n = elements_of(cx.context()).size();
  IntComplex out;
  for (auto r : cx.ranks()) out.ranks.push_back(r * n);
  for (const auto& m : cx.differentials()) out.differentials.push_back(flatten(m));
  return out;
}

IntComplex augment_complex(const FreeComplex& cx) {
  IntComplex out;
  out.ranks = cx.ranks();
  for (const auto& m : cx.differentials()) {
    IntMatrix a(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = augment(m(i, j));
    }
    out.differentials.push_back(std::move(a));
  }
  return out;
}

IntComplex reduce_mod(const IntComplex& cx, unsigned long p) {
  IntComplex out = cx;
  out.modulus = p;
  for (auto& m : out.differentials) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        mpz_fdiv_r_ui(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p);
      }
    }
  }
  return out;
}

namespace {

void require_complex(const IntComplex& cx) {
  for (int d = 2; d <= cx.top_degree(); ++d) {
    IntMatrix comp = cx.differential(d - 1) * cx.differential(d);
    if (cx.modulus) comp = reduce_mod(IntComplex{{}, {comp}, 0}, cx.modulus).differentials[0];
    if (!comp.is_zero()) {
      throw NotAComplex("d" + std::to_string(d - 1) + " o d" + std::to_string(d) +
                        " is nonzero");
    }
  }
}

}  // namespace

std::vector<AbelianGroupDescriptor> homology(const IntComplex& cx) {
  if (cx.modulus != 0) throw Error("homology over Z needs modulus 0; use betti_mod_p");
  require_complex(cx);
  const int top = cx.top_degree();
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(top + 2));
  for (int d = 1; d <= top; ++d) factors[static_cast<std::size_t>(d)] = invariant_factors(cx.differential(d));
  std::vector<AbelianGroupDescriptor> out;
  for (int d = 0; d <= top; ++d) {
    const std::size_t rank_out = factors[static_cast<std::size_t>(d)].size();
    const auto& in = factors[static_cast<std::size_t>(d + 1)];
    const std::size_t free = cx.ranks[static_cast<std::size_t>(d)] - rank_out - in.size();
    out.push_back(AbelianGroupDescriptor::from_factors(free, in));
  }
  return out;
}

std::vector<std::size_t> betti_mod_p(const IntComplex& cx, unsigned long p) {
  const auto reduced = reduce_mod(cx, p);
  require_complex(reduced);
  const int top = cx.top_degree();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = rank_mod_p(cx.differential(d), p);
  std::vector<std::size_t> out;
  for (int d = 0; d <= top; ++d) {
    out.push_back(cx.ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d)] -
                  ranks[static_cast<std::size_t>(d + 1)]);
  }
  return out;
}

IntMatrix annihilator_lattice(const RingElement& x) {
  const auto& els = elements_of(x.context());
  const std::size_t n = els.size();
  IntMatrix right_mult(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = coordinates(RingElement(els[j]) * x);
    for (std::size_t i = 0; i < n; ++i) right_mult(i, j) = col[i];
  }
  return kernel_basis(right_mult).transpose();
}

IntMatrix principal_ideal_lattice(const RingElement& y) {
  const auto& els = elements_of(y.context());
  const std::size_t n = els.size();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = coordinates(left_translate(els[i], y));
    for (std::size_t j = 0; j < n; ++j) out(i, j) = row[j];
  }
  return out;
}

bool lattices_equal(const IntMatrix& a, const IntMatrix& b) { return same_row_lattice(a, b); }

}  // namespace pd3
