#include "pd3/lattice.hpp"

namespace pd3 {

void add_multiple(SparseVector& v, const SparseVector& w, const Integer& k) {
  if (k == 0) return;
  for (const auto& [i, x] : w) {
    auto [it, inserted] = v.try_emplace(i, 0);
    mpz_addmul(it->second.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    if (it->second == 0) v.erase(it);
  }
}

namespace {

SparseVector combine(const SparseVector& x, const Integer& s, const SparseVector& y,
                     const Integer& t) {
  SparseVector out;
  add_multiple(out, x, s);
  add_multiple(out, y, t);
  return out;
}

}  // namespace

bool LatticeEchelon::insert(SparseVector v) {
  while (!v.empty()) {
    const std::size_t lead = v.rbegin()->first;
    const Integer lc = v.rbegin()->second;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) {
      if (lc < 0) {
        for (auto& [i, x] : v) x = -x;
      }
      pivots_.emplace(lead, std::move(v));
      return true;
    }
    SparseVector& p = it->second;
    const Integer pc = p.rbegin()->second;
    if (mpz_divisible_p(lc.get_mpz_t(), pc.get_mpz_t())) {
      add_multiple(v, p, -Integer(lc / pc));
      continue;
    }
    // Replace (p, v) by a unimodular combination whose first member has
    // leading coefficient gcd(pc, lc) and whose second has none.
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pc.get_mpz_t(), lc.get_mpz_t());
    SparseVector new_pivot = combine(p, s, v, t);
    SparseVector rest = combine(v, Integer(pc / g), p, Integer(-lc / g));
    p = std::move(new_pivot);
    v = std::move(rest);
  }
  return false;
}

bool LatticeEchelon::contains(SparseVector v) const {
  while (!v.empty()) {
    const std::size_t lead = v.rbegin()->first;
    const Integer& lc = v.rbegin()->second;
    auto it = pivots_.find(lead);
    if (it == pivots_.end()) return false;
    const Integer& pc = it->second.rbegin()->second;
    if (!mpz_divisible_p(lc.get_mpz_t(), pc.get_mpz_t())) return false;
    add_multiple(v, it->second, -Integer(lc / pc));
  }
  return true;
}

}  // namespace pd3
