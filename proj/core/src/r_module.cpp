#include "pd3/r_module.hpp"

#include <set>

namespace pd3 {

IntMatrix RMatrix::evaluate(int sign) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(sign);
  }
  return out;
}

IntMatrix RMatrix::expand() const {
  IntMatrix out(2 * rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      // x * basis_i = u basis_i + v a basis_i; a x basis_i = v basis_i + u a basis_i.
      out(2 * i, 2 * j) = x.u;
      out(2 * i + 1, 2 * j) = x.v;
      out(2 * i, 2 * j + 1) = x.v;
      out(2 * i + 1, 2 * j + 1) = x.u;
    }
  }
  return out;
}

std::string RMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += format_r((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

RMatrix abelianize(const RingMatrix& m) {
  RMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_r(m(i, j));
  }
  return out;
}

std::string RModuleInvariants::to_string() const {
  std::string out = underlying.to_string() + "; free a=+1:" + std::to_string(free_part.plus) +
                    " a=-1:" + std::to_string(free_part.minus);
  for (const auto& [p, e] : torsion) {
    out += "; " + std::to_string(p) + "-socle dim " + std::to_string(e.dimension);
    if (p == 2) {
      out += " fixed:" + std::to_string(e.plus);
    } else {
      out += " a=+1:" + std::to_string(e.plus) + " a=-1:" + std::to_string(e.minus);
    }
  }
  return out;
}

namespace {

std::set<unsigned long> primes_of(const std::vector<Integer>& factors) {
  std::set<unsigned long> out;
  for (Integer t : factors) {
    for (unsigned long p = 2; Integer(p) * p <= t; ++p) {
      while (t % p == 0) {
        out.insert(p);
        t /= p;
      }
    }
    if (t > 1) out.insert(t.get_ui());
  }
  return out;
}

std::size_t rank_mod(const IntMatrix& m, unsigned long p) { return rank_mod_p(m, p); }

}  // namespace

RModuleInvariants r_module_invariants(const RMatrix& m) {
  RModuleInvariants inv;
  const std::size_t n = m.rows();
  const IntMatrix expanded = m.expand();
  const auto snf = smith_normal_form(expanded, {.left = true, .right = false});
  const auto diag = snf.diagonal();
  inv.underlying = AbelianGroupDescriptor::from_factors(2 * n - diag.size(), diag);

  inv.free_part.plus = n - rank(m.evaluate(1));
  inv.free_part.minus = n - rank(m.evaluate(-1));
  inv.free_part.dimension = inv.underlying.free_rank;

  // Action of a in the Smith coordinates of the quotient.
  IntMatrix swap(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap(2 * i, 2 * i + 1) = 1;
    swap(2 * i + 1, 2 * i) = 1;
  }
  const IntMatrix action = snf.U * swap * snf.U_inv;

  for (unsigned long p : primes_of(diag)) {
    std::vector<std::size_t> socle;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      if (diag[i] != 1 && diag[i] % p == 0) socle.push_back(i);
    }
    const std::size_t s = socle.size();
    IntMatrix a_mod(s, s);
    for (std::size_t c = 0; c < s; ++c) {
      const Integer scale = diag[socle[c]] / p;
      for (std::size_t r = 0; r < s; ++r) {
        const Integer& dj = diag[socle[r]];
        Integer v = scale * action(socle[r], socle[c]);
        mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), dj.get_mpz_t());
        a_mod(r, c) = v / (dj / p);
      }
    }
    IntMatrix minus_id = a_mod, plus_id = a_mod;
    for (std::size_t i = 0; i < s; ++i) {
      minus_id(i, i) -= 1;
      plus_id(i, i) += 1;
    }
    EigenCount e;
    e.dimension = s;
    e.plus = s - rank_mod(minus_id, p);
    e.minus = p == 2 ? e.plus : s - rank_mod(plus_id, p);
    inv.torsion[p] = e;
  }
  return inv;
}

RMatrix model_presentation(int w) {
  RMatrix m(3, 5);
  const RElement a_plus_w(w, 1);
  m(0, 0) = a_plus_w;
  m(1, 1) = a_plus_w;
  m(1, 2) = RElement(3, 0);
  m(2, 3) = a_plus_w;
  m(2, 4) = RElement(3, 0);
  return m;
}

bool OrientabilityReport::ok() const {
  if (!i_matches_model || cases.size() != 2) return false;
  for (const auto& c : cases) {
    if (!c.j_matches_model) return false;
    if (c.matches_i != (c.w == 1)) return false;
  }
  return true;
}

std::string OrientabilityReport::summary() const {
  std::string out = "R(x)I: " + i.to_string();
  for (const auto& c : cases) {
    out += " | w=" + std::to_string(c.w) + " R(x)J: " + c.j.to_string() +
           (c.matches_i ? " MATCH" : " MISMATCH");
  }
  return out;
}

OrientabilityReport orientability_check(const RingMatrix& d2) {
  OrientabilityReport r;
  r.i = r_module_invariants(abelianize(d2));
  r.model = r_module_invariants(model_presentation(1));
  r.i_matches_model = r.i == r.model;
  for (int w : {1, -1}) {
    OrientabilityCase c;
    c.w = w;
    c.j = r_module_invariants(abelianize(involuted_transpose(d2, OrientationCharacter{w})));
    c.j_matches_model = c.j == r_module_invariants(model_presentation(w));
    c.matches_i = c.j == r.i;
    r.cases.push_back(std::move(c));
  }
  return r;
}

}  // namespace pd3
