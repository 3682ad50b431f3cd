#pragma once

// Independent reference implementations used only by the tests.  None of these
// go through the rewriting system or the library's linear algebra.

#include <array>
#include <gmpxx.h>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

// S3 as permutations of {0,1,2}; a = (0 1), b = (0 1 2).  Words act by
// composition, rightmost letter first.
using Perm = std::array<int, 3>;

inline Perm compose(const Perm& p, const Perm& q) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[i] = p[q[i]];
  return r;
}

inline Perm perm_of_letter(char x) {
  if (x == 'a') return {1, 0, 2};
  if (x == 'b') return {1, 2, 0};
  return {0, 1, 2};
}

inline Perm perm_of_letters(const std::string& letters) {
  Perm p{0, 1, 2};
  for (char x : letters) p = compose(p, perm_of_letter(x));
  return p;
}

// Pi = S3 *_{Z/2} S3 in the form a^e * (alternating syllables in b, c with
// exponents 1 or 2).  Pushing a to the left doubles every exponent mod 3.
struct PiWord {
  int e = 0;
  std::vector<std::pair<char, int>> syllables;
  friend bool operator==(const PiWord&, const PiWord&) = default;
};

inline PiWord pi_times_letter(PiWord w, char x) {
  if (x == 'a') {
    for (auto& s : w.syllables) s.second = (2 * s.second) % 3;
    w.e ^= 1;
    return w;
  }
  if (!w.syllables.empty() && w.syllables.back().first == x) {
    const int k = (w.syllables.back().second + 1) % 3;
    if (k == 0) {
      w.syllables.pop_back();
    } else {
      w.syllables.back().second = k;
    }
  } else {
    w.syllables.push_back({x, 1});
  }
  return w;
}

inline PiWord pi_of_letters(const std::string& letters) {
  PiWord w;
  for (char x : letters) w = pi_times_letter(w, x);
  return w;
}

inline std::string pi_letters(const PiWord& w) {
  std::string out(w.e ? "a" : "");
  for (const auto& [x, k] : w.syllables) out += std::string(k, x);
  return out;
}

// Rank over Q by fraction-free (Bareiss) elimination.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline std::string random_free_word(std::mt19937_64& rng, const std::string& symbols,
                                    int max_syllables) {
  std::uniform_int_distribution<int> len(0, max_syllables);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  std::uniform_int_distribution<int> exp(-2, 1);
  const int n = len(rng);
  if (n == 0) return "1";
  std::string out;
  for (int i = 0; i < n; ++i) {
    int k = exp(rng);
    if (k >= 0) ++k;  // -2, -1, 1, 2
    if (i) out += "*";
    out += symbols[pick(rng)];
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace oracle
