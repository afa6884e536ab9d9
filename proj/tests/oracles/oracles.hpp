#pragma once

// Test-only reference computations. Nothing here calls into the library code
// paths these oracles check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

/// Every involution of {1..m} found by filtering all m! permutations.
inline std::vector<std::vector<int>> brute_force_involutions(int m, bool fpf_only) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    bool involution = true;
    bool has_fixed = false;
    for (int k = 0; k < m; ++k) {
      if (p[static_cast<std::size_t>(p[static_cast<std::size_t>(k)] - 1)] != k + 1) involution = false;
      if (p[static_cast<std::size_t>(k)] == k + 1) has_fixed = true;
    }
    if (involution && !(fpf_only && has_fixed)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int brute_inversions(const std::vector<int>& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i < j && p[i] > p[j]) ++count;
    }
  }
  return count;
}

using Matrix = std::vector<std::vector<std::int64_t>>;

/// Diagonal of the Smith form by naive elementary operations: repeatedly pick
/// the smallest nonzero entry, reduce its row and column by division with
/// remainder, and restart whenever a remainder survives. Entries stay small
/// for the matrix sizes used in tests; overflow aborts.
inline std::vector<std::int64_t> naive_invariant_factors(Matrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto guard = [](std::int64_t v) {
    if (v > (std::int64_t{1} << 40) || v < -(std::int64_t{1} << 40)) {
      throw std::overflow_error("naive reducer overflow");
    }
  };
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a[r][c] != 0 && (pr == rows || std::llabs(a[r][c]) < std::llabs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) {
          a[r][c] -= q * a[t][c];
          guard(a[r][c]);
        }
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const std::int64_t q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < rows; ++r) {
          a[r][c] -= q * a[r][t];
          guard(a[r][c]);
        }
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[r][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(std::llabs(a[t][t]));
  }
  return diag;
}

inline Matrix random_matrix(std::mt19937& rng, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  const std::size_t r = dim(rng);
  const std::size_t c = dim(rng);
  Matrix m(r, std::vector<std::int64_t>(c));
  for (auto& row : m) {
    for (auto& v : row) v = entry(rng);
  }
  return m;
}

}  // namespace oracle
