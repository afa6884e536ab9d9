#include "chowsym/orbit.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <map>
#include <thread>

namespace chowsym {

int orbit_codimension(const Involution& w) {
  const int numerator = coxeter_length(w) + cycle_stats(w).transpositions;
  assert(numerator % 2 == 0 && "length + #2-cycles is even for an involution");
  return numerator / 2;
}

namespace {

// Rank of a dense rational matrix by Gauss-Jordan elimination.
int rational_rank(std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  int rank = 0;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    const mpq_class pivot = rows[pivot_row][c];
    for (std::size_t k = c; k < cols; ++k) rows[pivot_row][k] /= pivot;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || sgn(rows[r][c]) == 0) continue;
      const mpq_class factor = rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[pivot_row][k];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

int orbit_codimension_oracle(const Involution& w) {
  const int m = w.size();
  const RepresentativeForm q(w);

  // Unknowns: X[a][b] with a <= b.
  std::map<std::pair<int, int>, std::size_t> unknown;
  for (int a = 1; a <= m; ++a) {
    for (int b = a; b <= m; ++b) unknown.emplace(std::pair{a, b}, unknown.size());
  }
  const std::size_t cols = unknown.size();

  // One equation per entry (i, j), i <= j, of the symmetric matrix X Q + Q X^T.
  // d/dX[a][b] (X Q)[i][j]   = [a == i] Q[b][j]
  // d/dX[a][b] (Q X^T)[i][j] = [a == j] Q[i][b]
  std::vector<std::vector<mpq_class>> rows;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      std::vector<mpq_class> row(cols, 0);
      for (const auto& [ab, col] : unknown) {
        const auto [a, b] = ab;
        int coeff = 0;
        if (a == i) coeff += q.at(b, j);
        if (a == j) coeff += q.at(i, b);
        row[col] = coeff;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(cols) - rational_rank(std::move(rows), cols);
}

int stratum_index(const Involution& w) {
  if (w.size() == 0) throw std::invalid_argument("stratum_index of an empty involution");
  return w(w.size());
}

RepresentativeForm::RepresentativeForm(const Involution& w)
    : m_(w.size()), entries_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), 0) {
  for (int i = 1; i <= m_; ++i) {
    entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
             static_cast<std::size_t>(w(i) - 1)] = 1;
  }
}

bool RepresentativeForm::is_symmetric() const {
  for (int i = 1; i <= m_; ++i) {
    for (int j = i + 1; j <= m_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

bool RepresentativeForm::is_permutation_matrix() const {
  for (int i = 1; i <= m_; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 1; j <= m_; ++j) {
      if (at(i, j) != 0 && at(i, j) != 1) return false;
      row += at(i, j);
      col += at(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

int RepresentativeForm::determinant() const {
  // Sign of the permutation, read off by sorting rows with transpositions.
  std::vector<int> image(static_cast<std::size_t>(m_));
  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= m_; ++j) {
      if (at(i, j) == 1) image[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  int sign = 1;
  for (std::size_t i = 0; i < image.size(); ++i) {
    while (image[i] != static_cast<int>(i) + 1) {
      std::swap(image[i], image[static_cast<std::size_t>(image[i] - 1)]);
      sign = -sign;
    }
  }
  return sign;
}

RepresentativeForm representative_form(const Involution& w) { return RepresentativeForm(w); }

CornerRanks::CornerRanks(const Involution& w)
    : m_(w.size()),
      cells_(static_cast<std::size_t>(m_ + 2) * static_cast<std::size_t>(m_ + 2), 0) {
  const auto stride = static_cast<std::size_t>(m_ + 2);
  for (int i = m_; i >= 1; --i) {
    const int image = w(i);
    for (int j = 1; j <= m_ + 1; ++j) {
      const auto idx = static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j);
      cells_[idx] = static_cast<std::int16_t>(cells_[idx + stride] + (image >= j ? 1 : 0));
    }
  }
}

bool corner_ranks_dominated(const CornerRanks& inner, const CornerRanks& outer) {
  if (inner.size() != outer.size()) {
    throw std::invalid_argument("corner rank tables of different sizes");
  }
  const auto a = inner.cells();
  const auto b = outer.cells();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool closure_contains(const Involution& outer, const Involution& inner) {
  if (outer.size() != inner.size()) {
    throw std::invalid_argument("closure_contains: size mismatch " +
                                std::to_string(outer.size()) + " vs " +
                                std::to_string(inner.size()));
  }
  return corner_ranks_dominated(CornerRanks(inner), CornerRanks(outer));
}

Orbit Orbit::of(const Involution& w) {
  return Orbit{w, orbit_codimension(w), w.is_fixed_point_free(), stratum_index(w)};
}

int max_default_half_size(bool fpf_only) { return fpf_only ? 6 : 5; }

OrbitGraph build_orbit_graph(int n, bool fpf_only, const GraphBuildOptions& options) {
  if (n < 1) throw std::invalid_argument("orbit graph needs n >= 1");
  if (!options.allow_large && n > max_default_half_size(fpf_only)) {
    throw SizeCapExceeded("n = " + std::to_string(n) + " exceeds the default cap of " +
                          std::to_string(max_default_half_size(fpf_only)) +
                          (fpf_only ? " for fixed-point-free graphs" : " for full graphs") +
                          "; pass an override to build it anyway");
  }

  OrbitGraph graph;
  graph.n = n;
  graph.fpf_only = fpf_only;
  for (const auto& w : enumerate_involutions(2 * n, fpf_only)) {
    graph.vertices.push_back(Orbit::of(w));
  }
  std::ranges::stable_sort(graph.vertices, [](const Orbit& a, const Orbit& b) {
    return a.codim < b.codim;
  });

  std::vector<CornerRanks> ranks;
  ranks.reserve(graph.vertices.size());
  for (const auto& v : graph.vertices) ranks.emplace_back(v.w);

  // Vertices are sorted by codim, so each codim level is a contiguous range.
  std::map<int, std::pair<std::size_t, std::size_t>> level;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    auto [it, inserted] = level.try_emplace(graph.vertices[k].codim, k, k + 1);
    if (!inserted) it->second.second = k + 1;
  }

  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.threads;
  threads = std::min<unsigned>(threads, static_cast<unsigned>(graph.vertices.size()));

  auto scan = [&](unsigned worker, std::vector<OrbitEdge>& out) {
    for (std::size_t s = worker; s < graph.vertices.size(); s += threads) {
      const auto found = level.find(graph.vertices[s].codim - 1);
      if (found == level.end()) continue;
      for (std::size_t t = found->second.first; t < found->second.second; ++t) {
        if (corner_ranks_dominated(ranks[s], ranks[t])) {
          out.push_back({s, t, graph.vertices[s].stratum != graph.vertices[t].stratum});
        }
      }
    }
  };

  if (threads <= 1) {
    scan(0, graph.edges);
  } else {
    std::vector<std::vector<OrbitEdge>> partial(threads);
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&, k] { scan(k, partial[k]); });
    }
    pool.clear();
    for (auto& p : partial) graph.edges.insert(graph.edges.end(), p.begin(), p.end());
  }
  std::ranges::sort(graph.edges);
  return graph;
}

}  // namespace chowsym
