#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "chowsym/involution.hpp"

namespace chowsym {

/// Codimension of the B-orbit indexed by w: (length + #2-cycles) / 2.
int orbit_codimension(const Involution& w);

/// Dimension of {X upper triangular : X Q + Q X^T = 0} over Q, where Q is the
/// representative form of w. This is the dimension of the Borel stabilizer of
/// Q, hence the codimension of its orbit. Computed by exact rational
/// elimination; independent of the closed formula.
int orbit_codimension_oracle(const Involution& w);

/// Index i with q_w(e_i, e_m) != 0, i.e. w(m). The orbit lies in stratum X_i.
int stratum_index(const Involution& w);

/// Permutation matrix of w: Q[i][j] = 1 iff w(i) = j (1-based).
class RepresentativeForm {
 public:
  explicit RepresentativeForm(const Involution& w);

  int size() const noexcept { return m_; }
  int at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
                    static_cast<std::size_t>(j - 1)];
  }
  /// q(e_i, e_j).
  int pairing(int i, int j) const { return at(i, j); }
  bool is_symmetric() const;
  bool is_permutation_matrix() const;
  /// Exact determinant (always +1 or -1).
  int determinant() const;

 private:
  int m_ = 0;
  std::vector<int> entries_;
};

RepresentativeForm representative_form(const Involution& w);

/// s[i][j] = #{k >= i : w(k) >= j}: ranks of the lower-right corners of the
/// representative form, for 1 <= i, j <= m.
class CornerRanks {
 public:
  explicit CornerRanks(const Involution& w);

  int size() const noexcept { return m_; }
  int at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 2) +
                  static_cast<std::size_t>(j)];
  }
  std::span<const std::int16_t> cells() const noexcept { return cells_; }

 private:
  int m_ = 0;
  std::vector<std::int16_t> cells_;
};

/// True iff every corner rank of `inner` is bounded by that of `outer`.
bool corner_ranks_dominated(const CornerRanks& inner, const CornerRanks& outer);

/// O_inner is contained in the closure of O_outer. Throws std::invalid_argument
/// on size mismatch.
bool closure_contains(const Involution& outer, const Involution& inner);

struct Orbit {
  Involution w;
  int codim = 0;
  bool fpf = false;
  int stratum = 0;

  static Orbit of(const Involution& w);

  friend bool operator==(const Orbit&, const Orbit&) = default;
};

struct OrbitEdge {
  std::size_t source = 0;  // deeper orbit (index into OrbitGraph::vertices)
  std::size_t target = 0;  // shallower orbit whose closure contains the source
  bool cross_stratum = false;

  friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
  friend auto operator<=>(const OrbitEdge& a, const OrbitEdge& b) {
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.target <=> b.target;
  }
};

/// Codimension-one closure inclusions among B-orbits. Vertices are sorted by
/// (codim, one-line notation); edges by (source, target).
struct OrbitGraph {
  int n = 0;
  bool fpf_only = false;
  std::vector<Orbit> vertices;
  std::vector<OrbitEdge> edges;

  friend bool operator==(const OrbitGraph&, const OrbitGraph&) = default;
};

struct GraphBuildOptions {
  bool allow_large = false;   // lift the default size caps
  unsigned threads = 1;       // 0 = hardware concurrency
};

/// Default caps: 2n <= 12 for fixed-point-free graphs, 2n <= 10 otherwise.
int max_default_half_size(bool fpf_only);

class SizeCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

OrbitGraph build_orbit_graph(int n, bool fpf_only, const GraphBuildOptions& options = {});

}  // namespace chowsym
