#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowsym {

/// A self-inverse permutation of {1..m} in one-line notation.
///
/// Values are 1-based so that position k matches the basis vector e_k of the
/// ambient space. The empty involution (m = 0) is allowed; it is the target of
/// the fibration map in the smallest case.
class Involution {
 public:
  Involution() = default;

  /// Validates that `images` is a bijection of {1..m} and squares to the identity.
  /// Throws std::invalid_argument otherwise.
  explicit Involution(std::vector<int> images);

  static Involution identity(int m);

  /// Builds an involution from disjoint 2-cycles; letters not mentioned are fixed.
  static Involution from_transpositions(int m, std::span<const std::pair<int, int>> cycles);

  int size() const noexcept { return static_cast<int>(images_.size()); }

  /// Image of k, 1-based.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }

  std::span<const int> one_line() const noexcept { return images_; }

  bool is_fixed_point_free() const noexcept;

  /// 2-cycles (a, b) with a < b, ordered by a.
  std::vector<std::pair<int, int>> transpositions() const;

  /// Cycle notation of the non-trivial cycles, e.g. "(12)(34)". Letters are
  /// separated by a space when m >= 10. The identity renders as "()".
  std::string cycle_notation() const;

  /// One-line notation, e.g. "[2,1,4,3]".
  std::string one_line_string() const;

  friend bool operator==(const Involution&, const Involution&) = default;
  friend std::strong_ordering operator<=>(const Involution& a, const Involution& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                  b.images_.begin(), b.images_.end());
  }

 private:
  struct Unchecked {};
  Involution(std::vector<int> images, Unchecked) : images_(std::move(images)) {}
  friend void for_each_involution(int, bool, const std::function<void(std::span<const int>)>&);
  friend std::vector<Involution> enumerate_involutions(int, bool);

  std::vector<int> images_;
};

/// Calls `visit` on every involution of {1..m} (or every fixed-point-free one)
/// in lexicographic order of one-line notation. The span is only valid for the
/// duration of the call. Rejects odd or non-positive m.
void for_each_involution(int m, bool fpf_only,
                         const std::function<void(std::span<const int>)>& visit);

/// Every involution (or fixed-point-free involution) of {1..m}, lexicographic.
std::vector<Involution> enumerate_involutions(int m, bool fpf_only);

/// Number of inversions.
int coxeter_length(const Involution& w);

struct CycleStats {
  int fixed_points = 0;
  int transpositions = 0;
};

CycleStats cycle_stats(const Involution& w);

/// r[i][j] = #{k <= i : w(k) >= j} for 0 <= i, j <= m.
class RankTable {
 public:
  explicit RankTable(const Involution& w);

  int size() const noexcept { return m_; }
  int at(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) +
                  static_cast<std::size_t>(j)];
  }
  std::span<const std::int16_t> cells() const noexcept { return cells_; }

  friend bool operator==(const RankTable&, const RankTable&) = default;

 private:
  int m_ = 0;
  std::vector<std::int16_t> cells_;
};

RankTable rank_table(const Involution& w);

/// Bruhat order by the rank criterion: u <= v iff r_u <= r_v entrywise.
/// Throws std::invalid_argument on size mismatch.
bool bruhat_leq(const Involution& u, const Involution& v);

}  // namespace chowsym
