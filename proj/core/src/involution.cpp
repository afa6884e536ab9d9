#include "chowsym/involution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chowsym {

Involution::Involution(std::vector<int> images) : images_(std::move(images)) {
  const int m = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > m) {
      throw std::invalid_argument("involution value " + std::to_string(v) +
                                  " outside 1.." + std::to_string(m));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("repeated value " + std::to_string(v) +
                                  " in one-line notation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  for (int k = 1; k <= m; ++k) {
    if ((*this)((*this)(k)) != k) {
      throw std::invalid_argument("permutation " + one_line_string() +
                                  " is not self-inverse");
    }
  }
}

Involution Involution::identity(int m) {
  if (m < 0) throw std::invalid_argument("negative involution size");
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) images[static_cast<std::size_t>(k)] = k + 1;
  return Involution(std::move(images), Unchecked{});
}

Involution Involution::from_transpositions(int m, std::span<const std::pair<int, int>> cycles) {
  std::vector<int> images = identity(m).images_;
  std::vector<bool> used(images.size(), false);
  for (auto [a, b] : cycles) {
    if (a < 1 || b < 1 || a > m || b > m || a == b) {
      throw std::invalid_argument("bad 2-cycle (" + std::to_string(a) + " " +
                                  std::to_string(b) + ") for m = " + std::to_string(m));
    }
    auto ia = static_cast<std::size_t>(a - 1);
    auto ib = static_cast<std::size_t>(b - 1);
    if (used[ia] || used[ib]) {
      throw std::invalid_argument("2-cycles are not disjoint");
    }
    used[ia] = used[ib] = true;
    images[ia] = b;
    images[ib] = a;
  }
  return Involution(std::move(images), Unchecked{});
}

bool Involution::is_fixed_point_free() const noexcept {
  for (int k = 1; k <= size(); ++k) {
    if ((*this)(k) == k) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Involution::transpositions() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= size(); ++k) {
    if ((*this)(k) > k) out.emplace_back(k, (*this)(k));
  }
  return out;
}

std::string Involution::cycle_notation() const {
  const auto cycles = transpositions();
  if (cycles.empty()) return "()";
  const char* sep = size() >= 10 ? " " : "";
  std::ostringstream os;
  for (auto [a, b] : cycles) os << '(' << a << sep << b << ')';
  return os.str();
}

std::string Involution::one_line_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) os << ',';
    os << images_[k];
  }
  os << ']';
  return os.str();
}

namespace {

void check_enumeration_size(int m) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("involution enumeration needs an even m >= 2, got " +
                                std::to_string(m));
  }
}

// Assigns the smallest open position either to itself or to a larger open
// position. Choices are tried in increasing image order, which yields
// lexicographic order on one-line notation.
void extend(std::vector<int>& images, int m, bool fpf_only,
            const std::function<void(std::span<const int>)>& visit) {
  int k = 0;
  while (k < m && images[static_cast<std::size_t>(k)] != 0) ++k;
  if (k == m) {
    visit(images);
    return;
  }
  auto ik = static_cast<std::size_t>(k);
  if (!fpf_only) {
    images[ik] = k + 1;
    extend(images, m, fpf_only, visit);
    images[ik] = 0;
  }
  for (int j = k + 1; j < m; ++j) {
    auto ij = static_cast<std::size_t>(j);
    if (images[ij] != 0) continue;
    images[ik] = j + 1;
    images[ij] = k + 1;
    extend(images, m, fpf_only, visit);
    images[ij] = 0;
  }
  images[ik] = 0;
}

}  // namespace

void for_each_involution(int m, bool fpf_only,
                         const std::function<void(std::span<const int>)>& visit) {
  check_enumeration_size(m);
  std::vector<int> images(static_cast<std::size_t>(m), 0);
  extend(images, m, fpf_only, visit);
}

std::vector<Involution> enumerate_involutions(int m, bool fpf_only) {
  std::vector<Involution> out;
  for_each_involution(m, fpf_only, [&](std::span<const int> images) {
    out.push_back(Involution(std::vector<int>(images.begin(), images.end()),
                             Involution::Unchecked{}));
  });
  return out;
}

int coxeter_length(const Involution& w) {
  const auto line = w.one_line();
  int inversions = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    for (std::size_t j = i + 1; j < line.size(); ++j) {
      if (line[i] > line[j]) ++inversions;
    }
  }
  return inversions;
}

CycleStats cycle_stats(const Involution& w) {
  CycleStats stats;
  for (int k = 1; k <= w.size(); ++k) {
    if (w(k) == k) {
      ++stats.fixed_points;
    } else if (w(k) > k) {
      ++stats.transpositions;
    }
  }
  return stats;
}

RankTable::RankTable(const Involution& w)
    : m_(w.size()),
      cells_(static_cast<std::size_t>(m_ + 1) * static_cast<std::size_t>(m_ + 1), 0) {
  const auto stride = static_cast<std::size_t>(m_ + 1);
  for (int i = 1; i <= m_; ++i) {
    const int image = w(i);
    for (int j = 0; j <= m_; ++j) {
      const auto idx = static_cast<std::size_t>(i) * stride + static_cast<std::size_t>(j);
      cells_[idx] = static_cast<std::int16_t>(cells_[idx - stride] + (image >= j ? 1 : 0));
    }
  }
}

RankTable rank_table(const Involution& w) { return RankTable(w); }

bool bruhat_leq(const Involution& u, const Involution& v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("bruhat_leq: size mismatch " + std::to_string(u.size()) +
                                " vs " + std::to_string(v.size()));
  }
  const RankTable ru(u);
  const RankTable rv(v);
  return std::ranges::equal(ru.cells(), rv.cells(),
                            [](std::int16_t a, std::int16_t b) { return a <= b; });
}

}  // namespace chowsym
