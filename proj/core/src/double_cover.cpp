#include "chowsym/double_cover.hpp"

#include <stdexcept>
#include <string>

namespace chowsym {

namespace {

void check_stratum(int n, int i) {
  if (n < 1) throw std::invalid_argument("half-size n must be >= 1");
  if (i < 1 || i > 2 * n - 1) {
    throw std::invalid_argument("stratum " + std::to_string(i) + " outside 1.." +
                                std::to_string(2 * n - 1) + " (f_i is undefined on X_2n)");
  }
}

}  // namespace

std::vector<CoverLift> cover_lifts(const Orbit& base) {
  if (!orbit_splits(base.w)) return {CoverLift{base, false, CoverSign::Plus}};
  return {CoverLift{base, true, CoverSign::Plus}, CoverLift{base, true, CoverSign::Minus}};
}

bool orbit_splits(const Involution& w) { return cycle_stats(w).fixed_points == 0; }

std::uint64_t stabilizer_component_order(const Involution& w) {
  const int l = cycle_stats(w).fixed_points;
  if (l >= 64) throw std::overflow_error("component group order exceeds 2^63");
  return std::uint64_t{1} << l;
}

FibrationSpec fibration_spec(int n, int i) { return {n, i, fiber_dimension(n, i)}; }

int fiber_dimension(int n, int i) {
  check_stratum(n, i);
  return 2 * n + i - 1;
}

Involution fibration_image(const Involution& w) {
  const int m = w.size();
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument("fibration_image needs an involution of even size >= 2");
  }
  const int i = w(m);
  if (i == m) {
    throw std::invalid_argument("fibration_image: " + w.cycle_notation() +
                                " lies in X_" + std::to_string(m) + ", where f_i is undefined");
  }
  // relabel[k] = new label of old letter k, 0 for the removed pair.
  std::vector<int> relabel(static_cast<std::size_t>(m + 1), 0);
  int next = 1;
  for (int k = 1; k <= m; ++k) {
    if (k != i && k != m) relabel[static_cast<std::size_t>(k)] = next++;
  }
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(m - 2));
  for (int k = 1; k <= m; ++k) {
    if (k == i || k == m) continue;
    images.push_back(relabel[static_cast<std::size_t>(w(k))]);
  }
  return Involution(std::move(images));
}

Involution fibration_pullback(int n, int i, const Involution& reduced) {
  check_stratum(n, i);
  const int m = 2 * n;
  if (reduced.size() != m - 2) {
    throw std::invalid_argument("fibration_pullback: expected an involution of size " +
                                std::to_string(m - 2) + ", got " +
                                std::to_string(reduced.size()));
  }
  // spread[k] = letter in {1..m} \ {i, m} that k in {1..m-2} maps to.
  std::vector<int> spread(static_cast<std::size_t>(m - 1), 0);
  for (int k = 1, letter = 1; k <= m - 2; ++k, ++letter) {
    if (letter == i) ++letter;
    spread[static_cast<std::size_t>(k)] = letter;
  }
  std::vector<int> images(static_cast<std::size_t>(m), 0);
  for (int k = 1; k <= m - 2; ++k) {
    images[static_cast<std::size_t>(spread[static_cast<std::size_t>(k)] - 1)] =
        spread[static_cast<std::size_t>(reduced(k))];
  }
  images[static_cast<std::size_t>(i - 1)] = m;
  images[static_cast<std::size_t>(m - 1)] = i;
  return Involution(std::move(images));
}

Involution survivor_involution(int n) {
  if (n < 1) throw std::invalid_argument("survivor_involution needs n >= 1");
  Involution w({2, 1});
  for (int k = 2; k <= n; ++k) w = fibration_pullback(k, 2 * k - 1, w);
  return w;
}

}  // namespace chowsym
