#pragma once

#include <cstdint>
#include <vector>

#include "chowsym/involution.hpp"
#include "chowsym/orbit.hpp"

namespace chowsym {

/// Which sheet of the double cover a lift lives on. The labeling is a global
/// convention; swapping it is a symmetry.
enum class CoverSign { Plus, Minus };

struct CoverLift {
  Orbit base;
  bool split = false;
  CoverSign sign = CoverSign::Plus;  // only meaningful when split
};

/// Preimage of a B-orbit under GL(2n)/SO(2n) -> GL(2n)/O(2n): two lifts
/// (Plus, Minus) when the orbit splits, one unsplit lift otherwise.
std::vector<CoverLift> cover_lifts(const Orbit& base);

/// The preimage of O_w is two orbits iff w has no fixed points.
bool orbit_splits(const Involution& w);

/// Order of the component group of the stabilizer of q_w in the torus:
/// 2^(number of fixed points).
std::uint64_t stabilizer_component_order(const Involution& w);

struct FibrationSpec {
  int n = 0;
  int i = 0;
  int fiber_dim = 0;
};

/// Fibration f_i : X_i -> GL(2n-2)/SO(2n-2), defined for 1 <= i <= 2n-1.
FibrationSpec fibration_spec(int n, int i);

/// Dimension of the fiber C* x C^(2n+i-2), i.e. 2n + i - 1.
int fiber_dimension(int n, int i);

/// Removes the 2-cycle (w(m), m) and relabels the remaining letters
/// order-preservingly onto 1..m-2. Throws std::invalid_argument when m is a
/// fixed point (f_i is undefined on X_{2n}).
Involution fibration_image(const Involution& w);

/// Inverse of fibration_image on stratum i: spreads w' (size 2n-2) over
/// {1..2n} \ {i, 2n} and adjoins (i 2n).
Involution fibration_pullback(int n, int i, const Involution& reduced);

/// (12)(34)...(2n-1 2n), built as iterated pullbacks into the top stratum.
Involution survivor_involution(int n);

}  // namespace chowsym
