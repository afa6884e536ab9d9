#include "chowsym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>

#include "chowsym/chow.hpp"
#include "chowsym/double_cover.hpp"
#include "chowsym/involution.hpp"
#include "chowsym/orbit.hpp"

namespace chowsym {

bool VerificationReport::all_passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

namespace {

// Runs `body`, which returns an empty string on success or a failure message.
CheckResult timed(std::string name, const std::function<std::string()>& body) {
  CheckResult result;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = body();
    result.passed = result.detail.empty();
    if (result.passed) result.detail = "ok";
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string suffix(int m) { return " (m = " + std::to_string(m) + ")"; }

}  // namespace

CheckResult check_enumeration_counts(int max_m) {
  return timed("involution counts up to m = " + std::to_string(max_m), [&]() -> std::string {
    // I(m) = I(m-1) + (m-1) I(m-2); fpf counts are (m-1)!!.
    std::vector<long> all{1, 1};
    for (int m = 2; m <= max_m; ++m) {
      all.push_back(all[static_cast<std::size_t>(m - 1)] +
                    (m - 1) * all[static_cast<std::size_t>(m - 2)]);
    }
    long fpf = 1;
    for (int m = 2; m <= max_m; m += 2) {
      fpf *= m - 1;
      long seen_all = 0;
      long seen_fpf = 0;
      for_each_involution(m, false, [&](std::span<const int>) { ++seen_all; });
      for_each_involution(m, true, [&](std::span<const int>) { ++seen_fpf; });
      if (seen_all != all[static_cast<std::size_t>(m)] || seen_fpf != fpf) {
        std::ostringstream os;
        os << "m = " << m << ": enumerated " << seen_all << "/" << seen_fpf << ", expected "
           << all[static_cast<std::size_t>(m)] << "/" << fpf;
        return os.str();
      }
    }
    return {};
  });
}

CheckResult check_codimension_oracle(int m) {
  return timed("codimension formula = stabilizer oracle" + suffix(m), [&]() -> std::string {
    for (const auto& w : enumerate_involutions(m, false)) {
      const int formula = orbit_codimension(w);
      const int oracle = orbit_codimension_oracle(w);
      if (formula != oracle) {
        return w.cycle_notation() + ": formula " + std::to_string(formula) + ", oracle " +
               std::to_string(oracle);
      }
    }
    return {};
  });
}

CheckResult check_closure_order(int m) {
  return timed("closure order: strata monotone, codim strict" + suffix(m), [&]() -> std::string {
    const auto all = enumerate_involutions(m, false);
    std::vector<CornerRanks> ranks;
    std::vector<Orbit> orbits;
    for (const auto& w : all) {
      ranks.emplace_back(w);
      orbits.push_back(Orbit::of(w));
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = 0; b < all.size(); ++b) {
        // a = outer, b = inner
        if (!corner_ranks_dominated(ranks[b], ranks[a])) continue;
        if (orbits[b].stratum > orbits[a].stratum) {
          return "closure of " + all[a].cycle_notation() + " contains " + all[b].cycle_notation() +
                 " but stratum rises";
        }
        if (a != b && orbits[b].codim <= orbits[a].codim) {
          return "closure of " + all[a].cycle_notation() + " contains " + all[b].cycle_notation() +
                 " without a codimension increase";
        }
      }
    }
    return {};
  });
}

CheckResult check_fibrations(int m) {
  return timed("fibration round trip, fpf, codim shift" + suffix(m), [&]() -> std::string {
    const int n = m / 2;
    if (n >= 2) {
      for (const auto& reduced : enumerate_involutions(m - 2, false)) {
        for (int i = 1; i <= m - 1; ++i) {
          const Involution up = fibration_pullback(n, i, reduced);
          if (stratum_index(up) != i) return "pullback lands outside stratum " + std::to_string(i);
          if (fibration_image(up) != reduced) {
            return "image(pullback(" + std::to_string(i) + ", " + reduced.cycle_notation() +
                   ")) != input";
          }
          if (orbit_codimension(up) != orbit_codimension(reduced) + (m - i)) {
            return "codim of " + up.cycle_notation() + " is not codim(" +
                   reduced.cycle_notation() + ") + " + std::to_string(m - i);
          }
        }
      }
    }
    for (const auto& w : enumerate_involutions(m, true)) {
      if (stratum_index(w) == m) return "fpf involution in the top stratum";
      if (!fibration_image(w).is_fixed_point_free()) {
        return "image of " + w.cycle_notation() + " has a fixed point";
      }
    }
    return {};
  });
}

CheckResult check_double_cover(int m) {
  return timed("double cover: splitting, component group, g_j" + suffix(m), [&]() -> std::string {
    for (const auto& w : enumerate_involutions(m, false)) {
      const auto stats = cycle_stats(w);
      if (orbit_splits(w) != (stats.fixed_points == 0)) return "splitting wrong at " + w.cycle_notation();
      if (stabilizer_component_order(w) != (std::uint64_t{1} << stats.fixed_points)) {
        return "component order wrong at " + w.cycle_notation();
      }
      if (orbit_splits(w) != (stabilizer_component_order(w) == 1)) {
        return "split/connected mismatch at " + w.cycle_notation();
      }
      const RepresentativeForm q(w);
      for (int j = 1; j <= m; ++j) {
        if ((q.pairing(j, m) != 0) != (stratum_index(w) == j)) {
          return "g_" + std::to_string(j) + " misdetects the stratum of " + w.cycle_notation();
        }
      }
    }
    return {};
  });
}

CheckResult check_chow_group(int n) {
  return timed("CH*(GL(" + std::to_string(2 * n) + ")/SO(" + std::to_string(2 * n) +
                   ")) = Z@0 + Z@" + std::to_string(n),
               [&]() -> std::string {
                 const auto g = chow_group(n);
                 const auto cert = certificate(n);
                 if (cert.failed_checks != 0) return "certificate reports failed checks";
                 GradedAbelianGroup expected;
                 expected.set(0, {1, {}});
                 expected.set(n, {1, {}});
                 if (g != expected) return "got " + g.to_string();
                 return {};
               });
}

VerificationReport run_verification(const VerifyOptions& options, std::ostream* log) {
  VerificationReport report;
  auto add = [&](CheckResult r) {
    if (log) {
      *log << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " - " << r.detail << " ("
           << r.seconds << " s)\n";
    }
    report.checks.push_back(std::move(r));
  };
  add(check_enumeration_counts(std::min(options.count_limit, 2 * std::max(options.up_to, 1))));
  const int exhaustive = std::min(options.up_to, options.exhaustive_limit);
  for (int n = 1; n <= exhaustive; ++n) {
    const int m = 2 * n;
    add(check_codimension_oracle(m));
    add(check_closure_order(m));
    add(check_fibrations(m));
    add(check_double_cover(m));
  }
  for (int n = 1; n <= options.up_to; ++n) add(check_chow_group(n));
  return report;
}

}  // namespace chowsym
