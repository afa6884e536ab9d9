#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chowsym/int_matrix.hpp"
#include "chowsym/involution.hpp"

namespace chowsym {

struct GroupComponent {
  long rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending by divisibility

  friend bool operator==(const GroupComponent&, const GroupComponent&) = default;
};

/// Finitely generated graded abelian group. Degrees not present are zero;
/// zero components are never stored.
class GradedAbelianGroup {
 public:
  void set(int degree, GroupComponent component);
  GroupComponent at(int degree) const;
  const std::map<int, GroupComponent>& components() const noexcept { return components_; }
  bool has_torsion() const;

  /// E.g. "Z@0 + Z@2" or "Z^2@3 + Z/2@3"; "0" for the zero group.
  std::string to_string() const;

  friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;

 private:
  std::map<int, GroupComponent> components_;
};

/// Chow group of GL(2n)/O(2n): Z in degree 0. The space is an open subset of
/// affine space.
GradedAbelianGroup base_chow_group(int n);
extern const char* const kBaseChowNote;

struct ChowGenerator {
  enum class Kind { X0Tilde, PullbackY };
  Kind kind = Kind::X0Tilde;
  int stratum = 0;  // i for pullback_y(i); 0 for x0_tilde
  Involution orbit;
  int degree = 0;

  /// "x0_tilde" or "pullback_y(i)".
  std::string label() const;
};

struct NonFpfVanishes {
  Involution orbit;
};
struct PlusMinusPair {
  Involution orbit;
};
struct DivisorOfG {
  int j = 0;
};
using RelationReason = std::variant<NonFpfVanishes, PlusMinusPair, DivisorOfG>;

std::string reason_tag(const RelationReason& reason);

struct SideCondition {
  std::string fact;
  bool holds = false;
};

/// An integer relation among generators of a single degree. Audit-only
/// relations (classes eliminated before the generator list) carry an all-zero
/// coefficient vector.
struct ChowRelation {
  std::vector<long> coefficients;
  RelationReason reason;
  int degree = 0;
  std::string justification;
  std::vector<SideCondition> side_conditions;
};

struct ChowPresentation {
  int n = 0;
  std::vector<ChowGenerator> generators;
  std::vector<ChowRelation> relations;

  std::string to_string() const;
};

/// Generators x0_tilde and pullback_y(i), i = 1..2n-1, with the relations the
/// inductive argument produces. Side conditions are evaluated, not asserted.
ChowPresentation build_presentation(int n);

/// Quotient of the free group on the generators by the relations, computed per
/// degree with Smith normal form.
GradedAbelianGroup presented_group(const ChowPresentation& p);

class ChowConsistencyError : public std::runtime_error {
 public:
  ChowConsistencyError(const std::string& what, std::string presentation)
      : std::runtime_error(what), presentation_(std::move(presentation)) {}
  const std::string& presentation() const noexcept { return presentation_; }

 private:
  std::string presentation_;
};

/// CH*(GL(2n)/SO(2n)). Throws ChowConsistencyError unless the result is Z in
/// degrees 0 and n with no torsion.
GradedAbelianGroup chow_group(int n);

struct SurvivorReport {
  Involution orbit;
  int codim = 0;
  int stratum = 0;
  bool fpf = false;
  long fpf_orbits_scanned = 0;
  long fpf_orbits_at_min_codim = 0;
  int min_fpf_codim = 0;
};

struct Certificate {
  int n = 0;
  ChowPresentation presentation;
  GradedAbelianGroup base_group;
  GradedAbelianGroup chow;
  SurvivorReport survivor;
  std::vector<SideCondition> global_checks;  // generator, survivor and degree-0 checks
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;
  int killing_relations = 0;
  int checks_run = 0;
  int failed_checks = 0;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replays the argument for n and checks every combinatorial side condition.
/// Throws CertificateError naming the first failing fact.
Certificate certificate(int n);

}  // namespace chowsym
