#pragma once

// The four Cremona constructions acting on curve data: degree, added
// singularities, group extension and the self-intersection audit.

#include "cremona/curves.hpp"
#include "cremona/integer.hpp"
#include "cremona/singularities.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cremona {

/// One fiber, n type-1 steps on it, n type-2 steps on a second fiber. Text form `uludag(n)`.
struct SingleFiber {
  Integer n;
};
/// k fibers Q_i with n_i type-1 steps each; all type-2 steps on one fiber P.
struct General {
  std::vector<Integer> ns;
};
/// type-1 steps on Q_1..Q_k, type-2 steps on P_1..P_l; sum n_i = sum m_j.
struct Mixed {
  std::vector<Integer> ns;
  std::vector<Integer> ms;
};
/// n type-1 then n type-2 steps, all on the same fiber L.
struct Special {
  Integer n;
};

class ConstructionSpec {
 public:
  using Kind = std::variant<SingleFiber, General, Mixed, Special>;

  /// Factories validate: every parameter >= 1, tuples nonempty, Mixed balanced.
  static ConstructionSpec single_fiber(Integer n);
  static ConstructionSpec general(std::vector<Integer> ns);
  static ConstructionSpec mixed(std::vector<Integer> ns, std::vector<Integer> ms);
  static ConstructionSpec special(Integer n);

  /// `uludag(3)`, `general(1,2,2)`, `mixed(2,1;1,1,1)`, `special(2)`.
  static ConstructionSpec parse(const std::string& text);

  const Kind& kind() const noexcept { return kind_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&kind_);
  }

  /// N: the order of the cyclic kernel of the group extension.
  Integer kernel_order() const;
  /// Type-1 step counts per fiber as a tuple (SingleFiber(n) and Special(n) give (n)).
  std::vector<Integer> first_type_counts() const;

  std::string str() const;
  bool operator==(const ConstructionSpec& rhs) const { return str() == rhs.str(); }

 private:
  explicit ConstructionSpec(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

Integer degree_after(const Integer& d, const ConstructionSpec& spec);

/// Singularities created by the construction on a curve of degree d. For
/// Special(n) this is the published type [2nd, d_{2n}]; see audit.
SingularityMultiset added_singularities(const Integer& d, const ConstructionSpec& spec);

/// [nd, d_{2n}]: the Special(n) type for which the self-intersection identity closes.
SingularityType special_consistent_type(const Integer& d, const Integer& n);

enum class AuditVerdict { pass, discrepancy };
std::string to_string(AuditVerdict v);

struct AuditEvaluation {
  std::string added;          // display of the singularities subtracted
  Integer computed;           // d~^2 - sum of drops
  Integer residual;           // computed - d^2
  AuditVerdict verdict;
  bool operator==(const AuditEvaluation&) const = default;
};

/// Checks d~^2 - sum drop(added) = d^2. Special specs also carry the
/// evaluation with the consistent head multiplicity nd.
struct AuditReport {
  std::string spec;
  Integer before_degree;
  Integer after_degree;
  Integer expected_base_self_intersection;  // d^2
  Integer computed;
  Integer residual;
  AuditVerdict verdict;
  std::optional<AuditEvaluation> variant;
  bool operator==(const AuditReport&) const = default;
};

AuditReport audit_self_intersection(const Integer& before_degree, const ConstructionSpec& spec);

/// Applies the construction: component degrees scale by N, the added
/// singularities join the old ones, the group is centrally extended by Z/N and
/// the properties propagate. The log records the spec, extension rule and audit.
CurveDatum apply(const CurveDatum& c, const ConstructionSpec& spec);

}  // namespace cremona
