#pragma once

// Combinatorial plane-curve data and the seed catalog.

#include "cremona/extensions.hpp"
#include "cremona/fpgroup.hpp"
#include "cremona/singularities.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cremona {

/// One applied step in a curve's history. `sequence` is a logical timestamp:
/// strictly increasing along the log.
struct LogEntry {
  std::uint64_t sequence = 0;
  std::string action;  // "seed", "assert", "apply", "note"
  std::string detail;
  bool operator==(const LogEntry&) const = default;
};

class CurveDatum {
 public:
  /// Throws Error on empty or non-positive component degrees.
  CurveDatum(std::vector<Integer> component_degrees, SingularityMultiset singularities, GroupDescriptor group,
             PropertyFlags props, std::optional<Family> family, std::vector<LogEntry> log = {});

  const std::vector<Integer>& component_degrees() const noexcept { return component_degrees_; }
  const Integer& degree() const noexcept { return degree_; }
  std::size_t component_count() const noexcept { return component_degrees_.size(); }
  bool irreducible() const noexcept { return component_degrees_.size() == 1; }
  const SingularityMultiset& singularities() const noexcept { return singularities_; }
  const GroupDescriptor& group() const noexcept { return group_; }
  const PropertyFlags& props() const noexcept { return props_; }
  const std::optional<Family>& family() const noexcept { return family_; }
  const std::vector<LogEntry>& log() const noexcept { return log_; }

  /// Copy with one more log record, stamped after the last one.
  CurveDatum with_log(std::string action, std::string detail) const;

  /// Curve data without the history: degrees, singularities, group, props, family.
  bool same_data(const CurveDatum& other) const;
  bool operator==(const CurveDatum&) const = default;

 private:
  std::vector<Integer> component_degrees_;
  Integer degree_;
  SingularityMultiset singularities_;
  GroupDescriptor group_;
  PropertyFlags props_;
  std::optional<Family> family_;
  std::vector<LogEntry> log_;
};

/// Smooth irreducible curve of degree d: group Z/d.
CurveDatum seed_smooth(const Integer& d);

/// m concurrent lines: one ordinary m-fold point, group F_{m-1}.
CurveDatum seed_pencil(const Integer& m);

/// m lines in general position: C(m,2) nodes, group Z^{m-1}.
CurveDatum seed_generic_lines(const Integer& m);

/// User-supplied curve. Group properties are unknown except the facts implied
/// by `group` and whatever is listed in `asserted`; each assertion is logged.
CurveDatum seed_custom(std::vector<Integer> component_degrees, SingularityMultiset singularities,
                       GroupDescriptor group, const std::vector<std::pair<std::string, Tri>>& asserted = {},
                       std::optional<Integer> asserted_prime = std::nullopt, const std::string& note = {});

/// H_1 of the complement: Z^r modulo the single relation sum d_i e_i.
AbelianInvariants h1_from_degrees(const std::vector<Integer>& component_degrees);

}  // namespace cremona
