#include "cremona/curves.hpp"

#include "cremona/error.hpp"

namespace cremona {

CurveDatum::CurveDatum(std::vector<Integer> component_degrees, SingularityMultiset singularities,
                       GroupDescriptor group, PropertyFlags props, std::optional<Family> family,
                       std::vector<LogEntry> log)
    : component_degrees_(std::move(component_degrees)),
      singularities_(std::move(singularities)),
      group_(std::move(group)),
      props_(props.closed()),
      family_(family),
      log_(std::move(log)) {
  if (component_degrees_.empty()) throw Error("a curve needs at least one component");
  for (const auto& d : component_degrees_) {
    if (d < 1) throw Error("component degree must be >= 1, got " + d.str());
    degree_ += d;
  }
  for (std::size_t i = 1; i < log_.size(); ++i)
    if (log_[i].sequence <= log_[i - 1].sequence) throw Error("curve log is not in sequence order");
}

CurveDatum CurveDatum::with_log(std::string action, std::string detail) const {
  CurveDatum out = *this;
  const std::uint64_t next = log_.empty() ? 0 : log_.back().sequence + 1;
  out.log_.push_back({next, std::move(action), std::move(detail)});
  return out;
}

bool CurveDatum::same_data(const CurveDatum& other) const {
  return component_degrees_ == other.component_degrees_ && singularities_ == other.singularities_ &&
         group_ == other.group_ && props_ == other.props_ && family_ == other.family_;
}

CurveDatum seed_smooth(const Integer& d) {
  if (d < 1) throw Error("smooth curve degree must be >= 1, got " + d.str());
  auto group = GroupDescriptor::cyclic(d);
  return CurveDatum({d}, {}, group, facts_from_descriptor(group), Family::smooth)
      .with_log("seed", "smooth(" + d.str() + ")");
}

CurveDatum seed_pencil(const Integer& m) {
  if (m < 2) throw Error("a pencil needs at least two lines, got " + m.str());
  check_expansion(m, "line count");
  auto group = GroupDescriptor::free(m - 1);
  return CurveDatum(std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)),
                    SingularityMultiset{SingularityType::flat({m})}, group, facts_from_descriptor(group),
                    Family::pencil)
      .with_log("seed", "pencil(" + m.str() + ")");
}

CurveDatum seed_generic_lines(const Integer& m) {
  if (m < 2) throw Error("a line arrangement needs at least two lines, got " + m.str());
  const Integer nodes = m * (m - 1) / 2;
  check_expansion(nodes, "node count");
  std::vector<SingularityType> sings;
  for (Integer i = 0; i < nodes; ++i) sings.push_back(SingularityType::flat({2}));
  auto group = GroupDescriptor::free_abelian(m - 1);
  // Two lines form a pencil as well.
  const auto family = m == 2 ? Family::pencil : Family::generic_lines;
  return CurveDatum(std::vector<Integer>(static_cast<std::size_t>(m), Integer(1)), SingularityMultiset(std::move(sings)),
                    group, facts_from_descriptor(group), family)
      .with_log("seed", "generic-lines(" + m.str() + ")");
}

CurveDatum seed_custom(std::vector<Integer> component_degrees, SingularityMultiset singularities,
                       GroupDescriptor group, const std::vector<std::pair<std::string, Tri>>& asserted,
                       std::optional<Integer> asserted_prime, const std::string& note) {
  PropertyFlags claims;
  for (const auto& [name, value] : asserted) claims.set(name, value);
  if (claims.p_group == Tri::yes) claims.p_group_prime = asserted_prime;
  const PropertyFlags props = facts_from_descriptor(group).merged(claims);
  CurveDatum c(std::move(component_degrees), std::move(singularities), group, props, Family::custom);
  c = c.with_log("seed", note.empty() ? "custom" : "custom: " + note);
  for (const auto& [name, value] : asserted) c = c.with_log("assert", name + "=" + to_string(value));
  return c;
}

AbelianInvariants h1_from_degrees(const std::vector<Integer>& component_degrees) {
  if (component_degrees.empty()) throw Error("h1_from_degrees needs at least one component");
  IntMatrix relation(1, component_degrees.size());
  for (std::size_t i = 0; i < component_degrees.size(); ++i) {
    if (component_degrees[i] < 1) throw Error("component degree must be >= 1");
    relation(0, i) = component_degrees[i];
  }
  return abelian_invariants_of_relations(relation);
}

}  // namespace cremona
