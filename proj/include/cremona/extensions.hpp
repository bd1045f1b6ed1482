#pragma once

// Classified group descriptors, central extension by a finite cyclic kernel,
// the split criterion and property propagation.

#include "cremona/fpgroup.hpp"
#include "cremona/integer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cremona {

class GroupDescriptor;

struct Cyclic {
  Integer order;
};
struct Free {
  Integer rank;
};
struct FreeAbelian {
  Integer rank;
};
struct FiniteTagged {
  Integer order;
  std::optional<Presentation> presentation;
};
/// A group known only through a user assertion (e.g. a literature result).
struct Asserted {
  std::string label;
};
struct DirectSum {
  std::vector<GroupDescriptor> summands;
};
/// base extended successively by Z/kernels[0], Z/kernels[1], ... with no
/// further identification.
struct Tower {
  std::shared_ptr<const GroupDescriptor> base;
  std::vector<Integer> kernels;
};

/// Canonical descriptor of a group. Every factory canonicalizes: direct sums are
/// flattened, trivial summands dropped, cyclic summands brought to
/// invariant-factor form (so coprime orders merge), free abelian summands
/// merged, and F1 is written as Z.
class GroupDescriptor {
 public:
  using Variant = std::variant<Cyclic, Free, FreeAbelian, FiniteTagged, Asserted, DirectSum, Tower>;

  GroupDescriptor() : GroupDescriptor(trivial()) {}

  static GroupDescriptor trivial() { return cyclic(1); }
  static GroupDescriptor cyclic(Integer order);
  static GroupDescriptor free(Integer rank);
  static GroupDescriptor free_abelian(Integer rank);
  static GroupDescriptor finite(Integer order, std::optional<Presentation> presentation = std::nullopt);
  static GroupDescriptor asserted(std::string label);
  static GroupDescriptor direct_sum(std::vector<GroupDescriptor> summands);
  static GroupDescriptor tower(GroupDescriptor base, std::vector<Integer> kernels);

  /// Parses the canonical text form (`Z/6`, `F2 (+) Z/3`, `Tower(Z/2; 2,3)`, ...).
  static GroupDescriptor parse(const std::string& text);

  const Variant& value() const noexcept { return value_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value_);
  }
  bool is_trivial() const;

  /// Group order when finite and determined, nullopt otherwise.
  std::optional<Integer> order() const;

  /// True when the descriptor pins the group down as cyclic / as non-cyclic.
  /// Both are false for forms the descriptor cannot decide.
  bool certainly_cyclic() const;
  bool certainly_noncyclic() const;

  std::string str() const;

  bool operator==(const GroupDescriptor& rhs) const;
  bool operator<(const GroupDescriptor& rhs) const;

 private:
  explicit GroupDescriptor(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// Standard presentation of a descriptor when one is implied (cyclic, free,
/// free abelian, direct sums of those, and finite groups carrying one).
std::optional<Presentation> standard_presentation(const GroupDescriptor& g);

/// Abelianization of a descriptor when it is determined by the descriptor.
std::optional<AbelianInvariants> descriptor_abelianization(const GroupDescriptor& g);

// ---------------------------------------------------------------- properties

enum class Tri { unknown, yes, no };

std::string to_string(Tri t);
Tri tri_from_string(const std::string& s);

struct ClassInterval {
  Integer lo;
  Integer hi;
  bool operator==(const ClassInterval&) const = default;
};

/// Tri-state group properties. `closed()` adds forced consequences and throws
/// Error on contradictions.
struct PropertyFlags {
  Tri finite = Tri::unknown;
  Tri abelian = Tri::unknown;
  Tri cyclic = Tri::unknown;
  Tri nonabelian = Tri::unknown;
  Tri solvable = Tri::unknown;
  Tri supersolvable = Tri::unknown;
  Tri polycyclic = Tri::unknown;
  Tri nilpotent = Tri::unknown;
  Tri p_group = Tri::unknown;
  std::optional<Integer> p_group_prime;
  Tri virtually_nilpotent = Tri::unknown;
  Tri virtually_solvable = Tri::unknown;
  std::optional<ClassInterval> nilpotency_class;

  PropertyFlags closed() const;

  /// Sets a named flag (`finite`, `p_group`, ...). Throws Error on an unknown name.
  void set(const std::string& name, Tri value);
  Tri get(const std::string& name) const;
  static const std::vector<std::string>& names();

  /// Combines two consistent fact sets; throws Error if they disagree.
  PropertyFlags merged(const PropertyFlags& other) const;

  bool operator==(const PropertyFlags&) const = default;
};

/// Facts implied by a descriptor whose group it determines exactly.
PropertyFlags facts_from_descriptor(const GroupDescriptor& g);

/// One-directional propagation through a central extension by Z/N.
/// `cyclic_rule_applied` keeps cyclicity when the caller used the irreducible
/// cyclic rule of `central_extend`.
PropertyFlags propagate_properties(const PropertyFlags& p, const Integer& kernel_order,
                                   bool cyclic_rule_applied = false);

// ---------------------------------------------------------------- extension

enum class Family { smooth, pencil, generic_lines, custom };
std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct ExtensionContext {
  bool irreducible = false;
  std::optional<Family> family;
};

enum class ExtensionRule {
  irreducible_cyclic,     // (a) Cyclic(r), irreducible -> Cyclic(rN)
  free_group,             // (b) free group: no nontrivial central extensions
  generic_lines,          // (c) generic-line arrangement: Z^{m-1} (+) Z/N
  coprime_finite,         // (d) finite, gcd(|G|, N) = 1 -> G (+) Z/N
  unresolved_tower,       // (e) nothing recognized
};
std::string to_string(ExtensionRule r);

struct ExtensionResult {
  GroupDescriptor group;
  ExtensionRule rule;
};

/// Applies the first matching recognition rule (a)..(e). Throws Error if N < 2.
ExtensionResult central_extend_traced(const GroupDescriptor& g, const Integer& kernel_order,
                                      const ExtensionContext& context);
GroupDescriptor central_extend(const GroupDescriptor& g, const Integer& kernel_order,
                               const ExtensionContext& context);

enum class SplitKind { non_split, splits_as_direct_sum, unknown };
enum class SplitRule { summand_count_not_coprime, coprime_finite, no_rule };

struct SplitVerdict {
  SplitKind kind;
  SplitRule justification;
  bool operator==(const SplitVerdict&) const = default;
};
std::string to_string(SplitKind k);
std::string to_string(SplitRule r);

/// `h1` is H_1 of the complement of a curve with `components` irreducible
/// components. A free summand is never coprime to N (gcd(0, N) = N). The
/// coprime rule reads `h1` as the whole (finite abelian) group.
SplitVerdict split_test(const AbelianInvariants& h1, const Integer& components, const Integer& kernel_order);

}  // namespace cremona
