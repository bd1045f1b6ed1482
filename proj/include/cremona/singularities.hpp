#pragma once

// Multiplicity sequences of singular points and their self-intersection drops.
//
// A type is a list of entries. A plain entry is the multiplicity before one
// blow-up; a nested entry (M, clusters) is a point of multiplicity M whose
// blow-up separates into several infinitely near points, one per cluster.
// Runs of equal multiplicities print abbreviated: [2,2,2] is [2_3].

#include "cremona/integer.hpp"

#include <string>
#include <variant>
#include <vector>

namespace cremona {

class SingularityType;

/// Longest run of stored entries (and largest expanded list) a type or a seed
/// may hold; longer requests are rejected with Error.
inline constexpr long long kMaxExpandedLength = 1'000'000;

/// Throws Error naming `what` if `count` exceeds kMaxExpandedLength.
void check_expansion(const Integer& count, const char* what);

struct NestedEntry {
  Integer head;
  std::vector<SingularityType> clusters;  // sorted
};

class SingularityType {
 public:
  using Entry = std::variant<Integer, NestedEntry>;

  SingularityType() = default;
  /// Flat type [t1, ..., ts]; every ti >= 1.
  static SingularityType flat(std::vector<Integer> multiplicities);
  /// `value` repeated `count` times.
  static SingularityType run(const Integer& value, const Integer& count);
  /// Same shape rules as blowdown_type() but admits head 1, for the
  /// bookkeeping entries of degree-one components.
  static SingularityType with_head(const Integer& head, std::vector<SingularityType> clusters);

  /// Accepts `[3,3]`, `[2_3]`, `[4,2_2]`, `[6,(|[2_2]|,|[2]|)]`.
  static SingularityType parse(const std::string& text);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_flat() const;
  /// Flat entries, expanding nothing; throws Error on a nested type.
  std::vector<Integer> multiplicities() const;

  /// Full form, every entry kept: round-trips through parse().
  std::string str() const;
  /// Display form: multiplicity-1 entries are elided (a type made only of
  /// 1-entries is shown in full).
  std::string display() const;

  bool operator==(const SingularityType& rhs) const;
  bool operator<(const SingularityType& rhs) const;

 private:
  std::vector<Entry> entries_;
};

/// d-tacnode of order q: [d_{q+1}]. Throws Error if d < 2 or q < 0.
SingularityType tacnode_type(const Integer& d, const Integer& order);

/// A point of multiplicity `head` blowing up into `clusters`. A single flat
/// cluster flattens to [head, cluster...]. Throws Error if head < 2 or
/// clusters is empty.
SingularityType blowdown_type(const Integer& head, std::vector<SingularityType> clusters);

/// Self-intersection decrease when resolving: sum of squared multiplicities,
/// recursing into clusters.
Integer drop(const SingularityType& t);

/// Sorted multiset of singularity types.
class SingularityMultiset {
 public:
  SingularityMultiset() = default;
  SingularityMultiset(std::initializer_list<SingularityType> items);
  explicit SingularityMultiset(std::vector<SingularityType> items);

  void insert(SingularityType t);
  SingularityMultiset united(const SingularityMultiset& other) const;

  const std::vector<SingularityType>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t count(const SingularityType& t) const;
  Integer total_drop() const;

  /// `{[2], [2_2]}` in display form.
  std::string display() const;
  /// Same with every entry kept.
  std::string str() const;

  bool operator==(const SingularityMultiset&) const = default;

 private:
  std::vector<SingularityType> items_;
};

}  // namespace cremona
