#pragma once

// Zariski-pair records and their lifting through the constructions.

#include "cremona/constructions.hpp"
#include "cremona/curves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cremona {

enum class Distinguisher { none, cyclic_vs_noncyclic };
std::string to_string(Distinguisher d);
Distinguisher distinguisher_from_string(const std::string& s);

struct ZariskiPairRecord {
  CurveDatum left;
  CurveDatum right;
  bool combinatorics_equal = false;
  Distinguisher distinguisher = Distinguisher::none;
  long long generation = 0;
  std::optional<ConstructionSpec> parent_spec;
  std::vector<std::string> lineage;  // spec strings applied since the seed pair
  bool operator==(const ZariskiPairRecord&) const = default;
};

/// Same total degree, same sorted component degrees, same singularities.
bool combinatorics_equal(const CurveDatum& a, const CurveDatum& b);

/// Generation-0 record. The distinguisher is cyclic-vs-noncyclic when the
/// combinatorics agree, the left group is cyclic and the right one is
/// certified non-cyclic; none otherwise.
ZariskiPairRecord make_seed_pair(CurveDatum left, CurveDatum right);

/// Whether the right curve is certified non-cyclic: a recognized non-cyclic
/// descriptor, or a recorded nonabelian / non-cyclic fact.
bool certified_noncyclic(const CurveDatum& c);

/// Applies `spec` to both curves. Throws HypothesisError naming the failed
/// hypothesis: combinatorics, irreducible, left-cyclic or right-noncyclic.
ZariskiPairRecord lift_pair(const ZariskiPairRecord& p, const ConstructionSpec& spec);

/// Lifts by General(ns) for every tuple with sum <= bound, ordered by sum, then
/// length, then lexicographically; tuples giving the same combinatorics as an
/// earlier one are dropped.
std::vector<ZariskiPairRecord> enumerate_family(const ZariskiPairRecord& p, long long bound);

}  // namespace cremona
