#include "cremona/zariski.hpp"

#include "cremona/error.hpp"

#include <algorithm>
#include <functional>

namespace cremona {

std::string to_string(Distinguisher d) { return d == Distinguisher::none ? "none" : "cyclic-vs-noncyclic"; }

Distinguisher distinguisher_from_string(const std::string& s) {
  if (s == "none") return Distinguisher::none;
  if (s == "cyclic-vs-noncyclic") return Distinguisher::cyclic_vs_noncyclic;
  throw Error("unknown distinguisher '" + s + "'");
}

bool combinatorics_equal(const CurveDatum& a, const CurveDatum& b) {
  auto da = a.component_degrees();
  auto db = b.component_degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return a.degree() == b.degree() && da == db && a.singularities() == b.singularities();
}

bool certified_noncyclic(const CurveDatum& c) {
  return c.group().certainly_noncyclic() || c.props().nonabelian == Tri::yes || c.props().cyclic == Tri::no;
}

namespace {

bool left_cyclic(const CurveDatum& c) { return c.group().get_if<Cyclic>() != nullptr; }

}  // namespace

ZariskiPairRecord make_seed_pair(CurveDatum left, CurveDatum right) {
  const bool eq = combinatorics_equal(left, right);
  const bool distinct = eq && left_cyclic(left) && certified_noncyclic(right);
  return {std::move(left),
          std::move(right),
          eq,
          distinct ? Distinguisher::cyclic_vs_noncyclic : Distinguisher::none,
          0,
          std::nullopt,
          {}};
}

ZariskiPairRecord lift_pair(const ZariskiPairRecord& p, const ConstructionSpec& spec) {
  if (!p.combinatorics_equal || !combinatorics_equal(p.left, p.right))
    throw HypothesisError("combinatorics", "the two curves must have the same combinatorics");
  if (!p.left.irreducible() || !p.right.irreducible())
    throw HypothesisError("irreducible", "lifting needs two irreducible curves");
  if (!left_cyclic(p.left))
    throw HypothesisError("left-cyclic", "the left curve's group must be cyclic, got " + p.left.group().str());
  if (!certified_noncyclic(p.right))
    throw HypothesisError("right-noncyclic",
                          "the right curve's group must be certified non-cyclic, got " + p.right.group().str());

  CurveDatum left = apply(p.left, spec);
  CurveDatum right = apply(p.right, spec);
  if (!combinatorics_equal(left, right)) throw Error("lifted curves lost equal combinatorics");
  if (!left_cyclic(left)) throw Error("lifted left group is not cyclic: " + left.group().str());

  if (right.props().cyclic != Tri::no) {
    PropertyFlags props = right.props();
    props.cyclic = Tri::no;
    right = CurveDatum(right.component_degrees(), right.singularities(), right.group(), props, right.family(),
                       right.log())
                .with_log("assert", "cyclic=false (central extension of a non-cyclic group)");
  }

  ZariskiPairRecord out{std::move(left), std::move(right), true, Distinguisher::cyclic_vs_noncyclic,
                        p.generation + 1, spec, p.lineage};
  out.lineage.push_back(spec.str());
  return out;
}

std::vector<ZariskiPairRecord> enumerate_family(const ZariskiPairRecord& p, long long bound) {
  std::vector<std::vector<Integer>> tuples;
  for (long long total = 1; total <= bound; ++total) {
    std::vector<std::vector<Integer>> level;
    std::vector<Integer> current;
    std::function<void(long long)> rec = [&](long long left) {
      if (left == 0) {
        level.push_back(current);
        return;
      }
      for (long long n = 1; n <= left; ++n) {
        current.push_back(n);
        rec(left - n);
        current.pop_back();
      }
    };
    rec(total);
    std::stable_sort(level.begin(), level.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    tuples.insert(tuples.end(), level.begin(), level.end());
  }

  std::vector<ZariskiPairRecord> out;
  for (const auto& ns : tuples) {
    auto rec = lift_pair(p, ConstructionSpec::general(ns));
    const bool dup = std::any_of(out.begin(), out.end(),
                                 [&](const ZariskiPairRecord& r) { return combinatorics_equal(r.left, rec.left); });
    if (!dup) out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace cremona
