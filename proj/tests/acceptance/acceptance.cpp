// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include "../support/oracles.hpp"
#include "cremona/constructions.hpp"
#include "cremona/meridians.hpp"
#include "cremona/zariski.hpp"

#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <sstream>

using namespace cremona;
using G = GroupDescriptor;
using S = ConstructionSpec;

namespace {

struct Check {
  std::size_t cases = 0;
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::vector<std::vector<Integer>> tuples(std::size_t max_len, int max_value) {
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur;
  std::function<void()> rec = [&] {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (int v = 1; v <= max_value; ++v) {
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

Integer sum(const std::vector<Integer>& xs) {
  Integer s = 0;
  for (const auto& x : xs) s += x;
  return s;
}

// SingleFiber, General and Mixed specs over tuples with k <= 3, n_i <= 4.
std::vector<S> spec_grid() {
  std::vector<S> out;
  for (int n = 1; n <= 4; ++n) out.push_back(S::single_fiber(n));
  const auto ts = tuples(3, 4);
  for (const auto& ns : ts) {
    out.push_back(S::general(ns));
    for (const auto& ms : ts)
      if (sum(ns) == sum(ms)) out.push_back(S::mixed(ns, ms));
  }
  return out;
}

std::string join(const std::vector<Integer>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

Check degree_formula() {
  Check c;
  for (int d = 1; d <= 5; ++d)
    for (const auto& ns : tuples(3, 4))
      c.expect(degree_after(d, S::general(ns)) == d * (sum(ns) + 1), "d=" + std::to_string(d) + " (" + join(ns) + ")");
  return c;
}

Check self_intersection_audit() {
  Check c;
  for (int d = 1; d <= 5; ++d)
    for (const auto& spec : spec_grid()) {
      const auto r = audit_self_intersection(d, spec);
      c.expect(r.residual == 0 && r.verdict == AuditVerdict::pass, spec.str() + " d=" + std::to_string(d));
    }
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= 4; ++n) {
      const auto r = audit_self_intersection(d, S::special(n));
      c.expect(r.residual == -3 * n * n * d * d && r.verdict == AuditVerdict::discrepancy,
               "special(" + std::to_string(n) + ") d=" + std::to_string(d) + " verbatim residual " + r.residual.str());
      c.expect(r.variant && r.variant->residual == 0 && r.variant->verdict == AuditVerdict::pass,
               "special(" + std::to_string(n) + ") d=" + std::to_string(d) + " variant");
    }
  return c;
}

Check kernel_order() {
  Check c;
  for (const auto& ns : tuples(4, 5))
    c.expect(cyclic_quotient_order(ns) == sum(ns) + 1, "(" + join(ns) + ")");
  return c;
}

Check meridian_closed_forms() {
  Check c;
  for (const auto& ns : tuples(4, 4)) {
    const auto s = run_schedule_state(S::general(ns));
    std::vector<Letter> e{{"beta", false}};
    for (std::size_t i = 1; i <= ns.size(); ++i) e.push_back({"alpha" + std::to_string(i), false});
    c.expect(s.fibers.at("P").letters() == std::vector<Letter>{{"beta", false}}, "P for (" + join(ns) + ")");
    for (std::size_t i = 0; i < ns.size(); ++i) {
      std::vector<Letter> want;
      for (Integer r = 0; r < ns[i]; ++r) want.insert(want.end(), e.begin(), e.end());
      want.push_back({"alpha" + std::to_string(i + 1), false});
      c.expect(s.fibers.at("Q" + std::to_string(i + 1)).letters() == want,
               "Q" + std::to_string(i + 1) + " for (" + join(ns) + ")");
    }
    c.expect(s.max_index == sum(ns) + 1 && s.hirzebruch_index == 1, "index for (" + join(ns) + ")");
  }
  for (int n = 1; n <= 6; ++n) {
    const auto s = run_schedule_state(S::special(n));
    c.expect(s.fibers.at("L").letters() == std::vector<Letter>(static_cast<std::size_t>(n + 1), Letter{"alpha", false}),
             "special(" + std::to_string(n) + ")");
    c.expect(s.max_index == n + 1, "special index " + std::to_string(n));
  }
  return c;
}

Check smooth_family() {
  Check c;
  for (int d = 1; d <= 5; ++d)
    for (const auto& spec : spec_grid()) {
      const auto out = apply(seed_smooth(d), spec);
      c.expect(out.group() == G::cyclic(d * spec.kernel_order()), spec.str() + " d=" + std::to_string(d));
    }
  const auto q = apply(seed_smooth(2), S::single_fiber(1));
  c.expect(q.degree() == 4, "conic degree");
  c.expect(q.singularities() == SingularityMultiset{SingularityType::flat({2}), SingularityType::flat({2, 2})},
           "conic singularities " + q.singularities().str());
  return c;
}

Check line_families() {
  Check c;
  for (int m = 2; m <= 5; ++m)
    for (const auto& spec : spec_grid()) {
      const Integer n = spec.kernel_order();
      const auto added = added_singularities(m, spec);

      const auto p = apply(seed_pencil(m), spec);
      c.expect(p.group() == G::direct_sum({G::free(m - 1), G::cyclic(n)}), "pencil " + spec.str());
      c.expect(p.singularities() == SingularityMultiset{SingularityType::flat({m})}.united(added),
               "pencil sings " + spec.str());

      const auto g = apply(seed_generic_lines(m), spec);
      c.expect(g.group() == G::direct_sum({G::free_abelian(m - 1), G::cyclic(n)}), "lines " + spec.str());
      const auto nodes = SingularityMultiset(
          std::vector<SingularityType>(static_cast<std::size_t>(m * (m - 1) / 2), SingularityType::flat({2})));
      c.expect(g.singularities() == nodes.united(added), "lines sings " + spec.str());
    }
  // the pencil SingleFiber(n) multiset written out
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 4; ++n)
      c.expect(apply(seed_pencil(m), S::single_fiber(n)).singularities() ==
                   SingularityMultiset{SingularityType::flat({m}), SingularityType::run(m, n),
                                       SingularityType::with_head(m * n, {SingularityType::run(m, n)})},
               "pencil uludag explicit");
  return c;
}

Check split_criterion() {
  Check c;
  c.expect(split_test({0, {2}}, 1, 2).kind == SplitKind::non_split, "Z/2 r=1 N=2");
  c.expect(split_test({0, {3}}, 1, 2).kind == SplitKind::splits_as_direct_sum, "Z/3 r=1 N=2");
  c.expect(split_test({1, {2}}, 1, 2).kind == SplitKind::unknown, "Z+Z/2 r=1 N=2");
  const auto conic = central_extend(G::cyclic(2), 2, {true, std::nullopt});
  c.expect(conic == G::cyclic(4) && conic != G::direct_sum({G::cyclic(2), G::cyclic(2)}), "Z/4 vs Z/2+Z/2");

  for (std::size_t f = 0; f <= 3; ++f)
    for (long long t1 = 1; t1 <= 6; ++t1)
      for (long long t2 = 1; t2 <= 6; ++t2) {
        if (t1 == 1 && t2 > 1) continue;
        if (t2 > 1 && t2 % t1 != 0) continue;
        std::vector<long long> tors;
        for (long long t : {t1, t2})
          if (t > 1) tors.push_back(t);
        if (f + tors.size() > 3) continue;
        AbelianInvariants h1{f, {}};
        Integer order = 1;
        for (auto t : tors) {
          h1.torsion.push_back(t);
          order *= t;
        }
        for (int r = 1; r <= 3; ++r)
          for (long long n = 2; n <= 6; ++n) {
            const auto v = split_test(h1, r, n);
            bool all_shared = true;
            for (auto t : tors) all_shared = all_shared && std::gcd(t, n) > 1;
            const bool nonsplit = f + tors.size() == static_cast<std::size_t>(r) && all_shared;
            const bool splits = !nonsplit && f == 0 && gcd(order, Integer(n)) == 1;
            const auto want = nonsplit ? SplitKind::non_split
                              : splits ? SplitKind::splits_as_direct_sum
                                       : SplitKind::unknown;
            const std::string label = h1.str() + " r=" + std::to_string(r) + " N=" + std::to_string(n);
            c.expect(v.kind == want, label);
            auto with_kernel = tors;
            with_kernel.push_back(n);
            if (v.kind == SplitKind::non_split)
              c.expect(oracle::minimal_generators(f, with_kernel) == static_cast<std::size_t>(r) + 1, label + " oracle");
            if (v.kind == SplitKind::splits_as_direct_sum) {
              std::vector<G> parts{G::cyclic(n)};
              for (auto t : tors) parts.push_back(G::cyclic(t));
              c.expect(G::direct_sum(parts).order() == order * n, label + " order");
            }
          }
      }
  return c;
}

Check snf_oracle() {
  Check c;
  std::mt19937 rng(20261018);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 500; ++t) {
    oracle::Matrix m(3, std::vector<Integer>(3));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto factors = smith_normal_form(IntMatrix::from_rows(m));
    bool chain = true;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      chain = chain && factors[i] > 0;
      if (i > 0) chain = chain && factors[i] % factors[i - 1] == 0;
    }
    c.expect(chain, "chain #" + std::to_string(t));
    const Integer det = oracle::bareiss_det(m);
    if (det != 0) {
      Integer prod = 1;
      for (const auto& f : factors) prod *= f;
      c.expect(factors.size() == 3 && prod == abs(det), "product #" + std::to_string(t));
    }
    c.expect(factors == oracle::invariant_factors(m), "determinantal divisors #" + std::to_string(t));
  }
  return c;
}

Check zariski_lifting() {
  Check c;
  const SingularityMultiset cusps(std::vector<SingularityType>(6, SingularityType::flat({2})));
  const auto seed = make_seed_pair(
      seed_custom({6}, cusps, G::cyclic(6)),
      seed_custom({6}, cusps, G::asserted("Z/2*Z/3"), {{"nonabelian", Tri::yes}}, std::nullopt, "sextic"));
  c.expect(seed.combinatorics_equal, "seed combinatorics");
  const auto family = enumerate_family(seed, 2);
  c.expect(family.size() == 3, "three records, got " + std::to_string(family.size()));
  const std::vector<G> want{G::cyclic(12), G::cyclic(18), G::cyclic(18)};
  for (std::size_t i = 0; i < family.size() && i < 3; ++i) {
    c.expect(family[i].combinatorics_equal && combinatorics_equal(family[i].left, family[i].right),
             "record " + std::to_string(i) + " combinatorics");
    c.expect(family[i].generation == 1, "record " + std::to_string(i) + " generation");
    c.expect(family[i].left.group() == want[i], "record " + std::to_string(i) + " left group");
    c.expect(family[i].right.props().cyclic == Tri::no, "record " + std::to_string(i) + " right non-cyclic");
    for (std::size_t j = 0; j < i; ++j)
      c.expect(family[i].left.singularities() != family[j].left.singularities(),
               "records " + std::to_string(j) + "," + std::to_string(i) + " distinct");
  }
  return c;
}

Check non_reproducibility() {
  Check c;
  const auto two_fibers = S::general({1, 1});
  const auto one_fiber = S::single_fiber(1);
  c.expect(two_fibers.kernel_order() == 3, "general(1,1) kernel");
  c.expect(one_fiber.kernel_order() * one_fiber.kernel_order() == 4, "uludag(1) twice kernel");
  for (int d = 1; d <= 5; ++d) {
    const auto once = apply(seed_smooth(d), two_fibers);
    const auto twice = apply(apply(seed_smooth(d), one_fiber), one_fiber);
    c.expect(once.degree() == 3 * d && twice.degree() == 4 * d, "degrees d=" + std::to_string(d));
    c.expect(once.group() == G::cyclic(3 * d) && twice.group() == G::cyclic(4 * d), "groups d=" + std::to_string(d));
    c.expect(once.singularities() != twice.singularities(), "singularities d=" + std::to_string(d));
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"degree formula", degree_formula},
      {"self-intersection audit", self_intersection_audit},
      {"kernel order via abelianization", kernel_order},
      {"meridian closed forms", meridian_closed_forms},
      {"smooth-curve family", smooth_family},
      {"line-arrangement families", line_families},
      {"split / non-split", split_criterion},
      {"Smith normal form oracle", snf_oracle},
      {"Zariski lifting", zariski_lifting},
      {"non-reproducibility pin", non_reproducibility},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string error;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && c.failures.empty() && c.cases > 0;
    failed += ok ? 0 : 1;
    std::cout << "criterion " << (i + 1) << " [" << criteria[i].first << "]: " << (ok ? "PASS" : "FAIL") << " ("
              << c.cases << " checks)";
    if (!error.empty()) std::cout << " exception: " << error;
    for (const auto& f : c.failures) std::cout << "\n    failed: " << f;
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
