#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/constructions.hpp"
#include "cremona/error.hpp"

#include <functional>

using namespace cremona;
using G = GroupDescriptor;
using T = SingularityType;
using S = ConstructionSpec;

namespace {

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

// All specs with parameters <= 4 and tuples of length <= 3.
std::vector<S> spec_grid() {
  std::vector<S> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back(S::single_fiber(n));
    out.push_back(S::special(n));
  }
  const auto ts = tuples(3, 4);
  for (const auto& ns : ts) {
    out.push_back(S::general(ns));
    for (const auto& ms : ts)
      if (sum(ns) == sum(ms)) out.push_back(S::mixed(ns, ms));
  }
  return out;
}

}  // namespace

TEST_CASE("spec parsing") {
  CHECK(S::parse("uludag(3)") == S::single_fiber(3));
  CHECK(S::parse("general(1,2,2)") == S::general({1, 2, 2}));
  CHECK(S::parse(" mixed(2,1;1,1,1) ") == S::mixed({2, 1}, {1, 1, 1}));
  CHECK(S::parse("special(2)") == S::special(2));
  for (const auto& s : spec_grid()) CHECK(S::parse(s.str()) == s);
  CHECK_THROWS_AS(S::parse("general(1,x)"), Error);
  CHECK_THROWS_AS(S::parse("uludag(0)"), Error);
  CHECK_THROWS_AS(S::parse("uludag(1,2)"), Error);
  CHECK_THROWS_AS(S::parse("cremona(1)"), Error);
  CHECK_THROWS_AS(S::parse("general()"), Error);
  CHECK_THROWS_AS(S::parse("mixed(2;1)"), HypothesisError);
  try {
    S::parse("mixed(2;1)");
  } catch (const HypothesisError& e) {
    CHECK(e.hypothesis() == "balance");
  }
  try {
    S::parse("general(1,x)");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("'x'") != std::string::npos);
  }
}

TEST_CASE("kernel orders") {
  CHECK(S::single_fiber(3).kernel_order() == 4);
  CHECK(S::general({1, 2, 2}).kernel_order() == 6);
  CHECK(S::mixed({2, 1}, {1, 1, 1}).kernel_order() == 4);
  CHECK(S::special(2).kernel_order() == 3);
}

TEST_CASE("degree formula") {
  CHECK(degree_after(2, S::single_fiber(1)) == 4);
  CHECK(degree_after(3, S::general({1, 2})) == 12);
  CHECK(degree_after(5, S::special(1)) == 10);
  for (int d = 1; d <= 5; ++d)
    for (const auto& s : spec_grid()) CHECK(degree_after(d, s) == d * s.kernel_order());
}

TEST_CASE("added singularities") {
  CHECK(added_singularities(2, S::single_fiber(1)) == SingularityMultiset{T::flat({2}), T::flat({2, 2})});
  CHECK(added_singularities(2, S::general({1, 2})) ==
        SingularityMultiset{T::flat({2}), T::flat({2, 2}), T::flat({6, 2, 2, 2})});
  CHECK(added_singularities(2, S::mixed({2}, {1, 1})) ==
        SingularityMultiset{T::flat({2, 2}), T::parse("[4,(|[2]|,|[2]|)]")});
  CHECK(added_singularities(2, S::special(1)) == SingularityMultiset{T::flat({4, 2, 2})});
  CHECK(added_singularities(1, S::special(1)) == SingularityMultiset{T::flat({2, 1, 1})});
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n)
      CHECK(added_singularities(d, S::single_fiber(n)) == added_singularities(d, S::general({n})));
}

TEST_CASE("self-intersection audit") {
  const auto r = audit_self_intersection(2, S::general({1, 2}));
  CHECK(r.after_degree == 8);
  CHECK(r.computed == 4);
  CHECK(r.residual == 0);
  CHECK(r.verdict == AuditVerdict::pass);
  CHECK(!r.variant);

  const auto s = audit_self_intersection(1, S::special(1));
  CHECK(s.computed == -2);
  CHECK(s.residual == -3);
  CHECK(s.verdict == AuditVerdict::discrepancy);
  REQUIRE(s.variant);
  CHECK(s.variant->computed == 1);
  CHECK(s.variant->residual == 0);
  CHECK(s.variant->verdict == AuditVerdict::pass);

  for (int d = 1; d <= 5; ++d)
    for (const auto& spec : spec_grid()) {
      const auto a = audit_self_intersection(d, spec);
      if (const auto* sp = spec.get_if<Special>()) {
        CHECK(a.residual == -3 * sp->n * sp->n * d * d);
        CHECK(a.variant->residual == 0);
      } else {
        CHECK(a.residual == 0);
      }
    }
}

TEST_CASE("apply on the seed families") {
  const auto q = apply(seed_smooth(2), S::single_fiber(1));
  CHECK(q.degree() == 4);
  CHECK(q.singularities() == SingularityMultiset{T::flat({2}), T::flat({2, 2})});
  CHECK(q.group() == G::cyclic(4));
  CHECK(q.log().back().action == "apply");

  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 4; ++n) {
      const auto p = apply(seed_pencil(m), S::single_fiber(n));
      CHECK(p.singularities() == SingularityMultiset{T::flat({m}), T::run(m, n), T::with_head(m * n, {T::run(m, n)})});
      CHECK(p.group() == G::direct_sum({G::free(m - 1), G::cyclic(n + 1)}));
    }

  const auto g = apply(seed_generic_lines(4), S::general({1, 2}));
  CHECK(g.group().str() == "Z^3 (+) Z/4");
  CHECK(g.singularities().count(T::flat({2})) == 6);
  CHECK(g.singularities().count(T::flat({4})) == 1);
  CHECK(g.singularities().count(T::flat({12, 4, 4, 4})) == 1);
}

TEST_CASE("apply invariants") {
  const std::vector<CurveDatum> seeds{seed_smooth(1), seed_smooth(3), seed_pencil(3), seed_generic_lines(3),
                                      seed_custom({2, 2}, {}, G::direct_sum({G::free_abelian(1), G::cyclic(2)}))};
  for (const auto& c : seeds)
    for (const auto& spec : spec_grid()) {
      const auto out = apply(c, spec);
      const Integer n = spec.kernel_order();
      REQUIRE(out.component_count() == c.component_count());
      for (std::size_t i = 0; i < c.component_count(); ++i)
        CHECK(out.component_degrees()[i] == c.component_degrees()[i] * n);
      CHECK(out.degree() == degree_after(c.degree(), spec));
      const auto h_before = h1_from_degrees(c.component_degrees());
      const auto h_after = h1_from_degrees(out.component_degrees());
      CHECK(h_after.free_rank == h_before.free_rank);
      const Integer g_before = h_before.torsion.empty() ? Integer(1) : h_before.torsion.back();
      const Integer g_after = h_after.torsion.empty() ? Integer(1) : h_after.torsion.back();
      CHECK(g_after == g_before * n);
      if (const auto o = c.group().order()) {
        REQUIRE(out.group().order());
        CHECK(*out.group().order() == *o * n);
      }
      CHECK(out.singularities().size() == c.singularities().size() + added_singularities(c.degree(), spec).size());
    }
}

TEST_CASE("uludag equals the one-fiber general construction") {
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 4; ++n) {
      const auto a = apply(seed_smooth(d), S::single_fiber(n));
      const auto b = apply(seed_smooth(d), S::general({n}));
      CHECK(a.same_data(b));
    }
}

TEST_CASE("two fibers are not two successive single-fiber steps") {
  for (int d = 1; d <= 3; ++d)
    for (int n1 = 1; n1 <= 3; ++n1)
      for (int n2 = 1; n2 <= 3; ++n2) {
        const auto once = apply(seed_smooth(d), S::general({n1, n2}));
        const auto twice = apply(apply(seed_smooth(d), S::single_fiber(n1)), S::single_fiber(n2));
        CHECK(once.degree() == d * (n1 + n2 + 1));
        CHECK(twice.degree() == d * (n1 + 1) * (n2 + 1));
        CHECK(once.degree() != twice.degree());
        CHECK(once.singularities() != twice.singularities());
      }
}

TEST_CASE("special construction records the consistent variant") {
  const auto c = apply(seed_smooth(2), S::special(2));
  REQUIRE(c.log().size() == 3);
  CHECK(c.log()[1].detail.find("audit=discrepancy") != std::string::npos);
  CHECK(c.log()[2].action == "note");
  CHECK(special_consistent_type(2, 2) == T::flat({4, 2, 2, 2, 2}));
}
