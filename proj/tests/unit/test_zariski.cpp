#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/error.hpp"
#include "cremona/zariski.hpp"

#include <functional>

using namespace cremona;
using G = GroupDescriptor;
using S = ConstructionSpec;

namespace {

SingularityMultiset six_cusps() { return SingularityMultiset(std::vector<SingularityType>(6, SingularityType::flat({2}))); }

ZariskiPairRecord sextic_pair() {
  return make_seed_pair(seed_custom({6}, six_cusps(), G::cyclic(6), {}, std::nullopt, "sextic, cyclic"),
                        seed_custom({6}, six_cusps(), G::asserted("Z/2*Z/3"), {{"nonabelian", Tri::yes}},
                                    std::nullopt, "sextic, non-cyclic"));
}

std::string hypothesis_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const HypothesisError& e) {
    return e.hypothesis();
  }
  return "";
}

}  // namespace

TEST_CASE("combinatorics comparison") {
  const auto c = seed_smooth(3);
  CHECK(combinatorics_equal(c, c));
  CHECK(!combinatorics_equal(seed_pencil(3), seed_generic_lines(3)));
  CHECK(combinatorics_equal(seed_custom({6}, six_cusps(), G::cyclic(6)),
                            seed_custom({6}, six_cusps(), G::asserted("other"))));
  CHECK(combinatorics_equal(seed_custom({1, 2}, {}, G::trivial()), seed_custom({2, 1}, {}, G::free(1))));
  CHECK(!combinatorics_equal(seed_custom({1, 2}, {}, G::trivial()), seed_custom({3}, {}, G::trivial())));
}

TEST_CASE("seed pair") {
  const auto p = sextic_pair();
  CHECK(p.combinatorics_equal);
  CHECK(p.distinguisher == Distinguisher::cyclic_vs_noncyclic);
  CHECK(p.generation == 0);
  const auto q = make_seed_pair(seed_smooth(2), seed_smooth(3));
  CHECK(!q.combinatorics_equal);
  CHECK(q.distinguisher == Distinguisher::none);
}

TEST_CASE("lifting") {
  const auto a = lift_pair(sextic_pair(), S::single_fiber(1));
  CHECK(a.generation == 1);
  CHECK(a.left.degree() == 12);
  CHECK(a.left.group() == G::cyclic(12));
  CHECK(a.right.props().cyclic == Tri::no);
  CHECK(a.right.props().nonabelian == Tri::yes);
  CHECK(a.combinatorics_equal);
  CHECK(a.parent_spec == S::single_fiber(1));
  CHECK(a.lineage == std::vector<std::string>{"uludag(1)"});

  const auto b = lift_pair(sextic_pair(), S::general({1, 1}));
  CHECK(b.left.degree() == 18);
  CHECK(b.left.group() == G::cyclic(18));

  const auto c = lift_pair(a, S::single_fiber(2));
  CHECK(c.generation == 2);
  CHECK(c.left.group() == G::cyclic(36));
  CHECK(c.lineage.size() == 2);
}

TEST_CASE("lifting hypotheses") {
  const auto reducible = make_seed_pair(seed_custom({3, 3}, {}, G::cyclic(3)),
                                        seed_custom({3, 3}, {}, G::asserted("x"), {{"nonabelian", Tri::yes}}));
  CHECK(hypothesis_of([&] { lift_pair(reducible, S::single_fiber(1)); }) == "irreducible");
  const auto mismatched = make_seed_pair(seed_smooth(6), seed_custom({6}, six_cusps(), G::asserted("x")));
  CHECK(hypothesis_of([&] { lift_pair(mismatched, S::single_fiber(1)); }) == "combinatorics");
  const auto noncyclic_left =
      make_seed_pair(seed_custom({6}, six_cusps(), G::asserted("x")), seed_custom({6}, six_cusps(), G::free(2)));
  CHECK(hypothesis_of([&] { lift_pair(noncyclic_left, S::single_fiber(1)); }) == "left-cyclic");
  const auto uncertified =
      make_seed_pair(seed_custom({6}, six_cusps(), G::cyclic(6)), seed_custom({6}, six_cusps(), G::asserted("x")));
  CHECK(hypothesis_of([&] { lift_pair(uncertified, S::single_fiber(1)); }) == "right-noncyclic");
}

TEST_CASE("family enumeration") {
  const auto p = sextic_pair();
  CHECK(enumerate_family(p, 0).empty());
  const auto one = enumerate_family(p, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parent_spec == S::general({1}));
  const auto two = enumerate_family(p, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].parent_spec == S::general({1}));
  CHECK(two[1].parent_spec == S::general({2}));
  CHECK(two[2].parent_spec == S::general({1, 1}));
  const auto three = enumerate_family(p, 3);
  // (1,2) and (2,1) give the same curves
  CHECK(three.size() == 6);
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(three[i].combinatorics_equal);
    CHECK(three[i].generation == 1);
    for (std::size_t j = 0; j < i; ++j) CHECK(three[i].left.singularities() != three[j].left.singularities());
  }
}

TEST_CASE("left order after several generations") {
  auto rec = sextic_pair();
  Integer expected = 6;
  for (const auto& spec : {S::single_fiber(1), S::general({1, 2}), S::mixed({1, 1}, {2})}) {
    rec = lift_pair(rec, spec);
    expected *= spec.kernel_order();
    CHECK(*rec.left.group().order() == expected);
  }
}
