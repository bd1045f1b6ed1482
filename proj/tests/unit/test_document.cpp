#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cremona/document.hpp"
#include "cremona/error.hpp"

#include <random>

using namespace cremona;
using G = GroupDescriptor;
using S = ConstructionSpec;

namespace {

S random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3), n(1, 3), len(1, 3);
  std::vector<Integer> ns;
  for (int i = 0, k = len(rng); i < k; ++i) ns.push_back(n(rng));
  switch (kind(rng)) {
    case 0: return S::single_fiber(n(rng));
    case 1: return S::general(ns);
    case 2: {
      Integer total = 0;
      for (const auto& x : ns) total += x;
      std::vector<Integer> ms(static_cast<std::size_t>(total), Integer(1));
      return S::mixed(ns, ms);
    }
    default: return S::special(n(rng));
  }
}

CurveDatum random_seed(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 3), d(1, 5), m(2, 5);
  switch (kind(rng)) {
    case 0: return seed_smooth(d(rng));
    case 1: return seed_pencil(m(rng));
    case 2: return seed_generic_lines(m(rng));
    default:
      return seed_custom({6}, SingularityMultiset(std::vector<SingularityType>(6, SingularityType::flat({2}))),
                         G::asserted("Z/2*Z/3"), {{"nonabelian", Tri::yes}}, std::nullopt, "sextic");
  }
}

}  // namespace

TEST_CASE("integers") {
  CHECK(integer_to_json(5) == Json(5));
  const Integer limit = (Integer(1) << 53) - 1;
  CHECK(integer_to_json(limit).is_number());
  CHECK(integer_to_json(limit + 1).is_string());
  CHECK(integer_to_json(-(limit + 1)) == Json("-9007199254740992"));
  CHECK(integer_from_json(Json("123456789012345678901234567890")) == parse_integer("123456789012345678901234567890"));
  CHECK(integer_from_json(Json(-4)) == -4);
  CHECK_THROWS_AS(integer_from_json(Json(1.5)), Error);
  CHECK_THROWS_AS(integer_from_json(Json("12a")), Error);
}

TEST_CASE("documents round trip") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    CurveDatum c = random_seed(rng);
    std::optional<AuditReport> audit;
    std::optional<MeridianReport> mer;
    for (int j = 0, steps = i % 3; j < steps; ++j) {
      const auto spec = random_spec(rng);
      audit = audit_self_intersection(c.degree(), spec);
      mer = meridian_report(spec);
      c = apply(c, spec);
    }
    const CurveDocument doc{kSchemaVersion, c, audit, mer};
    const std::string text = dump(to_json(doc));
    const auto back = parse_document(text);
    CHECK(back == doc);
    CHECK(dump(to_json(back)) == text);
  }
}

TEST_CASE("large degrees survive as strings") {
  CurveDatum c = seed_smooth(parse_integer("12345678901234567"));
  c = apply(c, S::general({2, 3}));
  const CurveDocument doc{kSchemaVersion, c, std::nullopt, std::nullopt};
  const Json j = to_json(doc);
  CHECK(j["curve"]["degree"].is_string());
  CHECK(parse_document(dump(j)) == doc);
}

TEST_CASE("oversized expansions are rejected") {
  CHECK_THROWS_AS(apply(seed_smooth(2), S::single_fiber(parse_integer("98765432109876543"))), Error);
  CHECK_THROWS_AS(seed_generic_lines(5000), Error);
  CHECK_THROWS_AS(SingularityType::parse("[2_2000000]"), Error);
}

TEST_CASE("pair documents round trip") {
  const auto six = SingularityMultiset(std::vector<SingularityType>(6, SingularityType::flat({2})));
  const auto seed = make_seed_pair(seed_custom({6}, six, G::cyclic(6)),
                                   seed_custom({6}, six, G::asserted("Z/2*Z/3"), {{"nonabelian", Tri::yes}}));
  auto records = enumerate_family(seed, 2);
  records.insert(records.begin(), seed);
  const Json j = parse_json(dump(pairs_document(records)));
  CHECK(pairs_from_document(j) == records);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(parse_document("{"), Error);
  CHECK_THROWS_AS(parse_document("[]"), Error);
  Json j = to_json(CurveDocument{kSchemaVersion, seed_smooth(3), std::nullopt, std::nullopt});
  Json wrong_version = j;
  wrong_version["schema_version"] = "2";
  CHECK_THROWS_AS(document_from_json(wrong_version), Error);
  Json no_group = j;
  no_group["curve"].erase("group");
  CHECK_THROWS_AS(document_from_json(no_group), Error);
  Json bad_degree = j;
  bad_degree["curve"]["degree"] = 4;
  CHECK_THROWS_AS(document_from_json(bad_degree), Error);
  Json bad_sing = j;
  bad_sing["curve"]["singularities"] = Json::array({"[0]"});
  CHECK_THROWS_AS(document_from_json(bad_sing), Error);
}

TEST_CASE("discrepancy verdict is recorded") {
  const Json j = to_json(CurveDocument{kSchemaVersion, apply(seed_smooth(1), S::special(1)),
                                       audit_self_intersection(1, S::special(1)), std::nullopt});
  CHECK(j["verdict"] == "discrepancy");
  CHECK(j["reports"]["audit"]["residual"] == -3);
  CHECK(audit_document(audit_self_intersection(2, S::single_fiber(1)))["verdict"] == "pass");
}
