#include "cremona/document.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

const Integer kMaxExact = (Integer(1) << 53) - 1;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw Error(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) throw Error(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw Error(std::string("field '") + key + "' must be an array");
  return v;
}

long long small_int(const Json& j, const char* what) {
  const Integer x = integer_from_json(j);
  if (x > kMaxExact || x < -kMaxExact) throw Error(std::string(what) + " out of range");
  return static_cast<long long>(x);
}

Json integers_to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integers_from_json(const Json& j) {
  if (!j.is_array()) throw Error("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json evaluation_to_json(const AuditEvaluation& e) {
  return {{"added", e.added},
          {"computed", integer_to_json(e.computed)},
          {"residual", integer_to_json(e.residual)},
          {"verdict", to_string(e.verdict)}};
}

AuditVerdict verdict_from_string(const std::string& s) {
  if (s == "pass") return AuditVerdict::pass;
  if (s == "discrepancy") return AuditVerdict::discrepancy;
  throw Error("unknown audit verdict '" + s + "'");
}

AuditEvaluation evaluation_from_json(const Json& j) {
  return {string_field(j, "added"), integer_from_json(field(j, "computed")), integer_from_json(field(j, "residual")),
          verdict_from_string(string_field(j, "verdict"))};
}

void check_version(const Json& j) {
  const std::string v = string_field(j, "schema_version");
  if (v != kSchemaVersion) throw Error("unsupported schema_version '" + v + "' (expected " + kSchemaVersion + ")");
}

}  // namespace

Json integer_to_json(const Integer& x) {
  if (x > kMaxExact || x < -kMaxExact) return x.str();
  return static_cast<long long>(x);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw Error("expected an integer, got " + j.dump());
}

Json to_json(const PropertyFlags& p) {
  Json flags = Json::object();
  for (const auto& name : PropertyFlags::names()) flags[name] = to_string(p.get(name));
  Json out = {{"flags", flags}, {"p_group_prime", nullptr}, {"nilpotency_class", nullptr}};
  if (p.p_group_prime) out["p_group_prime"] = integer_to_json(*p.p_group_prime);
  if (p.nilpotency_class)
    out["nilpotency_class"] = {integer_to_json(p.nilpotency_class->lo), integer_to_json(p.nilpotency_class->hi)};
  return out;
}

PropertyFlags properties_from_json(const Json& j) {
  PropertyFlags p;
  const Json& flags = field(j, "flags");
  if (!flags.is_object()) throw Error("'flags' must be an object");
  for (const auto& [name, value] : flags.items()) {
    if (!value.is_string()) throw Error("flag '" + name + "' must be a string");
    p.set(name, tri_from_string(value.get<std::string>()));
  }
  if (const Json& prime = field(j, "p_group_prime"); !prime.is_null()) p.p_group_prime = integer_from_json(prime);
  if (const Json& cls = field(j, "nilpotency_class"); !cls.is_null()) {
    if (!cls.is_array() || cls.size() != 2) throw Error("'nilpotency_class' must be [lo, hi]");
    p.nilpotency_class = ClassInterval{integer_from_json(cls[0]), integer_from_json(cls[1])};
  }
  return p;
}

Json to_json(const CurveDatum& c) {
  Json sings = Json::array();
  for (const auto& t : c.singularities().items()) sings.push_back(t.str());
  Json log = Json::array();
  for (const auto& e : c.log()) log.push_back({{"sequence", e.sequence}, {"action", e.action}, {"detail", e.detail}});
  return {{"component_degrees", integers_to_json(c.component_degrees())},
          {"degree", integer_to_json(c.degree())},
          {"singularities", sings},
          {"group", c.group().str()},
          {"properties", to_json(c.props())},
          {"family", c.family() ? Json(to_string(*c.family())) : Json(nullptr)},
          {"log", log}};
}

CurveDatum curve_from_json(const Json& j) {
  auto degrees = integers_from_json(field(j, "component_degrees"));
  std::vector<SingularityType> sings;
  for (const auto& s : array_field(j, "singularities")) {
    if (!s.is_string()) throw Error("singularity types must be strings");
    sings.push_back(SingularityType::parse(s.get<std::string>()));
  }
  std::optional<Family> family;
  if (const Json& f = field(j, "family"); !f.is_null()) {
    if (!f.is_string()) throw Error("'family' must be a string or null");
    family = family_from_string(f.get<std::string>());
  }
  std::vector<LogEntry> log;
  for (const auto& e : array_field(j, "log")) {
    const Json& seq = field(e, "sequence");
    if (!seq.is_number_unsigned()) throw Error("log sequence must be a non-negative integer");
    log.push_back({seq.get<std::uint64_t>(), string_field(e, "action"), string_field(e, "detail")});
  }
  CurveDatum c(std::move(degrees), SingularityMultiset(std::move(sings)), GroupDescriptor::parse(string_field(j, "group")),
               properties_from_json(field(j, "properties")), family, std::move(log));
  if (const auto it = j.find("degree"); it != j.end() && integer_from_json(*it) != c.degree())
    throw Error("'degree' does not match the component degrees");
  return c;
}

Json to_json(const AuditReport& r) {
  Json out = {{"spec", r.spec},
              {"before_degree", integer_to_json(r.before_degree)},
              {"after_degree", integer_to_json(r.after_degree)},
              {"expected_base_self_intersection", integer_to_json(r.expected_base_self_intersection)},
              {"computed", integer_to_json(r.computed)},
              {"residual", integer_to_json(r.residual)},
              {"verdict", to_string(r.verdict)},
              {"variant", nullptr}};
  if (r.variant) out["variant"] = evaluation_to_json(*r.variant);
  return out;
}

AuditReport audit_from_json(const Json& j) {
  AuditReport r{string_field(j, "spec"),
                integer_from_json(field(j, "before_degree")),
                integer_from_json(field(j, "after_degree")),
                integer_from_json(field(j, "expected_base_self_intersection")),
                integer_from_json(field(j, "computed")),
                integer_from_json(field(j, "residual")),
                verdict_from_string(string_field(j, "verdict")),
                std::nullopt};
  if (const Json& v = field(j, "variant"); !v.is_null()) r.variant = evaluation_from_json(v);
  return r;
}

MeridianReport meridian_report(const ConstructionSpec& spec) { return {spec.str(), run_schedule_state(spec)}; }

Json to_json(const MeridianReport& r) {
  const MeridianState& s = r.state;
  Json steps = Json::array();
  for (const auto& step : s.schedule_log)
    steps.push_back({{"type", step.type == StepType::first ? "type1" : "type2"},
                     {"fiber", step.fiber},
                     {"index_before", step.index_before}});
  Json words = Json::object();
  for (const auto& [label, w] : s.fibers) words[label] = w.str();
  return {{"spec", r.spec},
          {"labels", s.labels},
          {"exceptional_meridian", s.exceptional_meridian.str()},
          {"words", words},
          {"hirzebruch_index", s.hirzebruch_index},
          {"max_index", s.max_index},
          {"steps", steps}};
}

MeridianReport meridians_from_json(const Json& j) {
  MeridianReport r;
  r.spec = string_field(j, "spec");
  MeridianState& s = r.state;
  for (const auto& l : array_field(j, "labels")) {
    if (!l.is_string()) throw Error("fiber labels must be strings");
    s.labels.push_back(l.get<std::string>());
  }
  s.exceptional_meridian = Word::parse(string_field(j, "exceptional_meridian"));
  const Json& words = field(j, "words");
  if (!words.is_object()) throw Error("'words' must be an object");
  for (const auto& [label, w] : words.items()) {
    if (!w.is_string()) throw Error("meridian words must be strings");
    s.fibers[label] = Word::parse(w.get<std::string>());
  }
  s.hirzebruch_index = small_int(field(j, "hirzebruch_index"), "hirzebruch_index");
  s.max_index = small_int(field(j, "max_index"), "max_index");
  for (const auto& step : array_field(j, "steps")) {
    const std::string type = string_field(step, "type");
    if (type != "type1" && type != "type2") throw Error("unknown step type '" + type + "'");
    s.schedule_log.push_back({type == "type1" ? StepType::first : StepType::second, string_field(step, "fiber"),
                              small_int(field(step, "index_before"), "index_before")});
  }
  return r;
}

Json to_json(const ZariskiPairRecord& r) {
  return {{"left", to_json(r.left)},
          {"right", to_json(r.right)},
          {"combinatorics_equal", r.combinatorics_equal},
          {"distinguisher", to_string(r.distinguisher)},
          {"generation", r.generation},
          {"parent_spec", r.parent_spec ? Json(r.parent_spec->str()) : Json(nullptr)},
          {"lineage", r.lineage}};
}

ZariskiPairRecord pair_from_json(const Json& j) {
  ZariskiPairRecord r{curve_from_json(field(j, "left")),
                      curve_from_json(field(j, "right")),
                      bool_field(j, "combinatorics_equal"),
                      distinguisher_from_string(string_field(j, "distinguisher")),
                      small_int(field(j, "generation"), "generation"),
                      std::nullopt,
                      {}};
  if (const Json& p = field(j, "parent_spec"); !p.is_null()) {
    if (!p.is_string()) throw Error("'parent_spec' must be a string or null");
    r.parent_spec = ConstructionSpec::parse(p.get<std::string>());
  }
  for (const auto& s : array_field(j, "lineage")) {
    if (!s.is_string()) throw Error("lineage entries must be strings");
    r.lineage.push_back(s.get<std::string>());
  }
  if (r.distinguisher != Distinguisher::none && !r.combinatorics_equal)
    throw Error("a pair with a distinguisher must have equal combinatorics");
  return r;
}

Json to_json(const CurveDocument& d) {
  Json reports = Json::object();
  if (d.audit) reports["audit"] = to_json(*d.audit);
  if (d.meridians) reports["meridians"] = to_json(*d.meridians);
  Json out = {{"schema_version", d.schema_version}, {"curve", to_json(d.curve)}, {"reports", reports}};
  if (d.audit) out["verdict"] = to_string(d.audit->verdict);
  return out;
}

CurveDocument document_from_json(const Json& j) {
  check_version(j);
  CurveDocument d{string_field(j, "schema_version"), curve_from_json(field(j, "curve")), std::nullopt, std::nullopt};
  if (const auto it = j.find("reports"); it != j.end()) {
    if (!it->is_object()) throw Error("'reports' must be an object");
    if (const auto a = it->find("audit"); a != it->end()) d.audit = audit_from_json(*a);
    if (const auto m = it->find("meridians"); m != it->end()) d.meridians = meridians_from_json(*m);
  }
  return d;
}

Json audit_document(const AuditReport& r) {
  return {{"schema_version", kSchemaVersion}, {"audit", to_json(r)}, {"verdict", to_string(r.verdict)}};
}

Json pairs_document(const std::vector<ZariskiPairRecord>& records) {
  Json pairs = Json::array();
  for (const auto& r : records) pairs.push_back(to_json(r));
  return {{"schema_version", kSchemaVersion}, {"pairs", pairs}};
}

std::vector<ZariskiPairRecord> pairs_from_document(const Json& j) {
  check_version(j);
  std::vector<ZariskiPairRecord> out;
  for (const auto& p : array_field(j, "pairs")) out.push_back(pair_from_json(p));
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed JSON: ") + e.what());
  }
}

CurveDocument parse_document(const std::string& text) {
  try {
    return document_from_json(parse_json(text));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed document: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cremona
