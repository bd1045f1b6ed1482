#include "cremona/constructions.hpp"

#include "cremona/error.hpp"
#include "text_util.hpp"

#include <numeric>

namespace cremona {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Integer sum(const std::vector<Integer>& xs) { return std::accumulate(xs.begin(), xs.end(), Integer(0)); }

void check_params(const std::vector<Integer>& xs, const char* what) {
  if (xs.empty()) throw Error(std::string(what) + " needs at least one parameter");
  for (const auto& x : xs)
    if (x < 1) throw Error(std::string(what) + " parameters must be >= 1, got " + x.str());
}

std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

std::vector<Integer> parse_list(const std::string& body, const std::string& whole) {
  std::vector<Integer> out;
  for (const auto& raw : detail::split(body, ',')) {
    const auto token = detail::trim(raw);
    try {
      out.push_back(parse_integer(token));
    } catch (const Error&) {
      throw Error("bad construction parameter '" + token + "' in '" + whole + "'");
    }
  }
  return out;
}

}  // namespace

ConstructionSpec ConstructionSpec::single_fiber(Integer n) {
  check_params({n}, "uludag");
  return ConstructionSpec(SingleFiber{std::move(n)});
}

ConstructionSpec ConstructionSpec::general(std::vector<Integer> ns) {
  check_params(ns, "general");
  return ConstructionSpec(General{std::move(ns)});
}

ConstructionSpec ConstructionSpec::mixed(std::vector<Integer> ns, std::vector<Integer> ms) {
  check_params(ns, "mixed");
  check_params(ms, "mixed");
  if (sum(ns) != sum(ms))
    throw HypothesisError("balance", "mixed construction needs sum n_i = sum m_j (got " + sum(ns).str() + " and " +
                                         sum(ms).str() + ")");
  return ConstructionSpec(Mixed{std::move(ns), std::move(ms)});
}

ConstructionSpec ConstructionSpec::special(Integer n) {
  check_params({n}, "special");
  return ConstructionSpec(Special{std::move(n)});
}

ConstructionSpec ConstructionSpec::parse(const std::string& text) {
  const std::string t = detail::trim(text);
  const auto open = t.find('(');
  if (open == std::string::npos || t.back() != ')')
    throw Error("construction must look like name(args): '" + text + "'");
  const std::string name = detail::trim(t.substr(0, open));
  const std::string body = t.substr(open + 1, t.size() - open - 2);
  if (name == "mixed") {
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw Error("mixed construction needs 'n..;m..' in '" + text + "'");
    return mixed(parse_list(body.substr(0, semi), text), parse_list(body.substr(semi + 1), text));
  }
  if (name != "uludag" && name != "general" && name != "special")
    throw Error("unknown construction '" + name + "' in '" + text + "'");
  if (body.find(';') != std::string::npos) throw Error("unexpected ';' in '" + text + "'");
  auto params = parse_list(body, text);
  if (name == "general") return general(std::move(params));
  if (params.size() != 1) throw Error(name + " takes exactly one parameter: '" + text + "'");
  return name == "uludag" ? single_fiber(params[0]) : special(params[0]);
}

Integer ConstructionSpec::kernel_order() const {
  return std::visit(overloaded{
                        [](const SingleFiber& u) { return Integer(u.n + 1); },
                        [](const General& g) { return Integer(sum(g.ns) + 1); },
                        [](const Mixed& m) { return Integer(sum(m.ns) + 1); },
                        [](const Special& s) { return Integer(s.n + 1); },
                    },
                    kind_);
}

std::vector<Integer> ConstructionSpec::first_type_counts() const {
  return std::visit(overloaded{
                        [](const SingleFiber& u) { return std::vector<Integer>{u.n}; },
                        [](const General& g) { return g.ns; },
                        [](const Mixed& m) { return m.ns; },
                        [](const Special& s) { return std::vector<Integer>{s.n}; },
                    },
                    kind_);
}

std::string ConstructionSpec::str() const {
  return std::visit(overloaded{
                        [](const SingleFiber& u) { return "uludag(" + u.n.str() + ")"; },
                        [](const General& g) { return "general(" + join(g.ns) + ")"; },
                        [](const Mixed& m) { return "mixed(" + join(m.ns) + ";" + join(m.ms) + ")"; },
                        [](const Special& s) { return "special(" + s.n.str() + ")"; },
                    },
                    kind_);
}

Integer degree_after(const Integer& d, const ConstructionSpec& spec) {
  if (d < 1) throw Error("curve degree must be >= 1");
  return d * spec.kernel_order();
}

SingularityType special_consistent_type(const Integer& d, const Integer& n) {
  return SingularityType::with_head(n * d, {SingularityType::run(d, 2 * n)});
}

SingularityMultiset added_singularities(const Integer& d, const ConstructionSpec& spec) {
  if (d < 1) throw Error("curve degree must be >= 1");
  SingularityMultiset out;
  const auto tacnodes_and_head = [&](const std::vector<Integer>& ns, std::vector<SingularityType> clusters) {
    for (const auto& n : ns) out.insert(SingularityType::run(d, n));
    out.insert(SingularityType::with_head(d * sum(ns), std::move(clusters)));
  };
  std::visit(overloaded{
                 [&](const SingleFiber& u) { tacnodes_and_head({u.n}, {SingularityType::run(d, u.n)}); },
                 [&](const General& g) { tacnodes_and_head(g.ns, {SingularityType::run(d, sum(g.ns))}); },
                 [&](const Mixed& m) {
                   std::vector<SingularityType> clusters;
                   for (const auto& mj : m.ms) clusters.push_back(SingularityType::run(d, mj));
                   tacnodes_and_head(m.ns, std::move(clusters));
                 },
                 [&](const Special& s) {
                   out.insert(SingularityType::with_head(2 * s.n * d, {SingularityType::run(d, 2 * s.n)}));
                 },
             },
             spec.kind());
  return out;
}

std::string to_string(AuditVerdict v) { return v == AuditVerdict::pass ? "pass" : "discrepancy"; }

namespace {

AuditEvaluation evaluate(const Integer& d, const Integer& d_after, const SingularityMultiset& added) {
  AuditEvaluation e;
  e.added = added.str();
  e.computed = d_after * d_after - added.total_drop();
  e.residual = e.computed - d * d;
  e.verdict = e.residual == 0 ? AuditVerdict::pass : AuditVerdict::discrepancy;
  return e;
}

}  // namespace

AuditReport audit_self_intersection(const Integer& before_degree, const ConstructionSpec& spec) {
  const Integer after = degree_after(before_degree, spec);
  const auto primary = evaluate(before_degree, after, added_singularities(before_degree, spec));
  AuditReport r{spec.str(), before_degree, after, before_degree * before_degree, primary.computed, primary.residual,
                primary.verdict, std::nullopt};
  if (const auto* s = spec.get_if<Special>())
    r.variant = evaluate(before_degree, after, SingularityMultiset{special_consistent_type(before_degree, s->n)});
  return r;
}

CurveDatum apply(const CurveDatum& c, const ConstructionSpec& spec) {
  const Integer N = spec.kernel_order();
  std::vector<Integer> degrees;
  for (const auto& d : c.component_degrees()) degrees.push_back(d * N);

  const auto ext = central_extend_traced(c.group(), N, {c.irreducible(), c.family()});
  const bool cyclic_rule = ext.rule == ExtensionRule::irreducible_cyclic;
  const PropertyFlags props =
      propagate_properties(c.props(), N, cyclic_rule).merged(facts_from_descriptor(ext.group));

  const auto audit = audit_self_intersection(c.degree(), spec);
  CurveDatum out(std::move(degrees), c.singularities().united(added_singularities(c.degree(), spec)), ext.group,
                 props, c.family(), c.log());
  out = out.with_log("apply", spec.str() + " N=" + N.str() + " rule=" + to_string(ext.rule) +
                                  " audit=" + to_string(audit.verdict) + " residual=" + audit.residual.str());
  if (audit.variant)
    out = out.with_log("note", "published type fails the self-intersection identity; consistent variant " +
                                   special_consistent_type(c.degree(), spec.get_if<Special>()->n).display() +
                                   " gives residual " + audit.variant->residual.str());
  return out;
}

}  // namespace cremona
