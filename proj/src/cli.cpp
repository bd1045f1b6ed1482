#include "cremona/cli.hpp"

#include "cremona/document.hpp"
#include "cremona/error.hpp"
#include "text_util.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace cremona {

namespace {

std::string read_all(std::istream& s) {
  std::ostringstream buf;
  buf << s.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return read_all(f);
}

Integer integer_option(const std::string& text, const char* what) {
  try {
    return parse_integer(detail::trim(text));
  } catch (const Error&) {
    throw Error(std::string("bad ") + what + " '" + text + "'");
  }
}

/// `[2,3]` or `6*[2,3]` (six copies).
void add_singularities(SingularityMultiset& into, const std::string& text) {
  std::string body = detail::trim(text);
  Integer copies = 1;
  if (const auto star = body.find('*'); star != std::string::npos && body.find('[') > star) {
    copies = integer_option(body.substr(0, star), "singularity count");
    body = body.substr(star + 1);
    if (copies < 1) throw Error("singularity count must be >= 1 in '" + text + "'");
  }
  const auto t = SingularityType::parse(body);
  for (Integer i = 0; i < copies; ++i) into.insert(t);
}

std::pair<std::string, Tri> assertion(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) return {detail::trim(text), Tri::yes};
  return {detail::trim(text.substr(0, eq)), tri_from_string(detail::trim(text.substr(eq + 1)))};
}

struct Options {
  std::string degree, lines, group, prime, note;
  std::vector<std::string> degrees, sings, asserts;
  std::string spec, input, left, right, enumerate;
  bool audit_only = false, with_meridians = false, trace = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cremona constructions on plane-curve data", "cremona"};
  app.require_subcommand(1);
  Options o;

  auto* seed = app.add_subcommand("seed", "emit a seed curve document");
  seed->require_subcommand(1);
  auto* smooth = seed->add_subcommand("smooth", "smooth irreducible curve");
  smooth->add_option("--degree", o.degree, "degree d >= 1")->required();
  auto* pencil = seed->add_subcommand("pencil", "m concurrent lines");
  pencil->add_option("--lines", o.lines, "number of lines m >= 2")->required();
  auto* generic = seed->add_subcommand("generic-lines", "m lines in general position");
  generic->add_option("--lines", o.lines, "number of lines m >= 2")->required();
  auto* custom = seed->add_subcommand("custom", "user-supplied curve");
  custom->add_option("--degrees", o.degrees, "component degrees")->required();
  custom->add_option("--sing", o.sings, "singularity type, optionally prefixed by a count: 6*[2]");
  custom->add_option("--group", o.group, "group descriptor, e.g. Z/6 or Asserted(\"Z/2*Z/3\")")->required();
  custom->add_option("--assert", o.asserts, "asserted property, e.g. nonabelian=true");
  custom->add_option("--prime", o.prime, "prime of an asserted p-group");
  custom->add_option("--note", o.note, "free-text provenance note");

  auto* apply_cmd = app.add_subcommand("apply", "apply a construction to a curve document");
  apply_cmd->add_option("spec", o.spec, "construction, e.g. general(1,2)")->required();
  apply_cmd->add_option("input", o.input, "curve document (default: standard input)");
  apply_cmd->add_flag("--audit-only", o.audit_only, "emit only the self-intersection audit");
  apply_cmd->add_flag("--meridians", o.with_meridians, "append the meridian word table");

  auto* audit_cmd = app.add_subcommand("audit", "self-intersection audit of a construction");
  audit_cmd->add_option("spec", o.spec, "construction")->required();
  audit_cmd->add_option("input", o.input, "curve document (default: standard input)");
  audit_cmd->add_option("--degree", o.degree, "curve degree instead of a document");

  auto* mer_cmd = app.add_subcommand("meridians", "replay the construction schedule");
  mer_cmd->add_option("spec", o.spec, "construction")->required();
  mer_cmd->add_flag("--trace", o.trace, "line-oriented text trace instead of JSON");

  auto* zar_cmd = app.add_subcommand("zariski", "lift a Zariski pair");
  zar_cmd->add_option("left", o.left, "left curve document")->required();
  zar_cmd->add_option("right", o.right, "right curve document")->required();
  auto* spec_opt = zar_cmd->add_option("--spec", o.spec, "construction to apply");
  auto* enum_opt = zar_cmd->add_option("--enumerate", o.enumerate, "lift by all General tuples with sum <= bound");
  spec_opt->excludes(enum_opt);

  std::vector<std::string> argv_store{"cremona"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (seed->parsed()) {
      CurveDatum c = [&] {
        if (smooth->parsed()) return seed_smooth(integer_option(o.degree, "degree"));
        if (pencil->parsed()) return seed_pencil(integer_option(o.lines, "line count"));
        if (generic->parsed()) return seed_generic_lines(integer_option(o.lines, "line count"));
        std::vector<Integer> degrees;
        for (const auto& d : o.degrees) degrees.push_back(integer_option(d, "degree"));
        SingularityMultiset sings;
        for (const auto& s : o.sings) add_singularities(sings, s);
        std::vector<std::pair<std::string, Tri>> asserted;
        for (const auto& a : o.asserts) asserted.push_back(assertion(a));
        std::optional<Integer> prime;
        if (!o.prime.empty()) prime = integer_option(o.prime, "prime");
        return seed_custom(std::move(degrees), std::move(sings), GroupDescriptor::parse(o.group), asserted, prime,
                           o.note);
      }();
      out << dump(to_json(CurveDocument{kSchemaVersion, std::move(c), std::nullopt, std::nullopt}));
      return 0;
    }

    if (apply_cmd->parsed()) {
      const auto spec = ConstructionSpec::parse(o.spec);
      const CurveDocument doc = parse_document(read_input(o.input, in));
      const auto audit = audit_self_intersection(doc.curve.degree(), spec);
      if (o.audit_only) {
        out << dump(audit_document(audit));
        return 0;
      }
      CurveDocument result{kSchemaVersion, apply(doc.curve, spec), audit, std::nullopt};
      if (o.with_meridians) result.meridians = meridian_report(spec);
      out << dump(to_json(result));
      return 0;
    }

    if (audit_cmd->parsed()) {
      const auto spec = ConstructionSpec::parse(o.spec);
      const Integer d = o.degree.empty() ? parse_document(read_input(o.input, in)).curve.degree()
                                         : integer_option(o.degree, "degree");
      out << dump(audit_document(audit_self_intersection(d, spec)));
      return 0;
    }

    if (mer_cmd->parsed()) {
      const auto report = meridian_report(ConstructionSpec::parse(o.spec));
      if (o.trace)
        out << schedule_trace(report.state);
      else
        out << dump({{"schema_version", kSchemaVersion}, {"meridians", to_json(report)}});
      return 0;
    }

    if (zar_cmd->parsed()) {
      if (o.left == "-" && o.right == "-") throw Error("only one side may come from standard input");
      const auto seed_pair = make_seed_pair(parse_document(read_input(o.left, in)).curve,
                                            parse_document(read_input(o.right, in)).curve);
      if (!o.enumerate.empty()) {
        const Integer bound = integer_option(o.enumerate, "bound");
        if (bound < 0 || bound > 12) throw Error("enumeration bound must be in 0..12");
        out << dump(pairs_document(enumerate_family(seed_pair, static_cast<long long>(bound))));
      } else if (!o.spec.empty()) {
        out << dump(pairs_document({lift_pair(seed_pair, ConstructionSpec::parse(o.spec))}));
      } else {
        out << dump(pairs_document({seed_pair}));
      }
      return 0;
    }
  } catch (const HypothesisError& e) {
    err << "error: hypothesis '" << e.hypothesis() << "' failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cremona
