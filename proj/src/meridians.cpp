#include "cremona/meridians.hpp"

#include "cremona/error.hpp"

#include <set>

namespace cremona {

std::string meridian_generator(const std::string& label) {
  if (label == "P") return "beta";
  if (label == "L") return "alpha";
  if (label.size() > 1 && (label[0] == 'P' || label[0] == 'Q')) {
    const std::string digits = label.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits[0] != '0')
      return (label[0] == 'P' ? "beta" : "alpha") + digits;
  }
  throw Error("bad fiber label '" + label + "' (expected P, L, P<j> or Q<i>)");
}

MeridianState init_state(const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error("init_state needs at least one fiber label");
  MeridianState s;
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw Error("repeated fiber label '" + label + "'");
    const Word g = Word::generator(meridian_generator(label));
    s.fibers[label] = g;
    s.exceptional_meridian = s.exceptional_meridian * g;
  }
  s.labels = labels;
  return s;
}

namespace {

Word& fiber_word(MeridianState& s, const std::string& fiber) {
  auto it = s.fibers.find(fiber);
  if (it == s.fibers.end()) throw Error("unknown fiber '" + fiber + "'");
  return it->second;
}

}  // namespace

MeridianState elem_first(const MeridianState& s, const std::string& fiber) {
  MeridianState out = s;
  Word& w = fiber_word(out, fiber);
  w = out.exceptional_meridian * w;
  out.schedule_log.push_back({StepType::first, fiber, s.hirzebruch_index});
  ++out.hirzebruch_index;
  out.max_index = std::max(out.max_index, out.hirzebruch_index);
  return out;
}

MeridianState elem_second(const MeridianState& s, const std::string& fiber) {
  MeridianState out = s;
  fiber_word(out, fiber);
  if (s.hirzebruch_index < 2) throw Error("type-2 step on " + fiber + " would descend below F1");
  out.schedule_log.push_back({StepType::second, fiber, s.hirzebruch_index});
  --out.hirzebruch_index;
  return out;
}

std::vector<std::string> schedule_labels(const ConstructionSpec& spec) {
  std::vector<std::string> labels;
  if (spec.get_if<Special>()) return {"L"};
  if (const auto* m = spec.get_if<Mixed>()) {
    for (std::size_t j = 1; j <= m->ms.size(); ++j) labels.push_back("P" + std::to_string(j));
  } else {
    labels.push_back("P");
  }
  for (std::size_t i = 1; i <= spec.first_type_counts().size(); ++i) labels.push_back("Q" + std::to_string(i));
  return labels;
}

std::vector<ScheduleStep> construction_schedule(const ConstructionSpec& spec) {
  std::vector<ScheduleStep> steps;
  const auto repeat = [&](StepType t, const std::string& fiber, const Integer& n) {
    for (Integer i = 0; i < n; ++i) steps.push_back({t, fiber, 0});
  };
  if (const auto* s = spec.get_if<Special>()) {
    repeat(StepType::first, "L", s->n);
    repeat(StepType::second, "L", s->n);
    return steps;
  }
  const auto ns = spec.first_type_counts();
  for (std::size_t i = 0; i < ns.size(); ++i) repeat(StepType::first, "Q" + std::to_string(i + 1), ns[i]);
  if (const auto* m = spec.get_if<Mixed>()) {
    for (std::size_t j = 0; j < m->ms.size(); ++j) repeat(StepType::second, "P" + std::to_string(j + 1), m->ms[j]);
  } else {
    Integer total = 0;
    for (const auto& n : ns) total += n;
    repeat(StepType::second, "P", total);
  }
  return steps;
}

MeridianState replay(const std::vector<std::string>& labels, const std::vector<ScheduleStep>& steps) {
  MeridianState s = init_state(labels);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      s = steps[i].type == StepType::first ? elem_first(s, steps[i].fiber) : elem_second(s, steps[i].fiber);
    } catch (const Error& e) {
      throw Error("step " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return s;
}

MeridianState run_schedule_state(const ConstructionSpec& spec, long long max_steps) {
  // each type-1 step is matched by a type-2 step
  if (2 * (spec.kernel_order() - 1) > max_steps)
    throw Error("schedule of " + spec.str() + " exceeds " + std::to_string(max_steps) + " steps");
  MeridianState s = replay(schedule_labels(spec), construction_schedule(spec));
  if (s.hirzebruch_index != 1)
    throw Error("schedule of " + spec.str() + " ends on F" + std::to_string(s.hirzebruch_index));
  return s;
}

std::map<std::string, Word> run_schedule(const ConstructionSpec& spec) { return run_schedule_state(spec).fibers; }

std::string schedule_trace(const MeridianState& s) {
  std::string out;
  for (const auto& step : s.schedule_log)
    out += "F" + std::to_string(step.index_before) + (step.type == StepType::first ? " type1 " : " type2 ") +
           step.fiber + "\n";
  out += "E = " + s.exceptional_meridian.str() + "\n";
  for (const auto& label : s.labels) out += label + " = " + s.fibers.at(label).str() + "\n";
  return out;
}

}  // namespace cremona
