#pragma once

// Replays a construction schedule on Hirzebruch surfaces, tracking the
// meridian words of the fibers and of the exceptional section.

#include "cremona/constructions.hpp"
#include "cremona/fpgroup.hpp"

#include <map>
#include <string>
#include <vector>

namespace cremona {

enum class StepType { first, second };

struct ScheduleStep {
  StepType type;
  std::string fiber;
  long long index_before = 1;  // Hirzebruch index before the step
  bool operator==(const ScheduleStep&) const = default;
};

struct MeridianState {
  long long hirzebruch_index = 1;
  long long max_index = 1;
  Word exceptional_meridian;
  std::vector<std::string> labels;     // counterclockwise order
  std::map<std::string, Word> fibers;  // label -> meridian word
  std::vector<ScheduleStep> schedule_log;
  bool operator==(const MeridianState&) const = default;
};

/// Generator name used for a fiber label: P -> beta, P<j> -> beta<j>,
/// Q<i> -> alpha<i>, L -> alpha.
std::string meridian_generator(const std::string& label);

/// Index 1; each label gets its own generator; the exceptional meridian is the
/// product of all generators in label order. Throws Error on an empty or
/// repeated label list.
MeridianState init_state(const std::vector<std::string>& labels);

/// Index +1; the fiber's word is left-multiplied by the exceptional meridian.
MeridianState elem_first(const MeridianState& s, const std::string& fiber);
/// Index -1, words unchanged. Throws Error at index 1.
MeridianState elem_second(const MeridianState& s, const std::string& fiber);

/// Fiber labels of the construction: P, Q1..Qk (SingleFiber, General);
/// P1..Pl, Q1..Qk (Mixed); L (Special).
std::vector<std::string> schedule_labels(const ConstructionSpec& spec);

/// Type-1 steps on the Q fibers in order, then the type-2 steps.
std::vector<ScheduleStep> construction_schedule(const ConstructionSpec& spec);

/// Replays `steps` from init_state(labels). Errors name the failing step (1-based).
MeridianState replay(const std::vector<std::string>& labels, const std::vector<ScheduleStep>& steps);

/// Full replay for a spec; checks the final index is 1. Rejects schedules
/// longer than `max_steps`.
MeridianState run_schedule_state(const ConstructionSpec& spec, long long max_steps = 20000);
std::map<std::string, Word> run_schedule(const ConstructionSpec& spec);

/// `F<idx> type1 Q2` per step, then `label = word` per fiber.
std::string schedule_trace(const MeridianState& s);

}  // namespace cremona
