#pragma once

#include "ctxkit/decide.hpp"
#include "ctxkit/model.hpp"
#include "ctxkit/scenario.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ctxkit {

// Witnessed instance of the subscenario partial order: sub's measurements are
// a subset of super's and every sub-context lies inside the recorded
// super-context (the first containing one in canonical order).
struct ScenarioOrder {
    Scenario sub;
    Scenario super;
    std::vector<std::size_t> witness;  // sub-cover index -> super-cover index
};

struct SubscenarioCheck {
    bool ok = false;
    ScenarioOrder order;  // valid when ok
    std::string refusal;  // names the offending measurement or context when not
};

SubscenarioCheck is_subscenario(const Scenario& sub, const Scenario& super);

// Restriction of every super-context to the kept measurements, empty
// restrictions dropped and dominated ones pruned so the cover is an antichain.
// The pruned restrictions are reported alongside the scenario.
struct InducedSubscenario {
    Scenario scenario;
    std::vector<Context> pruned;
};

InducedSubscenario induced_subscenario(const Scenario& super,
                                       const std::vector<std::string>& keep);

// Same measurements, new cover; the new cover must still cover every
// measurement.
Scenario restrict_contexts(const Scenario& s, const std::vector<std::vector<std::string>>& cover);

// Runs check_extends against every element of a strictly increasing chain of
// scenarios and reports the first step at which extension fails.
struct SequenceReport {
    std::vector<ExtensionVerdict> steps;
    std::optional<std::size_t> failure_step;
};

SequenceReport check_sequence(const EmpiricalModel& m, const std::vector<Scenario>& chain,
                              std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace ctxkit
