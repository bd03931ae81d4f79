#pragma once

#include "ctxkit/model.hpp"
#include "ctxkit/rational.hpp"
#include "ctxkit/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ctxkit {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1'000'000;

// A hidden-variable explanation in deterministic-support form: mixing the
// deterministic models of the listed assignments with the stored weights
// reproduces the target model's tables exactly.
struct HiddenVariableModel {
    std::vector<DeterministicAssignment> assignments;
    std::vector<Rat> weights;
};

// A noncontextuality inequality: every deterministic assignment scores at most
// `bound` under the coefficients, while the target model scores strictly more.
// Coefficients are aligned with the model's tables (one dense vector per cover
// context, indexed by tuple rank). Normalized so the violation margin is 1.
struct InfeasibilityWitness {
    std::vector<std::vector<Rat>> coefficients;
    Rat bound;
};

enum class VerdictStatus { noncontextual, contextual, disturbing, too_large };

struct Verdict {
    VerdictStatus status = VerdictStatus::too_large;
    std::optional<HiddenVariableModel> hv_model;     // present iff noncontextual
    std::optional<InfeasibilityWitness> witness;     // present iff contextual
    std::string cardinality;                         // set when too_large
};

// Exact product cardinality of all outcome sets.
BigInt assignment_count(const Scenario& s);

// All global assignments in lexicographic order (measurement id, then outcome
// order); the first one picks every measurement's first outcome. Throws
// too_large_error when the product exceeds the limit.
std::vector<DeterministicAssignment> enumerate_assignments(
    const Scenario& s, std::uint64_t limit = kDefaultEnumerationLimit);

// Decides noncontextuality by exact LP feasibility over weights on the
// deterministic assignments. Disturbing models short-circuit; no LP is run.
Verdict is_noncontextual(const EmpiricalModel& m,
                         std::uint64_t limit = kDefaultEnumerationLimit);

// Re-checks whichever certificate the verdict carries against the model in
// exact arithmetic; runs no LP. False when no certificate is present.
bool verify_certificate(const EmpiricalModel& m, const Verdict& v,
                        std::uint64_t limit = kDefaultEnumerationLimit);

enum class ExtensionStatus { extends, does_not_extend, disturbing, too_large };

// Infeasibility certificate for an extension problem, kept with one label per
// LP row so it can be re-audited against the rebuilt constraint matrix.
struct ExtensionWitness {
    std::vector<std::string> row_labels;
    std::vector<Rat> coefficients;
};

struct ExtensionVerdict {
    ExtensionStatus status = ExtensionStatus::too_large;
    std::optional<EmpiricalModel> extension;  // on the super scenario, iff extends
    std::optional<ExtensionWitness> witness;  // iff does_not_extend
    std::string cardinality;                  // set when too_large
};

// Decides whether m (on a subscenario of `super`) extends to a nondisturbing
// model on `super`: LP over one joint table per super-context with
// normalization, overlap-agreement, and marginal-agreement constraints.
// Throws input_error when m's scenario is not a subscenario of super.
ExtensionVerdict check_extends(const EmpiricalModel& m, const Scenario& super,
                               std::uint64_t limit = kDefaultEnumerationLimit);

// Exact recheck of an ExtensionVerdict certificate (either direction).
bool verify_extension(const EmpiricalModel& m, const Scenario& super,
                      const ExtensionVerdict& v,
                      std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace ctxkit
