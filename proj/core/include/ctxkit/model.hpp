#pragma once

#include "ctxkit/rational.hpp"
#include "ctxkit/scenario.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace ctxkit {

// Exact joint distribution over the product of the axes' outcome lists.
// Weights are dense in mixed-radix order: first axis most significant, last
// axis fastest. Weights are nonnegative and sum to exactly 1.
struct Distribution {
    std::vector<Measurement> axes;
    std::vector<Rat> weights;

    bool operator==(const Distribution&) const = default;
};

// Product cardinality of the axes' outcome lists; refuses pathological sizes.
std::size_t table_size(const std::vector<Measurement>& axes);

std::size_t rank_tuple(const std::vector<Measurement>& axes, const std::vector<std::size_t>& indices);
std::vector<std::size_t> unrank_tuple(const std::vector<Measurement>& axes, std::size_t rank);
std::vector<std::string> tuple_labels(const std::vector<Measurement>& axes, std::size_t rank);
std::size_t rank_of_labels(const std::vector<Measurement>& axes, const std::vector<std::string>& labels);

// Checks sizes, nonnegativity, and exact normalization.
Distribution make_distribution(std::vector<Measurement> axes, std::vector<Rat> weights);
Distribution point_mass(std::vector<Measurement> axes, const std::vector<std::string>& labels);
Distribution uniform_distribution(std::vector<Measurement> axes);

// Exact marginal onto the kept measurements (a nonempty subset of the axes,
// given in any order; the result keeps the distribution's own axis order).
Distribution marginalize(const Distribution& d, const std::vector<std::string>& keep);

// The context's member measurements, in the context's canonical order.
std::vector<Measurement> context_axes(const Scenario& s, const Context& c);

// One joint table per cover context, aligned with scenario.cover.
struct EmpiricalModel {
    Scenario scenario;
    std::vector<Distribution> tables;

    bool operator==(const EmpiricalModel&) const = default;
};

// Validates the table/context alignment (one table per context, axes equal to
// the context's measurements in canonical order).
EmpiricalModel make_model(Scenario scenario, std::vector<Distribution> tables);

struct DisturbanceViolation {
    std::string context_a;  // canonical labels of the two overlapping contexts
    std::string context_b;
    std::vector<std::string> overlap;
    Distribution marginal_a;
    Distribution marginal_b;
};

// Empty iff for every pair of overlapping cover contexts the two marginals on
// the overlap agree exactly.
std::vector<DisturbanceViolation> check_no_disturbance(const EmpiricalModel& m);

// One outcome per measurement of a scenario.
struct DeterministicAssignment {
    std::map<std::string, std::string> values;

    bool operator==(const DeterministicAssignment&) const = default;
};

// Throws input_error unless the assignment is total on s with known labels.
void check_assignment(const Scenario& s, const DeterministicAssignment& a);

// Outcome tuple of the assignment restricted to a context, canonical order.
std::vector<std::string> restrict_assignment(const DeterministicAssignment& a, const Context& c);

// Point-mass tables on the restrictions of a total assignment. The result
// always satisfies the marginal condition.
EmpiricalModel deterministic_model(const Scenario& s, const DeterministicAssignment& a);

// Context-wise exact convex combination. All models must share one scenario
// and the weights must be nonnegative and sum to exactly 1.
EmpiricalModel mix(const std::vector<std::pair<Rat, EmpiricalModel>>& parts);

}  // namespace ctxkit
