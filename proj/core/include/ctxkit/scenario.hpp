#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace ctxkit {

// A measurement is its finite set of outcome labels. The stored order of the
// outcome list is the canonical order for every tuple encoding downstream.
struct Measurement {
    std::string id;
    std::vector<std::string> outcomes;

    bool operator==(const Measurement&) const = default;
};

// A context is a set of jointly measurable measurements, stored in canonical
// (lexicographic-by-id) order. Joint outcomes of a context are tuples over the
// members' outcome lists in this order.
struct Context {
    std::vector<std::string> members;

    bool operator==(const Context&) const = default;
};

struct Scenario {
    std::vector<Measurement> measurements;  // sorted by id
    std::vector<Context> cover;             // canonically sorted, deduplicated

    bool operator==(const Scenario&) const = default;
};

// Comma-joined label, e.g. {"a","b"} -> "a,b". Used for context labels and for
// outcome-tuple keys in the file formats; ids and labels therefore may not
// contain ',' or '|'.
std::string join_comma(const std::vector<std::string>& parts);
std::vector<std::string> split_comma(const std::string& joined);

// Canonicalizes and structurally checks the inputs: distinct measurement ids,
// distinct outcome labels per measurement, nonempty contexts whose members all
// exist, no ','/'|' in ids or labels. Throws input_error on violation.
// Uncovered measurements and nested contexts are allowed here; they are what
// validate_scenario reports.
Scenario make_scenario(std::vector<Measurement> measurements,
                       std::vector<std::vector<std::string>> contexts);

std::size_t measurement_index(const Scenario& s, const std::string& id);  // throws input_error
const Measurement& measurement(const Scenario& s, const std::string& id);

struct ValidationIssue {
    std::string kind;     // "uncovered" | "non-maximal"
    std::string message;  // names the offending measurement or context

    bool operator==(const ValidationIssue&) const = default;
};

// Empty result iff every measurement lies in at least one context; with
// strict, additionally iff no cover context is contained in another.
std::vector<ValidationIssue> validate_scenario(const Scenario& s, bool strict = false);

// n measurements M_0..M_{n-1} (zero-padded to a common width so id order is
// numeric order), contexts {M_i, M_{i+1 mod n}}. Rejects n < 3: at n = 2 the
// two contexts collapse into a single maximal one.
Scenario make_n_cycle(int n, const std::vector<std::string>& outcomes);

// Same measurements, single context holding all of them.
Scenario make_classical(const Scenario& s);

// n measurements in a line, contexts {M_i, M_{i+1}}, i = 0..n-2. Requires n >= 2.
Scenario make_path(int n, const std::vector<std::string>& outcomes);

// The scenario's simplicial complex, truncated at dimension 2: vertices are
// measurements, edges all 2-subsets of some context, triangles all 3-subsets.
// That is enough to compute b0 and b1.
struct ScenarioComplex {
    std::vector<std::string> vertices;           // sorted ids
    std::vector<std::array<std::size_t, 2>> edges;      // vertex index pairs, i < j, sorted
    std::vector<std::array<std::size_t, 3>> triangles;  // vertex index triples, i < j < k, sorted

    bool operator==(const ScenarioComplex&) const = default;
};

ScenarioComplex make_complex(const Scenario& s);

struct BettiNumbers {
    int b0 = 0;
    int b1 = 0;

    bool operator==(const BettiNumbers&) const = default;
};

// Homology of the 2-truncated complex over GF(2): b0 = connected components,
// b1 = dim ker d1 - rank d2.
BettiNumbers betti_numbers(const Scenario& s);

// True iff b1 = 0. Scenarios with b1 = 0 cannot support contextuality.
bool is_acyclic(const Scenario& s);

}  // namespace ctxkit
