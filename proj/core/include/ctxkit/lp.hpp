#pragma once

#include "ctxkit/rational.hpp"

#include <cstddef>
#include <vector>

namespace ctxkit::lp {

// Feasibility problem in equality form: find x >= 0 with A x = b.
struct Problem {
    std::size_t num_vars = 0;
    std::vector<std::vector<Rat>> rows;  // each of length num_vars
    std::vector<Rat> rhs;                // one entry per row
};

// Exactly one of the two certificates is populated. The Farkas vector proves
// infeasibility: yA <= 0 componentwise while y.b > 0, so no nonnegative x can
// satisfy A x = b.
struct Result {
    bool feasible = false;
    std::vector<Rat> solution;  // num_vars entries when feasible
    std::vector<Rat> farkas;    // one entry per row when infeasible
};

// Exact phase-1 simplex with Bland's anti-cycling pivot rule. Redundant
// equality rows are removed by rank reduction first; an inconsistent dependent
// row yields its elimination coefficients as the Farkas certificate without
// running the simplex. Deterministic for fixed input.
Result solve_feasibility(const Problem& p);

bool check_solution(const Problem& p, const std::vector<Rat>& x);
bool check_farkas(const Problem& p, const std::vector<Rat>& y);

}  // namespace ctxkit::lp
