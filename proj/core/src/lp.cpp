#include "ctxkit/lp.hpp"

#include <cassert>
#include <cstddef>
#include <utility>

namespace ctxkit::lp {

namespace {

struct ReducedSystem {
    std::vector<std::size_t> kept;  // original indices of an independent row subset
    bool inconsistent = false;
    std::vector<Rat> farkas;  // over all original rows, when inconsistent
};

// Gaussian elimination over the augmented rows [A|b]. Keeps the original
// indices of a maximal independent subset of the A-rows and detects rows whose
// A-part is dependent but whose rhs is not, in which case the tracked
// elimination coefficients are already a Farkas certificate.
ReducedSystem rank_reduce(const Problem& p) {
    const std::size_t n = p.num_vars;
    ReducedSystem out;

    struct PivotRow {
        std::vector<Rat> a;      // reduced coefficients
        Rat b;                   // reduced rhs
        std::vector<Rat> comb;   // expression over original rows
        std::size_t pivot_col;
    };
    std::vector<PivotRow> pivots;

    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        std::vector<Rat> a = p.rows[i];
        Rat b = p.rhs[i];
        std::vector<Rat> comb(p.rows.size(), Rat(0));
        comb[i] = 1;

        for (const auto& pr : pivots) {
            const Rat& factor = a[pr.pivot_col];
            if (factor == 0) continue;
            Rat f = factor;  // pr.a[pivot_col] == 1
            for (std::size_t c = 0; c < n; ++c) {
                if (pr.a[c] != 0) a[c] -= f * pr.a[c];
            }
            b -= f * pr.b;
            for (std::size_t k = 0; k < comb.size(); ++k) {
                if (pr.comb[k] != 0) comb[k] -= f * pr.comb[k];
            }
        }

        std::size_t col = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (a[c] != 0) {
                col = c;
                break;
            }
        }
        if (col == n) {
            if (b != 0) {
                out.inconsistent = true;
                if (b < 0) {
                    for (auto& y : comb) y = -y;
                }
                out.farkas = std::move(comb);
                return out;
            }
            continue;  // redundant row
        }
        Rat inv = Rat(1) / a[col];
        for (auto& v : a) v *= inv;
        b *= inv;
        for (auto& v : comb) v *= inv;
        pivots.push_back({std::move(a), std::move(b), std::move(comb), col});
        out.kept.push_back(i);
    }
    return out;
}

}  // namespace

Result solve_feasibility(const Problem& p) {
    assert(p.rows.size() == p.rhs.size());
    const std::size_t n = p.num_vars;

    ReducedSystem red = rank_reduce(p);
    if (red.inconsistent) {
        Result r;
        r.feasible = false;
        r.farkas = std::move(red.farkas);
        return r;
    }

    const std::size_t m = red.kept.size();
    if (m == 0) {
        Result r;
        r.feasible = true;
        r.solution.assign(n, Rat(0));
        return r;
    }

    // Phase-1 tableau over the kept rows: columns [0,n) real, [n,n+m)
    // artificial, n+m the rhs. Rows are sign-normalized so rhs >= 0 and the
    // artificial block starts as the identity basis.
    const std::size_t rhs_col = n + m;
    std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(n + m + 1, Rat(0)));
    std::vector<bool> negated(m, false);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& row = p.rows[red.kept[i]];
        Rat b = p.rhs[red.kept[i]];
        negated[i] = b < 0;
        Rat sign = negated[i] ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = sign * row[j];
        tab[i][n + i] = 1;
        tab[i][rhs_col] = sign * b;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // Reduced-cost row for minimizing the artificial sum; entry rhs_col holds
    // minus the objective value.
    std::vector<Rat> cost(n + m + 1, Rat(0));
    for (std::size_t j = 0; j <= rhs_col; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) s += tab[i][j];
        Rat cj = (j >= n && j < n + m) ? Rat(1) : Rat(0);
        cost[j] = cj - s;
    }

    for (;;) {
        // Bland: entering column is the smallest real index with negative
        // reduced cost; artificial columns never re-enter.
        std::size_t enter = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][enter] > 0) {
                Rat ratio = tab[i][rhs_col] / tab[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
        }
        // The phase-1 objective is bounded below by zero, so an improving
        // column always admits a ratio test.
        assert(leave != m);

        Rat inv = Rat(1) / tab[leave][enter];
        for (auto& v : tab[leave]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat f = tab[i][enter];
            for (std::size_t j = 0; j <= rhs_col; ++j) {
                if (tab[leave][j] != 0) tab[i][j] -= f * tab[leave][j];
            }
        }
        if (cost[enter] != 0) {
            Rat f = cost[enter];
            for (std::size_t j = 0; j <= rhs_col; ++j) {
                if (tab[leave][j] != 0) cost[j] -= f * tab[leave][j];
            }
        }
        basis[leave] = enter;
    }

    Rat objective = -cost[rhs_col];
    Result r;
    if (objective == 0) {
        r.feasible = true;
        r.solution.assign(n, Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < n) r.solution[basis[i]] = tab[i][rhs_col];
        }
    } else {
        // Simplex multipliers y = c_B B^{-1}; the artificial block of the
        // final tableau is B^{-1}.
        r.feasible = false;
        r.farkas.assign(p.rows.size(), Rat(0));
        for (std::size_t i = 0; i < m; ++i) {
            Rat y = 0;
            for (std::size_t k = 0; k < m; ++k) {
                if (basis[k] >= n) y += tab[k][n + i];
            }
            if (negated[i]) y = -y;
            r.farkas[red.kept[i]] = y;
        }
    }
    return r;
}

bool check_solution(const Problem& p, const std::vector<Rat>& x) {
    if (x.size() != p.num_vars) return false;
    for (const auto& v : x) {
        if (v < 0) return false;
    }
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < p.num_vars; ++j) {
            if (p.rows[i][j] != 0 && x[j] != 0) s += p.rows[i][j] * x[j];
        }
        if (s != p.rhs[i]) return false;
    }
    return true;
}

bool check_farkas(const Problem& p, const std::vector<Rat>& y) {
    if (y.size() != p.rows.size()) return false;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            if (y[i] != 0 && p.rows[i][j] != 0) s += y[i] * p.rows[i][j];
        }
        if (s > 0) return false;
    }
    Rat yb = 0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        if (y[i] != 0) yb += y[i] * p.rhs[i];
    }
    return yb > 0;
}

}  // namespace ctxkit::lp
