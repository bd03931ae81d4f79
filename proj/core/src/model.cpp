#include "ctxkit/model.hpp"

#include "ctxkit/errors.hpp"

#include <algorithm>
#include <set>

namespace ctxkit {

namespace {

// Absolute guard against pathological dense tables; operation-level
// enumeration caps are enforced separately by the callers that have one.
constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

std::size_t outcome_index(const Measurement& m, const std::string& label) {
    for (std::size_t i = 0; i < m.outcomes.size(); ++i) {
        if (m.outcomes[i] == label) return i;
    }
    throw input_error("measurement '" + m.id + "' has no outcome '" + label + "'");
}

}  // namespace

std::size_t table_size(const std::vector<Measurement>& axes) {
    std::size_t n = 1;
    for (const auto& m : axes) {
        if (m.outcomes.empty()) throw input_error("measurement '" + m.id + "' has no outcomes");
        if (n > kMaxTableSize / m.outcomes.size()) {
            throw too_large_error("joint outcome table too large", "> " + std::to_string(kMaxTableSize));
        }
        n *= m.outcomes.size();
    }
    return n;
}

std::size_t rank_tuple(const std::vector<Measurement>& axes, const std::vector<std::size_t>& indices) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < axes.size(); ++i) r = r * axes[i].outcomes.size() + indices[i];
    return r;
}

std::vector<std::size_t> unrank_tuple(const std::vector<Measurement>& axes, std::size_t rank) {
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t i = axes.size(); i-- > 0;) {
        idx[i] = rank % axes[i].outcomes.size();
        rank /= axes[i].outcomes.size();
    }
    return idx;
}

std::vector<std::string> tuple_labels(const std::vector<Measurement>& axes, std::size_t rank) {
    auto idx = unrank_tuple(axes, rank);
    std::vector<std::string> labels(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) labels[i] = axes[i].outcomes[idx[i]];
    return labels;
}

std::size_t rank_of_labels(const std::vector<Measurement>& axes, const std::vector<std::string>& labels) {
    if (labels.size() != axes.size()) {
        throw input_error("outcome tuple '" + join_comma(labels) + "' has arity " +
                          std::to_string(labels.size()) + ", expected " + std::to_string(axes.size()));
    }
    std::vector<std::size_t> idx(axes.size());
    for (std::size_t i = 0; i < axes.size(); ++i) idx[i] = outcome_index(axes[i], labels[i]);
    return rank_tuple(axes, idx);
}

Distribution make_distribution(std::vector<Measurement> axes, std::vector<Rat> weights) {
    std::size_t n = table_size(axes);
    if (weights.size() != n) {
        throw input_error("table has " + std::to_string(weights.size()) + " weights, expected " +
                          std::to_string(n));
    }
    Rat sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (weights[i] < 0) {
            throw input_error("negative weight at tuple '" + join_comma(tuple_labels(axes, i)) + "'");
        }
        sum += weights[i];
    }
    if (sum != 1) {
        throw input_error("table weights sum to " + format_rational(sum) + ", expected 1");
    }
    return Distribution{std::move(axes), std::move(weights)};
}

Distribution point_mass(std::vector<Measurement> axes, const std::vector<std::string>& labels) {
    std::vector<Rat> w(table_size(axes), Rat(0));
    w[rank_of_labels(axes, labels)] = 1;
    return Distribution{std::move(axes), std::move(w)};
}

Distribution uniform_distribution(std::vector<Measurement> axes) {
    std::size_t n = table_size(axes);
    std::vector<Rat> w(n, Rat(BigInt(1), BigInt(n)));
    return Distribution{std::move(axes), std::move(w)};
}

Distribution marginalize(const Distribution& d, const std::vector<std::string>& keep) {
    if (keep.empty()) throw input_error("marginalize: keep set is empty");
    std::set<std::string> keep_set(keep.begin(), keep.end());
    for (const auto& id : keep) {
        bool found = std::any_of(d.axes.begin(), d.axes.end(),
                                 [&](const Measurement& m) { return m.id == id; });
        if (!found) throw input_error("marginalize: '" + id + "' is not an axis of the table");
    }
    std::vector<Measurement> kept_axes;
    std::vector<std::size_t> kept_pos;
    for (std::size_t i = 0; i < d.axes.size(); ++i) {
        if (keep_set.count(d.axes[i].id)) {
            kept_axes.push_back(d.axes[i]);
            kept_pos.push_back(i);
        }
    }
    std::vector<Rat> out(table_size(kept_axes), Rat(0));
    for (std::size_t r = 0; r < d.weights.size(); ++r) {
        if (d.weights[r] == 0) continue;
        auto idx = unrank_tuple(d.axes, r);
        std::vector<std::size_t> sub(kept_pos.size());
        for (std::size_t i = 0; i < kept_pos.size(); ++i) sub[i] = idx[kept_pos[i]];
        out[rank_tuple(kept_axes, sub)] += d.weights[r];
    }
    return Distribution{std::move(kept_axes), std::move(out)};
}

std::vector<Measurement> context_axes(const Scenario& s, const Context& c) {
    std::vector<Measurement> axes;
    for (const auto& id : c.members) axes.push_back(measurement(s, id));
    return axes;
}

EmpiricalModel make_model(Scenario scenario, std::vector<Distribution> tables) {
    if (tables.size() != scenario.cover.size()) {
        throw input_error("model has " + std::to_string(tables.size()) + " tables for " +
                          std::to_string(scenario.cover.size()) + " contexts");
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
        auto expected = context_axes(scenario, scenario.cover[i]);
        if (tables[i].axes != expected) {
            throw input_error("table " + std::to_string(i) + " does not match context '" +
                              join_comma(scenario.cover[i].members) + "'");
        }
    }
    return EmpiricalModel{std::move(scenario), std::move(tables)};
}

std::vector<DisturbanceViolation> check_no_disturbance(const EmpiricalModel& m) {
    std::vector<DisturbanceViolation> violations;
    const auto& cover = m.scenario.cover;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        for (std::size_t j = i + 1; j < cover.size(); ++j) {
            std::vector<std::string> overlap;
            std::set_intersection(cover[i].members.begin(), cover[i].members.end(),
                                  cover[j].members.begin(), cover[j].members.end(),
                                  std::back_inserter(overlap));
            if (overlap.empty()) continue;
            Distribution a = marginalize(m.tables[i], overlap);
            Distribution b = marginalize(m.tables[j], overlap);
            if (a != b) {
                violations.push_back({join_comma(cover[i].members), join_comma(cover[j].members),
                                      overlap, std::move(a), std::move(b)});
            }
        }
    }
    return violations;
}

void check_assignment(const Scenario& s, const DeterministicAssignment& a) {
    for (const auto& m : s.measurements) {
        auto it = a.values.find(m.id);
        if (it == a.values.end()) {
            throw input_error("assignment misses measurement '" + m.id + "'");
        }
        outcome_index(m, it->second);
    }
}

std::vector<std::string> restrict_assignment(const DeterministicAssignment& a, const Context& c) {
    std::vector<std::string> labels;
    for (const auto& id : c.members) {
        auto it = a.values.find(id);
        if (it == a.values.end()) throw input_error("assignment misses measurement '" + id + "'");
        labels.push_back(it->second);
    }
    return labels;
}

EmpiricalModel deterministic_model(const Scenario& s, const DeterministicAssignment& a) {
    check_assignment(s, a);
    std::vector<Distribution> tables;
    for (const auto& c : s.cover) {
        tables.push_back(point_mass(context_axes(s, c), restrict_assignment(a, c)));
    }
    return make_model(s, std::move(tables));
}

EmpiricalModel mix(const std::vector<std::pair<Rat, EmpiricalModel>>& parts) {
    if (parts.empty()) throw input_error("mix: no models given");
    const Scenario& s = parts.front().second.scenario;
    Rat total = 0;
    for (const auto& [w, m] : parts) {
        if (w < 0) throw input_error("mix: negative weight " + format_rational(w));
        if (m.scenario != s) throw input_error("mix: models live on different scenarios");
        total += w;
    }
    if (total != 1) {
        throw input_error("mix: weights sum to " + format_rational(total) + ", expected 1");
    }
    std::vector<Distribution> tables;
    for (std::size_t c = 0; c < s.cover.size(); ++c) {
        std::vector<Rat> acc(parts.front().second.tables[c].weights.size(), Rat(0));
        for (const auto& [w, m] : parts) {
            for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += w * m.tables[c].weights[t];
        }
        tables.push_back(Distribution{context_axes(s, s.cover[c]), std::move(acc)});
    }
    return make_model(s, std::move(tables));
}

}  // namespace ctxkit
