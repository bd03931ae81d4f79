#include "ctxkit/scenario.hpp"

#include "ctxkit/errors.hpp"
#include "ctxkit/gf2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ctxkit {

std::string join_comma(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ',';
        out += parts[i];
    }
    return out;
}

std::vector<std::string> split_comma(const std::string& joined) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : joined) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

namespace {

void check_label(const std::string& text, const char* what) {
    if (text.empty()) throw input_error(std::string(what) + " must be nonempty");
    if (text.find(',') != std::string::npos || text.find('|') != std::string::npos) {
        throw input_error(std::string(what) + " '" + text + "' may not contain ',' or '|'");
    }
}

}  // namespace

Scenario make_scenario(std::vector<Measurement> measurements,
                       std::vector<std::vector<std::string>> contexts) {
    std::sort(measurements.begin(), measurements.end(),
              [](const Measurement& a, const Measurement& b) { return a.id < b.id; });
    std::set<std::string> ids;
    for (const auto& m : measurements) {
        check_label(m.id, "measurement id");
        if (!ids.insert(m.id).second) throw input_error("duplicate measurement id '" + m.id + "'");
        if (m.outcomes.empty()) throw input_error("measurement '" + m.id + "' has no outcomes");
        std::set<std::string> seen;
        for (const auto& o : m.outcomes) {
            check_label(o, "outcome label");
            if (!seen.insert(o).second) {
                throw input_error("measurement '" + m.id + "' repeats outcome label '" + o + "'");
            }
        }
    }

    std::set<std::vector<std::string>> canonical;
    for (auto& c : contexts) {
        if (c.empty()) throw input_error("empty context in cover");
        std::sort(c.begin(), c.end());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i && c[i] == c[i - 1]) {
                throw input_error("context '" + join_comma(c) + "' repeats measurement '" + c[i] + "'");
            }
            if (!ids.count(c[i])) {
                throw input_error("context '" + join_comma(c) + "' names unknown measurement '" + c[i] + "'");
            }
        }
        canonical.insert(std::move(c));
    }

    Scenario s;
    s.measurements = std::move(measurements);
    for (const auto& members : canonical) s.cover.push_back(Context{members});
    return s;
}

std::size_t measurement_index(const Scenario& s, const std::string& id) {
    auto it = std::lower_bound(s.measurements.begin(), s.measurements.end(), id,
                               [](const Measurement& m, const std::string& key) { return m.id < key; });
    if (it == s.measurements.end() || it->id != id) {
        throw input_error("unknown measurement '" + id + "'");
    }
    return static_cast<std::size_t>(it - s.measurements.begin());
}

const Measurement& measurement(const Scenario& s, const std::string& id) {
    return s.measurements[measurement_index(s, id)];
}

std::vector<ValidationIssue> validate_scenario(const Scenario& s, bool strict) {
    std::vector<ValidationIssue> issues;
    std::set<std::string> covered;
    for (const auto& c : s.cover) covered.insert(c.members.begin(), c.members.end());
    for (const auto& m : s.measurements) {
        if (!covered.count(m.id)) {
            issues.push_back({"uncovered", "uncovered: " + m.id});
        }
    }
    if (strict) {
        for (std::size_t i = 0; i < s.cover.size(); ++i) {
            for (std::size_t j = 0; j < s.cover.size(); ++j) {
                if (i == j) continue;
                const auto& small = s.cover[i].members;
                const auto& big = s.cover[j].members;
                if (small.size() < big.size() &&
                    std::includes(big.begin(), big.end(), small.begin(), small.end())) {
                    issues.push_back({"non-maximal", "non-maximal: " + join_comma(small) +
                                                         " <= " + join_comma(big)});
                    break;
                }
            }
        }
    }
    return issues;
}

Scenario make_n_cycle(int n, const std::vector<std::string>& outcomes) {
    if (n < 3) {
        throw input_error("n-cycle needs n >= 3 (n = 2 collapses to a single maximal context)");
    }
    std::size_t width = std::to_string(n - 1).size();
    auto name = [&](int i) {
        std::string digits = std::to_string(i);
        return "M_" + std::string(width - digits.size(), '0') + digits;
    };
    std::vector<Measurement> ms;
    std::vector<std::vector<std::string>> ctxs;
    for (int i = 0; i < n; ++i) {
        ms.push_back({name(i), outcomes});
        ctxs.push_back({name(i), name((i + 1) % n)});
    }
    return make_scenario(std::move(ms), std::move(ctxs));
}

Scenario make_classical(const Scenario& s) {
    std::vector<std::string> all;
    for (const auto& m : s.measurements) all.push_back(m.id);
    return make_scenario(s.measurements, {all});
}

Scenario make_path(int n, const std::vector<std::string>& outcomes) {
    if (n < 2) throw input_error("path needs n >= 2");
    std::size_t width = std::to_string(n - 1).size();
    auto name = [&](int i) {
        std::string digits = std::to_string(i);
        return "M_" + std::string(width - digits.size(), '0') + digits;
    };
    std::vector<Measurement> ms;
    std::vector<std::vector<std::string>> ctxs;
    for (int i = 0; i < n; ++i) ms.push_back({name(i), outcomes});
    for (int i = 0; i + 1 < n; ++i) ctxs.push_back({name(i), name(i + 1)});
    return make_scenario(std::move(ms), std::move(ctxs));
}

ScenarioComplex make_complex(const Scenario& s) {
    ScenarioComplex k;
    for (const auto& m : s.measurements) k.vertices.push_back(m.id);

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < k.vertices.size(); ++i) index[k.vertices[i]] = i;

    std::set<std::array<std::size_t, 2>> edges;
    std::set<std::array<std::size_t, 3>> triangles;
    for (const auto& c : s.cover) {
        std::vector<std::size_t> v;
        for (const auto& id : c.members) v.push_back(index.at(id));
        std::sort(v.begin(), v.end());
        for (std::size_t i = 0; i < v.size(); ++i) {
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                edges.insert({v[i], v[j]});
                for (std::size_t l = j + 1; l < v.size(); ++l) triangles.insert({v[i], v[j], v[l]});
            }
        }
    }
    k.edges.assign(edges.begin(), edges.end());
    k.triangles.assign(triangles.begin(), triangles.end());
    return k;
}

BettiNumbers betti_numbers(const Scenario& s) {
    ScenarioComplex k = make_complex(s);

    gf2::Matrix d1(k.vertices.size());
    for (std::size_t e = 0; e < k.edges.size(); ++e) {
        d1.add_row();
        d1.set(e, k.edges[e][0]);
        d1.set(e, k.edges[e][1]);
    }
    gf2::Matrix d2(k.edges.size());
    std::map<std::array<std::size_t, 2>, std::size_t> edge_index;
    for (std::size_t e = 0; e < k.edges.size(); ++e) edge_index[k.edges[e]] = e;
    for (std::size_t t = 0; t < k.triangles.size(); ++t) {
        const auto& tri = k.triangles[t];
        d2.add_row();
        d2.set(t, edge_index.at({tri[0], tri[1]}));
        d2.set(t, edge_index.at({tri[0], tri[2]}));
        d2.set(t, edge_index.at({tri[1], tri[2]}));
    }

    std::size_t rank1 = gf2::rank(d1);
    std::size_t rank2 = gf2::rank(d2);
    BettiNumbers b;
    b.b0 = static_cast<int>(k.vertices.size() - rank1);
    b.b1 = static_cast<int>(k.edges.size() - rank1 - rank2);
    return b;
}

bool is_acyclic(const Scenario& s) { return betti_numbers(s).b1 == 0; }

}  // namespace ctxkit
