#include "ped/minsped.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ped {

TwoSatInstance build_instance(const GeometricGraph& g, WeightMode mode, CrossingMethod method) {
    const std::size_t m = g.edge_count();
    auto crossings = enumerate_crossings(g, method);

    // Per edge: (radius, crossing id), sorted by radius then by the other edge.
    std::vector<std::vector<std::pair<Rational, std::size_t>>> along(m);
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        along[crossings[c].e].push_back({crossings[c].near_e, c});
        along[crossings[c].f].push_back({crossings[c].near_f, c});
    }

    TwoSatInstance inst;
    inst.mode = mode;
    inst.edge_count = m;
    inst.edge_variables.resize(m);
    // variable of edge e induced by crossing c
    std::vector<std::pair<std::size_t, std::size_t>> var_of(crossings.size());

    for (std::size_t e = 0; e < m; ++e) {
        auto& list = along[e];
        std::sort(list.begin(), list.end(), [&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return crossings[a.second].other(e) < crossings[b.second].other(e);
        });
        const double length = list.empty() ? 0.0 : g.length(e);
        for (std::size_t i = 0; i < list.size(); ++i) {
            SegmentPair p;
            p.edge = e;
            p.index = i + 1;
            p.induced_by = crossings[list[i].second].other(e);
            p.inner = list[i].first;
            p.outer = i + 1 < list.size() ? list[i + 1].first : Rational(1, 2);
            Rational span = p.outer - p.inner;
            if (mode == WeightMode::Relative) {
                p.exact_weight = span;
                p.weight = span.get_d();
            } else {
                p.weight = 2.0 * span.get_d() * length;
            }
            std::size_t id = inst.variables.size();
            inst.variables.push_back(std::move(p));
            inst.edge_variables[e].push_back(id);
            const Crossing& c = crossings[list[i].second];
            (c.e == e ? var_of[list[i].second].first : var_of[list[i].second].second) = id;
        }
        const auto& vars = inst.edge_variables[e];
        for (std::size_t i = 0; i + 1 < vars.size(); ++i) inst.prefix_clauses.push_back({vars[i], vars[i + 1]});
    }
    inst.crossing_clauses = std::move(var_of);
    return inst;
}

bool satisfies(const TwoSatInstance& inst, const std::vector<bool>& values) {
    if (values.size() != inst.variables.size()) return false;
    for (auto [a, b] : inst.prefix_clauses) {
        if (values[a] && !values[b]) return false;
    }
    for (auto [x, y] : inst.crossing_clauses) {
        if (!values[x] && !values[y]) return false;
    }
    return true;
}

Assignment make_assignment(const TwoSatInstance& inst, std::vector<bool> values) {
    Assignment a;
    a.values = std::move(values);
    Rational exact = 0;
    for (std::size_t v = 0; v < a.values.size(); ++v) {
        if (!a.values[v]) continue;
        a.weight += inst.variables[v].weight;
        if (inst.variables[v].exact_weight) exact += *inst.variables[v].exact_weight;
    }
    if (inst.mode == WeightMode::Relative) a.exact_weight = exact;
    return a;
}

namespace {

// Residual bookkeeping for the local-ratio phase, over exact rationals or
// doubles. Doubles snap to zero within a tolerance scaled by the largest weight.
template <class W>
struct Residuals {
    std::vector<W> r;
    W tol{};

    bool is_zero(const W& w) const { return w <= tol; }
};

template <class W>
W weight_of(const SegmentPair& p);

template <>
double weight_of<double>(const SegmentPair& p) {
    return p.weight;
}

template <>
Rational weight_of<Rational>(const SegmentPair& p) {
    return *p.exact_weight;
}

template <class W>
std::vector<bool> local_ratio(const TwoSatInstance& inst) {
    const std::size_t v = inst.variables.size();
    Residuals<W> res;
    res.r.resize(v);
    double largest = 0.0;
    for (std::size_t i = 0; i < v; ++i) {
        res.r[i] = weight_of<W>(inst.variables[i]);
        largest = std::max(largest, inst.variables[i].weight);
    }
    if constexpr (std::is_same_v<W, double>) res.tol = kFloatTolerance * std::max(1.0, largest);

    auto owner = [&](std::size_t var) -> const std::vector<std::size_t>& {
        return inst.edge_variables[inst.variables[var].edge];
    };
    auto rescost = [&](std::size_t var) {
        const auto& vars = owner(var);
        W sum{};
        for (std::size_t k = inst.variables[var].index - 1; k < vars.size(); ++k) sum += res.r[vars[k]];
        return sum;
    };
    auto take = [&](std::size_t var, W amount) {
        const auto& vars = owner(var);
        for (std::size_t k = inst.variables[var].index - 1; k < vars.size(); ++k) {
            W& slot = res.r[vars[k]];
            if (amount >= slot - res.tol) {
                amount -= slot;
                slot = W{};
            } else {
                slot -= amount;
                amount = W{};
            }
            if (res.is_zero(amount)) break;
        }
    };

    for (auto [x, y] : inst.crossing_clauses) {
        W cx = rescost(x);
        W cy = rescost(y);
        if (res.is_zero(cx) || res.is_zero(cy)) continue;
        W alpha = std::min(cx, cy);
        take(x, alpha);
        take(y, alpha);
    }

    // Cut every edge at its lowest level whose whole suffix is paid for.
    std::vector<bool> values(v, false);
    for (const auto& vars : inst.edge_variables) {
        W suffix{};
        for (std::size_t k = vars.size(); k-- > 0;) {
            suffix += res.r[vars[k]];
            if (!res.is_zero(suffix)) break;
            values[vars[k]] = true;
        }
    }
    return values;
}

// Only the lowest erased pair of an edge can be restored without breaking
// the prefix rule; it can be restored when the partner of its crossing
// clause stays erased.
void reverse_delete(const TwoSatInstance& inst, std::vector<bool>& values) {
    std::vector<std::size_t> partner(inst.variables.size());
    for (auto [x, y] : inst.crossing_clauses) {
        partner[x] = y;
        partner[y] = x;
    }
    std::vector<std::size_t> order(inst.variables.size());
    std::iota(order.begin(), order.end(), 0);
    auto heavier = [&](std::size_t a, std::size_t b) {
        const auto& pa = inst.variables[a];
        const auto& pb = inst.variables[b];
        if (pa.exact_weight && pb.exact_weight && *pa.exact_weight != *pb.exact_weight) {
            return *pa.exact_weight > *pb.exact_weight;
        }
        if (!pa.exact_weight && pa.weight != pb.weight) return pa.weight > pb.weight;
        return a < b;
    };
    std::stable_sort(order.begin(), order.end(), heavier);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t var : order) {
            if (!values[var]) continue;
            const SegmentPair& p = inst.variables[var];
            if (p.index > 1 && values[inst.edge_variables[p.edge][p.index - 2]]) continue;
            if (!values[partner[var]]) continue;
            values[var] = false;
            changed = true;
        }
    }
}

}  // namespace

Assignment approx_minw2sat(const TwoSatInstance& inst) {
    std::vector<bool> values =
        inst.mode == WeightMode::Relative ? local_ratio<Rational>(inst) : local_ratio<double>(inst);
    reverse_delete(inst, values);
    return make_assignment(inst, std::move(values));
}

Assignment exact_minw2sat(const TwoSatInstance& inst, std::size_t variable_limit) {
    if (inst.variables.size() > variable_limit) {
        throw InstanceTooLarge("exact MinW2Sat limited to " + std::to_string(variable_limit) + " variables");
    }
    const std::size_t m = inst.edge_count;
    // Edges with variables; a cut level c in 0..k erases pairs c+1..k.
    std::vector<std::size_t> active;
    for (std::size_t e = 0; e < m; ++e) {
        if (!inst.edge_variables[e].empty()) active.push_back(e);
    }
    std::vector<std::size_t> level(m, 0);

    auto values_for = [&]() {
        std::vector<bool> values(inst.variables.size(), false);
        for (std::size_t e : active) {
            const auto& vars = inst.edge_variables[e];
            for (std::size_t k = level[e]; k < vars.size(); ++k) values[vars[k]] = true;
        }
        return values;
    };

    std::optional<Assignment> best;
    auto better = [&](const Assignment& a) {
        if (!best) return true;
        if (a.exact_weight) return *a.exact_weight < *best->exact_weight;
        return a.weight < best->weight - kFloatTolerance * std::max(1.0, best->weight);
    };

    // Plain odometer over all level combinations, largest levels (least
    // erasure) first.
    for (std::size_t e : active) level[e] = inst.edge_variables[e].size();
    while (true) {
        std::vector<bool> values = values_for();
        if (satisfies(inst, values)) {
            Assignment a = make_assignment(inst, std::move(values));
            if (better(a)) best = std::move(a);
        }
        std::size_t pos = 0;
        while (pos < active.size() && level[active[pos]] == 0) {
            level[active[pos]] = inst.edge_variables[active[pos]].size();
            ++pos;
        }
        if (pos == active.size()) break;
        --level[active[pos]];
    }
    return std::move(*best);
}

StubAssignment assignment_to_stubs(const GeometricGraph& g, const TwoSatInstance& inst, const Assignment& a) {
    std::vector<Rational> fractions(g.edge_count(), Rational(1, 2));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        for (std::size_t var : inst.edge_variables[e]) {
            if (a.values[var]) {
                fractions[e] = inst.variables[var].inner;
                break;
            }
        }
    }
    return StubAssignment(std::move(fractions));
}

}  // namespace ped
