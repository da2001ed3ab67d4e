#include "ped/maxsped.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>

namespace ped {

const char* to_string(EdgeChoice c) {
    switch (c) {
        case EdgeChoice::Full: return "full";
        case EdgeChoice::Forward: return "forward";
        case EdgeChoice::Backward: return "backward";
        case EdgeChoice::Erased: return "erased";
    }
    return "?";
}

Rational choice_fraction(const ChainEdge& edge, EdgeChoice choice) {
    switch (choice) {
        case EdgeChoice::Full: return Rational(1, 2);
        case EdgeChoice::Forward: return edge.forward;
        case EdgeChoice::Backward: return edge.backward;
        case EdgeChoice::Erased: return Rational(0);
    }
    return Rational(0);
}

namespace {

template <class Ink>
struct InkOps;

template <>
struct InkOps<double> {
    static double root(const Rational& coefficient, const Rational& square) {
        return coefficient.get_d() * std::sqrt(square.get_d());
    }
    static int compare(double a, double b) {
        double tol = kFloatTolerance * std::max({1.0, std::abs(a), std::abs(b)});
        if (a - b > tol) return 1;
        if (b - a > tol) return -1;
        return 0;
    }
    static double to_double(double a) { return a; }
};

template <>
struct InkOps<RadicalSum> {
    static RadicalSum root(const Rational& coefficient, const Rational& square) {
        return RadicalSum::scaled_root(coefficient, square);
    }
    static int compare(const RadicalSum& a, const RadicalSum& b) { return (a - b).sign(); }
    static double to_double(const RadicalSum& a) { return a.to_double(); }
};

// A stub of fraction `stub` covers a crossing at nearer-endpoint fraction
// `at` iff it reaches strictly past it; open stubs may end on the crossing.
bool covers(const Rational& stub, const Rational& at) {
    return stub > at;
}

constexpr std::array<EdgeChoice, 3> kSpedChoices{EdgeChoice::Full, EdgeChoice::Forward, EdgeChoice::Backward};
constexpr std::array<EdgeChoice, 2> kZeroOneChoices{EdgeChoice::Full, EdgeChoice::Erased};

// Transition rule of the MaxSPED recurrence, e_j -> e_{j+1}. A fully drawn
// e_j, or a backward-drawn e_j whose backward stub reaches past its forward
// crossing, forbids e_{j+1} from covering their crossing: e_{j+1} may then
// only take its backward stubs, or its forward stubs when x'_{j+1} >= x''_{j+1}.
// Otherwise e_{j+1} is unconstrained.
bool sped_transition(const ChainEdge& cur, EdgeChoice x, const ChainEdge& next, EdgeChoice y) {
    bool restricted = x == EdgeChoice::Full || (x == EdgeChoice::Backward && cur.backward > cur.forward);
    if (!restricted) return true;
    switch (y) {
        case EdgeChoice::Backward: return true;
        case EdgeChoice::Forward: return next.backward >= next.forward;
        default: return false;
    }
}

// Generic rule: the shared crossing may not be covered by both edges.
bool covering_transition(const ChainEdge& cur, EdgeChoice x, const ChainEdge& next, EdgeChoice y) {
    return !(covers(choice_fraction(cur, x), cur.forward) && covers(choice_fraction(next, y), next.backward));
}

using Transition = std::function<bool(const ChainEdge&, EdgeChoice, const ChainEdge&, EdgeChoice)>;

template <class Ink>
class ChainDp {
public:
    ChainDp(const ConflictComponent& comp, const std::vector<Rational>& squared_lengths,
            std::span<const EdgeChoice> choices, Transition transition)
        : comp_(comp), choices_(choices), transition_(std::move(transition)) {
        const auto& chain = comp_.chain;
        ink_.resize(chain.size());
        for (std::size_t j = 0; j < chain.size(); ++j) {
            const Rational& sq = squared_lengths[chain[j].edge];
            for (std::size_t c = 0; c < choices_.size(); ++c) {
                Rational frac = choice_fraction(chain[j], choices_[c]);
                ink_[j].push_back(InkOps<Ink>::root(2 * frac, sq));
            }
        }
    }

    struct Result {
        Ink value{};
        std::vector<EdgeChoice> choices;
        std::vector<DpRow> table;
    };

    Result solve() {
        const std::size_t n = comp_.chain.size();
        if (comp_.kind == ComponentKind::Path || n < 3) return run(std::nullopt);
        std::optional<Result> best;
        for (std::size_t z = 0; z < choices_.size(); ++z) {
            Result r = run(z);
            if (r.choices.empty()) continue;
            if (!best || InkOps<Ink>::compare(r.value, best->value) > 0) best = std::move(r);
        }
        return std::move(*best);
    }

private:
    // Bottom-up visit e_n .. e_1. With `fixed_last`, e_n is pinned to that
    // choice and e_1 must respect the closing crossing.
    Result run(std::optional<std::size_t> fixed_last) {
        const auto& chain = comp_.chain;
        const std::size_t n = chain.size();
        const std::size_t k = choices_.size();
        std::vector<std::vector<std::optional<Ink>>> value(n, std::vector<std::optional<Ink>>(k));
        std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(k, k));

        for (std::size_t c = 0; c < k; ++c) {
            if (fixed_last && *fixed_last != c) continue;
            value[n - 1][c] = ink_[n - 1][c];
        }
        for (std::size_t j = n - 1; j-- > 0;) {
            for (std::size_t c = 0; c < k; ++c) {
                std::optional<std::size_t> arg;
                for (std::size_t d = 0; d < k; ++d) {
                    if (!value[j + 1][d]) continue;
                    if (!transition_(chain[j], choices_[c], chain[j + 1], choices_[d])) continue;
                    if (!arg || InkOps<Ink>::compare(*value[j + 1][d], *value[j + 1][*arg]) > 0) arg = d;
                }
                if (!arg) continue;
                value[j][c] = ink_[j][c] + *value[j + 1][*arg];
                next[j][c] = *arg;
            }
        }

        Result result;
        std::optional<std::size_t> first;
        for (std::size_t c = 0; c < k; ++c) {
            if (!value[0][c]) continue;
            if (fixed_last) {
                bool last_covers = covers(choice_fraction(chain[n - 1], choices_[*fixed_last]), chain[n - 1].forward);
                bool first_covers = covers(choice_fraction(chain[0], choices_[c]), chain[0].backward);
                if (last_covers && first_covers) continue;
            }
            if (!first || InkOps<Ink>::compare(*value[0][c], *value[0][*first]) > 0) first = c;
        }
        if (!first) return result;

        result.value = *value[0][*first];
        std::size_t c = *first;
        for (std::size_t j = 0; j < n; ++j) {
            result.choices.push_back(choices_[c]);
            c = next[j][c];
        }
        result.table.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t d = 0; d < k; ++d) {
                if (!value[j][d]) continue;
                double v = InkOps<Ink>::to_double(*value[j][d]);
                switch (choices_[d]) {
                    case EdgeChoice::Full: result.table[j].full = v; break;
                    case EdgeChoice::Backward: result.table[j].backward = v; break;
                    case EdgeChoice::Forward: result.table[j].forward = v; break;
                    case EdgeChoice::Erased: break;
                }
            }
        }
        return result;
    }

    const ConflictComponent& comp_;
    std::span<const EdgeChoice> choices_;
    Transition transition_;
    std::vector<std::vector<Ink>> ink_;
};

ComponentSolution solve_with(const ConflictComponent& component, const std::vector<Rational>& squared_lengths,
                             ArithmeticMode mode, std::span<const EdgeChoice> choices, Transition transition) {
    ComponentSolution out;
    if (mode == ArithmeticMode::Exact) {
        auto r = ChainDp<RadicalSum>(component, squared_lengths, choices, std::move(transition)).solve();
        out.ink = r.value.to_double();
        out.exact_ink = std::move(r.value);
        out.choices = std::move(r.choices);
        out.table = std::move(r.table);
    } else {
        auto r = ChainDp<double>(component, squared_lengths, choices, std::move(transition)).solve();
        out.ink = r.value;
        out.choices = std::move(r.choices);
        out.table = std::move(r.table);
    }
    return out;
}

SpedSolution assemble(const GeometricGraph& g, ArithmeticMode mode, CrossingMethod method, bool zero_one) {
    auto crossings = enumerate_crossings(g, method);
    auto components = build_conflict_components(g, crossings);
    std::vector<Rational> squared(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) squared[e] = g.squared_length(e);

    SpedSolution sol;
    sol.choices.assign(g.edge_count(), EdgeChoice::Full);
    std::vector<Rational> fractions(g.edge_count(), Rational(1, 2));
    if (mode == ArithmeticMode::Exact) sol.k_opt_exact = RadicalSum{};
    for (const auto& comp : components) {
        ComponentSolution cs = zero_one ? solve_component_01(comp, squared, mode) : solve_component(comp, squared, mode);
        sol.k_opt += cs.ink;
        if (cs.exact_ink) *sol.k_opt_exact += *cs.exact_ink;
        for (std::size_t j = 0; j < comp.chain.size(); ++j) {
            std::size_t e = comp.chain[j].edge;
            sol.choices[e] = cs.choices[j];
            fractions[e] = choice_fraction(comp.chain[j], cs.choices[j]);
        }
    }
    sol.assignment = StubAssignment(std::move(fractions), zero_one);
    sol.ink = ink(g, sol.assignment);
    return sol;
}

}  // namespace

ComponentSolution solve_component(const ConflictComponent& component, const std::vector<Rational>& squared_lengths,
                                  ArithmeticMode mode) {
    return solve_with(component, squared_lengths, mode, kSpedChoices, sped_transition);
}

ComponentSolution solve_component_01(const ConflictComponent& component,
                                     const std::vector<Rational>& squared_lengths, ArithmeticMode mode) {
    return solve_with(component, squared_lengths, mode, kZeroOneChoices, covering_transition);
}

SpedSolution solve_maxsped(const GeometricGraph& g, ArithmeticMode mode, CrossingMethod method) {
    return assemble(g, mode, method, false);
}

SpedSolution solve_01_maxsped(const GeometricGraph& g, ArithmeticMode mode, CrossingMethod method) {
    return assemble(g, mode, method, true);
}

// Oracles -------------------------------------------------------------------------

namespace {

// Exhaustive search over per-edge candidate fractions with pairwise
// conflict tables computed from the stubs themselves.
class CandidateSearch {
public:
    CandidateSearch(const GeometricGraph& g, std::vector<std::vector<Rational>> candidates, ArithmeticMode mode)
        : g_(g), candidates_(std::move(candidates)), mode_(mode) {
        const std::size_t m = g.edge_count();
        lengths_.resize(m);
        for (std::size_t e = 0; e < m; ++e) lengths_[e] = g.length(e);
        suffix_max_.assign(m + 1, 0.0);
        for (std::size_t e = m; e-- > 0;) suffix_max_[e] = suffix_max_[e + 1] + lengths_[e];

        earlier_.resize(m);
        for (std::size_t f = 0; f < m; ++f) {
            for (std::size_t e = 0; e < f; ++e) {
                Table t(candidates_[e].size(), std::vector<bool>(candidates_[f].size(), false));
                bool any = false;
                for (std::size_t a = 0; a < candidates_[e].size(); ++a) {
                    for (std::size_t b = 0; b < candidates_[f].size(); ++b) {
                        t[a][b] = stubs_clash(e, candidates_[e][a], f, candidates_[f][b]);
                        any = any || t[a][b];
                    }
                }
                if (any) earlier_[f].push_back({e, std::move(t)});
            }
        }
    }

    OracleResult run() {
        pick_.assign(g_.edge_count(), 0);
        search(0, 0.0);
        OracleResult out;
        std::vector<Rational> fractions(g_.edge_count());
        for (std::size_t e = 0; e < g_.edge_count(); ++e) fractions[e] = candidates_[e][best_pick_[e]];
        out.assignment = StubAssignment(std::move(fractions), true);
        out.ink = best_;
        if (mode_ == ArithmeticMode::Exact) out.exact_ink = best_exact_;
        return out;
    }

private:
    using Table = std::vector<std::vector<bool>>;

    bool stubs_clash(std::size_t e, const Rational& fe, std::size_t f, const Rational& ff) const {
        if (fe == 0 || ff == 0) return false;
        const Point& eu = g_.vertex(g_.edge(e).u);
        const Point& ev = g_.vertex(g_.edge(e).v);
        const Point& fu = g_.vertex(g_.edge(f).u);
        const Point& fv = g_.vertex(g_.edge(f).v);
        Stub es[2] = {Stub(eu, ev, fe), Stub(ev, eu, fe)};
        Stub fs[2] = {Stub(fu, fv, ff), Stub(fv, fu, ff)};
        for (const Stub& a : es) {
            for (const Stub& b : fs) {
                if (stubs_conflict(a, b)) return true;
            }
        }
        return false;
    }

    RadicalSum exact_value() const {
        RadicalSum total;
        for (std::size_t e = 0; e < g_.edge_count(); ++e) {
            total += RadicalSum::scaled_root(2 * candidates_[e][pick_[e]], g_.squared_length(e));
        }
        return total;
    }

    void search(std::size_t e, double ink) {
        const std::size_t m = g_.edge_count();
        if (have_best_ && ink + suffix_max_[e] < best_ - 1e-6 * std::max(1.0, best_)) return;
        if (e == m) {
            record(ink);
            return;
        }
        for (std::size_t a = 0; a < candidates_[e].size(); ++a) {
            bool ok = true;
            for (const auto& [prev, table] : earlier_[e]) {
                if (table[pick_[prev]][a]) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pick_[e] = a;
            search(e + 1, ink + 2.0 * candidates_[e][a].get_d() * lengths_[e]);
        }
    }

    void record(double ink) {
        const double tol = 1e-6 * std::max(1.0, best_);
        if (!have_best_ || ink > best_ + tol) {
            have_best_ = true;
            best_ = ink;
            best_pick_ = pick_;
            if (mode_ == ArithmeticMode::Exact) best_exact_ = exact_value();
            return;
        }
        if (ink < best_ - tol) return;
        // Near tie: decide exactly in exact mode, by float otherwise.
        if (mode_ == ArithmeticMode::Exact) {
            RadicalSum v = exact_value();
            if ((v - best_exact_).sign() > 0) {
                best_exact_ = std::move(v);
                best_ = ink;
                best_pick_ = pick_;
            }
        } else if (ink > best_) {
            best_ = ink;
            best_pick_ = pick_;
        }
    }

    const GeometricGraph& g_;
    std::vector<std::vector<Rational>> candidates_;
    ArithmeticMode mode_;
    std::vector<double> lengths_;
    std::vector<double> suffix_max_;
    std::vector<std::vector<std::pair<std::size_t, Table>>> earlier_;
    std::vector<std::size_t> pick_;
    std::vector<std::size_t> best_pick_;
    bool have_best_ = false;
    double best_ = 0.0;
    RadicalSum best_exact_;
};

}  // namespace

OracleResult oracle_maxsped(const GeometricGraph& g, ArithmeticMode mode, std::size_t edge_limit) {
    const std::size_t m = g.edge_count();
    if (m > edge_limit) throw InstanceTooLarge("oracle limited to " + std::to_string(edge_limit) + " edges");
    std::vector<std::vector<Rational>> candidates(m, std::vector<Rational>{Rational(1, 2)});
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t f = e + 1; f < m; ++f) {
            auto hit = intersect_segments(g.segment(e), g.segment(f));
            const auto* cp = std::get_if<CrossingPoint>(&hit);
            if (!cp) continue;
            if (cp->t1 <= 0 || cp->t1 >= 1 || cp->t2 <= 0 || cp->t2 >= 1) continue;
            candidates[e].push_back(std::min(cp->t1, Rational(1 - cp->t1)));
            candidates[f].push_back(std::min(cp->t2, Rational(1 - cp->t2)));
        }
    }
    for (auto& list : candidates) {
        std::sort(list.begin(), list.end(), [](const Rational& a, const Rational& b) { return a > b; });
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return CandidateSearch(g, std::move(candidates), mode).run();
}

OracleResult oracle_01_maxsped(const GeometricGraph& g, ArithmeticMode mode, std::size_t edge_limit) {
    const std::size_t m = g.edge_count();
    if (m > edge_limit) throw InstanceTooLarge("oracle limited to " + std::to_string(edge_limit) + " edges");
    std::vector<std::vector<Rational>> candidates(m, std::vector<Rational>{Rational(1, 2), Rational(0)});
    return CandidateSearch(g, std::move(candidates), mode).run();
}

}  // namespace ped
