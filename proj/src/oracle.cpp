#include "vcut/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <variant>

#include "vcut/errors.hpp"
#include "vcut/flow.hpp"
#include "vcut/generators.hpp"
#include "vcut/index.hpp"
#include "vcut/local_cut.hpp"

namespace vcut {

namespace {

/// Calls fn with every k-subset of 0..n-1 until fn returns false.
void for_each_subset(std::size_t n, std::size_t k, const std::function<bool(const VertexSet&)>& fn) {
    if (k > n) return;
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
        if (!fn(VertexSet::from_sorted(pick))) return;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

bool is_complete(const Graph& g) { return g.m() * 2 == g.n() * (g.n() - 1); }

bool has_tiny_sides(const Graph& g, const VertexSet& x, std::size_t kappa) {
    return kappa > 0 && small_cut_large_side(components_after_removal(g, x), kappa - 1).has_value();
}

bool is_small_wheel(const Wheel& wh, std::size_t kappa) {
    std::size_t total = 0;
    for (const auto& s : wh.sectors) total += s.size();
    return std::any_of(wh.sectors.begin(), wh.sectors.end(),
                       [&](const VertexSet& s) { return total - s.size() <= kappa; });
}

bool is_wheel_cut(const Wheel& wh, const VertexSet& x) {
    for (std::size_t i = 0; i < wh.size(); ++i)
        for (std::size_t j = i + 1; j < wh.size(); ++j)
            if (wheel_cut(wh, i, j).cut == x) return true;
    return false;
}

bool crossing_either_way(const Graph& g, const VertexSet& a, const VertexSet& b, std::size_t kappa) {
    if (a == b) return false;
    try {
        return std::holds_alternative<CrossingMatchingRelation>(classify_pair(g, a, b, kappa)) ||
               std::holds_alternative<CrossingMatchingRelation>(classify_pair(g, b, a, kappa));
    } catch (const UnclassifiedRegime&) {
        return false;
    }
}

/// Spokes rotated and possibly reversed into their lexicographically least order.
std::vector<VertexSet> canonical_spokes(const std::vector<VertexSet>& spokes) {
    std::vector<VertexSet> best;
    const std::size_t w = spokes.size();
    for (bool reversed : {false, true})
        for (std::size_t start = 0; start < w; ++start) {
            std::vector<VertexSet> order;
            for (std::size_t k = 0; k < w; ++k)
                order.push_back(reversed ? spokes[(start + w - k) % w] : spokes[(start + k) % w]);
            if (best.empty() || order < best) best = std::move(order);
        }
    return best;
}

Counterexample failure(std::string check, std::string detail, std::vector<VertexSet> cuts) {
    return {std::move(check), std::move(detail), std::move(cuts)};
}

}  // namespace

MinCutSet enumerate_min_cuts(const Graph& g, const OracleLimits& limits) {
    if (!limits.ignore_limits && g.n() > limits.max_n)
        throw OracleLimitExceeded("enumeration limited to " + std::to_string(limits.max_n) + " vertices");
    if (g.n() == 0 || is_complete(g)) return {g.n() == 0 ? 0 : g.n() - 1, {}};
    for (std::size_t k = 0; k + 2 <= g.n(); ++k) {
        if (!limits.ignore_limits && k > limits.max_kappa)
            throw OracleLimitExceeded("enumeration limited to cuts of " + std::to_string(limits.max_kappa) +
                                      " vertices");
        MinCutSet out{k, {}};
        for_each_subset(g.n(), k, [&](const VertexSet& x) {
            if (components_after_removal(g, x).side_count() >= 2) out.cuts.push_back(x);
            return true;
        });
        if (!out.cuts.empty()) return out;
    }
    throw std::logic_error("non-complete graph without a vertex cut");
}

std::vector<std::vector<std::size_t>> pairwise_connectivity_table(const Graph& g) {
    std::vector<std::vector<std::size_t>> table(g.n(), std::vector<std::size_t>(g.n(), 0));
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = u + 1; v < g.n(); ++v) table[u][v] = table[v][u] = mixed_connectivity(g, u, v);
    return table;
}

ClassificationReport check_classification_exhaustive(const Graph& g, const OracleLimits& limits) {
    if (!limits.ignore_limits && g.n() > limits.max_n)
        throw OracleLimitExceeded("classification limited to " + std::to_string(limits.max_n) + " vertices");
    const auto cuts = enumerate_min_cuts(g, limits);
    if (g.n() <= 2 * cuts.kappa) throw PreconditionError("classification needs n > 2 kappa");
    ClassificationReport report;
    for (const auto& u : cuts.cuts)
        for (const auto& w : cuts.cuts) {
            if (u == w) continue;
            ++report.pairs;
            try {
                const auto rel = classify_pair(g, u, w, cuts.kappa);
                if (!verify_relation(g, u, w, cuts.kappa, rel)) {
                    report.failures.push_back(
                        failure("classification", std::string(relation_name(rel)) + " witness does not verify", {u, w}));
                    continue;
                }
                ++report.by_relation[std::string(relation_name(rel))];
            } catch (const std::exception& e) {
                report.failures.push_back(failure("classification", e.what(), {u, w}));
            }
        }
    return report;
}

std::string_view wheel_case_name(WheelCase c) {
    switch (c) {
        case WheelCase::wheel_cut: return "wheel_cut";
        case WheelCase::inside_sector: return "inside_sector";
        case WheelCase::crossing_matching: return "crossing_matching";
        case WheelCase::tiny_sides: return "tiny_sides";
        case WheelCase::small_wheel: return "small_wheel";
        case WheelCase::extends_wheel: return "extends_wheel";
    }
    return "unknown";
}

std::optional<Wheel> extend_wheel(const Graph& g, const Wheel& wh, const VertexSet& x, std::size_t kappa) {
    if (!is_subset(wh.center, x)) return std::nullopt;
    const std::size_t w = wh.size();
    auto with_inserted = [&](std::size_t i, const VertexSet& a, std::optional<std::size_t> j, const VertexSet& b) {
        std::vector<VertexSet> spokes;
        for (std::size_t k = 0; k < w; ++k) {
            spokes.push_back(wh.spokes[k]);
            if (k == i) spokes.push_back(a);
            if (j && k == *j) spokes.push_back(b);
        }
        return verify_wheel(g, wh.center, spokes, kappa);
    };
    for (std::size_t i = 0; i < w; ++i) {
        const auto in_i = set_intersection(x, wh.sectors[i]);
        if (in_i.empty()) continue;
        for (std::size_t j = 0; j < w; ++j) {
            if (j == i) continue;
            const auto in_j = set_intersection(x, wh.sectors[j]);
            if (!in_j.empty() && set_union(wh.center, set_union(in_i, in_j)) == x)
                if (auto bigger = with_inserted(i, in_i, j, in_j)) return bigger;
            if (set_union(wh.center, set_union(in_i, wh.spokes[j])) == x)
                if (auto bigger = with_inserted(i, in_i, std::nullopt, {})) return bigger;
        }
    }
    return std::nullopt;
}

std::optional<WheelCase> check_wheel_interaction(const Graph& g, const Wheel& wh, const VertexSet& x,
                                                 std::size_t kappa) {
    const std::size_t w = wh.size();
    if (is_wheel_cut(wh, x)) return WheelCase::wheel_cut;
    for (std::size_t i = 0; i < w; ++i) {
        const auto [cut, region] = wheel_cut(wh, i, (i + 1) % w);
        if (is_subset(x, set_union(cut, wh.sectors[i]))) return WheelCase::inside_sector;
    }
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t step : {1, 2})
            if (crossing_either_way(g, wheel_cut(wh, i, (i + step) % w).cut, x, kappa))
                return WheelCase::crossing_matching;
    if (has_tiny_sides(g, x, kappa)) return WheelCase::tiny_sides;
    if (is_small_wheel(wh, kappa)) return WheelCase::small_wheel;
    if (extend_wheel(g, wh, x, kappa)) return WheelCase::extends_wheel;
    return std::nullopt;
}

std::vector<Wheel> discover_wheels(const Graph& g, const MinCutSet& cuts) {
    const std::size_t kappa = cuts.kappa;
    std::vector<Wheel> out;
    if (g.n() <= 2 * kappa) return out;
    std::vector<std::vector<VertexSet>> seen;
    for (std::size_t a = 0; a < cuts.cuts.size(); ++a)
        for (std::size_t b = a + 1; b < cuts.cuts.size(); ++b) {
            const auto rel = classify_pair(g, cuts.cuts[a], cuts.cuts[b], kappa);
            const auto* found = std::get_if<WheelRelation>(&rel);
            if (!found) continue;
            Wheel wh = found->wheel;
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& x : cuts.cuts)
                    if (auto bigger = extend_wheel(g, wh, x, kappa)) {
                        wh = std::move(*bigger);
                        grew = true;
                        break;
                    }
            }
            auto spokes = canonical_spokes(wh.spokes);
            if (std::find(seen.begin(), seen.end(), spokes) != seen.end()) continue;
            seen.push_back(spokes);
            if (auto canon = verify_wheel(g, wh.center, spokes, kappa)) out.push_back(std::move(*canon));
        }
    return out;
}

LaminarReport check_laminar_structure(const Graph& g, const MinCutSet& cuts, const VertexSet& u, std::size_t a,
                                      const std::vector<Wheel>& wheels) {
    const std::size_t kappa = cuts.kappa;
    const auto pu = components_after_removal(g, u);
    if (a >= pu.side_count()) throw PreconditionError("side index out of range");
    LaminarReport report;
    if (has_tiny_sides(g, u, kappa)) {
        report.skip_reason = "cut has sides totalling at most kappa - 1 outside its largest";
        return report;
    }
    if (std::any_of(wheels.begin(), wheels.end(), [&](const Wheel& wh) { return is_wheel_cut(wh, u); })) {
        report.skip_reason = "cut belongs to a wheel";
        return report;
    }
    const auto& side = pu.sides()[a];
    if (side.size() <= 2 * kappa) {
        report.skip_reason = "side has at most 2 kappa vertices";
        return report;
    }
    report.checked = true;

    // Laminar cuts of u inside u + side, each with its inner region R(W).
    const auto rest = set_difference(g.vertices(), set_union(u, side));
    struct Laminar {
        VertexSet cut;
        VertexSet inner;
    };
    std::vector<Laminar> laminar;
    for (const auto& w : cuts.cuts) {
        if (w == u || !is_subset(w, set_union(u, side)) || has_tiny_sides(g, w, kappa)) continue;
        const auto pw = components_after_removal(g, w);
        const auto outer = pw.side_containing(rest.front());
        if (!is_subset(set_union(rest, set_difference(u, w)), outer)) {
            report.failures.push_back(failure("laminar", "no side of W holds the rest of the graph", {u, w}));
            continue;
        }
        laminar.push_back({w, set_difference(g.vertices(), set_union(w, outer))});
    }
    report.laminar_cuts = laminar.size();

    const auto theta = theta_star(g, pu, a, kappa);
    report.has_matching_cuts = !theta.empty();
    if (report.has_matching_cuts) {
        VertexSet q;
        for (const auto& p : theta) q = set_union(q, p);
        const auto x = matching_cut(g, pu, a, q, kappa);
        if (!x) {
            report.failures.push_back(failure("laminar", "union of minimal pivot sets has no matching cut", {u}));
            return report;
        }
        const auto inner_region = set_difference(side, *x);
        for (const auto& [w, inner] : laminar) {
            if (is_subset(w, set_union(*x, inner_region))) continue;
            if (matching_cut(g, pu, a, set_difference(u, w), kappa) == w) continue;
            if (crossing_either_way(g, *x, w, kappa)) continue;
            report.failures.push_back(
                failure("laminar", "laminar cut is neither inside X, a matching cut, nor crossing X", {u, *x, w}));
        }
        return report;
    }

    std::vector<const Laminar*> maximal;
    for (const auto& l : laminar) {
        const bool dominated = std::any_of(laminar.begin(), laminar.end(), [&](const Laminar& other) {
            return other.cut != l.cut && is_subset(l.inner, other.inner) && l.inner != other.inner;
        });
        if (!dominated) maximal.push_back(&l);
    }
    report.maximal_cuts = maximal.size();
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (intersects(maximal[i]->inner, maximal[j]->inner))
                report.failures.push_back(
                    failure("laminar", "maximal laminar cuts have overlapping inner regions",
                            {u, maximal[i]->cut, maximal[j]->cut}));
    for (const auto& l : laminar) {
        if (std::find(maximal.begin(), maximal.end(), &l) != maximal.end()) continue;
        const bool nested = std::any_of(maximal.begin(), maximal.end(), [&](const Laminar* m) {
            const auto pm = components_after_removal(g, m->cut);
            for (const auto& s : pm.sides())
                if (is_subset(s, m->inner) && is_subset(l.cut, set_union(m->cut, s))) return true;
            return false;
        });
        if (!nested)
            report.failures.push_back(
                failure("laminar", "laminar cut is not nested in a side of a maximal one", {u, l.cut}));
    }
    return report;
}

SmallReport check_small_uniqueness(const Graph& g, const MinCutSet& cuts, Vertex u) {
    const std::size_t t = balance_threshold(g.n(), cuts.kappa);
    SmallReport report;
    std::vector<std::pair<VertexSet, VertexSet>> candidates;  // (side, cut)
    for (const auto& x : cuts.cuts) {
        if (x.contains(u)) continue;
        auto side = components_after_removal(g, x).side_containing(u);
        if (side.size() <= t) candidates.emplace_back(std::move(side), x);
    }
    report.candidates = candidates.size();
    const auto reference = compute_small_reference(g, u, cuts.kappa);
    if (candidates.empty()) {
        if (reference)
            report.failures.push_back(failure("small", "reference found a cut enumeration did not", {*reference}));
        return report;
    }
    const auto best = std::min_element(candidates.begin(), candidates.end(), [](const auto& l, const auto& r) {
        return l.first.size() < r.first.size();
    });
    report.small = best->second;
    for (const auto& [side, x] : candidates) {
        if (!is_subset(best->first, side))
            report.failures.push_back(failure("small", "smallest side is not inside another qualifying side",
                                              {best->second, x}));
        if (side == best->first && x != best->second)
            report.failures.push_back(failure("small", "two cuts share the smallest side", {best->second, x}));
    }
    if (reference != best->second) {
        std::vector<VertexSet> involved{best->second};
        if (reference) involved.push_back(*reference);
        report.failures.push_back(failure("small", "reference disagrees with enumeration", std::move(involved)));
    }
    return report;
}

std::vector<NamedGraph> desk_corpus(std::uint64_t seed, std::size_t random_count, std::size_t min_n,
                                    std::size_t max_n) {
    if (min_n < 2 || max_n < min_n) throw PreconditionError("corpus size range is empty");
    std::vector<NamedGraph> out{
        {"cycle8", gen::cycle(8)},
        {"cycle11", gen::cycle(11)},
        {"petersen", gen::petersen()},
        {"ladder4", gen::ladder(4)},
        {"ladder6", gen::ladder(6)},
        {"ladder7", gen::ladder(7)},
        {"barbell4x2", gen::barbell(4, 2)},
        {"barbell5x3", gen::barbell(5, 3)},
        {"k5_plus_two", gen::k5_plus_two(false)},
        {"k5_plus_two_joined", gen::k5_plus_two(true)},
        {"clique_chain3x4x2", gen::clique_chain(3, 4, 2)},
        {"clique_chain4x3x1", gen::clique_chain(4, 3, 1)},
        {"blob_ring4x2", gen::blob_ring(4, 2)},
        {"wheel5", gen::wheel_graph(5, 1, 1, 1)},
        {"k3x4", gen::complete_bipartite(3, 4)},
    };
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        const std::size_t n = min_n + rng() % (max_n - min_n + 1);
        const double p = 0.1 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
        out.push_back({"random" + std::to_string(i) + "_n" + std::to_string(n), gen::random_connected(n, p, rng)});
    }
    return out;
}

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::classification, Suite::wheels, Suite::laminar, Suite::small, Suite::index})
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    switch (s) {
        case Suite::classification: return "classification";
        case Suite::wheels: return "wheels";
        case Suite::laminar: return "laminar";
        case Suite::small: return "small";
        case Suite::index: return "index";
    }
    return "unknown";
}

std::optional<std::string> check_query(const Graph& g, const SmallCutIndex& ix, Vertex u, Vertex v,
                                       std::size_t mixed) {
    const auto answer = query(ix, u, v);
    const std::size_t want = std::min(mixed, ix.kappa + 1);
    if (std::holds_alternative<AtLeastKappaPlus1>(answer.verdict)) {
        if (want == ix.kappa + 1) return std::nullopt;
        return "reported at least kappa + 1 for a separable pair";
    }
    if (want != ix.kappa) return "reported a cut for a pair with more than kappa disjoint paths";
    if (const auto* s = std::get_if<Separated>(&answer.verdict)) {
        if (s->cut.size() != ix.kappa || s->cut.contains(u) || s->cut.contains(v)) return "malformed vertex cut";
        const auto parts = components_after_removal(g, s->cut);
        if (parts.side_of(u) == parts.side_of(v)) return "vertex cut does not separate the pair";
        return std::nullopt;
    }
    const auto& m = std::get<MixedSeparated>(answer.verdict);
    if (m.vertices.size() + 1 != ix.kappa || !g.has_edge(u, v)) return "malformed mixed cut";
    std::vector<Edge> kept;
    for (auto e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)}) kept.push_back(e);
    const auto parts = components_after_removal(Graph(g.n(), kept), m.vertices);
    if (parts.side_of(u) == parts.side_of(v)) return "mixed cut does not separate the pair";
    return std::nullopt;
}

SuiteReport run_suite(Suite s, std::uint64_t seed) {
    SuiteReport report;
    report.suite = s;
    const bool exhaustive = s != Suite::index;
    const auto corpus = exhaustive ? desk_corpus(seed, 30, 8, 14) : desk_corpus(seed, 30, 8, 30);
    auto fail = [&](const std::string& graph, Counterexample c) { report.failures.emplace_back(graph, std::move(c)); };

    for (const auto& [name, g] : corpus) {
        if (exhaustive && (g.n() > 14 || vertex_connectivity(g).kappa > 5)) {
            ++report.skipped;
            continue;
        }
        ++report.graphs;
        if (s == Suite::index) {
            const auto exact = build_index(g, BuildMode::exact);
            const auto table = pairwise_connectivity_table(g);
            for (Vertex u = 0; u < g.n(); ++u)
                for (Vertex v = 0; v < g.n(); ++v) {
                    if (u == v) continue;
                    ++report.checks;
                    ++report.tally[std::string(case_name(query(exact, u, v).decided_by))];
                    if (auto why = check_query(g, exact, u, v, table[u][v]))
                        fail(name, {"query", *why + " at " + std::to_string(u) + "," + std::to_string(v), {}});
                }
            ++report.checks;
            if (build_index(g, BuildMode::randomized, seed) != exact)
                fail(name, {"randomized", "randomized build differs from exact build, seed " + std::to_string(seed), {}});
            continue;
        }

        const auto cuts = enumerate_min_cuts(g, {14, 5, false});
        switch (s) {
            case Suite::classification: {
                if (g.n() <= 2 * cuts.kappa) {
                    ++report.skipped;
                    break;
                }
                auto r = check_classification_exhaustive(g);
                report.checks += r.pairs;
                for (const auto& [kind, count] : r.by_relation) report.tally[kind] += count;
                for (auto& c : r.failures) fail(name, std::move(c));
                break;
            }
            case Suite::wheels: {
                for (const auto& wh : discover_wheels(g, cuts)) {
                    ++report.tally["wheels"];
                    if (auto why = check_wheel_laws(g, wh, cuts.kappa)) fail(name, {"wheel_laws", *why, wh.spokes});
                    for (const auto& x : cuts.cuts) {
                        ++report.checks;
                        if (auto c = check_wheel_interaction(g, wh, x, cuts.kappa))
                            ++report.tally[std::string(wheel_case_name(*c))];
                        else
                            fail(name, {"wheel_interaction", "no case applies", {x}});
                    }
                }
                break;
            }
            case Suite::laminar: {
                const auto wheels = discover_wheels(g, cuts);
                for (const auto& u : cuts.cuts) {
                    const auto parts = components_after_removal(g, u);
                    for (std::size_t a = 0; a < parts.side_count(); ++a) {
                        auto r = check_laminar_structure(g, cuts, u, a, wheels);
                        if (!r.checked) {
                            ++report.skipped;
                            continue;
                        }
                        ++report.checks;
                        ++report.tally[r.has_matching_cuts ? "with_matching_cuts" : "without_matching_cuts"];
                        for (auto& c : r.failures) fail(name, std::move(c));
                    }
                }
                break;
            }
            case Suite::small: {
                for (Vertex u = 0; u < g.n(); ++u) {
                    auto r = check_small_uniqueness(g, cuts, u);
                    ++report.checks;
                    ++report.tally[r.small ? "has_small_cut" : "no_small_cut"];
                    for (auto& c : r.failures) fail(name, std::move(c));
                }
                break;
            }
            case Suite::index: break;
        }
    }
    return report;
}

}  // namespace vcut
