#include "vcut/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "vcut/errors.hpp"
#include "vcut/flow.hpp"

namespace vcut {

namespace {

bool is_kappa_cut(const Graph& g, const VertexSet& c, std::size_t kappa) {
    return c.size() == kappa && c.size() < g.n() && is_cut(g, c);
}

VertexSet others_than(const SidePartition& p, std::size_t keep) {
    VertexSet out;
    for (std::size_t i = 0; i < p.side_count(); ++i)
        if (i != keep) out = set_union(out, p.sides()[i]);
    return out;
}

/// Index of the side holding all of `probe`, or nullopt if there is none.
std::optional<std::size_t> single_side(const SidePartition& p, const VertexSet& probe) {
    std::optional<std::size_t> found;
    for (Vertex v : probe) {
        auto s = p.side_of(v);
        if (!s || (found && *found != *s)) return std::nullopt;
        found = s;
    }
    return found;
}

bool laminar_holds(const SidePartition& pu, const SidePartition& pw, const LaminarRelation& r) {
    const auto& u = pu.cut();
    const auto& w = pw.cut();
    if (r.host_side >= pu.side_count() || r.guest_side >= pw.side_count()) return false;
    for (std::size_t i = 0; i < pu.side_count(); ++i)
        if (intersects(w, pu.sides()[i]) != (i == r.host_side)) return false;
    const auto& host = pu.sides()[r.host_side];
    const auto& guest = pw.sides()[r.guest_side];
    return set_difference(guest, host) == set_union(set_difference(u, w), others_than(pu, r.host_side)) &&
           set_difference(host, guest) == set_union(set_difference(w, u), others_than(pw, r.guest_side));
}

bool small_holds(const SidePartition& pu, const SidePartition& pw, std::size_t kappa, const SmallRelation& r) {
    const auto& small = r.first_is_small ? pu : pw;
    const auto& other = r.first_is_small ? pw : pu;
    if (r.large_side >= small.side_count()) return false;
    const auto rest = others_than(small, r.large_side);
    return rest.size() + 1 <= kappa && rest == r.small_part && is_subset(rest, other.cut());
}

/// Quadrant names for two two-sided cuts, with the sides picked by index.
struct Quadrants {
    VertexSet a1, a2, b1, b2;
    VertexSet t, u1, u2, w1, w2;
};

Quadrants quadrants(const SidePartition& pu, const SidePartition& pw, std::size_t first, std::size_t second) {
    Quadrants q;
    q.a1 = pu.sides()[first];
    q.a2 = pu.sides()[1 - first];
    q.b1 = pw.sides()[second];
    q.b2 = pw.sides()[1 - second];
    q.t = set_intersection(pu.cut(), pw.cut());
    q.u1 = set_intersection(pu.cut(), q.b1);
    q.u2 = set_intersection(pu.cut(), q.b2);
    q.w1 = set_intersection(pw.cut(), q.a1);
    q.w2 = set_intersection(pw.cut(), q.a2);
    return q;
}

bool wheel_holds(const Graph& g, const SidePartition& pu, const SidePartition& pw, std::size_t kappa,
                 const WheelRelation& r) {
    if (pu.side_count() != 2 || pw.side_count() != 2) return false;
    const auto q = quadrants(pu, pw, 0, 0);
    if (q.u1.empty() || q.u2.empty() || q.w1.empty() || q.w2.empty()) return false;
    const auto wheel = verify_wheel(g, q.t, {q.u1, q.w1, q.u2, q.w2}, kappa);
    if (!wheel || *wheel != r.wheel) return false;
    return wheel->sectors == std::vector<VertexSet>{set_intersection(q.a1, q.b1), set_intersection(q.a1, q.b2),
                                                    set_intersection(q.a2, q.b2), set_intersection(q.a2, q.b1)};
}

bool crossing_holds(const Graph& g, const SidePartition& pu, const SidePartition& pw, std::size_t kappa,
                    const CrossingMatchingRelation& r) {
    if (pu.side_count() != 2 || pw.side_count() != 2 || r.first_side > 1 || r.second_side > 1) return false;
    const auto q = quadrants(pu, pw, r.first_side, r.second_side);
    if (set_intersection(q.a1, q.b1).empty() || set_intersection(q.a2, q.b2).empty()) return false;
    if (intersects(q.a1, q.b2)) return false;
    if (q.u1.empty() || q.u2.empty() || q.w2.size() != q.u1.size() || q.w1.size() != q.u2.size()) return false;
    if (r.pivot != q.u2 || r.matched != q.w1) return false;
    if (!is_crossing_matching(g, pu, r.first_side, pw.cut(), q.u2, kappa)) return false;
    if (intersects(q.a2, q.b1) && q.u1.size() < q.u2.size()) return false;
    return true;
}

}  // namespace

WheelCut wheel_cut(const Wheel& wh, std::size_t i, std::size_t j) {
    const std::size_t w = wh.size();
    if (i >= w || j >= w || i == j) throw PreconditionError("wheel cut needs two distinct spoke indices");
    WheelCut out{set_union(wh.center, set_union(wh.spokes[i], wh.spokes[j])), wh.sectors[i]};
    for (std::size_t k = (i + 1) % w; k != j; k = (k + 1) % w)
        out.region = set_union(out.region, set_union(wh.spokes[k], wh.sectors[k]));
    return out;
}

std::optional<Wheel> verify_wheel(const Graph& g, const VertexSet& center, const std::vector<VertexSet>& spokes,
                                  std::size_t kappa) {
    const std::size_t w = spokes.size();
    if (w < 4) throw PreconditionError("a wheel needs at least four spokes");
    VertexSet used = center;
    for (const auto& c : spokes) {
        if (c.empty() || intersects(c, used)) return std::nullopt;
        used = set_union(used, c);
    }

    Wheel wh{center, spokes, {}};
    for (std::size_t i = 0; i < w; ++i) {
        const std::size_t next = (i + 1) % w;
        const auto cut = set_union(center, set_union(spokes[i], spokes[next]));
        if (cut.size() >= g.n()) return std::nullopt;
        const auto parts = components_after_removal(g, cut);
        const auto far_spokes = set_difference(used, cut);
        VertexSet sector;
        for (const auto& side : parts.sides())
            if (!intersects(side, far_spokes)) sector = set_union(sector, side);
        if (sector.empty() || intersects(sector, used)) return std::nullopt;
        used = set_union(used, sector);
        wh.sectors.push_back(std::move(sector));
    }
    if (used.size() != g.n()) return std::nullopt;

    for (std::size_t i = 0; i < w; ++i) {
        const auto [cut, region] = wheel_cut(wh, i, (i + 2) % w);
        if (!is_kappa_cut(g, cut, kappa)) return std::nullopt;
        if (region_of(components_after_removal(g, cut), region) != region) return std::nullopt;
    }
    return wh;
}

std::optional<std::string> check_wheel_laws(const Graph& g, const Wheel& wh, std::size_t kappa) {
    const std::size_t w = wh.size();
    if (wh.center.size() > kappa || (kappa - wh.center.size()) % 2 != 0)
        return "kappa - |T| is not a non-negative even number";
    const std::size_t spoke = (kappa - wh.center.size()) / 2;
    for (std::size_t i = 0; i < w; ++i)
        if (wh.spokes[i].size() != spoke) return "spoke " + std::to_string(i) + " has the wrong size";
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
            if (i == j) continue;
            const auto [cut, region] = wheel_cut(wh, i, j);
            const std::string name = "C(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (!is_kappa_cut(g, cut, kappa)) return name + " is not a kappa-cut";
            const auto parts = components_after_removal(g, cut);
            if (region_of(parts, region) != region) return name + " does not cut off D(i,j)";
            const std::size_t gap = (j + w - i) % w;
            if (gap != 1 && gap != w - 1) {
                const auto other = wheel_cut(wh, j, i).region;
                if (parts.side_count() != 2 || !single_side(parts, region) || !single_side(parts, other))
                    return name + " does not have exactly the two sides D(i,j), D(j,i)";
            }
        }
    return std::nullopt;
}

std::optional<std::size_t> small_cut_large_side(const SidePartition& p, std::size_t t) {
    const auto& sides = p.sides();
    if (sides.empty()) return std::nullopt;
    const std::size_t total = std::accumulate(sides.begin(), sides.end(), std::size_t{0},
                                              [](std::size_t acc, const VertexSet& s) { return acc + s.size(); });
    const auto largest = static_cast<std::size_t>(
        std::max_element(sides.begin(), sides.end(),
                         [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); }) -
        sides.begin());
    if (total - sides[largest].size() <= t) return largest;
    return std::nullopt;
}

std::string_view relation_name(const CutRelation& r) {
    constexpr std::string_view names[] = {"laminar", "wheel", "crossing_matching", "small"};
    return names[r.index()];
}

CutRelation classify_pair(const Graph& g, const VertexSet& u, const VertexSet& w, std::size_t kappa) {
    if (!is_kappa_cut(g, u, kappa) || !is_kappa_cut(g, w, kappa))
        throw PreconditionError("classify_pair needs two kappa-cuts");
    if (u == w) throw PreconditionError("classify_pair needs two distinct cuts");
    if (g.n() <= 2 * kappa) throw UnclassifiedRegime();
    const auto pu = components_after_removal(g, u);
    const auto pw = components_after_removal(g, w);

    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < pu.side_count(); ++i)
        if (intersects(w, pu.sides()[i])) touched.push_back(i);
    if (touched.size() == 1) {
        // U \ W is nonempty since the cuts differ and have equal size.
        const LaminarRelation lam{touched.front(), *pw.side_of(set_difference(u, w).front())};
        if (laminar_holds(pu, pw, lam)) return lam;
    }

    for (bool first : {true, false}) {
        const auto& p = first ? pu : pw;
        if (kappa == 0) break;
        if (auto large = small_cut_large_side(p, kappa - 1)) {
            SmallRelation rel{first, *large, others_than(p, *large)};
            if (small_holds(pu, pw, kappa, rel)) return rel;
        }
    }

    if (pu.side_count() == 2 && pw.side_count() == 2) {
        const auto q = quadrants(pu, pw, 0, 0);
        if (!q.u1.empty() && !q.u2.empty() && !q.w1.empty() && !q.w2.empty()) {
            if (auto wheel = verify_wheel(g, q.t, {q.u1, q.w1, q.u2, q.w2}, kappa)) {
                WheelRelation rel{std::move(*wheel)};
                if (wheel_holds(g, pu, pw, kappa, rel)) return rel;
            }
        }
        for (std::size_t first = 0; first < 2; ++first)
            for (std::size_t second = 0; second < 2; ++second) {
                const auto qq = quadrants(pu, pw, first, second);
                CrossingMatchingRelation rel{first, second, qq.u2, qq.w1};
                if (crossing_holds(g, pu, pw, kappa, rel)) return rel;
            }
    }
    throw std::logic_error("cut pair " + to_string(u) + " / " + to_string(w) + " fits no relation");
}

bool verify_relation(const Graph& g, const VertexSet& u, const VertexSet& w, std::size_t kappa,
                     const CutRelation& r) {
    if (!is_kappa_cut(g, u, kappa) || !is_kappa_cut(g, w, kappa) || u == w) return false;
    const auto pu = components_after_removal(g, u);
    const auto pw = components_after_removal(g, w);
    return std::visit(
        [&](const auto& rel) {
            using T = std::decay_t<decltype(rel)>;
            if constexpr (std::is_same_v<T, LaminarRelation>) return laminar_holds(pu, pw, rel);
            else if constexpr (std::is_same_v<T, SmallRelation>) return small_holds(pu, pw, kappa, rel);
            else if constexpr (std::is_same_v<T, WheelRelation>) return wheel_holds(g, pu, pw, kappa, rel);
            else return crossing_holds(g, pu, pw, kappa, rel);
        },
        r);
}

std::optional<std::vector<Edge>> perfect_matching(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (left.size() != right.size()) return std::nullopt;
    std::vector<std::int64_t> owner(right.size(), -1);  // right index -> left index
    auto right_index = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(right.begin(), right.end(), v) - right.begin());
    };
    std::vector<char> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t l) {
        for (Vertex v : g.neighbors(left[l])) {
            if (!right.contains(v)) continue;
            const auto r = right_index(v);
            if (seen[r]) continue;
            seen[r] = 1;
            if (owner[r] < 0 || augment(static_cast<std::size_t>(owner[r]))) {
                owner[r] = static_cast<std::int64_t>(l);
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < left.size(); ++l) {
        seen.assign(right.size(), 0);
        if (!augment(l)) return std::nullopt;
    }
    std::vector<Edge> out;
    for (std::size_t r = 0; r < right.size(); ++r) out.emplace_back(left[owner[r]], right[r]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<VertexSet> matching_cut(const Graph& g, const SidePartition& u, std::size_t a, const VertexSet& p,
                                      std::size_t kappa) {
    if (p.empty() || !is_subset(p, u.cut())) throw PreconditionError("pivot set must be a nonempty subset of the cut");
    if (a >= u.side_count()) throw PreconditionError("side index out of range");
    const auto& side = u.sides()[a];
    const auto matched = neighborhood_in(g, p, side);
    if (matched.size() != p.size() || matched.size() >= side.size()) return std::nullopt;
    auto w = set_union(set_difference(u.cut(), p), matched);
    if (w.size() != kappa) return std::nullopt;
    const auto parts = components_after_removal(g, w);
    const auto inner = region_of(parts, set_difference(side, matched));
    if (intersects(inner, p) || intersects(inner, others_than(u, a))) return std::nullopt;
    return w;
}

std::vector<VertexSet> theta_star(const Graph& g, const SidePartition& u, std::size_t a, std::size_t kappa) {
    if (a >= u.side_count()) throw PreconditionError("side index out of range");
    const auto& side = u.sides()[a];
    const auto rest = others_than(u, a);
    std::vector<VertexSet> out;
    for (Vertex x : u.cut()) {
        // Every pivot set containing x yields a candidate here, and the
        // smallest one is produced by any y left outside its matching cut.
        std::optional<VertexSet> smallest;
        const auto sources = set_union(rest, {x});
        for (Vertex y : side) {
            if (g.has_edge(x, y)) continue;
            const auto found = min_vertex_cut(g, sources, {y});
            if (found.value != kappa) continue;
            const auto pivot = set_difference(u.cut(), found.cut);
            if (matching_cut(g, u, a, pivot, kappa) != found.cut) continue;
            smallest = smallest ? set_intersection(*smallest, pivot) : pivot;
        }
        if (smallest) out.push_back(std::move(*smallest));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

VertexSet min_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a, const VertexSet& p,
                                std::size_t kappa) {
    if (u.side_count() != 2) throw PreconditionError("crossing matching cuts need a two-sided cut");
    if (!matching_cut(g, u, a, p, kappa)) throw PreconditionError("pivot set has no matching cut");
    const auto matched = neighborhood_in(g, p, u.sides()[a]);
    return minimal_cut_toward(g, p, set_difference(u.sides()[a], matched));
}

bool is_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a, const VertexSet& w,
                          const VertexSet& p, std::size_t kappa) {
    if (u.side_count() != 2 || a > 1 || p.empty() || !is_subset(p, u.cut())) return false;
    if (!is_kappa_cut(g, w, kappa) || !intersects(w, u.sides()[1 - a])) return false;
    const auto& side = u.sides()[a];
    const auto inner = set_union(set_difference(u.cut(), p), set_intersection(w, side));
    if (matching_cut(g, u, a, p, kappa) != inner || intersects(w, p)) return false;
    // The pivot must sit on the far side of w from the rest of A; without
    // this a cut through B could split the pivot itself.
    const auto parts = components_after_removal(g, w);
    return !intersects(region_of(parts, p), set_difference(side, w));
}

VertexSet reduce_crossing_matching(const Graph& g, const SidePartition& u, std::size_t a, const VertexSet& w,
                                   const VertexSet& q, const VertexSet& p, std::size_t kappa) {
    if (p.empty() || !is_subset(p, q)) throw PreconditionError("reduction needs a nonempty P inside Q");
    if (!is_crossing_matching(g, u, a, w, q, kappa))
        throw PreconditionError("w is not a crossing matching cut w.r.t. q");
    if (!matching_cut(g, u, a, p, kappa)) throw PreconditionError("P has no matching cut");
    const auto& side = u.sides()[a];
    auto out = set_union(set_union(set_difference(w, neighborhood_in(g, q, side)), set_difference(q, p)),
                         neighborhood_in(g, p, side));
    if (!is_kappa_cut(g, out, kappa)) throw std::logic_error("reduced crossing matching set is not a kappa-cut");
    return out;
}

}  // namespace vcut
