#include "vcut/index.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"
#include "vcut/errors.hpp"
#include "vcut/flow.hpp"
#include "vcut/sparsify.hpp"

namespace vcut {

namespace {

constexpr int kFormatVersion = 1;

/// True when u cannot reach v once `removed` and the edge uv are gone.
bool separated_without_edge(const Graph& g, Vertex u, Vertex v, const VertexSet& removed) {
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> stack{u};
    seen[u] = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
            if (seen[y] || removed.contains(y)) continue;
            if (x == u && y == v) continue;
            if (y == v) return false;
            seen[y] = 1;
            stack.push_back(y);
        }
    }
    return true;
}

SmallRecord make_record(const Graph& g, Vertex u, const std::optional<SmallCut>& found, std::size_t kappa) {
    SmallRecord rec;
    if (!found) {
        rec.side_size = g.n();
        rec.side_id = {0, cut_digest({})};
        return rec;
    }
    rec.small = found->cut;
    rec.side_size = found->side.size();
    rec.side_id = {found->side.front(), cut_digest(found->cut)};
    for (Vertex v : found->cut) {
        if (!g.has_edge(u, v)) continue;
        auto rest = set_difference(found->cut, {v});
        rec.adjacent_bits.emplace_back(v, separated_without_edge(g, u, v, rest));
    }
    if (rec.side_size + 1 <= kappa) rec.tiny_side = found->side;
    return rec;
}

SmallCut with_side(const Graph& g, Vertex u, VertexSet cut) {
    auto side = components_after_removal(g, cut).side_containing(u);
    return {std::move(cut), std::move(side)};
}

/// The per-vertex best cut T(u) of the randomized construction.
class BestCuts {
public:
    BestCuts(std::size_t n, std::size_t t) : t_(t), best_(n) {}

    /// Keeps `c` for u when its side is at most t and strictly smaller than
    /// the side currently held.
    void offer(Vertex u, const SmallCut& c) {
        const std::size_t current = best_[u] ? best_[u]->side.size() : best_.size();
        if (c.side.size() <= t_ && c.side.size() < current) best_[u] = c;
    }
    void offer_all(const VertexSet& members, const SmallCut& c) {
        for (Vertex v : members) offer(v, c);
    }
    [[nodiscard]] const std::optional<SmallCut>& at(Vertex u) const { return best_[u]; }

private:
    std::size_t t_;
    std::vector<std::optional<SmallCut>> best_;
};

class RandomizedBuild {
public:
    RandomizedBuild(const Graph& g, std::size_t kappa, std::uint64_t seed, const BuildOptions& opt)
        : g_(g), kappa_(kappa), t_(balance_threshold(g.n(), kappa)), opt_(opt), rng_(seed), best_(g.n(), t_) {}

    std::vector<std::optional<SmallCut>> run() {
        very_small_cuts();
        unbalanced_cuts();
        balanced_cuts();
        std::vector<std::optional<SmallCut>> out;
        for (Vertex u = 0; u < g_.n(); ++u) out.push_back(best_.at(u));
        return out;
    }

private:
    std::size_t first_scale() const { return std::min(opt_.small_scale_factor * kappa_, t_); }

    void search_and_offer(Vertex v, std::size_t bound) {
        if (auto c = find_small(g_, v, bound, kappa_, rng_, opt_.search)) best_.offer(v, *c);
    }

    void offer_bulk(const VertexSet& c, const VertexSet& d, const VertexSet& targets) {
        const auto cuts = bulk_small_cuts(g_, c, d, kappa_);
        for (Vertex v : targets)
            if (cuts[v]) best_.offer(v, with_side(g_, v, *cuts[v]));
    }

    void very_small_cuts() {
        const std::size_t bound = first_scale();
        if (bound == 0) return;
        for (Vertex u = 0; u < g_.n(); ++u) search_and_offer(u, bound);
    }

    void unbalanced_cuts() {
        const double n = static_cast<double>(g_.n());
        std::vector<Vertex> all(g_.n());
        std::iota(all.begin(), all.end(), Vertex{0});
        for (std::size_t alpha = 1; alpha <= t_; alpha *= 2) {
            if (alpha <= opt_.small_scale_factor * kappa_) continue;
            const auto want = static_cast<std::size_t>(std::ceil(n * std::log(n) / static_cast<double>(alpha)));
            std::vector<Vertex> sample;
            std::sample(all.begin(), all.end(), std::back_inserter(sample), std::min(want, all.size()), rng_);
            for (Vertex u : sample) grow_from(u, alpha);
        }
    }

    void grow_from(Vertex u, std::size_t alpha) {
        const auto found = find_small(g_, u, alpha, kappa_, rng_, opt_.search);
        if (!found) return;
        best_.offer_all(found->side, *found);
        for (Vertex v : found->cut) search_and_offer(v, alpha);
        const SmallCut grown = expand(g_, u, *found, alpha, kappa_, rng_, opt_.search);
        for (Vertex w : grown.cut) search_and_offer(w, alpha);
        if (grown.side == found->side) return;
        const auto far = set_difference(g_.vertices(), set_union(grown.cut, grown.side));
        offer_bulk(found->side, far, set_difference(grown.side, found->side));
    }

    void balanced_cuts() {
        if (g_.n() < 2 || t_ == 0) return;
        const auto pairs = static_cast<std::size_t>(
            std::ceil(opt_.pair_factor * std::log(static_cast<double>(g_.n()))));
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g_.n() - 1));
        for (std::size_t i = 0; i < pairs; ++i) {
            const Vertex x = pick(rng_);
            const Vertex y = pick(rng_);
            const auto found = find_small(g_, x, t_, kappa_, rng_, opt_.search);
            if (!found || found->side.contains(y) || found->cut.contains(y)) continue;
            const VertexSet sink{y};
            offer_bulk(found->side, sink, set_difference(g_.vertices(), set_union(found->side, sink)));
        }
    }

    const Graph& g_;
    std::size_t kappa_;
    std::size_t t_;
    BuildOptions opt_;
    std::mt19937_64 rng_;
    BestCuts best_;
};

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
    if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw CorruptIndex("side digest is not 16 lowercase hex digits");
    return std::stoull(s, nullptr, 16);
}

VertexSet read_set(const nlohmann::json& j, std::size_t n, const char* what) {
    auto ids = j.get<std::vector<Vertex>>();
    for (Vertex v : ids)
        if (v >= n) throw CorruptIndex(std::string(what) + " names a vertex out of range");
    if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw CorruptIndex(std::string(what) + " is not strictly increasing");
    return VertexSet::from_sorted(std::move(ids));
}

void check_record(const SmallCutIndex& ix, Vertex u, const SmallRecord& r) {
    auto fail = [u](const std::string& why) { throw CorruptIndex("record " + std::to_string(u) + ": " + why); };
    if (!r.small) {
        if (r.side_size != ix.n) fail("absent cut must have side size n");
        if (!r.adjacent_bits.empty() || r.tiny_side) fail("absent cut carries extra data");
        if (r.side_id != SideId{0, cut_digest({})}) fail("absent cut has a side id");
        return;
    }
    if (r.small->size() != ix.kappa) fail("cut size differs from kappa");
    if (r.small->contains(u)) fail("vertex lies in its own cut");
    if (r.side_size == 0 || r.side_size > ix.t) fail("side size outside [1, t]");
    if (r.side_id.digest != cut_digest(*r.small)) fail("side digest does not match the cut");
    if (r.side_id.anchor >= ix.n || r.small->contains(r.side_id.anchor) || r.side_id.anchor > u)
        fail("side anchor is inconsistent");
    for (std::size_t i = 0; i < r.adjacent_bits.size(); ++i) {
        if (!r.small->contains(r.adjacent_bits[i].first)) fail("bit for a vertex outside the cut");
        if (i > 0 && r.adjacent_bits[i - 1].first >= r.adjacent_bits[i].first) fail("bits are not sorted");
    }
    const bool want_tiny = r.side_size + 1 <= ix.kappa;
    if (want_tiny != r.tiny_side.has_value()) fail("tiny side presence disagrees with side size");
    if (r.tiny_side &&
        (r.tiny_side->size() != r.side_size || !r.tiny_side->contains(u) || r.tiny_side->front() != r.side_id.anchor ||
         intersects(*r.tiny_side, *r.small)))
        fail("tiny side is inconsistent");
}

}  // namespace

std::uint64_t cut_digest(const VertexSet& cut) {
    std::uint64_t h = 14695981039346656037ULL;
    for (Vertex v : cut) {
        for (int b = 0; b < 4; ++b) {
            h ^= (v >> (8 * b)) & 0xFFU;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

std::optional<bool> SmallRecord::bit(Vertex v) const {
    auto it = std::lower_bound(adjacent_bits.begin(), adjacent_bits.end(), v,
                               [](const auto& p, Vertex x) { return p.first < x; });
    if (it == adjacent_bits.end() || it->first != v) return std::nullopt;
    return it->second;
}

std::size_t entry_count(const SmallCutIndex& ix) {
    std::size_t total = 0;
    for (const auto& r : ix.records) {
        total += 3 + r.adjacent_bits.size();
        if (r.small) total += r.small->size();
        if (r.tiny_side) total += r.tiny_side->size();
    }
    return total;
}

std::optional<VertexSet> compute_small_reference(const Graph& g, Vertex u, std::size_t kappa) {
    const std::size_t t = balance_threshold(g.n(), kappa);
    if (t == 0) return std::nullopt;
    auto found = find_small_reference(g, u, t, kappa);
    if (!found) return std::nullopt;
    return std::move(found->cut);
}

SmallCutIndex build_index(const Graph& g, BuildMode mode, std::uint64_t seed, const BuildOptions& opt) {
    if (g.n() < 2) throw GraphError("index needs at least two vertices");
    if (!is_connected(g)) throw GraphError("graph is disconnected");
    const std::size_t kappa = vertex_connectivity(g).kappa;
    const Graph sparse = nagamochi_ibaraki(g, kappa + 1);

    SmallCutIndex ix;
    ix.n = g.n();
    ix.kappa = kappa;
    ix.t = balance_threshold(g.n(), kappa);

    std::vector<std::optional<SmallCut>> cuts(g.n());
    if (mode == BuildMode::exact) {
        for (Vertex u = 0; u < g.n(); ++u)
            if (auto c = compute_small_reference(sparse, u, kappa)) cuts[u] = with_side(sparse, u, std::move(*c));
    } else {
        cuts = RandomizedBuild(sparse, kappa, seed, opt).run();
    }
    for (Vertex u = 0; u < g.n(); ++u) ix.records.push_back(make_record(sparse, u, cuts[u], kappa));
    return ix;
}

QueryResult query(const SmallCutIndex& ix, Vertex u, Vertex v) {
    if (u == v) throw PreconditionError("query needs two distinct vertices");
    if (u >= ix.n || v >= ix.n) throw PreconditionError("query vertex out of range");
    const SmallRecord& ru = ix.records[u];
    const SmallRecord& rv = ix.records[v];

    if (ru.side_id == rv.side_id && ru.side_size == rv.side_size)
        return {AtLeastKappaPlus1{}, QueryCase::same_side};

    if (!ru.holds(v) && !rv.holds(u)) {
        const SmallRecord& smaller = ru.side_size <= rv.side_size ? ru : rv;
        return {Separated{*smaller.small}, QueryCase::outside_both};
    }

    const auto bit_uv = ru.bit(v);
    const auto bit_vu = rv.bit(u);
    if (bit_uv || bit_vu) {
        if (bit_uv.value_or(false))
            return {MixedSeparated{{u, v}, set_difference(*ru.small, {v})}, QueryCase::adjacent_member};
        if (bit_vu.value_or(false))
            return {MixedSeparated{{v, u}, set_difference(*rv.small, {u})}, QueryCase::adjacent_member};
        return {AtLeastKappaPlus1{}, QueryCase::adjacent_member};
    }

    if (ru.holds(v) && rv.holds(u)) return {AtLeastKappaPlus1{}, QueryCase::mutual_members};

    // Exactly one of them lies in the other's cut: `inner` is in the cut of
    // `holder`, and only the outsider's own cut can separate the pair.
    const Vertex outsider = ru.holds(v) ? v : u;
    const Vertex inner = outsider == v ? u : v;
    const SmallRecord& own = ix.records[outsider];
    const SmallRecord& holder = ix.records[inner];
    if (!own.small) return {AtLeastKappaPlus1{}, QueryCase::one_sided_member};
    if (own.tiny_side) {
        if (own.tiny_side->contains(inner)) return {AtLeastKappaPlus1{}, QueryCase::one_sided_member};
        return {Separated{*own.small}, QueryCase::one_sided_member};
    }
    if (own.side_size <= holder.side_size) return {Separated{*own.small}, QueryCase::one_sided_member};
    return {AtLeastKappaPlus1{}, QueryCase::one_sided_member};
}

std::string_view case_name(QueryCase c) {
    switch (c) {
        case QueryCase::same_side: return "same_side";
        case QueryCase::outside_both: return "outside_both";
        case QueryCase::adjacent_member: return "adjacent_member";
        case QueryCase::mutual_members: return "mutual_members";
        case QueryCase::one_sided_member: return "one_sided_member";
    }
    return "unknown";
}

std::string serialize(const SmallCutIndex& ix) {
    using nlohmann::json;
    json records = json::array();
    for (const auto& r : ix.records) {
        json jr;
        jr["small"] = r.small ? json(r.small->vec()) : json(nullptr);
        jr["side_size"] = r.side_size;
        jr["anchor"] = r.side_id.anchor;
        jr["digest"] = hex64(r.side_id.digest);
        json bits = json::array();
        for (auto [v, b] : r.adjacent_bits) bits.push_back({v, b});
        jr["bits"] = std::move(bits);
        if (r.tiny_side) jr["tiny"] = r.tiny_side->vec();
        records.push_back(std::move(jr));
    }
    json out{{"version", kFormatVersion}, {"n", ix.n},   {"kappa", ix.kappa},
             {"t", ix.t},                 {"labels", ix.labels}, {"records", std::move(records)}};
    return out.dump();
}

SmallCutIndex deserialize(std::string_view text) {
    using nlohmann::json;
    SmallCutIndex ix;
    try {
        const json j = json::parse(text);
        if (!j.is_object()) throw CorruptIndex("index is not a JSON object");
        if (j.at("version").get<int>() != kFormatVersion) throw CorruptIndex("unsupported index version");
        ix.n = j.at("n").get<std::size_t>();
        ix.kappa = j.at("kappa").get<std::size_t>();
        ix.t = j.at("t").get<std::size_t>();
        ix.labels = j.at("labels").get<std::vector<std::string>>();
        if (ix.t != balance_threshold(ix.n, ix.kappa)) throw CorruptIndex("t does not match n and kappa");
        if (!ix.labels.empty() && ix.labels.size() != ix.n) throw CorruptIndex("label count differs from n");
        const auto& records = j.at("records");
        if (!records.is_array() || records.size() != ix.n) throw CorruptIndex("record count differs from n");
        for (const auto& jr : records) {
            SmallRecord r;
            if (!jr.at("small").is_null()) r.small = read_set(jr.at("small"), ix.n, "cut");
            r.side_size = jr.at("side_size").get<std::size_t>();
            r.side_id = {jr.at("anchor").get<Vertex>(), parse_hex64(jr.at("digest").get<std::string>())};
            for (const auto& b : jr.at("bits")) {
                if (!b.is_array() || b.size() != 2) throw CorruptIndex("bit entry is not a pair");
                r.adjacent_bits.emplace_back(b.at(0).get<Vertex>(), b.at(1).get<bool>());
            }
            if (jr.contains("tiny")) r.tiny_side = read_set(jr.at("tiny"), ix.n, "tiny side");
            check_record(ix, static_cast<Vertex>(ix.records.size()), r);
            ix.records.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw CorruptIndex(std::string("malformed index: ") + e.what());
    }
    return ix;
}

}  // namespace vcut
