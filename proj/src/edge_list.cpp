#include "vcut/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "vcut/errors.hpp"

namespace vcut {

namespace {

std::optional<unsigned long long> as_number(const std::string& s) {
    unsigned long long value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
    return value;
}

bool label_less(const std::string& a, const std::string& b) {
    auto na = as_number(a);
    auto nb = as_number(b);
    if (na && nb) return *na < *nb;
    if (na.has_value() != nb.has_value()) return na.has_value();
    return a < b;
}

}  // namespace

Vertex LabeledGraph::id_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<Vertex>(i);
    throw PreconditionError("unknown vertex label '" + label + "'");
}

LabeledGraph read_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue;
        if (!(fields >> b) || (fields >> extra))
            throw GraphError("line " + std::to_string(line_no) + ": expected exactly two labels");
        raw.emplace_back(a, b);
    }

    std::vector<std::string> labels;
    for (const auto& [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end(), label_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::map<std::string, Vertex> id;
    for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) edges.emplace_back(id[a], id[b]);

    LabeledGraph out{Graph(labels.size(), edges), std::move(labels)};
    if (out.graph.n() == 0) throw GraphError("empty graph");
    if (!is_connected(out.graph)) throw GraphError("graph is disconnected");
    return out;
}

LabeledGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& labels) {
    for (auto [u, v] : g.edges()) out << labels.at(u) << ' ' << labels.at(v) << '\n';
}

}  // namespace vcut
