#include "wlkit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace wlkit {

namespace {

constexpr char kG6Header[] = ">>graph6<<";

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int word = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            word <<= 1;
            if (i + j < bits.size() && bits[i + j]) word |= 1;
        }
        out.push_back(static_cast<char>(word + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("graph too large for this graph6 writer");
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& line) {
    std::size_t pos = 0;
    if (line.rfind(kG6Header, 0) == 0) pos = sizeof(kG6Header) - 1;
    auto take = [&]() -> int {
        if (pos >= line.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(line[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    long long n;
    int first = take();
    if (first < 63) {
        n = first;
    } else {
        int a = take();
        if (a == 63) throw std::invalid_argument("graph6: 8-byte order encoding not supported");
        n = (static_cast<long long>(a) << 12) | (take() << 6) | take();
    }
    if (n > 258047) throw std::invalid_argument("graph6: order too large");

    std::vector<Graph::Edge> edges;
    int word = 0, avail = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (avail == 0) {
                word = take();
                avail = 6;
            }
            if (word & (1 << (avail - 1))) edges.emplace_back(u, v);
            --avail;
        }
    while (pos < line.size() && (line[pos] == '\n' || line[pos] == '\r')) ++pos;
    if (pos != line.size()) throw std::invalid_argument("graph6: trailing bytes");
    return Graph::build(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header line");
    std::vector<Graph::Edge> edges(m);
    for (auto& [u, v] : edges)
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    return Graph::build(n, std::move(edges));
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["vcolor"] = g.vertex_colors();
    return j.dump();
}

Graph from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<int> colors;
    if (j.contains("vcolor")) colors = j["vcolor"].get<std::vector<int>>();
    return Graph::build(j.at("n").get<int>(), std::move(edges), std::move(colors));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph read_graph_file(const std::string& path) {
    std::string text = read_text_file(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    if (ends_with(path, ".g6")) return from_graph6(text);
    if (ends_with(path, ".json")) return from_json(text);
    return from_edge_list(text);
}

void write_graph_file(const Graph& g, const std::string& path) {
    if (ends_with(path, ".g6")) {
        write_text_file(path, to_graph6(g) + "\n");
    } else if (ends_with(path, ".json")) {
        write_text_file(path, to_json(g) + "\n");
    } else {
        write_text_file(path, to_edge_list(g));
    }
}

}  // namespace wlkit
