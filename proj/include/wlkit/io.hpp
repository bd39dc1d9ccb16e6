#pragma once

#include <string>

#include "wlkit/graph.hpp"

namespace wlkit {

/// graph6 encoding (no trailing newline, no header). Supports the one-
/// and four-byte order encodings, i.e. n up to 258047.
std::string to_graph6(const Graph& g);

/// Parses one graph6 line; the optional ">>graph6<<" header is accepted.
/// Throws std::invalid_argument on malformed input. Vertex colors are
/// not part of the format and come back all zero.
Graph from_graph6(const std::string& line);

/// Edge-list text format: first line "n m", then m lines "u v", 0-based.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// {"n": ..., "edges": [[u,v],...], "vcolor": [...]}
std::string to_json(const Graph& g);
Graph from_json(const std::string& text);

/// Reads a graph file, picking the format from the extension
/// (.g6 -> graph6, .json -> JSON, anything else -> edge list).
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wlkit
