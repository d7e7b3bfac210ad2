#pragma once

#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Graph file format: one JSON document
///   {"K": int,
///    "nodes": [{"id": str, "a": ["p/q", ...]}, ...],
///    "edges": [{"u": str, "v": str, "A": [["p/q", ...], ...]}, ...]}
/// Matrix rows are indexed by u's color and columns by v's color, with u the
/// lexicographically smaller id. Node indices are assigned in lexicographic
/// id order, so the stored orientation coincides with the internal one.
/// All weights are "p/q" strings; bit-exact and diffable.

DecoratedGraph parse_graph_json(const std::string& text);
DecoratedGraph read_graph_json(const std::string& path);

/// Serializes with ids "v000", "v001", ... (zero-padded, lexicographic order
/// matching index order). Deterministic: reserializing a parsed file with the
/// same ids is byte-identical.
std::string write_graph_json(const DecoratedGraph& g);
void write_graph_json(const DecoratedGraph& g, const std::string& path);

}  // namespace zf
