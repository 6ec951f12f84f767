#pragma once

#include <iosfwd>
#include <string>

#include "labelprop/graph.hpp"
#include "labelprop/labels.hpp"

namespace labelprop {

// Edge-list format: UTF-8, one `idA<TAB>idB<TAB>weight` per line, `#`
// comments and blank lines skipped. Each unordered pair appears on exactly
// one line; the loader mirrors it. Edges below min_weight are dropped and
// their endpoints are not registered unless seen on a retained line.
Graph load_graph(std::istream& in, double min_weight);
Graph load_graph_file(const std::string& path, double min_weight);

// Seed-label format: `externalId<TAB>label1,label2,...`. Every id must be
// in the graph; duplicates and empty label lists are data errors. Listed
// nodes get labeled_at = 0.
LabelState load_labels(std::istream& in, const Graph& graph);
LabelState load_labels_file(const std::string& path, const Graph& graph);

// One `externalId<TAB>comma-joined-labels<TAB>labeled_at` row per node,
// sorted by external id, `-` standing for unlabeled. Byte-identical output
// for identical inputs.
void write_labels(std::ostream& out, const LabelState& state, const Graph& graph);
void write_labels_file(const std::string& path, const LabelState& state, const Graph& graph);
std::string labels_to_string(const LabelState& state, const Graph& graph);

// Edge list with each edge printed once as `minId<TAB>maxId<TAB>weight`
// (lexicographic endpoint order), rows sorted by (idA, idB).
void write_edge_list(std::ostream& out, const Graph& graph);
void write_edge_list_file(const std::string& path, const Graph& graph);

}  // namespace labelprop
