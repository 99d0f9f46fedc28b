#pragma once

#include "isofdp/graph.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace isofdp {

enum class GraphFormat { EdgeList, Gml };

GraphFormat parse_format(const std::string& tag);

/// Loads a graph; ParseError on malformed content, std::runtime_error when
/// the file cannot be opened.
Graph read_graph(const std::filesystem::path& path, GraphFormat format, LoadStats* stats = nullptr);

/// `token label` lines (whitespace separated); blank lines and lines starting
/// with `#` or `%` are skipped. Order of the file is preserved.
using LabelRecords = std::vector<std::pair<std::string, std::string>>;
LabelRecords read_labels(std::istream& in);
LabelRecords read_labels(const std::filesystem::path& path);

/// Community ids for the nodes of g, numbered by first appearance in node
/// order. Throws DomainError if a node has no label or a token repeats.
std::vector<std::size_t> align_labels(const Graph& g, const LabelRecords& records);

/// Aligns two label files on their shared token set (the truth file's order).
/// Throws DomainError unless both files cover exactly the same tokens.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> align_label_pair(const LabelRecords& truth,
                                                                               const LabelRecords& pred);

/// Writes through a sibling temporary file renamed into place.
void write_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body);

}  // namespace isofdp
