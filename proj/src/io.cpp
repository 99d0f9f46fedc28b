#include "isofdp/io.hpp"

#include "isofdp/errors.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace isofdp {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return in;
}

std::vector<std::size_t> number_by_first_appearance(const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(ids.try_emplace(l, ids.size()).first->second);
    return out;
}

}  // namespace

GraphFormat parse_format(const std::string& tag) {
    if (tag == "edges") return GraphFormat::EdgeList;
    if (tag == "gml") return GraphFormat::Gml;
    throw DomainError("unknown graph format '" + tag + "' (expected edges or gml)");
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format, LoadStats* stats) {
    std::ifstream in = open_input(path);
    return format == GraphFormat::Gml ? load_gml(in, stats) : load_edge_list(in, stats);
}

LabelRecords read_labels(std::istream& in) {
    LabelRecords out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string token, label, extra;
        if (!(fields >> token) || token[0] == '#' || token[0] == '%') continue;
        if (!(fields >> label) || (fields >> extra))
            throw ParseError("expected `token label`", line_no);
        out.emplace_back(std::move(token), std::move(label));
    }
    return out;
}

LabelRecords read_labels(const std::filesystem::path& path) {
    std::ifstream in = open_input(path);
    return read_labels(in);
}

std::vector<std::size_t> align_labels(const Graph& g, const LabelRecords& records) {
    std::unordered_map<std::string, const std::string*> by_token;
    for (const auto& [token, label] : records)
        if (!by_token.emplace(token, &label).second) throw DomainError("token '" + token + "' labeled twice");
    std::vector<std::string> labels;
    labels.reserve(g.node_count());
    for (const auto& token : g.tokens()) {
        auto it = by_token.find(token);
        if (it == by_token.end()) throw DomainError("no label for node '" + token + "'");
        labels.push_back(*it->second);
    }
    return number_by_first_appearance(labels);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> align_label_pair(const LabelRecords& truth,
                                                                               const LabelRecords& pred) {
    std::unordered_map<std::string, const std::string*> predicted;
    for (const auto& [token, label] : pred)
        if (!predicted.emplace(token, &label).second) throw DomainError("token '" + token + "' labeled twice");
    std::unordered_set<std::string> seen;
    std::vector<std::string> t, p;
    for (const auto& [token, label] : truth) {
        if (!seen.insert(token).second) throw DomainError("token '" + token + "' labeled twice");
        auto it = predicted.find(token);
        if (it == predicted.end()) throw DomainError("prediction has no label for '" + token + "'");
        t.push_back(label);
        p.push_back(*it->second);
    }
    if (pred.size() != truth.size()) throw DomainError("prediction labels tokens absent from the truth");
    return {number_by_first_appearance(t), number_by_first_appearance(p)};
}

void write_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        body(out);
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace isofdp
