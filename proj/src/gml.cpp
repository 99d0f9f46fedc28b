// Reader for the small GML subset used by the classic network datasets:
//
//   graph [ node [ id 1 label "x" ... ] edge [ source 1 target 2 ... ] ]
//
// Every other key is parsed (so nesting stays balanced) and ignored.

#include "isofdp/errors.hpp"
#include "isofdp/graph.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <memory>
#include <optional>
#include <ostream>
#include <unordered_map>

namespace isofdp {

namespace {

struct Token {
    enum class Kind { Open, Close, Word, String, End } kind;
    std::string text;
    std::size_t line;
};

class Lexer {
public:
    explicit Lexer(std::string text) : text_(std::move(text)) {}

    Token next() {
        skip_space();
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line_};
        const char c = text_[pos_];
        if (c == '[') {
            ++pos_;
            return {Token::Kind::Open, "[", line_};
        }
        if (c == ']') {
            ++pos_;
            return {Token::Kind::Close, "]", line_};
        }
        if (c == '"') {
            const std::size_t start_line = line_;
            std::string s;
            ++pos_;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') ++line_;
                s.push_back(text_[pos_++]);
            }
            if (pos_ >= text_.size()) throw ParseError("unterminated string", start_line);
            ++pos_;
            return {Token::Kind::String, std::move(s), start_line};
        }
        std::string w;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '[' && text_[pos_] != ']' && text_[pos_] != '"')
            w.push_back(text_[pos_++]);
        return {Token::Kind::Word, std::move(w), line_};
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#' && at_line_start()) {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_line_start() const {
        for (std::size_t i = pos_; i-- > 0;) {
            if (text_[i] == '\n') return true;
            if (!std::isspace(static_cast<unsigned char>(text_[i]))) return false;
        }
        return true;
    }

    std::string text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

struct Value;
using List = std::vector<std::pair<std::string, Value>>;

struct Value {
    std::string scalar;
    std::shared_ptr<List> list;
    std::size_t line = 0;
};

List parse_list(Lexer& lex, bool nested) {
    List out;
    for (;;) {
        Token key = lex.next();
        if (key.kind == Token::Kind::End) {
            if (nested) throw ParseError("unexpected end of input inside '['", key.line);
            return out;
        }
        if (key.kind == Token::Kind::Close) {
            if (!nested) throw ParseError("unbalanced ']'", key.line);
            return out;
        }
        if (key.kind != Token::Kind::Word)
            throw ParseError("expected a key, found '" + key.text + "'", key.line);
        Token val = lex.next();
        Value v;
        v.line = val.line;
        switch (val.kind) {
            case Token::Kind::Open:
                v.list = std::make_shared<List>(parse_list(lex, true));
                break;
            case Token::Kind::Word:
            case Token::Kind::String:
                v.scalar = std::move(val.text);
                break;
            default:
                throw ParseError("missing value for key '" + key.text + "'", key.line);
        }
        out.emplace_back(std::move(key.text), std::move(v));
    }
}

const Value* find_key(const List& list, const std::string& key) {
    for (const auto& [k, v] : list)
        if (k == key) return &v;
    return nullptr;
}

struct GmlGraph {
    std::vector<std::string> ids;
    std::vector<std::string> node_attribute;
    std::vector<Edge> edges;
    std::size_t self_loops = 0;
};

GmlGraph parse_gml(std::istream& in, const std::string& attribute) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    Lexer lex(std::move(text));
    const List top = parse_list(lex, false);

    const Value* graph = find_key(top, "graph");
    if (!graph || !graph->list) throw ParseError("missing 'graph [ ... ]' block");

    GmlGraph out;
    std::unordered_map<std::string, NodeId> index;
    for (const auto& [key, value] : *graph->list) {
        if (key != "node") continue;
        if (!value.list) throw ParseError("'node' must be a list", value.line);
        const Value* id = find_key(*value.list, "id");
        if (!id || id->list) throw ParseError("node without scalar 'id'", value.line);
        if (!index.emplace(id->scalar, out.ids.size()).second)
            throw ParseError("duplicate node id '" + id->scalar + "'", id->line);
        out.ids.push_back(id->scalar);
        const Value* attr = attribute.empty() ? nullptr : find_key(*value.list, attribute);
        out.node_attribute.push_back(attr && !attr->list ? attr->scalar : std::string{});
    }
    for (const auto& [key, value] : *graph->list) {
        if (key != "edge") continue;
        if (!value.list) throw ParseError("'edge' must be a list", value.line);
        const Value* src = find_key(*value.list, "source");
        const Value* dst = find_key(*value.list, "target");
        if (!src || !dst || src->list || dst->list)
            throw ParseError("edge needs scalar 'source' and 'target'", value.line);
        auto s = index.find(src->scalar);
        if (s == index.end())
            throw ParseError("edge references undeclared node '" + src->scalar + "'", src->line);
        auto t = index.find(dst->scalar);
        if (t == index.end())
            throw ParseError("edge references undeclared node '" + dst->scalar + "'", dst->line);
        if (s->second == t->second) {
            ++out.self_loops;
            continue;
        }
        out.edges.emplace_back(s->second, t->second);
    }
    return out;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Graph load_gml(std::istream& in, LoadStats* stats) {
    GmlGraph parsed = parse_gml(in, {});
    Graph g(std::move(parsed.ids), parsed.edges);
    if (stats) {
        stats->self_loops_dropped = parsed.self_loops;
        stats->duplicates_dropped = parsed.edges.size() - g.edge_count();
    }
    return g;
}

std::vector<std::string> gml_node_attribute(std::istream& in, const std::string& key) {
    return parse_gml(in, key).node_attribute;
}

void write_gml(std::ostream& out, const Graph& g) {
    auto id = [&](NodeId v) {
        const auto& t = g.token(v);
        return is_integer(t) ? t : "\"" + t + "\"";
    };
    out << "graph\n[\n";
    for (NodeId v = 0; v < g.node_count(); ++v) out << "  node\n  [\n    id " << id(v) << "\n  ]\n";
    for (auto [u, v] : g.edges())
        out << "  edge\n  [\n    source " << id(u) << "\n    target " << id(v) << "\n  ]\n";
    out << "]\n";
}

}  // namespace isofdp
