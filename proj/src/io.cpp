#include "tdl/io.hpp"

#include <json.hpp>

#include <charconv>
#include <sstream>

namespace tdl {

namespace {

using nlohmann::json;

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t to_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    return value;
}

json labeling_json(const Labeling& labeling) { return json{{"vertex_labels", labeling.labels}}; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<Graph> g;
    std::size_t expected = 0, seen = 0, line_no = 0, header_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto f = fields(line);
        if (f.empty()) continue;
        if (f.size() != 2) throw ParseError(line_no, "expected two integers");
        const auto a = to_index(f[0], line_no);
        const auto b = to_index(f[1], line_no);
        if (!g) {
            g.emplace(a);
            expected = b;
            header_line = line_no;
            continue;
        }
        if (seen == expected)
            throw ParseError(line_no, "more edges than the " + std::to_string(expected) + " declared");
        if (a >= g->vertex_count() || b >= g->vertex_count())
            throw ParseError(line_no, "vertex index out of range (n=" +
                                          std::to_string(g->vertex_count()) + ")");
        if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        if (!g->try_add_edge(a, b))
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        ++seen;
    }
    if (!g) throw ParseError(1, "missing header \"n m\"");
    if (seen != expected)
        throw ParseError(header_line, "header declares " + std::to_string(expected) +
                                          " edges but " + std::to_string(seen) + " were given");
    return std::move(*g);
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string labeling_to_json(const Labeling& labeling) { return labeling_json(labeling).dump(); }

Labeling labeling_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertex_labels") || !doc["vertex_labels"].is_array())
        throw ParseError(0, "expected an object with a \"vertex_labels\" array");
    Labeling out;
    for (const auto& x : doc["vertex_labels"]) {
        if (!x.is_number_integer()) throw ParseError(0, "vertex labels must be integers");
        out.labels.push_back(x.get<Label>());
    }
    return out;
}

std::string report_to_json(const ViolationReport& report, bool ok, std::optional<Label> k) {
    json doc;
    doc["ok"] = ok;
    doc["k"] = k ? json(*k) : json(nullptr);
    doc["violations"] = json::array();
    for (const auto& v : report.violations)
        doc["violations"].push_back(
            {{"kind", to_string(v.kind)}, {"vertices", v.vertices}, {"labels", v.labels}});
    return doc.dump();
}

std::string construction_to_json(const ConstructionResult& result) {
    auto doc = labeling_json(result.labeling);
    doc["claimed_k"] = result.claimed_k;
    doc["provenance"] = result.provenance;
    doc["tight"] = result.tight;
    doc["repaired"] = result.repaired;
    return doc.dump();
}

}  // namespace tdl
