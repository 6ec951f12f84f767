#include "labelprop/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "labelprop/common.hpp"

namespace labelprop {

namespace {

bool skip_line(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::vector<std::string_view> split_tabs(const std::string& line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find('\t', start);
        if (pos == std::string::npos) {
            fields.emplace_back(line.data() + start, line.size() - start);
            return fields;
        }
        fields.emplace_back(line.data() + start, pos - start);
        start = pos + 1;
    }
}

double parse_weight(std::string_view field, std::size_t line_no) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), w);
    if (ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(w))
        throw ParseError("line " + std::to_string(line_no) + ": bad weight \"" +
                         std::string(field) + "\"");
    return w;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return in;
}

}  // namespace

Graph load_graph(std::istream& in, double min_weight) {
    GraphBuilder builder;
    std::unordered_set<std::string> seen;  // unordered pair keys, input-level
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (skip_line(line)) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 3)
            throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields, got " +
                             std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty node id");
        double w = parse_weight(fields[2], line_no);
        if (w <= 0.0)
            throw DataError("line " + std::to_string(line_no) + ": weight must be positive");
        if (fields[0] == fields[1])
            throw DataError("line " + std::to_string(line_no) + ": self-loop on \"" +
                            std::string(fields[0]) + "\"");
        // Duplicate pairs are rejected whether or not either copy clears
        // the weight threshold.
        std::string key = fields[0] < fields[1]
            ? std::string(fields[0]) + "\t" + std::string(fields[1])
            : std::string(fields[1]) + "\t" + std::string(fields[0]);
        if (!seen.insert(std::move(key)).second)
            throw DataError("line " + std::to_string(line_no) + ": duplicate edge " +
                            std::string(fields[0]) + " -- " + std::string(fields[1]));
        if (w < min_weight) continue;
        builder.add_edge(fields[0], fields[1], w);
    }
    if (in.bad()) throw IoError("read failure on edge-list stream");
    return std::move(builder).build();
}

Graph load_graph_file(const std::string& path, double min_weight) {
    auto in = open_input(path);
    return load_graph(in, min_weight);
}

LabelState load_labels(std::istream& in, const Graph& graph) {
    LabelState state(graph.node_count());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (skip_line(line)) continue;
        auto fields = split_tabs(line);
        if (fields.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 fields, got " +
                             std::to_string(fields.size()));
        auto id = graph.ids().find(fields[0]);
        if (!id)
            throw DataError("line " + std::to_string(line_no) + ": unknown node \"" +
                            std::string(fields[0]) + "\"");
        if (state.is_labeled(*id))
            throw DataError("line " + std::to_string(line_no) + ": duplicate entry for \"" +
                            std::string(fields[0]) + "\"");
        std::vector<std::string> labels;
        std::string_view rest = fields[1];
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            labels.emplace_back(rest.substr(0, comma));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
            if (rest.empty()) labels.emplace_back();  // trailing comma -> empty label
        }
        if (labels.empty())
            throw DataError("line " + std::to_string(line_no) + ": empty label list for \"" +
                            std::string(fields[0]) + "\"");
        try {
            normalize_label_set(labels);
        } catch (const DataError&) {
            throw DataError("line " + std::to_string(line_no) + ": empty label string");
        }
        state.labels[*id] = std::move(labels);
        state.labeled_at[*id] = 0;
    }
    if (in.bad()) throw IoError("read failure on label stream");
    return state;
}

LabelState load_labels_file(const std::string& path, const Graph& graph) {
    auto in = open_input(path);
    return load_labels(in, graph);
}

void write_labels(std::ostream& out, const LabelState& state, const Graph& graph) {
    std::size_t n = graph.node_count();
    std::vector<NodeIndex> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeIndex>(i);
    std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
        return graph.ids().name(a) < graph.ids().name(b);
    });
    for (NodeIndex v : order) {
        out << graph.ids().name(v) << '\t';
        const auto& labels = state.labels[v];
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out << ',';
            out << labels[i];
        }
        out << '\t';
        if (state.is_labeled(v))
            out << state.labeled_at[v];
        else
            out << '-';
        out << '\n';
        if (!out) throw IoError("write failure on label sink");
    }
}

void write_labels_file(const std::string& path, const LabelState& state, const Graph& graph) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_labels(out, state, graph);
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

std::string labels_to_string(const LabelState& state, const Graph& graph) {
    std::ostringstream out;
    write_labels(out, state, graph);
    return out.str();
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    struct Row {
        const std::string* a;
        const std::string* b;
        double w;
    };
    std::vector<Row> rows;
    rows.reserve(graph.edge_count());
    for (NodeIndex i = 0; i < graph.node_count(); ++i) {
        for (const auto& nb : graph.neighbors(i)) {
            if (nb.node <= i) continue;
            const std::string& na = graph.ids().name(i);
            const std::string& nbn = graph.ids().name(nb.node);
            if (na < nbn)
                rows.push_back({&na, &nbn, nb.weight});
            else
                rows.push_back({&nbn, &na, nb.weight});
        }
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (*x.a != *y.a) return *x.a < *y.a;
        return *x.b < *y.b;
    });
    for (const auto& r : rows) {
        out << *r.a << '\t' << *r.b << '\t' << format_weight(r.w) << '\n';
        if (!out) throw IoError("write failure on edge-list sink");
    }
}

void write_edge_list_file(const std::string& path, const Graph& graph) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(out, graph);
    out.flush();
    if (!out) throw IoError("write failure on " + path);
}

}  // namespace labelprop
