#include "labelprop/similarity.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <unordered_map>
#include <unordered_set>

#include "labelprop/common.hpp"

namespace labelprop {

void AttributeRecords::add(std::string entity, std::string attribute) {
    if (entity.empty() || attribute.empty())
        throw DataError("entity and attribute ids must be non-empty");
    for (const auto* s : {&entity, &attribute})
        if (s->find('\t') != std::string::npos || s->find('\n') != std::string::npos)
            throw DataError("id contains tab or newline: \"" + *s + "\"");
    pairs.emplace_back(std::move(entity), std::move(attribute));
}

AttributeRecords AttributeRecords::parse(std::istream& in) {
    AttributeRecords records;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 fields");
        std::string entity = line.substr(0, tab);
        std::string attribute = line.substr(tab + 1);
        if (entity.empty() || attribute.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty field");
        if (!seen.insert(entity + "\t" + attribute).second) continue;
        records.pairs.emplace_back(std::move(entity), std::move(attribute));
    }
    if (in.bad()) throw IoError("read failure on record stream");
    return records;
}

AttributeRecords AttributeRecords::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return parse(in);
}

SimilarityResult build_similarity_graph(const AttributeRecords& records,
                                        std::uint32_t min_shared,
                                        std::uint64_t max_attribute_frequency) {
    if (min_shared < 1) throw ConfigError("min_shared must be >= 1");

    // Intern entities; group entity ids per attribute.
    std::vector<std::string> entity_names;
    std::unordered_map<std::string, std::uint32_t> entity_index;
    std::unordered_map<std::string, std::vector<std::uint32_t>> postings;
    std::unordered_set<std::string> dedup;
    for (const auto& [entity, attribute] : records.pairs) {
        std::string key = entity + "\t" + attribute;
        if (!dedup.insert(std::move(key)).second) continue;
        auto [it, inserted] = entity_index.emplace(entity, entity_names.size());
        if (inserted) entity_names.push_back(entity);
        postings[attribute].push_back(it->second);
    }

    // Each attribute shared by b entities feeds b*(b-1)/2 pair counters.
    std::unordered_map<std::uint64_t, std::uint32_t> pair_count;
    for (auto& [attribute, entities] : postings) {
        std::sort(entities.begin(), entities.end());
        if (entities.size() > max_attribute_frequency) continue;
        for (std::size_t i = 0; i < entities.size(); ++i)
            for (std::size_t j = i + 1; j < entities.size(); ++j)
                ++pair_count[(static_cast<std::uint64_t>(entities[i]) << 32) | entities[j]];
    }

    struct Row {
        const std::string* a;
        const std::string* b;
        std::uint32_t w;
    };
    std::vector<Row> rows;
    std::vector<char> has_edge(entity_names.size(), 0);
    for (const auto& [key, count] : pair_count) {
        if (count < min_shared) continue;
        std::uint32_t p = static_cast<std::uint32_t>(key >> 32);
        std::uint32_t q = static_cast<std::uint32_t>(key & 0xffffffffu);
        has_edge[p] = has_edge[q] = 1;
        const std::string& np = entity_names[p];
        const std::string& nq = entity_names[q];
        rows.push_back(np < nq ? Row{&np, &nq, count} : Row{&nq, &np, count});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
        if (*x.a != *y.a) return *x.a < *y.a;
        return *x.b < *y.b;
    });

    GraphBuilder builder;
    for (const auto& r : rows) builder.add_edge(*r.a, *r.b, static_cast<double>(r.w));

    SimilarityResult result;
    result.graph = std::move(builder).build();
    result.total_entities = entity_names.size();
    result.isolated_entities =
        result.total_entities - static_cast<std::uint64_t>(std::count(has_edge.begin(), has_edge.end(), 1));
    return result;
}

}  // namespace labelprop
