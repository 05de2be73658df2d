#include "ksumred/serialize.hpp"

#include "ksumred/errors.hpp"

#include <cstdint>
#include <cstdio>
#include <set>

namespace ksumred {

namespace {

ordered_json big_array(const std::vector<BigInt>& xs) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : xs) arr.push_back(to_decimal(x));
    return arr;
}

ordered_json i64_array(const std::vector<std::int64_t>& xs) {
    ordered_json arr = ordered_json::array();
    for (auto x : xs) arr.push_back(std::to_string(x));
    return arr;
}

const ordered_json& field(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

BigInt big(const ordered_json& j, const char* what) {
    if (!j.is_string()) throw ValidationError(std::string(what) + " must be a decimal string");
    return parse_decimal(j.get<std::string>());
}

std::vector<BigInt> big_list(const ordered_json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<BigInt> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(big(x, what));
    return out;
}

std::int64_t small(const ordered_json& j, const char* what) {
    return to_i64(big(j, what));
}

template <class T>
T count(const ordered_json& j, const char* what) {
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw ValidationError(std::string(what) + " must be nonnegative");
    return static_cast<T>(v);
}

int arity_field(const ordered_json& j) {
    const auto k = count<std::int64_t>(field(j, "k"), "k");
    if (k < 1 || k > 1'000'000) throw ValidationError("k must be at least 1");
    return static_cast<int>(k);
}

Bounds bounds(const ordered_json& j, const char* what) {
    auto xs = big_list(j, what);
    if (xs.size() != 2) throw ValidationError(std::string(what) + " must be a [lo, hi] pair");
    return {xs[0], xs[1]};
}

void reject_unknown(const ordered_json& j, std::initializer_list<const char*> known) {
    std::set<std::string> allowed(known.begin(), known.end());
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw ValidationError("unknown field '" + it.key() + "'");
}

ordered_json graph_json(int k, const Graph& g, const std::optional<std::vector<BigInt>>& nw,
                        const std::optional<std::vector<BigInt>>& ew, const BigInt& target,
                        const std::optional<std::vector<int>>& partition) {
    ordered_json j;
    j["type"] = "graph";
    j["k"] = k;
    j["n"] = g.n();
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    j["node_weights"] = nw ? big_array(*nw) : ordered_json(nullptr);
    if (ew) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < g.m(); ++i)
            arr.push_back({g.edges()[i].u, g.edges()[i].v, to_decimal((*ew)[i])});
        j["edge_weights"] = std::move(arr);
    } else {
        j["edge_weights"] = nullptr;
    }
    j["target"] = to_decimal(target);
    j["partition"] = partition ? ordered_json(*partition) : ordered_json(nullptr);
    return j;
}

Instance graph_from_json(const ordered_json& j) {
    reject_unknown(j, {"type", "k", "n", "edges", "node_weights", "edge_weights", "target", "partition"});
    const int k = arity_field(j);
    const auto n = count<std::size_t>(field(j, "n"), "n");
    std::vector<Edge> edges;
    const auto& ej = field(j, "edges");
    if (!ej.is_array()) throw ValidationError("edges must be an array");
    for (const auto& e : ej) {
        if (!e.is_array() || e.size() != 2) throw ValidationError("edge must be a [u, v] pair");
        edges.push_back({count<std::size_t>(e[0], "vertex"), count<std::size_t>(e[1], "vertex")});
    }
    Graph g(n, std::move(edges));
    const BigInt target = j.contains("target") ? big(j["target"], "target") : BigInt(0);
    const ordered_json null_json = nullptr;
    const auto& nwj = j.contains("node_weights") ? j["node_weights"] : null_json;
    const auto& ewj = j.contains("edge_weights") ? j["edge_weights"] : null_json;
    const auto& pj = j.contains("partition") ? j["partition"] : null_json;

    if (!nwj.is_null() || !ewj.is_null()) {
        if (!pj.is_null()) throw ValidationError("weighted graphs carry no partition");
        if (!nwj.is_null())
            return WeightedGraph(k, std::move(g), big_list(nwj, "node weight"), std::nullopt, target);
        if (!ewj.is_array()) throw ValidationError("edge_weights must be an array");
        std::vector<std::optional<BigInt>> ws(g.m());
        for (const auto& e : ewj) {
            if (!e.is_array() || e.size() != 3) throw ValidationError("edge weight must be [u, v, \"w\"]");
            auto idx = g.edge_index(count<std::size_t>(e[0], "vertex"), count<std::size_t>(e[1], "vertex"));
            if (!idx) throw ValidationError("edge weight names an edge not in the edge list");
            if (ws[*idx]) throw ValidationError("edge weight given twice");
            ws[*idx] = big(e[2], "edge weight");
        }
        std::vector<BigInt> weights;
        for (auto& w : ws) {
            if (!w) throw ValidationError("edge without a weight");
            weights.push_back(std::move(*w));
        }
        return WeightedGraph(k, std::move(g), std::nullopt, std::move(weights), target);
    }
    if (target != 0) throw ValidationError("unweighted graph with nonzero target");
    std::optional<std::vector<int>> partition;
    if (!pj.is_null()) {
        if (!pj.is_array()) throw ValidationError("partition must be an array");
        partition.emplace();
        for (const auto& s : pj) partition->push_back(static_cast<int>(count<std::int64_t>(s, "slot")));
    }
    return CliqueInstance(k, std::move(g), std::move(partition));
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based index of the last byte read.
    const std::size_t end = byte == 0 ? 0 : std::min(byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

ordered_json parse_json(std::string_view text) {
    try {
        return ordered_json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ParseError(line, column, e.what());
    }
}

}  // namespace

ordered_json instance_to_json(const Instance& inst) {
    struct Visitor {
        ordered_json operator()(const KSumInstance& x) const {
            ordered_json j;
            j["type"] = "ksum";
            j["k"] = x.k();
            j["numbers"] = big_array(x.numbers());
            j["target"] = to_decimal(x.target());
            j["range"] = {to_decimal(x.range().lo), to_decimal(x.range().hi)};
            return j;
        }
        ordered_json operator()(const VectorSumInstance& x) const {
            ordered_json j;
            j["type"] = "vectorsum";
            j["k"] = x.k();
            j["dim"] = x.dim();
            ordered_json vs = ordered_json::array();
            for (const auto& v : x.vectors()) vs.push_back(big_array(v));
            j["vectors"] = std::move(vs);
            j["target"] = big_array(x.target());
            j["entry_range"] = {to_decimal(x.entry_range().lo), to_decimal(x.entry_range().hi)};
            return j;
        }
        ordered_json operator()(const WeightedGraph& x) const {
            return graph_json(x.k(), x.graph(), x.node_weights(), x.edge_weights(), x.target(),
                              std::nullopt);
        }
        ordered_json operator()(const CliqueInstance& x) const {
            return graph_json(x.k(), x.graph(), std::nullopt, std::nullopt, 0, x.partition());
        }
        ordered_json operator()(const TargetSumInstance& x) const {
            ordered_json j;
            j["type"] = "targetsum";
            j["k"] = x.k();
            j["q"] = to_decimal(x.q());
            j["elements"] = big_array(x.elements());
            j["target"] = to_decimal(x.z());
            return j;
        }
        ordered_json operator()(const LinDepInstance& x) const {
            ordered_json j;
            j["type"] = "lindep";
            j["k"] = x.k();
            j["q"] = std::to_string(x.q());
            j["dim"] = x.dim();
            ordered_json vs = ordered_json::array();
            for (const auto& v : x.vectors()) vs.push_back(i64_array(v));
            j["vectors"] = std::move(vs);
            j["target"] = i64_array(x.z());
            return j;
        }
    };
    return std::visit(Visitor{}, inst);
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

Instance instance_from_json(const ordered_json& j) {
    if (!j.is_object()) throw ValidationError("instance must be a JSON object");
    const auto& type_json = field(j, "type");
    if (!type_json.is_string()) throw ValidationError("type must be a string");
    const auto type = type_json.get<std::string>();
    if (type == "ksum") {
        reject_unknown(j, {"type", "k", "numbers", "target", "range"});
        const int k = arity_field(j);
        auto numbers = big_list(field(j, "numbers"), "number");
        auto target = big(field(j, "target"), "target");
        if (j.contains("range"))
            return KSumInstance(k, std::move(numbers), std::move(target), bounds(j["range"], "range"));
        return KSumInstance(k, std::move(numbers), std::move(target));
    }
    if (type == "vectorsum") {
        reject_unknown(j, {"type", "k", "dim", "vectors", "target", "entry_range"});
        const int k = arity_field(j);
        const auto dim = count<std::size_t>(field(j, "dim"), "dim");
        std::vector<std::vector<BigInt>> vectors;
        const auto& vj = field(j, "vectors");
        if (!vj.is_array()) throw ValidationError("vectors must be an array");
        for (const auto& v : vj) vectors.push_back(big_list(v, "vector entry"));
        auto target = big_list(field(j, "target"), "target entry");
        if (j.contains("entry_range"))
            return VectorSumInstance(k, dim, std::move(vectors), std::move(target),
                                     bounds(j["entry_range"], "entry_range"));
        return VectorSumInstance(k, dim, std::move(vectors), std::move(target));
    }
    if (type == "graph") return graph_from_json(j);
    if (type == "targetsum") {
        reject_unknown(j, {"type", "k", "q", "elements", "target"});
        return TargetSumInstance(big(field(j, "q"), "q"), big_list(field(j, "elements"), "element"),
                                 arity_field(j), big(field(j, "target"), "target"));
    }
    if (type == "lindep") {
        reject_unknown(j, {"type", "k", "q", "dim", "vectors", "target"});
        const auto dim = count<std::size_t>(field(j, "dim"), "dim");
        std::vector<std::vector<std::int64_t>> vectors;
        const auto& vj = field(j, "vectors");
        if (!vj.is_array()) throw ValidationError("vectors must be an array");
        for (const auto& v : vj) {
            if (!v.is_array()) throw ValidationError("vector must be an array");
            std::vector<std::int64_t> row;
            for (const auto& x : v) row.push_back(small(x, "vector entry"));
            vectors.push_back(std::move(row));
        }
        std::vector<std::int64_t> z;
        const auto& zj = field(j, "target");
        if (!zj.is_array()) throw ValidationError("target must be an array");
        for (const auto& x : zj) z.push_back(small(x, "target entry"));
        return LinDepInstance(small(field(j, "q"), "q"), dim, std::move(vectors), arity_field(j),
                              std::move(z));
    }
    throw ValidationError("unknown instance type '" + type + "'");
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

std::string content_digest(const Instance& inst) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : serialize_instance(inst)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ordered_json Provenance::to_json() const {
    ordered_json j = ordered_json::object();
    if (carry_index) j["carry_index"] = *carry_index;
    if (gamma) j["gamma"] = *gamma;
    if (alpha) j["alpha"] = big_array(*alpha);
    if (prime) j["prime"] = to_decimal(*prime);
    if (offset) j["offset"] = big_array(*offset);
    if (vertex_map) j["vertex_map"] = *vertex_map;
    if (component) j["component"] = *component;
    if (vertex_offset) j["vertex_offset"] = *vertex_offset;
    if (note) j["note"] = *note;
    return j;
}

Provenance Provenance::from_json(const ordered_json& j) {
    Provenance p;
    if (!j.is_object()) throw ValidationError("provenance must be an object");
    if (j.contains("carry_index")) p.carry_index = count<std::size_t>(j["carry_index"], "carry_index");
    if (j.contains("gamma")) p.gamma = j["gamma"].get<std::vector<int>>();
    if (j.contains("alpha")) p.alpha = big_list(j["alpha"], "alpha");
    if (j.contains("prime")) p.prime = big(j["prime"], "prime");
    if (j.contains("offset")) p.offset = big_list(j["offset"], "offset");
    if (j.contains("vertex_map")) p.vertex_map = j["vertex_map"].get<std::vector<std::size_t>>();
    if (j.contains("component")) p.component = count<std::size_t>(j["component"], "component");
    if (j.contains("vertex_offset"))
        p.vertex_offset = count<std::size_t>(j["vertex_offset"], "vertex_offset");
    if (j.contains("note")) p.note = j["note"].get<std::string>();
    return p;
}

ParsedCollection parse_collection(std::string_view text) {
    ParsedCollection out;
    std::size_t line_start = 0;
    std::size_t line_no = 0;
    while (line_start < text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        auto line = text.substr(line_start, line_end - line_start);
        ++line_no;
        if (!line.empty()) {
            ordered_json j;
            try {
                j = parse_json(line);
            } catch (const ParseError& e) {
                throw ParseError(line_no, e.column(), "collection line is not valid JSON");
            }
            if (line_no == 1) {
                if (!j.contains("meta")) throw ValidationError("collection must start with a meta line");
                out.meta = j["meta"];
            } else {
                Provenance prov;
                if (j.contains("provenance")) {
                    prov = Provenance::from_json(j["provenance"]);
                    j.erase("provenance");
                }
                out.items.emplace_back(instance_from_json(j), std::move(prov));
            }
        }
        line_start = line_end + 1;
    }
    if (line_no == 0) throw ValidationError("empty collection");
    return out;
}

}  // namespace ksumred
