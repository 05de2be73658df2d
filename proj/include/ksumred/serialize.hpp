#pragma once

#include "ksumred/collection.hpp"
#include "ksumred/instances.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ksumred {

/// Canonical one-line JSON; integers are decimal strings.
std::string serialize_instance(const Instance& inst);
ordered_json instance_to_json(const Instance& inst);

/// Field order on input is free. Throws ParseError (with line/column) on bad
/// syntax and ValidationError on schema or invariant violations.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const ordered_json& j);

// FNV-1a 64 over the canonical serialization, as 16 lowercase hex digits.
std::string content_digest(const Instance& inst);

/// JSON-lines collection: a meta line then one instance per line, each with a
/// "provenance" member.
template <class T>
std::string serialize_collection(const ReducedCollection<T>& coll) {
    std::string out;
    ordered_json meta;
    meta["meta"]["reduction"] = coll.reduction;
    meta["meta"]["source_digest"] = coll.source_digest;
    meta["meta"]["params"] = coll.params;
    if (!coll.skipped.empty()) {
        ordered_json skipped = ordered_json::array();
        for (const auto& p : coll.skipped) skipped.push_back(p.to_json());
        meta["meta"]["skipped"] = std::move(skipped);
    }
    out += meta.dump() + "\n";
    for (const auto& [inst, prov] : coll.items) {
        ordered_json line = instance_to_json(Instance(inst));
        line["provenance"] = prov.to_json();
        out += line.dump() + "\n";
    }
    return out;
}

struct ParsedCollection {
    ordered_json meta;
    std::vector<std::pair<Instance, Provenance>> items;
};

ParsedCollection parse_collection(std::string_view text);

}  // namespace ksumred
