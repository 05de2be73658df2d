#pragma once

#include "ksumred/bigint.hpp"
#include "ksumred/instances.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ksumred {

using ordered_json = nlohmann::ordered_json;

/// Per-item record of how a reduced instance relates to its source. Only the
/// fields meaningful to the producing reduction are set.
struct Provenance {
    std::optional<std::size_t> carry_index;             // position in the carry-tuple order
    std::optional<std::vector<int>> gamma;              // carry tuple
    std::optional<std::vector<BigInt>> alpha;           // slot-pair weights, pairs in (1,2),(1,3),.. order
    std::optional<BigInt> prime;
    std::optional<std::vector<BigInt>> offset;          // i*p, i*q or the q*v target offset
    std::optional<std::vector<std::size_t>> vertex_map; // reduced vertex/index -> source vertex/index
    std::optional<std::size_t> component;               // merged component index
    std::optional<std::size_t> vertex_offset;           // first vertex of that component
    std::optional<std::string> note;

    ordered_json to_json() const;
    static Provenance from_json(const ordered_json& j);
    bool operator==(const Provenance&) const = default;
};

/// Ordered instances produced by one reduction, with provenance enabling witness lifting.
template <class T>
struct ReducedCollection {
    std::string reduction;
    std::string source_digest;
    ordered_json params = ordered_json::object();
    std::vector<std::pair<T, Provenance>> items;
    // Carry targets or similar candidates that were not emitted because they are unsolvable.
    std::vector<Provenance> skipped;

    std::size_t size() const { return items.size(); }
};

}  // namespace ksumred
