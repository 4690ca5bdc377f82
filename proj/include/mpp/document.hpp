#pragma once

#include "mpp/polytope.hpp"
#include "mpp/poset.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpp {

/// JSON form of a marked poset:
///   {"name": "...", "elements": [...], "covers": [[p, q], ...],
///    "marked": {"a": 0, ...}, "partition": {"chain": [...], "order": [...]}}
/// "partition" is optional. Marks are integers or "num/den" strings.
struct PosetDocument {
    std::string name;
    std::vector<ElementId> elements;
    std::vector<std::pair<ElementId, ElementId>> covers;
    std::map<ElementId, Rational> marked;
    std::optional<std::pair<std::vector<ElementId>, std::vector<ElementId>>> partition;
};

/// Throws ParseError for malformed JSON, missing or unknown fields.
PosetDocument parse_document(std::string_view text);
PosetDocument read_document(const std::string& path);
nlohmann::json to_json(const PosetDocument& doc);

/// Throws InvalidPoset, UnknownElement or InvalidMarking.
MarkedPoset to_marked_poset(const PosetDocument& doc);
std::optional<ChainOrderPartition> to_partition(const PosetDocument& doc, const MarkedPoset& mp);
PosetDocument make_document(const MarkedPoset& mp, std::string name);

/// "pm:m,c", "two-chains" or "diamond:lo,hi".
PosetDocument builtin_document(std::string_view spec);

/// Line format: "coords: x y" then rows "a1 … ad <= b" or "a1 … ad = b";
/// '#' starts a comment. Rows are emitted sorted.
std::string format_hrep(const HRepresentation& h);
HRepresentation parse_hrep(std::string_view text);

}  // namespace mpp
