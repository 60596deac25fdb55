#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fatpoints/betti.hpp"
#include "fatpoints/bounds.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

using Json = nlohmann::ordered_json;

/// Reads the scheme document.  Malformed JSON, missing or unknown fields
/// throw InputError; dangling point ids throw StructuralError.
FatPointScheme scheme_from_json(const Json& doc);
Json to_json(const FatPointScheme& scheme);

FatPointScheme read_scheme(const std::string& path);
std::string dump_scheme(const FatPointScheme& scheme);

/// "1,3,6,10,10,…": the prefix through the first stable index, then "…".
std::string format_sequence(const HilbertSequence& h);
Json to_json(const HilbertSequence& h);

std::string join(const std::vector<std::int64_t>& v, std::string_view sep = ",");
/// Comma-separated naturals; throws InputError otherwise.
std::vector<std::int64_t> parse_naturals(std::string_view text);
/// Comma-separated names, empty items rejected.
std::vector<std::string> parse_names(std::string_view text);

std::string betti_tsv(const BettiBounds& b);
Json to_json(const BettiBounds& b);

Json to_json(const ReductionTrace& trace);

} // namespace fatpoints
