#pragma once

#include <string>

#include "json.hpp"

#include "quantoid/classify.hpp"
#include "quantoid/entropic.hpp"
#include "quantoid/expansion.hpp"
#include "quantoid/set_function.hpp"
#include "quantoid/sharing.hpp"

namespace quantoid::io {

using Json = nlohmann::ordered_json;

/// {"ground_set": [...], "values": {"<key>": "<p/q>", ...}}. Labels may be
/// strings or integers; values may be strings or JSON integers.
/// Throws MalformedDocument plus the errors of build().
SetFunction parse_set_function(const Json& document);
/// Values emitted in mask order, rationals in lowest terms.
Json to_json(const SetFunction& f);
/// Same layout with floating-point values and a "tol" member.
Json to_json(const ApproxSetFunction& f);

Json to_json(const Classification& c);
Json family_to_json(const GroundSet& ground, const Family& family);
Json to_json(const SharingReport& report, const GroundSet& ground);
Json to_json(const Expansion& expansion);

/// {"parties": [...], "alphabets": [...], "probs": [...]}
JointDistribution parse_distribution(const Json& document, double tol = kDefaultTolerance);
/// {"parties": [...], "dims": [...], "amplitudes": [[re, im], ...]}
PureState parse_state(const Json& document, double tol = kDefaultTolerance);

/// Parses text; syntax errors become MalformedDocument.
Json parse_text(const std::string& text);
/// Reads a file ("-" for standard input). Throws MalformedDocument.
Json read_file(const std::string& path);
/// Two-space indented rendering with a trailing newline.
std::string dump(const Json& document);

}  // namespace quantoid::io
