#pragma once

#include <string_view>

#include <json.hpp>

#include "p5sparse/classify.hpp"
#include "p5sparse/enumerate.hpp"
#include "p5sparse/modular.hpp"
#include "p5sparse/optimize.hpp"
#include "p5sparse/recognize.hpp"

namespace p5sparse::cli {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a of the raw input bytes, as 16 lowercase hex digits.
std::string digest(std::string_view text);

Json to_json(const VertexSet& s);
Json to_json(const Occurrence& o);
Json to_json(const Violation& v);
Json to_json(const PrimeClass& c);
/// Nested nodes: kind, vertices, children; Prime nodes add quotient edges.
Json to_json(const MDTree& t, int node = 0);
Json to_json(const VerificationReport& r, bool timing);

/// Family, membership and per-Prime-node classes; the witness is added only
/// when requested.
Json report_json(const RecognitionReport& r, bool certificate);

Json solution_json(const std::string& problem, const Solution& s);

}  // namespace p5sparse::cli
