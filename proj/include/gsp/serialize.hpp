#pragma once

#include <json.hpp>
#include <string>

#include "gsp/glmodel.hpp"
#include "gsp/pieces.hpp"
#include "gsp/wonderful.hpp"

// Machine-readable output. All emitters are deterministic: identical inputs
// produce byte-identical documents.

namespace gsp {

using Json = nlohmann::ordered_json;

Json json_node_set(NodeSet s);                  // 1-based node array
Json json_element(const WeylElement& w);        // reduced word, 1-based letters
Json json_count(const CountPolynomial& c);      // {factored, coeffs}
Json json_descriptor(const PieceDescriptor& p);
Json json_sum_check(const TwistedPair& tp, const SumCheck& check);
Json json_atlas(const CompletionAtlas& atlas);
Json json_model_report(const ModelReport& rep, const std::string& mode_name);

std::string csv_atlas(const CompletionAtlas& atlas);

std::string text_descriptor(const PieceDescriptor& p);
std::string text_atlas(const CompletionAtlas& atlas);

}  // namespace gsp
