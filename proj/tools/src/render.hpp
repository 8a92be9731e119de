#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rsdl/extension.hpp"
#include "rsdl/rank.hpp"
#include "rsdl/theory.hpp"

namespace rsdl::cli {

using Json = nlohmann::ordered_json;

Json config_json(const ReasonerConfig& c);
Json extension_json(const Extension& e, bool with_trace, const std::optional<Weight>& cost = std::nullopt);
Json document(const std::string& theory, const ReasonerConfig& c, Json extensions);

/// One line per step, consumption sources spelled out:
/// "5. +∂ cola via r1, consumed: [step 1 (+Δ dollar)]".
std::string render_step(const DerivationStep& s, const std::vector<DerivationStep>& trace);
std::string render_trace(const std::vector<DerivationStep>& trace, const std::string& indent = "");
std::string render_extension(const Extension& e, const std::string& indent = "");

std::string format_weight(const Weight& w);

}  // namespace rsdl::cli
