#pragma once

/**
 * @file json_export.hpp
 * @brief JSON serialization of catalog entries, verification reports and
 *        inference results. Schemas are described in docs/formats.md.
 */

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecogen/catalog.hpp"
#include "ecogen/verify.hpp"

namespace ecogen {

/// One catalog entry. `verified` is omitted (null) when no report is given.
std::string entry_json(const CatalogEntry& entry, std::optional<bool> verified = std::nullopt, int indent = 2);

/// Array of entries; `verified` is looked up by display_id().
std::string catalog_json(std::span<const CatalogEntry> entries, const std::map<std::string, bool>& verified = {},
                         int indent = 2);

std::string report_json(const VerificationReport& report, int indent = 2);

std::string inference_json(const InferenceResult& result, int indent = 2);

}  // namespace ecogen
