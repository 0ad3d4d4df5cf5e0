#pragma once
/*
 * report.hpp
 * ----------
 * Rendering of computation results: structured JSON bodies (exact rationals
 * as strings, deterministic key and element order) and human-readable text
 * tables. Command envelopes ({"schema_version", "command", ...}) are added
 * by the CLI layer.
 */

#include <string>

#include "cga/catalog.hpp"
#include "cga/esharp.hpp"
#include "cga/homology.hpp"
#include "cga/invariants.hpp"
#include "cga/json_io.hpp"

namespace cga {

// {"degree": n, "values": {generator: expression}}, zero values omitted.
Json derivation_to_json(const Derivation& theta);

Json validation_to_json(const ValidationReport& report);
Json homology_to_json(const HomologyReport& report);
Json samelson_to_json(const SamelsonReport& report, const std::vector<CheckOutcome>& checks);
Json esharp_to_json(const GroupProfile& profile);
Json catalog_list_to_json(const std::vector<CatalogEntry>& entries);

std::string human_validation(const ValidationReport& report);
std::string human_homology(const HomologyReport& report);
std::string human_samelson(const SamelsonReport& report, const std::vector<CheckOutcome>& checks);
std::string human_esharp(const GroupProfile& profile);
std::string human_catalog_list(const std::vector<CatalogEntry>& entries);

}  // namespace cga
