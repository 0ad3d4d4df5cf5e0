#pragma once
/*
 * json_io.hpp
 * -----------
 * File formats. A model file is
 *
 *   { "base_generators":  [{"name":"v4","degree":4}, ...],
 *     "fibre_generators": [{"name":"w3","degree":3}, ...],
 *     "differential":     {"v7":"v4^2", "w3p":"v4"} }
 *
 * with omitted generators getting a zero differential. A morphism file is
 *
 *   { "source": <model path>, "target": <model path>, "values": {"w3":"w3"} }
 *
 * where paths are resolved relative to the morphism file's directory and
 * omitted generators default to themselves when the generator lists agree.
 *
 * Insertion order is preserved everywhere (declaration order is meaningful).
 */

#include <string>

#include <json.hpp>

#include "cga/sullivan.hpp"

namespace cga {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file; io_error when unreadable, parse_error when
// not valid JSON.
Json read_json_file(const std::string& path);

// Writes text to a file (io_error on failure).
void write_text_file(const std::string& path, const std::string& content);

ModelData model_data_from_json(const Json& j);
Json model_data_to_json(const ModelData& d);

ModelPtr load_model_file(const std::string& path);

struct LoadedMorphism {
    ModelPtr source;
    ModelPtr target;
    MorphismPtr morphism;
};

LoadedMorphism load_morphism_file(const std::string& path);

}  // namespace cga
