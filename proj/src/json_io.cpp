/*
 * json_io.cpp
 * -----------
 * JSON readers/writers for models and morphisms.
 */

#include "cga/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cga {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot read file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("file '" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw io_error("failed while writing file '" + path + "'");
    }
}

namespace {

std::vector<Generator> generators_from_json(const Json& j, const std::string& key) {
    std::vector<Generator> out;
    if (!j.contains(key)) return out;
    const Json& arr = j.at(key);
    if (!arr.is_array()) {
        throw parse_error("'" + key + "' must be an array of {name, degree} objects");
    }
    for (const Json& item : arr) {
        if (!item.is_object() || !item.contains("name") || !item.contains("degree") ||
            !item.at("name").is_string() || !item.at("degree").is_number_integer()) {
            throw parse_error("'" + key + "' entries must be objects with a string 'name' and an integer 'degree'");
        }
        Generator g;
        g.name = item.at("name").get<std::string>();
        g.degree = item.at("degree").get<int>();
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> string_map_from_json(const Json& j,
                                                                      const std::string& key) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!j.contains(key)) return out;
    const Json& obj = j.at(key);
    if (!obj.is_object()) {
        throw parse_error("'" + key + "' must be an object mapping generator names to expressions");
    }
    for (const auto& [name, value] : obj.items()) {
        if (!value.is_string()) {
            throw parse_error("'" + key + "' entry '" + name + "' must be a string expression");
        }
        out.emplace_back(name, value.get<std::string>());
    }
    return out;
}

}  // namespace

ModelData model_data_from_json(const Json& j) {
    if (!j.is_object()) {
        throw parse_error("a model file must contain a JSON object");
    }
    ModelData data;
    data.base_generators = generators_from_json(j, "base_generators");
    data.fibre_generators = generators_from_json(j, "fibre_generators");
    data.differential = string_map_from_json(j, "differential");
    return data;
}

Json model_data_to_json(const ModelData& d) {
    Json j = Json::object();
    auto gens = [](const std::vector<Generator>& list) {
        Json arr = Json::array();
        for (const Generator& g : list) {
            arr.push_back(Json{{"name", g.name}, {"degree", g.degree}});
        }
        return arr;
    };
    j["base_generators"] = gens(d.base_generators);
    j["fibre_generators"] = gens(d.fibre_generators);
    Json diff = Json::object();
    for (const auto& [name, text] : d.differential) diff[name] = text;
    j["differential"] = diff;
    return j;
}

ModelPtr load_model_file(const std::string& path) {
    return RelativeModel::create(model_data_from_json(read_json_file(path)));
}

LoadedMorphism load_morphism_file(const std::string& path) {
    Json j = read_json_file(path);
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.at("source").is_string() || !j.at("target").is_string()) {
        throw parse_error("a morphism file needs string 'source' and 'target' model paths");
    }
    std::filesystem::path dir = std::filesystem::path(path).parent_path();
    auto resolve = [&dir](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (dir / fp).string();
    };

    LoadedMorphism out;
    out.source = load_model_file(resolve(j.at("source").get<std::string>()));
    out.target = load_model_file(resolve(j.at("target").get<std::string>()));
    out.morphism = DGMorphism::create(out.source, out.target, string_map_from_json(j, "values"));
    return out;
}

}  // namespace cga
