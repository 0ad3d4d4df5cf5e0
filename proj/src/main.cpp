/*
 * main.cpp
 * --------
 * Command-line front end. Commands: validate | homology | esharp | autf |
 * invariants | catalog. Model input comes from --model FILE or
 * --catalog KEY; homology additionally accepts --morphism FILE. Exit codes:
 * 0 ok, 2 parse error, 3 validation error, 4 unsupported operation,
 * 5 file I/O error, 1 internal error.
 */

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cga/catalog.hpp"
#include "cga/esharp.hpp"
#include "cga/homology.hpp"
#include "cga/invariants.hpp"
#include "cga/json_io.hpp"
#include "cga/report.hpp"

namespace {

struct RunConfig {
    std::string command;
    std::string model_path;
    std::string catalog_key;
    std::string morphism_path;
    std::string window_text;
    std::string format = "human";
    std::string out_path;
    std::string catalog_action;  // catalog command only: list | export
};

struct ModelSource {
    cga::ModelPtr model;
    std::optional<cga::CatalogEntry> entry;  // set when --catalog was used
};

ModelSource resolve_model(const RunConfig& config, bool required) {
    if (!config.model_path.empty() && !config.catalog_key.empty()) {
        throw cga::parse_error("use either --model or --catalog, not both");
    }
    ModelSource source;
    if (!config.model_path.empty()) {
        source.model = cga::load_model_file(config.model_path);
    } else if (!config.catalog_key.empty()) {
        source.entry = cga::catalog_build(config.catalog_key);
        source.model = source.entry->model;
    } else if (required) {
        throw cga::parse_error("a model is required: pass --model FILE or --catalog KEY");
    }
    return source;
}

cga::DegreeWindow resolve_window(const RunConfig& config, const cga::RelativeModel& m) {
    if (config.window_text.empty()) {
        return cga::default_window(m);
    }
    return cga::parse_window(config.window_text);
}

void emit(const RunConfig& config, const std::string& human, const cga::Json& body) {
    std::string text;
    if (config.format == "structured") {
        cga::Json envelope = cga::Json::object();
        envelope["schema_version"] = 1;
        envelope["command"] = config.command;
        for (const auto& [key, value] : body.items()) {
            envelope[key] = value;
        }
        text = envelope.dump(2) + "\n";
    } else {
        text = human;
    }
    if (!config.out_path.empty()) {
        cga::write_text_file(config.out_path, text);
    } else {
        std::cout << text;
    }
}

int run_validate(const RunConfig& config) {
    cga::ValidationReport report;
    if (!config.morphism_path.empty()) {
        cga::LoadedMorphism loaded = cga::load_morphism_file(config.morphism_path);
        report = cga::validate_morphism(*loaded.morphism);
    } else {
        ModelSource source = resolve_model(config, true);
        report = cga::validate_relative_model(*source.model);
    }
    emit(config, cga::human_validation(report), cga::validation_to_json(report));
    std::string failure = report.first_failure();
    if (!failure.empty()) {
        std::cerr << "error: " << failure << "\n";
        return 3;
    }
    return 0;
}

int run_homology(const RunConfig& config) {
    cga::MorphismPtr morphism;
    cga::ModelPtr model;
    if (!config.morphism_path.empty()) {
        cga::LoadedMorphism loaded = cga::load_morphism_file(config.morphism_path);
        morphism = loaded.morphism;
        model = loaded.source;
        ModelSource source = resolve_model(config, false);
        if (source.model && !source.model->same_model(*model)) {
            throw cga::validation_error("--morphism source disagrees with the given model");
        }
    } else {
        model = resolve_model(config, true).model;
    }
    cga::HomologyReport report =
        cga::homology(model, resolve_window(config, *model), morphism);
    emit(config, cga::human_homology(report), cga::homology_to_json(report));
    return 0;
}

int run_autf(const RunConfig& config) {
    if (!config.morphism_path.empty()) {
        throw cga::unsupported_error("the autF subcomplex is endomorphism-case only");
    }
    cga::ModelPtr model = resolve_model(config, true).model;
    cga::HomologyReport report = cga::autF_homology(model, resolve_window(config, *model));
    emit(config, cga::human_homology(report), cga::homology_to_json(report));
    return 0;
}

int run_esharp(const RunConfig& config) {
    if (!config.morphism_path.empty()) {
        throw cga::unsupported_error("the sharp group is endomorphism-case only");
    }
    cga::ModelPtr model = resolve_model(config, true).model;
    cga::ESharpSpace space = cga::ESharpSpace::compute(model);
    cga::GroupProfile profile = cga::group_profile(space);
    emit(config, cga::human_esharp(profile), cga::esharp_to_json(profile));
    return 0;
}

int run_invariants(const RunConfig& config) {
    if (!config.morphism_path.empty()) {
        throw cga::unsupported_error("invariant analysis is endomorphism-case only");
    }
    ModelSource source = resolve_model(config, true);
    cga::SamelsonReport report =
        cga::samelson_lie_algebra(source.model, resolve_window(config, *source.model));
    std::vector<cga::CheckOutcome> checks;
    if (source.entry.has_value()) {
        checks.push_back(cga::odd_sphere_fibre_duality(*source.entry, report.homology));
        checks.push_back(cga::loop_space_match(*source.entry, report.homology));
    }
    emit(config, cga::human_samelson(report, checks), cga::samelson_to_json(report, checks));
    return 0;
}

int run_catalog(const RunConfig& config) {
    if (config.catalog_action == "list") {
        std::vector<cga::CatalogEntry> entries;
        for (const std::string& key : cga::catalog_default_keys()) {
            entries.push_back(cga::catalog_build(key));
        }
        emit(config, cga::human_catalog_list(entries), cga::catalog_list_to_json(entries));
        return 0;
    }
    if (config.catalog_action == "export") {
        if (config.catalog_key.empty()) {
            throw cga::parse_error("catalog export needs --catalog KEY");
        }
        cga::CatalogEntry entry = cga::catalog_build(config.catalog_key);
        // Exported exactly in the model file format so it can be re-read.
        std::string text = cga::model_data_to_json(entry.model->data()).dump(2) + "\n";
        if (!config.out_path.empty()) {
            cga::write_text_file(config.out_path, text);
        } else {
            std::cout << text;
        }
        return 0;
    }
    throw cga::parse_error("catalog action must be 'list' or 'export'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational homotopy invariants of fibrewise self-equivalences from a relative "
                 "Sullivan model"};
    app.require_subcommand(1);

    RunConfig config;
    auto add_common = [&config](CLI::App* cmd, bool with_morphism, bool with_window) {
        cmd->add_option("--model", config.model_path, "model file (JSON)");
        cmd->add_option("--catalog", config.catalog_key, "catalog key");
        if (with_morphism) {
            cmd->add_option("--morphism", config.morphism_path, "morphism file (JSON)");
        }
        if (with_window) {
            cmd->add_option("--window", config.window_text, "degree window LO:HI");
        }
        cmd->add_option("--format", config.format, "output format: human | structured")
            ->check(CLI::IsMember({"human", "structured"}));
        cmd->add_option("--out", config.out_path, "write the report to a file");
    };

    add_common(app.add_subcommand("validate", "run the model/morphism validation checks"), true,
               false);
    add_common(app.add_subcommand("homology", "derivation-complex homology over a window"), true,
               true);
    add_common(app.add_subcommand("esharp", "the rationalized sharp group and its BCH table"),
               true, false);
    add_common(app.add_subcommand("autf", "homology of the fibre-trivial subcomplex"), true,
               true);
    add_common(app.add_subcommand("invariants", "Samelson report, nilpotency and bounds"), true,
               true);
    CLI::App* catalog_cmd = app.add_subcommand("catalog", "list or export built-in models");
    catalog_cmd->add_option("action", config.catalog_action, "list | export")->required();
    add_common(catalog_cmd, false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return 2;
    }

    try {
        config.command = app.get_subcommands().front()->get_name();
        if (config.command == "validate") {
            return run_validate(config);
        }
        if (config.command == "homology") {
            return run_homology(config);
        }
        if (config.command == "esharp") {
            return run_esharp(config);
        }
        if (config.command == "autf") {
            return run_autf(config);
        }
        if (config.command == "invariants") {
            return run_invariants(config);
        }
        if (config.command == "catalog") {
            return run_catalog(config);
        }
        throw cga::internal_error("unhandled command");
    } catch (const cga::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cga::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const cga::unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const cga::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
