/*
 * report.cpp
 * ----------
 * All output is deterministic: objects use insertion order, arrays follow
 * basis/degree order, rationals are emitted as exact strings.
 */

#include "cga/report.hpp"

#include <sstream>

namespace cga {

namespace {

Json rational_str(const Rational& r) { return r.get_str(); }

Json coords_json(const QVector& v) {
    Json out = Json::array();
    for (const Rational& c : v) {
        out.push_back(rational_str(c));
    }
    return out;
}

Json flags_json(const CatalogFlags& flags) {
    Json out = Json::object();
    if (flags.odd_sphere_fibre_n.has_value()) {
        out["odd_sphere_fibre_n"] = *flags.odd_sphere_fibre_n;
    } else {
        out["odd_sphere_fibre_n"] = nullptr;
    }
    out["injective_i_sharp"] = flags.injective_i_sharp;
    out["fibre_minimal_W"] = flags.fibre_minimal_W;
    out["path_space"] = flags.path_space;
    return out;
}

std::string check_level_name(CheckLevel level) {
    switch (level) {
        case CheckLevel::structural:
            return "structural";
        case CheckLevel::minimality:
            return "minimality";
        case CheckLevel::informational:
            return "informational";
    }
    return "unknown";
}

}  // namespace

Json derivation_to_json(const Derivation& theta) {
    Json out = Json::object();
    out["degree"] = theta.degree();
    Json values = Json::object();
    const RelativeModel& m = *theta.model();
    for (int o = 0; o < m.num_fibre(); ++o) {
        if (!theta.value(o).is_zero()) {
            values[m.algebra()->gen(m.fibre_gen(o)).name] = theta.value(o).str();
        }
    }
    out["values"] = values;
    return out;
}

Json validation_to_json(const ValidationReport& report) {
    Json out = Json::object();
    Json checks = Json::array();
    for (const CheckResult& check : report.checks) {
        Json c = Json::object();
        c["name"] = check.name;
        c["level"] = check_level_name(check.level);
        c["pass"] = check.pass;
        c["detail"] = check.detail;
        checks.push_back(c);
    }
    out["checks"] = checks;
    out["structurally_valid"] = report.structurally_valid;
    if (!report.morphism_report) {
        out["relatively_minimal"] = report.relatively_minimal;
        out["base_minimal"] = report.base_minimal;
    }
    return out;
}

Json homology_to_json(const HomologyReport& report) {
    Json out = Json::object();
    out["window"] = Json::object();
    out["window"]["lo"] = report.window.lo;
    out["window"]["hi"] = report.window.hi;
    out["phi_case"] = report.phi_case;
    out["autf"] = report.autf;
    Json degrees = Json::array();
    for (const HomologyDegree& hd : report.degrees) {
        Json d = Json::object();
        d["degree"] = hd.degree;
        d["dim"] = hd.dim;
        d["space_dim"] = hd.space_dim;
        d["cycles"] = hd.cycles_dim;
        d["boundaries"] = hd.boundaries_dim;
        Json reps = Json::array();
        for (size_t i = 0; i < hd.representatives.size(); ++i) {
            Json rep = derivation_to_json(hd.representatives[i]);
            Json labeled = Json::object();
            labeled["label"] = HomologyReport::label(hd.degree, static_cast<int>(i));
            labeled["degree"] = rep["degree"];
            labeled["values"] = rep["values"];
            reps.push_back(labeled);
        }
        d["representatives"] = reps;
        degrees.push_back(d);
    }
    out["degrees"] = degrees;
    if (report.with_brackets) {
        Json brackets = Json::array();
        for (const BracketTerm& t : report.brackets) {
            Json b = Json::object();
            b["i"] = HomologyReport::label(t.deg_i, t.idx_i);
            b["j"] = HomologyReport::label(t.deg_j, t.idx_j);
            b["k"] = HomologyReport::label(t.deg_k, t.idx_k);
            b["c"] = rational_str(t.coeff);
            brackets.push_back(b);
        }
        out["brackets"] = brackets;
    }
    if (report.pi1_rank >= 0) {
        out["pi1_rank"] = report.pi1_rank;
        out["pi1_note"] = report.pi1_note;
    }
    return out;
}

Json samelson_to_json(const SamelsonReport& report, const std::vector<CheckOutcome>& checks) {
    Json out = Json::object();
    out["hnil_fibre_bound"] = report.hnil.bound;
    out["hnil_fibre_minimal"] = report.hnil.fibre_minimal;
    out["nilpotency_lower_bound"] = report.nilpotency_lower_bound;
    out["nilpotency_exact"] = report.nilpotency_exact;
    out["rationally_homotopy_abelian_within_window"] =
        report.rationally_homotopy_abelian_within_window;
    Json checks_json = Json::array();
    for (const CheckOutcome& check : checks) {
        Json c = Json::object();
        c["name"] = check.name;
        c["applicable"] = check.applicable;
        c["pass"] = check.pass;
        c["detail"] = check.detail;
        checks_json.push_back(c);
    }
    out["checks"] = checks_json;
    out["homology"] = homology_to_json(report.homology);
    return out;
}

Json esharp_to_json(const GroupProfile& profile) {
    Json out = Json::object();
    out["dimension"] = profile.dimension;
    Json basis = Json::array();
    for (size_t i = 0; i < profile.basis.size(); ++i) {
        Json b = derivation_to_json(profile.basis[i]);
        Json labeled = Json::object();
        labeled["label"] = "e" + std::to_string(i);
        labeled["degree"] = b["degree"];
        labeled["values"] = b["values"];
        basis.push_back(labeled);
    }
    out["basis"] = basis;
    Json table = Json::array();
    for (const auto& row : profile.table) {
        Json r = Json::array();
        for (const QVector& cell : row) {
            r.push_back(coords_json(cell));
        }
        table.push_back(r);
    }
    out["table"] = table;
    out["infinite_order"] = profile.infinite_order;
    out["abelian"] = profile.abelian;
    out["nilpotency_class_lower_bound"] = profile.nilpotency_class_lower_bound;
    return out;
}

Json catalog_list_to_json(const std::vector<CatalogEntry>& entries) {
    Json out = Json::object();
    Json list = Json::array();
    for (const CatalogEntry& entry : entries) {
        Json e = Json::object();
        e["key"] = entry.key;
        ModelData data = entry.model->data();
        Json base = Json::array();
        for (const Generator& g : data.base_generators) {
            Json gj = Json::object();
            gj["name"] = g.name;
            gj["degree"] = g.degree;
            base.push_back(gj);
        }
        Json fibre = Json::array();
        for (const Generator& g : data.fibre_generators) {
            Json gj = Json::object();
            gj["name"] = g.name;
            gj["degree"] = g.degree;
            fibre.push_back(gj);
        }
        e["base_generators"] = base;
        e["fibre_generators"] = fibre;
        e["flags"] = flags_json(entry.flags);
        list.push_back(e);
    }
    out["entries"] = list;
    return out;
}

namespace {

std::string derivation_text(const Derivation& theta) {
    const RelativeModel& m = *theta.model();
    std::ostringstream out;
    bool first = true;
    for (int o = 0; o < m.num_fibre(); ++o) {
        if (theta.value(o).is_zero()) {
            continue;
        }
        if (!first) {
            out << ", ";
        }
        out << m.algebra()->gen(m.fibre_gen(o)).name << " -> " << theta.value(o).str();
        first = false;
    }
    if (first) {
        out << "0";
    }
    return out.str();
}

std::string coords_text(const QVector& v) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << v[i].get_str();
    }
    out << ")";
    return out.str();
}

}  // namespace

std::string human_validation(const ValidationReport& report) {
    std::ostringstream out;
    for (const CheckResult& check : report.checks) {
        out << (check.pass ? "pass" : "FAIL") << "  [" << check_level_name(check.level) << "] "
            << check.name;
        if (!check.pass && !check.detail.empty()) {
            out << ": " << check.detail;
        }
        out << "\n";
    }
    out << "structurally valid:  " << (report.structurally_valid ? "yes" : "no") << "\n";
    if (!report.morphism_report) {
        out << "relatively minimal:  " << (report.relatively_minimal ? "yes" : "no") << "\n";
        out << "base minimal:        " << (report.base_minimal ? "yes" : "no") << "\n";
    }
    return out.str();
}

std::string human_homology(const HomologyReport& report) {
    std::ostringstream out;
    out << (report.autf ? "autF derivation homology" : "derivation homology") << ", window ["
        << report.window.lo << ", " << report.window.hi << "]";
    if (report.phi_case) {
        out << " (along a morphism; no bracket data)";
    }
    out << "\n\n";
    out << "degree  dim  space  cycles  boundaries\n";
    for (const HomologyDegree& hd : report.degrees) {
        out << "  " << hd.degree << "\t" << hd.dim << "\t" << hd.space_dim << "\t"
            << hd.cycles_dim << "\t" << hd.boundaries_dim << "\n";
    }
    bool any_rep = false;
    for (const HomologyDegree& hd : report.degrees) {
        for (size_t i = 0; i < hd.representatives.size(); ++i) {
            if (!any_rep) {
                out << "\nrepresentatives:\n";
                any_rep = true;
            }
            out << "  " << HomologyReport::label(hd.degree, static_cast<int>(i)) << ": "
                << derivation_text(hd.representatives[static_cast<size_t>(i)]) << "\n";
        }
    }
    if (report.with_brackets) {
        out << "\nbracket constants:\n";
        if (report.brackets.empty()) {
            out << "  all zero\n";
        }
        for (const BracketTerm& t : report.brackets) {
            out << "  [" << HomologyReport::label(t.deg_i, t.idx_i) << ", "
                << HomologyReport::label(t.deg_j, t.idx_j) << "] += " << t.coeff.get_str() << " "
                << HomologyReport::label(t.deg_k, t.idx_k) << "\n";
        }
    }
    if (report.pi1_rank >= 0) {
        out << "\npi_1 rank: " << report.pi1_rank << "  (" << report.pi1_note << ")\n";
    }
    return out.str();
}

std::string human_samelson(const SamelsonReport& report, const std::vector<CheckOutcome>& checks) {
    std::ostringstream out;
    out << human_homology(report.homology);
    out << "\nhnil fibre bound: " << report.hnil.bound
        << (report.hnil.fibre_minimal ? "" : "  (caveat: W is not fibre-minimal)") << "\n";
    out << "nilpotency within window: " << report.nilpotency_lower_bound
        << (report.nilpotency_exact ? " (exact)" : " (lower bound)") << "\n";
    out << "rationally homotopy abelian within window: "
        << (report.rationally_homotopy_abelian_within_window ? "yes" : "no") << "\n";
    for (const CheckOutcome& check : checks) {
        out << check.name << ": ";
        if (!check.applicable) {
            out << "not applicable\n";
        } else if (check.pass) {
            out << "pass\n";
        } else {
            out << "FAIL: " << check.detail << "\n";
        }
    }
    return out.str();
}

std::string human_esharp(const GroupProfile& profile) {
    std::ostringstream out;
    out << "E_sharp rationalized group\n";
    out << "dimension: " << profile.dimension << "\n";
    for (size_t i = 0; i < profile.basis.size(); ++i) {
        out << "  e" << i << ": " << derivation_text(profile.basis[i]) << "\n";
    }
    if (profile.dimension > 0) {
        out << "BCH table (coordinates of e_i * e_j):\n";
        for (size_t i = 0; i < profile.table.size(); ++i) {
            for (size_t j = 0; j < profile.table[i].size(); ++j) {
                out << "  e" << i << " * e" << j << " = " << coords_text(profile.table[i][j])
                    << "\n";
            }
        }
    }
    out << "infinite order: " << (profile.infinite_order ? "yes" : "no") << "\n";
    out << "abelian: " << (profile.abelian ? "yes" : "no") << "\n";
    out << "nilpotency class lower bound: " << profile.nilpotency_class_lower_bound << "\n";
    return out.str();
}

std::string human_catalog_list(const std::vector<CatalogEntry>& entries) {
    std::ostringstream out;
    for (const CatalogEntry& entry : entries) {
        ModelData data = entry.model->data();
        out << entry.key << ": base {";
        for (size_t i = 0; i < data.base_generators.size(); ++i) {
            out << (i > 0 ? ", " : "") << data.base_generators[i].name;
        }
        out << "}, fibre {";
        for (size_t i = 0; i < data.fibre_generators.size(); ++i) {
            out << (i > 0 ? ", " : "") << data.fibre_generators[i].name;
        }
        out << "}";
        if (entry.flags.path_space) {
            out << "  [path space]";
        }
        if (entry.flags.odd_sphere_fibre_n.has_value()) {
            out << "  [odd sphere fibre S^" << (2 * *entry.flags.odd_sphere_fibre_n + 1) << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace cga
