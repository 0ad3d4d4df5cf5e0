/*
 * invariants.cpp
 * --------------
 * Nilpotency analysis over structure constants and the catalog cross-check
 * predicates.
 */

#include "cga/invariants.hpp"

#include <map>
#include <set>
#include <vector>

#include "cga/linalg.hpp"

namespace cga {

HnilBound hnil_fibre_bound(const RelativeModel& m) {
    HnilBound result;
    std::set<int> degrees;
    for (int o = 0; o < m.num_fibre(); ++o) {
        degrees.insert(m.algebra()->degree(m.fibre_gen(o)));
        for (const auto& [gen, coeff] : m.differential_of(m.fibre_gen(o)).linear_coefficients()) {
            if (!m.is_base(gen) && coeff != 0) {
                result.fibre_minimal = false;
            }
        }
    }
    result.bound = static_cast<int>(degrees.size());
    return result;
}

int nilpotency_within_window(const HomologyReport& report) {
    if (report.phi_case) {
        throw unsupported_error("nilpotency analysis needs an endomorphism-case report");
    }
    // Global coordinates: one slot per homology basis element, grouped by
    // degree in window order.
    std::map<int, int> offset;
    int total = 0;
    for (const HomologyDegree& hd : report.degrees) {
        offset[hd.degree] = total;
        total += hd.dim;
    }
    if (total == 0) {
        return 0;
    }

    // Bracket of a basis element with a coordinate vector, filled in from
    // the report's structure constants.
    auto bracket_with = [&](int deg_i, int idx_i, const QVector& x) {
        QVector out(static_cast<size_t>(total), Rational(0));
        for (const BracketTerm& t : report.brackets) {
            if (t.deg_i != deg_i || t.idx_i != idx_i) {
                continue;
            }
            const Rational& xj = x[static_cast<size_t>(offset.at(t.deg_j) + t.idx_j)];
            if (xj != 0) {
                out[static_cast<size_t>(offset.at(t.deg_k) + t.idx_k)] += t.coeff * xj;
            }
        }
        return out;
    };

    EchelonSpace level(total);
    for (const HomologyDegree& hd : report.degrees) {
        for (int i = 0; i < hd.dim; ++i) {
            QVector unit(static_cast<size_t>(total), Rational(0));
            unit[static_cast<size_t>(offset.at(hd.degree) + i)] = 1;
            level.insert(std::move(unit));
        }
    }
    int length = 0;
    while (level.rank() > 0) {
        ++length;
        if (length > report.window.hi + 1) {
            throw internal_error("bracket length chain failed to terminate");
        }
        EchelonSpace next(total);
        for (const HomologyDegree& hd : report.degrees) {
            for (int i = 0; i < hd.dim; ++i) {
                for (const QVector& x : level.rows()) {
                    next.insert(bracket_with(hd.degree, i, x));
                }
            }
        }
        level = next;
    }
    return length;
}

SamelsonReport samelson_lie_algebra(ModelPtr model, DegreeWindow window) {
    SamelsonReport report;
    report.homology = homology(model, window);
    report.nilpotency_lower_bound = nilpotency_within_window(report.homology);
    report.nilpotency_exact =
        window.lo == 1 && window.hi >= model->max_fibre_degree();
    report.rationally_homotopy_abelian_within_window = report.homology.brackets.empty();
    report.hnil = hnil_fibre_bound(*model);
    return report;
}

CheckOutcome odd_sphere_fibre_duality(const CatalogEntry& entry, const HomologyReport& report) {
    CheckOutcome outcome;
    outcome.name = "odd_sphere_fibre_duality";
    outcome.applicable =
        entry.flags.odd_sphere_fibre_n.has_value() && entry.flags.injective_i_sharp;
    if (!outcome.applicable) {
        return outcome;
    }
    int top = 2 * *entry.flags.odd_sphere_fibre_n + 1;
    std::vector<int> base_dims = base_cohomology_dims(*entry.model, top);
    for (const HomologyDegree& hd : report.degrees) {
        int q = top - hd.degree;
        int expected = q >= 0 && q <= top ? base_dims[static_cast<size_t>(q)] : 0;
        if (hd.dim != expected) {
            outcome.pass = false;
            outcome.detail = "H_" + std::to_string(hd.degree) + " has dimension " +
                             std::to_string(hd.dim) + ", base duality expects " +
                             std::to_string(expected);
            return outcome;
        }
    }
    if (!report.phi_case && !report.brackets.empty()) {
        outcome.pass = false;
        outcome.detail = "bracket constants do not all vanish";
    }
    return outcome;
}

CheckOutcome loop_space_match(const CatalogEntry& entry, const HomologyReport& report) {
    CheckOutcome outcome;
    outcome.name = "loop_space_match";
    outcome.applicable = entry.flags.path_space;
    if (!outcome.applicable) {
        return outcome;
    }
    const RelativeModel& m = *entry.model;
    for (const HomologyDegree& hd : report.degrees) {
        int expected = 0;
        for (int g = 0; g < m.num_base(); ++g) {
            if (m.algebra()->degree(g) == hd.degree + 1) {
                ++expected;
            }
        }
        if (hd.dim != expected) {
            outcome.pass = false;
            outcome.detail = "H_" + std::to_string(hd.degree) + " has dimension " +
                             std::to_string(hd.dim) + ", loop space of the base expects " +
                             std::to_string(expected);
            return outcome;
        }
    }
    return outcome;
}

}  // namespace cga
