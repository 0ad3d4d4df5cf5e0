#pragma once
/*
 * invariants.hpp
 * --------------
 * Derived quantities assembled from the homology reports: the Samelson Lie
 * algebra report with its nilpotency analysis, the fibre-degree bound on
 * homotopical nilpotency, and the cross-check predicates used on catalog
 * entries (odd-sphere-fibre duality with the base, loop-space dimensions
 * for path-space entries).
 */

#include <string>

#include "cga/catalog.hpp"
#include "cga/homology.hpp"

namespace cga {

struct HnilBound {
    // Number of distinct degrees carrying a fibre generator.
    int bound = 0;
    // False when the induced differential on ∧W has a linear part; the
    // bound is then reported with a caveat.
    bool fibre_minimal = true;
};

HnilBound hnil_fibre_bound(const RelativeModel& m);

struct SamelsonReport {
    HomologyReport homology;
    int nilpotency_lower_bound = 0;
    // True when every derivation space above the window vanishes (so the
    // lower bound is the exact nilpotency) and the window starts at 1.
    bool nilpotency_exact = false;
    bool rationally_homotopy_abelian_within_window = true;
    HnilBound hnil;
};

// The headline computation: homology + induced bracket + nilpotency
// analysis over the window. Requires a valid, relatively minimal model.
SamelsonReport samelson_lie_algebra(ModelPtr model, DegreeWindow window);

// Longest nonvanishing iterated bracket of homology basis classes whose
// total degree stays inside the window; 0 when the homology vanishes, 1
// when it is nonzero with all brackets zero. unsupported_error on a φ-case
// report.
int nilpotency_within_window(const HomologyReport& report);

// Catalog cross-checks. `applicable` is false when the entry's flags do not
// satisfy the hypothesis; `pass` is meaningful only when applicable.
struct CheckOutcome {
    std::string name;
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

// For entries with an S^{2n+1} fibre and the injectivity flag: every window
// degree q must satisfy dim H_q = dim H^{2n+1−q}(base), and all bracket
// constants must vanish.
CheckOutcome odd_sphere_fibre_duality(const CatalogEntry& entry, const HomologyReport& report);

// For path-space entries: dim H_d must equal the number of base generators
// of degree d+1, for every window degree d.
CheckOutcome loop_space_match(const CatalogEntry& entry, const HomologyReport& report);

}  // namespace cga
