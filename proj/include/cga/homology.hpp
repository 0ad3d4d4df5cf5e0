#pragma once
/*
 * homology.hpp
 * ------------
 * Exact homology of the derivation complexes over a degree window:
 * dim H_n = dim ker(𝒟|Der^n) − rank(𝒟|Der^{n+1}), canonical representatives
 * (echelon cycle basis reduced modulo the boundary space), the induced
 * bracket with its structure constants, and cochain cohomology of the base
 * and total algebras used by cross-checks.
 */

#include <optional>
#include <string>
#include <vector>

#include "cga/derivations.hpp"
#include "cga/parse.hpp"

namespace cga {

// [b_{deg_i, idx_i}, b_{deg_j, idx_j}] = Σ coeff · b_{deg_k, idx_k}; one
// entry per nonzero coefficient, every ordered pair recorded.
struct BracketTerm {
    int deg_i = 0;
    int idx_i = 0;
    int deg_j = 0;
    int idx_j = 0;
    int deg_k = 0;
    int idx_k = 0;
    Rational coeff;
};

struct HomologyDegree {
    int degree = 0;
    int space_dim = 0;
    int cycles_dim = 0;
    int boundaries_dim = 0;
    int dim = 0;
    std::vector<Derivation> representatives;
};

struct HomologyReport {
    DegreeWindow window;
    bool phi_case = false;
    bool autf = false;
    bool with_brackets = false;
    std::vector<HomologyDegree> degrees;  // ascending, one per window degree
    std::vector<BracketTerm> brackets;
    int pi1_rank = -1;       // dim H₁ when degree 1 is in the window
    std::string pi1_note;    // caveat attached whenever H₁ is reported

    const HomologyDegree* find(int degree) const;
    // Basis labels are "h{degree}_{index}".
    static std::string label(int degree, int index);
};

// Window covering every possibly nonzero degree: [1, max(1, 2·max|g|)].
DegreeWindow default_window(const RelativeModel& m);

// The full computation, kept alive so downstream consumers (nilpotency,
// group structure) can reduce additional cycles to canonical homology
// coordinates.
class HomologyComputation {
public:
    // morphism → φ-case complex (no brackets); autf → the ∧⁺V⊗∧W value
    // subcomplex. Validates inputs (validation_error).
    HomologyComputation(ModelPtr model, DegreeWindow window, MorphismPtr morphism = nullptr,
                        bool autf = false);

    const HomologyReport& report() const { return report_; }
    const ModelPtr& model() const { return model_; }

    // Canonical coordinates of a cycle's class in the degree's homology
    // basis; the degree must lie in the window.
    QVector class_coordinates(const Derivation& cycle) const;

private:
    struct DegreeData {
        DerivationSpace space;
        EchelonSpace boundaries{0};
        EchelonSpace reduced_cycles{0};
    };
    const DegreeData& at(int degree) const;

    ModelPtr model_;
    MorphismPtr morphism_;
    HomologyReport report_;
    std::vector<DegreeData> data_;  // parallel to report_.degrees
};

HomologyReport homology(ModelPtr model, DegreeWindow window, MorphismPtr morphism = nullptr,
                        bool autf = false);

// Returns the report's structure constants; unsupported_error on a φ-case
// report (no Lie structure along a morphism).
std::vector<BracketTerm> induced_bracket(const HomologyReport& report);

int pi1_rank(ModelPtr model, MorphismPtr morphism = nullptr);

HomologyReport autF_homology(ModelPtr model, DegreeWindow window);

// Cochain cohomology dimensions H^q for q = 0..max_degree of the base
// subalgebra (∧V, d) and of the total algebra (∧V⊗∧W, D).
std::vector<int> base_cohomology_dims(const RelativeModel& m, int max_degree);
std::vector<int> total_cohomology_dims(const RelativeModel& m, int max_degree);

}  // namespace cga
