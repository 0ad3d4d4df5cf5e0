#pragma once
/*
 * esharp.hpp
 * ----------
 * The rationalized group of fibre-homotopy self-equivalences inducing the
 * identity as governed by the W-split: H₀ of the ♯ derivation complex,
 * together with the exp/log correspondence onto automorphisms that fix ∧V
 * and the BCH group law computed on representatives.
 *
 * A degree-0 derivation θ (vanishing on ∧V) is "♯" when 𝒟θ = 0 and its
 * values satisfy the linear-part containments
 *     θ(W₀) ⊂ V ⊕ ∧^{≥2}(V⊕W),   θ(W₁) ⊂ V ⊕ W₀ ⊕ ∧^{≥2}(V⊕W).
 */

#include <string>
#include <vector>

#include "cga/derivations.hpp"
#include "cga/sullivan.hpp"

namespace cga {

// The two linear-part containments above (the cycle condition is separate).
// Returns false and fills `why` (when given) on the first violation.
bool sharp_value_conditions(const Derivation& theta, const WSplit& split,
                            std::string* why = nullptr);

// Fixed coordinate system on H₀(Der_♯) = Z_♯ / (𝒟(Der¹) ∩ Z_♯): canonical
// echelon class representatives; every group operation reduces back to
// these coordinates.
class ESharpSpace {
public:
    // Requires a valid, relatively minimal model (validation_error).
    static ESharpSpace compute(ModelPtr model);

    const ModelPtr& model() const { return model_; }
    const WSplit& split() const { return split_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Derivation>& basis() const { return basis_; }

    // Coordinates of θ's class; validation_error unless θ is a ♯-cycle of
    // degree 0 on this model.
    QVector class_coordinates(const Derivation& theta) const;
    Derivation representative(const QVector& coords) const;

private:
    ESharpSpace() = default;

    ModelPtr model_;
    WSplit split_;
    DerivationSpace der0_;
    std::vector<QVector> constraint_rows_;   // cycle + ♯ rows over Der⁰
    EchelonSpace boundary_in_sharp_{0};      // 𝒟(Der¹) ∩ Z_♯
    EchelonSpace classes_{0};                // canonical representatives
    std::vector<Derivation> basis_;
};

// e^θ = Σ θ^k/k! as a DG automorphism fixing ∧V; θ must be a degree-0
// ♯-cycle (validation_error). The nilpotence certificate θ^k(w) = 0 for
// k ≥ 5·|w| is asserted (internal_error on violation).
MorphismPtr exp_automorphism(const Derivation& theta);

// log(φ) = Σ (−1)^{k+1}(φ−1)^k/k for a DG self-map fixing ∧V whose linear
// part satisfies (φ₀−1)(W₀) ⊆ V and (φ₀−1)(W₁) ⊆ V ⊕ W₀ (validation_error
// otherwise); inverse of exp_automorphism.
Derivation log_automorphism(ModelPtr model, const DGMorphism& phi);

// Group law on class coordinates: log(e^a ∘ e^b) reduced to canonical
// coordinates. Exact and associative.
QVector bch_product(const ESharpSpace& space, const QVector& a, const QVector& b);
QVector bch_inverse(const ESharpSpace& space, const QVector& a);
// a·b·a⁻¹·b⁻¹.
QVector bch_commutator(const ESharpSpace& space, const QVector& a, const QVector& b);

struct GroupProfile {
    int dimension = 0;
    std::vector<Derivation> basis;
    // table[i][j] = coordinates of bch_product(e_i, e_j).
    std::vector<std::vector<QVector>> table;
    bool infinite_order = false;
    bool abelian = true;
    // Longest nonvanishing iterated commutator chain of basis elements.
    int nilpotency_class_lower_bound = 0;
};

GroupProfile group_profile(const ESharpSpace& space);

}  // namespace cga
