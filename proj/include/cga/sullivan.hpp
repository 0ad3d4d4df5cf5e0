#pragma once
/*
 * sullivan.hpp
 * ------------
 * Relative Sullivan models of fibrations: a base algebra ∧V (generators
 * declared first) inside the total algebra ∧V⊗∧W, with a differential D
 * raising degree by one. Provides structural validation, the linear-part
 * splitting W = W₀ ⊕ W₁ with W₀ = ker D₀, and DG morphisms between models.
 *
 * A model is "relatively minimal" when the linear part of D(w) lies in V for
 * every fibre generator w; the engine's Lie-algebra and group computations
 * require this, while morphism targets only need structural validity.
 */

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cga/core.hpp"
#include "cga/linalg.hpp"

namespace cga {

// Raw, file-shaped description of a model. Differential entries are
// (generator name, expression text) in declaration order; omitted generators
// have zero differential.
struct ModelData {
    std::vector<Generator> base_generators;
    std::vector<Generator> fibre_generators;
    std::vector<std::pair<std::string, std::string>> differential;
};

class RelativeModel;
using ModelPtr = std::shared_ptr<const RelativeModel>;

class RelativeModel {
public:
    // Builds the model; fails (parse_error) only on malformed expressions,
    // unknown generator names, or duplicate differential entries. Structural
    // soundness is judged separately by validate_relative_model.
    static ModelPtr create(const ModelData& data);

    const AlgebraPtr& algebra() const { return alg_; }
    int num_base() const { return num_base_; }
    int num_fibre() const { return alg_->size() - num_base_; }
    bool is_base(int gen) const { return gen < num_base_; }
    int fibre_ordinal(int gen) const { return gen - num_base_; }
    int fibre_gen(int ordinal) const { return ordinal + num_base_; }

    const Polynomial& differential_of(int gen) const { return d_.at(static_cast<size_t>(gen)); }
    // Leibniz extension of D to the whole algebra.
    Polynomial apply_D(const Polynomial& p) const;
    // True when only base generators occur.
    bool base_polynomial(const Polynomial& p) const;

    int max_degree() const { return alg_->max_degree(); }
    int max_fibre_degree() const;

    // Canonical re-export (differential entries in generator order, canonical
    // expression text).
    ModelData data() const;
    bool same_model(const RelativeModel& other) const;

private:
    RelativeModel(AlgebraPtr alg, int num_base, std::vector<Polynomial> d)
        : alg_(std::move(alg)), num_base_(num_base), d_(std::move(d)) {}

    AlgebraPtr alg_;
    int num_base_;
    std::vector<Polynomial> d_;
};

enum class CheckLevel {
    structural,     // failure makes the model unusable
    minimality,     // failure blocks Lie/group entry points, warns for targets
    informational,  // reported only
};

struct CheckResult {
    std::string name;
    CheckLevel level = CheckLevel::structural;
    bool pass = false;
    std::string detail;  // empty when passing
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool structurally_valid = false;
    bool relatively_minimal = false;
    bool base_minimal = false;
    bool morphism_report = false;  // minimality summary fields apply to models only

    // Detail of the first failing non-informational check, or "" if none.
    std::string first_failure() const;
};

ValidationReport validate_relative_model(const RelativeModel& m);

// Throws validation_error unless the model is structurally valid (and, when
// require_minimal, relatively minimal).
void require_valid(const RelativeModel& m, bool require_minimal = true);

// Linear-part split of one fibre degree: D₀ maps the span of the listed
// generators into V of degree+1; w0_rows is the canonical kernel basis of D₀
// in those coordinates and w1_fibre_ordinals the pivot generators spanning
// the chosen complement.
struct WDegreeSplit {
    int degree = 0;
    std::vector<int> fibre_ordinals;
    std::vector<QVector> w0_rows;
    std::vector<int> w1_fibre_ordinals;
};

struct WSplit {
    std::vector<WDegreeSplit> degrees;  // ascending degree
    const WDegreeSplit* find(int degree) const;
};

// Requires a valid, relatively minimal model (the split is undefined
// otherwise); throws validation_error.
WSplit linear_part_split(const RelativeModel& m);

class DGMorphism;
using MorphismPtr = std::shared_ptr<const DGMorphism>;

// An algebra morphism determined by generator values; applied by
// substitution. Omitted generators default to themselves when source and
// target have structurally equal generator lists, and are required otherwise.
class DGMorphism {
public:
    static MorphismPtr create(ModelPtr source, ModelPtr target,
                              const std::vector<std::pair<std::string, std::string>>& values);
    static MorphismPtr identity(ModelPtr model);

    const ModelPtr& source() const { return source_; }
    const ModelPtr& target() const { return target_; }
    const Polynomial& value(int source_gen) const {
        return values_.at(static_cast<size_t>(source_gen));
    }
    Polynomial apply(const Polynomial& p) const;

    // Same generator sets and every generator mapped to itself.
    bool is_identity() const;
    // Source and target are the same model (so derivation complexes built
    // along this morphism carry a Lie structure when it is the identity).
    bool endo() const { return source_->same_model(*target_); }

private:
    DGMorphism(ModelPtr source, ModelPtr target, std::vector<Polynomial> values)
        : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {}

    ModelPtr source_;
    ModelPtr target_;
    std::vector<Polynomial> values_;
};

// Checks: degree preservation, the chain-map identity on every generator,
// base compatibility (base generators land in the target base subalgebra);
// plus an informational target-relative-minimality note.
ValidationReport validate_morphism(const DGMorphism& f);

// Throws validation_error unless every structural morphism check passes (the
// two models themselves must already be structurally valid).
void require_valid_morphism(const DGMorphism& f);

}  // namespace cga
