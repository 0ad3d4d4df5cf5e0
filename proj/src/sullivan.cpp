/*
 * sullivan.cpp
 * ------------
 * Model construction, the structural checks, the W₀/W₁ split, and DG
 * morphisms. The differential extends to products by
 * D(a·b) = D(a)·b + (−1)^{|a|} a·D(b).
 */

#include "cga/sullivan.hpp"

#include <algorithm>
#include <map>

#include "cga/parse.hpp"

namespace cga {

ModelPtr RelativeModel::create(const ModelData& data) {
    std::vector<Generator> gens = data.base_generators;
    gens.insert(gens.end(), data.fibre_generators.begin(), data.fibre_generators.end());
    AlgebraPtr alg = make_algebra(std::move(gens));
    int num_base = static_cast<int>(data.base_generators.size());

    std::vector<Polynomial> d(static_cast<size_t>(alg->size()), Polynomial(alg));
    std::vector<bool> seen(static_cast<size_t>(alg->size()), false);
    for (const auto& [name, text] : data.differential) {
        int g = alg->find(name);
        if (g < 0) {
            throw parse_error("differential assigns to unknown generator '" + name + "'");
        }
        if (seen[static_cast<size_t>(g)]) {
            throw parse_error("differential assigns to generator '" + name + "' twice");
        }
        seen[static_cast<size_t>(g)] = true;
        d[static_cast<size_t>(g)] = parse_polynomial(alg, text);
    }
    return ModelPtr(new RelativeModel(std::move(alg), num_base, std::move(d)));
}

namespace {

// D applied to a single canonical monomial.
Polynomial d_of_monomial(const RelativeModel& m, const Monomial& mono) {
    const AlgebraPtr& alg = m.algebra();
    const auto& exps = mono.exponents();
    Polynomial out(alg);
    int prefix_degree = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        auto [g, e] = exps[i];
        const Polynomial& dg = m.differential_of(g);
        if (!dg.is_zero()) {
            // (−1)^{|prefix|} · prefix · e·g^{e−1}·D(g) · suffix; for odd g
            // the exponent is 1, for even g no sign arises inside the block.
            std::vector<std::pair<int, int>> prefix(exps.begin(),
                                                    exps.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<std::pair<int, int>> suffix(exps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                                    exps.end());
            if (e > 1) prefix.emplace_back(g, e - 1);

            Polynomial term = Polynomial::monomial(alg, *Monomial::make(*alg, std::move(prefix)),
                                                   Rational(e));
            if (prefix_degree % 2 != 0) term *= Rational(-1);
            term *= dg;
            term *= Polynomial::monomial(alg, *Monomial::make(*alg, std::move(suffix)), 1);
            out += term;
        }
        prefix_degree += alg->degree(g) * e;
    }
    return out;
}

}  // namespace

Polynomial RelativeModel::apply_D(const Polynomial& p) const {
    require_same_algebra(p, Polynomial(alg_));
    Polynomial out(alg_);
    for (const auto& [mono, coeff] : p.terms()) {
        out += d_of_monomial(*this, mono) * coeff;
    }
    return out;
}

bool RelativeModel::base_polynomial(const Polynomial& p) const {
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [g, e] : mono.exponents()) {
            if (!is_base(g)) return false;
        }
    }
    return true;
}

int RelativeModel::max_fibre_degree() const {
    int d = 0;
    for (int g = num_base_; g < alg_->size(); ++g) d = std::max(d, alg_->degree(g));
    return d;
}

ModelData RelativeModel::data() const {
    ModelData out;
    for (int g = 0; g < alg_->size(); ++g) {
        Generator gen = alg_->gen(g);
        gen.index = 0;
        (is_base(g) ? out.base_generators : out.fibre_generators).push_back(gen);
    }
    for (int g = 0; g < alg_->size(); ++g) {
        if (!d_[static_cast<size_t>(g)].is_zero()) {
            out.differential.emplace_back(alg_->gen(g).name, d_[static_cast<size_t>(g)].str());
        }
    }
    return out;
}

bool RelativeModel::same_model(const RelativeModel& other) const {
    if (this == &other) return true;
    if (num_base_ != other.num_base_) return false;
    if (!alg_->same_generators(*other.alg_)) return false;
    for (int g = 0; g < alg_->size(); ++g) {
        if (d_[static_cast<size_t>(g)] != other.d_[static_cast<size_t>(g)]) return false;
    }
    return true;
}

std::string ValidationReport::first_failure() const {
    for (const auto& c : checks) {
        if (!c.pass && c.level != CheckLevel::informational) {
            return c.name + ": " + c.detail;
        }
    }
    return "";
}

ValidationReport validate_relative_model(const RelativeModel& m) {
    const Algebra& A = *m.algebra();
    ValidationReport rep;
    auto add = [&rep](const std::string& name, CheckLevel level, bool pass,
                      const std::string& detail) {
        rep.checks.push_back({name, level, pass, pass ? "" : detail});
    };

    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < A.size() && ok; ++g) {
            const Polynomial& dg = m.differential_of(g);
            if (dg.is_zero()) continue;
            int deg = -1;
            if (!dg.is_homogeneous(&deg) || deg != A.degree(g) + 1) {
                ok = false;
                detail = "D(" + A.gen(g).name + ") = " + dg.str() + " is not homogeneous of degree " +
                         std::to_string(A.degree(g) + 1);
            }
        }
        add("degree-raises-by-one", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < A.size() && ok; ++g) {
            Polynomial dd = m.apply_D(m.differential_of(g));
            if (!dd.is_zero()) {
                ok = false;
                detail = "D(D(" + A.gen(g).name + ")) = " + dd.str();
            }
        }
        add("d-squared-zero", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < m.num_base() && ok; ++g) {
            if (!m.base_polynomial(m.differential_of(g))) {
                ok = false;
                detail = "D(" + A.gen(g).name + ") leaves the base subalgebra";
            }
        }
        add("base-closure", CheckLevel::structural, ok, detail);
    }
    // Triangularity in declaration order: D(g_i) may only use generators
    // declared strictly before g_i.
    auto triangular = [&](int g) -> bool {
        for (const auto& [mono, coeff] : m.differential_of(g).terms()) {
            for (const auto& [h, e] : mono.exponents()) {
                if (h >= g) return false;
            }
        }
        return true;
    };
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < m.num_base() && ok; ++g) {
            if (!triangular(g)) {
                ok = false;
                detail = "D(" + A.gen(g).name + ") uses generators not declared before it";
            }
        }
        add("base-triangularity", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = m.num_base(); g < A.size() && ok; ++g) {
            if (!triangular(g)) {
                ok = false;
                detail = "D(" + A.gen(g).name + ") uses generators not declared before it";
            }
        }
        add("fibre-triangularity", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = m.num_base(); g < A.size() && ok; ++g) {
            for (const auto& [h, c] : m.differential_of(g).linear_coefficients()) {
                if (!m.is_base(h)) {
                    ok = false;
                    detail = "linear part of D(" + A.gen(g).name + ") contains " + A.gen(h).name;
                    break;
                }
            }
        }
        add("relative-minimality", CheckLevel::minimality, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < m.num_base() && ok; ++g) {
            if (!m.differential_of(g).linear_coefficients().empty()) {
                ok = false;
                detail = "D(" + A.gen(g).name + ") has a linear part";
            }
        }
        add("base-minimality", CheckLevel::informational, ok, detail);
    }

    rep.structurally_valid = true;
    for (const auto& c : rep.checks) {
        if (c.level == CheckLevel::structural && !c.pass) rep.structurally_valid = false;
        if (c.name == "relative-minimality") rep.relatively_minimal = c.pass;
        if (c.name == "base-minimality") rep.base_minimal = c.pass;
    }
    return rep;
}

void require_valid(const RelativeModel& m, bool require_minimal) {
    ValidationReport rep = validate_relative_model(m);
    if (!rep.structurally_valid) {
        throw validation_error("model is not structurally valid (" + rep.first_failure() + ")");
    }
    if (require_minimal && !rep.relatively_minimal) {
        throw validation_error("model is not relatively minimal (" + rep.first_failure() + ")");
    }
}

const WDegreeSplit* WSplit::find(int degree) const {
    for (const auto& s : degrees) {
        if (s.degree == degree) return &s;
    }
    return nullptr;
}

WSplit linear_part_split(const RelativeModel& m) {
    require_valid(m, true);
    const Algebra& A = *m.algebra();

    std::map<int, std::vector<int>> by_degree;
    for (int o = 0; o < m.num_fibre(); ++o) {
        by_degree[A.degree(m.fibre_gen(o))].push_back(o);
    }

    WSplit out;
    for (const auto& [deg, ordinals] : by_degree) {
        std::vector<int> targets;  // base generators of degree deg+1
        for (int g = 0; g < m.num_base(); ++g) {
            if (A.degree(g) == deg + 1) targets.push_back(g);
        }
        QMatrix d0(static_cast<int>(targets.size()), static_cast<int>(ordinals.size()));
        for (size_t col = 0; col < ordinals.size(); ++col) {
            auto lin = m.differential_of(m.fibre_gen(ordinals[col])).linear_coefficients();
            for (const auto& [g, c] : lin) {
                auto row = std::find(targets.begin(), targets.end(), g);
                if (row == targets.end()) {
                    throw internal_error("linear part of D escapes the expected degree");
                }
                d0.at(static_cast<int>(row - targets.begin()), static_cast<int>(col)) = c;
            }
        }
        WDegreeSplit split;
        split.degree = deg;
        split.fibre_ordinals = ordinals;
        split.w0_rows = d0.kernel_basis();
        QMatrix copy = d0;
        for (int p : copy.rref()) {
            split.w1_fibre_ordinals.push_back(ordinals[static_cast<size_t>(p)]);
        }
        out.degrees.push_back(std::move(split));
    }
    return out;
}

MorphismPtr DGMorphism::create(ModelPtr source, ModelPtr target,
                               const std::vector<std::pair<std::string, std::string>>& values) {
    const AlgebraPtr& src_alg = source->algebra();
    const AlgebraPtr& tgt_alg = target->algebra();

    std::map<std::string, Polynomial> parsed;
    for (const auto& [name, text] : values) {
        if (src_alg->find(name) < 0) {
            throw parse_error("morphism assigns a value to unknown generator '" + name + "'");
        }
        if (!parsed.emplace(name, parse_polynomial(tgt_alg, text)).second) {
            throw parse_error("morphism assigns a value to generator '" + name + "' twice");
        }
    }

    bool same_gens = src_alg->same_generators(*tgt_alg);
    std::vector<Polynomial> vals;
    for (int g = 0; g < src_alg->size(); ++g) {
        auto it = parsed.find(src_alg->gen(g).name);
        if (it != parsed.end()) {
            vals.push_back(it->second);
        } else if (same_gens) {
            vals.push_back(Polynomial::generator(tgt_alg, g));
        } else {
            throw parse_error("morphism omits generator '" + src_alg->gen(g).name +
                              "' but source and target generators differ");
        }
    }
    return MorphismPtr(new DGMorphism(std::move(source), std::move(target), std::move(vals)));
}

MorphismPtr DGMorphism::identity(ModelPtr model) {
    ModelPtr target = model;
    return create(std::move(model), std::move(target), {});
}

Polynomial DGMorphism::apply(const Polynomial& p) const {
    require_same_algebra(p, Polynomial(source_->algebra()));
    Polynomial out(target_->algebra());
    for (const auto& [mono, coeff] : p.terms()) {
        Polynomial term = Polynomial::constant(target_->algebra(), coeff);
        for (const auto& [g, e] : mono.exponents()) {
            for (int k = 0; k < e; ++k) term *= values_[static_cast<size_t>(g)];
        }
        out += term;
    }
    return out;
}

bool DGMorphism::is_identity() const {
    if (!source_->algebra()->same_generators(*target_->algebra())) return false;
    for (int g = 0; g < source_->algebra()->size(); ++g) {
        if (values_[static_cast<size_t>(g)] != Polynomial::generator(target_->algebra(), g)) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_morphism(const DGMorphism& f) {
    const RelativeModel& src = *f.source();
    const RelativeModel& tgt = *f.target();
    const Algebra& A = *src.algebra();
    ValidationReport rep;
    rep.morphism_report = true;
    auto add = [&rep](const std::string& name, CheckLevel level, bool pass,
                      const std::string& detail) {
        rep.checks.push_back({name, level, pass, pass ? "" : detail});
    };

    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < A.size() && ok; ++g) {
            const Polynomial& v = f.value(g);
            if (v.is_zero()) continue;
            int deg = -1;
            if (!v.is_homogeneous(&deg) || deg != A.degree(g)) {
                ok = false;
                detail = "value of " + A.gen(g).name + " is not homogeneous of degree " +
                         std::to_string(A.degree(g));
            }
        }
        add("degree-preservation", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < A.size() && ok; ++g) {
            Polynomial lhs = tgt.apply_D(f.value(g));
            Polynomial rhs = f.apply(src.differential_of(g));
            if (lhs != rhs) {
                ok = false;
                detail = "on " + A.gen(g).name + ": D(f(g)) = " + lhs.str() + " but f(D(g)) = " +
                         rhs.str();
            }
        }
        add("chain-map", CheckLevel::structural, ok, detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int g = 0; g < src.num_base() && ok; ++g) {
            if (!tgt.base_polynomial(f.value(g))) {
                ok = false;
                detail = "value of base generator " + A.gen(g).name +
                         " leaves the target base subalgebra";
            }
        }
        add("base-compatibility", CheckLevel::structural, ok, detail);
    }
    {
        ValidationReport tgt_rep = validate_relative_model(tgt);
        add("target-relative-minimality", CheckLevel::informational, tgt_rep.relatively_minimal,
            "target model is not relatively minimal (allowed for mapping-space targets)");
    }

    rep.structurally_valid = true;
    for (const auto& c : rep.checks) {
        if (c.level == CheckLevel::structural && !c.pass) rep.structurally_valid = false;
    }
    return rep;
}

void require_valid_morphism(const DGMorphism& f) {
    require_valid(*f.source(), true);
    require_valid(*f.target(), false);
    ValidationReport rep = validate_morphism(f);
    if (!rep.structurally_valid) {
        throw validation_error("morphism is not valid (" + rep.first_failure() + ")");
    }
}

}  // namespace cga
