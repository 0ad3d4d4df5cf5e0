/*
 * homology.cpp
 * ------------
 * Derivation-complex homology over a window. All ranks are exact; cycle
 * bases come from canonical matrix kernels, representatives are the cycle
 * echelon reduced modulo the boundary echelon, and structure constants are
 * read off by reducing brackets of representatives back to the canonical
 * homology coordinates.
 */

#include "cga/homology.hpp"

#include <map>
#include <utility>

#include "cga/linalg.hpp"

namespace cga {

const HomologyDegree* HomologyReport::find(int degree) const {
    for (const auto& hd : degrees) {
        if (hd.degree == degree) {
            return &hd;
        }
    }
    return nullptr;
}

std::string HomologyReport::label(int degree, int index) {
    return "h" + std::to_string(degree) + "_" + std::to_string(index);
}

DegreeWindow default_window(const RelativeModel& m) {
    DegreeWindow w;
    w.lo = 1;
    w.hi = std::max(1, 2 * m.max_degree());
    return w;
}

namespace {

// Matrix of 𝒟 : source → target (columns indexed by the source basis).
QMatrix differential_matrix(const DerivationSpace& source, const DerivationSpace& target) {
    QMatrix m(target.dimension(), source.dimension());
    for (int j = 0; j < source.dimension(); ++j) {
        QVector unit(static_cast<size_t>(source.dimension()), Rational(0));
        unit[static_cast<size_t>(j)] = 1;
        QVector column = target.coordinates(differential(source.element(unit)));
        for (int i = 0; i < target.dimension(); ++i) {
            m.at(i, j) = column[static_cast<size_t>(i)];
        }
    }
    return m;
}

}  // namespace

HomologyComputation::HomologyComputation(ModelPtr model, DegreeWindow window,
                                         MorphismPtr morphism, bool autf)
    : model_(std::move(model)), morphism_(std::move(morphism)) {
    if (window.lo < 1 || window.hi < window.lo) {
        throw validation_error("degree window must satisfy 1 <= lo <= hi");
    }
    if (autf && morphism_ && !morphism_->is_identity()) {
        throw unsupported_error("the fibrewise value subcomplex is only defined for self-maps");
    }
    if (morphism_) {
        require_valid_morphism(*morphism_);
        if (!morphism_->source()->same_model(*model_)) {
            throw validation_error("homology model must be the morphism source");
        }
    } else {
        require_valid(*model_, true);
    }

    report_.window = window;
    report_.phi_case = morphism_ && !morphism_->is_identity();
    report_.autf = autf;
    report_.with_brackets = !report_.phi_case;

    // Spaces for [lo−1, hi+1]: the extra low degree is the codomain of the
    // lowest window differential, the extra high degree supplies boundaries.
    std::map<int, DerivationSpace> spaces;
    for (int n = window.lo - 1; n <= window.hi + 1; ++n) {
        spaces.emplace(n, DerivationSpace::make(model_, n, morphism_, autf));
    }
    std::map<int, QMatrix> matrices;  // 𝒟 : Der^n → Der^{n−1}
    for (int n = window.lo; n <= window.hi + 1; ++n) {
        matrices.emplace(n, differential_matrix(spaces.at(n), spaces.at(n - 1)));
    }

    for (int n = window.lo; n <= window.hi; ++n) {
        DegreeData data{spaces.at(n), EchelonSpace(spaces.at(n).dimension()),
                        EchelonSpace(spaces.at(n).dimension())};
        HomologyDegree hd;
        hd.degree = n;
        hd.space_dim = data.space.dimension();

        const QMatrix& incoming = matrices.at(n + 1);
        for (int j = 0; j < spaces.at(n + 1).dimension(); ++j) {
            QVector column(static_cast<size_t>(hd.space_dim), Rational(0));
            for (int i = 0; i < hd.space_dim; ++i) {
                column[static_cast<size_t>(i)] = incoming.at(i, j);
            }
            data.boundaries.insert(column);
        }
        hd.boundaries_dim = static_cast<int>(data.boundaries.rows().size());

        std::vector<QVector> cycles = matrices.at(n).kernel_basis();
        hd.cycles_dim = static_cast<int>(cycles.size());
        for (const QVector& cycle : cycles) {
            data.reduced_cycles.insert(data.boundaries.reduce(cycle));
        }
        hd.dim = static_cast<int>(data.reduced_cycles.rows().size());
        for (const QVector& row : data.reduced_cycles.rows()) {
            hd.representatives.push_back(data.space.element(row));
        }

        report_.degrees.push_back(std::move(hd));
        data_.push_back(std::move(data));
    }

    if (window.lo <= 1 && 1 <= window.hi) {
        report_.pi1_rank = report_.find(1)->dim;
        report_.pi1_note =
            "degree 1 reports the rank of the fundamental group only; "
            "no group structure is inferred from this complex";
    }

    if (report_.with_brackets) {
        for (const HomologyDegree& a : report_.degrees) {
            for (const HomologyDegree& b : report_.degrees) {
                int m = a.degree + b.degree;
                if (m > window.hi || report_.find(m) == nullptr) {
                    continue;
                }
                for (int ia = 0; ia < a.dim; ++ia) {
                    for (int ib = 0; ib < b.dim; ++ib) {
                        Derivation t =
                            bracket(a.representatives[static_cast<size_t>(ia)],
                                    b.representatives[static_cast<size_t>(ib)]);
                        QVector coords = class_coordinates(t);
                        for (size_t k = 0; k < coords.size(); ++k) {
                            if (coords[k] != 0) {
                                report_.brackets.push_back(
                                    {a.degree, ia, b.degree, ib, m, static_cast<int>(k),
                                     coords[k]});
                            }
                        }
                    }
                }
            }
        }
    }
}

const HomologyComputation::DegreeData& HomologyComputation::at(int degree) const {
    for (size_t i = 0; i < data_.size(); ++i) {
        if (report_.degrees[i].degree == degree) {
            return data_[i];
        }
    }
    throw internal_error("degree " + std::to_string(degree) + " is outside the computed window");
}

QVector HomologyComputation::class_coordinates(const Derivation& cycle) const {
    const DegreeData& data = at(cycle.degree());
    QVector residue = data.boundaries.reduce(data.space.coordinates(cycle));
    auto coords = data.reduced_cycles.coordinates(residue);
    if (!coords) {
        throw internal_error("class coordinates requested for a non-cycle");
    }
    return *coords;
}

HomologyReport homology(ModelPtr model, DegreeWindow window, MorphismPtr morphism, bool autf) {
    return HomologyComputation(std::move(model), window, std::move(morphism), autf).report();
}

std::vector<BracketTerm> induced_bracket(const HomologyReport& report) {
    if (report.phi_case) {
        throw unsupported_error("no induced bracket along a non-identity morphism");
    }
    return report.brackets;
}

int pi1_rank(ModelPtr model, MorphismPtr morphism) {
    DegreeWindow w;
    w.lo = 1;
    w.hi = 1;
    return homology(std::move(model), w, std::move(morphism)).find(1)->dim;
}

HomologyReport autF_homology(ModelPtr model, DegreeWindow window) {
    return homology(std::move(model), window, nullptr, true);
}

namespace {

std::vector<int> cohomology_dims(const RelativeModel& m, int max_degree, int gen_limit) {
    AlgebraPtr alg = m.algebra();
    std::vector<std::vector<Monomial>> bases;
    std::vector<std::map<Monomial, int>> index;
    for (int q = 0; q <= max_degree + 1; ++q) {
        bases.push_back(monomial_basis(*alg, q, gen_limit));
        std::map<Monomial, int> idx;
        for (size_t i = 0; i < bases.back().size(); ++i) {
            idx.emplace(bases.back()[i], static_cast<int>(i));
        }
        index.push_back(std::move(idx));
    }
    std::vector<int> ranks;  // rank of d : degree q → q+1
    for (int q = 0; q <= max_degree; ++q) {
        QMatrix d(static_cast<int>(bases[static_cast<size_t>(q) + 1].size()),
                  static_cast<int>(bases[static_cast<size_t>(q)].size()));
        for (size_t j = 0; j < bases[static_cast<size_t>(q)].size(); ++j) {
            Polynomial image =
                m.apply_D(Polynomial::monomial(alg, bases[static_cast<size_t>(q)][j], Rational(1)));
            for (const auto& [mono, coeff] : image.terms()) {
                auto it = index[static_cast<size_t>(q) + 1].find(mono);
                if (it == index[static_cast<size_t>(q) + 1].end()) {
                    throw internal_error("differential image escaped the cochain basis");
                }
                d.at(it->second, static_cast<int>(j)) = coeff;
            }
        }
        ranks.push_back(d.rank());
    }
    std::vector<int> dims;
    for (int q = 0; q <= max_degree; ++q) {
        int dim_q = static_cast<int>(bases[static_cast<size_t>(q)].size());
        int kernel = dim_q - ranks[static_cast<size_t>(q)];
        int image = q == 0 ? 0 : ranks[static_cast<size_t>(q) - 1];
        dims.push_back(kernel - image);
    }
    return dims;
}

}  // namespace

std::vector<int> base_cohomology_dims(const RelativeModel& m, int max_degree) {
    return cohomology_dims(m, max_degree, m.num_base());
}

std::vector<int> total_cohomology_dims(const RelativeModel& m, int max_degree) {
    return cohomology_dims(m, max_degree, -1);
}

}  // namespace cga
