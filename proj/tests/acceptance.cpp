/*
 * acceptance.cpp
 * --------------
 * The acceptance gate. Each criterion prints exactly one line,
 * "criterion N (...): pass" or "criterion N (...): FAIL: reason", and the
 * process exit status is the number of failed criteria. Every comparison is
 * exact rational equality; randomized suites run on fixed seeds.
 */

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cga/catalog.hpp"
#include "cga/esharp.hpp"
#include "cga/homology.hpp"
#include "cga/invariants.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"
#include "support/subprocess.hpp"

using namespace cga;

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Polynomial random_homogeneous(std::mt19937& rng, const AlgebraPtr& alg, int degree) {
    Polynomial p(alg);
    for (const Monomial& m : monomial_basis(*alg, degree)) {
        int c = pick(rng, -2, 2);
        if (c != 0) {
            p += Polynomial::monomial(alg, m, c);
        }
    }
    return p;
}

Polynomial random_polynomial(std::mt19937& rng, const AlgebraPtr& alg) {
    Polynomial p = random_homogeneous(rng, alg, pick(rng, 1, 6));
    p += random_homogeneous(rng, alg, pick(rng, 1, 6));
    return p;
}

// A random nonzero derivation of the model in some degree with a nonempty
// coordinate space; falls back to the zero derivation in degree 0.
Derivation random_derivation(std::mt19937& rng, const ModelPtr& m) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        int degree = pick(rng, -3, 5);
        DerivationSpace space = DerivationSpace::make(m, degree);
        if (space.dimension() == 0) {
            continue;
        }
        QVector coords(static_cast<size_t>(space.dimension()));
        bool nonzero = false;
        for (Rational& c : coords) {
            c = pick(rng, -2, 2);
            nonzero = nonzero || c != 0;
        }
        if (nonzero) {
            return space.element(coords);
        }
    }
    return Derivation(m, 0);
}

std::map<int, int> dims_of(const HomologyReport& report) {
    std::map<int, int> dims;
    for (const HomologyDegree& hd : report.degrees) {
        dims[hd.degree] = hd.dim;
    }
    return dims;
}

int at_or_zero(const std::map<int, int>& dims, int q) {
    auto it = dims.find(q);
    return it == dims.end() ? 0 : it->second;
}

// ---------------------------------------------------------------------------
// 1. Algebra laws: seven property suites, 1000 randomized cases each.
// ---------------------------------------------------------------------------
std::string criterion_algebra_laws() {
    std::mt19937 rng(61251);

    std::vector<AlgebraPtr> algebras;
    for (int i = 0; i < 6; ++i) {
        std::vector<Generator> gens;
        int count = pick(rng, 2, 4);
        for (int g = 0; g < count; ++g) {
            gens.push_back({"g" + std::to_string(g), pick(rng, 1, 5)});
        }
        algebras.push_back(make_algebra(gens));
    }
    auto any_algebra = [&]() -> const AlgebraPtr& {
        return algebras[static_cast<size_t>(pick(rng, 0, static_cast<int>(algebras.size()) - 1))];
    };

    for (int t = 0; t < 1000; ++t) {
        const AlgebraPtr& alg = any_algebra();
        int da = pick(rng, 1, 6);
        int db = pick(rng, 1, 6);
        Polynomial a = random_homogeneous(rng, alg, da);
        Polynomial b = random_homogeneous(rng, alg, db);
        Polynomial rhs = b * a;
        if ((da * db) % 2 != 0) {
            rhs *= Rational(-1);
        }
        if (!(a * b == rhs)) {
            return "Koszul commutativity failed at case " + std::to_string(t);
        }
    }

    for (int t = 0; t < 1000; ++t) {
        const AlgebraPtr& alg = any_algebra();
        Polynomial a = random_polynomial(rng, alg);
        Polynomial b = random_polynomial(rng, alg);
        Polynomial c = random_polynomial(rng, alg);
        if (!((a * b) * c == a * (b * c))) {
            return "associativity failed at case " + std::to_string(t);
        }
    }

    std::vector<ModelPtr> pool = {
        catalog_build("hopf_s7s3_s4").model,
        catalog_build("pathspace_s2").model,
        catalog_build("product:sphere2/sphere3").model,
        fixtures::hopf_w7(),
        fixtures::bch3(),
        fixtures::nilcap(),
    };
    auto any_model = [&]() -> const ModelPtr& {
        return pool[static_cast<size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
    };

    for (int t = 0; t < 1000; ++t) {
        const ModelPtr& m = any_model();
        Derivation theta = random_derivation(rng, m);
        int da = pick(rng, 1, 5);
        Polynomial a = random_homogeneous(rng, m->algebra(), da);
        Polynomial b = random_homogeneous(rng, m->algebra(), pick(rng, 1, 5));
        Polynomial rhs = apply(theta, a) * b;
        Polynomial second = a * apply(theta, b);
        if ((theta.degree() * da) % 2 != 0) {
            second *= Rational(-1);
        }
        rhs += second;
        if (!(apply(theta, a * b) == rhs)) {
            return "Leibniz rule failed at case " + std::to_string(t);
        }
    }

    for (int t = 0; t < 1000; ++t) {
        const ModelPtr& m = any_model();
        Polynomial a = random_polynomial(rng, m->algebra());
        if (!m->apply_D(m->apply_D(a)).is_zero()) {
            return "d-squared failed at case " + std::to_string(t);
        }
    }

    for (int t = 0; t < 1000; ++t) {
        const ModelPtr& m = any_model();
        Derivation theta = random_derivation(rng, m);
        if (!differential(differential(theta)).is_zero()) {
            return "derivation differential squared failed at case " + std::to_string(t);
        }
    }

    for (int t = 0; t < 1000; ++t) {
        const ModelPtr& m = any_model();
        Derivation a = random_derivation(rng, m);
        Derivation b = random_derivation(rng, m);
        Derivation c = random_derivation(rng, m);
        Rational sign_ab((a.degree() * b.degree()) % 2 != 0 ? -1 : 1);
        if (!(bracket(a, b) + bracket(b, a) * sign_ab).is_zero()) {
            return "graded antisymmetry failed at case " + std::to_string(t);
        }
        Derivation defect = bracket(a, bracket(b, c)) - bracket(bracket(a, b), c) -
                            bracket(b, bracket(a, c)) * sign_ab;
        if (!defect.is_zero()) {
            return "graded Jacobi failed at case " + std::to_string(t);
        }
    }

    for (int t = 0; t < 1000; ++t) {
        const ModelPtr& m = any_model();
        Derivation a = random_derivation(rng, m);
        Derivation b = random_derivation(rng, m);
        Rational sign_a(a.degree() % 2 != 0 ? -1 : 1);
        Derivation defect = differential(bracket(a, b)) - bracket(differential(a), b) -
                            bracket(a, differential(b)) * sign_a;
        if (!defect.is_zero()) {
            return "bracket chain-map identity failed at case " + std::to_string(t);
        }
    }

    return "";
}

// ---------------------------------------------------------------------------
// 2. Base = point: the derivation homology of a single sphere model reduces
//    to its rational homotopy, certified against the reference enumerator.
// ---------------------------------------------------------------------------
std::string criterion_point_base() {
    struct Case {
        const char* label;
        ModelPtr model;
    };
    std::vector<Case> cases;
    cases.push_back({"S2 as fibre", fixtures::make_model({}, {{"x2", 2}, {"y3", 3}},
                                                         {{"y3", "x2^2"}})});
    cases.push_back({"S3 as fibre", fixtures::make_model({}, {{"w3", 3}}, {})});

    for (const Case& c : cases) {
        std::map<int, int> engine = dims_of(homology(c.model, DegreeWindow{1, 6}));
        std::map<int, int> reference = oracle::homology_dims(*c.model, 1, 6);
        for (int q = 1; q <= 6; ++q) {
            if (at_or_zero(engine, q) != at_or_zero(reference, q)) {
                return std::string(c.label) + ": engine disagrees with the oracle in degree " +
                       std::to_string(q);
            }
            int expected = q == 3 ? 1 : 0;
            if (at_or_zero(engine, q) != expected) {
                return std::string(c.label) + ": H_" + std::to_string(q) + " = " +
                       std::to_string(at_or_zero(engine, q)) + ", expected " +
                       std::to_string(expected);
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 3. Odd-sphere fibre over S²: dims mirror the base cohomology and every
//    bracket constant vanishes.
// ---------------------------------------------------------------------------
std::string criterion_odd_sphere_product() {
    CatalogEntry entry = catalog_build("product:sphere2/sphere3");
    HomologyReport report = homology(entry.model, default_window(*entry.model));
    std::map<int, int> dims = dims_of(report);
    std::map<int, int> expected = {{1, 1}, {2, 0}, {3, 1}};
    for (const auto& [q, dim] : expected) {
        if (at_or_zero(dims, q) != dim) {
            return "H_" + std::to_string(q) + " = " + std::to_string(at_or_zero(dims, q)) +
                   ", expected " + std::to_string(dim);
        }
    }
    for (const auto& [q, dim] : dims) {
        if (expected.find(q) == expected.end() && dim != 0) {
            return "unexpected nonzero H_" + std::to_string(q);
        }
    }
    if (!report.brackets.empty()) {
        return "bracket constants do not all vanish";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 4. Path space of S²: dims {1:1, 2:1}, the square of the degree-1 class is
//    nonzero, nilpotency lower bound 2.
// ---------------------------------------------------------------------------
std::string criterion_path_space() {
    ModelPtr m = catalog_build("pathspace_s2").model;
    HomologyReport report = homology(m, default_window(*m));
    std::map<int, int> dims = dims_of(report);
    for (const auto& [q, dim] : dims) {
        int expected = (q == 1 || q == 2) ? 1 : 0;
        if (dim != expected) {
            return "H_" + std::to_string(q) + " = " + std::to_string(dim) + ", expected " +
                   std::to_string(expected);
        }
    }
    bool square_nonzero = false;
    for (const BracketTerm& t : report.brackets) {
        if (t.deg_i == 1 && t.idx_i == 0 && t.deg_j == 1 && t.idx_j == 0 && t.deg_k == 2 &&
            t.coeff != 0) {
            square_nonzero = true;
        }
    }
    if (!square_nonzero) {
        return "[alpha, alpha] vanishes in H_2";
    }
    int nilpotency = nilpotency_within_window(report);
    if (nilpotency != 2) {
        return "nilpotency lower bound is " + std::to_string(nilpotency) + ", expected 2";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 5. The twisted example: the sharp group is nontrivial, w3p ↦ w3 is a
//    nonzero class, exp/log invert each other exactly, infinite order.
// ---------------------------------------------------------------------------
std::string criterion_sharp_group() {
    ModelPtr m = catalog_build("hopf_s7s3_s4").model;
    ESharpSpace space = ESharpSpace::compute(m);
    if (space.dimension() < 1) {
        return "sharp group has dimension 0";
    }
    Derivation theta(m, 0);
    theta.set_value(m->fibre_ordinal(m->algebra()->find("w3p")),
                    Polynomial::generator(m->algebra(), m->algebra()->find("w3")));
    QVector coords = space.class_coordinates(theta);
    bool nonzero = false;
    for (const Rational& c : coords) {
        nonzero = nonzero || c != 0;
    }
    if (!nonzero) {
        return "the class of w3p -> w3 is zero";
    }
    if (!(log_automorphism(m, *exp_automorphism(theta)) == theta)) {
        return "log(exp(theta)) != theta";
    }
    if (!group_profile(space).infinite_order) {
        return "group profile does not report infinite order";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 6. Across the catalog: nilpotency within the window never exceeds the
//    fibre-degree bound (entries with fibre-minimal W).
// ---------------------------------------------------------------------------
std::string criterion_nilpotency_bound() {
    for (const std::string& key : catalog_default_keys()) {
        CatalogEntry entry = catalog_build(key);
        SamelsonReport report =
            samelson_lie_algebra(entry.model, default_window(*entry.model));
        if (!report.hnil.fibre_minimal) {
            continue;
        }
        if (report.nilpotency_lower_bound > report.hnil.bound) {
            return key + ": nilpotency " + std::to_string(report.nilpotency_lower_bound) +
                   " exceeds bound " + std::to_string(report.hnil.bound);
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 7. BCH well-definedness: classes and products are invariant under
//    representative shifts by genuine boundaries. 200 randomized triples.
// ---------------------------------------------------------------------------
std::string criterion_bch_invariance() {
    std::mt19937 rng(424243);
    std::vector<ModelPtr> models = {fixtures::hopf_w7(), catalog_build("pathspace_s2").model};
    int nonzero_shifts = 0;
    for (int t = 0; t < 200; ++t) {
        const ModelPtr& m = models[static_cast<size_t>(t % 2)];
        ESharpSpace space = ESharpSpace::compute(m);
        DerivationSpace der1 = DerivationSpace::make(m, 1);

        QVector coords(static_cast<size_t>(space.dimension()));
        for (Rational& c : coords) {
            c = pick(rng, -3, 3);
        }
        QVector sigma_coords(static_cast<size_t>(der1.dimension()));
        for (Rational& c : sigma_coords) {
            c = pick(rng, -3, 3);
        }
        Derivation theta = space.representative(coords);
        Derivation boundary = differential(der1.element(sigma_coords));
        if (!boundary.is_zero()) {
            ++nonzero_shifts;
        }

        QVector shifted = space.class_coordinates(theta + boundary);
        if (shifted != coords) {
            return "class changed under a boundary shift at case " + std::to_string(t);
        }
        if (space.dimension() > 0) {
            QVector partner(static_cast<size_t>(space.dimension()));
            for (Rational& c : partner) {
                c = pick(rng, -3, 3);
            }
            if (bch_product(space, shifted, partner) != bch_product(space, coords, partner)) {
                return "bch product changed under a boundary shift at case " + std::to_string(t);
            }
        }
    }
    if (nonzero_shifts < 50) {
        return "too few nonzero boundary shifts (" + std::to_string(nonzero_shifts) +
               ") for the suite to be meaningful";
    }
    return "";
}

// ---------------------------------------------------------------------------
// 8. Oracle equivalence across the whole catalog over default windows.
// ---------------------------------------------------------------------------
std::string criterion_oracle_equivalence() {
    for (const std::string& key : catalog_default_keys()) {
        CatalogEntry entry = catalog_build(key);
        DegreeWindow window = default_window(*entry.model);
        std::map<int, int> engine = dims_of(homology(entry.model, window));
        std::map<int, int> reference = oracle::homology_dims(*entry.model, window.lo, window.hi);
        for (int q = window.lo; q <= window.hi; ++q) {
            if (at_or_zero(engine, q) != at_or_zero(reference, q)) {
                return key + ": H_" + std::to_string(q) + " engine " +
                       std::to_string(at_or_zero(engine, q)) + " vs oracle " +
                       std::to_string(at_or_zero(reference, q));
            }
        }
    }
    return "";
}

// ---------------------------------------------------------------------------
// 9. Determinism and round-trip through the command-line binary.
// ---------------------------------------------------------------------------
std::string criterion_determinism() {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / "cga_accept";
    std::filesystem::create_directories(dir);

    std::vector<std::vector<std::string>> commands = {
        {"homology", "--catalog", "hopf_s7s3_s4", "--format", "structured"},
        {"esharp", "--catalog", "hopf_s7s3_s4", "--format", "structured"},
        {"invariants", "--catalog", "pathspace_s2", "--format", "structured"},
        {"catalog", "list", "--format", "structured"},
    };
    for (const auto& argv : commands) {
        subprocess::Result first = subprocess::run(CGA_CLI_PATH, argv);
        subprocess::Result second = subprocess::run(CGA_CLI_PATH, argv);
        if (first.exit_code != 0 || second.exit_code != 0) {
            return argv[0] + std::string(": nonzero exit status");
        }
        if (first.out.empty() || first.out != second.out) {
            return argv[0] + std::string(": reruns are not byte-identical");
        }
    }

    std::string exported = (dir / "exported.json").string();
    subprocess::Result exp = subprocess::run(
        CGA_CLI_PATH, {"catalog", "export", "--catalog", "hopf_s7s3_s4", "--out", exported});
    if (exp.exit_code != 0) {
        return "catalog export failed";
    }
    for (const char* command : {"homology", "esharp"}) {
        subprocess::Result from_file = subprocess::run(
            CGA_CLI_PATH, {command, "--model", exported, "--format", "structured"});
        subprocess::Result from_key = subprocess::run(
            CGA_CLI_PATH, {command, "--catalog", "hopf_s7s3_s4", "--format", "structured"});
        if (from_file.exit_code != 0 || from_key.exit_code != 0) {
            return std::string(command) + ": recompute after export failed";
        }
        if (from_file.out != from_key.out) {
            return std::string(command) + ": export/import recompute differs from the original";
        }
    }
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<std::string()> run;
    };
    std::vector<Criterion> criteria = {
        {"algebra laws", criterion_algebra_laws},
        {"Sullivan recovery at a point", criterion_point_base},
        {"odd-sphere fibre over S^2", criterion_odd_sphere_product},
        {"path-space nilpotency", criterion_path_space},
        {"sharp group of the twisted example", criterion_sharp_group},
        {"nilpotency vs fibre-degree bound", criterion_nilpotency_bound},
        {"BCH well-definedness", criterion_bch_invariance},
        {"oracle equivalence", criterion_oracle_equivalence},
        {"determinism and round-trip", criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::string failure;
        try {
            failure = criteria[i].run();
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        std::cout << "criterion " << (i + 1) << " (" << criteria[i].label << "): ";
        if (failure.empty()) {
            std::cout << "pass\n";
        } else {
            std::cout << "FAIL: " << failure << "\n";
            ++failures;
        }
    }
    return failures;
}
