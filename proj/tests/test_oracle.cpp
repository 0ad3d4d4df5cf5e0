/*
 * test_oracle.cpp
 * ---------------
 * Anchors the reference enumerator itself on values known independently of
 * either implementation: π_*(aut₁ Sⁿ)⊗Q for the B = point models and the
 * classically computed S⁷×S³ → S⁴ example. The enumerator shares no algebra
 * or elimination code with the engine, so agreement here plus agreement
 * with the engine (asserted elsewhere) ties both to the literature values.
 */

#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "cga/catalog.hpp"
#include "support/fixtures.hpp"
#include "support/frozen.hpp"
#include "support/oracle.hpp"

using namespace cga;

TEST_CASE("oracle anchor: aut(S^2) has rational homotopy Q in degree 3 only") {
    // ∧(x2, y3), dy = x² over a point.
    ModelPtr m = fixtures::make_model({}, {{"x2", 2}, {"y3", 3}}, {{"y3", "x2^2"}});
    std::map<int, int> dims = oracle::homology_dims(*m, 1, 6);
    for (const auto& [degree, dim] : dims) {
        CHECK(dim == (degree == 3 ? 1 : 0));
    }
    CHECK(dims.at(3) == 1);
}

TEST_CASE("oracle anchor: aut(S^3) has rational homotopy Q in degree 3 only") {
    ModelPtr m = fixtures::make_model({}, {{"w3", 3}}, {});
    std::map<int, int> dims = oracle::homology_dims(*m, 1, 6);
    for (const auto& [degree, dim] : dims) {
        CHECK(dim == (degree == 3 ? 1 : 0));
    }
    CHECK(dims.at(3) == 1);
}

TEST_CASE("oracle anchor: trivial S^3 bundle over S^2") {
    // dim H_q = dim H^{3−q}(S²;Q): degrees 1 and 3 carry Q.
    ModelPtr m = catalog_build("product:sphere2/sphere3").model;
    std::map<int, int> dims = oracle::homology_dims(*m, 1, 6);
    CHECK(dims.at(1) == 1);
    CHECK(dims.at(2) == 0);
    CHECK(dims.at(3) == 1);
    CHECK(dims.at(4) == 0);
    CHECK(dims.at(5) == 0);
    CHECK(dims.at(6) == 0);
    CHECK(oracle::h0_sharp(*m) == 0);  // H³(S²;Q) = 0
}

TEST_CASE("oracle anchor: hopf example sharp group is a line") {
    // The S⁷×S³ → S⁴ fibration has E_♯(p)_Q of rank 1 (the class w3p ↦ w3).
    ModelPtr m = catalog_build("hopf_s7s3_s4").model;
    CHECK(oracle::h0_sharp(*m) == 1);
    std::map<int, int> dims = oracle::homology_dims(*m, 1, 14);
    CHECK(dims.at(3) == 2);
    int total = 0;
    for (const auto& [degree, dim] : dims) total += dim;
    CHECK(total == 2);
}

TEST_CASE("frozen table matches a live oracle run") {
    // The frozen header is a transcript of tools/oracle-dump; keep it honest.
    for (const std::string& key : catalog_default_keys()) {
        ModelPtr m = catalog_build(key).model;
        int hi = std::max(1, 2 * m->max_degree());
        std::map<int, int> dims = oracle::homology_dims(*m, 1, hi);
        const std::map<int, int>& expected = frozen::homology_dims(key);
        for (const auto& [degree, dim] : dims) {
            auto it = expected.find(degree);
            CHECK(dim == (it == expected.end() ? 0 : it->second));
        }
        CHECK(oracle::h0_sharp(*m) == frozen::h0_sharp(key));
    }
}

TEST_CASE("frozen table matches a live oracle run on the fixtures") {
    const std::pair<const char*, ModelPtr> models[] = {
        {"fixture:hopf_w7", fixtures::hopf_w7()},
        {"fixture:bch2", fixtures::bch2()},
        {"fixture:bch3", fixtures::bch3()},
        {"fixture:nilcap", fixtures::nilcap()},
    };
    for (const auto& [key, model] : models) {
        int hi = std::max(1, 2 * model->max_degree());
        std::map<int, int> dims = oracle::homology_dims(*model, 1, hi);
        const std::map<int, int>& expected = frozen::homology_dims(key);
        for (const auto& [degree, dim] : dims) {
            auto it = expected.find(degree);
            CHECK(dim == (it == expected.end() ? 0 : it->second));
        }
        CHECK(oracle::h0_sharp(*model) == frozen::h0_sharp(key));
    }
}
