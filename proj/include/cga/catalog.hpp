#pragma once
/*
 * catalog.hpp
 * -----------
 * Built-in, validated relative models: the S⁷×S³ → S⁴ example, path-space
 * fibrations over spheres, standalone base models (spheres, complex
 * projective spaces, the point), and trivial products product:BASE/FIBRE.
 * Entries carry the topological flags consumed by the invariant checks and
 * an optional golden homology-dimension fragment.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cga/sullivan.hpp"

namespace cga {

struct CatalogFlags {
    // n when the fibre is S^{2n+1} with its one-generator model.
    std::optional<int> odd_sphere_fibre_n;
    // Topological hypothesis (injectivity of i_♯); an input, never inferred.
    bool injective_i_sharp = false;
    // The induced differential on ∧W has zero linear part.
    bool fibre_minimal_W = true;
    // Entry models a path-space fibration (acyclic total algebra).
    bool path_space = false;
};

struct CatalogEntry {
    std::string key;
    ModelPtr model;
    CatalogFlags flags;
    // Golden fragment: degree → expected derivation-homology dimension.
    // Values recorded from the independent reference enumerator
    // (tools/oracle-dump); empty when no values are pinned.
    std::map<int, int> expected_dims;
};

// Builds a catalog entry. Keys:
//   point, sphereN (N ≥ 1), cpnN (N ≥ 1), hopf_s7s3_s4,
//   pathspace_s2, pathspace_sN (odd N ≥ 3),
//   product:BASE/FIBRE with BASE, FIBRE fibre-free keys (point/sphere/cpn).
// Unknown keys or invalid parameters raise parse_error. Every returned
// entry passes structural and relative-minimality validation.
CatalogEntry catalog_build(const std::string& key);

// The keys exercised by default across tests and the CLI listing.
std::vector<std::string> catalog_default_keys();

}  // namespace cga
