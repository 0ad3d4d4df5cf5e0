#pragma once
/*
 * fixtures.hpp
 * ------------
 * Extra relative models used by the tests and by the reference-enumerator
 * dump (tools/oracle-dump). Declared once here so the values recorded from
 * the enumerator always refer to exactly these models.
 */

#include <string>
#include <utility>
#include <vector>

#include "cga/sullivan.hpp"

namespace fixtures {

inline cga::ModelPtr make_model(
    std::vector<cga::Generator> base, std::vector<cga::Generator> fibre,
    std::vector<std::pair<std::string, std::string>> differential) {
    cga::ModelData data;
    data.base_generators = std::move(base);
    data.fibre_generators = std::move(fibre);
    data.differential = std::move(differential);
    return cga::RelativeModel::create(data);
}

// The S⁷×S³ → S⁴ model extended by one closed degree-7 fibre generator.
// Gives im(𝒟: Der¹ → Der⁰) ∩ Z_♯ = span{w7 ↦ −v4·w3} ≠ 0, so group classes
// are exercised against genuinely nonzero representative shifts.
inline cga::ModelPtr hopf_w7() {
    return make_model({{"v4", 4}, {"v7", 7}}, {{"w3", 3}, {"w3p", 3}, {"w7", 7}},
                      {{"v7", "v4^2"}, {"w3p", "v4"}});
}

// Minimal model with a nonabelian degree-0 sharp group: θ: w3p↦w3, φ: w3↦v3
// have [θ,φ](w3p) = −v3 and the BCH series stops at second order.
inline cga::ModelPtr bch2() {
    return make_model({{"v3", 3}, {"u4", 4}}, {{"w3", 3}, {"w3p", 3}}, {{"w3p", "u4"}});
}

// Third-order BCH witness: θ: w6↦wa3·wb3, wa3↦v3 and φ: wb3↦u3 satisfy
// [θ,[θ,φ]](w6) = u3·v3 ≠ 0 while every ≥4-fold bracket vanishes.
inline cga::ModelPtr bch3() {
    return make_model({{"v3", 3}, {"u3", 3}}, {{"wa3", 3}, {"wb3", 3}, {"w6", 6}}, {});
}

// Nilpotence-index witness: the sharp degree-0 derivation θ(a2)=v2,
// θ(x4)=a2², θ(y8)=x4² has θ⁷(y8) = 80·v2⁴ ≠ 0 and θ⁸ = 0.
inline cga::ModelPtr nilcap() {
    return make_model({{"v2", 2}}, {{"a2", 2}, {"x4", 4}, {"y8", 8}}, {});
}

}  // namespace fixtures
