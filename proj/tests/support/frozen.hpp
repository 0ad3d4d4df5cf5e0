#pragma once
/*
 * frozen.hpp
 * ----------
 * Expected values recorded from the reference enumerator (run
 * tools/oracle-dump to regenerate). Tests compare the engine against these
 * numbers; on any disagreement the enumerator's value is the one to trust.
 */

#include <map>
#include <string>

namespace frozen {

// Nonzero derivation-homology dimensions over the model's default window,
// keyed by catalog key or fixture name; absent degrees are zero.
inline const std::map<int, int>& homology_dims(const std::string& key) {
    static const std::map<std::string, std::map<int, int>> table = {
        {"hopf_s7s3_s4", {{3, 2}}},
        {"pathspace_s2", {{1, 1}, {2, 1}}},
        {"pathspace_s3", {{2, 1}}},
        {"pathspace_s5", {{4, 1}}},
        {"sphere2", {}},
        {"sphere3", {}},
        {"sphere4", {}},
        {"sphere7", {}},
        {"cpn2", {}},
        {"cpn3", {}},
        {"point", {}},
        {"product:sphere2/sphere3", {{1, 1}, {3, 1}}},
        {"product:sphere3/sphere3", {{3, 1}}},
        {"product:sphere3/sphere2", {{3, 1}}},
        {"product:sphere2/sphere2", {{1, 1}, {3, 1}}},
        {"product:cpn2/sphere3", {{1, 1}, {3, 1}}},
        {"product:point/sphere2", {{3, 1}}},
        {"product:sphere2/point", {}},
        {"fixture:hopf_w7", {{3, 2}, {4, 1}, {7, 1}}},
        {"fixture:bch2", {{3, 2}}},
        {"fixture:bch3", {{3, 6}, {6, 1}}},
        {"fixture:nilcap", {{2, 9}, {4, 5}, {6, 2}, {8, 1}}},
    };
    return table.at(key);
}

// dim H₀(Der_♯), same key space.
inline int h0_sharp(const std::string& key) {
    static const std::map<std::string, int> table = {
        {"hopf_s7s3_s4", 1},
        {"pathspace_s2", 0},
        {"pathspace_s3", 0},
        {"pathspace_s5", 0},
        {"sphere2", 0},
        {"sphere3", 0},
        {"sphere4", 0},
        {"sphere7", 0},
        {"cpn2", 0},
        {"cpn3", 0},
        {"point", 0},
        {"product:sphere2/sphere3", 0},
        {"product:sphere3/sphere3", 1},
        {"product:sphere3/sphere2", 1},
        {"product:sphere2/sphere2", 0},
        {"product:cpn2/sphere3", 0},
        {"product:point/sphere2", 0},
        {"product:sphere2/point", 0},
        {"fixture:hopf_w7", 2},
        {"fixture:bch2", 3},
        {"fixture:bch3", 10},
        {"fixture:nilcap", 13},
    };
    return table.at(key);
}

}  // namespace frozen
