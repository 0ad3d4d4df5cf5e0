/*
 * oracle_dump.cpp
 * ---------------
 * Prints the reference enumerator's numbers for every catalog entry and for
 * the extra fixture models used by the tests: homology dimensions over each
 * model's default window and the degree-zero sharp cokernel dimension.
 * These are the values frozen into the test suite.
 */

#include <algorithm>
#include <iostream>
#include <string>

#include "cga/catalog.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace {

void dump(const std::string& name, const cga::RelativeModel& m) {
    int hi = std::max(1, 2 * m.max_degree());
    std::cout << name << " window 1:" << hi << "\n";
    for (const auto& [degree, dim] : oracle::homology_dims(m, 1, hi)) {
        if (dim != 0) {
            std::cout << name << " H_" << degree << " = " << dim << "\n";
        }
    }
    std::cout << name << " h0_sharp = " << oracle::h0_sharp(m) << "\n";
}

}  // namespace

int main() {
    for (const std::string& key : cga::catalog_default_keys()) {
        dump(key, *cga::catalog_build(key).model);
    }

    // Fixture models used directly by the tests.
    dump("fixture:hopf_w7", *fixtures::hopf_w7());
    dump("fixture:bch2", *fixtures::bch2());
    dump("fixture:bch3", *fixtures::bch3());
    dump("fixture:nilcap", *fixtures::nilcap());
    return 0;
}
