/*
 * catalog.cpp
 * -----------
 * Construction of the built-in models. Product entries keep the base
 * entry's generator names, rename a single odd-sphere fibre generator to
 * w{N}, keep other fibre names, and append "p" to any fibre name until it
 * no longer collides with a base name.
 */

#include "cga/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace cga {

namespace {

struct RawEntry {
    ModelData data;
    CatalogFlags flags;
    std::map<int, int> expected_dims;
};

bool parse_uint_suffix(const std::string& key, const std::string& prefix, int& n) {
    if (key.size() <= prefix.size() || key.compare(0, prefix.size(), prefix) != 0) {
        return false;
    }
    std::string digits = key.substr(prefix.size());
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    n = std::stoi(digits);
    return true;
}

std::string num(int n) { return std::to_string(n); }

// Standalone space models (all generators in the base, no fibre).
ModelData sphere_data(int n) {
    ModelData d;
    if (n % 2 != 0) {
        d.base_generators.push_back({"v" + num(n), n});
    } else {
        d.base_generators.push_back({"x" + num(n), n});
        d.base_generators.push_back({"y" + num(2 * n - 1), 2 * n - 1});
        d.differential.emplace_back("y" + num(2 * n - 1), "x" + num(n) + "^2");
    }
    return d;
}

ModelData cpn_data(int n) {
    ModelData d;
    d.base_generators.push_back({"x2", 2});
    d.base_generators.push_back({"y" + num(2 * n + 1), 2 * n + 1});
    d.differential.emplace_back("y" + num(2 * n + 1), "x2^" + num(n + 1));
    return d;
}

RawEntry hopf_entry() {
    RawEntry e;
    e.data.base_generators = {{"v4", 4}, {"v7", 7}};
    e.data.fibre_generators = {{"w3", 3}, {"w3p", 3}};
    e.data.differential.emplace_back("v7", "v4^2");
    e.data.differential.emplace_back("w3p", "v4");
    e.flags.injective_i_sharp = false;
    e.expected_dims = {{1, 0}, {2, 0}, {3, 2}, {4, 0}, {5, 0}, {6, 0}, {7, 0}};
    return e;
}

RawEntry pathspace_entry(int n) {
    RawEntry e;
    e.flags.path_space = true;
    if (n == 2) {
        e.data.base_generators = {{"x2", 2}, {"y3", 3}};
        e.data.fibre_generators = {{"xbar1", 1}, {"ybar2", 2}};
        e.data.differential.emplace_back("y3", "x2^2");
        e.data.differential.emplace_back("xbar1", "x2");
        e.data.differential.emplace_back("ybar2", "y3 - xbar1*x2");
        e.expected_dims = {{1, 1}, {2, 1}, {3, 0}, {4, 0}, {5, 0}, {6, 0}};
        return e;
    }
    if (n < 3 || n % 2 == 0) {
        throw parse_error("pathspace_sN requires N = 2 or odd N >= 3");
    }
    e.data.base_generators = {{"v" + num(n), n}};
    e.data.fibre_generators = {{"vbar" + num(n - 1), n - 1}};
    e.data.differential.emplace_back("vbar" + num(n - 1), "v" + num(n));
    e.expected_dims[n - 1] = 1;
    for (int q = 1; q <= 2 * n; ++q) {
        if (q != n - 1) {
            e.expected_dims[q] = 0;
        }
    }
    return e;
}

// Replaces whole NAME tokens in a differential expression.
std::string rename_tokens(const std::string& text, const std::map<std::string, std::string>& map) {
    std::string out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            std::string name = text.substr(i, j - i);
            auto it = map.find(name);
            out += it == map.end() ? name : it->second;
            i = j;
        } else {
            out += c;
            ++i;
        }
    }
    return out;
}

// Fibre-free component of a product key: point, sphereN, or cpnN.
ModelData component_data(const std::string& key) {
    int n = 0;
    if (key == "point") {
        return {};
    }
    if (parse_uint_suffix(key, "sphere", n) && n >= 1) {
        return sphere_data(n);
    }
    if (parse_uint_suffix(key, "cpn", n) && n >= 1) {
        return cpn_data(n);
    }
    throw parse_error("product components must be fibre-free keys (point, sphereN, cpnN), got '" +
                      key + "'");
}

RawEntry product_entry(const std::string& base_key, const std::string& fibre_key) {
    ModelData base = component_data(base_key);
    ModelData fibre = component_data(fibre_key);

    RawEntry e;
    e.data.base_generators = base.base_generators;
    e.data.differential = base.differential;

    std::map<std::string, std::string> rename;
    int sphere_n = 0;
    bool odd_sphere = parse_uint_suffix(fibre_key, "sphere", sphere_n) && sphere_n % 2 != 0;
    std::set<std::string> base_names;
    for (const Generator& g : base.base_generators) {
        base_names.insert(g.name);
    }
    for (const Generator& g : fibre.base_generators) {
        std::string name = odd_sphere ? "w" + num(sphere_n) : g.name;
        while (base_names.count(name) != 0) {
            name += "p";
        }
        rename[g.name] = name;
        e.data.fibre_generators.push_back({name, g.degree});
    }
    bool fibre_d_zero = fibre.differential.empty();
    for (const auto& [name, text] : fibre.differential) {
        e.data.differential.emplace_back(rename.at(name), rename_tokens(text, rename));
    }

    e.flags.injective_i_sharp = fibre_d_zero;
    if (odd_sphere) {
        e.flags.odd_sphere_fibre_n = (sphere_n - 1) / 2;
    }
    return e;
}

std::map<int, int> zero_dims(int hi) {
    std::map<int, int> dims;
    for (int q = 1; q <= hi; ++q) {
        dims[q] = 0;
    }
    return dims;
}

std::map<int, int> product_expected(const std::string& key) {
    // Golden fragments for the default product entries, recorded from the
    // reference enumerator.
    if (key == "product:sphere2/sphere3") {
        return {{1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:sphere3/sphere3") {
        return {{1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:sphere3/sphere2") {
        return {{1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:sphere2/sphere2") {
        return {{1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:cpn2/sphere3") {
        return {{1, 1}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:point/sphere2") {
        return {{1, 0}, {2, 0}, {3, 1}, {4, 0}, {5, 0}, {6, 0}};
    }
    if (key == "product:sphere2/point") {
        return zero_dims(6);
    }
    return {};
}

}  // namespace

CatalogEntry catalog_build(const std::string& key) {
    RawEntry raw;
    int n = 0;
    if (key == "hopf_s7s3_s4") {
        raw = hopf_entry();
    } else if (parse_uint_suffix(key, "pathspace_s", n)) {
        raw = pathspace_entry(n);
    } else if (key.compare(0, 8, "product:") == 0) {
        std::string rest = key.substr(8);
        size_t slash = rest.find('/');
        if (slash == std::string::npos) {
            throw parse_error("product key must look like product:BASE/FIBRE");
        }
        raw = product_entry(rest.substr(0, slash), rest.substr(slash + 1));
        raw.expected_dims = product_expected(key);
    } else if (key == "point" || key.compare(0, 6, "sphere") == 0 || key.compare(0, 3, "cpn") == 0) {
        raw.data = component_data(key);
        raw.expected_dims = zero_dims(4);
    } else {
        throw parse_error(
            "unknown catalog key '" + key +
            "'; valid forms: point, sphereN, cpnN, hopf_s7s3_s4, pathspace_s2, "
            "pathspace_sN (odd N >= 3), product:BASE/FIBRE");
    }

    CatalogEntry entry;
    entry.key = key;
    entry.model = RelativeModel::create(raw.data);
    require_valid(*entry.model, true);
    entry.flags = raw.flags;
    entry.expected_dims = std::move(raw.expected_dims);
    return entry;
}

std::vector<std::string> catalog_default_keys() {
    return {
        "hopf_s7s3_s4",
        "pathspace_s2",
        "pathspace_s3",
        "pathspace_s5",
        "sphere2",
        "sphere3",
        "sphere4",
        "sphere7",
        "cpn2",
        "cpn3",
        "point",
        "product:sphere2/sphere3",
        "product:sphere3/sphere3",
        "product:sphere3/sphere2",
        "product:sphere2/sphere2",
        "product:cpn2/sphere3",
        "product:point/sphere2",
        "product:sphere2/point",
    };
}

}  // namespace cga
