#pragma once
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/disks.hpp"

namespace lch {

struct ChekanovDGA {
    TablePtr table;
    std::vector<Poly> diff;  // image of each generator
    const Poly& d(Gen g) const { return diff[g]; }
    int size() const { return table->size(); }
};

// differential from one-positive disks; the parallel build spreads generators over threads
ChekanovDGA build_dga(const Diagram& d, long long budget = default_budget());
ChekanovDGA build_dga_serial(const Diagram& d, long long budget = default_budget());
ChekanovDGA empty_dga();  // the ground field, no generators

Poly apply_differential(const ChekanovDGA& a, const Poly& p);  // Leibniz rule

struct Check {
    bool ok = true;
    std::string generator;  // witness on failure
    std::string word;
    std::string what;
};
Check check_d_squared(const ChekanovDGA& a);
Check check_degree(const ChekanovDGA& a);
Check check_action_filtration(const ChekanovDGA& a);

std::string render_dga(const ChekanovDGA& a);

}  // namespace lch
