#pragma once
#include <map>
#include <string>
#include <vector>

#include "lch/augmentation.hpp"

namespace lch {

using ResolutionOrder = std::vector<int>;  // b_{i_1}, ..., b_{i_n}, 1-based

long long a_n(int n);
long long catalan_number(int n);
int torus_genus(int n);       // floor((n-1)/2)
int torus_components(int n);  // 1 or 2

bool is_order(const ResolutionOrder& s, int n);
// the adjacent swap at j (0-based) is an isotopy move
bool swap_allowed(const ResolutionOrder& s, int j);
ResolutionOrder normal_form(const ResolutionOrder& s);
std::vector<ResolutionOrder> catalan_classes(int n);
// union-find over all n! orders with the swap rule; returns class count
int catalan_classes_bruteforce(int n, std::map<ResolutionOrder, int>* class_of = nullptr);

bool b_matrix_augmentation(const std::vector<int>& b);  // b_1..b_n values
std::vector<std::vector<int>> b_matrix_augmentations(int n);
// the 2x2 identity [x 1;1 0][1 1;1 0][y 1;1 0] = [x+1 1;1 0][y+1 1;1 0] for one (x, y)
bool boolean_identity(int x, int y);

// chord values of b_1..b_n
std::vector<int> b_values(const Augmentation& e, int n);
std::string render_values(const std::vector<int>& v);

std::vector<int> induced_fast(int n, const ResolutionOrder& s);

struct InducedFilling {
    ResolutionOrder order;
    Augmentation augmentation;
    std::vector<int> values;  // on b_1..b_n
    int saddles = 0, minima = 0, genus = 0;
    int corrected_saddles = 0;  // saddles whose positive-degree images needed repair
    bool certified = true;      // every step passed verify_chain_map
};
InducedFilling induced_augmentation(int n, const ResolutionOrder& s, long long budget = default_budget());

struct CensusRow {
    ResolutionOrder representative;
    std::vector<int> fast, slow;
    int genus = 0;
    int corrected_saddles = 0;
    bool certified = true;
};
struct Census {
    int n = 0;
    std::vector<CensusRow> rows;
    long long expected = 0;  // A_n
    int distinct = 0;
    bool zero_hit = false;
    bool all_hit = false;    // every augmentation (odd n) or every nonzero one (even n)
    bool genus_ok = true, fast_matches_slow = true, certified = true;
};
Census fillings_census(int n, long long budget = default_budget());
Census fillings_census_serial(int n, long long budget = default_budget());

}  // namespace lch
