#pragma once
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lch/cobordism.hpp"

namespace lch {

struct Augmentation {
    TablePtr table;
    std::vector<std::uint8_t> values;  // per generator, 0 off degree 0
    bool operator==(const Augmentation& o) const { return values == o.values; }
    int at(const std::string& name) const { return values[table->at(name)]; }
};

bool is_augmentation(const ChekanovDGA& a, const Augmentation& e, std::string* witness = nullptr);
std::vector<Augmentation> enumerate_augmentations(const ChekanovDGA& a);
std::vector<Augmentation> enumerate_augmentations_serial(const ChekanovDGA& a);

Augmentation pullback(const DgaMorphism& m, const Augmentation& e);
Augmentation pushforward_saddle(const DgaMorphism& m, const Augmentation& e);
Augmentation ground_augmentation();  // the unique augmentation of the empty link

struct LinearizedComplex {
    std::map<int, std::vector<Gen>> basis;  // degree -> generators
    // degree k -> matrix of d: C_k -> C_{k-1}, rows indexed by basis[k-1]
    std::map<int, std::vector<std::vector<std::uint8_t>>> d;
};
LinearizedComplex linearize(const ChekanovDGA& a, const Augmentation& e);
bool d_squared_zero(const LinearizedComplex& c);
std::map<int, int> homology(const LinearizedComplex& c);
std::map<int, int> homology_serial(const LinearizedComplex& c);
int total_rank(const std::map<int, int>& ranks);
bool seidel_check(const std::map<int, int>& ranks, int genus, int boundary_components);
std::string poincare_polynomial(const std::map<int, int>& ranks);

std::string render_augmentation(const Augmentation& e);  // degree-0 chords as name=value
Augmentation parse_augmentation(const std::string& text, const ChekanovDGA& a);

}  // namespace lch
