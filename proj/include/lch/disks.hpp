#pragma once
#include <string>
#include <vector>

#include "lch/diagram.hpp"

namespace lch {

struct DiskCorner {
    int crossing;
    int quadrant;
    bool positive;
};

// An immersed polygon, boundary read counterclockwise from its first positive corner.
struct Disk {
    std::vector<DiskCorner> corners;  // corners[0] is the starting positive corner
    std::vector<Dart> boundary;       // darts in walking order, first one leaves corners[0]
    std::vector<char> turns;          // per dart: 'S' straight or 'C' corner at its end
    std::vector<int> coverage;        // per region index
    std::vector<int> negatives;       // crossing indices of negative corners in order
    int split = -1;                   // two positive corners: negatives before the second one
    std::string key() const;          // canonical text, used for comparisons
};

long long default_budget();  // 10^6 unless LCH_BUDGET is set

std::vector<Disk> enumerate_one_positive(const Diagram& d, int a, long long budget = default_budget());
std::vector<Disk> enumerate_two_positive(const Diagram& d, int c, int a, long long budget = default_budget());

// Exhaustive search over coverage vectors. positives: one chord, or (c, a).
// complete is cleared when some region could need coverage above bound.
std::vector<Disk> coverage_oracle(const Diagram& d, const std::vector<int>& positives, int bound,
                                  bool* complete = nullptr);

// true iff both lists hold the same disks (as multisets)
bool same_disks(const std::vector<Disk>& x, const std::vector<Disk>& y);
std::string dump_disks(const Diagram& d, const std::vector<Disk>& disks);

// areas used for search bounds: the diagram's own, else an LP realisation
std::vector<double> search_areas(const Diagram& d);

}  // namespace lch
