#pragma once
#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace lch {

using Rat = boost::rational<long long>;

// Solve A x = B column-wise over Q. Free unknowns are set to 0.
// Returns nullopt when inconsistent. x has A.cols rows and B.cols columns.
std::optional<std::vector<std::vector<Rat>>> solve_rational(std::vector<std::vector<Rat>> A,
                                                             std::vector<std::vector<Rat>> B);

// Dense two-phase simplex with Bland's rule: minimise c.x, x >= 0.
struct LpRow {
    std::vector<double> a;
    int sense;  // -1 for <=, 0 for ==, +1 for >=
    double b;
};
struct LpResult {
    enum Status { Optimal, Infeasible, Unbounded } status;
    std::vector<double> x;
    double value = 0;
};
LpResult lp_minimize(const std::vector<double>& c, const std::vector<LpRow>& rows);

// GF(2) rank of a dense 0/1 matrix, rows packed in 64-bit words
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols);
int gf2_rank_parallel(std::vector<std::vector<std::uint64_t>> rows, int cols);

// one solution of A x = b over GF(2) with A given by sparse columns
// (sorted row indices); returns the indices of the columns used
std::optional<std::vector<int>> gf2_solve_sparse(const std::vector<std::vector<int>>& columns,
                                                 std::vector<int> b);

}  // namespace lch
