#include "lch/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <limits>

namespace lch {

std::optional<std::vector<std::vector<Rat>>> solve_rational(std::vector<std::vector<Rat>> A,
                                                             std::vector<std::vector<Rat>> B)
{
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    const int k = m ? static_cast<int>(B[0].size()) : 0;
    std::vector<int> pivcol;
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (A[i][c] != Rat(0)) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(A[p], A[r]);
        std::swap(B[p], B[r]);
        Rat inv = Rat(1) / A[r][c];
        for (int j = c; j < n; ++j)
            A[r][j] *= inv;
        for (int j = 0; j < k; ++j)
            B[r][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || A[i][c] == Rat(0))
                continue;
            Rat f = A[i][c];
            for (int j = c; j < n; ++j)
                A[i][j] -= f * A[r][j];
            for (int j = 0; j < k; ++j)
                B[i][j] -= f * B[r][j];
        }
        pivcol.push_back(c);
        ++r;
    }
    for (int i = r; i < m; ++i)
        for (int j = 0; j < k; ++j)
            if (B[i][j] != Rat(0))
                return std::nullopt;
    std::vector<std::vector<Rat>> x(n, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < r; ++i)
        x[pivcol[i]] = B[i];
    return x;
}

namespace {

struct Tableau {
    int m, n;  // rows, columns (without rhs)
    std::vector<std::vector<double>> t;  // m+1 rows, n+1 cols; last row objective
    std::vector<int> basis;
    static constexpr double eps = 1e-9;

    void pivot(int r, int c)
    {
        double inv = 1.0 / t[r][c];
        for (double& v : t[r])
            v *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == r)
                continue;
            double f = t[i][c];
            if (std::fabs(f) < 1e-15)
                continue;
            for (int j = 0; j <= n; ++j)
                t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // minimise the objective row; columns >= limit are never entered
    bool run(int limit)
    {
        for (int it = 0; it < 100000; ++it) {
            int c = -1;
            for (int j = 0; j < limit; ++j)
                if (t[m][j] < -eps) {
                    c = j;
                    break;
                }
            if (c < 0)
                return true;
            int r = -1;
            double best = 0;
            for (int i = 0; i < m; ++i) {
                if (t[i][c] > eps) {
                    double ratio = t[i][n] / t[i][c];
                    if (r < 0 || ratio < best - eps || (std::fabs(ratio - best) <= eps && basis[i] < basis[r])) {
                        r = i;
                        best = ratio;
                    }
                }
            }
            if (r < 0)
                return false;
            pivot(r, c);
        }
        return false;
    }
};

}  // namespace

LpResult lp_minimize(const std::vector<double>& c, const std::vector<LpRow>& rows)
{
    const int nv = static_cast<int>(c.size());
    const int m = static_cast<int>(rows.size());
    int nslack = 0;
    for (const auto& r : rows)
        if (r.sense != 0)
            ++nslack;
    const int nart = m;
    Tableau T;
    T.m = m;
    T.n = nv + nslack + nart;
    T.t.assign(m + 1, std::vector<double>(T.n + 1, 0.0));
    T.basis.assign(m, 0);
    int s = 0;
    for (int i = 0; i < m; ++i) {
        LpRow r = rows[i];
        r.a.resize(nv, 0.0);
        double sign = r.b < 0 ? -1.0 : 1.0;
        for (int j = 0; j < nv; ++j)
            T.t[i][j] = sign * r.a[j];
        if (r.sense != 0) {
            // a.x - s = b for >=, a.x + s = b for <=
            T.t[i][nv + s] = sign * (r.sense > 0 ? -1.0 : 1.0);
            ++s;
        }
        T.t[i][nv + nslack + i] = 1.0;
        T.t[i][T.n] = sign * r.b;
        T.basis[i] = nv + nslack + i;
    }
    // phase 1
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= T.n; ++j)
            if (j < nv + nslack || j == T.n)
                T.t[m][j] -= T.t[i][j];
    T.run(nv + nslack);
    LpResult res;
    if (T.t[m][T.n] < -1e-7) {
        res.status = LpResult::Infeasible;
        return res;
    }
    // drive artificials out of the basis
    for (int i = 0; i < m; ++i) {
        if (T.basis[i] >= nv + nslack) {
            for (int j = 0; j < nv + nslack; ++j)
                if (std::fabs(T.t[i][j]) > 1e-9) {
                    T.pivot(i, j);
                    break;
                }
        }
    }
    // phase 2
    std::fill(T.t[m].begin(), T.t[m].end(), 0.0);
    for (int j = 0; j < nv; ++j)
        T.t[m][j] = c[j];
    for (int i = 0; i < m; ++i) {
        int b = T.basis[i];
        if (b < nv && std::fabs(c[b]) > 0) {
            double f = T.t[m][b];
            for (int j = 0; j <= T.n; ++j)
                T.t[m][j] -= f * T.t[i][j];
        }
    }
    if (!T.run(nv + nslack)) {
        res.status = LpResult::Unbounded;
        return res;
    }
    res.status = LpResult::Optimal;
    res.x.assign(nv, 0.0);
    for (int i = 0; i < m; ++i)
        if (T.basis[i] < nv)
            res.x[T.basis[i]] = T.t[i][T.n];
    res.value = 0;
    for (int j = 0; j < nv; ++j)
        res.value += c[j] * res.x[j];
    return res;
}

int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols)
{
    int rank = 0;
    const int nr = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < nr; ++c) {
        const int w = c / 64;
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        int p = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[i][w] & bit) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(rows[p], rows[rank]);
        for (int i = 0; i < nr; ++i) {
            if (i != rank && (rows[i][w] & bit)) {
                for (std::size_t k = w; k < rows[i].size(); ++k)
                    rows[i][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

int gf2_rank_parallel(std::vector<std::vector<std::uint64_t>> rows, int cols)
{
    int rank = 0;
    const int nr = static_cast<int>(rows.size());
    for (int c = 0; c < cols && rank < nr; ++c) {
        const int w = c / 64;
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        int p = -1;
        for (int i = rank; i < nr; ++i)
            if (rows[i][w] & bit) {
                p = i;
                break;
            }
        if (p < 0)
            continue;
        std::swap(rows[p], rows[rank]);
        const auto& piv = rows[rank];
#pragma omp parallel for schedule(static)
        for (int i = 0; i < nr; ++i) {
            if (i != rank && (rows[i][w] & bit)) {
                for (std::size_t k = w; k < rows[i].size(); ++k)
                    rows[i][k] ^= piv[k];
            }
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<int> sym_diff(const std::vector<int>& x, const std::vector<int>& y)
{
    std::vector<int> out;
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::optional<std::vector<int>> gf2_solve_sparse(const std::vector<std::vector<int>>& columns,
                                                 std::vector<int> b)
{
    // column reduction keyed on the largest row index
    struct Pivot {
        std::vector<int> v, combo;
    };
    std::map<int, Pivot> pivots;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        std::vector<int> v = columns[j], combo{j};
        while (!v.empty()) {
            auto it = pivots.find(v.back());
            if (it == pivots.end())
                break;
            v = sym_diff(v, it->second.v);
            combo = sym_diff(combo, it->second.combo);
        }
        if (!v.empty()) {
            int low = v.back();
            pivots.emplace(low, Pivot{std::move(v), std::move(combo)});
        }
    }
    std::vector<int> used;
    while (!b.empty()) {
        auto it = pivots.find(b.back());
        if (it == pivots.end())
            return std::nullopt;
        b = sym_diff(b, it->second.v);
        used = sym_diff(used, it->second.combo);
    }
    return used;
}

}  // namespace lch
