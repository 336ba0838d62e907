#include "lch/torus.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <exception>
#include <numeric>
#include <set>

#include "lch/error.hpp"

namespace lch {

long long a_n(int n)
{
    if (n < 1)
        throw Error("usage", "n must be positive");
    long long p = 1ll << (n + 1);
    return (p - ((n + 1) % 2 ? -1 : 1)) / 3;
}

long long catalan_number(int n)
{
    long long c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

int torus_genus(int n) { return (n - 1) / 2; }
int torus_components(int n) { return n % 2 ? 1 : 2; }

bool is_order(const ResolutionOrder& s, int n)
{
    if (static_cast<int>(s.size()) != n)
        return false;
    std::vector<int> t = s;
    std::sort(t.begin(), t.end());
    for (int i = 0; i < n; ++i)
        if (t[i] != i + 1)
            return false;
    return true;
}

bool swap_allowed(const ResolutionOrder& s, int j)
{
    int lo = std::min(s[j], s[j + 1]), hi = std::max(s[j], s[j + 1]);
    for (std::size_t p = j + 2; p < s.size(); ++p)
        if (s[p] > lo && s[p] < hi)
            return true;
    return false;
}

ResolutionOrder normal_form(const ResolutionOrder& s)
{
    if (s.size() <= 1)
        return s;
    int last = s.back();
    ResolutionOrder lo, hi;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        (s[i] < last ? lo : hi).push_back(s[i]);
    // hi lives on {last+1, ...}; shift down, normalise, shift back
    for (int& x : hi)
        x -= last;
    lo = normal_form(lo);
    hi = normal_form(hi);
    ResolutionOrder out = lo;
    for (int x : hi)
        out.push_back(x + last);
    out.push_back(last);
    return out;
}

namespace {

void normal_forms(int lo, int hi, std::vector<ResolutionOrder>& out)
{
    if (lo > hi) {
        out.push_back({});
        return;
    }
    for (int last = lo; last <= hi; ++last) {
        std::vector<ResolutionOrder> left, right;
        normal_forms(lo, last - 1, left);
        normal_forms(last + 1, hi, right);
        for (const auto& l : left)
            for (const auto& r : right) {
                ResolutionOrder s = l;
                s.insert(s.end(), r.begin(), r.end());
                s.push_back(last);
                out.push_back(std::move(s));
            }
    }
}

}  // namespace

std::vector<ResolutionOrder> catalan_classes(int n)
{
    std::vector<ResolutionOrder> out;
    normal_forms(1, n, out);
    std::sort(out.begin(), out.end());
    return out;
}

int catalan_classes_bruteforce(int n, std::map<ResolutionOrder, int>* class_of)
{
    std::vector<ResolutionOrder> all;
    ResolutionOrder s(n);
    std::iota(s.begin(), s.end(), 1);
    do
        all.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    std::map<ResolutionOrder, int> index;
    for (std::size_t i = 0; i < all.size(); ++i)
        index[all[i]] = static_cast<int>(i);
    std::vector<int> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (int j = 0; j + 1 < n; ++j)
            if (swap_allowed(all[i], j)) {
                ResolutionOrder t = all[i];
                std::swap(t[j], t[j + 1]);
                parent[find(static_cast<int>(i))] = find(index[t]);
            }
    std::set<int> roots;
    for (std::size_t i = 0; i < all.size(); ++i)
        roots.insert(find(static_cast<int>(i)));
    if (class_of)
        for (std::size_t i = 0; i < all.size(); ++i)
            (*class_of)[all[i]] = find(static_cast<int>(i));
    return static_cast<int>(roots.size());
}

namespace {

using M2 = std::array<int, 4>;  // row major

M2 mul(const M2& x, const M2& y)
{
    return {(x[0] & y[0]) ^ (x[1] & y[2]), (x[0] & y[1]) ^ (x[1] & y[3]), (x[2] & y[0]) ^ (x[3] & y[2]),
            (x[2] & y[1]) ^ (x[3] & y[3])};
}

M2 block(int b) { return {b & 1, 1, 1, 0}; }

}  // namespace

bool b_matrix_augmentation(const std::vector<int>& b)
{
    M2 p{1, 0, 0, 1};
    for (int x : b)
        p = mul(p, block(x));
    return p[0] == 1;
}

std::vector<std::vector<int>> b_matrix_augmentations(int n)
{
    std::vector<std::vector<int>> out;
    for (long long m = 0; m < (1ll << n); ++m) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = (m >> i) & 1;
        if (b_matrix_augmentation(v))
            out.push_back(v);
    }
    return out;
}

bool boolean_identity(int x, int y)
{
    return mul(mul(block(x), block(1)), block(y)) == mul(block(x ^ 1), block(y ^ 1));
}

std::vector<int> b_values(const Augmentation& e, int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = e.at("b" + std::to_string(i + 1));
    return v;
}

std::string render_values(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

// walk the resolutions backwards from the empty link: the chord being
// resolved is 1, its nearest unresolved neighbours flip
std::vector<int> induced_fast(int n, const ResolutionOrder& s)
{
    if (!is_order(s, n))
        throw Error("usage", "not a resolution order of 1.." + std::to_string(n));
    std::vector<int> val(n + 1, 0);
    std::vector<char> alive(n + 2, 0);
    for (int j = n - 1; j >= 0; --j) {
        int q = s[j];
        alive[q] = 1;
        val[q] = 1;
        for (int r = q - 1; r >= 1; --r)
            if (alive[r]) {
                val[r] ^= 1;
                break;
            }
        for (int r = q + 1; r <= n; ++r)
            if (alive[r]) {
                val[r] ^= 1;
                break;
            }
    }
    return {val.begin() + 1, val.end()};
}

InducedFilling induced_augmentation(int n, const ResolutionOrder& s, long long budget)
{
    if (!is_order(s, n))
        throw Error("usage", "not a resolution order of 1.." + std::to_string(n));
    InducedFilling r;
    r.order = s;
    Diagram d = torus_2n_diagram(n);
    ChekanovDGA cur = build_dga(d, budget);
    const ChekanovDGA start = cur;
    DgaMorphism total = identity_morphism(cur);
    auto step = [&](const DgaMorphism& m) {
        if (!verify_chain_map(m).ok)
            r.certified = false;
        total = compose(m, total);
    };
    for (int q : s) {
        std::string a = "b" + std::to_string(q);
        if (is_contractible(d, a) != Contractible::Yes) {
            // isotopy through diagrams with the same crossings: only the areas move
            auto areas = contracting_areas(d, a);
            if (!areas)
                throw Error("precondition", a + " cannot be made contractible on this diagram");
            Diagram moved = with_areas(d, *areas);
            ChekanovDGA next = build_dga(moved, budget);
            step(morphism_isotopy_simple(cur, next, {}));
            d = std::move(moved);
            cur = std::move(next);
        }
        Diagram t = resolve_0(d, a);
        ChekanovDGA tg = build_dga(t, budget);
        DgaMorphism m = morphism_saddle(d, cur, t, tg, a, budget, true);
        if (!m.corrected.empty())
            r.corrected_saddles++;
        step(m);
        r.saddles++;
        d = std::move(t);
        cur = std::move(tg);
    }
    // what is left: one curl per component, each a standard unknot
    while (d.num_crossings() > 0) {
        int v = -1;
        for (const std::string a : {"a1", "a2"}) {
            int w = d.crossing_index(a);
            if (w < 0)
                continue;
            try {
                (void)remove_component(d, d.over_component(w));
                v = w;
                break;
            } catch (const Error&) {
            }
        }
        if (v < 0)
            throw Error("precondition", "no removable unknot left after the resolutions");
        std::string a = d.crossing(v).id;
        Diagram t = remove_component(d, d.over_component(v));
        ChekanovDGA tg = build_dga(t, budget);
        step(morphism_minimum(d, cur, tg, a));
        r.minima++;
        d = std::move(t);
        cur = std::move(tg);
    }
    if (d.num_components() != 0)
        throw Error("precondition", "crossingless circles left after the resolutions");
    r.augmentation = pullback(total, ground_augmentation());
    r.augmentation.table = start.table;
    r.values = b_values(r.augmentation, n);
    r.genus = euler_genus(r.minima, r.saddles, torus_components(n)).genus;
    return r;
}

namespace {

CensusRow census_row(int n, const ResolutionOrder& s, long long budget)
{
    CensusRow row;
    row.representative = s;
    row.fast = induced_fast(n, s);
    InducedFilling f = induced_augmentation(n, s, budget);
    row.slow = f.values;
    row.genus = f.genus;
    row.corrected_saddles = f.corrected_saddles;
    row.certified = f.certified;
    return row;
}

void summarize(Census& c)
{
    std::set<std::vector<int>> hit;
    for (const auto& row : c.rows) {
        hit.insert(row.slow);
        c.genus_ok = c.genus_ok && row.genus == torus_genus(c.n);
        c.fast_matches_slow = c.fast_matches_slow && row.fast == row.slow;
        c.certified = c.certified && row.certified;
    }
    c.distinct = static_cast<int>(hit.size());
    c.zero_hit = hit.count(std::vector<int>(c.n, 0)) > 0;
    c.expected = a_n(c.n);
    std::set<std::vector<int>> all;
    for (auto& v : b_matrix_augmentations(c.n))
        all.insert(v);
    if (c.n % 2) {
        c.all_hit = hit == all;
    } else {
        all.erase(std::vector<int>(c.n, 0));
        c.all_hit = hit == all;
    }
}

}  // namespace

Census fillings_census(int n, long long budget)
{
    Census c;
    c.n = n;
    auto classes = catalan_classes(n);
    c.rows.resize(classes.size());
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(classes.size()); ++i) {
        try {
            c.rows[i] = census_row(n, classes[i], budget);
        } catch (...) {
#pragma omp critical
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);
    summarize(c);
    return c;
}

Census fillings_census_serial(int n, long long budget)
{
    Census c;
    c.n = n;
    for (const auto& s : catalan_classes(n))
        c.rows.push_back(census_row(n, s, budget));
    summarize(c);
    return c;
}

}  // namespace lch
