#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace lch;
using namespace lchtest;

namespace {

std::vector<ResolutionOrder> all_orders(int n)
{
    ResolutionOrder s(n);
    std::iota(s.begin(), s.end(), 1);
    std::vector<ResolutionOrder> out;
    do
        out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

}  // namespace

TEST_CASE("closed forms")
{
    CHECK(a_n(1) == 1);
    CHECK(a_n(2) == 3);
    CHECK(a_n(3) == 5);
    CHECK(a_n(5) == 21);
    for (int n = 1; n < 20; ++n)
        CHECK(a_n(n + 1) == 2 * a_n(n) + (n % 2 ? 1 : -1));
    std::vector<long long> c{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 0; n <= 10; ++n)
        CHECK(catalan_number(n) == c[n]);
    // C_{n+1} = sum C_k C_{n-k}
    for (int n = 0; n < 10; ++n) {
        long long s = 0;
        for (int k = 0; k <= n; ++k)
            s += catalan_number(k) * catalan_number(n - k);
        CHECK(catalan_number(n + 1) == s);
    }
    CHECK(torus_genus(3) == 1);
    CHECK(torus_genus(5) == 2);
    CHECK(torus_genus(4) == 1);
    CHECK(torus_components(4) == 2);
    CHECK(torus_components(7) == 1);
}

TEST_CASE("class enumeration")
{
    CHECK(catalan_classes(0).size() == 1);
    for (int n = 1; n <= 10; ++n) {
        auto cl = catalan_classes(n);
        CHECK(static_cast<long long>(cl.size()) == catalan_number(n));
        std::set<ResolutionOrder> uniq(cl.begin(), cl.end());
        CHECK(uniq.size() == cl.size());
        for (const auto& s : cl) {
            CHECK(is_order(s, n));
            CHECK(normal_form(s) == s);
        }
    }
    auto three = catalan_classes(3);
    CHECK(three.size() == 5);
    CHECK(normal_form({1, 3, 2}) == normal_form({3, 1, 2}));
    std::set<ResolutionOrder> nf;
    for (const auto& s : all_orders(3))
        nf.insert(normal_form(s));
    CHECK(nf.size() == 5);
}

TEST_CASE("classes match union-find over all orders")
{
    for (int n = 1; n <= 8; ++n) {
        std::map<ResolutionOrder, int> cls;
        CHECK(catalan_classes_bruteforce(n, &cls) == catalan_number(n));
        if (n > 6)
            continue;
        // two orders share a normal form exactly when they share a class
        std::map<int, ResolutionOrder> rep;
        for (const auto& [s, c] : cls) {
            auto it = rep.find(c);
            if (it == rep.end())
                rep[c] = normal_form(s);
            else
                CHECK(it->second == normal_form(s));
        }
        std::set<ResolutionOrder> reps;
        for (const auto& [c, s] : rep)
            reps.insert(s);
        CHECK(reps.size() == rep.size());
    }
}

TEST_CASE("swap rule")
{
    CHECK(swap_allowed({1, 3, 2}, 0));
    CHECK_FALSE(swap_allowed({2, 1, 3}, 0));
    CHECK_FALSE(swap_allowed({1, 2, 3}, 0));
    CHECK_FALSE(is_order({1, 1, 3}, 3));
    CHECK_FALSE(is_order({1, 2}, 3));
}

TEST_CASE("matrix criterion")
{
    CHECK(b_matrix_augmentation({0, 0}));
    CHECK_FALSE(b_matrix_augmentation({1, 1}));
    CHECK(b_matrix_augmentation({1, 1, 1}));
    for (int n = 1; n <= 10; ++n)
        CHECK(static_cast<long long>(b_matrix_augmentations(n).size()) == a_n(n));
    for (int x : {0, 1})
        for (int y : {0, 1})
            CHECK(boolean_identity(x, y));
}

TEST_CASE("the worked trefoil example")
{
    auto f = induced_augmentation(3, {2, 1, 3});
    CHECK(render_values(f.values) == "(0,1,1)");
    CHECK(render_augmentation(f.augmentation) == "b1=0,b2=1,b3=1");
    CHECK(f.certified);
    CHECK(f.genus == 1);
    CHECK(f.saddles == 3);
    auto x = induced_augmentation(3, {1, 3, 2}), y = induced_augmentation(3, {3, 1, 2});
    CHECK(render_values(x.values) == "(1,1,1)");
    CHECK(render_values(y.values) == "(1,1,1)");
    std::set<std::vector<int>> hit;
    for (const auto& s : catalan_classes(3))
        hit.insert(induced_augmentation(3, s).values);
    CHECK(hit.size() == 5);
}

TEST_CASE("fast rule equals the composed morphism, all orders, n <= 5")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto& s : all_orders(n)) {
            CAPTURE(render_values(s));
            auto f = induced_augmentation(n, s);
            CHECK(f.certified);
            CHECK(f.values == induced_fast(n, s));
            CHECK(f.genus == torus_genus(n));
            CHECK(is_augmentation(build_dga(torus_2n_diagram(n)), f.augmentation));
        }
}

TEST_CASE("induced augmentations are constant on classes")
{
    for (int n = 2; n <= 6; ++n) {
        std::map<ResolutionOrder, int> cls;
        catalan_classes_bruteforce(n, &cls);
        std::map<int, std::vector<int>> seen;
        for (const auto& [s, c] : cls) {
            auto v = induced_fast(n, s);
            auto it = seen.find(c);
            if (it == seen.end())
                seen[c] = v;
            else
                CHECK(it->second == v);
        }
    }
}

TEST_CASE("census, small n")
{
    for (int n = 3; n <= 5; ++n) {
        auto c = fillings_census(n);
        CHECK(static_cast<long long>(c.rows.size()) == catalan_number(n));
        CHECK(c.expected == a_n(n));
        CHECK(c.all_hit);
        CHECK(c.genus_ok);
        CHECK(c.fast_matches_slow);
        CHECK(c.certified);
        if (n % 2) {
            CHECK(c.distinct == a_n(n));
        } else {
            CHECK(c.distinct == a_n(n) - 1);
            CHECK_FALSE(c.zero_hit);
        }
        for (const auto& r : c.rows) {
            CHECK(r.fast == r.slow);
            CHECK(r.genus == torus_genus(n));
        }
    }
    CHECK(fillings_census(3).distinct == 5);
    CHECK(fillings_census(4).distinct == 10);
}

TEST_CASE("serial and parallel census agree")
{
    for (int n = 2; n <= 5; ++n) {
        auto p = fillings_census(n), s = fillings_census_serial(n);
        REQUIRE(p.rows.size() == s.rows.size());
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            CHECK(p.rows[i].representative == s.rows[i].representative);
            CHECK(p.rows[i].slow == s.rows[i].slow);
        }
        CHECK(p.distinct == s.distinct);
    }
}

TEST_CASE("geometric augmentations have the rank of the filling")
{
    for (int n = 2; n <= 5; ++n) {
        auto a = build_dga(torus_2n_diagram(n));
        for (const auto& s : catalan_classes(n)) {
            auto f = induced_augmentation(n, s);
            auto h = homology(linearize(a, f.augmentation));
            CHECK(total_rank(h) == 2 * torus_genus(n) + torus_components(n));
            CHECK(seidel_check(h, torus_genus(n), torus_components(n)));
        }
    }
}
