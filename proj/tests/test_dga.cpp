#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace lch;
using namespace lchtest;

TEST_CASE("unknot: d a = 0")
{
    auto a = build_dga(figure_eight_unknot());
    REQUIRE(a.size() == 1);
    CHECK(a.table->degrees[0] == 1);
    CHECK(a.d(0).is_zero());
}

TEST_CASE("trefoil differential")
{
    auto a = build_dga(torus_2n_diagram(3));
    for (const char* b : {"b1", "b2", "b3"})
        CHECK(d_of(a, b) == "0");
    CHECK(d_of(a, "a1") == "1 + b1 + b3 + b3*b2*b1");
    CHECK(d_of(a, "a2") == "b2 + b2*b1 + b2*b1*b3*b2 + b3*b2");
    Augmentation e = parse_augmentation("b1=1,b2=1,b3=1", a);
    CHECK(is_augmentation(a, e));
}

TEST_CASE("axioms on the corpus")
{
    for (const auto& f : corpus_diagrams()) {
        CAPTURE(f);
        auto a = build_dga(corpus_diagram(f));
        CHECK(check_d_squared(a).ok);
        CHECK(check_degree(a).ok);
        CHECK(check_action_filtration(a).ok);
        for (int g = 0; g < a.size(); ++g)
            if (a.d(g).has_unit())
                CHECK(a.table->degrees[g] == 1);
    }
}

TEST_CASE("fault injection is caught with a witness")
{
    // the finger move across 1R from edge 1 under edge 9 gives a chord of degree 2
    Diagram f = finger_move(torus_2n_diagram(3), 1, 9, "1R", false, "x", "y");
    auto a = build_dga(f);
    REQUIRE(check_d_squared(a).ok);
    Gen x = a.table->at("x");
    REQUIRE(a.table->degrees[x] == 2);
    auto bad = a;
    bad.diff[x] = bad.diff[x] + parse_poly("y", a.table);
    Check c = check_d_squared(bad);
    CHECK_FALSE(c.ok);
    CHECK(c.generator == "x");
    bad = a;
    bad.diff[a.table->at("b1")] = Poly::one(a.table);
    CHECK_FALSE(check_degree(bad).ok);
    CHECK(check_degree(bad).generator == "b1");
    bad = a;
    bad.diff[a.table->at("b1")] = parse_poly("a1", a.table);
    CHECK_FALSE(check_action_filtration(bad).ok);
}

TEST_CASE("serial and parallel builds agree")
{
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        CHECK(render_dga(build_dga(d)) == render_dga(build_dga_serial(d)));
    }
}

TEST_CASE("renaming chords gives the renamed DGA")
{
    Diagram d = torus_2n_diagram(4);
    std::map<std::string, std::string> ren{{"b1", "c4"}, {"b2", "c3"}, {"b3", "c2"}, {"b4", "c1"}, {"a1", "z"}};
    auto a = build_dga(d), r = build_dga(relabel(d, ren));
    std::unordered_map<std::string, std::string> m(ren.begin(), ren.end());
    for (int g = 0; g < a.size(); ++g) {
        std::string name = a.table->names[g];
        std::string to = m.count(name) ? m[name] : name;
        CHECK(rename_into(a.d(g), r.table, m) == r.d(r.table->at(to)));
    }
}

TEST_CASE("random perturbations of small diagrams")
{
    std::mt19937 rng(11);
    int tested = 0;
    for (int n : {1, 2, 3}) {
        Diagram d = torus_2n_diagram(n);
        for (int k = 0; k < 60; ++k) {
            const auto& r = d.regions()[rng() % d.num_regions()];
            if (!r.bounded)
                continue;
            const auto& fc = d.cycles()[r.cycles[0]];
            int i = rng() % fc.darts.size(), j = rng() % fc.darts.size();
            if (i == j)
                continue;
            Diagram f = d;
            try {
                f = finger_move(d, d.edge_id(fc.darts[i].edge), d.edge_id(fc.darts[j].edge), r.id, rng() % 2, "x",
                                "y");
            } catch (const Error&) {
                continue;
            }
            // sometimes follow with a triple point move
            for (const auto& t : f.regions())
                if (t.bounded && t.cycles.size() == 1 && f.cycles()[t.cycles[0]].darts.size() == 3 && rng() % 2) {
                    try {
                        f = triple_point_move(f, t.id);
                    } catch (const Error&) {
                    }
                    break;
                }
            auto a = build_dga(f);
            CAPTURE(to_text(f));
            CHECK(check_d_squared(a).ok);
            CHECK(check_degree(a).ok);
            CHECK(check_action_filtration(a).ok);
            for (int v = 0; v < f.num_crossings(); ++v)
                CHECK(same_disks(enumerate_one_positive(f, v), coverage_oracle(f, {v}, 6)));
            ++tested;
        }
    }
    CHECK(tested > 20);
}

TEST_CASE("empty link")
{
    auto e = empty_dga();
    CHECK(e.size() == 0);
    CHECK(check_d_squared(e).ok);
}
