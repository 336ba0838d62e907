#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <random>

using namespace lch;
using namespace lchtest;

namespace {

std::string kind_of(const std::string& text)
{
    try {
        parse_diagram(text);
    } catch (const Error& e) {
        return e.kind;
    }
    return "";
}

int euler(const Diagram& d) { return d.num_crossings() - d.num_edges() + d.num_regions(); }

}  // namespace

TEST_CASE("unknot file parses to one crossing and three regions")
{
    Diagram d = parse_diagram("lagrangian-diagram v1\nX a 2 1 1 2 over=24\narea 1R 1\narea 2L 1\n");
    CHECK(d.num_crossings() == 1);
    CHECK(d.num_edges() == 2);
    CHECK(d.num_regions() == 3);
    CHECK(d.num_components() == 1);
}

TEST_CASE("malformed files are rejected with a kind")
{
    CHECK(kind_of("lagrangian-diagram v1\nX a 1 2 3 over=24\n") == "non-4-valent");
    CHECK(kind_of("lagrangian-diagram v1\nX a 1 2 1 3 over=24\n") == "open-strand");
    CHECK(kind_of("lagrangian-diagram v1\nX a 2 1 1 2 over=24\narea 1R 0\narea 2L 1\n") == "area");
    CHECK(kind_of("not a diagram\n") == "syntax");
}

TEST_CASE("torus diagrams: n+2 crossings, labels, components")
{
    for (int n = 1; n <= 8; ++n) {
        Diagram d = torus_2n_diagram(n);
        CHECK(d.num_crossings() == n + 2);
        CHECK(d.num_components() == (n % 2 ? 1 : 2));
    }
    auto names = torus_2n_diagram(3).chord_names();
    std::sort(names.begin(), names.end(), natural_less);
    CHECK(names == std::vector<std::string>{"a1", "a2", "b1", "b2", "b3"});
}

TEST_CASE("text round trip keeps the diagram")
{
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        Diagram e = parse_diagram(to_text(d));
        CHECK(to_text(e) == to_text(d));
        CHECK(render_dga(build_dga(e)) == render_dga(build_dga(d)));
    }
}

TEST_CASE("Euler characteristic of the plane")
{
    for (const auto& f : corpus_diagrams())
        CHECK(euler(corpus_diagram(f)) == 2);
    for (int n = 1; n <= 8; ++n)
        CHECK(euler(torus_2n_diagram(n)) == 2);
}

TEST_CASE("gradings of the torus links and the unknot")
{
    for (int n = 2; n <= 8; ++n) {
        auto g = grading(torus_2n_diagram(n));
        for (int j = 1; j <= n; ++j)
            CHECK(g.at("b" + std::to_string(j)) == 0);
        CHECK(g.at("a1") == 1);
        CHECK(g.at("a2") == 1);
    }
    CHECK(grading(figure_eight_unknot()).at("a") == 1);
}

TEST_CASE("grading does not depend on the capping base point")
{
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        if (d.num_components() != 1)
            continue;
        auto ref = grading(d);
        for (int e : d.component(0))
            CHECK(grading_from_base(d, d.shifts(), {e}) == ref);
    }
    Diagram h = torus_2n_diagram(2);
    auto ref = grading(h);
    for (int e0 : h.component(0))
        for (int e1 : h.component(1))
            CHECK(grading_from_base(h, h.shifts(), {e0, e1}) == ref);
}

TEST_CASE("degree parity matches crossing sign on knots")
{
    for (Diagram d : {figure_eight_unknot(), torus_2n_diagram(3), torus_2n_diagram(5)}) {
        auto g = grading(d);
        for (int v = 0; v < d.num_crossings(); ++v)
            CHECK((g.at(d.crossing(v).id) % 2 == 0) == (d.sign(v) > 0));
    }
}

TEST_CASE("actions")
{
    CHECK(actions(figure_eight_unknot()).at("a") == doctest::Approx(1.0));
    auto a = actions(torus_2n_diagram(3));
    CHECK(a.at("a1") > a.at("b2"));
    for (const auto& f : corpus_diagrams())
        for (auto& [c, x] : actions(corpus_diagram(f)))
            CHECK(x > 0);
}

TEST_CASE("areas enclosing signed area around a component are refused")
{
    Diagram d = torus_2n_diagram(3);
    std::map<std::string, double> ones;
    for (const auto& r : d.regions())
        if (r.bounded)
            ones[r.id] = 1;
    Diagram e = with_area_map(d, ones);
    CHECK_FALSE(areas_realizable(e));
    CHECK_THROWS_AS(actions(e), Error);
}

TEST_CASE("Thurston-Bennequin numbers")
{
    CHECK(tb(figure_eight_unknot()) == std::vector<int>{-1});
    CHECK(tb(torus_2n_diagram(2)) == std::vector<int>{-1, -1});
    CHECK(tb(torus_2n_diagram(3)) == std::vector<int>{1});
    for (int n = 1; n <= 7; n += 2)
        CHECK(tb(torus_2n_diagram(n))[0] == 2 * torus_genus(n) - 1);
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        if (d.num_components() == 1)
            CHECK(tb(d)[0] == writhe(d));
    }
}

TEST_CASE("contractibility of the braid chords")
{
    Diagram d = torus_2n_diagram(3);
    for (const char* b : {"b1", "b2", "b3"}) {
        auto areas = contracting_areas(d, b);
        REQUIRE(areas);
        CHECK(is_contractible(with_areas(d, *areas), b) == Contractible::Yes);
    }
    // a1, a2 never, whatever b is prepared
    std::vector<Diagram> tries{d};
    for (const char* b : {"b1", "b2", "b3"})
        tries.push_back(with_areas(d, *contracting_areas(d, b)));
    for (const auto& t : tries) {
        CHECK(is_contractible(t, "a1") == Contractible::NoOnThisDiagram);
        CHECK(is_contractible(t, "a2") == Contractible::NoOnThisDiagram);
    }
}

TEST_CASE("0-resolution")
{
    for (int n = 2; n <= 6; ++n)
        for (int j = 1; j <= n; ++j) {
            Diagram r = resolve_0(torus_2n_diagram(n), "b" + std::to_string(j));
            CHECK(r.num_crossings() == n + 1);
            CHECK(r.num_components() == torus_components(n - 1));
            CHECK(euler(r) == 2);
            CHECK(enumerate_augmentations(build_dga(r)).size() == static_cast<std::size_t>(a_n(n - 1)));
        }
    Diagram u = resolve_0(torus_2n_diagram(1), "b1");
    CHECK(u.num_components() == 2);
    auto names = u.chord_names();
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::string>{"a1", "a2"});
    CHECK_THROWS_AS(resolve_0(u, "b1"), Error);
}

TEST_CASE("random finger and triple point moves stay valid")
{
    std::mt19937 rng(7);
    int made = 0;
    for (int n : {2, 3}) {
        Diagram d = torus_2n_diagram(n);
        for (int k = 0; k < 40; ++k) {
            const auto& r = d.regions()[rng() % d.num_regions()];
            if (!r.bounded)
                continue;
            const auto& fc = d.cycles()[r.cycles[0]];
            int i = rng() % fc.darts.size(), j = rng() % fc.darts.size();
            if (i == j)
                continue;
            try {
                Diagram f = finger_move(d, d.edge_id(fc.darts[i].edge), d.edge_id(fc.darts[j].edge), r.id, rng() % 2,
                                        "x", "y");
                ++made;
                CHECK(euler(f) == 2);
                CHECK(areas_realizable(f));
                for (auto& [c, a] : actions(f))
                    CHECK(a > 0);
            } catch (const Error&) {
            }
        }
    }
    CHECK(made > 10);
}
