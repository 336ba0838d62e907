#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <set>

using namespace lch;
using namespace lchtest;

namespace {

std::set<std::vector<int>> as_values(const std::vector<Augmentation>& v, int n)
{
    std::set<std::vector<int>> s;
    for (const auto& e : v)
        s.insert(b_values(e, n));
    return s;
}

std::set<std::string> as_text(const std::vector<Augmentation>& v)
{
    std::set<std::string> s;
    for (const auto& e : v)
        s.insert(render_augmentation(e));
    return s;
}

}  // namespace

TEST_CASE("counts on the torus links match the closed form and the matrix filter")
{
    for (int n = 1; n <= 8; ++n) {
        auto augs = enumerate_augmentations(build_dga(torus_2n_diagram(n)));
        CHECK(static_cast<long long>(augs.size()) == a_n(n));
        auto m = b_matrix_augmentations(n);
        CHECK(as_values(augs, n) == std::set<std::vector<int>>(m.begin(), m.end()));
    }
    CHECK(a_n(3) == 5);
    CHECK(a_n(5) == 21);
    CHECK(a_n(4) == 11);
}

TEST_CASE("Hopf link")
{
    auto a = build_dga(torus_2n_diagram(2));
    CHECK(is_augmentation(a, parse_augmentation("b1=0,b2=0", a)));
    CHECK_FALSE(is_augmentation(a, parse_augmentation("b1=1,b2=1", a)));
}

TEST_CASE("enumerated augmentations kill the whole differential")
{
    for (const auto& f : corpus_diagrams()) {
        auto a = build_dga(corpus_diagram(f));
        for (const auto& e : enumerate_augmentations(a))
            for (int g = 0; g < a.size(); ++g)
                CHECK(evaluate(a.d(g), e.values) == 0);
    }
}

TEST_CASE("serial and parallel enumeration agree")
{
    for (const auto& f : corpus_diagrams()) {
        auto a = build_dga(corpus_diagram(f));
        CHECK(as_text(enumerate_augmentations(a)) == as_text(enumerate_augmentations_serial(a)));
    }
}

TEST_CASE("pullback")
{
    auto a = build_dga(torus_2n_diagram(3));
    auto id = identity_morphism(a);
    for (const auto& e : enumerate_augmentations(a))
        CHECK(pullback(id, e) == e);
    auto r = run_script("lambda3.lch", "lambda3_fill_213.json");
    CHECK(render_augmentation(pullback(r.composed, ground_augmentation())) == "b1=0,b2=1,b3=1");
    // along a saddle, the zero augmentation pulls back to one with e(a) = 1
    Diagram d = torus_2n_diagram(3);
    Diagram t = resolve_0(d, "b2");
    auto m = morphism_saddle(d, a, t, build_dga(t), "b2");
    Augmentation zero{m.target.table, std::vector<std::uint8_t>(m.target.size(), 0)};
    CHECK(pullback(m, zero).at("b2") == 1);
}

TEST_CASE("pushforward along the trefoil saddle")
{
    Diagram d = torus_2n_diagram(3);
    Diagram t = resolve_0(d, "b2");
    auto src = build_dga(d);
    auto m = morphism_saddle(d, src, t, build_dga(t), "b2");
    auto e = parse_augmentation("b1=0,b2=1,b3=1", src);
    auto p = pushforward_saddle(m, e);
    CHECK(render_augmentation(p) == "b1=1,b3=0");
    CHECK(pullback(m, p) == e);
    CHECK_THROWS_AS(pushforward_saddle(m, parse_augmentation("b1=1,b2=0,b3=0", src)), Error);
}

TEST_CASE("pushforward is the unique preimage, over all corpus saddles")
{
    int checked = 0;
    auto man = manifest();
    for (const auto& w : man["words"]) {
        auto r = run_script(w["start"], w["script"]);
        for (const auto& m : r.steps) {
            if (m.kind != "saddle")
                continue;
            auto tgt_augs = enumerate_augmentations(m.target);
            for (const auto& e : enumerate_augmentations(m.source)) {
                if (e.values[m.resolved] != 1)
                    continue;
                auto p = pushforward_saddle(m, e);
                CHECK(is_augmentation(m.target, p));
                CHECK(pullback(m, p) == e);
                int hits = 0;
                for (const auto& q : tgt_augs)
                    hits += pullback(m, q) == e;
                CHECK(hits == 1);
                ++checked;
            }
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("pullback along the move instances is a bijection of augmentation sets")
{
    auto man = manifest();
    REQUIRE(man["moves"].size() == 4);
    for (const auto& mv : man["moves"]) {
        CAPTURE(mv["kind"].get<std::string>());
        auto r = run_script(mv["source"], mv["script"]);
        auto src = enumerate_augmentations(r.composed.source);
        auto tgt = enumerate_augmentations(r.composed.target);
        std::set<std::string> images;
        for (const auto& e : tgt) {
            auto p = pullback(r.composed, e);
            CHECK(is_augmentation(r.composed.source, p));
            images.insert(render_augmentation(p));
        }
        CHECK(images.size() == tgt.size());
        CHECK(images == as_text(src));
    }
}

TEST_CASE("linearized homology of the trefoil")
{
    auto a = build_dga(torus_2n_diagram(3));
    auto augs = enumerate_augmentations(a);
    REQUIRE(augs.size() == 5);
    for (const auto& e : augs) {
        auto c = linearize(a, e);
        CHECK(d_squared_zero(c));
        auto h = homology(c);
        CHECK(total_rank(h) == 3);
        CHECK(h == homology_serial(c));
        CHECK(seidel_check(h, 1, 1));
    }
}

TEST_CASE("zero differential: ranks count generators")
{
    auto a = build_dga(figure_eight_unknot());
    auto h = homology(linearize(a, enumerate_augmentations(a).at(0)));
    CHECK(h.at(1) == 1);
    CHECK(total_rank(h) == 1);
    CHECK(poincare_polynomial(h) == "t");
}

TEST_CASE("linearized complexes are complexes on the corpus")
{
    for (const auto& f : corpus_diagrams()) {
        auto a = build_dga(corpus_diagram(f));
        for (const auto& e : enumerate_augmentations(a)) {
            auto c = linearize(a, e);
            CHECK(d_squared_zero(c));
            CHECK(homology(c) == homology_serial(c));
        }
    }
}

TEST_CASE("Seidel totals")
{
    CHECK(seidel_check({{0, 2}, {1, 1}}, 1, 1));
    CHECK(seidel_check({{1, 1}}, 0, 1));
    CHECK(seidel_check({{0, 2}, {1, 2}}, 1, 2));
    CHECK_FALSE(seidel_check({{0, 1}}, 1, 1));
}

TEST_CASE("assignment text")
{
    auto a = build_dga(torus_2n_diagram(3));
    auto e = parse_augmentation("b3=1,b1=1", a);
    CHECK(render_augmentation(e) == "b1=1,b2=0,b3=1");
    CHECK_THROWS_AS(parse_augmentation("b1=2", a), Error);
    CHECK_THROWS_AS(parse_augmentation("q=1", a), Error);
}
