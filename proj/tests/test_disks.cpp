#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace lch;
using namespace lchtest;

namespace {

int chord(const Diagram& d, const std::string& c) { return d.crossing_index(c); }

std::vector<std::string> neg_words(const Diagram& d, const std::vector<Disk>& ks)
{
    std::vector<std::string> out;
    for (const auto& k : ks) {
        std::string w;
        for (int v : k.negatives)
            w += (w.empty() ? "" : "*") + d.crossing(v).id;
        out.push_back(w);
    }
    return out;
}

// boundary closes up, corners sit where darts meet, coverage nonnegative
void check_shape(const Diagram& d, const Disk& k, int positives)
{
    CHECK(k.boundary.size() == k.turns.size());
    int corners = 0, pos = 0;
    for (std::size_t i = 0; i < k.boundary.size(); ++i) {
        const Dart& x = k.boundary[i];
        const Dart& y = k.boundary[(i + 1) % k.boundary.size()];
        auto a = x.fwd ? d.head(x.edge) : d.tail(x.edge);
        auto b = y.fwd ? d.tail(y.edge) : d.head(y.edge);
        CHECK(a.crossing == b.crossing);
        int turn = (b.slot - a.slot + 4) % 4;
        if (k.turns[i] == 'S') {
            CHECK(turn == 2);
        } else {
            CHECK(turn == 3);  // one quadrant, on the left
            ++corners;
            pos += d.quadrant_positive(a.crossing, (a.slot + 3) % 4);
        }
    }
    CHECK(corners == static_cast<int>(k.corners.size()));
    CHECK(pos == positives);
    for (int c : k.coverage)
        CHECK(c >= 0);
}

}  // namespace

TEST_CASE("unknot: two empty disks")
{
    Diagram d = figure_eight_unknot();
    auto ks = enumerate_one_positive(d, 0);
    REQUIRE(ks.size() == 2);
    CHECK(ks[0].negatives.empty());
    CHECK(ks[1].negatives.empty());
    CHECK(same_disks(ks, coverage_oracle(d, {0}, 6)));
}

TEST_CASE("trefoil one-positive disks")
{
    Diagram d = torus_2n_diagram(3);
    CHECK(enumerate_one_positive(d, chord(d, "b1")).empty());
    auto ks = enumerate_one_positive(d, chord(d, "a1"));
    auto w = neg_words(d, ks);
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<std::string>{"", "b1", "b3", "b3*b2*b1"});
}

TEST_CASE("trefoil two-positive disks")
{
    Diagram d = torus_2n_diagram(3);
    auto ks = enumerate_two_positive(d, chord(d, "b1"), chord(d, "b2"));
    REQUIRE(ks.size() == 1);
    CHECK(ks[0].negatives.empty());
    CHECK(enumerate_two_positive(d, chord(d, "b1"), chord(d, "b3")).empty());
    CHECK_THROWS_AS(enumerate_two_positive(d, 0, 0), Error);
}

TEST_CASE("candidates are convex closed polygons")
{
    for (int n = 1; n <= 5; ++n) {
        Diagram d = torus_2n_diagram(n);
        for (int v = 0; v < d.num_crossings(); ++v) {
            for (const auto& k : enumerate_one_positive(d, v))
                check_shape(d, k, 1);
            for (int w = 0; w < d.num_crossings(); ++w)
                if (w != v)
                    for (const auto& k : enumerate_two_positive(d, v, w))
                        check_shape(d, k, 2);
        }
    }
}

TEST_CASE("covered area equals the action drop")
{
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        auto act = action_vector(d);
        auto area = d.area_vector();
        auto br = d.bounded_regions();
        for (int v = 0; v < d.num_crossings(); ++v)
            for (const auto& k : enumerate_one_positive(d, v)) {
                double covered = 0;
                for (std::size_t i = 0; i < br.size(); ++i)
                    covered += k.coverage[br[i]] * area[i];
                double drop = act[v];
                for (int b : k.negatives)
                    drop -= act[b];
                CHECK(covered > 0);
                CHECK(covered == doctest::Approx(drop));
            }
    }
}

TEST_CASE("walk agrees with the coverage oracle on the corpus")
{
    for (const auto& f : corpus_diagrams()) {
        Diagram d = corpus_diagram(f);
        if (d.num_crossings() > 8)
            continue;
        CAPTURE(f);
        for (int v = 0; v < d.num_crossings(); ++v) {
            // raise the multiplicity bound until area rules out anything deeper
            bool complete = false;
            std::vector<Disk> o;
            for (int bound = 6; bound <= 16 && !complete; ++bound)
                o = coverage_oracle(d, {v}, bound, &complete);
            CHECK(complete);
            CHECK(same_disks(enumerate_one_positive(d, v), o));
        }
    }
}

TEST_CASE("two-positive agreement: Hopf link all pairs, trefoil all pairs")
{
    for (int n : {2, 3}) {
        Diagram d = torus_2n_diagram(n);
        for (int c = 0; c < d.num_crossings(); ++c)
            for (int a = 0; a < d.num_crossings(); ++a)
                if (a != c)
                    CHECK(same_disks(enumerate_two_positive(d, c, a), coverage_oracle(d, {c, a}, 6)));
    }
}

TEST_CASE("five-crossing braid, bound 4")
{
    Diagram d = torus_2n_diagram(5);
    for (int v = 0; v < d.num_crossings(); ++v)
        CHECK(same_disks(enumerate_one_positive(d, v), coverage_oracle(d, {v}, 4)));
}

TEST_CASE("curves bounding two immersed disks cancel")
{
    // a finger move across 6R creates a boundary word that bounds two immersions
    Diagram f = finger_move(torus_2n_diagram(3), 6, 8, "6R", false, "x", "y");
    auto a = build_dga(f);
    CHECK(d_of(a, "a2") == "1 + b2 + y + y*b3*b2");
    CHECK(enumerate_augmentations(a).size() == 5);
    CHECK(same_disks(enumerate_one_positive(f, chord(f, "a2")), coverage_oracle(f, {chord(f, "a2")}, 6)));
}

TEST_CASE("budget is reported, never truncated")
{
    Diagram d = torus_2n_diagram(5);
    CHECK_THROWS_AS(enumerate_one_positive(d, chord(d, "a2"), 10), Error);
}

TEST_CASE("dump lists corners and coverage")
{
    Diagram d = figure_eight_unknot();
    std::string s = dump_disks(d, enumerate_one_positive(d, 0));
    CHECK(s.find("disk 0: corners a/Q") != std::string::npos);
    CHECK(s.find("coverage") != std::string::npos);
}
