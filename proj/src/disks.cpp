#include "lch/disks.hpp"

#include "lch/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lch {

long long default_budget()
{
    if (const char* s = std::getenv("LCH_BUDGET")) {
        try {
            long long b = std::stoll(s);
            if (b > 0)
                return b;
        } catch (...) {
        }
    }
    return 1000000;
}

std::vector<double> search_areas(const Diagram& d)
{
    if (d.has_areas())
        return d.area_vector();
    auto a = realize_areas(d);
    if (!a)
        throw Error("area", "diagram admits no realizable areas");
    return *a;
}

std::string Disk::key() const
{
    std::ostringstream o;
    o << corners[0].crossing << ':' << corners[0].quadrant << '|';
    for (std::size_t i = 0; i < boundary.size(); ++i)
        o << boundary[i].edge << (boundary[i].fwd ? '+' : '-') << turns[i];
    return o.str();
}

namespace {

long long gcdll(long long a, long long b) { return b == 0 ? std::llabs(a) : gcdll(b, a % b); }

struct Ctx {
    const Diagram& d;
    std::vector<double> region_area;  // per region, infinity when unbounded
    std::vector<double> act;          // per crossing
    std::vector<long long> tint;      // turning scaled to integers
    long long tscale = 1;
    double min_area = 0;

    explicit Ctx(const Diagram& dd) : d(dd)
    {
        std::vector<double> a = search_areas(d);
        region_area.assign(d.num_regions(), std::numeric_limits<double>::infinity());
        auto br = d.bounded_regions();
        min_area = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < br.size(); ++i) {
            region_area[br[i]] = a[i];
            min_area = std::min(min_area, a[i]);
        }
        act = action_vector(d.has_areas() ? d : with_areas(d, a));
        for (const Rat& t : d.turning())
            tscale = tscale / gcdll(tscale, t.denominator()) * t.denominator();
        for (const Rat& t : d.turning())
            tint.push_back(t.numerator() * (tscale / t.denominator()));
    }
    int dart_left(const Dart& x) const { return x.fwd ? d.left_region(x.edge) : d.right_region(x.edge); }
    LagrangianDiagram::Slot arrival(const Dart& x) const { return x.fwd ? d.head(x.edge) : d.tail(x.edge); }
    Dart leave(int v, int s) const
    {
        int e = d.edge_at(v, s);
        auto t = d.tail(e);
        return {e, t.crossing == v && t.slot == s};
    }
};

// winding numbers of a closed boundary; empty when inconsistent
std::vector<int> coverage_of(const Diagram& d, const std::vector<Dart>& darts)
{
    std::vector<int> m(d.num_edges(), 0);
    for (const Dart& x : darts)
        m[x.edge] += x.fwd ? 1 : -1;
    const int R = d.num_regions();
    std::vector<int> n(R, 0);
    std::vector<bool> known(R, false);
    known[d.unbounded_region()] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int e = 0; e < d.num_edges(); ++e) {
            int l = d.left_region(e), r = d.right_region(e);
            if (known[l] && !known[r]) {
                n[r] = n[l] - m[e];
                known[r] = true;
                progress = true;
            } else if (known[r] && !known[l]) {
                n[l] = n[r] + m[e];
                known[l] = true;
                progress = true;
            } else if (known[l] && known[r] && n[l] != n[r] + m[e]) {
                return {};
            }
        }
    }
    return n;
}

// the quadrant multiplicities must come from passes, convex corners and whole sheets
bool local_ok(const Diagram& d, const std::vector<int>& n, const std::vector<std::array<int, 4>>& xs,
              const std::vector<std::array<int, 4>>& ys)
{
    for (int v = 0; v < d.num_crossings(); ++v) {
        int c0 = 0;
        for (int q = 0; q < 4; ++q) {
            int contrib = ys[v][(q + 1) % 4];
            for (int s = 0; s < 4; ++s)
                if (q == (s + 3) % 4 || q == (s + 2) % 4)
                    contrib += xs[v][s];
            int c = n[d.quadrant_region(v, q)] - contrib;
            if (c < 0 || (q > 0 && c != c0))
                return false;
            c0 = c;
        }
    }
    return true;
}

// Number of immersed disks with the given boundary, found by gluing sheets of the covered
// regions across edges. Sheets get labels in order of discovery so each disk is met once.
struct Gluer {
    const Diagram& d;
    const std::vector<Dart>& darts;
    const std::vector<char>& turns;
    const std::vector<int>& n;
    int L;
    std::vector<int> cnt;                    // discovered sheets per region
    std::vector<std::vector<int>> gA, gB;    // per edge: partner of a left / right sheet
    std::vector<int> tsheet;                 // sheet ended by each traversal
    long long nodes = 0, limit;
    long long found = 0;

    static constexpr int unset = -1;
    static int trav(int t) { return -2 - t; }
    static bool is_trav(int c) { return c <= -2; }
    static int trav_of(int c) { return -2 - c; }

    Gluer(const Diagram& dd, const std::vector<Dart>& x, const std::vector<char>& t, const std::vector<int>& nn,
          long long lim)
        : d(dd), darts(x), turns(t), n(nn), L(static_cast<int>(x.size())), limit(lim)
    {
        cnt.assign(d.num_regions(), 0);
        gA.resize(d.num_edges());
        gB.resize(d.num_edges());
        for (int e = 0; e < d.num_edges(); ++e) {
            gA[e].assign(n[d.left_region(e)], unset);
            gB[e].assign(n[d.right_region(e)], unset);
        }
        tsheet.assign(L, unset);
    }

    // quadrant q lies left of the forward dart of the edge at slot s
    bool left_side(int v, int q, int s) const
    {
        auto t = d.tail(d.edge_at(v, s));
        bool tail_here = t.crossing == v && t.slot == s;
        return tail_here ? q == s : q != s;
    }
    int& glue(int v, int q, int s, int sheet)
    {
        int e = d.edge_at(v, s);
        return left_side(v, q, s) ? gA[e][sheet] : gB[e][sheet];
    }

    // chains of corner sheets around v, as far as they are known
    bool vertex_ok(int v)
    {
        for (int q = 0; q < 4; ++q) {
            int R = d.quadrant_region(v, q);
            for (int s = 0; s < cnt[R]; ++s) {
                int c0 = glue(v, q, q, s);
                int cq = q, cs = s, len = 1;
                while (true) {
                    int c = glue(v, cq, (cq + 1) % 4, cs);
                    if (c == unset)
                        break;
                    if (is_trav(c)) {
                        int w = trav_of(c);
                        if (is_trav(c0)) {
                            int u = trav_of(c0);
                            if (w != (u + L - 1) % L || len != (turns[w] == 'C' ? 1 : 2))
                                return false;
                        } else if (c0 != unset && len >= 2) {
                            return false;
                        }
                        break;
                    }
                    cq = (cq + 1) % 4;
                    cs = c;
                    ++len;
                    if (is_trav(c0) && len > 2)
                        return false;
                    if (cq == q) {
                        if (cs != s)
                            return false;  // branch point
                        break;
                    }
                }
            }
        }
        return true;
    }

    bool edge_ok(int e)
    {
        auto t = d.tail(e), h = d.head(e);
        return vertex_ok(t.crossing) && (h.crossing == t.crossing || vertex_ok(h.crossing));
    }

    void complete()
    {
        for (int r = 0; r < d.num_regions(); ++r)
            if (cnt[r] != n[r])
                return;  // part of the cover never met the boundary
        for (int v = 0; v < d.num_crossings(); ++v)
            if (!vertex_ok(v))
                return;
        long long corners = 0, open = 0, faces = 0, edges = L;
        for (int v = 0; v < d.num_crossings(); ++v)
            for (int q = 0; q < 4; ++q)
                corners += n[d.quadrant_region(v, q)];
        for (int t = 0; t < L; ++t)
            open += turns[t] == 'C' ? 1 : 2;
        for (int r = 0; r < d.num_regions(); ++r)
            faces += n[r] * (2 - static_cast<long long>(d.regions()[r].cycles.size()));
        for (int e = 0; e < d.num_edges(); ++e)
            for (int c : gA[e])
                if (c >= 0)
                    ++edges;
        long long verts = L + (corners - open) / 4;
        if (verts - edges + faces == 1)
            ++found;
    }

    void step()
    {
        if (++nodes > limit)
            throw Error("budget", "disk gluing exceeded " + std::to_string(limit) + " nodes");
        for (int t = 0; t < L; ++t) {
            if (tsheet[t] != unset)
                continue;
            const Dart& x = darts[t];
            int R = x.fwd ? d.left_region(x.edge) : d.right_region(x.edge);
            auto& g = x.fwd ? gA[x.edge] : gB[x.edge];
            for (int s = 0; s <= cnt[R] && s < n[R]; ++s) {
                if (g[s] != unset)
                    continue;
                bool fresh = s == cnt[R];
                if (fresh)
                    ++cnt[R];
                g[s] = trav(t);
                tsheet[t] = s;
                if (edge_ok(x.edge))
                    step();
                tsheet[t] = unset;
                g[s] = unset;
                if (fresh)
                    --cnt[R];
            }
            return;
        }
        for (int e = 0; e < d.num_edges(); ++e) {
            int A = d.left_region(e), B = d.right_region(e);
            for (int i = 0; i < cnt[A]; ++i) {
                if (gA[e][i] != unset)
                    continue;
                for (int j = 0; j <= cnt[B] && j < n[B]; ++j) {
                    if (gB[e][j] != unset)
                        continue;
                    bool fresh = j == cnt[B];
                    if (fresh)
                        ++cnt[B];
                    gA[e][i] = j;
                    gB[e][j] = i;
                    if (edge_ok(e))
                        step();
                    gA[e][i] = unset;
                    gB[e][j] = unset;
                    if (fresh)
                        --cnt[B];
                }
                return;
            }
            for (int j = 0; j < cnt[B]; ++j) {
                if (gB[e][j] != unset)
                    continue;
                for (int i = 0; i <= cnt[A] && i < n[A]; ++i) {
                    if (gA[e][i] != unset)
                        continue;
                    bool fresh = i == cnt[A];
                    if (fresh)
                        ++cnt[A];
                    gA[e][i] = j;
                    gB[e][j] = i;
                    if (edge_ok(e))
                        step();
                    gA[e][i] = unset;
                    gB[e][j] = unset;
                    if (fresh)
                        --cnt[A];
                }
                return;
            }
        }
        complete();
    }
};

long long count_immersions(const Diagram& d, const std::vector<Dart>& darts, const std::vector<char>& turns,
                           const std::vector<int>& n)
{
    for (int r = 0; r < d.num_regions(); ++r)
        if (n[r] > 0)
            for (int c : d.regions()[r].cycles)
                if (d.cycles()[c].darts.empty())
                    return 1;  // a crossingless circle in the cover: not handled, trust the walk
    Gluer g(d, darts, turns, n, default_budget());
    g.step();
    return g.found;
}

// checks a closed walk and builds the disk; positive corners other than the start must be in `second`
bool finish(const Ctx& cx, int v0, int q0, const std::vector<Dart>& darts, const std::vector<char>& turns,
            Disk& out)
{
    const Diagram& d = cx.d;
    long long rot = 0;
    std::vector<std::array<int, 4>> xs(d.num_crossings(), {0, 0, 0, 0}), ys = xs;
    Disk k;
    k.corners.push_back({v0, q0, true});
    int positives_seen = 0;
    for (std::size_t i = 0; i < darts.size(); ++i) {
        rot += darts[i].fwd ? cx.tint[darts[i].edge] : -cx.tint[darts[i].edge];
        auto a = cx.arrival(darts[i]);
        if (turns[i] == 'S') {
            xs[a.crossing][a.slot]++;
            continue;
        }
        rot += cx.tscale;
        ys[a.crossing][a.slot]++;
        if (i + 1 == darts.size())
            break;  // back at the start corner
        int q = (a.slot + 3) % 4;
        bool pos = d.quadrant_positive(a.crossing, q);
        k.corners.push_back({a.crossing, q, pos});
        if (pos) {
            ++positives_seen;
            k.split = static_cast<int>(k.negatives.size());
        } else {
            k.negatives.push_back(a.crossing);
        }
    }
    if (rot != 4 * cx.tscale)
        return false;
    std::vector<int> n = coverage_of(d, darts);
    if (n.empty())
        return false;
    for (int x : n)
        if (x < 0)
            return false;
    if (!local_ok(d, n, xs, ys))
        return false;
    // over GF(2) a curve bounding an even number of disks drops out
    if (count_immersions(d, darts, turns, n) % 2 == 0)
        return false;
    (void)positives_seen;
    k.boundary = darts;
    k.turns = turns;
    k.coverage = std::move(n);
    out = std::move(k);
    return true;
}

struct Walker {
    const Ctx& cx;
    int v0 = 0, q0 = 0;
    int second = -1;  // crossing of the second positive corner, -1 for one
    bool second_used = false;
    double total = 0, spent = 0;
    long long budget, nodes = 0;
    std::vector<std::array<int, 2>> use;
    std::vector<std::array<int, 2>> cap;
    std::vector<Dart> darts;
    std::vector<char> turns;
    std::vector<Disk> found;
    // each region is covered at least as often as any dart on its boundary is used
    std::vector<std::vector<std::pair<int, int>>> reg_darts;
    std::vector<int> reg_need;
    double need_area = 0;

    Walker(const Ctx& c, long long b) : cx(c), budget(b) {}

    void renew(int r)
    {
        int m = 0;
        for (auto [e, f] : reg_darts[r])
            m = std::max(m, use[e][f]);
        need_area += (m - reg_need[r]) * cx.region_area[r];
        reg_need[r] = m;
    }

    void run(int v, int q)
    {
        v0 = v;
        q0 = q;
        const Diagram& d = cx.d;
        use.assign(d.num_edges(), {0, 0});
        cap.assign(d.num_edges(), {0, 0});
        for (int e = 0; e < d.num_edges(); ++e)
            for (int f = 0; f < 2; ++f) {
                double ar = cx.region_area[cx.dart_left({e, f == 1})];
                cap[e][f] = std::isinf(ar) ? 0 : static_cast<int>(std::floor(total / ar + 1e-9));
            }
        reg_darts.assign(d.num_regions(), {});
        reg_need.assign(d.num_regions(), 0);
        need_area = 0;
        for (int e = 0; e < d.num_edges(); ++e) {
            reg_darts[d.left_region(e)].push_back({e, 1});
            reg_darts[d.right_region(e)].push_back({e, 0});
        }
        go(cx.leave(v, q));
    }

    void go(Dart x)
    {
        if (++nodes > budget)
            throw Error("budget", "disk search exceeded " + std::to_string(budget) + " nodes");
        int f = x.fwd ? 1 : 0;
        if (use[x.edge][f] >= cap[x.edge][f])
            return;
        use[x.edge][f]++;
        int lr = cx.dart_left(x);
        renew(lr);
        if (need_area > total - spent + 1e-9) {
            use[x.edge][f]--;
            renew(lr);
            return;
        }
        darts.push_back(x);
        turns.push_back('S');
        auto a = cx.arrival(x);
        const Diagram& d = cx.d;
        int w = a.crossing, s = a.slot;
        int q = (s + 3) % 4;
        if (w == v0 && q == q0) {
            if (second < 0 || second_used) {
                turns.back() = 'C';
                Disk k;
                if (finish(cx, v0, q0, darts, turns, k))
                    found.push_back(std::move(k));
                turns.back() = 'S';
            }
        }
        // straight on
        go(cx.leave(w, (s + 2) % 4));
        // convex corner
        if (d.quadrant_positive(w, q)) {
            if (w == second && !second_used && !(w == v0 && q == q0)) {
                second_used = true;
                turns.back() = 'C';
                go(cx.leave(w, q));
                second_used = false;
            }
        } else if (spent + cx.act[w] <= total - std::max(cx.min_area, need_area) + 1e-9) {
            spent += cx.act[w];
            turns.back() = 'C';
            go(cx.leave(w, q));
            spent -= cx.act[w];
        }
        darts.pop_back();
        turns.pop_back();
        use[x.edge][f]--;
        renew(lr);
    }
};

void sort_disks(const Diagram& d, std::vector<Disk>& v)
{
    std::sort(v.begin(), v.end(), [&](const Disk& x, const Disk& y) {
        if (x.negatives != y.negatives) {
            std::vector<std::string> a, b;
            for (int c : x.negatives)
                a.push_back(d.crossing(c).id);
            for (int c : y.negatives)
                b.push_back(d.crossing(c).id);
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), natural_less);
        }
        if (x.boundary.size() != y.boundary.size())
            return x.boundary.size() < y.boundary.size();
        return x.key() < y.key();
    });
}

std::vector<int> positive_quadrants(const Diagram& d, int v)
{
    std::vector<int> q;
    for (int i = 0; i < 4; ++i)
        if (d.quadrant_positive(v, i))
            q.push_back(i);
    return q;
}

}  // namespace

std::vector<Disk> enumerate_one_positive(const Diagram& d, int a, long long budget)
{
    Ctx cx(d);
    Walker w(cx, budget);
    w.total = cx.act[a];
    for (int q : positive_quadrants(d, a))
        w.run(a, q);
    sort_disks(d, w.found);
    return w.found;
}

std::vector<Disk> enumerate_two_positive(const Diagram& d, int c, int a, long long budget)
{
    if (c == a)
        throw Error("usage", "two positive corners need distinct chords");
    Ctx cx(d);
    Walker w(cx, budget);
    w.total = cx.act[c] + cx.act[a];
    w.second = a;
    for (int q : positive_quadrants(d, c))
        w.run(c, q);
    // rigidity: total degree of the negatives equals |c| + |a|
    std::map<std::string, int> deg;
    try {
        deg = grading(d);
    } catch (const Error&) {
    }
    std::vector<Disk> keep;
    for (auto& k : w.found) {
        if (k.split < 0)
            continue;
        if (!deg.empty()) {
            int s = 0;
            for (int v : k.negatives)
                s += deg.at(d.crossing(v).id);
            if (s != deg.at(d.crossing(c).id) + deg.at(d.crossing(a).id))
                continue;
        }
        keep.push_back(std::move(k));
    }
    sort_disks(d, keep);
    return keep;
}

// ---------------------------------------------------------------- oracle

namespace {

struct Oracle {
    const Ctx& cx;
    const Diagram& d;
    std::vector<int> pos;  // designated positive chords, pos[0] starts the walk
    std::vector<int> cap;  // per region
    std::vector<int> n;
    std::vector<int> order;  // bounded regions in search order
    std::vector<std::vector<int>> ready;  // crossings completed after order[i]
    double total = 0;
    std::vector<Disk> found;
    std::set<std::string> keys;

    Oracle(const Ctx& c) : cx(c), d(c.d) {}

    bool designated(int v) const { return std::find(pos.begin(), pos.end(), v) != pos.end(); }

    // all transition tables at v for the given extra pairs per slot
    void tables(int v, const std::array<int, 4>& extra, std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>>& out)
    {
        std::array<int, 4> A{}, D{};
        for (int s = 0; s < 4; ++s) {
            int dj = n[d.quadrant_region(v, s)] - n[d.quadrant_region(v, (s + 3) % 4)];
            A[s] = std::max(0, -dj) + extra[s];
            D[s] = std::max(0, dj) + extra[s];
        }
        std::array<int, 4> x{}, y{};
        for (x[0] = 0; x[0] <= A[0]; ++x[0])
            for (x[1] = 0; x[1] <= A[1]; ++x[1])
                for (x[2] = 0; x[2] <= A[2]; ++x[2])
                    for (x[3] = 0; x[3] <= A[3]; ++x[3]) {
                        for (int s = 0; s < 4; ++s)
                            y[s] = A[s] - x[s];
                        bool ok = true;
                        for (int t = 0; t < 4 && ok; ++t)
                            ok = D[t] == x[(t + 2) % 4] + y[(t + 1) % 4];
                        if (!ok)
                            continue;
                        int npos = 0;
                        for (int s = 0; s < 4; ++s)
                            if (d.quadrant_positive(v, (s + 3) % 4))
                                npos += y[s];
                        if (npos != (designated(v) ? 1 : 0))
                            continue;
                        // whole sheets
                        int c0 = 0;
                        for (int q = 0; q < 4 && ok; ++q) {
                            int contrib = y[(q + 1) % 4];
                            for (int s = 0; s < 4; ++s)
                                if (q == (s + 3) % 4 || q == (s + 2) % 4)
                                    contrib += x[s];
                            int c = n[d.quadrant_region(v, q)] - contrib;
                            ok = c >= 0 && (q == 0 || c == c0);
                            c0 = c;
                        }
                        if (ok)
                            out.push_back({x, y});
                    }
    }

    int edge_extra_cap(int e) const { return std::min(n[d.left_region(e)], n[d.right_region(e)]); }

    // does some choice of extra pairs on the four edges make v feasible
    bool crossing_possible(int v)
    {
        std::array<int, 4> caps{}, ex{};
        for (int s = 0; s < 4; ++s)
            caps[s] = edge_extra_cap(d.edge_at(v, s));
        std::function<bool(int)> rec = [&](int s) -> bool {
            if (s == 4) {
                // a loop edge meets v twice and must carry the same extra count
                for (int a = 0; a < 4; ++a)
                    for (int b = a + 1; b < 4; ++b)
                        if (d.edge_at(v, a) == d.edge_at(v, b) && ex[a] != ex[b])
                            return false;
                std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>> t;
                tables(v, ex, t);
                return !t.empty();
            }
            for (ex[s] = 0; ex[s] <= caps[s]; ++ex[s])
                if (rec(s + 1))
                    return true;
            return false;
        };
        return rec(0);
    }

    void search(int i, double used)
    {
        if (i == static_cast<int>(order.size())) {
            if (used <= 0)
                return;
            expand();
            return;
        }
        int r = order[i];
        for (int k = 0; k <= cap[r]; ++k) {
            double u = used + k * cx.region_area[r];
            if (u > total + 1e-9)
                break;
            n[r] = k;
            bool ok = true;
            for (int v : ready[i])
                if (!(ok = crossing_possible(v)))
                    break;
            if (ok)
                search(i + 1, u);
        }
        n[r] = 0;
    }

    // fix extra pairs and transitions, then trace circuits
    void expand()
    {
        const int E = d.num_edges();
        std::vector<int> extra(E, 0);
        std::function<void(int)> pick_extra = [&](int e) {
            if (e == E) {
                pick_tables();
                return;
            }
            for (extra[e] = 0; extra[e] <= edge_extra_cap(e); ++extra[e])
                pick_extra(e + 1);
            extra[e] = 0;
        };
        extra_ = &extra;
        pick_extra(0);
    }
    std::vector<int>* extra_ = nullptr;
    std::vector<std::array<int, 4>> X, Y;

    void pick_tables()
    {
        const int V = d.num_crossings();
        std::vector<std::vector<std::pair<std::array<int, 4>, std::array<int, 4>>>> opts(V);
        for (int v = 0; v < V; ++v) {
            std::array<int, 4> ex{};
            for (int s = 0; s < 4; ++s)
                ex[s] = (*extra_)[d.edge_at(v, s)];
            tables(v, ex, opts[v]);
            if (opts[v].empty())
                return;
        }
        X.assign(V, {});
        Y.assign(V, {});
        std::function<void(int)> rec = [&](int v) {
            if (v == V) {
                circuits();
                return;
            }
            for (auto& [x, y] : opts[v]) {
                X[v] = x;
                Y[v] = y;
                rec(v + 1);
            }
        };
        rec(0);
    }

    void circuits()
    {
        int v0 = pos[0];
        int q0 = -1;
        for (int s = 0; s < 4; ++s)
            if (Y[v0][s] > 0 && d.quadrant_positive(v0, (s + 3) % 4))
                q0 = (s + 3) % 4;
        if (q0 < 0)
            return;
        int total_steps = 0;
        for (int v = 0; v < d.num_crossings(); ++v)
            for (int s = 0; s < 4; ++s)
                total_steps += X[v][s] + Y[v][s];
        std::vector<Dart> darts;
        std::vector<char> turns;
        auto x = X;
        auto y = Y;
        std::function<void(Dart)> walk = [&](Dart dt) {
            darts.push_back(dt);
            turns.push_back('S');
            auto a = cx.arrival(dt);
            int w = a.crossing, s = a.slot;
            int q = (s + 3) % 4;
            if (w == v0 && q == q0) {
                if (static_cast<int>(darts.size()) == total_steps && y[w][s] == 1) {
                    turns.back() = 'C';
                    Disk k;
                    if (finish(cx, v0, q0, darts, turns, k) && k.coverage == n) {
                        std::string key = k.key();
                        if (keys.insert(key).second)
                            found.push_back(std::move(k));
                    }
                    turns.back() = 'S';
                }
            } else if (y[w][s] > 0) {
                y[w][s]--;
                turns.back() = 'C';
                walk(cx.leave(w, q));
                turns.back() = 'S';
                y[w][s]++;
            }
            if (x[w][s] > 0 && static_cast<int>(darts.size()) < total_steps) {
                x[w][s]--;
                walk(cx.leave(w, (s + 2) % 4));
                x[w][s]++;
            }
            darts.pop_back();
            turns.pop_back();
        };
        walk(cx.leave(v0, q0));
    }
};

}  // namespace

std::vector<Disk> coverage_oracle(const Diagram& d, const std::vector<int>& positives, int bound, bool* complete)
{
    if (positives.empty() || positives.size() > 2)
        throw Error("usage", "oracle takes one or two positive chords");
    Ctx cx(d);
    Oracle o(cx);
    o.pos = positives;
    for (int v : positives)
        o.total += cx.act[v];
    const int R = d.num_regions();
    o.cap.assign(R, 0);
    o.n.assign(R, 0);
    bool comp = true;
    for (int r = 0; r < R; ++r) {
        if (r == d.unbounded_region())
            continue;
        int need = static_cast<int>(std::floor(o.total / cx.region_area[r] + 1e-9));
        if (need > bound)
            comp = false;
        o.cap[r] = std::min(need, bound);
    }
    if (complete)
        *complete = comp;
    // regions in breadth-first order from the unbounded one
    std::vector<bool> seen(R, false);
    std::vector<int> q{d.unbounded_region()};
    seen[d.unbounded_region()] = true;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (int e = 0; e < d.num_edges(); ++e) {
            int l = d.left_region(e), r = d.right_region(e);
            if (l == q[i] && !seen[r]) {
                seen[r] = true;
                q.push_back(r);
            }
            if (r == q[i] && !seen[l]) {
                seen[l] = true;
                q.push_back(l);
            }
        }
    o.order.assign(q.begin() + 1, q.end());
    std::vector<int> pos_in_order(R, -1);
    for (std::size_t i = 0; i < o.order.size(); ++i)
        pos_in_order[o.order[i]] = static_cast<int>(i);
    o.ready.assign(o.order.size(), {});
    for (int v = 0; v < d.num_crossings(); ++v) {
        int last = -1;
        for (int qd = 0; qd < 4; ++qd)
            last = std::max(last, pos_in_order[d.quadrant_region(v, qd)]);
        if (last >= 0)
            o.ready[last].push_back(v);
    }
    o.search(0, 0.0);
    std::vector<Disk> out;
    std::map<std::string, int> deg;
    if (positives.size() == 2) {
        try {
            deg = grading(d);
        } catch (const Error&) {
        }
    }
    for (auto& k : o.found) {
        if (positives.size() == 2) {
            if (k.split < 0)
                continue;
            if (!deg.empty()) {
                int s = 0;
                for (int v : k.negatives)
                    s += deg.at(d.crossing(v).id);
                if (s != deg.at(d.crossing(positives[0]).id) + deg.at(d.crossing(positives[1]).id))
                    continue;
            }
        }
        out.push_back(std::move(k));
    }
    sort_disks(d, out);
    return out;
}

bool same_disks(const std::vector<Disk>& x, const std::vector<Disk>& y)
{
    std::multiset<std::string> a, b;
    for (const auto& k : x)
        a.insert(k.key());
    for (const auto& k : y)
        b.insert(k.key());
    return a == b;
}

std::string dump_disks(const Diagram& d, const std::vector<Disk>& disks)
{
    std::ostringstream o;
    for (std::size_t i = 0; i < disks.size(); ++i) {
        const Disk& k = disks[i];
        o << "disk " << i << ": corners";
        for (const auto& c : k.corners)
            o << ' ' << d.crossing(c.crossing).id << "/Q" << c.quadrant << (c.positive ? '+' : '-');
        o << "; coverage";
        for (int r = 0; r < d.num_regions(); ++r)
            if (k.coverage[r])
                o << ' ' << d.regions()[r].id << '=' << k.coverage[r];
        o << '\n';
    }
    return o.str();
}

}  // namespace lch
