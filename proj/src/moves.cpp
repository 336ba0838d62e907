#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "lch/diagram.hpp"

namespace lch {

namespace {

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string dart_label(int edge_id, bool fwd) { return std::to_string(edge_id) + (fwd ? "L" : "R"); }

// label of some dart of the unbounded region avoiding the given edges
std::string outer_label(const Diagram& d, const std::vector<int>& avoid)
{
    const Region& u = d.regions()[d.unbounded_region()];
    for (int c : u.cycles)
        for (const Dart& x : d.cycles()[c].darts)
            if (std::find(avoid.begin(), avoid.end(), d.edge_id(x.edge)) == avoid.end())
                return dart_label(d.edge_id(x.edge), x.fwd);
    return "";
}

Diagram with_realized_areas(const Diagram& d)
{
    auto a = realize_areas(d);
    if (!a)
        throw Error("area", "no realizable areas for this diagram");
    return with_areas(d, *a);
}

// crossing from counterclockwise entries (edge id, incoming, on over strand)
Crossing make_crossing(const std::string& name, const std::array<std::tuple<int, bool, bool>, 4>& ent)
{
    int r = 0;
    while (!std::get<1>(ent[r]))
        ++r;
    Crossing x;
    x.id = name;
    for (int s = 0; s < 4; ++s)
        x.edge[s] = std::get<0>(ent[(r + s) % 4]);
    x.over = std::get<2>(ent[(r + 1) % 4]) ? 24 : 13;
    return x;
}

}  // namespace

Diagram relabel(const Diagram& d, const std::map<std::string, std::string>& names)
{
    std::vector<Crossing> xs = d.crossings();
    for (auto& x : xs) {
        auto it = names.find(x.id);
        if (it != names.end())
            x.id = it->second;
    }
    return Diagram::build_with_layout(xs, d.layout(), d.shifts(), d.circles());
}

// -------------------------------------------------------------- standard torus diagrams

Diagram torus_2n_diagram(int n)
{
    if (n < 1)
        throw Error("usage", "torus size must be >= 1");
    std::vector<Crossing> xs;
    auto L = [&](int j) { return n + 3 + j; };  // lower strand pieces
    auto T = [&](int j) { return 1 + j; };      // upper strand pieces
    const int right_top = n + 1, loop2 = n + 2, inner_ret = n + 3, right_bot = 2 * n + 3, loop1 = 2 * n + 4;
    for (int j = 1; j <= n; ++j) {
        Crossing b;
        b.id = "b" + std::to_string(j);
        b.edge[0] = j == 1 ? inner_ret : L(j - 1);
        b.edge[1] = j < n ? L(j) : right_bot;
        b.edge[2] = j < n ? T(j) : right_top;
        b.edge[3] = j == 1 ? 1 : T(j - 1);
        b.over = 24;
        xs.push_back(b);
    }
    xs.push_back({"a1", {loop1, right_bot, inner_ret, loop1}, 24});
    xs.push_back({"a2", {loop2, right_top, 1, loop2}, 24});
    int north = n == 1 ? right_top : T(1);
    Diagram d = with_realized_areas(Diagram::build(xs, {}, {}, dart_label(north, true)));
    if (d.num_components() == 2) {
        int v = d.crossing_index("b1");
        int lo = d.under_component(v), up = d.over_component(v);
        GradeShift s{lo + 1, up + 1, 0};
        int deg = grading(d, {s}).at("b1");
        s.k = -deg;
        d = Diagram::build_with_layout(d.crossings(), d.layout(), {s}, d.circles());
    }
    return d;
}

// -------------------------------------------------------------- oriented resolution

Diagram resolve_0(const Diagram& d, const std::string& c)
{
    const int v = d.crossing_index(c);
    if (v < 0)
        throw Error("unknown-chord", c);
    const int E = d.num_edges();
    // pair each incoming slot with the adjacent outgoing slot
    std::array<int, 4> pair_out{-1, -1, -1, -1}, turn_at{0, 0, 0, 0};
    std::vector<int> kept_q;
    for (int s = 0; s < 4; ++s) {
        if (!d.incoming(v, s))
            continue;
        int left = (s + 3) % 4, right = (s + 1) % 4;
        if (!d.incoming(v, left)) {
            pair_out[s] = left;
            turn_at[s] = 1;
            kept_q.push_back(left);
        } else {
            pair_out[s] = right;
            turn_at[s] = -1;
            kept_q.push_back(s);
        }
    }
    std::vector<int> merged_q;
    for (int q = 0; q < 4; ++q)
        if (std::find(kept_q.begin(), kept_q.end(), q) == kept_q.end())
            merged_q.push_back(q);

    // chains of old edges joined at v
    std::vector<int> succ(E, -1);
    std::vector<int> succ_turn(E, 0);
    for (int e = 0; e < E; ++e) {
        auto h = d.head(e);
        if (h.crossing == v) {
            succ[e] = d.edge_at(v, pair_out[h.slot]);
            succ_turn[e] = turn_at[h.slot];
        }
    }
    std::vector<int> chain_of(E, -1);
    std::vector<std::vector<int>> chains;
    for (int e = 0; e < E; ++e) {
        if (d.tail(e).crossing == v)
            continue;
        std::vector<int> ch{e};
        chain_of[e] = static_cast<int>(chains.size());
        int x = e;
        while (succ[x] >= 0) {
            x = succ[x];
            ch.push_back(x);
            chain_of[x] = static_cast<int>(chains.size());
        }
        chains.push_back(ch);
    }
    int circles = d.circles();
    for (int e = 0; e < E; ++e) {
        if (chain_of[e] >= 0)
            continue;
        int x = e;
        do {
            chain_of[x] = -2;
            x = succ[x];
        } while (x != e);
        ++circles;
    }
    // new crossing table
    std::vector<Crossing> xs;
    std::vector<int> old_of_new;
    for (int w = 0; w < d.num_crossings(); ++w)
        if (w != v) {
            xs.push_back(d.crossing(w));
            old_of_new.push_back(w);
        }
    auto new_index = [&](int w) { return w < v ? w : w - 1; };
    std::map<int, Rat> new_turn;     // by new edge id
    std::map<int, int> first_seg;    // new edge id -> old edge index
    for (const auto& ch : chains) {
        int id = d.edge_id(ch[0]);
        Rat t = 0;
        for (std::size_t i = 0; i < ch.size(); ++i) {
            t += d.turning()[ch[i]];
            if (i + 1 < ch.size())
                t += succ_turn[ch[i]];
        }
        new_turn[id] = t;
        first_seg[id] = ch[0];
        auto tl = d.tail(ch.front());
        auto hd = d.head(ch.back());
        xs[new_index(tl.crossing)].edge[tl.slot] = id;
        xs[new_index(hd.crossing)].edge[hd.slot] = id;
    }
    std::vector<GradeShift> no_shift;
    if (xs.empty()) {
        RegionLayout L;
        L.groups.push_back({{}, -1, std::nullopt});
        return Diagram::build_with_layout(xs, L, {}, circles);
    }
    Diagram tmp = Diagram::build(xs, {}, {}, "", circles);

    // old regions joined through the merged quadrants
    UF uf(d.num_regions());
    uf.unite(d.quadrant_region(v, merged_q[0]), d.quadrant_region(v, merged_q[1]));
    std::map<int, std::vector<int>> groups;  // class -> new cycles
    std::map<int, int> ccw_count;
    for (int ci = 0; ci < static_cast<int>(tmp.cycles().size()); ++ci) {
        const FaceCycle& fc = tmp.cycles()[ci];
        Rat rot = static_cast<int>(fc.corners.size());
        for (const Dart& x : fc.darts) {
            Rat t = new_turn.at(tmp.edge_id(x.edge));
            rot += x.fwd ? t : -t;
        }
        if (rot != Rat(4) && rot != Rat(-4))
            throw Error("internal", "resolution produced a face with rotation " + std::to_string(rot.numerator()));
        const Dart& x0 = fc.darts[0];
        int oe = first_seg.at(tmp.edge_id(x0.edge));
        int oreg = x0.fwd ? d.left_region(oe) : d.right_region(oe);
        int cls = uf.find(oreg);
        groups[cls].push_back(ci);
        if (rot == Rat(4))
            ccw_count[cls]++;
    }
    RegionLayout L;
    for (auto& [cls, cyc] : groups) {
        bool bounded = true;
        double area = 0;
        for (int r = 0; r < d.num_regions(); ++r)
            if (uf.find(r) == cls) {
                bounded &= d.regions()[r].bounded;
                if (d.has_areas() && d.regions()[r].bounded)
                    area += d.regions()[r].area;
            }
        RegionLayout::Group g;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const FaceCycle& fc = tmp.cycles()[cyc[i]];
            g.reps.push_back(fc.darts[0]);
            Rat rot = static_cast<int>(fc.corners.size());
            for (const Dart& x : fc.darts) {
                Rat t = new_turn.at(tmp.edge_id(x.edge));
                rot += x.fwd ? t : -t;
            }
            if (rot == Rat(4))
                g.outer = static_cast<int>(i);
        }
        if (bounded != (g.outer >= 0) || ccw_count[cls] > 1)
            throw Error("internal", "resolution produced an inconsistent region");
        if (bounded && d.has_areas())
            g.area = area;
        L.groups.push_back(g);
    }
    Diagram nd = Diagram::build_with_layout(xs, L, {}, circles);
    if (nd.has_areas() && !areas_realizable(nd))
        nd = with_realized_areas(nd);

    // shifts that keep the degrees of the surviving chords
    std::map<std::string, int> old_deg;
    try {
        old_deg = grading(d);
    } catch (const Error&) {
        return nd;
    }
    std::vector<GradeShift> zero;
    for (int i = 0; i < nd.num_components(); ++i)
        for (int j = i + 1; j < nd.num_components(); ++j)
            zero.push_back({i + 1, j + 1, 0});
    if (zero.empty())
        return nd;
    std::map<std::string, int> nd_deg;
    try {
        nd_deg = grading(nd, zero);
    } catch (const Error&) {
        return nd;
    }
    std::vector<GradeShift> shifts;
    for (int w = 0; w < nd.num_crossings(); ++w) {
        int lo = nd.under_component(w), up = nd.over_component(w);
        if (lo == up)
            continue;
        int i = std::min(lo, up), j = std::max(lo, up);
        bool have = false;
        for (auto& s : shifts)
            have |= s.i == i + 1 && s.j == j + 1;
        if (have)
            continue;
        const std::string& id = nd.crossing(w).id;
        int k = old_deg.at(id) - nd_deg.at(id);
        shifts.push_back({lo + 1, up + 1, k});
    }
    return Diagram::build_with_layout(nd.crossings(), nd.layout(), shifts, nd.circles());
}

// -------------------------------------------------------------- removing a split component

Diagram remove_component(const Diagram& d, int comp)
{
    if (comp < 0 || comp >= d.num_components())
        throw Error("usage", "no such component");
    int piece = d.piece_of_crossing(d.tail(d.component(comp)[0]).crossing);
    for (int e = 0; e < d.num_edges(); ++e)
        if ((d.piece_of_crossing(d.tail(e).crossing) == piece) != (d.component_of_edge(e) == comp))
            throw Error("not-split", "component " + std::to_string(comp + 1) + " is not split from the rest");
    std::vector<Crossing> xs;
    for (int v = 0; v < d.num_crossings(); ++v)
        if (d.piece_of_crossing(v) != piece)
            xs.push_back(d.crossing(v));
    std::vector<int> kept_ids;
    for (int e = 0; e < d.num_edges(); ++e)
        if (d.component_of_edge(e) != comp)
            kept_ids.push_back(d.edge_id(e));
    auto new_edge = [&](int old_e) {
        return static_cast<int>(std::lower_bound(kept_ids.begin(), kept_ids.end(), d.edge_id(old_e)) -
                                kept_ids.begin());
    };
    RegionLayout L;
    for (const auto& r : d.regions()) {
        bool any_in = false, any_out = false;
        for (int c : r.cycles)
            (d.cycles()[c].piece == piece ? any_in : any_out) = true;
        RegionLayout::Group g;
        if (any_in && r.bounded && d.cycles()[r.cycles[0]].piece == piece) {
            // a face of the removed piece: nothing may sit inside it
            int outer = -1;
            for (std::size_t i = 0; i < r.cycles.size(); ++i)
                if (d.cycles()[r.cycles[i]].ccw)
                    outer = r.cycles[i];
            if (outer >= 0 && d.cycles()[outer].piece == piece && r.cycles.size() > 1)
                throw Error("not-split", "something lies inside the component being removed");
        }
        int outer_cycle = -1;
        for (int c : r.cycles)
            if (d.cycles()[c].ccw)
                outer_cycle = c;
        if (outer_cycle >= 0 && d.cycles()[outer_cycle].piece == piece)
            continue;  // region of the removed piece
        for (int c : r.cycles) {
            if (d.cycles()[c].piece == piece)
                continue;
            const Dart& x = d.cycles()[c].darts[0];
            if (c == outer_cycle)
                g.outer = static_cast<int>(g.reps.size());
            g.reps.push_back({new_edge(x.edge), x.fwd});
        }
        if (r.bounded && d.has_areas())
            g.area = r.area;
        L.groups.push_back(g);
    }
    std::vector<GradeShift> shifts;
    for (auto s : d.shifts()) {
        if (s.i - 1 == comp || s.j - 1 == comp)
            continue;
        if (s.i - 1 > comp)
            --s.i;
        if (s.j - 1 > comp)
            --s.j;
        shifts.push_back(s);
    }
    Diagram nd = Diagram::build_with_layout(xs, L, shifts, d.circles());
    if (nd.has_areas() && !areas_realizable(nd))
        nd = with_realized_areas(nd);
    return nd;
}

// -------------------------------------------------------------- finger move

Diagram finger_move(const Diagram& d, int edge_push, int edge_under, const std::string& region, bool pushed_over,
                    const std::string& name1, const std::string& name2)
{
    int r = d.region_index(region);
    if (r < 0 || !d.regions()[r].bounded)
        throw Error("usage", "finger move needs a bounded region");
    int e1 = d.edge_index(edge_push), e2 = d.edge_index(edge_under);
    if (e1 < 0 || e2 < 0 || e1 == e2)
        throw Error("usage", "finger move needs two distinct edges");
    int cyc = -1;
    bool f1 = true, f2 = true;
    for (int c : d.regions()[r].cycles) {
        bool h1 = false, h2 = false;
        for (const Dart& x : d.cycles()[c].darts) {
            if (x.edge == e1 && !h1) {
                h1 = true;
                f1 = x.fwd;
            }
            if (x.edge == e2 && !h2) {
                h2 = true;
                f2 = x.fwd;
            }
        }
        if (h1 && h2)
            cyc = c;
    }
    if (cyc < 0)
        throw Error("usage", "both edges must bound the region");
    int M = 0;
    for (int e = 0; e < d.num_edges(); ++e)
        M = std::max(M, d.edge_id(e));
    // pieces in the traversal direction of the region boundary
    int p1a, p1b = M + 1, p1c, p2a, p2b = M + 3, p2c;
    if (f1) {
        p1a = edge_push;
        p1c = M + 2;
    } else {
        p1c = edge_push;
        p1a = M + 2;
    }
    if (f2) {
        p2a = edge_under;
        p2c = M + 4;
    } else {
        p2c = edge_under;
        p2a = M + 4;
    }
    std::vector<Crossing> xs = d.crossings();
    auto start1 = f1 ? d.tail(e1) : d.head(e1), end1 = f1 ? d.head(e1) : d.tail(e1);
    auto start2 = f2 ? d.tail(e2) : d.head(e2), end2 = f2 ? d.head(e2) : d.tail(e2);
    xs[start1.crossing].edge[start1.slot] = p1a;
    xs[end1.crossing].edge[end1.slot] = p1c;
    xs[start2.crossing].edge[start2.slot] = p2a;
    xs[end2.crossing].edge[end2.slot] = p2c;
    // first crossing on the pushed strand, slots E N W S
    bool s1 = pushed_over, s2 = !pushed_over;
    xs.push_back(make_crossing(
        name1, {std::make_tuple(p2c, !f2, s2), std::make_tuple(p1a, f1, s1), std::make_tuple(p2b, f2, s2),
                std::make_tuple(p1b, !f1, s1)}));
    xs.push_back(make_crossing(
        name2, {std::make_tuple(p2b, !f2, s2), std::make_tuple(p1c, !f1, s1), std::make_tuple(p2a, f2, s2),
                std::make_tuple(p1b, f1, s1)}));
    std::string hint = outer_label(d, {edge_push, edge_under});
    if (hint.empty()) {
        const Dart& x = d.cycles()[d.regions()[d.unbounded_region()].cycles[0]].darts[0];
        hint = dart_label(x.edge == e1 ? p1a : p2a, x.fwd);
    }
    return with_realized_areas(Diagram::build(xs, {}, d.shifts(), hint, d.circles()));
}

// -------------------------------------------------------------- triple point move

Diagram triple_point_move(const Diagram& d, const std::string& region)
{
    int r = d.region_index(region);
    if (r < 0 || !d.regions()[r].bounded || d.regions()[r].cycles.size() != 1)
        throw Error("usage", "triple point move needs a bounded triangular region");
    const FaceCycle& fc = d.cycles()[d.regions()[r].cycles[0]];
    if (fc.darts.size() != 3)
        throw Error("usage", "region is not a triangle");
    std::set<int> vs, es;
    for (int i = 0; i < 3; ++i) {
        vs.insert(fc.corners[i].crossing);
        es.insert(fc.darts[i].edge);
    }
    if (vs.size() != 3 || es.size() != 3)
        throw Error("usage", "region is not an embedded triangle");
    std::vector<Crossing> xs = d.crossings();
    std::vector<int> side_ids;
    for (const Dart& x : fc.darts) {
        int e = x.edge;
        side_ids.push_back(d.edge_id(e));
        auto t = d.tail(e), h = d.head(e);
        int e_in = d.crossing(t.crossing).edge[(t.slot + 2) % 4];
        int e_out = d.crossing(h.crossing).edge[(h.slot + 2) % 4];
        xs[h.crossing].edge[h.slot] = e_in;
        xs[h.crossing].edge[(h.slot + 2) % 4] = d.edge_id(e);
        xs[t.crossing].edge[(t.slot + 2) % 4] = d.edge_id(e);
        xs[t.crossing].edge[t.slot] = e_out;
    }
    std::string hint = outer_label(d, side_ids);
    if (hint.empty())
        throw Error("usage", "triangle touches only the unbounded region");
    return with_realized_areas(Diagram::build(xs, {}, d.shifts(), hint, d.circles()));
}

}  // namespace lch
