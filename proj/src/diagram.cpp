#include "lch/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "lch/algebra.hpp"

namespace lch {

namespace {

Rat rat_mod4(Rat x)
{
    // representative in [0,4)
    long long q = static_cast<long long>(std::floor(boost::rational_cast<double>(x) / 4.0));
    x -= Rat(4 * q);
    while (x < Rat(0))
        x += 4;
    while (x >= Rat(4))
        x -= 4;
    return x;
}

bool is_integer(const Rat& x) { return x.denominator() == 1; }

struct ParityUF {
    std::vector<int> p, par;
    explicit ParityUF(int n) : p(n), par(n, 0) { std::iota(p.begin(), p.end(), 0); }
    std::pair<int, int> find(int x)
    {
        int q = 0;
        int r = x;
        while (p[r] != r) {
            q ^= par[r];
            r = p[r];
        }
        // compress
        int cur = x, cq = q;
        while (p[cur] != cur) {
            int nxt = p[cur];
            int np = cq ^ par[cur];
            p[cur] = r;
            par[cur] = cq;
            cur = nxt;
            cq = np;
        }
        return {r, q};
    }
    // require value(a) xor value(b) == d; false on conflict
    bool unite(int a, int b, int d)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb)
            return (pa ^ pb) == d;
        p[ra] = rb;
        par[ra] = pa ^ pb ^ d;
        return true;
    }
};

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

double AreaForm::eval(const std::vector<double>& areas) const
{
    double s = 0;
    for (std::size_t i = 0; i < coef.size(); ++i)
        if (coef[i] != Rat(0))
            s += boost::rational_cast<double>(coef[i]) * areas[i];
    return s;
}

// ---------------------------------------------------------------- building

LagrangianDiagram LagrangianDiagram::build(std::vector<Crossing> xs, const std::map<std::string, double>& areas,
                                           std::vector<GradeShift> shifts, const std::string& outer_hint,
                                           int circles)
{
    LagrangianDiagram d;
    d.xs_ = std::move(xs);
    d.shifts_ = std::move(shifts);
    d.circles_ = circles;
    d.derive_topology();
    d.derive_faces();
    d.group_default(areas, outer_hint);
    d.finish_regions();
    d.solve_turning();
    d.build_action_model();
    return d;
}

LagrangianDiagram LagrangianDiagram::build_with_layout(std::vector<Crossing> xs, const RegionLayout& layout,
                                                       std::vector<GradeShift> shifts, int circles)
{
    LagrangianDiagram d;
    d.xs_ = std::move(xs);
    d.shifts_ = std::move(shifts);
    d.circles_ = circles;
    d.derive_topology();
    d.derive_faces();
    d.group_layout(layout);
    d.finish_regions();
    d.solve_turning();
    d.build_action_model();
    return d;
}

void LagrangianDiagram::derive_topology()
{
    const int V = num_crossings();
    xidx_.clear();
    for (int v = 0; v < V; ++v) {
        if (xs_[v].over != 13 && xs_[v].over != 24)
            throw Error("syntax", "crossing " + xs_[v].id + ": over must be 13 or 24");
        if (!xidx_.emplace(xs_[v].id, v).second)
            throw Error("syntax", "duplicate crossing id " + xs_[v].id);
    }
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int v = 0; v < V; ++v)
        for (int s = 0; s < 4; ++s) {
            if (xs_[v].edge[s] <= 0)
                throw Error("syntax", "edge ids must be positive integers");
            occ[xs_[v].edge[s]].push_back({v, s});
        }
    for (auto& [id, o] : occ)
        if (o.size() != 2)
            throw Error("open-strand", "edge " + std::to_string(id) + " has " + std::to_string(o.size()) +
                                           " ends (expected 2)");
    edge_ids_.clear();
    eidx_.clear();
    for (auto& [id, o] : occ) {
        eidx_[id] = static_cast<int>(edge_ids_.size());
        edge_ids_.push_back(id);
    }
    const int E = num_edges();

    // orientation: node 4v+s, node 4V is "incoming"
    ParityUF uf(4 * V + 1);
    const int T = 4 * V;
    bool ok = true;
    for (int v = 0; v < V; ++v) {
        ok &= uf.unite(4 * v + 0, T, 0);
        ok &= uf.unite(4 * v + 2, T, 1);
        ok &= uf.unite(4 * v + 1, 4 * v + 3, 1);
    }
    for (auto& [id, o] : occ)
        ok &= uf.unite(4 * o[0].first + o[0].second, 4 * o[1].first + o[1].second, 1);
    if (!ok)
        throw Error("orientation", "inconsistent strand orientation");
    in_.assign(V, {});
    auto [rt, pt] = uf.find(T);
    for (int v = 0; v < V; ++v)
        for (int s = 0; s < 4; ++s) {
            auto [r, p] = uf.find(4 * v + s);
            if (r != rt)
                throw Error("orientation", "orientation of the strand through " + xs_[v].id + " is undetermined");
            in_[v][s] = (p ^ pt) == 0;
        }
    tail_.assign(E, {});
    head_.assign(E, {});
    for (auto& [id, o] : occ) {
        int e = eidx_[id];
        for (auto [v, s] : o) {
            if (in_[v][s])
                head_[e] = {v, s};
            else
                tail_[e] = {v, s};
        }
    }
    // components, each started at its smallest edge
    comp_of_edge_.assign(E, -1);
    comps_.clear();
    for (int e0 = 0; e0 < E; ++e0) {
        if (comp_of_edge_[e0] >= 0)
            continue;
        std::vector<int> c;
        int e = e0;
        do {
            comp_of_edge_[e] = static_cast<int>(comps_.size());
            c.push_back(e);
            e = next_edge(e);
        } while (e != e0);
        comps_.push_back(std::move(c));
    }
    UF pu(std::max(V, 1));
    for (int e = 0; e < E; ++e)
        pu.unite(tail_[e].crossing, head_[e].crossing);
    piece_of_.assign(V, -1);
    std::map<int, int> pid;
    for (int v = 0; v < V; ++v) {
        int r = pu.find(v);
        auto it = pid.find(r);
        if (it == pid.end())
            it = pid.emplace(r, static_cast<int>(pid.size())).first;
        piece_of_[v] = it->second;
    }
    pieces_ = static_cast<int>(pid.size());
}

int LagrangianDiagram::next_edge(int e) const
{
    auto [v, s] = head_[e];
    return eidx_.at(xs_[v].edge[(s + 2) % 4]);
}

void LagrangianDiagram::derive_faces()
{
    const int E = num_edges();
    cycles_.clear();
    dart_cycle_.assign(E, {-1, -1});
    for (int e0 = 0; e0 < E; ++e0)
        for (int f0 = 1; f0 >= 0; --f0) {
            if (dart_cycle_[e0][f0] >= 0)
                continue;
            FaceCycle c;
            int ci = static_cast<int>(cycles_.size());
            int e = e0;
            bool f = f0;
            while (dart_cycle_[e][f] < 0) {
                dart_cycle_[e][f] = ci;
                c.darts.push_back({e, f});
                Slot arr = f ? head_[e] : tail_[e];
                int q = (arr.slot + 3) % 4;
                c.corners.push_back({arr.crossing, q});
                int ne = eidx_.at(xs_[arr.crossing].edge[q]);
                bool nf = tail_[ne].crossing == arr.crossing && tail_[ne].slot == q;
                e = ne;
                f = nf;
            }
            if (e != e0 || f != static_cast<bool>(f0))
                throw Error("planarity", "face traversal did not close");
            c.piece = piece_of_[c.corners[0].crossing];
            cycles_.push_back(std::move(c));
        }
    // Euler check per piece: V - E + F = 2
    std::vector<int> pv(pieces_, 0), pe(pieces_, 0), pf(pieces_, 0);
    for (int v = 0; v < num_crossings(); ++v)
        pv[piece_of_[v]]++;
    for (int e = 0; e < E; ++e)
        pe[piece_of_[tail_[e].crossing]]++;
    for (auto& c : cycles_)
        pf[c.piece]++;
    for (int p = 0; p < pieces_; ++p)
        if (pv[p] - pe[p] + pf[p] != 2)
            throw Error("euler", "V - E + F = " + std::to_string(pv[p] - pe[p] + pf[p]) + " (expected 2)");
}

static std::string cycle_label(const LagrangianDiagram& d, const std::vector<Dart>& darts)
{
    int best = -1;
    bool side = true;
    for (const Dart& x : darts) {
        int id = d.edge_id(x.edge);
        if (best < 0 || id < best || (id == best && x.fwd && !side)) {
            best = id;
            side = x.fwd;
        }
    }
    return std::to_string(best) + (side ? "L" : "R");
}

static int cycle_of_label(const LagrangianDiagram& d, const std::string& label)
{
    if (label.size() < 2)
        return -1;
    char side = label.back();
    if (side != 'L' && side != 'R')
        return -1;
    int id = 0;
    try {
        id = std::stoi(label.substr(0, label.size() - 1));
    } catch (...) {
        return -1;
    }
    int e = d.edge_index(id);
    if (e < 0)
        return -1;
    return d.dart_cycle(e, side == 'L');
}

void LagrangianDiagram::group_default(const std::map<std::string, double>& areas, const std::string& outer_hint)
{
    const int C = static_cast<int>(cycles_.size());
    std::vector<std::string> label(C);
    for (int c = 0; c < C; ++c)
        label[c] = cycle_label(*this, cycles_[c].darts);
    std::vector<int> outer(pieces_, -1);
    if (!outer_hint.empty()) {
        int c = cycle_of_label(*this, outer_hint);
        if (c < 0)
            throw Error("region", "unknown region " + outer_hint);
        outer[cycles_[c].piece] = c;
    }
    for (const auto& [k, a] : areas) {
        (void)a;
        bool found = false;
        for (int c = 0; c < C; ++c)
            found |= label[c] == k;
        if (!found)
            throw Error("region", "area given for unknown region " + k);
    }
    for (int p = 0; p < pieces_; ++p) {
        if (outer[p] >= 0)
            continue;
        if (!areas.empty()) {
            std::vector<int> missing;
            for (int c = 0; c < C; ++c)
                if (cycles_[c].piece == p && !areas.count(label[c]))
                    missing.push_back(c);
            if (missing.size() != 1)
                throw Error("region", "area lines must cover every bounded region and leave out exactly one");
            outer[p] = missing[0];
        }
    }
    // otherwise the first face (by label) making every rotation number 0
    std::vector<std::vector<int>> cand(pieces_);
    for (int c = 0; c < C; ++c)
        cand[cycles_[c].piece].push_back(c);
    for (auto& v : cand)
        std::sort(v.begin(), v.end(), [&](int x, int y) { return natural_less(label[x], label[y]); });
    std::vector<bool> fixed(pieces_);
    for (int p = 0; p < pieces_; ++p) {
        fixed[p] = outer[p] >= 0;
        if (!fixed[p])
            outer[p] = cand[p][0];
    }
    auto set_ccw = [&]() {
        for (int c = 0; c < C; ++c)
            cycles_[c].ccw = true;
        for (int p = 0; p < pieces_; ++p)
            cycles_[outer[p]].ccw = false;
    };
    for (int p = 0; p < pieces_; ++p) {
        if (fixed[p])
            continue;
        bool found = false;
        for (int c : cand[p]) {
            outer[p] = c;
            set_ccw();
            bool good = true;
            try {
                solve_turning();
                for (int k = 0; k < num_components(); ++k) {
                    if (piece_of_[tail_[comps_[k][0]].crossing] != p)
                        continue;
                    Rat s = 0;
                    for (int e : comps_[k])
                        s += turn_[e];
                    good &= s == Rat(0);
                }
            } catch (const Error&) {
                good = false;
            }
            if (good) {
                found = true;
                break;
            }
        }
        if (!found)
            outer[p] = cand[p][0];
    }
    regions_.clear();
    Region unb;
    unb.bounded = false;
    for (int c = 0; c < C; ++c) {
        bool is_outer = std::find(outer.begin(), outer.end(), c) != outer.end();
        cycles_[c].ccw = !is_outer;
        if (is_outer) {
            unb.cycles.push_back(c);
        } else {
            Region r;
            r.cycles = {c};
            auto it = areas.find(label[c]);
            if (it != areas.end())
                r.area = it->second;
            regions_.push_back(r);
        }
    }
    regions_.push_back(unb);
    has_areas_ = !areas.empty();
}

void LagrangianDiagram::group_layout(const RegionLayout& layout)
{
    const int C = static_cast<int>(cycles_.size());
    std::vector<int> seen(C, 0);
    regions_.clear();
    int n_unb = 0;
    bool all_area = true;
    for (auto& c : cycles_)
        c.ccw = false;
    for (const auto& g : layout.groups) {
        Region r;
        r.bounded = g.outer >= 0;
        for (std::size_t i = 0; i < g.reps.size(); ++i) {
            int c = dart_cycle_[g.reps[i].edge][g.reps[i].fwd ? 1 : 0];
            if (seen[c]++)
                throw Error("region", "layout lists a face cycle twice");
            r.cycles.push_back(c);
            cycles_[c].ccw = static_cast<int>(i) == g.outer;
        }
        if (!r.bounded)
            ++n_unb;
        else if (g.area)
            r.area = *g.area;
        else
            all_area = false;
        regions_.push_back(r);
    }
    for (int c = 0; c < C; ++c)
        if (!seen[c])
            throw Error("region", "layout misses a face cycle");
    if (n_unb != 1)
        throw Error("region", "exactly one unbounded region required");
    has_areas_ = all_area;
}

void LagrangianDiagram::finish_regions()
{
    // label, sort, index
    for (auto& r : regions_) {
        std::vector<Dart> all;
        for (int c : r.cycles)
            all.insert(all.end(), cycles_[c].darts.begin(), cycles_[c].darts.end());
        r.id = cycle_label(*this, all);
    }
    std::stable_sort(regions_.begin(), regions_.end(),
                     [](const Region& a, const Region& b) { return natural_less(a.id, b.id); });
    unbounded_ = -1;
    qreg_.assign(num_crossings(), {-1, -1, -1, -1});
    for (int i = 0; i < num_regions(); ++i) {
        if (!regions_[i].bounded)
            unbounded_ = i;
        for (int c : regions_[i].cycles) {
            cycles_[c].region = i;
            for (const Corner& k : cycles_[c].corners)
                qreg_[k.crossing][k.quadrant] = i;
        }
    }
    if (has_areas_) {
        for (const auto& r : regions_)
            if (r.bounded && !(r.area > 0))
                throw Error("area", "non-positive area for region " + r.id);
    }
}

void LagrangianDiagram::solve_turning()
{
    const int E = num_edges();
    const int C = static_cast<int>(cycles_.size());
    std::vector<std::vector<Rat>> A(C, std::vector<Rat>(E, Rat(0)));
    std::vector<std::vector<Rat>> B(C, std::vector<Rat>(1, Rat(0)));
    for (int c = 0; c < C; ++c) {
        for (const Dart& x : cycles_[c].darts)
            A[c][x.edge] += x.fwd ? 1 : -1;
        B[c][0] = Rat((cycles_[c].ccw ? 4 : -4) - static_cast<int>(cycles_[c].corners.size()));
    }
    auto sol = solve_rational(A, B);
    if (!sol)
        throw Error("planarity", "turning equations inconsistent (region layout does not embed)");
    turn_.assign(E, Rat(0));
    for (int e = 0; e < E; ++e)
        turn_[e] = (*sol)[e][0];
}

void LagrangianDiagram::build_action_model()
{
    const int E = num_edges();
    std::vector<int> br = bounded_regions();
    const int F = static_cast<int>(br.size());
    std::vector<std::vector<Rat>> A(F, std::vector<Rat>(E, Rat(0)));
    std::vector<std::vector<Rat>> B(F, std::vector<Rat>(F, Rat(0)));
    for (int i = 0; i < F; ++i) {
        for (int c : regions_[br[i]].cycles)
            for (const Dart& x : cycles_[c].darts)
                A[i][x.edge] += x.fwd ? 1 : -1;
        B[i][i] = -1;
    }
    std::vector<std::vector<Rat>> X(E, std::vector<Rat>(F, Rat(0)));
    if (F > 0) {
        auto sol = solve_rational(A, B);
        if (!sol)
            throw Error("planarity", "area equations inconsistent");
        X = *sol;
    }
    const int V = num_crossings();
    std::vector<AreaForm> zover(V), zunder(V);
    closure_.assign(num_components(), AreaForm{std::vector<Rat>(F, Rat(0))});
    for (int k = 0; k < num_components(); ++k) {
        std::vector<Rat> z(F, Rat(0));
        for (int e : comps_[k]) {
            for (int j = 0; j < F; ++j)
                z[j] += X[e][j];
            auto [w, s] = head_[e];
            if (is_over(w, s))
                zover[w].coef = z;
            else
                zunder[w].coef = z;
        }
        closure_[k].coef = z;
    }
    act_form_.assign(V, AreaForm{std::vector<Rat>(F, Rat(0))});
    for (int v = 0; v < V; ++v)
        for (int j = 0; j < F; ++j)
            act_form_[v].coef[j] = zover[v].coef[j] - zunder[v].coef[j];
}

// ---------------------------------------------------------------- accessors

int LagrangianDiagram::crossing_index(const std::string& id) const
{
    auto it = xidx_.find(id);
    return it == xidx_.end() ? -1 : it->second;
}

std::vector<std::string> LagrangianDiagram::chord_names() const
{
    std::vector<std::string> r;
    for (const auto& x : xs_)
        r.push_back(x.id);
    return r;
}

int LagrangianDiagram::edge_index(int id) const
{
    auto it = eidx_.find(id);
    return it == eidx_.end() ? -1 : it->second;
}

int LagrangianDiagram::over_out_slot(int v) const
{
    int p = over_parity(v);
    return in_[v][p] ? p + 2 : p;
}

int LagrangianDiagram::under_out_slot(int v) const
{
    int p = 1 - over_parity(v);
    return in_[v][p] ? p + 2 : p;
}

int LagrangianDiagram::sign(int v) const
{
    int d = ((under_out_slot(v) - over_out_slot(v)) % 4 + 4) % 4;
    return d == 1 ? 1 : -1;
}

int LagrangianDiagram::region_index(const std::string& id) const
{
    for (int i = 0; i < num_regions(); ++i)
        if (regions_[i].id == id)
            return i;
    return -1;
}

std::vector<int> LagrangianDiagram::bounded_regions() const
{
    std::vector<int> r;
    for (int i = 0; i < num_regions(); ++i)
        if (regions_[i].bounded)
            r.push_back(i);
    return r;
}

std::vector<double> LagrangianDiagram::area_vector() const
{
    if (!has_areas_)
        throw Error("missing-areas", "diagram has no area data");
    std::vector<double> a;
    for (int i : bounded_regions())
        a.push_back(regions_[i].area);
    return a;
}

RegionLayout LagrangianDiagram::layout() const
{
    RegionLayout L;
    for (const auto& r : regions_) {
        RegionLayout::Group g;
        for (std::size_t i = 0; i < r.cycles.size(); ++i) {
            const FaceCycle& c = cycles_[r.cycles[i]];
            g.reps.push_back(c.darts[0]);
            if (c.ccw)
                g.outer = static_cast<int>(i);
        }
        if (r.bounded && has_areas_)
            g.area = r.area;
        L.groups.push_back(g);
    }
    return L;
}

// ---------------------------------------------------------------- file format

std::map<std::string, double> parse_area_lines(const std::string& text)
{
    std::map<std::string, double> areas;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string kw, id, val;
        ls >> kw;
        if (kw != "area")
            continue;
        if (!(ls >> id >> val))
            throw Error("syntax", "bad area line: " + line);
        double a = 0;
        try {
            std::size_t pos = 0;
            a = std::stod(val, &pos);
            if (pos != val.size())
                throw 0;
        } catch (...) {
            throw Error("syntax", "bad area value: " + line);
        }
        if (!(a > 0))
            throw Error("area", "non-positive area for region " + id);
        areas[id] = a;
    }
    return areas;
}

Diagram parse_diagram(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool header = false;
    std::vector<Crossing> xs;
    std::vector<GradeShift> shifts;
    std::string outer;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty())
            continue;
        if (!header) {
            if (line != "lagrangian-diagram v1")
                throw Error("syntax", "line " + std::to_string(lineno) + ": expected header 'lagrangian-diagram v1'");
            header = true;
            continue;
        }
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t)
            tok.push_back(t);
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (tok[0] == "X") {
            if (tok.size() < 3)
                throw Error("syntax", where + "crossing line too short");
            Crossing x;
            x.id = tok[1];
            std::vector<int> es;
            bool have_over = false;
            for (std::size_t i = 2; i < tok.size(); ++i) {
                if (tok[i].rfind("over=", 0) == 0) {
                    std::string o = tok[i].substr(5);
                    if (o != "13" && o != "24")
                        throw Error("syntax", where + "over must be 13 or 24");
                    x.over = std::stoi(o);
                    have_over = true;
                    continue;
                }
                try {
                    std::size_t pos = 0;
                    int e = std::stoi(tok[i], &pos);
                    if (pos != tok[i].size())
                        throw 0;
                    es.push_back(e);
                } catch (...) {
                    throw Error("syntax", where + "bad edge id '" + tok[i] + "'");
                }
            }
            if (es.size() != 4)
                throw Error("non-4-valent", where + "crossing " + x.id + " has " + std::to_string(es.size()) +
                                                " edge ends");
            if (!have_over)
                throw Error("syntax", where + "missing over=13|24");
            std::copy(es.begin(), es.end(), x.edge.begin());
            xs.push_back(x);
        } else if (tok[0] == "area") {
            if (tok.size() != 3)
                throw Error("syntax", where + "bad area line");
        } else if (tok[0] == "grade-shift") {
            if (tok.size() != 4)
                throw Error("syntax", where + "bad grade-shift line");
            try {
                shifts.push_back({std::stoi(tok[1]), std::stoi(tok[2]), std::stoi(tok[3])});
            } catch (...) {
                throw Error("syntax", where + "bad grade-shift line");
            }
        } else if (tok[0] == "outer") {
            if (tok.size() != 2)
                throw Error("syntax", where + "bad outer line");
            outer = tok[1];
        } else {
            throw Error("syntax", where + "unknown keyword '" + tok[0] + "'");
        }
    }
    if (!header)
        throw Error("syntax", "missing header");
    if (xs.empty())
        throw Error("syntax", "no crossings");
    auto areas = parse_area_lines(text);
    return Diagram::build(std::move(xs), areas, std::move(shifts), outer);
}

std::string to_text(const Diagram& d)
{
    std::ostringstream o;
    o << "lagrangian-diagram v1\n";
    for (const auto& x : d.crossings()) {
        o << "X " << x.id;
        for (int e : x.edge)
            o << ' ' << e;
        o << " over=" << x.over << '\n';
    }
    if (d.num_pieces() == 1)
        o << "outer " << d.regions()[d.unbounded_region()].id << '\n';
    if (d.has_areas()) {
        for (int r : d.bounded_regions()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", d.regions()[r].area);
            o << "area " << d.regions()[r].id << ' ' << buf << '\n';
        }
    }
    for (const auto& s : d.shifts())
        o << "grade-shift " << s.i << ' ' << s.j << ' ' << s.k << '\n';
    return o.str();
}

Diagram load_diagram(const std::string& name)
{
    if (name == "unknot")
        return figure_eight_unknot();
    if (name == "hopf")
        return torus_2n_diagram(2);
    if (name == "trefoil")
        return torus_2n_diagram(3);
    if (name.rfind("torus:", 0) == 0) {
        int n = 0;
        try {
            n = std::stoi(name.substr(6));
        } catch (...) {
            throw Error("usage", "bad torus size in " + name);
        }
        if (n < 1)
            throw Error("usage", "torus size must be >= 1");
        return torus_2n_diagram(n);
    }
    std::ifstream f(name);
    if (!f)
        throw Error("io", "cannot open " + name);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_diagram(ss.str());
}

// ---------------------------------------------------------------- standard diagrams

Diagram figure_eight_unknot()
{
    std::vector<Crossing> xs{{"a", {2, 1, 1, 2}, 24}};
    return Diagram::build(xs, {{"1R", 1.0}, {"2L", 1.0}}, {});
}

std::vector<int> rotation_numbers(const Diagram& d)
{
    std::vector<int> r;
    for (int k = 0; k < d.num_components(); ++k) {
        Rat s = 0;
        for (int e : d.component(k))
            s += d.turning()[e];
        Rat q = s / 4;
        if (!is_integer(q))
            throw Error("grading", "non-integral rotation number");
        r.push_back(static_cast<int>(q.numerator()));
    }
    return r;
}

namespace {

// absolute tangent directions (quarter turns) of each strand at each crossing
struct Frames {
    std::vector<Rat> over_dir, under_dir;
};

Frames strand_frames(const Diagram& d, const std::vector<int>& base_edges)
{
    const int V = d.num_crossings();
    std::vector<Rat> phi(V, Rat(0));
    std::vector<bool> seen(V, false);
    // BFS over crossings along edges
    for (int root = 0; root < V; ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int e = 0; e < d.num_edges(); ++e) {
                auto t = d.tail(e);
                auto h = d.head(e);
                Rat te = d.turning()[e];
                if (t.crossing == v && !seen[h.crossing]) {
                    phi[h.crossing] = phi[v] + t.slot + te - h.slot - 2;
                    seen[h.crossing] = true;
                    queue.push_back(h.crossing);
                } else if (h.crossing == v && !seen[t.crossing]) {
                    phi[t.crossing] = phi[v] - t.slot - te + h.slot + 2;
                    seen[t.crossing] = true;
                    queue.push_back(t.crossing);
                }
            }
        }
    }
    for (int e = 0; e < d.num_edges(); ++e) {
        auto t = d.tail(e);
        auto h = d.head(e);
        Rat gap = phi[h.crossing] + h.slot + 2 - phi[t.crossing] - t.slot - d.turning()[e];
        if (rat_mod4(gap) != Rat(0))
            throw Error("grading", "tangent frames inconsistent along edge " + std::to_string(d.edge_id(e)));
    }
    Frames fr;
    fr.over_dir.assign(V, Rat(0));
    fr.under_dir.assign(V, Rat(0));
    for (int k = 0; k < d.num_components(); ++k) {
        const auto& comp = d.component(k);
        int start = 0;
        for (std::size_t i = 0; i < comp.size(); ++i)
            if (comp[i] == base_edges[k])
                start = static_cast<int>(i);
        auto t0 = d.tail(comp[start]);
        Rat theta = rat_mod4(phi[t0.crossing] + t0.slot);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            int e = comp[(start + i) % comp.size()];
            theta += d.turning()[e];
            auto h = d.head(e);
            if (d.is_over(h.crossing, h.slot))
                fr.over_dir[h.crossing] = theta;
            else
                fr.under_dir[h.crossing] = theta;
        }
    }
    return fr;
}

}  // namespace

// degree of each chord before per-pair normalisation; second: component pair
static std::vector<int> raw_degrees(const Diagram& d, const std::vector<int>& base_edges)
{
    auto rot = rotation_numbers(d);
    for (int k = 0; k < static_cast<int>(rot.size()); ++k)
        if (rot[k] != 0)
            throw Error("grading", "component " + std::to_string(k + 1) + " has nonzero Maslov number " +
                                       std::to_string(2 * rot[k]));
    Frames fr = strand_frames(d, base_edges);
    std::vector<int> deg(d.num_crossings());
    for (int v = 0; v < d.num_crossings(); ++v) {
        Rat mu2 = fr.under_dir[v] + 1 - fr.over_dir[v];
        Rat mu = mu2 / 2;
        if (!is_integer(mu))
            throw Error("grading", "non-integral Maslov index at " + d.crossing(v).id);
        deg[v] = static_cast<int>(mu.numerator()) - 1;
    }
    // mixed pairs: bring the first chord of each pair (in crossing order) into {0,1}
    std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> ref;
    for (int v = 0; v < d.num_crossings(); ++v) {
        int lo = d.under_component(v), up = d.over_component(v);
        if (lo == up)
            continue;
        auto key = std::minmax(lo, up);
        auto it = ref.find(key);
        if (it == ref.end()) {
            int delta = deg[v] - (((deg[v] % 2) + 2) % 2);
            it = ref.emplace(key, std::make_pair(std::make_pair(lo, up), delta)).first;
        }
        auto [dir, delta] = it->second;
        deg[v] += (dir == std::make_pair(lo, up)) ? -delta : delta;
    }
    return deg;
}

static std::vector<int> default_bases(const Diagram& d)
{
    std::vector<int> b;
    for (int k = 0; k < d.num_components(); ++k)
        b.push_back(d.component(k)[0]);
    return b;
}

std::map<std::string, int> grading_from_base(const Diagram& d, const std::vector<GradeShift>& shifts,
                                             const std::vector<int>& base_edges)
{
    std::vector<int> deg = raw_degrees(d, base_edges);
    std::map<std::string, int> out;
    for (int v = 0; v < d.num_crossings(); ++v) {
        int lo = d.under_component(v), up = d.over_component(v);
        if (lo != up) {
            bool found = false;
            for (const auto& s : shifts) {
                if (s.i - 1 == lo && s.j - 1 == up) {
                    deg[v] += s.k;
                    found = true;
                } else if (s.i - 1 == up && s.j - 1 == lo) {
                    deg[v] -= s.k;
                    found = true;
                }
            }
            if (!found)
                throw Error("grading", "missing shifts for chords between components " + std::to_string(lo + 1) +
                                           " and " + std::to_string(up + 1));
        }
        out[d.crossing(v).id] = deg[v];
    }
    return out;
}

std::map<std::string, int> grading(const Diagram& d, const std::vector<GradeShift>& shifts)
{
    return grading_from_base(d, shifts, default_bases(d));
}

std::map<std::string, int> grading(const Diagram& d) { return grading(d, d.shifts()); }

// ---------------------------------------------------------------- actions

static std::vector<double> solve_heights(const Diagram& d, const std::vector<double>& areas)
{
    const int K = d.num_components();
    std::vector<double> h(K, 0.0);
    if (K < 2)
        return h;
    std::vector<int> mixed;
    for (int v = 0; v < d.num_crossings(); ++v)
        if (d.over_component(v) != d.under_component(v))
            mixed.push_back(v);
    if (mixed.empty())
        return h;
    // variables: h_k = p_k - m_k (k >= 1), delta = dp - dm; maximise delta (capped)
    const int nv = 2 * (K - 1) + 2;
    auto hp = [](int k) { return 2 * (k - 1); };
    std::vector<LpRow> rows;
    for (int v : mixed) {
        LpRow r;
        r.a.assign(nv, 0.0);
        int up = d.over_component(v), lo = d.under_component(v);
        if (up > 0) {
            r.a[hp(up)] += 1;
            r.a[hp(up) + 1] -= 1;
        }
        if (lo > 0) {
            r.a[hp(lo)] -= 1;
            r.a[hp(lo) + 1] += 1;
        }
        r.a[nv - 2] -= 1;
        r.a[nv - 1] += 1;
        r.sense = 1;
        r.b = -d.action_form(v).eval(areas);
        rows.push_back(r);
    }
    double total = 0;
    for (double a : areas)
        total += a;
    LpRow cap;
    cap.a.assign(nv, 0.0);
    cap.a[nv - 2] = 1;
    cap.a[nv - 1] = -1;
    cap.sense = -1;
    cap.b = total + 1;
    rows.push_back(cap);
    std::vector<double> c(nv, 0.0);
    c[nv - 2] = -1;
    c[nv - 1] = 1;
    auto res = lp_minimize(c, rows);
    if (res.status != LpResult::Optimal)
        throw Error("action", "cannot place components at consistent heights");
    double delta = res.x[nv - 2] - res.x[nv - 1];
    if (delta <= 1e-9)
        throw Error("action", "computed action <= 0 for every choice of component heights");
    for (int k = 1; k < K; ++k)
        h[k] = res.x[hp(k)] - res.x[hp(k) + 1];
    return h;
}

std::vector<double> component_heights(const Diagram& d) { return solve_heights(d, d.area_vector()); }

bool areas_realizable(const Diagram& d, std::string* why)
{
    try {
        action_vector(d);
        return true;
    } catch (const Error& e) {
        if (why)
            *why = e.what();
        return false;
    }
}

std::vector<double> action_vector(const Diagram& d)
{
    std::vector<double> areas = d.area_vector();
    double scale = 0;
    for (double a : areas)
        scale += a;
    for (int k = 0; k < d.num_components(); ++k) {
        double s = d.closure_form(k).eval(areas);
        if (std::fabs(s) > 1e-9 * std::max(1.0, scale))
            throw Error("action", "component " + std::to_string(k + 1) + " encloses nonzero signed area " +
                                      std::to_string(s) + " (areas unrealizable)");
    }
    std::vector<double> h = solve_heights(d, areas);
    std::vector<double> out(d.num_crossings());
    for (int v = 0; v < d.num_crossings(); ++v) {
        out[v] = d.action_form(v).eval(areas) + h[d.over_component(v)] - h[d.under_component(v)];
        if (!(out[v] > 1e-12))
            throw Error("action", "computed action <= 0 at " + d.crossing(v).id);
    }
    return out;
}

std::map<std::string, double> actions(const Diagram& d)
{
    auto a = action_vector(d);
    std::map<std::string, double> m;
    for (int v = 0; v < d.num_crossings(); ++v)
        m[d.crossing(v).id] = a[v];
    return m;
}

Diagram with_areas(const Diagram& d, const std::vector<double>& bounded_areas)
{
    RegionLayout L = d.layout();
    auto br = d.bounded_regions();
    if (bounded_areas.size() != br.size())
        throw Error("area", "wrong number of areas");
    std::map<int, double> by_region;
    for (std::size_t i = 0; i < br.size(); ++i)
        by_region[br[i]] = bounded_areas[i];
    for (std::size_t g = 0; g < L.groups.size(); ++g)
        if (d.regions()[g].bounded)
            L.groups[g].area = by_region[static_cast<int>(g)];
    return Diagram::build_with_layout(d.crossings(), L, d.shifts(), d.circles());
}

Diagram with_area_map(const Diagram& d, const std::map<std::string, double>& areas)
{
    std::vector<double> a;
    for (int r : d.bounded_regions()) {
        auto it = areas.find(d.regions()[r].id);
        if (it == areas.end())
            throw Error("area", "no area for region " + d.regions()[r].id);
        a.push_back(it->second);
    }
    for (const auto& [k, v] : areas) {
        (void)v;
        int r = d.region_index(k);
        if (r < 0 || !d.regions()[r].bounded)
            throw Error("region", "area given for unknown region " + k);
    }
    return with_areas(d, a);
}

// LP over realizable area vectors; `extra` adds rows in (y, heights) variables
static std::optional<std::vector<double>> realize_impl(
    const Diagram& d, const std::function<void(std::vector<LpRow>&, int, int)>& extra)
{
    auto br = d.bounded_regions();
    const int F = static_cast<int>(br.size());
    const int K = d.num_components();
    const int nv = F + 2 * (K - 1);
    std::vector<LpRow> rows;
    auto form_row = [&](const AreaForm& f, LpRow& r) {
        double c0 = 0;
        for (int j = 0; j < F; ++j) {
            double c = boost::rational_cast<double>(f.coef[j]);
            r.a[j] += c;
            c0 += c;
        }
        return c0;  // constant from area = 1 + y
    };
    for (int k = 0; k < K; ++k) {
        LpRow r{std::vector<double>(nv, 0.0), 0, 0};
        double c0 = form_row(d.closure_form(k), r);
        r.b = -c0;
        rows.push_back(r);
    }
    for (int v = 0; v < d.num_crossings(); ++v) {
        LpRow r{std::vector<double>(nv, 0.0), 1, 0};
        double c0 = form_row(d.action_form(v), r);
        int up = d.over_component(v), lo = d.under_component(v);
        if (up != lo) {
            if (up > 0) {
                r.a[F + 2 * (up - 1)] += 1;
                r.a[F + 2 * (up - 1) + 1] -= 1;
            }
            if (lo > 0) {
                r.a[F + 2 * (lo - 1)] -= 1;
                r.a[F + 2 * (lo - 1) + 1] += 1;
            }
        }
        r.b = 1 - c0;
        rows.push_back(r);
    }
    if (extra)
        extra(rows, F, nv);
    std::vector<double> c(nv, 0.0);
    for (int j = 0; j < F; ++j)
        c[j] = 1;
    auto res = lp_minimize(c, rows);
    if (res.status != LpResult::Optimal)
        return std::nullopt;
    std::vector<double> a(F);
    for (int j = 0; j < F; ++j)
        a[j] = 1 + std::max(0.0, res.x[j]);
    // tidy tiny floating noise
    for (double& x : a)
        x = std::round(x * 1e9) / 1e9;
    return a;
}

std::optional<std::vector<double>> realize_areas(const Diagram& d) { return realize_impl(d, nullptr); }

std::pair<int, int> positive_regions(const Diagram& d, int v)
{
    int r[2], k = 0;
    for (int q = 0; q < 4; ++q)
        if (d.quadrant_positive(v, q))
            r[k++] = d.quadrant_region(v, q);
    return {r[0], r[1]};
}

std::optional<std::vector<double>> contracting_areas(const Diagram& d, const std::string& c)
{
    int v = d.crossing_index(c);
    if (v < 0)
        throw Error("unknown-chord", c);
    auto [r1, r2] = positive_regions(d, v);
    auto br = d.bounded_regions();
    auto pos = [&](int r) {
        return static_cast<int>(std::find(br.begin(), br.end(), r) - br.begin());
    };
    return realize_impl(d, [&](std::vector<LpRow>& rows, int F, int nv) {
        std::vector<int> targets;
        if (r1 == r2) {
            if (d.regions()[r1].bounded)
                targets = {r1, r1};
        } else {
            if (d.regions()[r1].bounded)
                targets.push_back(r1);
            if (d.regions()[r2].bounded)
                targets.push_back(r2);
        }
        if (targets.empty())
            return;
        int mult = (r1 == r2) ? 2 : 1;
        std::vector<int> uniq = targets;
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int r : uniq) {
            // area(r) - mult * A(c) >= 1
            LpRow row{std::vector<double>(nv, 0.0), 1, 0};
            double c0 = 1;
            row.a[pos(r)] += 1;
            const AreaForm& f = d.action_form(v);
            for (int j = 0; j < F; ++j) {
                double cf = boost::rational_cast<double>(f.coef[j]) * mult;
                row.a[j] -= cf;
                c0 -= cf;
            }
            int up = d.over_component(v), lo = d.under_component(v);
            if (up != lo) {
                if (up > 0) {
                    row.a[F + 2 * (up - 1)] -= mult;
                    row.a[F + 2 * (up - 1) + 1] += mult;
                }
                if (lo > 0) {
                    row.a[F + 2 * (lo - 1)] += mult;
                    row.a[F + 2 * (lo - 1) + 1] -= mult;
                }
            }
            row.b = 1 - c0;
            rows.push_back(row);
        }
    });
}

Contractible is_contractible(const Diagram& d, const std::string& c)
{
    int v = d.crossing_index(c);
    if (v < 0)
        throw Error("unknown-chord", c);
    if (!d.has_areas())
        throw Error("missing-areas", "contractibility needs areas");
    double A = action_vector(d)[v];
    auto [r1, r2] = positive_regions(d, v);
    auto big = [&](int r, double need) { return !d.regions()[r].bounded || d.regions()[r].area > need; };
    bool ok = (r1 == r2) ? big(r1, 2 * A) : (big(r1, A) && big(r2, A));
    return ok ? Contractible::Yes : Contractible::NoOnThisDiagram;
}

// ---------------------------------------------------------------- classical invariants

int writhe(const Diagram& d)
{
    int w = 0;
    for (int v = 0; v < d.num_crossings(); ++v)
        w += d.sign(v);
    return w;
}

std::vector<int> tb(const Diagram& d)
{
    std::vector<int> t(d.num_components(), 0);
    for (int v = 0; v < d.num_crossings(); ++v)
        if (d.over_component(v) == d.under_component(v))
            t[d.over_component(v)] += d.sign(v);
    return t;
}

std::map<std::pair<int, int>, int> linking_numbers(const Diagram& d)
{
    std::map<std::pair<int, int>, int> twice;
    for (int v = 0; v < d.num_crossings(); ++v) {
        int a = d.over_component(v), b = d.under_component(v);
        if (a != b)
            twice[std::minmax(a, b)] += d.sign(v);
    }
    std::map<std::pair<int, int>, int> lk;
    for (auto& [k, s] : twice)
        lk[k] = s / 2;
    return lk;
}

}  // namespace lch
