#include "lch/augmentation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lch/linalg.hpp"

namespace lch {

bool is_augmentation(const ChekanovDGA& a, const Augmentation& e, std::string* witness)
{
    for (int g = 0; g < a.size(); ++g) {
        if (e.values[g] && a.table->degrees[g] != 0) {
            if (witness)
                *witness = a.table->names[g] + " has degree " + std::to_string(a.table->degrees[g]);
            return false;
        }
        if (evaluate(a.d(static_cast<Gen>(g)), e.values)) {
            if (witness)
                *witness = "e(d " + a.table->names[g] + ") = 1";
            return false;
        }
    }
    return true;
}

namespace {

std::vector<int> degree_zero(const ChekanovDGA& a)
{
    std::vector<int> z;
    for (int g = 0; g < a.size(); ++g)
        if (a.table->degrees[g] == 0)
            z.push_back(g);
    return z;
}

Augmentation from_mask(const ChekanovDGA& a, const std::vector<int>& z, unsigned long long mask)
{
    Augmentation e{a.table, std::vector<std::uint8_t>(a.size(), 0)};
    for (std::size_t i = 0; i < z.size(); ++i)
        e.values[z[i]] = (mask >> i) & 1;
    return e;
}

// candidates only need checking on degree-one generators
bool passes(const ChekanovDGA& a, const std::vector<int>& ones, const Augmentation& e)
{
    for (int g : ones)
        if (evaluate(a.d(static_cast<Gen>(g)), e.values))
            return false;
    return true;
}

}  // namespace

std::vector<Augmentation> enumerate_augmentations_serial(const ChekanovDGA& a)
{
    auto z = degree_zero(a);
    if (z.size() > 40)
        throw Error("budget", "too many degree-0 chords to enumerate");
    std::vector<int> ones;
    for (int g = 0; g < a.size(); ++g)
        if (a.table->degrees[g] == 1)
            ones.push_back(g);
    std::vector<Augmentation> out;
    for (unsigned long long m = 0; m < (1ull << z.size()); ++m) {
        auto e = from_mask(a, z, m);
        if (passes(a, ones, e))
            out.push_back(std::move(e));
    }
    return out;
}

std::vector<Augmentation> enumerate_augmentations(const ChekanovDGA& a)
{
    auto z = degree_zero(a);
    if (z.size() > 40)
        throw Error("budget", "too many degree-0 chords to enumerate");
    std::vector<int> ones;
    for (int g = 0; g < a.size(); ++g)
        if (a.table->degrees[g] == 1)
            ones.push_back(g);
    const long long total = 1ll << z.size();
    std::vector<std::uint8_t> hit(total, 0);
#pragma omp parallel for schedule(static)
    for (long long m = 0; m < total; ++m)
        hit[m] = passes(a, ones, from_mask(a, z, static_cast<unsigned long long>(m)));
    std::vector<Augmentation> out;
    for (long long m = 0; m < total; ++m)
        if (hit[m])
            out.push_back(from_mask(a, z, static_cast<unsigned long long>(m)));
    return out;
}

Augmentation ground_augmentation() { return {make_table({}, {}), {}}; }

Augmentation pullback(const DgaMorphism& m, const Augmentation& e)
{
    Augmentation r{m.source.table, std::vector<std::uint8_t>(m.source.size(), 0)};
    for (int g = 0; g < m.source.size(); ++g)
        r.values[g] = static_cast<std::uint8_t>(evaluate(m.images[g], e.values));
    return r;
}

Augmentation pushforward_saddle(const DgaMorphism& m, const Augmentation& e)
{
    if (m.kind != "saddle")
        throw Error("usage", "pushforward is defined for saddle morphisms");
    if (e.values[m.resolved] != 1)
        throw Error("precondition", "augmentation does not send " + m.source.table->names[m.resolved] + " to 1");
    const auto& S = *m.source.table;
    const auto& T = *m.target.table;
    // e'(x) = e(x) + e'(psi1(x)); psi1(x) only uses chords below x, so go in dependency order
    const int n = T.size();
    std::vector<std::vector<int>> deps(n);
    std::vector<int> src_of(n);
    for (int t = 0; t < n; ++t) {
        src_of[t] = S.at(T.names[t]);
        for (const Word& w : m.psi1[src_of[t]].terms())
            for (Gen x : w)
                deps[t].push_back(x);
    }
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> users(n);
    for (int t = 0; t < n; ++t) {
        std::sort(deps[t].begin(), deps[t].end());
        deps[t].erase(std::unique(deps[t].begin(), deps[t].end()), deps[t].end());
        for (int x : deps[t]) {
            if (x == t)
                throw Error("precondition", "psi1 of " + T.names[t] + " involves itself");
            users[x].push_back(t);
            indeg[t]++;
        }
    }
    auto before = [&](int x, int y) {
        if (T.has_actions() && T.actions[x] != T.actions[y])
            return T.actions[x] < T.actions[y];
        return natural_less(T.names[x], T.names[y]);
    };
    std::vector<int> ready;
    for (int t = 0; t < n; ++t)
        if (!indeg[t])
            ready.push_back(t);
    Augmentation r{m.target.table, std::vector<std::uint8_t>(n, 0)};
    int done = 0;
    while (!ready.empty()) {
        auto it = std::min_element(ready.begin(), ready.end(), before);
        int t = *it;
        ready.erase(it);
        r.values[t] = static_cast<std::uint8_t>(e.values[src_of[t]] ^ evaluate(m.psi1[src_of[t]], r.values));
        ++done;
        for (int u : users[t])
            if (--indeg[u] == 0)
                ready.push_back(u);
    }
    if (done != n)
        throw Error("precondition", "psi1 has cyclic dependencies; no action order");
    std::string why;
    if (!is_augmentation(m.target, r, &why))
        throw Error("invariant", "pushforward is not an augmentation: " + why);
    if (!(pullback(m, r) == e))
        throw Error("invariant", "pushforward does not pull back to the given augmentation");
    return r;
}

LinearizedComplex linearize(const ChekanovDGA& a, const Augmentation& e)
{
    LinearizedComplex c;
    for (int g = 0; g < a.size(); ++g)
        c.basis[a.table->degrees[g]].push_back(static_cast<Gen>(g));
    std::vector<int> pos(a.size());
    for (auto& [deg, gens] : c.basis)
        for (std::size_t i = 0; i < gens.size(); ++i)
            pos[gens[i]] = static_cast<int>(i);
    for (auto& [deg, gens] : c.basis) {
        auto below = c.basis.find(deg - 1);
        std::size_t rows = below == c.basis.end() ? 0 : below->second.size();
        std::vector<std::vector<std::uint8_t>> M(rows, std::vector<std::uint8_t>(gens.size(), 0));
        for (std::size_t j = 0; j < gens.size(); ++j)
            for (const Word& w : a.d(gens[j]).terms())
                for (std::size_t i = 0; i < w.size(); ++i) {
                    // linear part of the conjugated word: all other letters evaluated
                    bool rest = true;
                    for (std::size_t k = 0; k < w.size() && rest; ++k)
                        if (k != i)
                            rest = e.values[w[k]];
                    if (rest)
                        M[pos[w[i]]][j] ^= 1;
                }
        c.d[deg] = std::move(M);
    }
    return c;
}

bool d_squared_zero(const LinearizedComplex& c)
{
    for (const auto& [deg, M] : c.d) {
        auto lower = c.d.find(deg - 1);
        if (lower == c.d.end())
            continue;
        const auto& L = lower->second;
        for (std::size_t r = 0; r < L.size(); ++r)
            for (std::size_t col = 0; col < (M.empty() ? 0 : M[0].size()); ++col) {
                int s = 0;
                for (std::size_t k = 0; k < M.size(); ++k)
                    s ^= L[r][k] & M[k][col];
                if (s)
                    return false;
            }
    }
    return true;
}

namespace {

std::vector<std::vector<std::uint64_t>> pack(const std::vector<std::vector<std::uint8_t>>& M, int& cols)
{
    cols = M.empty() ? 0 : static_cast<int>(M[0].size());
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& r : M) {
        std::vector<std::uint64_t> p((cols + 63) / 64, 0);
        for (int j = 0; j < cols; ++j)
            if (r[j])
                p[j / 64] |= 1ull << (j % 64);
        rows.push_back(std::move(p));
    }
    return rows;
}

std::map<int, int> homology_with(const LinearizedComplex& c, int (*rank)(std::vector<std::vector<std::uint64_t>>, int))
{
    std::map<int, int> rk;
    for (const auto& [deg, M] : c.d) {
        int cols = 0;
        auto p = pack(M, cols);
        rk[deg] = M.empty() ? 0 : rank(std::move(p), cols);
    }
    std::map<int, int> h;
    for (const auto& [deg, gens] : c.basis) {
        int in = rk.count(deg + 1) ? rk[deg + 1] : 0;
        h[deg] = static_cast<int>(gens.size()) - rk[deg] - in;
    }
    return h;
}

}  // namespace

std::map<int, int> homology(const LinearizedComplex& c) { return homology_with(c, gf2_rank_parallel); }
std::map<int, int> homology_serial(const LinearizedComplex& c) { return homology_with(c, gf2_rank); }

int total_rank(const std::map<int, int>& ranks)
{
    int s = 0;
    for (auto& [d, r] : ranks)
        s += r;
    return s;
}

bool seidel_check(const std::map<int, int>& ranks, int genus, int boundary_components)
{
    return total_rank(ranks) == 2 * genus + boundary_components;
}

std::string poincare_polynomial(const std::map<int, int>& ranks)
{
    std::ostringstream o;
    bool first = true;
    for (auto& [d, r] : ranks) {
        if (!r)
            continue;
        if (!first)
            o << " + ";
        first = false;
        if (d == 0)
            o << r;
        else {
            if (r != 1)
                o << r;
            o << "t";
            if (d != 1)
                o << '^' << d;
        }
    }
    return first ? "0" : o.str();
}

std::string render_augmentation(const Augmentation& e)
{
    std::vector<int> idx;
    for (int g = 0; g < e.table->size(); ++g)
        if (e.table->degrees[g] == 0)
            idx.push_back(g);
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return natural_less(e.table->names[x], e.table->names[y]); });
    std::string s;
    for (int g : idx) {
        if (!s.empty())
            s += ',';
        s += e.table->names[g] + "=" + std::to_string(e.values[g]);
    }
    return s;
}

Augmentation parse_augmentation(const std::string& text, const ChekanovDGA& a)
{
    Augmentation e{a.table, std::vector<std::uint8_t>(a.size(), 0)};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("usage", "bad augmentation entry '" + item + "'");
        std::string name = item.substr(0, eq), val = item.substr(eq + 1);
        if (val != "0" && val != "1")
            throw Error("usage", "augmentation values are 0 or 1");
        if (a.table->find(name) < 0)
            throw Error("unknown-chord", name);
        e.values[a.table->at(name)] = val == "1";
    }
    return e;
}

}  // namespace lch
