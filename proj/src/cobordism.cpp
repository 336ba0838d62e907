#include "lch/cobordism.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "lch/linalg.hpp"

namespace lch {

namespace {

Poly target_gen(const ChekanovDGA& tgt, const std::string& name)
{
    int g = tgt.table->find(name);
    if (g < 0)
        throw Error("unknown-generator", "target has no chord " + name);
    return Poly::gen(tgt.table, static_cast<Gen>(g));
}

std::string mapped(const Relabel& r, const std::string& x)
{
    auto it = r.find(x);
    return it == r.end() ? x : it->second;
}

DgaMorphism relabel_morphism(const std::string& kind, const ChekanovDGA& src, const ChekanovDGA& tgt,
                             const Relabel& relabel, const std::vector<std::string>& skip = {})
{
    DgaMorphism m;
    m.kind = kind;
    m.source = src;
    m.target = tgt;
    for (int g = 0; g < src.size(); ++g) {
        const std::string& x = src.table->names[g];
        if (std::find(skip.begin(), skip.end(), x) != skip.end())
            m.images.push_back(Poly::zero(tgt.table));
        else
            m.images.push_back(target_gen(tgt, mapped(relabel, x)));
    }
    return m;
}

// move a source polynomial into the target through the relabeling
Poly carry(const Poly& p, const ChekanovDGA& tgt, const Relabel& relabel)
{
    std::unordered_map<std::string, std::string> r(relabel.begin(), relabel.end());
    return rename_into(p, tgt.table, r);
}

}  // namespace

DgaMorphism identity_morphism(const ChekanovDGA& a) { return relabel_morphism("identity", a, a, {}); }

DgaMorphism morphism_isotopy_simple(const ChekanovDGA& src, const ChekanovDGA& tgt, const Relabel& relabel)
{
    if (src.size() != tgt.size())
        throw Error("bookkeeping", "isotopy must keep the number of chords");
    auto m = relabel_morphism("isotopy-simple", src, tgt, relabel);
    certify(m);
    return m;
}

DgaMorphism morphism_l1a(const ChekanovDGA& src, const ChekanovDGA& tgt, const Relabel& relabel)
{
    if (src.size() != tgt.size())
        throw Error("bookkeeping", "L1a must keep the number of chords");
    auto m = relabel_morphism("L1a", src, tgt, relabel);
    certify(m);
    return m;
}

DgaMorphism morphism_l1b(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a, const std::string& b,
                         const std::string& c, const Relabel& relabel)
{
    if (src.size() != tgt.size())
        throw Error("bookkeeping", "L1b must keep the number of chords");
    auto m = relabel_morphism("L1b", src, tgt, relabel);
    Gen ga = src.table->at(a);
    m.images[ga] = m.images[ga] + target_gen(tgt, b) * target_gen(tgt, c);
    certify(m);
    return m;
}

DgaMorphism morphism_l2(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a, const std::string& b,
                        const Relabel& relabel)
{
    if (src.size() != tgt.size() + 2)
        throw Error("bookkeeping", "L2 must remove two chords");
    Gen ga = src.table->at(a), gb = src.table->at(b);
    Poly v = src.d(ga) + Poly::gen(src.table, gb);
    if (!(src.d(ga) + v == Poly::gen(src.table, gb)) ||
        std::find(src.d(ga).terms().begin(), src.d(ga).terms().end(), Word{gb}) == src.d(ga).terms().end())
        throw Error("precondition", "d " + a + " does not contain the term " + b);
    for (const Word& w : v.terms())
        for (Gen g : w)
            if (g == ga || g == gb)
                throw Error("precondition", "d " + a + " - " + b + " involves " + a + " or " + b);
    auto m = relabel_morphism("L2", src, tgt, relabel, {a, b});
    m.images[gb] = carry(v, tgt, relabel);
    certify(m);
    return m;
}

DgaMorphism morphism_l3(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a, const std::string& b,
                        const Relabel& relabel)
{
    if (src.size() + 2 != tgt.size())
        throw Error("bookkeeping", "L3 must add two chords");
    if (!tgt.table->has_actions())
        throw Error("precondition", "L3 needs target actions to order the chords");
    const GeneratorTable& T = *tgt.table;
    Gen ta = T.at(a), tb = T.at(b);
    Poly v = tgt.d(ta) + Poly::gen(tgt.table, tb);
    if (std::find(tgt.d(ta).terms().begin(), tgt.d(ta).terms().end(), Word{tb}) == tgt.d(ta).terms().end())
        throw Error("precondition", "d " + a + " does not contain the term " + b);
    for (const Word& w : v.terms())
        for (Gen g : w)
            if (g == ta || g == tb)
                throw Error("precondition", "d " + a + " - " + b + " involves " + a + " or " + b);
    // target chords in action order, ties by name
    std::vector<int> order(T.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (T.actions[x] != T.actions[y])
            return T.actions[x] < T.actions[y];
        return natural_less(T.names[x], T.names[y]);
    });
    std::vector<int> rank(T.size());
    for (int i = 0; i < T.size(); ++i)
        rank[order[i]] = i;
    // images of target chords used for the bars: identity until replaced
    std::vector<Poly> bar(T.size());
    for (int g = 0; g < T.size(); ++g)
        bar[g] = Poly::gen(tgt.table, static_cast<Gen>(g));
    Poly pa = Poly::gen(tgt.table, ta);
    std::vector<Poly> image_of_target(T.size());
    for (int idx : order) {
        if (idx == ta || idx == tb)
            continue;
        Poly img = Poly::gen(tgt.table, static_cast<Gen>(idx));
        if (rank[idx] > rank[tb]) {
            for (const Word& w : tgt.d(static_cast<Gen>(idx)).terms()) {
                // split at the first a; the b's before it separate the blocks
                std::size_t first_a = std::find(w.begin(), w.end(), ta) - w.begin();
                std::vector<std::size_t> bpos;
                for (std::size_t i = 0; i < first_a; ++i)
                    if (w[i] == tb)
                        bpos.push_back(i);
                if (bpos.empty())
                    continue;
                auto block = [&](std::size_t from, std::size_t to) {
                    return Poly::word(tgt.table, Word(w.begin() + from, w.begin() + to));
                };
                std::vector<Poly> B;
                std::size_t prev = 0;
                for (std::size_t p : bpos) {
                    B.push_back(block(prev, p));
                    prev = p + 1;
                }
                Poly A = block(prev, w.size());
                const int k = static_cast<int>(B.size());
                for (int j = 0; j < k; ++j) {
                    Poly term = Poly::one(tgt.table);
                    for (int i = 0; i < j; ++i)
                        term = term * substitute(B[i], bar, tgt.table) * v;
                    term = term * substitute(B[j], bar, tgt.table) * pa;
                    for (int i = j + 1; i < k; ++i)
                        term = term * B[i] * Poly::gen(tgt.table, tb);
                    img += term * A;
                }
            }
        }
        image_of_target[idx] = img;
        bar[idx] = img;
    }
    DgaMorphism m;
    m.kind = "L3";
    m.source = src;
    m.target = tgt;
    for (int g = 0; g < src.size(); ++g) {
        std::string x = mapped(relabel, src.table->names[g]);
        int t = T.find(x);
        if (t < 0 || t == ta || t == tb)
            throw Error("bookkeeping", "L3 relabel does not reach a surviving chord for " + src.table->names[g]);
        m.images.push_back(image_of_target[t]);
    }
    certify(m);
    return m;
}

DgaMorphism morphism_minimum(const Diagram& src_diagram, const ChekanovDGA& src, const ChekanovDGA& tgt,
                             const std::string& a)
{
    int v = src_diagram.crossing_index(a);
    if (v < 0)
        throw Error("unknown-chord", a);
    int comp = src_diagram.over_component(v);
    if (src_diagram.under_component(v) != comp)
        throw Error("precondition", a + " is not a self chord");
    int on_comp = 0;
    for (int w = 0; w < src_diagram.num_crossings(); ++w)
        if (src_diagram.over_component(w) == comp || src_diagram.under_component(w) == comp)
            ++on_comp;
    if (on_comp != 1)
        throw Error("precondition", "the component of " + a + " has extra chords");
    if (src.table->degrees[src.table->at(a)] != 1)
        throw Error("precondition", "the component of " + a + " is not a standard unknot");
    // remove_component checks that nothing is linked or nested
    (void)remove_component(src_diagram, comp);
    if (src.size() != tgt.size() + 1)
        throw Error("bookkeeping", "minimum must remove one chord");
    auto m = relabel_morphism("minimum", src, tgt, {}, {a});
    certify(m);
    return m;
}

namespace {

// sum of lower-action words w with d(w) equal to the chain-map defect at c, or nothing.
// Candidates are the defect's words with one factor d(g) folded back into g.
std::optional<Poly> chain_correction(const DgaMorphism& m, Gen c)
{
    const ChekanovDGA& T = m.target;
    Poly defect = apply_differential(T, m.images[c]) + substitute(m.source.d(c), m.images, T.table);
    if (defect.is_zero())
        return Poly::zero(T.table);
    const auto& S = *m.source.table;
    const bool acts = S.has_actions() && T.table->has_actions();
    std::set<Word> seen;
    std::vector<Word> cands;
    for (const Word& t : defect.terms())
        for (int g = 0; g < T.size(); ++g) {
            if (acts && !(T.table->actions[g] < S.actions[c]))
                continue;
            for (const Word& piece : T.d(static_cast<Gen>(g)).terms())
                for (std::size_t i = 0; i + piece.size() <= t.size(); ++i) {
                    if (!std::equal(piece.begin(), piece.end(), t.begin() + static_cast<long>(i)))
                        continue;
                    Word w(t.begin(), t.begin() + static_cast<long>(i));
                    w.push_back(static_cast<Gen>(g));
                    w.insert(w.end(), t.begin() + static_cast<long>(i + piece.size()), t.end());
                    if (seen.insert(w).second)
                        cands.push_back(std::move(w));
                }
        }
    std::map<Word, int> row;
    auto row_of = [&](const Word& w) { return row.emplace(w, static_cast<int>(row.size())).first->second; };
    std::vector<std::vector<int>> cols;
    for (const Word& w : cands) {
        std::vector<int> col;
        Poly dw = apply_differential(T, Poly::word(T.table, w));
        for (const Word& x : dw.terms())
            col.push_back(row_of(x));
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    std::vector<int> b;
    for (const Word& x : defect.terms())
        b.push_back(row_of(x));
    std::sort(b.begin(), b.end());
    auto used = gf2_solve_sparse(cols, std::move(b));
    if (!used)
        return std::nullopt;
    Poly fix = Poly::zero(T.table);
    for (int j : *used)
        fix.toggle(cands[j]);
    return fix;
}

}  // namespace

DgaMorphism morphism_saddle(const Diagram& src_diagram, const ChekanovDGA& src, const Diagram& tgt_diagram,
                            const ChekanovDGA& tgt, const std::string& a, long long budget, bool correct)
{
    int va = src_diagram.crossing_index(a);
    if (va < 0)
        throw Error("unknown-chord", a);
    Gen ga = src.table->at(a);
    if (src.table->degrees[ga] != 0)
        throw Error("precondition", "saddle chord " + a + " has degree " + std::to_string(src.table->degrees[ga]));
    if (src.size() != tgt.size() + 1 || tgt.table->find(a) >= 0)
        throw Error("bookkeeping", "saddle target must be the resolution at " + a);
    (void)tgt_diagram;
    DgaMorphism m;
    m.kind = "saddle";
    m.source = src;
    m.target = tgt;
    m.resolved = ga;
    // psi0: a to 1, everything else to itself
    std::vector<Poly> psi0;
    for (int g = 0; g < src.size(); ++g)
        psi0.push_back(g == ga ? Poly::one(tgt.table) : target_gen(tgt, src.table->names[g]));
    // two-positive disks, blocks before and after the a corner
    std::vector<std::vector<std::pair<Word, Word>>> blocks(src.size());
    for (int g = 0; g < src.size(); ++g) {
        if (g == ga)
            continue;
        int vc = src_diagram.crossing_index(src.table->names[g]);
        for (const Disk& k : enumerate_two_positive(src_diagram, vc, va, budget)) {
            Word b1, b2;
            for (int i = 0; i < static_cast<int>(k.negatives.size()); ++i)
                (i < k.split ? b1 : b2).push_back(static_cast<Gen>(src.table->at(src_diagram.crossing(k.negatives[i]).id)));
            blocks[g].push_back({b1, b2});
        }
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
        m.swapped_blocks = attempt == 1;
        m.psi1.assign(src.size(), Poly::zero(tgt.table));
        m.images.clear();
        for (int g = 0; g < src.size(); ++g) {
            Poly p = Poly::zero(tgt.table);
            for (const auto& [b1, b2] : blocks[g]) {
                Word w = m.swapped_blocks ? b2 : b1;
                const Word& rest = m.swapped_blocks ? b1 : b2;
                w.insert(w.end(), rest.begin(), rest.end());
                p += substitute(Poly::word(src.table, w), psi0, tgt.table);
            }
            m.psi1[g] = p;
            m.images.push_back(psi0[g] + p);
        }
        if (verify_chain_map(m).ok)
            return m;
    }
    m.swapped_blocks = false;
    if (correct) {
        // rebuild with the plain block order, then repair generators in action order
        DgaMorphism fixed = m;
        fixed.psi1.assign(src.size(), Poly::zero(tgt.table));
        fixed.images.clear();
        for (int g = 0; g < src.size(); ++g) {
            Poly p = Poly::zero(tgt.table);
            for (const auto& [b1, b2] : blocks[g]) {
                Word w = b1;
                w.insert(w.end(), b2.begin(), b2.end());
                p += substitute(Poly::word(src.table, w), psi0, tgt.table);
            }
            fixed.psi1[g] = p;
            fixed.images.push_back(psi0[g] + p);
        }
        std::vector<int> order(src.size());
        std::iota(order.begin(), order.end(), 0);
        if (src.table->has_actions())
            std::stable_sort(order.begin(), order.end(),
                             [&](int x, int y) { return src.table->actions[x] < src.table->actions[y]; });
        bool ok = true;
        for (int g : order) {
            if (src.table->degrees[g] == 0 || g == ga)
                continue;
            auto fix = chain_correction(fixed, static_cast<Gen>(g));
            if (!fix) {
                ok = false;
                break;
            }
            if (!fix->is_zero()) {
                fixed.psi1[g] += *fix;
                fixed.images[g] += *fix;
                fixed.corrected.push_back(src.table->names[g]);
            }
        }
        if (ok && verify_chain_map(fixed).ok)
            return fixed;
    }
    Check c = verify_chain_map(m);
    throw Error("chain-map", "saddle at " + a + " fails its certificate at " + c.generator + " (" + c.word +
                                 "); the chord may not be simple");
}

DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner)
{
    if (!inner.target.table->same_universe(*outer.source.table))
        throw Error("endpoint", "composition endpoints do not match");
    DgaMorphism m;
    m.kind = "composite";
    m.source = inner.source;
    m.target = outer.target;
    for (const Poly& p : inner.images)
        m.images.push_back(substitute(p, outer.images, outer.target.table));
    return m;
}

Check verify_chain_map(const DgaMorphism& m)
{
    for (int g = 0; g < m.source.size(); ++g)
        for (const Word& w : m.images[g].terms())
            if (m.target.table->degree(w) != m.source.table->degrees[g])
                return {false, m.source.table->names[g], render_word(*m.target.table, w), "image not of the same degree"};
    for (int g = 0; g < m.source.size(); ++g) {
        Poly lhs = apply_differential(m.target, m.images[g]);
        Poly rhs = substitute(m.source.d(static_cast<Gen>(g)), m.images, m.target.table);
        if (lhs != rhs) {
            Poly diff = lhs + rhs;
            return {false, m.source.table->names[g], render_word(*m.target.table, diff.terms()[0]),
                    "d(phi x) != phi(d x)"};
        }
    }
    return {};
}

void certify(const DgaMorphism& m)
{
    Check c = verify_chain_map(m);
    if (!c.ok)
        throw Error("chain-map", m.kind + " morphism is not a chain map at " + c.generator + " (" + c.word + ")");
}

Poly saddle_preimage(const DgaMorphism& m, const Poly& y)
{
    if (m.kind != "saddle")
        throw Error("usage", "preimages are computed for saddle morphisms");
    // P(y) = y_src + P(psi1(y)), multiplicative, recursion ends by action
    std::vector<std::optional<Poly>> memo(m.target.size());
    std::function<Poly(Gen, int)> gen_pre = [&](Gen t, int depth) -> Poly {
        if (depth > 10000)
            throw Error("internal", "preimage recursion does not terminate");
        if (memo[t])
            return *memo[t];
        Gen s = m.source.table->at(m.target.table->names[t]);
        Poly r = Poly::gen(m.source.table, s);
        for (const Word& w : m.psi1[s].terms()) {
            Poly prod = Poly::one(m.source.table);
            for (Gen x : w)
                prod = prod * gen_pre(x, depth + 1);
            r += prod;
        }
        memo[t] = r;
        return r;
    };
    Poly out = Poly::zero(m.source.table);
    for (const Word& w : y.terms()) {
        Poly prod = Poly::one(m.source.table);
        for (Gen x : w)
            prod = prod * gen_pre(x, 0);
        out += prod;
    }
    return out;
}

std::string render_morphism(const DgaMorphism& m)
{
    std::ostringstream o;
    for (int g = 0; g < m.source.size(); ++g)
        o << m.source.table->names[g] << " -> " << render(m.images[g]) << '\n';
    return o.str();
}

// ---------------------------------------------------------------- words

std::vector<CobordismStep> parse_steps(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        throw Error("syntax", std::string("bad step script: ") + e.what());
    }
    if (!j.contains("steps") || !j["steps"].is_array())
        throw Error("syntax", "step script needs a \"steps\" array");
    std::vector<CobordismStep> out;
    static const std::vector<std::string> kinds{"isotopy-simple", "L1a", "L1b", "L2", "L3", "minimum", "saddle"};
    for (const auto& s : j["steps"]) {
        CobordismStep st;
        st.kind = s.value("kind", "");
        if (std::find(kinds.begin(), kinds.end(), st.kind) == kinds.end())
            throw Error("syntax", "unknown step kind '" + st.kind + "'");
        if (s.contains("chords"))
            st.chords = s["chords"].get<std::vector<std::string>>();
        if (s.contains("relabel"))
            st.relabel = s["relabel"].get<std::map<std::string, std::string>>();
        st.target = s.value("target", "");
        st.correct = s.value("correct", false);
        out.push_back(st);
    }
    return out;
}

WordResult run_word(const Diagram& start, const std::vector<CobordismStep>& steps, long long budget,
                    const std::string& base_dir)
{
    WordResult r;
    r.diagrams.push_back(start);
    ChekanovDGA cur = build_dga(start, budget);
    r.composed = identity_morphism(cur);
    auto need = [](const CobordismStep& s, std::size_t k) {
        if (s.chords.size() != k)
            throw Error("syntax", s.kind + " step needs " + std::to_string(k) + " chord(s)");
    };
    auto load_target = [&](const CobordismStep& s) {
        if (s.target.empty())
            throw Error("syntax", s.kind + " step needs a target diagram");
        std::string path = s.target;
        if (!base_dir.empty() && !std::filesystem::exists(path) && std::filesystem::exists(base_dir + "/" + path))
            path = base_dir + "/" + path;
        return load_diagram(path);
    };
    for (const auto& s : steps) {
        const Diagram& src_d = r.diagrams.back();
        Diagram tgt_d = src_d;
        DgaMorphism m;
        if (s.kind == "saddle") {
            need(s, 1);
            tgt_d = s.target.empty() ? resolve_0(src_d, s.chords[0]) : load_target(s);
            ChekanovDGA tgt = build_dga(tgt_d, budget);
            m = morphism_saddle(src_d, cur, tgt_d, tgt, s.chords[0], budget, s.correct);
            r.saddles++;
        } else if (s.kind == "minimum") {
            need(s, 1);
            int v = src_d.crossing_index(s.chords[0]);
            if (v < 0)
                throw Error("unknown-chord", s.chords[0]);
            tgt_d = s.target.empty() ? remove_component(src_d, src_d.over_component(v)) : load_target(s);
            ChekanovDGA tgt = build_dga(tgt_d, budget);
            m = morphism_minimum(src_d, cur, tgt, s.chords[0]);
            r.minima++;
        } else {
            tgt_d = load_target(s);
            ChekanovDGA tgt = build_dga(tgt_d, budget);
            if (s.kind == "isotopy-simple")
                m = morphism_isotopy_simple(cur, tgt, s.relabel);
            else if (s.kind == "L1a")
                m = morphism_l1a(cur, tgt, s.relabel);
            else if (s.kind == "L1b") {
                need(s, 3);
                m = morphism_l1b(cur, tgt, s.chords[0], s.chords[1], s.chords[2], s.relabel);
            } else if (s.kind == "L2") {
                need(s, 2);
                m = morphism_l2(cur, tgt, s.chords[0], s.chords[1], s.relabel);
            } else {
                need(s, 2);
                m = morphism_l3(cur, tgt, s.chords[0], s.chords[1], s.relabel);
            }
        }
        r.composed = compose(m, r.composed);
        cur = m.target;
        r.steps.push_back(std::move(m));
        r.diagrams.push_back(std::move(tgt_d));
    }
    return r;
}

EulerGenus euler_genus(int minima, int saddles, int boundary_components)
{
    int chi = minima - saddles;
    int twice = 2 - chi - boundary_components;
    if (twice < 0 || twice % 2)
        throw Error("genus", "Euler characteristic " + std::to_string(chi) + " does not fit " +
                                 std::to_string(boundary_components) + " boundary components");
    return {chi, twice / 2};
}

EulerGenus euler_genus(const WordResult& w, int boundary_components)
{
    const Diagram& end = w.diagrams.back();
    if (end.num_crossings() != 0 || end.circles() != 0)
        throw Error("genus", "word does not end at the empty link");
    return euler_genus(w.minima, w.saddles, boundary_components);
}

}  // namespace lch
