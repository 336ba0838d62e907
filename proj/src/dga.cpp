#include "lch/dga.hpp"

#include <exception>
#include <sstream>

#include <omp.h>

namespace lch {

namespace {

TablePtr table_for(const Diagram& d)
{
    auto deg = grading(d);
    std::vector<int> degrees;
    for (const auto& x : d.crossings())
        degrees.push_back(deg.at(x.id));
    std::vector<double> act;
    if (d.has_areas())
        act = action_vector(d);
    return make_table(d.chord_names(), degrees, act);
}

Poly diff_of(const Diagram& d, const TablePtr& t, int v, long long budget)
{
    std::vector<Word> ws;
    for (const Disk& k : enumerate_one_positive(d, v, budget)) {
        Word w;
        for (int b : k.negatives)
            w.push_back(static_cast<Gen>(b));
        ws.push_back(std::move(w));
    }
    return Poly::from_words(t, std::move(ws));
}

}  // namespace

ChekanovDGA build_dga_serial(const Diagram& d, long long budget)
{
    ChekanovDGA a;
    a.table = table_for(d);
    for (int v = 0; v < d.num_crossings(); ++v)
        a.diff.push_back(diff_of(d, a.table, v, budget));
    return a;
}

ChekanovDGA build_dga(const Diagram& d, long long budget)
{
    ChekanovDGA a;
    a.table = table_for(d);
    const int V = d.num_crossings();
    a.diff.assign(V, Poly::zero(a.table));
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int v = 0; v < V; ++v) {
        try {
            a.diff[v] = diff_of(d, a.table, v, budget);
        } catch (...) {
#pragma omp critical
            if (!err)
                err = std::current_exception();
        }
    }
    if (err)
        std::rethrow_exception(err);
    return a;
}

ChekanovDGA empty_dga()
{
    ChekanovDGA a;
    a.table = make_table({}, {});
    return a;
}

Poly apply_differential(const ChekanovDGA& a, const Poly& p)
{
    std::vector<Word> out;
    for (const Word& w : p.terms())
        for (std::size_t i = 0; i < w.size(); ++i)
            for (const Word& m : a.diff[w[i]].terms()) {
                Word r(w.begin(), w.begin() + i);
                r.insert(r.end(), m.begin(), m.end());
                r.insert(r.end(), w.begin() + i + 1, w.end());
                out.push_back(std::move(r));
            }
    return Poly::from_words(a.table, std::move(out));
}

Check check_d_squared(const ChekanovDGA& a)
{
    for (int g = 0; g < a.size(); ++g) {
        Poly dd = apply_differential(a, a.diff[g]);
        if (!dd.is_zero())
            return {false, a.table->names[g], render_word(*a.table, dd.terms()[0]), "d^2 != 0"};
    }
    return {};
}

Check check_degree(const ChekanovDGA& a)
{
    for (int g = 0; g < a.size(); ++g)
        for (const Word& w : a.diff[g].terms())
            if (a.table->degree(w) != a.table->degrees[g] - 1)
                return {false, a.table->names[g], render_word(*a.table, w), "word of wrong degree"};
    return {};
}

Check check_action_filtration(const ChekanovDGA& a)
{
    if (!a.table->has_actions())
        return {false, "", "", "no actions"};
    for (int g = 0; g < a.size(); ++g)
        for (const Word& w : a.diff[g].terms())
            if (!(a.table->action(w) < a.table->actions[g] - 1e-9))
                return {false, a.table->names[g], render_word(*a.table, w), "word does not drop action"};
    return {};
}

std::string render_dga(const ChekanovDGA& a)
{
    std::ostringstream o;
    for (int g = 0; g < a.size(); ++g) {
        o << a.table->names[g] << " deg " << a.table->degrees[g];
        if (a.table->has_actions())
            o << " action " << a.table->actions[g];
        o << " d = " << render(a.diff[g]) << '\n';
    }
    return o.str();
}

}  // namespace lch
