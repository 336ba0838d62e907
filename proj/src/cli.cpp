#include "lch/cli.hpp"

#include "lch/augmentation.hpp"
#include "lch/cobordism.hpp"
#include "lch/torus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace lch {

namespace {

using ojson = nlohmann::ordered_json;

struct Opts {
    std::string diagram;
    bool json = false;
    long long budget = 0;
    std::string areas, steps, aug, matrix, order;
    bool count = false, check_d2 = false, check_degree = false, check_filtration = false, oracle = false, verify = false;
    bool census = false, catalan = false, serial = false;
    int n = 0;
};

std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw Error("io", "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Diagram load_input(const Opts& o)
{
    Diagram d = load_diagram(o.diagram);
    if (!o.areas.empty())
        d = with_area_map(d, parse_area_lines(slurp(o.areas)));
    return d;
}

ojson head(const std::string& cmd, const Opts& o)
{
    ojson j;
    j["schema"] = "lch/1";
    j["command"] = cmd;
    ojson in;
    if (!o.diagram.empty())
        in["diagram"] = o.diagram;
    if (!o.areas.empty())
        in["areas"] = o.areas;
    if (!o.steps.empty())
        in["steps"] = o.steps;
    if (!o.aug.empty())
        in["aug"] = o.aug;
    if (o.n)
        in["n"] = o.n;
    j["inputs"] = in;
    return j;
}

ojson check_json(const Check& c)
{
    ojson j{{"ok", c.ok}};
    if (!c.ok) {
        j["generator"] = c.generator;
        j["word"] = c.word;
        j["what"] = c.what;
    }
    return j;
}

std::string check_text(const std::string& name, const Check& c)
{
    std::string s = name + (c.ok ? " pass" : " FAIL");
    if (!c.ok)
        s += " at " + c.generator + (c.word.empty() ? "" : " (" + c.word + ")") + (c.what.empty() ? "" : ": " + c.what);
    return s;
}

void emit(std::ostream& out, const Opts& o, const ojson& j, const std::string& text)
{
    if (o.json)
        out << j.dump(2) << '\n';
    else
        out << text;
}

// ---------------------------------------------------------------- subcommands

int cmd_validate(const Opts& o, std::ostream& out)
{
    Diagram d = load_input(o);
    ojson j = head("validate", o);
    std::ostringstream t;
    bool ok = true;
    j["crossings"] = d.num_crossings();
    j["components"] = d.num_components();
    j["regions"] = d.num_regions();
    t << "crossings " << d.num_crossings() << "\ncomponents " << d.num_components() << "\nregions " << d.num_regions()
      << '\n';
    auto rot = rotation_numbers(d);
    j["rotation"] = rot;
    bool maslov0 = std::all_of(rot.begin(), rot.end(), [](int r) { return r == 0; });
    t << "rotation";
    for (int r : rot)
        t << ' ' << r;
    t << (maslov0 ? "" : "  (nonzero: gradings are not integral)") << '\n';
    ok = ok && maslov0;
    j["tb"] = tb(d);
    t << "tb";
    for (int x : tb(d))
        t << ' ' << x;
    t << '\n';
    std::string why;
    bool real = areas_realizable(d, &why);
    j["areas_given"] = d.has_areas();
    j["areas_realizable"] = real;
    t << "areas " << (d.has_areas() ? "given" : "absent") << ", " << (real ? "realizable" : "not realizable: " + why)
      << '\n';
    if (d.has_areas())
        ok = ok && real;
    ojson chords = ojson::array();
    std::map<std::string, int> deg;
    bool graded = true;
    try {
        deg = grading(d);
    } catch (const Error& e) {
        graded = false;
        j["grading_error"] = e.what();
        t << "grading unavailable: " << e.what() << '\n';
    }
    std::map<std::string, double> act;
    if (real)
        act = actions(d.has_areas() ? d : with_areas(d, *realize_areas(d)));
    auto names = d.chord_names();
    std::sort(names.begin(), names.end(), natural_less);
    for (const auto& c : names) {
        int v = d.crossing_index(c);
        ojson x{{"name", c}, {"sign", d.sign(v)}};
        t << "chord " << c << " sign " << (d.sign(v) > 0 ? "+" : "-");
        if (graded) {
            x["degree"] = deg.at(c);
            t << " deg " << deg.at(c);
        }
        if (!act.empty()) {
            x["action"] = act.at(c);
            t << " action " << act.at(c);
        }
        t << " " << (is_contractible(d, c) == Contractible::Yes ? "contractible" : "not-contractible-here") << '\n';
        x["contractible"] = is_contractible(d, c) == Contractible::Yes;
        chords.push_back(x);
    }
    j["chords"] = chords;
    j["ok"] = ok;
    t << (ok ? "valid\n" : "INVALID\n");
    emit(out, o, j, t.str());
    return ok ? 0 : 1;
}

int cmd_dga(const Opts& o, std::ostream& out)
{
    Diagram d = load_input(o);
    ChekanovDGA a = build_dga(d, o.budget);
    ojson j = head("dga", o);
    std::ostringstream t;
    ojson gens = ojson::array();
    for (int g = 0; g < a.size(); ++g) {
        ojson x{{"name", a.table->names[g]}, {"degree", a.table->degrees[g]}};
        if (a.table->has_actions())
            x["action"] = a.table->actions[g];
        x["d"] = render(a.diff[g]);
        gens.push_back(x);
    }
    j["generators"] = gens;
    t << render_dga(a);
    bool ok = true;
    ojson checks = ojson::object();
    auto run_check = [&](bool want, const char* key, const char* label, Check (*f)(const ChekanovDGA&)) {
        if (!want)
            return;
        Check c = f(a);
        checks[key] = check_json(c);
        t << check_text(label, c) << '\n';
        ok = ok && c.ok;
    };
    run_check(o.check_d2, "d_squared", "d^2=0", check_d_squared);
    run_check(o.check_degree, "degree", "degree", check_degree);
    if (o.check_filtration && !a.table->has_actions())
        throw Error("usage", "--check-filtration needs areas");
    run_check(o.check_filtration, "filtration", "filtration", check_action_filtration);
    if (!checks.empty())
        j["checks"] = checks;
    if (o.oracle) {
        ojson orc = ojson::array();
        for (int v = 0; v < d.num_crossings(); ++v) {
            bool complete = true;
            auto w = enumerate_one_positive(d, v, o.budget);
            auto c = coverage_oracle(d, {v}, 6, &complete);
            bool same = same_disks(w, c);
            ok = ok && same;
            orc.push_back({{"chord", d.crossing(v).id},
                           {"walk", w.size()},
                           {"oracle", c.size()},
                           {"agree", same},
                           {"complete", complete}});
            t << "oracle " << d.crossing(v).id << " walk " << w.size() << " oracle " << c.size()
              << (same ? " agree" : " DISAGREE") << (complete ? "" : " (oracle bound reached)") << '\n';
        }
        j["oracle"] = orc;
    }
    j["ok"] = ok;
    emit(out, o, j, t.str());
    return ok ? 0 : 1;
}

std::vector<Augmentation> sorted_augs(const ChekanovDGA& a)
{
    auto v = enumerate_augmentations(a);
    std::sort(v.begin(), v.end(),
              [](const Augmentation& x, const Augmentation& y) { return render_augmentation(x) < render_augmentation(y); });
    return v;
}

int cmd_augmentations(const Opts& o, std::ostream& out)
{
    Diagram d = load_input(o);
    ChekanovDGA a = build_dga(d, o.budget);
    ojson j = head("augmentations", o);
    std::ostringstream t;
    if (!o.aug.empty()) {
        Augmentation e = parse_augmentation(o.aug, a);
        std::string why;
        bool ok = is_augmentation(a, e, &why);
        j["augmentation"] = render_augmentation(e);
        j["is_augmentation"] = ok;
        if (!ok)
            j["witness"] = why;
        t << render_augmentation(e) << (ok ? " is an augmentation\n" : " is NOT an augmentation: " + why + "\n");
        emit(out, o, j, t.str());
        return ok ? 0 : 1;
    }
    auto augs = sorted_augs(a);
    ojson list = ojson::array();
    if (o.count)
        t << "count " << augs.size() << '\n';
    for (const auto& e : augs) {
        list.push_back(render_augmentation(e));
        t << render_augmentation(e) << '\n';
    }
    j["count"] = augs.size();
    j["augmentations"] = list;
    emit(out, o, j, t.str());
    return 0;
}

int cmd_linearized(const Opts& o, std::ostream& out)
{
    Diagram d = load_input(o);
    ChekanovDGA a = build_dga(d, o.budget);
    ojson j = head("linearized", o);
    std::ostringstream t;
    std::vector<Augmentation> augs;
    if (!o.aug.empty()) {
        Augmentation e = parse_augmentation(o.aug, a);
        std::string why;
        if (!is_augmentation(a, e, &why))
            throw Error("precondition", render_augmentation(e) + " is not an augmentation: " + why);
        augs.push_back(e);
    } else {
        augs = sorted_augs(a);
    }
    bool ok = true;
    ojson rows = ojson::array();
    for (const auto& e : augs) {
        LinearizedComplex c = linearize(a, e);
        bool d2 = d_squared_zero(c);
        auto ranks = o.serial ? homology_serial(c) : homology(c);
        ok = ok && d2;
        ojson r{{"augmentation", render_augmentation(e)}, {"d_squared_zero", d2}};
        ojson rk = ojson::object();
        for (auto [deg, x] : ranks)
            rk[std::to_string(deg)] = x;
        r["ranks"] = rk;
        r["total"] = total_rank(ranks);
        r["poincare"] = poincare_polynomial(ranks);
        rows.push_back(r);
        t << render_augmentation(e) << ": " << poincare_polynomial(ranks) << "  total " << total_rank(ranks)
          << (d2 ? "" : "  d^2 != 0") << '\n';
    }
    j["homology"] = rows;
    j["ok"] = ok;
    emit(out, o, j, t.str());
    return ok ? 0 : 1;
}

int cmd_cobordism(const Opts& o, std::ostream& out)
{
    if (o.steps.empty())
        throw Error("usage", "cobordism needs --steps <script>");
    Diagram d = load_input(o);
    auto steps = parse_steps(slurp(o.steps));
    std::string base = std::filesystem::path(o.steps).parent_path().string();
    WordResult w = run_word(d, steps, o.budget, base);
    ojson j = head("cobordism", o);
    std::ostringstream t;
    bool ok = true;
    ojson js = ojson::array();
    for (std::size_t i = 0; i < w.steps.size(); ++i) {
        const auto& m = w.steps[i];
        ojson x{{"kind", steps[i].kind},
                {"chords", steps[i].chords},
                {"source_chords", m.source.size()},
                {"target_chords", m.target.size()}};
        t << "step " << i + 1 << ' ' << steps[i].kind;
        for (const auto& c : steps[i].chords)
            t << ' ' << c;
        t << "  " << m.source.size() << " -> " << m.target.size() << " chords";
        if (!m.corrected.empty()) {
            x["corrected"] = m.corrected;
            t << "  corrected";
            for (const auto& c : m.corrected)
                t << ' ' << c;
        }
        if (o.verify) {
            Check c = verify_chain_map(m);
            x["chain_map"] = check_json(c);
            t << "  " << check_text("chain-map", c);
            ok = ok && c.ok;
        }
        t << '\n';
        js.push_back(x);
    }
    j["steps"] = js;
    ojson img = ojson::object();
    for (int g = 0; g < w.composed.source.size(); ++g)
        img[w.composed.source.table->names[g]] = render(w.composed.images[g]);
    j["images"] = img;
    t << "images\n" << render_morphism(w.composed);
    if (o.verify) {
        Check c = verify_chain_map(w.composed);
        j["composed_chain_map"] = check_json(c);
        t << check_text("composed chain-map", c) << '\n';
        ok = ok && c.ok;
    }
    const Diagram& end = w.diagrams.back();
    j["saddles"] = w.saddles;
    j["minima"] = w.minima;
    if (end.num_crossings() == 0 && end.circles() == 0) {
        auto eg = euler_genus(w, d.num_components());
        Augmentation e = pullback(w.composed, ground_augmentation());
        j["filling"] = {{"chi", eg.chi}, {"genus", eg.genus}, {"augmentation", render_augmentation(e)}};
        t << "filling chi " << eg.chi << " genus " << eg.genus << " augmentation " << render_augmentation(e) << '\n';
        std::string why;
        bool aug_ok = is_augmentation(w.composed.source, e, &why);
        ok = ok && aug_ok;
        if (!aug_ok)
            t << "induced map is NOT an augmentation: " << why << '\n';
    } else if (!o.aug.empty()) {
        Augmentation e = parse_augmentation(o.aug, w.composed.target);
        std::string why;
        if (!is_augmentation(w.composed.target, e, &why))
            throw Error("precondition", "--aug is not an augmentation of the final diagram: " + why);
        Augmentation p = pullback(w.composed, e);
        j["pullback"] = render_augmentation(p);
        t << "pullback " << render_augmentation(p) << '\n';
    }
    j["ok"] = ok;
    emit(out, o, j, t.str());
    return ok ? 0 : 1;
}

ResolutionOrder parse_order(const std::string& s)
{
    ResolutionOrder r;
    std::stringstream ss(s);
    std::string x;
    while (std::getline(ss, x, ',')) {
        try {
            r.push_back(std::stoi(x));
        } catch (...) {
            throw Error("usage", "bad resolution order '" + s + "'");
        }
    }
    return r;
}

int cmd_torus(const Opts& o, std::ostream& out)
{
    int n = o.n;
    if (n < 1)
        throw Error("usage", "torus needs --n <n>, n >= 1");
    int modes = o.census + o.catalan + !o.matrix.empty() + !o.order.empty();
    if (modes != 1)
        throw Error("usage", "torus takes exactly one of --census, --catalan, --matrix, --order");
    ojson j = head("torus", o);
    std::ostringstream t;
    bool ok = true;
    if (o.catalan) {
        auto cls = catalan_classes(n);
        ojson list = ojson::array();
        for (const auto& c : cls)
            list.push_back(render_values(c));
        j["classes"] = list;
        j["count"] = cls.size();
        j["catalan_number"] = catalan_number(n);
        ok = static_cast<long long>(cls.size()) == catalan_number(n);
        t << "classes " << cls.size() << " (C_" << n << " = " << catalan_number(n) << ")\n";
        for (const auto& c : cls)
            t << render_values(c) << '\n';
    } else if (!o.matrix.empty()) {
        Diagram d = torus_2n_diagram(n);
        ChekanovDGA a = build_dga(d, o.budget);
        Augmentation e = parse_augmentation(o.matrix, a);
        std::vector<int> b = b_values(e, n);
        bool mat = b_matrix_augmentation(b);
        bool diff = is_augmentation(a, e);
        ok = mat == diff;
        j["values"] = render_values(b);
        j["matrix"] = mat;
        j["differential"] = diff;
        t << render_values(b) << " matrix " << (mat ? "augmentation" : "not an augmentation") << ", differential "
          << (diff ? "agrees" : "says no") << '\n';
        if (!ok)
            t << "DISAGREE\n";
    } else if (!o.order.empty()) {
        ResolutionOrder s = parse_order(o.order);
        InducedFilling f = induced_augmentation(n, s, o.budget);
        auto fast = induced_fast(n, s);
        ok = f.certified && fast == f.values;
        j["order"] = render_values(s);
        j["normal_form"] = render_values(normal_form(s));
        j["augmentation"] = render_values(f.values);
        j["fast"] = render_values(fast);
        j["genus"] = f.genus;
        j["saddles"] = f.saddles;
        j["minima"] = f.minima;
        j["corrected_saddles"] = f.corrected_saddles;
        j["certified"] = f.certified;
        t << "order " << render_values(s) << " class " << render_values(normal_form(s)) << " augmentation "
          << render_values(f.values) << " fast " << render_values(fast) << " genus " << f.genus
          << (f.certified ? "" : " UNCERTIFIED") << '\n';
    } else {
        Census c = o.serial ? fillings_census_serial(n, o.budget) : fillings_census(n, o.budget);
        ojson rows = ojson::array();
        t << "class augmentation genus\n";
        for (const auto& r : c.rows) {
            rows.push_back({{"class", render_values(r.representative)},
                            {"augmentation", render_values(r.slow)},
                            {"fast", render_values(r.fast)},
                            {"genus", r.genus},
                            {"corrected_saddles", r.corrected_saddles},
                            {"certified", r.certified}});
            t << render_values(r.representative) << ' ' << render_values(r.slow) << ' ' << r.genus
              << (r.certified ? "" : " UNCERTIFIED") << '\n';
        }
        j["rows"] = rows;
        j["summary"] = {{"classes", c.rows.size()},        {"augmentations", c.expected},
                        {"distinct", c.distinct},          {"zero_hit", c.zero_hit},
                        {"all_hit", c.all_hit},            {"genus_ok", c.genus_ok},
                        {"fast_matches_slow", c.fast_matches_slow}, {"certified", c.certified}};
        t << "classes " << c.rows.size() << ", distinct augmentations " << c.distinct << " of " << c.expected
          << (n % 2 == 0 ? " (zero augmentation " + std::string(c.zero_hit ? "hit" : "not hit") + ")" : "") << '\n';
        t << "all hit " << (c.all_hit ? "yes" : "no") << ", genus " << (c.genus_ok ? "ok" : "WRONG") << ", fast rule "
          << (c.fast_matches_slow ? "agrees" : "DISAGREES") << ", certificates "
          << (c.certified ? "pass" : "FAIL") << '\n';
        ok = c.all_hit && c.genus_ok && c.fast_matches_slow && c.certified;
    }
    j["ok"] = ok;
    emit(out, o, j, t.str());
    return ok ? 0 : 1;
}

bool input_error(const std::string& kind)
{
    return kind == "usage" || kind == "syntax" || kind == "io" || kind == "unknown-chord";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chekanov-Eliashberg DGA of Legendrian links and their cobordism maps", "lch"};
    app.require_subcommand(1);
    Opts o;
    o.budget = default_budget();
    auto common = [&](CLI::App* s, bool with_diagram) {
        if (with_diagram)
            s->add_option("diagram", o.diagram, "diagram file or builtin: unknot, hopf, trefoil, torus:<n>")->required();
        s->add_flag("--json", o.json, "machine readable output");
        s->add_option("--budget", o.budget, "search node budget (default LCH_BUDGET or 10^6)")->check(CLI::PositiveNumber);
        if (with_diagram)
            s->add_option("--areas", o.areas, "file of 'area <region> <value>' lines");
    };
    auto* v = app.add_subcommand("validate", "parse a diagram and report gradings, actions, tb");
    common(v, true);
    auto* g = app.add_subcommand("dga", "print the differential");
    common(g, true);
    g->add_flag("--check-d2", o.check_d2, "check d^2 = 0");
    g->add_flag("--check-degree", o.check_degree, "check that d lowers degree by one");
    g->add_flag("--check-filtration", o.check_filtration, "check that d lowers action");
    g->add_flag("--oracle", o.oracle, "cross-check disks against the coverage oracle");
    auto* a = app.add_subcommand("augmentations", "list augmentations");
    common(a, true);
    a->add_flag("--count", o.count, "print the count first");
    a->add_option("--aug", o.aug, "check one assignment, e.g. b1=1,b2=0");
    auto* l = app.add_subcommand("linearized", "linearized homology");
    common(l, true);
    l->add_option("--aug", o.aug, "augmentation (default: all)");
    l->add_flag("--serial", o.serial, "use the serial rank kernel");
    auto* c = app.add_subcommand("cobordism", "apply a word of elementary cobordisms");
    common(c, true);
    c->add_option("--steps", o.steps, "step script (json)")->required();
    c->add_flag("--verify", o.verify, "re-check every step as a chain map");
    c->add_option("--aug", o.aug, "augmentation of the final diagram to pull back");
    auto* t = app.add_subcommand("torus", "(2,n) torus link fillings");
    common(t, false);
    t->add_option("--n", o.n, "number of crossings b_1..b_n")->required();
    t->add_flag("--census", o.census, "filling census over Catalan classes");
    t->add_flag("--catalan", o.catalan, "list Catalan class normal forms");
    t->add_option("--matrix", o.matrix, "test an assignment with the matrix criterion");
    t->add_option("--order", o.order, "induced augmentation of one resolution order, e.g. 2,1,3");
    t->add_flag("--serial", o.serial, "serial census");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "lch: " << e.what() << '\n';
        return 2;
    }
    try {
        if (v->parsed())
            return cmd_validate(o, out);
        if (g->parsed())
            return cmd_dga(o, out);
        if (a->parsed())
            return cmd_augmentations(o, out);
        if (l->parsed())
            return cmd_linearized(o, out);
        if (c->parsed())
            return cmd_cobordism(o, out);
        return cmd_torus(o, out);
    } catch (const Error& e) {
        err << "lch: " << e.what() << '\n';
        return input_error(e.kind) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "lch: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace lch
