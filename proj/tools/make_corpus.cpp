// Writes the diagram corpus, move instances and filling scripts.
// usage: lch_make_corpus <dir>
#include "lch/cobordism.hpp"
#include "lch/torus.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace lch;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

fs::path out_dir;

void save(const std::string& name, const std::string& text)
{
    std::ofstream f(out_dir / name);
    f << text;
}

void save_diagram(const std::string& name, const Diagram& d) { save(name, to_text(d)); }

std::string order_tag(const ResolutionOrder& s)
{
    std::string t;
    for (int q : s)
        t += std::to_string(q);
    return t;
}

// the filling word of a resolution order, with the area changes written as diagrams
json filling_script(int n, const ResolutionOrder& s)
{
    std::string tag = "lambda" + std::to_string(n) + "_fill_" + order_tag(s);
    Diagram d = torus_2n_diagram(n);
    json steps = json::array();
    int k = 0;
    for (int q : s) {
        std::string a = "b" + std::to_string(q);
        if (is_contractible(d, a) != Contractible::Yes) {
            auto areas = contracting_areas(d, a);
            if (!areas)
                throw Error("precondition", a + " cannot be made contractible");
            d = with_areas(d, *areas);
            std::string f = tag + "_" + std::to_string(++k) + ".lch";
            save_diagram(f, d);
            steps.push_back({{"kind", "isotopy-simple"}, {"target", f}});
        }
        steps.push_back({{"kind", "saddle"}, {"chords", {a}}, {"correct", true}});
        d = resolve_0(d, a);
    }
    while (d.num_crossings() > 0) {
        std::string a;
        for (const std::string c : {"a1", "a2"}) {
            int w = d.crossing_index(c);
            if (w < 0)
                continue;
            try {
                d = remove_component(d, d.over_component(w));
                a = c;
                break;
            } catch (const Error&) {
            }
        }
        if (a.empty())
            throw Error("precondition", "no removable unknot");
        steps.push_back({{"kind", "minimum"}, {"chords", {a}}});
    }
    save(tag + ".json", json{{"steps", steps}}.dump(2) + "\n");
    return {{"script", tag + ".json"},
            {"start", "lambda" + std::to_string(n) + ".lch"},
            {"boundary", torus_components(n)},
            {"order", s}};
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: lch_make_corpus <dir>\n";
        return 2;
    }
    out_dir = argv[1];
    fs::create_directories(out_dir);
    json man;
    man["diagrams"] = json::array();
    auto add = [&](const std::string& name, const Diagram& d) {
        save_diagram(name, d);
        man["diagrams"].push_back(name);
    };
    add("unknot.lch", figure_eight_unknot());
    for (int n = 2; n <= 8; ++n)
        add("lambda" + std::to_string(n) + ".lch", torus_2n_diagram(n));

    // perturbed trefoils, one per move
    Diagram l3 = torus_2n_diagram(3);
    Diagram finger = finger_move(l3, 1, 10, "1R", false, "x", "y");
    Diagram tri_b = triple_point_move(finger, "6L");
    Diagram finger2 = finger_move(l3, 6, 8, "6R", false, "x", "y");
    Diagram tri_a = triple_point_move(finger2, "6R");
    add("lambda3_finger.lch", finger);
    add("lambda3_finger_l1b.lch", tri_b);
    add("lambda3_finger2.lch", finger2);
    add("lambda3_finger2_l1a.lch", tri_a);

    json moves = json::array();
    auto move = [&](const std::string& kind, const std::string& src, const std::string& tgt,
                    const std::vector<std::string>& chords) {
        json step{{"kind", kind}, {"target", tgt}};
        if (!chords.empty())
            step["chords"] = chords;
        std::string script = "move_" + kind + ".json";
        save(script, json{{"steps", {step}}}.dump(2) + "\n");
        moves.push_back({{"kind", kind}, {"source", src}, {"target", tgt}, {"chords", chords}, {"script", script}});
    };
    move("L3", "lambda3.lch", "lambda3_finger.lch", {"x", "y"});
    move("L2", "lambda3_finger.lch", "lambda3.lch", {"x", "y"});
    move("L1b", "lambda3_finger.lch", "lambda3_finger_l1b.lch", {"a1", "x", "b1"});
    move("L1a", "lambda3_finger2.lch", "lambda3_finger2_l1a.lch", {});
    man["moves"] = moves;

    json words = json::array();
    save("unknot_fill.json", json{{"steps", {{{"kind", "minimum"}, {"chords", {"a"}}}}}}.dump(2) + "\n");
    words.push_back({{"script", "unknot_fill.json"}, {"start", "unknot.lch"}, {"boundary", 1}});
    for (int n = 2; n <= 4; ++n)
        for (const auto& s : catalan_classes(n))
            words.push_back(filling_script(n, s));
    man["words"] = words;
    save("manifest.json", man.dump(2) + "\n");
    std::cout << "wrote " << man["diagrams"].size() << " diagrams, " << moves.size() << " moves, " << words.size()
              << " words to " << out_dir << "\n";
    return 0;
}
