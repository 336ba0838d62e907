#pragma once
#include "lch/augmentation.hpp"
#include "lch/cobordism.hpp"
#include "lch/torus.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace lchtest {

inline std::string corpus(const std::string& f) { return std::string(LCH_CORPUS_DIR) + "/" + f; }

inline std::string slurp(const std::string& path)
{
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline nlohmann::json manifest() { return nlohmann::json::parse(slurp(corpus("manifest.json"))); }

inline std::vector<std::string> corpus_diagrams()
{
    std::vector<std::string> v;
    nlohmann::json man = manifest();
    for (const auto& x : man["diagrams"])
        v.push_back(x.get<std::string>());
    return v;
}

inline lch::Diagram corpus_diagram(const std::string& name) { return lch::load_diagram(corpus(name)); }

inline lch::WordResult run_script(const std::string& start, const std::string& script)
{
    return lch::run_word(corpus_diagram(start), lch::parse_steps(slurp(corpus(script))), lch::default_budget(),
                         LCH_CORPUS_DIR);
}

inline std::string d_of(const lch::ChekanovDGA& a, const std::string& g) { return lch::render(a.d(a.table->at(g))); }

inline std::string image_of(const lch::DgaMorphism& m, const std::string& g)
{
    return lch::render(m.images[m.source.table->at(g)]);
}

// degree-0 values as a string of bits in natural chord order
inline std::string bits(const lch::Augmentation& e) { return lch::render_augmentation(e); }

}  // namespace lchtest
