#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

struct DgaMorphism {
    std::string kind;
    ChekanovDGA source, target;
    std::vector<Poly> images;  // per source generator, over the target table
    // saddle only
    int resolved = -1;       // source generator sent to 1
    std::vector<Poly> psi1;  // per source generator
    bool swapped_blocks = false;
    // chords of positive degree whose image needed a correction term (non-simple saddle)
    std::vector<std::string> corrected;
};

using Relabel = std::map<std::string, std::string>;

DgaMorphism identity_morphism(const ChekanovDGA& a);
DgaMorphism morphism_isotopy_simple(const ChekanovDGA& src, const ChekanovDGA& tgt, const Relabel& relabel);
DgaMorphism morphism_l1a(const ChekanovDGA& src, const ChekanovDGA& tgt, const Relabel& relabel);
// a names a source chord, b and c name target chords
DgaMorphism morphism_l1b(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a,
                         const std::string& b, const std::string& c, const Relabel& relabel);
// a, b name source chords with d a = b + v
DgaMorphism morphism_l2(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a, const std::string& b,
                        const Relabel& relabel);
// a, b name the new target chords with d a = b + v
DgaMorphism morphism_l3(const ChekanovDGA& src, const ChekanovDGA& tgt, const std::string& a, const std::string& b,
                        const Relabel& relabel);
DgaMorphism morphism_minimum(const Diagram& src_diagram, const ChekanovDGA& src, const ChekanovDGA& tgt,
                             const std::string& a);
// tgt_diagram must be resolve_0(src_diagram, a). With correct set, a failing certificate on
// chords of positive degree is repaired by lower-action terms; degree-0 images are never touched.
DgaMorphism morphism_saddle(const Diagram& src_diagram, const ChekanovDGA& src, const Diagram& tgt_diagram,
                            const ChekanovDGA& tgt, const std::string& a, long long budget = default_budget(),
                            bool correct = false);

DgaMorphism compose(const DgaMorphism& outer, const DgaMorphism& inner);
Check verify_chain_map(const DgaMorphism& m);
// throws with the witness when the chain-map check fails
void certify(const DgaMorphism& m);

// a preimage of y under a saddle morphism
Poly saddle_preimage(const DgaMorphism& m, const Poly& y);

std::string render_morphism(const DgaMorphism& m);

// ---------------------------------------------------------------- words of elementary steps

struct CobordismStep {
    std::string kind;  // isotopy-simple, L1a, L1b, L2, L3, minimum, saddle
    std::vector<std::string> chords;
    Relabel relabel;
    std::string target;  // diagram path or builtin name; optional for saddle and minimum
    bool correct = false;  // saddle only, see morphism_saddle
};

struct WordResult {
    std::vector<Diagram> diagrams;  // diagrams[0] is the start
    std::vector<DgaMorphism> steps;
    DgaMorphism composed;
    int saddles = 0, minima = 0;
};

std::vector<CobordismStep> parse_steps(const std::string& json_text);
WordResult run_word(const Diagram& start, const std::vector<CobordismStep>& steps,
                    long long budget = default_budget(), const std::string& base_dir = "");

struct EulerGenus {
    int chi, genus;
};
// chi = minima - saddles, genus from chi = 2 - 2g - boundary
EulerGenus euler_genus(int minima, int saddles, int boundary_components);
EulerGenus euler_genus(const WordResult& w, int boundary_components);

}  // namespace lch
