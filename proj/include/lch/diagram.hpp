#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lch/error.hpp"
#include "lch/linalg.hpp"

namespace lch {

// A crossing as read from a file: edge ids counterclockwise, slot 0 is the
// incoming end of the 1-3 strand. over = 24 means slots 1,3 carry the over strand.
struct Crossing {
    std::string id;
    std::array<int, 4> edge{};
    int over = 24;
};

struct Corner {
    int crossing;  // index
    int quadrant;  // Q_q runs counterclockwise from slot q to slot q+1
    bool operator==(const Corner& o) const { return crossing == o.crossing && quadrant == o.quadrant; }
    bool operator<(const Corner& o) const
    {
        return crossing != o.crossing ? crossing < o.crossing : quadrant < o.quadrant;
    }
};

struct Dart {
    int edge;  // index into edges
    bool fwd;
};

// one boundary cycle of a face, traversed with the face on the left
struct FaceCycle {
    std::vector<Dart> darts;
    std::vector<Corner> corners;  // corners[i] follows darts[i]
    int region = -1;
    int piece = -1;
    bool ccw = false;  // outer boundary of a bounded region
};

struct Region {
    std::string id;
    std::vector<int> cycles;
    bool bounded = true;
    double area = 0;  // meaningful only if the diagram has areas
};

// Grouping of face cycles into regions, used by operations that create nesting.
struct RegionLayout {
    struct Group {
        std::vector<Dart> reps;  // one dart per cycle
        int outer = -1;          // index into reps, -1 for the unbounded region
        std::optional<double> area;
    };
    std::vector<Group> groups;
};

struct GradeShift {
    int i, j, k;  // 1-based components
};

// linear form in the bounded-region areas
struct AreaForm {
    std::vector<Rat> coef;
    double eval(const std::vector<double>& areas) const;
};

class LagrangianDiagram {
  public:
    struct Slot {
        int crossing, slot;
    };

    static LagrangianDiagram build(std::vector<Crossing> xs, const std::map<std::string, double>& areas,
                                   std::vector<GradeShift> shifts, const std::string& outer_hint = "",
                                   int circles = 0);
    static LagrangianDiagram build_with_layout(std::vector<Crossing> xs, const RegionLayout& layout,
                                               std::vector<GradeShift> shifts, int circles = 0);

    // crossings
    int num_crossings() const { return static_cast<int>(xs_.size()); }
    const Crossing& crossing(int v) const { return xs_[v]; }
    const std::vector<Crossing>& crossings() const { return xs_; }
    int crossing_index(const std::string& id) const;  // -1 if absent
    std::vector<std::string> chord_names() const;
    bool incoming(int v, int s) const { return in_[v][s]; }
    int over_parity(int v) const { return xs_[v].over == 24 ? 1 : 0; }
    bool is_over(int v, int s) const { return s % 2 == over_parity(v); }
    bool quadrant_positive(int v, int q) const { return is_over(v, q) && !is_over(v, (q + 1) % 4); }
    int sign(int v) const;
    int over_out_slot(int v) const;
    int under_out_slot(int v) const;
    int over_in_slot(int v) const { return (over_out_slot(v) + 2) % 4; }
    int under_in_slot(int v) const { return (under_out_slot(v) + 2) % 4; }
    int edge_at(int v, int s) const { return eidx_.at(xs_[v].edge[s]); }

    // edges, by index
    int num_edges() const { return static_cast<int>(edge_ids_.size()); }
    int edge_id(int e) const { return edge_ids_[e]; }
    int edge_index(int id) const;
    Slot tail(int e) const { return tail_[e]; }
    Slot head(int e) const { return head_[e]; }
    int next_edge(int e) const;  // following along the link

    // components: edge indices in order of travel
    int num_components() const { return static_cast<int>(comps_.size()); }
    const std::vector<int>& component(int k) const { return comps_[k]; }
    int component_of_edge(int e) const { return comp_of_edge_[e]; }
    int over_component(int v) const { return comp_of_edge_[edge_at(v, over_out_slot(v))]; }
    int under_component(int v) const { return comp_of_edge_[edge_at(v, under_out_slot(v))]; }
    int circles() const { return circles_; }
    int num_pieces() const { return pieces_; }
    int piece_of_crossing(int v) const { return piece_of_[v]; }

    // faces
    const std::vector<FaceCycle>& cycles() const { return cycles_; }
    const std::vector<Region>& regions() const { return regions_; }
    int num_regions() const { return static_cast<int>(regions_.size()); }
    int unbounded_region() const { return unbounded_; }
    int region_index(const std::string& id) const;
    int quadrant_region(int v, int q) const { return qreg_[v][q]; }
    int left_region(int e) const { return cycles_[dart_cycle_[e][1]].region; }
    int right_region(int e) const { return cycles_[dart_cycle_[e][0]].region; }
    int dart_cycle(int e, bool fwd) const { return dart_cycle_[e][fwd ? 1 : 0]; }
    std::vector<int> bounded_regions() const;  // region indices, order of the area vector

    // geometry
    const std::vector<Rat>& turning() const { return turn_; }
    bool has_areas() const { return has_areas_; }
    std::vector<double> area_vector() const;  // over bounded_regions()
    const std::vector<GradeShift>& shifts() const { return shifts_; }
    RegionLayout layout() const;

    // action model: self chords depend on areas only; mixed chords also on heights
    const AreaForm& action_form(int v) const { return act_form_[v]; }
    const AreaForm& closure_form(int k) const { return closure_[k]; }

  private:
    void derive_topology();
    void derive_faces();
    void group_default(const std::map<std::string, double>& areas, const std::string& outer_hint);
    void group_layout(const RegionLayout& layout);
    void finish_regions();
    void solve_turning();
    void build_action_model();

    std::vector<Crossing> xs_;
    std::map<std::string, int> xidx_;
    std::vector<std::array<bool, 4>> in_;
    std::vector<int> edge_ids_;
    std::map<int, int> eidx_;
    std::vector<Slot> tail_, head_;
    std::vector<std::vector<int>> comps_;
    std::vector<int> comp_of_edge_;
    std::vector<int> piece_of_;
    int pieces_ = 0;
    int circles_ = 0;
    std::vector<FaceCycle> cycles_;
    std::vector<std::array<int, 2>> dart_cycle_;
    std::vector<Region> regions_;
    int unbounded_ = -1;
    std::vector<std::array<int, 4>> qreg_;
    std::vector<Rat> turn_;
    bool has_areas_ = false;
    std::vector<GradeShift> shifts_;
    std::vector<AreaForm> act_form_;  // per crossing: z(over) - z(under), heights excluded
    std::vector<AreaForm> closure_;   // per component
};

using Diagram = LagrangianDiagram;

Diagram parse_diagram(const std::string& text);
Diagram load_diagram(const std::string& path_or_name);  // builtin names: unknot, hopf, trefoil, torus:<n>
std::map<std::string, double> parse_area_lines(const std::string& text);
std::string to_text(const Diagram& d);

Diagram torus_2n_diagram(int n);
Diagram figure_eight_unknot();

// degrees; mixed chords need shifts (or the built-in even torus convention)
std::map<std::string, int> grading(const Diagram& d);
std::map<std::string, int> grading(const Diagram& d, const std::vector<GradeShift>& shifts);
// same, with explicit base edges (one per component) for the capping paths
std::map<std::string, int> grading_from_base(const Diagram& d, const std::vector<GradeShift>& shifts,
                                             const std::vector<int>& base_edges);
std::vector<int> rotation_numbers(const Diagram& d);

std::vector<double> component_heights(const Diagram& d);
std::map<std::string, double> actions(const Diagram& d);
std::vector<double> action_vector(const Diagram& d);  // by crossing index

int writhe(const Diagram& d);
std::vector<int> tb(const Diagram& d);  // per component, self-crossings only
std::map<std::pair<int, int>, int> linking_numbers(const Diagram& d);

enum class Contractible { Yes, NoOnThisDiagram };
Contractible is_contractible(const Diagram& d, const std::string& c);
std::pair<int, int> positive_regions(const Diagram& d, int v);

// areas
Diagram with_areas(const Diagram& d, const std::vector<double>& bounded_areas);
Diagram with_area_map(const Diagram& d, const std::map<std::string, double>& areas);
std::optional<std::vector<double>> realize_areas(const Diagram& d);
// areas making both positive regions of c exceed its action by at least 1
std::optional<std::vector<double>> contracting_areas(const Diagram& d, const std::string& c);
bool areas_realizable(const Diagram& d, std::string* why = nullptr);

// local modifications
Diagram resolve_0(const Diagram& d, const std::string& c);
Diagram remove_component(const Diagram& d, int comp);
Diagram relabel(const Diagram& d, const std::map<std::string, std::string>& names);
Diagram finger_move(const Diagram& d, int edge_push, int edge_under, const std::string& region,
                    bool pushed_over, const std::string& name1, const std::string& name2);
Diagram triple_point_move(const Diagram& d, const std::string& region);

}  // namespace lch
