#pragma once

#include <array>
#include <string>
#include <vector>

#include "vknot/budget.hpp"
#include "vknot/gauss.hpp"

namespace vknot {

// Combinatorial map of the diagram's carrier ribbon surface. Darts are
// numbered two per slot: slot s carries an incoming dart 2s and an
// outgoing dart 2s+1 (global slot index, circles concatenated). Each
// crossing holds four darts in a fixed cyclic rotation that interleaves
// the over and under strands; edges pair darts along circle arcs.
// Crossing-free circles contribute two darts forming a free loop and are
// tracked by count only.
struct RotationSystem {
    int crossings = 0;
    int free_loops = 0;
    // rotation[dart] = next dart counterclockwise at the same crossing.
    std::vector<int> rotation;
    // edge_partner[dart] = the dart at the other end of its arc.
    std::vector<int> edge_partner;
    // crossing_of[dart] = arrow owning the dart.
    std::vector<int> crossing_of;

    int dart_count() const { return static_cast<int>(rotation.size()); }
};

RotationSystem rotation_system(const GaussDiagram& d);

struct ComponentGenus {
    int crossings = 0;
    int boundary_curves = 0;
    int genus = 0;
};

// Face-tracing result: per connected diagram component, genus is
// (2 + crossings - boundary_curves) / 2; crossing-free circles count as
// genus-0 components with two boundary curves. Totals sum the components.
struct GenusReport {
    int crossings = 0;
    int boundary_curves = 0;
    int genus = 0;
    std::vector<ComponentGenus> components;

    std::string to_json() const;
};

GenusReport genus(const GaussDiagram& d);

// True iff the carrier genus is 0, i.e. the code embeds in the sphere
// and represents a classical diagram.
bool is_realizable(const GaussDiagram& d);

// Minimum carrier genus over every diagram reachable within the budget
// under the Virtual regime. An upper bound for the knot's minimal genus;
// monotone non-increasing in the budget.
int genus_upper_bound(const GaussDiagram& d, const SearchBudget& budget);

}  // namespace vknot
