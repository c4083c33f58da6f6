// Fans of smooth complete toric varieties of dimension 2 or 3.
#pragma once

#include <string>
#include <vector>

#include "fanopot/cone.hpp"

namespace fanopot {

struct Fan {
    std::string name;
    int dim = 0;
    std::vector<LatticeVector> rays;          // primitive ray generators v_rho
    std::vector<std::vector<int>> max_cones;  // sorted 0-based ray index sets

    size_t ray_count() const { return rays.size(); }
    // rank of Pic = rays - dim for smooth complete fans
    int picard_rank() const { return static_cast<int>(rays.size()) - dim; }
};

// A codimension-1 cone shared by exactly two maximal cones.
struct Wall {
    std::vector<int> rays;  // dim-1 ray indices, sorted
    int opposite_a = 0;     // the extra ray of the first maximal cone
    int opposite_b = 0;     // ... and of the second
};

struct FanDiagnostics {
    bool smooth = false;
    bool complete = false;
    bool simplicial = false;
    std::vector<Wall> walls;
    std::vector<std::string> problems;
    bool ok() const { return smooth && complete && simplicial && problems.empty(); }
};

// Checks primitivity and distinctness of rays, cone sizes, unimodularity of
// the maximal cones, wall pairing (every facet shared by exactly two maximal
// cones) and covering via a point-location spot check on pseudo-random
// rational directions.
FanDiagnostics validate_fan(const Fan& fan);

// validate_fan that throws ValidationError unless the fan is smooth, complete
// and simplicial. Returns the wall list.
std::vector<Wall> require_valid(const Fan& fan);

// Rays sorted lexicographically, cone indices remapped, cones sorted.
Fan canonical_form(const Fan& fan);

// Fan file schema: {"name": str, "rays": [[int,...],...], "max_cones": [[int,...],...]}
Fan fan_from_json_text(const std::string& text);
std::string fan_to_json_text(const Fan& fan);
Fan load_fan(const std::string& path);

} // namespace fanopot
