#include "fanopot/fan.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fanopot {

namespace {

using json = nlohmann::json;

std::string cone_str(const std::vector<int>& c) {
    std::string s = "{";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

// barycentric-style membership: x in cone(rays of c) with all coefficients >= 0
// (> 0 for interior). Returns -1 outside, 0 on the boundary, 1 interior.
int locate(const Fan& fan, const std::vector<int>& c, const QVector& x) {
    QMatrix a(fan.dim, QVector(c.size()));
    for (size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i < fan.dim; ++i) a[i][j] = Rational(fan.rays[c[j]][i]);
    // square for simplicial cones
    auto sol = solve_square(a, x);
    if (!sol) return -1;
    int state = 1;
    for (const auto& v : *sol) {
        if (v.sign() < 0) return -1;
        if (v.is_zero()) state = 0;
    }
    return state;
}

} // namespace

FanDiagnostics validate_fan(const Fan& fan) {
    FanDiagnostics d;
    d.simplicial = true;
    d.smooth = true;

    if (fan.dim < 2 || fan.dim > 3)
        d.problems.push_back("unsupported dimension " + std::to_string(fan.dim));
    for (const auto& r : fan.rays) {
        if (static_cast<int>(r.size()) != fan.dim) {
            d.problems.push_back("ray of wrong dimension");
            return d;
        }
        if (is_zero(r)) d.problems.push_back("zero ray");
        else if (primitive(r) != r) d.problems.push_back("non-primitive ray");
    }
    for (size_t i = 0; i < fan.rays.size(); ++i)
        for (size_t j = i + 1; j < fan.rays.size(); ++j)
            if (fan.rays[i] == fan.rays[j]) d.problems.push_back("duplicate rays");
    if (!d.problems.empty()) return d;

    for (const auto& c : fan.max_cones) {
        if (static_cast<int>(c.size()) != fan.dim) {
            d.simplicial = false;
            d.problems.push_back("maximal cone " + cone_str(c) + " does not have dim rays");
            continue;
        }
        std::vector<LatticeVector> vs;
        for (int idx : c) {
            if (idx < 0 || idx >= static_cast<int>(fan.rays.size())) {
                d.problems.push_back("cone ray index out of range");
                return d;
            }
            vs.push_back(fan.rays[idx]);
        }
        Int dt = det_integer(IMatrix(vs.begin(), vs.end()));
        if (dt == 0) {
            d.simplicial = false;
            d.problems.push_back("degenerate maximal cone " + cone_str(c));
        } else if (dt != 1 && dt != -1) {
            d.smooth = false;
        }
    }
    if (!d.simplicial) return d;

    // wall pairing: every facet of a maximal cone lies in exactly two of them
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets; // facet -> (cone, opposite)
    for (size_t ci = 0; ci < fan.max_cones.size(); ++ci) {
        const auto& c = fan.max_cones[ci];
        for (size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<int> f;
            for (size_t k = 0; k < c.size(); ++k)
                if (k != drop) f.push_back(c[k]);
            std::sort(f.begin(), f.end());
            facets[f].emplace_back(static_cast<int>(ci), c[drop]);
        }
    }
    d.complete = true;
    for (const auto& [f, owners] : facets) {
        if (owners.size() == 2) {
            d.walls.push_back(Wall{f, owners[0].second, owners[1].second});
        } else {
            d.complete = false;
            if (owners.size() > 2)
                d.problems.push_back("facet " + cone_str(f) + " shared by " +
                                     std::to_string(owners.size()) + " cones (overlap)");
        }
    }
    std::sort(d.walls.begin(), d.walls.end(),
              [](const Wall& a, const Wall& b) { return a.rays < b.rays; });

    if (d.complete && !fan.max_cones.empty()) {
        // spot check: random rational directions must hit exactly one cone
        // interior (or a boundary); a miss means a hole, a double hit an overlap
        std::mt19937 rng(20240613);
        std::uniform_int_distribution<Int> coord(-97, 97);
        for (int trial = 0; trial < 40; ++trial) {
            QVector x(fan.dim);
            bool zero = true;
            for (auto& v : x) {
                v = Rational(coord(rng));
                if (!v.is_zero()) zero = false;
            }
            if (zero) continue;
            int interior_hits = 0, hits = 0;
            for (const auto& c : fan.max_cones) {
                int loc = locate(fan, c, x);
                if (loc >= 0) ++hits;
                if (loc == 1) ++interior_hits;
            }
            if (hits == 0) {
                d.complete = false;
                d.problems.push_back("point-location spot check found an uncovered direction");
                break;
            }
            if (interior_hits > 1) {
                d.complete = false;
                d.problems.push_back("overlapping cones: direction interior to " +
                                     std::to_string(interior_hits) + " maximal cones");
                break;
            }
        }
    }
    return d;
}

std::vector<Wall> require_valid(const Fan& fan) {
    FanDiagnostics d = validate_fan(fan);
    if (!d.problems.empty()) throw ValidationError("fan '" + fan.name + "': " + d.problems.front());
    if (!d.simplicial) throw ValidationError("fan '" + fan.name + "' is not simplicial");
    if (!d.smooth) throw ValidationError("fan '" + fan.name + "' is not smooth");
    if (!d.complete) throw ValidationError("fan '" + fan.name + "' is not complete");
    return d.walls;
}

Fan canonical_form(const Fan& fan) {
    std::vector<size_t> order(fan.rays.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return fan.rays[a] < fan.rays[b]; });
    std::vector<int> new_index(fan.rays.size());
    Fan out;
    out.name = fan.name;
    out.dim = fan.dim;
    out.rays.reserve(fan.rays.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        out.rays.push_back(fan.rays[order[pos]]);
        new_index[order[pos]] = static_cast<int>(pos);
    }
    for (const auto& c : fan.max_cones) {
        std::vector<int> nc;
        for (int idx : c) nc.push_back(new_index[idx]);
        std::sort(nc.begin(), nc.end());
        out.max_cones.push_back(std::move(nc));
    }
    std::sort(out.max_cones.begin(), out.max_cones.end());
    return out;
}

Fan fan_from_json_text(const std::string& text) {
    json j = json::parse(text);
    Fan fan;
    fan.name = j.value("name", "");
    if (!j.contains("rays") || !j["rays"].is_array())
        throw ValidationError("fan file: missing \"rays\" array");
    for (const auto& r : j["rays"]) {
        LatticeVector v;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                throw ValidationError("fan file: ray coordinates must be exact integers");
            v.push_back(x.get<Int>());
        }
        fan.rays.push_back(std::move(v));
    }
    if (fan.rays.empty()) throw ValidationError("fan file: no rays");
    fan.dim = static_cast<int>(fan.rays[0].size());
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        throw ValidationError("fan file: missing \"max_cones\" array");
    for (const auto& c : j["max_cones"]) {
        std::vector<int> cone;
        for (const auto& x : c) {
            if (!x.is_number_integer())
                throw ValidationError("fan file: cone entries must be integers");
            cone.push_back(x.get<int>());
        }
        std::sort(cone.begin(), cone.end());
        fan.max_cones.push_back(std::move(cone));
    }
    return fan;
}

std::string fan_to_json_text(const Fan& fan) {
    nlohmann::ordered_json j;
    j["name"] = fan.name;
    j["rays"] = fan.rays;
    j["max_cones"] = fan.max_cones;
    return j.dump(2) + "\n";
}

Fan load_fan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open fan file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fan_from_json_text(ss.str());
}

} // namespace fanopot
