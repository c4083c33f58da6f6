#include "fanopot/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fanopot/builtin_fans.hpp"

namespace fanopot {

namespace {

// invariants that separate the 18 toric Fano 3-folds pairwise
struct Fingerprint {
    int b2 = 0;
    Int deg = 0;
    size_t fibrations = 0;
    std::vector<int> types; // sorted 2.9 types of the divisorial rays
    auto operator<=>(const Fingerprint&) const = default;
};

int type_code(ContractionType t) {
    switch (t) {
        case ContractionType::T291: return 1;
        case ContractionType::T292: return 2;
        case ContractionType::T293: return 3;
        case ContractionType::T294: return 4;
        case ContractionType::T295: return 5;
        default: return 9;
    }
}

Fingerprint fingerprint(const BaseReport& rep) {
    Fingerprint fp;
    fp.b2 = rep.b2;
    fp.deg = rep.minus_k_cubed;
    fp.fibrations = rep.fibrations.size();
    for (const auto& e : rep.extremal_rays)
        if (e.kind == ContractionKind::Divisorial) fp.types.push_back(type_code(e.type));
    std::sort(fp.types.begin(), fp.types.end());
    return fp;
}

struct BuildSpec {
    std::string symbol;
    MMId mm;
    Int deg;
};

// symbol <-> row assignments fixed by the toric column of the tables
const std::vector<BuildSpec>& build_specs() {
    static const std::vector<BuildSpec> specs = {
        {"F_1", {1, 0, ""}, 64},  {"F_2", {2, 34, ""}, 54},  {"F_3", {2, 35, ""}, 56},
        {"F_4", {2, 36, ""}, 62}, {"F_5", {2, 33, ""}, 54},  {"F_6", {3, 27, ""}, 48},
        {"F_7", {3, 31, ""}, 52}, {"F_8", {3, 25, ""}, 44},  {"F_9", {3, 28, ""}, 48},
        {"F_10", {3, 30, ""}, 50}, {"F_11", {3, 29, ""}, 50}, {"F_12", {3, 26, ""}, 46},
        {"F_13", {4, 10, ""}, 42}, {"F_14", {4, 11, ""}, 44}, {"F_15", {4, 9, ""}, 40},
        {"F_16", {4, 12, ""}, 46}, {"F_17", {5, 3, ""}, 36},  {"F_18", {5, 2, ""}, 36},
    };
    return specs;
}

Fan named(Fan f, const std::string& symbol) {
    f.name = symbol;
    return f;
}

// All Fano results of blowing up an invariant curve (a wall) of each input.
std::vector<Fan> fano_wall_blowups(const std::vector<Fan>& bases) {
    std::vector<Fan> out;
    for (const Fan& base : bases) {
        FanOps ops(base);
        for (const auto& wall : ops.walls()) {
            Fan blown = star_subdivision(base, wall.rays);
            FanOps bops(blown);
            if (is_ample(bops, DivisorClass(blown.rays.size(), 1)))
                out.push_back(std::move(blown));
        }
    }
    return out;
}

std::vector<ToricFanoEntry> build_table() {
    std::map<std::string, Fan> fans;
    fans["F_1"] = p3_fan();
    fans["F_2"] = product_fan(p1_fan(), p2_fan());
    fans["F_3"] = star_subdivision(p3_fan(), {0, 1, 2});
    fans["F_4"] = proj_bundle_fan(p2_fan(), {0, 0, 2}, "F_4");
    fans["F_5"] = star_subdivision(p3_fan(), {2, 3});
    fans["F_6"] = product_fan(p1_fan(), p1xp1_fan());
    fans["F_7"] = proj_bundle_fan(p1xp1_fan(), {0, 0, 1, 1}, "F_7");
    fans["F_8"] = star_subdivision(fans["F_5"], {0, 1});
    fans["F_9"] = product_fan(p1_fan(), hirzebruch_fan(1));
    fans["F_10"] = star_subdivision(fans["F_3"], {0, 1});
    fans["F_11"] = star_subdivision(fans["F_3"], {0, 4});
    fans["F_12"] = star_subdivision(fans["F_5"], {0, 1, 2});
    fans["F_13"] = product_fan(p1_fan(), blown_p2_fan(2));
    fans["F_17"] = product_fan(p1_fan(), blown_p2_fan(3));

    // rank 4 and 5: every entry is a wall blow-up of the rank below (their
    // table rows all show a ruled contraction onto the previous rank), so
    // exhausting wall blow-ups and keeping the Fano ones finds them all
    std::vector<Fan> rank3, rank4_pool;
    for (const char* s : {"F_6", "F_7", "F_8", "F_9", "F_10", "F_11", "F_12"})
        rank3.push_back(fans[s]);
    std::map<Int, Fan> rank4; // degree separates the four
    for (Fan& f : fano_wall_blowups(rank3)) {
        Int deg = FanOps(f).minus_k_cubed();
        rank4.emplace(deg, std::move(f));
    }
    if (rank4.size() != 4)
        throw ConsistencyError("toric Fano derivation: expected 4 varieties at rank 4, got " +
                               std::to_string(rank4.size()));
    fans["F_15"] = rank4.at(40);
    fans["F_14"] = rank4.at(44);
    fans["F_16"] = rank4.at(46);
    if (FanOps(rank4.at(42)).minus_k_cubed() != FanOps(fans["F_13"]).minus_k_cubed())
        throw ConsistencyError("toric Fano derivation: rank-4 degree-42 mismatch");

    for (const auto& [deg, f] : rank4) rank4_pool.push_back(f);
    std::vector<Fan> rank5 = fano_wall_blowups(rank4_pool);
    // two classes at rank 5, separated by the fibration count
    std::optional<Fan> f17, f18;
    for (Fan& f : rank5) {
        BaseReport rep = analyze_base(f);
        if (rep.minus_k_cubed != 36)
            throw ConsistencyError("toric Fano derivation: rank-5 degree != 36");
        if (rep.fibrations.empty()) f18 = std::move(f);
        else f17 = std::move(f);
    }
    if (!f17 || !f18)
        throw ConsistencyError("toric Fano derivation: missing a rank-5 variety");
    fans["F_18"] = *f18;

    std::vector<ToricFanoEntry> table;
    std::set<Fingerprint> prints;
    for (const auto& spec : build_specs()) {
        ToricFanoEntry e;
        e.symbol = spec.symbol;
        e.mm_id = spec.mm;
        e.fan = canonical_form(named(fans.at(spec.symbol), spec.symbol));
        BaseReport rep = analyze_base(e.fan);
        e.minus_k_cubed = rep.minus_k_cubed;
        if (rep.minus_k_cubed != spec.deg)
            throw ConsistencyError("builtin fan " + spec.symbol + ": (-K)^3 = " +
                                   std::to_string(rep.minus_k_cubed) + ", table row needs " +
                                   std::to_string(spec.deg));
        if (rep.b2 != spec.mm.b2 && spec.symbol != "F_1")
            throw ConsistencyError("builtin fan " + spec.symbol + ": wrong Picard rank");
        if (!rep.very_ample)
            throw ConsistencyError("builtin fan " + spec.symbol + " is not Fano");
        if (!prints.insert(fingerprint(rep)).second)
            throw ConsistencyError("builtin fans " + spec.symbol +
                                   ": fingerprint collision in the table");
        table.push_back(std::move(e));
    }
    // the derived rank-5 fan with a fibration must be P1 x S_6
    if (fingerprint(analyze_base(*f17)) != fingerprint(analyze_base(fans.at("F_17"))))
        throw ConsistencyError("toric Fano derivation: rank-5 fibration class != P1 x S_6");
    return table;
}

} // namespace

const std::vector<ToricFanoEntry>& toric_fano_table() {
    static const std::vector<ToricFanoEntry> table = build_table();
    return table;
}

Fan builtin_toric_fano(const std::string& symbol) {
    for (const auto& e : toric_fano_table())
        if (e.symbol == symbol) return e.fan;
    std::string known;
    for (const auto& e : toric_fano_table()) known += (known.empty() ? "" : ", ") + e.symbol;
    throw ValidationError("unknown toric Fano symbol " + symbol + "; known: " + known);
}

namespace {

const std::vector<std::pair<Fingerprint, std::string>>& fingerprint_index() {
    static const auto index = [] {
        std::vector<std::pair<Fingerprint, std::string>> v;
        for (const auto& e : toric_fano_table())
            v.emplace_back(fingerprint(analyze_base(e.fan)),
                           e.symbol == "F_1" ? "P3" : e.mm_id.str());
        return v;
    }();
    return index;
}

} // namespace

std::optional<std::string> identify_toric_fano(const BaseReport& report) {
    Fingerprint fp = fingerprint(report);
    for (const auto& [print, id] : fingerprint_index())
        if (print == fp) return id;
    return std::nullopt;
}

EngineRow engine_row(const std::string& symbol) {
    EngineRow row;
    row.symbol = symbol;
    Fan fan = builtin_toric_fano(symbol);
    FanOps ops(fan);
    row.report = analyze_base(ops);
    row.chi = row.report.chi_x;
    for (const auto& info : row.report.extremal_rays) {
        if (info.kind != ContractionKind::Divisorial) continue;
        const DivisorReport* verdict = nullptr;
        for (const auto& c : row.report.candidates)
            if (c.divisor_ray == info.exceptional_ray &&
                c.violating_ray == info.ray) verdict = &c;
        if (!verdict || verdict->verdict != Verdict::Contributes) continue;
        std::string target;
        if (info.target_smooth) {
            Fan t = std::get<Fan>(contract_divisorial(ops, info));
            BaseReport trep = analyze_base(t);
            if (trep.very_ample)
                if (auto id = identify_toric_fano(trep)) target = *id;
        }
        row.contributing.emplace_back(type_code(info.type), target);
    }
    std::sort(row.contributing.begin(), row.contributing.end());
    return row;
}

namespace {

std::map<int, int> type_counts(const std::vector<std::pair<int, std::string>>& xs) {
    std::map<int, int> m;
    for (const auto& [t, _] : xs) ++m[t];
    return m;
}

std::string counts_str(const std::map<int, int>& m) {
    std::string s;
    for (const auto& [t, n] : m)
        s += (s.empty() ? "" : ", ") + std::to_string(n) + "x2.9." + std::to_string(t);
    return s.empty() ? "none" : s;
}

std::string list_str(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s.empty() ? "-" : s;
}

} // namespace

TableCheck check_tables(const std::vector<FanoRecord>& records) {
    TableCheck out;
    for (const auto& rec : records) {
        if (!rec.toric_symbol) continue;
        const std::string rowid = rec.mm_id.str();
        EngineRow row = engine_row(*rec.toric_symbol);

        // degree and chi against the engine values
        if (rec.minus_k_cubed != row.report.minus_k_cubed)
            out.diffs.push_back(RowDiff{rowid, "minus_k_cubed",
                                        std::to_string(rec.minus_k_cubed),
                                        std::to_string(row.report.minus_k_cubed),
                                        rec.has_erratum("minus_k_cubed")});
        if (rec.chi_x && *rec.chi_x != row.chi)
            out.diffs.push_back(RowDiff{rowid, "chi_X", std::to_string(*rec.chi_x),
                                        std::to_string(row.chi), rec.has_erratum("chi_X")});

        // contribution counts per 2.9 type
        std::vector<std::pair<int, std::string>> expected;
        for (const auto& c : rec.extremal_data)
            for (int i = 0; i < c.count; ++i)
                expected.emplace_back(c.type, c.target ? *c.target : "");
        auto want = type_counts(expected);
        auto got = type_counts(row.contributing);
        if (want != got)
            out.diffs.push_back(RowDiff{rowid, "contributions", counts_str(want),
                                        counts_str(got),
                                        rec.has_erratum("contributions")});

        // named targets must appear among the engine's resolved targets
        // (as multisets; the table sometimes omits or permutes the labels)
        std::vector<std::string> want_targets, got_targets;
        for (const auto& [t, tg] : expected) {
            if (tg.empty()) continue;
            want_targets.push_back(std::all_of(tg.begin(), tg.end(), ::isdigit)
                                       ? std::to_string(rec.mm_id.b2 - 1) + "-" + tg
                                       : tg);
        }
        for (const auto& [t, tg] : row.contributing)
            if (!tg.empty()) got_targets.push_back(tg);
        std::sort(want_targets.begin(), want_targets.end());
        std::sort(got_targets.begin(), got_targets.end());
        if (!std::includes(got_targets.begin(), got_targets.end(), want_targets.begin(),
                           want_targets.end()))
            out.diffs.push_back(RowDiff{rowid, "targets", list_str(want_targets),
                                        list_str(got_targets),
                                        rec.has_erratum("targets")});

        // fibration counts per kind (targets in the source column are not
        // reliable enough to compare literally)
        auto count_kind = [](const auto& v, auto pred) {
            return std::count_if(v.begin(), v.end(), pred);
        };
        long want_p = count_kind(rec.fibrations,
                                 [](const RecordFibration& f) { return f.kind == "p"; });
        long want_c = count_kind(rec.fibrations,
                                 [](const RecordFibration& f) { return f.kind == "c"; });
        long got_p = count_kind(row.report.fibrations, [](const Fibration& f) {
            return f.kind == BundleKind::P1Bundle;
        });
        long got_c = count_kind(row.report.fibrations, [](const Fibration& f) {
            return f.kind == BundleKind::ConicBundle;
        });
        if (want_p != got_p || want_c != got_c)
            out.diffs.push_back(
                RowDiff{rowid, "fibrations", std::to_string(want_p) + "p+" + std::to_string(want_c) + "c",
                        std::to_string(got_p) + "p+" + std::to_string(got_c) + "c",
                        rec.has_erratum("fibrations")});

        // very-ampleness column
        if (rec.very_ample != row.report.very_ample)
            out.diffs.push_back(RowDiff{rowid, "very_ample",
                                        rec.very_ample ? "yes" : "no",
                                        row.report.very_ample ? "yes" : "no",
                                        rec.has_erratum("very_ample")});
    }
    // rows whose printed chi column disagrees with the formula carry a
    // documented erratum; surface them even when non-toric
    for (const auto& rec : records) {
        if (rec.toric_symbol || !rec.chi_x) continue;
        Int expect = chi_x_from_degree(rec.minus_k_cubed);
        if (*rec.chi_x != expect)
            out.diffs.push_back(RowDiff{rec.mm_id.str(), "chi_X", std::to_string(*rec.chi_x),
                                        std::to_string(expect), rec.has_erratum("chi_X")});
    }
    std::sort(out.diffs.begin(), out.diffs.end(), [](const RowDiff& a, const RowDiff& b) {
        return std::tie(a.row, a.field) < std::tie(b.row, b.field);
    });
    return out;
}

TransitionGraph transition_graph(const std::vector<FanoRecord>& records) {
    TransitionGraph g;
    std::map<std::string, int> b2_of;
    for (const auto& [name, deg] : b2_one_targets()) {
        g.nodes.emplace_back(name, 1);
        b2_of[name] = 1;
    }
    for (const auto& r : records) {
        g.nodes.emplace_back(r.mm_id.str(), r.mm_id.b2);
        b2_of[r.mm_id.str()] = r.mm_id.b2;
    }
    for (const auto& r : records) {
        for (const auto& c : r.extremal_data) {
            if (!c.target) continue;
            std::string to = *c.target;
            if (std::all_of(to.begin(), to.end(), ::isdigit))
                to = std::to_string(r.mm_id.b2 - 1) + "-" + to;
            auto it = b2_of.find(to);
            if (it == b2_of.end())
                throw ValidationError("transition edge from " + r.mm_id.str() +
                                      " to unknown node " + to);
            if (it->second != r.mm_id.b2 - 1)
                throw ValidationError("transition edge " + r.mm_id.str() + " -> " + to +
                                      " does not drop b2 by one");
            g.edges.push_back(TransitionEdge{r.mm_id.str(), to, c.type, c.count});
        }
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    std::sort(g.edges.begin(), g.edges.end(), [](const TransitionEdge& a, const TransitionEdge& b) {
        return std::tie(a.from, a.to, a.type) < std::tie(b.from, b.to, b.type);
    });
    return g;
}

} // namespace fanopot
