#include "fanopot/serialize.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fanopot/delpezzo.hpp"

namespace fanopot {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json contraction_json(const ContractionInfo& info) {
    ordered_json j;
    j["ray"] = info.ray.pairing;
    j["k_degree"] = info.k_deg;
    j["negative"] = info.negative;
    j["kind"] = to_string(info.kind);
    if (info.kind == ContractionKind::FiberType) {
        j["target_dim"] = info.target_dim;
        j["bundle"] = to_string(info.bundle_kind);
        j["target"] = info.fiber_target_name;
    } else if (info.kind == ContractionKind::Divisorial) {
        j["exceptional_ray"] = info.exceptional_ray;
        j["type"] = to_string(info.type);
        j["surface"] = to_string(info.surface.kind) +
                       (info.surface.kind == SurfaceKind::Hirzebruch
                            ? "(" + std::to_string(info.surface.hirzebruch_a) + ")"
                            : "");
        j["normal_data"] = info.normal_data;
        j["target_smooth"] = info.target_smooth;
        if (info.type == ContractionType::T291) j["center_genus"] = info.center_genus;
    }
    return j;
}

ordered_json divisor_report_json(const DivisorReport& r) {
    ordered_json j;
    j["divisor_ray"] = r.divisor_ray;
    j["violating_ray"] = r.violating_ray.pairing;
    j["chi"] = r.chi;
    j["h"] = r.h;
    j["verdict"] = to_string(r.verdict);
    j["reason"] = to_string(r.reason);
    return j;
}

ordered_json report_json(const BaseReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["b2"] = rep.b2;
    j["minus_k_cubed"] = rep.minus_k_cubed;
    j["c1c2"] = rep.c1c2;
    j["chi_X"] = rep.chi_x;
    if (rep.ell) j["ell"] = *rep.ell;
    else j["ell"] = nullptr;
    j["h11_X"] = h11_x(rep.b2);
    j["very_ample"] = rep.very_ample;
    if (!rep.very_ample)
        j["chi_X_note"] = "formal value: -K_B is not very ample, W may be singular";
    j["contributing"] = rep.contributing_count();
    ordered_json cands = ordered_json::array();
    for (const auto& c : rep.candidates) cands.push_back(divisor_report_json(c));
    j["candidates"] = cands;
    ordered_json fibs = ordered_json::array();
    for (const auto& f : rep.fibrations) {
        ordered_json e;
        e["kind"] = to_string(f.kind);
        e["target"] = f.target;
        fibs.push_back(e);
    }
    j["fibrations"] = fibs;
    ordered_json rays = ordered_json::array();
    for (const auto& e : rep.extremal_rays) rays.push_back(contraction_json(e));
    j["extremal_rays"] = rays;
    j["discriminant_class"] = rep.discriminant_class;
    return j;
}

std::string render_contributions(const FanoRecord& rec) {
    std::string s;
    for (const auto& c : rec.extremal_data) {
        if (!s.empty()) s += " ";
        s += "D" + std::to_string(c.type);
        if (c.target) {
            bool digits = std::all_of(c.target->begin(), c.target->end(),
                                      [](unsigned char ch) { return std::isdigit(ch); });
            s += "(" + (digits ? std::to_string(rec.mm_id.b2 - 1) + "-" + *c.target
                               : *c.target) + ")";
        }
        if (c.count > 1) s += "x" + std::to_string(c.count);
    }
    return s.empty() ? "none" : s;
}

std::string render_fibrations(const std::vector<RecordFibration>& fs) {
    std::string s;
    for (const auto& f : fs) {
        if (!s.empty()) s += " ";
        s += f.kind + ":" + f.target;
    }
    return s.empty() ? "none" : s;
}

} // namespace

std::string base_report_json(const BaseReport& rep) {
    return report_json(rep).dump(2) + "\n";
}

std::string base_report_tsv(const BaseReport& rep) {
    std::ostringstream out;
    out << "name\t" << rep.name << "\n";
    out << "b2\t" << rep.b2 << "\n";
    out << "minus_k_cubed\t" << rep.minus_k_cubed << "\n";
    out << "c1c2\t" << rep.c1c2 << "\n";
    out << "chi_X\t" << rep.chi_x << "\n";
    out << "ell\t" << (rep.ell ? std::to_string(*rep.ell) : "-") << "\n";
    out << "h11_X\t" << h11_x(rep.b2) << "\n";
    out << "very_ample\t" << (rep.very_ample ? "yes" : "no") << "\n";
    out << "contributing\t" << rep.contributing_count() << "\n";
    for (const auto& c : rep.candidates) {
        out << "candidate\tray=" << c.divisor_ray << "\tchi=" << c.chi << "\th=("
            << c.h[0] << "," << c.h[1] << "," << c.h[2] << "," << c.h[3] << ")\t"
            << to_string(c.verdict) << "\t" << to_string(c.reason) << "\n";
    }
    for (const auto& f : rep.fibrations)
        out << "fibration\t" << to_string(f.kind) << "\t" << f.target << "\n";
    return out.str();
}

std::string tables_tsv(const std::vector<FanoRecord>& records) {
    std::vector<const FanoRecord*> ordered;
    for (const auto& r : records) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(), [](const FanoRecord* a, const FanoRecord* b) {
        return std::tie(b->mm_id.b2, a->mm_id.number, a->mm_id.suffix) <
               std::tie(a->mm_id.b2, b->mm_id.number, b->mm_id.suffix);
    });
    std::ostringstream out;
    out << "row\ttoric\tcontributions\tfibrations\tchi_X\tvery_ample\n";
    for (const FanoRecord* r : ordered) {
        out << r->mm_id.str() << "\t" << (r->toric_symbol ? *r->toric_symbol : "-") << "\t";
        if (r->toric_symbol) {
            EngineRow row = engine_row(*r->toric_symbol);
            std::string s;
            for (const auto& [t, tg] : row.contributing) {
                if (!s.empty()) s += " ";
                s += "D" + std::to_string(t);
                if (!tg.empty()) s += "(" + tg + ")";
            }
            out << (s.empty() ? "none" : s) << "\t";
            std::string fs;
            for (const auto& f : row.report.fibrations) {
                if (!fs.empty()) fs += " ";
                fs += std::string(f.kind == BundleKind::P1Bundle ? "p" : "c") + ":" + f.target;
            }
            out << (fs.empty() ? "none" : fs) << "\t" << row.chi << "\t"
                << (row.report.very_ample ? "yes" : "no") << "\n";
        } else {
            out << render_contributions(*r) << "\t"
                << render_fibrations(r->fibrations) << "\t"
                << (r->chi_x ? std::to_string(*r->chi_x) : "-") << "\t"
                << (r->very_ample ? "yes" : "no") << "\n";
        }
    }
    return out.str();
}

std::string tables_json(const std::vector<FanoRecord>& records) {
    ordered_json arr = ordered_json::array();
    std::vector<const FanoRecord*> ordered;
    for (const auto& r : records) ordered.push_back(&r);
    std::sort(ordered.begin(), ordered.end(), [](const FanoRecord* a, const FanoRecord* b) {
        return std::tie(b->mm_id.b2, a->mm_id.number, a->mm_id.suffix) <
               std::tie(a->mm_id.b2, b->mm_id.number, b->mm_id.suffix);
    });
    for (const FanoRecord* r : ordered) {
        ordered_json j;
        j["row"] = r->mm_id.str();
        j["toric"] = r->toric_symbol ? ordered_json(*r->toric_symbol) : ordered_json(nullptr);
        j["minus_k_cubed"] = r->minus_k_cubed;
        if (r->chi_x) j["chi_X_printed"] = *r->chi_x;
        j["chi_X"] = chi_x_from_degree(r->minus_k_cubed);
        j["very_ample"] = r->very_ample;
        j["contributions"] = render_contributions(*r);
        j["fibrations"] = render_fibrations(r->fibrations);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string check_report_text(const TableCheck& check) {
    std::ostringstream out;
    if (check.diffs.empty()) {
        out << "all rows match\n";
        return out.str();
    }
    for (const auto& d : check.diffs)
        out << (d.documented ? "documented" : "DISCREPANCY") << "\t" << d.row << "\t"
            << d.field << "\ttable=" << d.expected << "\tengine=" << d.computed << "\n";
    return out.str();
}

std::string graph_dot(const TransitionGraph& graph) {
    std::ostringstream out;
    out << "digraph transitions {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box];\n";
    // one column per b2 value, descending left to right; edge type follows
    // the 2.9 classification (point contractions drawn thick)
    std::map<int, std::vector<std::string>, std::greater<int>> columns;
    for (const auto& [id, b2] : graph.nodes) columns[b2].push_back(id);
    for (const auto& [b2, ids] : columns) {
        out << "  { rank=same;";
        for (const auto& id : ids) out << " \"" << id << "\";";
        out << " }\n";
    }
    for (const auto& e : graph.edges) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [type=\"2.9."
            << e.type << "\"";
        if (e.type >= 2) out << " penwidth=2";
        if (e.multiplicity > 1) out << " label=\"x" << e.multiplicity << "\"";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string delpezzo_tsv(int r) {
    auto mc = minus_one_curves(r);
    std::ostringstream out;
    if (mc.infinite) {
        out << "count\tinfinite\n";
        return out.str();
    }
    out << "count\t" << mc.classes.size() << "\n";
    for (const auto& c : mc.classes) {
        out << c.d;
        for (Int a : c.a) out << "\t" << a;
        out << "\n";
    }
    return out.str();
}

std::string delpezzo_json(int r) {
    auto mc = minus_one_curves(r);
    ordered_json j;
    j["points"] = r;
    if (mc.infinite) {
        j["count"] = "infinite";
    } else {
        j["count"] = mc.classes.size();
        ordered_json arr = ordered_json::array();
        for (const auto& c : mc.classes) {
            ordered_json e;
            e["d"] = c.d;
            e["a"] = c.a;
            arr.push_back(std::move(e));
        }
        j["classes"] = arr;
    }
    return j.dump(2) + "\n";
}

} // namespace fanopot
