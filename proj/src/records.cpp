#include "fanopot/records.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fanopot/cy4.hpp"

namespace fanopot {

using json = nlohmann::json;

bool FanoRecord::has_erratum(const std::string& field) const {
    return std::any_of(errata.begin(), errata.end(),
                       [&](const RecordErratum& e) { return e.field == field; });
}

const std::vector<std::pair<std::string, Int>>& b2_one_targets() {
    static const std::vector<std::pair<std::string, Int>> t = {
        {"P3", 64}, {"Q", 54}, {"V3", 24}, {"V4", 32}, {"V5", 40}};
    return t;
}

std::optional<Int> named_target_degree(const std::string& name) {
    for (const auto& [n, d] : b2_one_targets())
        if (n == name) return d;
    return std::nullopt;
}

namespace {

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

FanoRecord parse_record(const json& j) {
    FanoRecord r;
    const auto& id = j.at("mm_id");
    r.mm_id.b2 = id.at("b2").get<int>();
    r.mm_id.number = id.at("number").get<int>();
    if (id.contains("suffix")) r.mm_id.suffix = id["suffix"].get<std::string>();
    if (j.contains("toric_symbol") && !j["toric_symbol"].is_null())
        r.toric_symbol = j["toric_symbol"].get<std::string>();
    r.minus_k_cubed = j.at("minus_k_cubed").get<Int>();
    for (const auto& e : j.value("extremal_data", json::array())) {
        RecordContribution c;
        c.type = e.at("type").get<int>();
        if (e.contains("target") && !e["target"].is_null())
            c.target = e["target"].get<std::string>();
        c.count = e.value("count", 1);
        if (e.contains("center_degree")) c.center_degree = e["center_degree"].get<Int>();
        if (e.contains("center_genus")) c.center_genus = e["center_genus"].get<Int>();
        r.extremal_data.push_back(std::move(c));
    }
    for (const auto& f : j.value("fibrations", json::array()))
        r.fibrations.push_back(
            RecordFibration{f.at("kind").get<std::string>(), f.at("target").get<std::string>()});
    if (j.contains("chi_X") && !j["chi_X"].is_null()) r.chi_x = j["chi_X"].get<Int>();
    r.very_ample = j.at("very_ample").get<bool>();
    for (const auto& e : j.value("errata", json::array()))
        r.errata.push_back(
            RecordErratum{e.at("field").get<std::string>(), e.at("note").get<std::string>()});
    return r;
}

const FanoRecord* find_record(const std::vector<FanoRecord>& all, int b2, int number) {
    for (const auto& r : all)
        if (r.mm_id.b2 == b2 && r.mm_id.number == number) return &r;
    return nullptr;
}

std::optional<Int> target_degree(const FanoRecord& rec, const std::string& target,
                                 const std::vector<FanoRecord>& all) {
    if (auto d = named_target_degree(target)) return d;
    if (!all_digits(target)) return std::nullopt;
    const FanoRecord* t = find_record(all, rec.mm_id.b2 - 1, std::stoi(target));
    if (!t) return std::nullopt;
    return t->minus_k_cubed;
}

void validate(const std::vector<FanoRecord>& all) {
    std::map<std::string, int> seen;
    for (const auto& r : all) {
        const std::string row = "row " + r.mm_id.str();
        if (seen.count(r.mm_id.str()))
            throw ValidationError(row + ": duplicate identifier");
        seen[r.mm_id.str()] = 1;
        if (r.minus_k_cubed <= 0) throw ValidationError(row + ": (-K)^3 must be positive");
        if (r.chi_x) {
            Int expect = chi_x_from_degree(r.minus_k_cubed);
            if (*r.chi_x != expect && !r.has_erratum("chi_X"))
                throw ValidationError(row + ": chi_X " + std::to_string(*r.chi_x) +
                                      " != 288 + 360*" + std::to_string(r.minus_k_cubed) +
                                      " = " + std::to_string(expect) +
                                      " and no documented erratum");
        }
        for (const auto& c : r.extremal_data) {
            if (c.type < 1 || c.type > 5)
                throw ValidationError(row + ": contribution type out of range");
            if (c.count < 1) throw ValidationError(row + ": contribution count < 1");
            if (c.target && !all_digits(*c.target) && !named_target_degree(*c.target))
                throw ValidationError(row + ": unknown target name " + *c.target);
            if (c.target && all_digits(*c.target) &&
                !find_record(all, r.mm_id.b2 - 1, std::stoi(*c.target)))
                throw ValidationError(row + ": dangling target reference " + *c.target);
        }
        for (const auto& f : r.fibrations)
            if (f.kind != "p" && f.kind != "c")
                throw ValidationError(row + ": fibration kind must be p or c");
    }
    for (const auto& r : all) {
        for (const auto& c : r.extremal_data) {
            if (c.type != 1 || !c.center_degree || !c.target) continue;
            GenusCheck g = genus_identity_check(r, c, all);
            if (!g.ok)
                throw ValidationError("row " + r.mm_id.str() +
                                      ": genus identity fails: " + g.note);
        }
    }
}

} // namespace

std::vector<FanoRecord> records_from_json_text(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_array()) throw ValidationError("record file: expected a JSON array");
    std::vector<FanoRecord> out;
    for (const auto& e : j) out.push_back(parse_record(e));
    std::sort(out.begin(), out.end(),
              [](const FanoRecord& a, const FanoRecord& b) { return a.mm_id < b.mm_id; });
    validate(out);
    return out;
}

std::vector<FanoRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open record file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return records_from_json_text(ss.str());
}

GenusCheck genus_identity_check(const FanoRecord& record, const RecordContribution& entry,
                                const std::vector<FanoRecord>& all) {
    GenusCheck out;
    if (entry.type != 1) {
        out.note = "entry is not a ruled (2.9.1) contraction";
        return out;
    }
    if (!entry.target || !entry.center_degree) {
        out.note = "insufficient data: needs a resolvable target and the center degree";
        return out;
    }
    auto tdeg = target_degree(record, *entry.target, all);
    if (!tdeg) {
        out.note = "target degree unknown: " + *entry.target;
        return out;
    }
    Int gap = *tdeg - record.minus_k_cubed;
    if (gap % 2 != 0) {
        out.note = "degree gap is odd; no integral genus";
        return out;
    }
    // (-K_B)^3 = (-K_{B_R})^3 - 2{ -K_{B_R}.L - g + 1 }
    Int g = *entry.center_degree + 1 - gap / 2;
    out.genus = g;
    if (g < 0) {
        out.note = "back-solved genus is negative";
        return out;
    }
    if (entry.center_genus && *entry.center_genus != g) {
        out.note = "stored genus " + std::to_string(*entry.center_genus) +
                   " != back-solved " + std::to_string(g);
        return out;
    }
    out.ok = true;
    return out;
}

} // namespace fanopot
