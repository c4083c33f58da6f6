// Transcribed classification rows for the Fano-base tables: ingest,
// validate, and the genus identity used to cross-check ruled contractions.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanopot/ints.hpp"

namespace fanopot {

struct MMId {
    int b2 = 0;
    int number = 0;
    std::string suffix; // "a"/"b" variants
    std::string str() const {
        return std::to_string(b2) + "-" + std::to_string(number) + suffix;
    }
    auto operator<=>(const MMId&) const = default;
};

// One divisor entry of the "contributions" column: type 2.9.<type>, an
// optional target (a number in the previous-b2 table, or a named index-1
// threefold), and optional center data for ruled contractions.
struct RecordContribution {
    int type = 1;
    std::optional<std::string> target;
    int count = 1;
    std::optional<Int> center_degree; // -K_{B_R} . L
    std::optional<Int> center_genus;
};

struct RecordFibration {
    std::string kind;   // "p" (P1-bundle) or "c" (conic bundle)
    std::string target;
};

struct RecordErratum {
    std::string field;
    std::string note;
};

struct FanoRecord {
    MMId mm_id;
    std::optional<std::string> toric_symbol;
    Int minus_k_cubed = 0;
    std::vector<RecordContribution> extremal_data;
    std::vector<RecordFibration> fibrations;
    std::optional<Int> chi_x;  // as printed in the source table
    bool very_ample = true;
    std::vector<RecordErratum> errata;

    bool has_erratum(const std::string& field) const;
};

// Degrees (-K)^3 of the named index-1 sinks.
const std::vector<std::pair<std::string, Int>>& b2_one_targets();
std::optional<Int> named_target_degree(const std::string& name);

// Loads and validates a record file. Validation enforces
// chi_X = 288 + 360 (-K)^3 (unless the row carries a chi_X erratum), target
// references that resolve, and the genus identity on every ruled entry with
// center data. Violations raise ValidationError naming the row.
std::vector<FanoRecord> load_records(const std::string& path);
std::vector<FanoRecord> records_from_json_text(const std::string& text);

struct GenusCheck {
    bool ok = false;
    std::optional<Int> genus;   // back-solved value when integral
    std::string note;
};

// Solves (-K_B)^3 = (-K_{B_R})^3 - 2{ -K_{B_R}.L - g + 1 } for g and
// compares with the stored center genus.
GenusCheck genus_identity_check(const FanoRecord& record, const RecordContribution& entry,
                                const std::vector<FanoRecord>& all);

} // namespace fanopot
