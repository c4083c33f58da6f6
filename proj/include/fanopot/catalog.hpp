// Built-in fans for the smooth toric Fano 3-folds, identification of
// analyzed fans against the classification rows, table reproduction and the
// transition graph.
#pragma once

#include "fanopot/records.hpp"
#include "fanopot/superpot.hpp"

namespace fanopot {

struct ToricFanoEntry {
    std::string symbol;  // F_1 ... F_18
    MMId mm_id;          // F_1 maps to the index-1 sink P3
    Int minus_k_cubed = 0;
    Fan fan;
};

// The 18 smooth toric Fano 3-folds. F_2..F_12 are fixed constructions;
// F_13..F_18 include fans derived by exhausting wall blow-ups of the lower
// rank set and keeping the Fano ones. Built once, verified against the
// expected invariants; a mismatch is a build-time error.
const std::vector<ToricFanoEntry>& toric_fano_table();

// Lookup by Batyrev symbol; unknown symbols raise ValidationError listing
// the known ones.
Fan builtin_toric_fano(const std::string& symbol);

// Identify a smooth complete toric Fano 3-fold among the built-ins by its
// invariants (b2, degree, fibration count, contraction-type multiset).
// Returns the catalog id ("P3" at rank one, "2-33" style otherwise).
std::optional<std::string> identify_toric_fano(const BaseReport& report);

// Engine-side row content for a toric record: verdicts with resolved target
// ids, fibration kinds, and the computed Euler characteristic.
struct EngineRow {
    std::string symbol;
    BaseReport report;
    // per contributing divisor: (2.9 type, target id or empty)
    std::vector<std::pair<int, std::string>> contributing;
    Int chi = 0;
};

EngineRow engine_row(const std::string& symbol);

struct RowDiff {
    std::string row;
    std::string field;
    std::string expected;  // from the transcribed table
    std::string computed;  // from the engine
    bool documented = false;
};

struct TableCheck {
    std::vector<RowDiff> diffs;
    bool strict_ok() const {
        for (const auto& d : diffs)
            if (!d.documented) return false;
        return true;
    }
};

// Golden-data regression: every toric row is recomputed from its fan and
// compared (contribution counts by type, named targets as a multiset,
// fibration kind counts, chi). Documented errata do not fail strict mode.
TableCheck check_tables(const std::vector<FanoRecord>& records);

struct TransitionEdge {
    std::string from, to;
    int type = 1;       // 2.9.<type>
    int multiplicity = 1;
};

struct TransitionGraph {
    std::vector<std::pair<std::string, int>> nodes; // id, b2
    std::vector<TransitionEdge> edges;
};

// Node per record plus the named index-1 sinks; edge per contributing
// divisorial entry with a known target. Every edge drops b2 by exactly one.
TransitionGraph transition_graph(const std::vector<FanoRecord>& records);

} // namespace fanopot
