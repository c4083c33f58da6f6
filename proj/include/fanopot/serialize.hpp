// Deterministic renderings of reports: JSON, TSV and DOT.
#pragma once

#include <string>

#include "fanopot/catalog.hpp"

namespace fanopot {

std::string base_report_json(const BaseReport& rep);
std::string base_report_tsv(const BaseReport& rep);

// Full table in the paper's column layout, ordered by (b2 desc, number asc);
// toric rows carry the engine-computed values.
std::string tables_tsv(const std::vector<FanoRecord>& records);
std::string tables_json(const std::vector<FanoRecord>& records);

std::string check_report_text(const TableCheck& check);

// Transition graph in DOT, one rank column per b2 value (descending).
std::string graph_dot(const TransitionGraph& graph);

std::string delpezzo_tsv(int r);
std::string delpezzo_json(int r);

} // namespace fanopot
