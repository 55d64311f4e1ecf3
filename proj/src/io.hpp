#pragma once

#include <optional>
#include <string>

#include "apfree.hpp"
#include "bounds.hpp"
#include "construction.hpp"
#include "oracle.hpp"
#include "verify.hpp"

namespace tricolor {

// Set file: one JSON object per line. Header {"type":"tcsfs","n":N,"count":m}
// followed by m rows {"a":"<bits>","b":"<bits>","c":"<bits>"}.
std::string tripleset_to_jsonl(const TripleSet& s);
TripleSet tripleset_from_jsonl(const std::string& text);

// Reads the same line format as a pair sequence; any "c" field is ignored and
// the header type may be "tcsfs" or "pms".
PairSeq pairseq_from_jsonl(const std::string& text);

// {"M": integer, "elements": [ascending integers]}
std::string apfree_to_json(const ApFreeSet& b);
ApFreeSet apfree_from_json(const std::string& text);

// {"valid":true} or {"valid":false,"kind":...,"i":...,"j":...,"k":...}
std::string verdict_to_json(const std::optional<Violation>& v);

// Arbitrary-precision fields are decimal strings; ub_abstract appears only
// for p = 2.
std::string bound_report_to_json(const BoundReport& r);

std::string oracle_result_to_json(const OracleResult& r);

// {"params":{...},"trials":[{"t","Y","Y0","Y1","Y2","Z"}...],"predicted_EY":"p/q"}
// Thread count is deliberately absent: files must not depend on it.
std::string stats_to_json(const ConstructionResult& r);

// Per-size empirical means and standard errors next to the exact predictions.
std::string construction_summary_to_json(const ConstructionResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace tricolor
