#include "io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace tricolor {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_line(const std::string& line, std::size_t lineno) {
    try {
        json j = json::parse(line);
        if (!j.is_object()) fail(Errc::parse, "line " + std::to_string(lineno) + ": expected a JSON object");
        return j;
    } catch (const json::exception& e) {
        fail(Errc::parse, "line " + std::to_string(lineno) + ": " + e.what());
    }
}

std::int64_t require_int(const json& j, const char* key, std::size_t lineno) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        fail(Errc::parse, "line " + std::to_string(lineno) + ": missing integer field \"" + key + "\"");
    return it->get<std::int64_t>();
}

std::string require_string(const json& j, const char* key, std::size_t lineno) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        fail(Errc::parse, "line " + std::to_string(lineno) + ": missing string field \"" + key + "\"");
    return it->get<std::string>();
}

BitVec parse_bits(const json& j, const char* key, int n, std::size_t lineno) {
    BitVec v = BitVec::from_string(require_string(j, key, lineno));
    if (v.dim() != n)
        fail(Errc::parse, "line " + std::to_string(lineno) + ": field \"" + key + "\" must have length " +
                              std::to_string(n));
    return v;
}

// Shared walk for the two line-format readers. row() is called once per data
// line after the header has been validated.
template <typename RowFn>
void scan_jsonl(const std::string& text, bool allow_pms_header, int& n_out, RowFn&& row) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::int64_t expected = 0, seen = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = parse_line(line, lineno);
        if (!have_header) {
            std::string type = require_string(j, "type", lineno);
            if (type != "tcsfs" && !(allow_pms_header && type == "pms"))
                fail(Errc::parse, "line " + std::to_string(lineno) + ": unsupported type \"" + type + "\"");
            std::int64_t n = require_int(j, "n", lineno);
            if (n < 1 || n > (1 << 20))
                fail(Errc::parse, "line " + std::to_string(lineno) + ": n out of range");
            expected = require_int(j, "count", lineno);
            if (expected < 0) fail(Errc::parse, "line " + std::to_string(lineno) + ": negative count");
            n_out = static_cast<int>(n);
            have_header = true;
            continue;
        }
        ++seen;
        if (seen > expected)
            fail(Errc::parse, "line " + std::to_string(lineno) + ": more records than the declared count");
        row(j, lineno);
    }
    if (!have_header) fail(Errc::parse, "missing header line");
    if (seen != expected)
        fail(Errc::parse, "expected " + std::to_string(expected) + " records, found " + std::to_string(seen));
}

double rat_to_double(const Rat& r) { return r.get_d(); }

struct MeanSe {
    double mean = 0, se = 0;
};

MeanSe mean_se(const std::vector<TrialStats>& trials, std::uint64_t TrialStats::*field) {
    std::size_t t = trials.size();
    double sum = 0;
    for (const TrialStats& s : trials) sum += static_cast<double>(s.*field);
    double mean = sum / static_cast<double>(t);
    if (t < 2) return {mean, 0.0};
    double ss = 0;
    for (const TrialStats& s : trials) {
        double d = static_cast<double>(s.*field) - mean;
        ss += d * d;
    }
    double sd = std::sqrt(ss / static_cast<double>(t - 1));
    return {mean, sd / std::sqrt(static_cast<double>(t))};
}

} // namespace

std::string tripleset_to_jsonl(const TripleSet& s) {
    std::string out = "{\"type\":\"tcsfs\",\"n\":" + std::to_string(s.n) +
                      ",\"count\":" + std::to_string(s.size()) + "}\n";
    for (const Triple& t : s.triples) {
        out += "{\"a\":\"" + t.a.to_string() + "\",\"b\":\"" + t.b.to_string() + "\",\"c\":\"" +
               t.c.to_string() + "\"}\n";
    }
    return out;
}

TripleSet tripleset_from_jsonl(const std::string& text) {
    TripleSet s;
    scan_jsonl(text, false, s.n, [&](const json& j, std::size_t lineno) {
        s.add(Triple{parse_bits(j, "a", s.n, lineno), parse_bits(j, "b", s.n, lineno),
                     parse_bits(j, "c", s.n, lineno)});
    });
    return s;
}

PairSeq pairseq_from_jsonl(const std::string& text) {
    PairSeq p;
    scan_jsonl(text, true, p.n, [&](const json& j, std::size_t lineno) {
        p.pairs.emplace_back(parse_bits(j, "a", p.n, lineno), parse_bits(j, "b", p.n, lineno));
    });
    return p;
}

std::string apfree_to_json(const ApFreeSet& b) {
    ordered j;
    j["M"] = b.m;
    j["elements"] = b.elements;
    return j.dump() + "\n";
}

ApFreeSet apfree_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        fail(Errc::parse, std::string("apfree set: ") + e.what());
    }
    if (!j.is_object() || !j.contains("M") || !j.contains("elements") ||
        !j["M"].is_number_unsigned() || !j["elements"].is_array())
        fail(Errc::parse, "apfree set: expected {\"M\": integer, \"elements\": [...]}");
    ApFreeSet b;
    b.m = j["M"].get<std::uint64_t>();
    if (b.m == 0 || b.m > (std::uint64_t{1} << 63)) fail(Errc::parse, "apfree set: M out of range");
    for (const json& e : j["elements"]) {
        if (!e.is_number_unsigned()) fail(Errc::parse, "apfree set: elements must be nonnegative integers");
        std::uint64_t v = e.get<std::uint64_t>();
        if (v >= b.m) fail(Errc::parse, "apfree set: element " + std::to_string(v) + " not below M");
        if (!b.elements.empty() && v <= b.elements.back())
            fail(Errc::parse, "apfree set: elements must be strictly increasing");
        b.elements.push_back(v);
    }
    return b;
}

std::string verdict_to_json(const std::optional<Violation>& v) {
    ordered j;
    if (!v) {
        j["valid"] = true;
    } else {
        j["valid"] = false;
        j["kind"] = violation_kind_name(v->kind);
        j["i"] = v->i;
        j["j"] = v->j;
        j["k"] = v->k;
    }
    return j.dump() + "\n";
}

std::string bound_report_to_json(const BoundReport& r) {
    ordered j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["d"] = r.d;
    j["dim_L"] = to_decimal(r.dim_l);
    j["ub_theorem"] = to_decimal(r.ub_theorem);
    if (r.p == 2) j["ub_abstract"] = to_decimal(r.ub_abstract);
    j["lb_formula"] = r.lb_formula;
    return j.dump() + "\n";
}

std::string oracle_result_to_json(const OracleResult& r) {
    ordered j;
    j["n"] = r.n;
    j["max_size"] = r.max_size;
    j["proven"] = r.proven;
    j["nodes_explored"] = r.nodes_explored;
    ordered w;
    w["n"] = r.witness.n;
    w["count"] = r.witness.size();
    w["triples"] = ordered::array();
    for (const Triple& t : r.witness.triples) {
        ordered row;
        row["a"] = t.a.to_string();
        row["b"] = t.b.to_string();
        row["c"] = t.c.to_string();
        w["triples"].push_back(std::move(row));
    }
    j["witness"] = std::move(w);
    return j.dump() + "\n";
}

std::string stats_to_json(const ConstructionResult& r) {
    ordered params;
    params["n"] = r.n;
    params["n_prime"] = r.n_prime;
    params["M"] = r.m;
    params["b_method"] = r.b_method;
    params["b_size"] = r.b_size;
    params["seed"] = r.seed;
    params["trials"] = r.trials.size();

    ordered rows = ordered::array();
    for (const TrialStats& t : r.trials) {
        ordered row;
        row["t"] = t.trial;
        row["Y"] = t.y;
        row["Y0"] = t.y0;
        row["Y1"] = t.y1;
        row["Y2"] = t.y2;
        row["Z"] = t.z;
        rows.push_back(std::move(row));
    }

    ordered j;
    j["params"] = std::move(params);
    j["trials"] = std::move(rows);
    j["predicted_EY"] = to_fraction(r.predicted_ey);
    return j.dump() + "\n";
}

std::string construction_summary_to_json(const ConstructionResult& r) {
    Rat factor = expected_Y0_bound(r.n_prime, r.m, Rat(1));
    MeanSe y = mean_se(r.trials, &TrialStats::y);
    MeanSe y0 = mean_se(r.trials, &TrialStats::y0);
    MeanSe y1 = mean_se(r.trials, &TrialStats::y1);
    MeanSe y2 = mean_se(r.trials, &TrialStats::y2);
    MeanSe z = mean_se(r.trials, &TrialStats::z);

    ordered j;
    j["n"] = r.n;
    j["n_prime"] = r.n_prime;
    j["M"] = r.m;
    j["b_method"] = r.b_method;
    j["b_size"] = r.b_size;
    j["seed"] = r.seed;
    j["trials"] = r.trials.size();
    j["best_trial"] = r.best_trial;
    j["best_size"] = r.best.size();
    j["predicted_EY"] = to_fraction(r.predicted_ey);
    j["predicted_EY_value"] = rat_to_double(r.predicted_ey);
    j["collision_factor"] = to_fraction(factor);
    j["collision_factor_value"] = rat_to_double(factor);
    j["mean_Y"] = y.mean;
    j["se_Y"] = y.se;
    j["mean_Y0"] = y0.mean;
    j["se_Y0"] = y0.se;
    j["mean_Y1"] = y1.mean;
    j["se_Y1"] = y1.se;
    j["mean_Y2"] = y2.mean;
    j["se_Y2"] = y2.se;
    j["mean_Z"] = z.mean;
    j["se_Z"] = z.se;
    return j.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::io, "cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) fail(Errc::io, "failed while reading " + path);
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io, "cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) fail(Errc::io, "failed while writing " + path);
}

} // namespace tricolor
