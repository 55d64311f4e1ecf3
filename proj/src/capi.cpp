#include "tricolor.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include <json.hpp>

#include "apfree.hpp"
#include "bounds.hpp"
#include "construction.hpp"
#include "error.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "verify.hpp"

namespace {

using namespace tricolor;

thread_local std::string g_last_error;

tc_status status_from(Errc code) {
    switch (code) {
    case Errc::invalid_argument: return TC_EINVAL;
    case Errc::parse: return TC_EPARSE;
    case Errc::limit: return TC_ELIMIT;
    case Errc::verify_failed: return TC_EVERIFY;
    case Errc::io: return TC_EIO;
    }
    return TC_EINTERNAL;
}

template <typename Fn>
tc_status guarded(Fn&& fn) {
    try {
        fn();
        return TC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return TC_EINTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TC_EINTERNAL;
    }
}

tc_status invalid(const char* message) {
    g_last_error = message;
    return TC_EINVAL;
}

// Ownership passes to the caller; released with tc_string_free (free).
char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

tc_status run_verifier(const char* jsonl, int* out_valid, char** out_verdict_json, bool pms) {
    if (jsonl == nullptr || out_valid == nullptr) return invalid("verify: NULL argument");
    return guarded([&] {
        std::optional<Violation> v;
        if (pms)
            v = verify_pms(pairseq_from_jsonl(jsonl));
        else
            v = verify_tcsfs(tripleset_from_jsonl(jsonl));
        *out_valid = v ? 0 : 1;
        if (out_verdict_json != nullptr) *out_verdict_json = dup_string(verdict_to_json(v));
    });
}

} // namespace

struct tc_construction {
    ConstructionResult result;
};

extern "C" {

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

tc_status tc_bound_report_json(int n, int p, char** out_json) {
    if (out_json == nullptr) return invalid("tc_bound_report_json: NULL output");
    return guarded([&] { *out_json = dup_string(bound_report_to_json(bound_report(n, p))); });
}

tc_status tc_apfree_build_json(uint64_t m, const char* method, char** out_json) {
    if (out_json == nullptr) return invalid("tc_apfree_build_json: NULL output");
    return guarded([&] {
        ApFreeMethod mth = apfree_method_from_name(method == nullptr ? "greedy" : method);
        *out_json = dup_string(apfree_to_json(build_apfree(m, mth)));
    });
}

tc_status tc_max_apfree_exact_json(uint64_t m, char** out_json) {
    if (out_json == nullptr) return invalid("tc_max_apfree_exact_json: NULL output");
    return guarded([&] {
        ApFreeSet best = max_apfree_mod_exact(m);
        nlohmann::ordered_json j;
        j["M"] = best.m;
        j["max_size"] = best.size();
        j["elements"] = best.elements;
        *out_json = dup_string(j.dump() + "\n");
    });
}

tc_status tc_elkin_bound(uint64_t m, double* out_value) {
    if (out_value == nullptr) return invalid("tc_elkin_bound: NULL output");
    return guarded([&] { *out_value = elkin_bound(m); });
}

tc_status tc_verify_tcsfs_jsonl(const char* jsonl, int* out_valid, char** out_verdict_json) {
    return run_verifier(jsonl, out_valid, out_verdict_json, false);
}

tc_status tc_verify_pms_jsonl(const char* jsonl, int* out_valid, char** out_verdict_json) {
    return run_verifier(jsonl, out_valid, out_verdict_json, true);
}

tc_status tc_construct(const tc_construct_params* params, tc_construction** out) {
    if (params == nullptr || out == nullptr) return invalid("tc_construct: NULL argument");
    *out = nullptr;
    return guarded([&] {
        ConstructionParams cp;
        cp.n = params->n;
        cp.m = params->m;
        cp.b_method = params->b_method == nullptr ? "greedy" : params->b_method;
        if (params->b_set_json != nullptr) cp.b = apfree_from_json(params->b_set_json);
        cp.seed = params->seed;
        cp.trials = params->trials;
        cp.threads = params->threads == 0 ? 1 : params->threads;
        cp.verify_trials = params->verify_trials != 0;
        auto handle = std::make_unique<tc_construction>();
        handle->result = run_trials(cp);
        *out = handle.release();
    });
}

void tc_construction_free(tc_construction* c) { delete c; }

tc_status tc_construction_set_jsonl(const tc_construction* c, char** out) {
    if (c == nullptr || out == nullptr) return invalid("tc_construction_set_jsonl: NULL argument");
    return guarded([&] { *out = dup_string(tripleset_to_jsonl(c->result.best)); });
}

tc_status tc_construction_stats_json(const tc_construction* c, char** out) {
    if (c == nullptr || out == nullptr) return invalid("tc_construction_stats_json: NULL argument");
    return guarded([&] { *out = dup_string(stats_to_json(c->result)); });
}

tc_status tc_construction_summary_json(const tc_construction* c, char** out) {
    if (c == nullptr || out == nullptr) return invalid("tc_construction_summary_json: NULL argument");
    return guarded([&] { *out = dup_string(construction_summary_to_json(c->result)); });
}

tc_status tc_oracle_tcsfs_json(int n, uint64_t node_budget, char** out_json) {
    if (out_json == nullptr) return invalid("tc_oracle_tcsfs_json: NULL output");
    return guarded([&] { *out_json = dup_string(oracle_result_to_json(max_tcsfs_exact(n, node_budget))); });
}

} // extern "C"
