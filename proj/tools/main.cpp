#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricolor.h"

namespace {

using ordered = nlohmann::ordered_json;

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stderr)) != 0;
}

void print_error(const std::string& message) {
    if (use_color())
        std::cerr << "\x1b[31merror:\x1b[0m " << message << "\n";
    else
        std::cerr << "error: " << message << "\n";
}

// Usage and input problems exit 2; verification sentinels and internal
// failures exit 3. A reported definition violation exits 1 (handled by the
// verify command itself).
int exit_for(tc_status status) {
    switch (status) {
    case TC_OK: return 0;
    case TC_EVERIFY:
    case TC_EINTERNAL: return 3;
    default: return 2;
    }
}

int fail_with(tc_status status) {
    print_error(tc_last_error());
    return exit_for(status);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { tc_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) return false;
    out = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    out.flush();
    return static_cast<bool>(out);
}

struct ConstructOptions {
    int n = 0;
    std::uint64_t m = 0;
    std::string b_method = "greedy";
    std::string b_file;
    std::uint64_t seed = 0;
    int trials = 100;
    int threads = 1;
    bool verify = false;
    std::string out_set = "tcsfs_set.jsonl";
    std::string out_stats = "tcsfs_stats.json";
};

void add_construct_flags(CLI::App* cmd, ConstructOptions& opt, bool with_files) {
    cmd->add_option("--n", opt.n, "dimension of the ambient space")->required();
    cmd->add_option("--M", opt.m, "odd modulus; default 4*C(2n'/3,n'/3)+1");
    cmd->add_option("--b-method", opt.b_method, "filter set source: behrend, greedy, exact, file")
        ->check(CLI::IsMember({"behrend", "greedy", "exact", "file"}));
    cmd->add_option("--b-file", opt.b_file, "filter set JSON file (with --b-method file)");
    cmd->add_option("--seed", opt.seed, "base seed for the trial streams");
    cmd->add_option("--trials", opt.trials, "number of independent trials");
    cmd->add_option("--threads", opt.threads, "worker cap; never changes results");
    if (with_files) {
        cmd->add_flag("--verify", opt.verify, "re-check every trial's set");
        cmd->add_option("--out-set", opt.out_set, "output path for the best set");
        cmd->add_option("--out-stats", opt.out_stats, "output path for per-trial statistics");
    }
}

// Shared by construct and estimate. Returns nonzero exit code on failure,
// with *out filled on success.
int run_construction(const ConstructOptions& opt, bool file_method_given, tc_construction** out) {
    std::string b_json;
    if (opt.b_method == "file" || !opt.b_file.empty()) {
        if (opt.b_file.empty()) {
            print_error("--b-method file requires --b-file");
            return 2;
        }
        if (file_method_given && opt.b_method != "file") {
            print_error("--b-file conflicts with --b-method " + opt.b_method);
            return 2;
        }
        if (!read_file(opt.b_file, b_json)) {
            print_error("cannot read " + opt.b_file);
            return 2;
        }
    }

    tc_construct_params params{};
    params.n = opt.n;
    params.m = opt.m;
    std::string method_label = b_json.empty() ? opt.b_method : "file";
    params.b_method = method_label.c_str();
    params.b_set_json = b_json.empty() ? nullptr : b_json.c_str();
    params.seed = opt.seed;
    params.trials = opt.trials;
    params.threads = opt.threads;
    params.verify_trials = opt.verify ? 1 : 0;

    tc_status status = tc_construct(&params, out);
    if (status != TC_OK) return fail_with(status);
    return 0;
}

int cmd_bound(int n, int p) {
    OwnedString json;
    tc_status status = tc_bound_report_json(n, p, &json.ptr);
    if (status != TC_OK) return fail_with(status);
    std::cout << json.str();
    return 0;
}

int cmd_construct(const ConstructOptions& opt, bool file_method_given) {
    tc_construction* handle = nullptr;
    if (int code = run_construction(opt, file_method_given, &handle); code != 0) return code;
    std::unique_ptr<tc_construction, decltype(&tc_construction_free)> owner(handle, tc_construction_free);

    OwnedString set_text, stats_text, summary_text;
    if (tc_status s = tc_construction_set_jsonl(handle, &set_text.ptr); s != TC_OK) return fail_with(s);
    if (tc_status s = tc_construction_stats_json(handle, &stats_text.ptr); s != TC_OK) return fail_with(s);
    if (tc_status s = tc_construction_summary_json(handle, &summary_text.ptr); s != TC_OK)
        return fail_with(s);

    if (!write_file(opt.out_set, set_text.str())) {
        print_error("cannot write " + opt.out_set);
        return 2;
    }
    if (!write_file(opt.out_stats, stats_text.str())) {
        print_error("cannot write " + opt.out_stats);
        return 2;
    }

    ordered summary = ordered::parse(summary_text.str());
    summary["set_file"] = opt.out_set;
    summary["stats_file"] = opt.out_stats;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_estimate(const ConstructOptions& opt, bool file_method_given) {
    tc_construction* handle = nullptr;
    if (int code = run_construction(opt, file_method_given, &handle); code != 0) return code;
    std::unique_ptr<tc_construction, decltype(&tc_construction_free)> owner(handle, tc_construction_free);

    OwnedString summary_text;
    if (tc_status s = tc_construction_summary_json(handle, &summary_text.ptr); s != TC_OK)
        return fail_with(s);
    std::cout << summary_text.str();
    return 0;
}

int cmd_verify(const std::string& path, const std::string& kind) {
    std::string content;
    if (!read_file(path, content)) {
        print_error("cannot read " + path);
        return 2;
    }
    int valid = 0;
    OwnedString verdict;
    tc_status status = kind == "pms" ? tc_verify_pms_jsonl(content.c_str(), &valid, &verdict.ptr)
                                     : tc_verify_tcsfs_jsonl(content.c_str(), &valid, &verdict.ptr);
    if (status != TC_OK) return fail_with(status);
    std::cout << verdict.str();
    return valid ? 0 : 1;
}

int cmd_apfree(std::uint64_t m, const std::string& method, const std::string& out_path) {
    OwnedString set_json;
    tc_status status = tc_apfree_build_json(m, method.c_str(), &set_json.ptr);
    if (status != TC_OK) return fail_with(status);

    double elkin = 0;
    if (m >= 2) {
        if (tc_status s = tc_elkin_bound(m, &elkin); s != TC_OK) return fail_with(s);
    }

    if (!write_file(out_path, set_json.str())) {
        print_error("cannot write " + out_path);
        return 2;
    }

    ordered set = ordered::parse(set_json.str());
    ordered summary;
    summary["M"] = m;
    summary["method"] = method;
    summary["size"] = set["elements"].size();
    if (m >= 2) summary["elkin_bound"] = elkin;
    summary["set_file"] = out_path;
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_oracle(const std::string& kind, int n, std::uint64_t m, std::uint64_t budget) {
    OwnedString json;
    tc_status status = kind == "apfree" ? tc_max_apfree_exact_json(m, &json.ptr)
                                        : tc_oracle_tcsfs_json(n, budget, &json.ptr);
    if (status != TC_OK) return fail_with(status);
    std::cout << json.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tri-colored sum-free set construction, verification, and bounds"};
    app.require_subcommand(1);

    int bound_n = 0, bound_p = 2;
    CLI::App* bound = app.add_subcommand("bound", "print size bounds for dimension n over F_p");
    bound->add_option("--n", bound_n, "dimension")->required();
    bound->add_option("--p", bound_p, "field characteristic");

    ConstructOptions copt;
    CLI::App* construct =
        app.add_subcommand("construct", "run randomized trials and write the best set");
    add_construct_flags(construct, copt, true);

    ConstructOptions eopt;
    CLI::App* estimate =
        app.add_subcommand("estimate", "run trials and report size statistics only");
    add_construct_flags(estimate, eopt, false);

    std::string verify_in, verify_kind = "tcsfs";
    CLI::App* verify = app.add_subcommand("verify", "check a set file against its definition");
    verify->add_option("--in", verify_in, "input file")->required();
    verify->add_option("--kind", verify_kind, "tcsfs or pms")
        ->check(CLI::IsMember({"tcsfs", "pms"}));

    std::uint64_t apfree_m = 0;
    std::string apfree_method = "greedy", apfree_out = "apfree_set.json";
    CLI::App* apfree =
        app.add_subcommand("apfree", "build a progression-free subset of Z/MZ");
    apfree->add_option("--M", apfree_m, "modulus")->required();
    apfree->add_option("--method", apfree_method, "behrend, greedy, or exact")
        ->check(CLI::IsMember({"behrend", "greedy", "exact"}));
    apfree->add_option("--out", apfree_out, "output path for the set");

    std::string oracle_kind = "tcsfs";
    int oracle_n = 0;
    std::uint64_t oracle_m = 0, oracle_budget = 50'000'000;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive ground-truth searches");
    oracle->add_option("--kind", oracle_kind, "tcsfs or apfree")
        ->check(CLI::IsMember({"tcsfs", "apfree"}));
    oracle->add_option("--n", oracle_n, "dimension for the tcsfs search (0..3)");
    oracle->add_option("--M", oracle_m, "modulus for the apfree search (<= 40)");
    oracle->add_option("--budget", oracle_budget, "node budget for the tcsfs search; 0 = unlimited");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (bound->parsed()) return cmd_bound(bound_n, bound_p);
    if (construct->parsed())
        return cmd_construct(copt, construct->count("--b-method") > 0);
    if (estimate->parsed()) return cmd_estimate(eopt, estimate->count("--b-method") > 0);
    if (verify->parsed()) return cmd_verify(verify_in, verify_kind);
    if (apfree->parsed()) return cmd_apfree(apfree_m, apfree_method, apfree_out);
    if (oracle->parsed()) return cmd_oracle(oracle_kind, oracle_n, oracle_m, oracle_budget);
    return 2;
}
