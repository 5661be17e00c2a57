// Copyright 2026 The hwproj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>
#include <sstream>

#include "hwproj/circuit_io.h"
#include "hwproj/hamming.h"
#include "hwproj/oracle.h"
#include "hwproj/scheduler.h"
#include "hwproj/simulator.h"
#include "hwproj/states.h"

namespace hwproj::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint32_t simulation_cap() {
    const char *env = std::getenv("HWPROJ_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxActiveQubits;
    }
    char *end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 30) {
        throw UsageError(std::string("HWPROJ_MAX_QUBITS must be an integer in [1, 30], got `") + env + "`");
    }
    return static_cast<uint32_t>(v);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open `" + path + "` for reading");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading `" + path + "`");
    }
    return ss.str();
}

void write_text(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open `" + path + "` for writing");
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("failed writing `" + path + "`");
    }
}

// Options shared by every subcommand that builds a circuit.
struct BuildConfig {
    uint32_t n = 0;
    std::string variant = "alg2";
    uint32_t s = 0;
    std::string fanout = "measurement";
    double corrupt_angle = 0;

    void add_to(CLI::App *app, bool need_n) {
        auto *opt = app->add_option("--n", n, "Number of data qubits");
        if (need_n) {
            opt->required();
        }
        app->add_option("--variant", variant, "alg1, alg2, tradeoff or resets")
            ->check(CLI::IsMember({"alg1", "alg2", "tradeoff", "resets"}));
        app->add_option("--s", s, "Control block width (default n for tradeoff/resets)");
        app->add_option("--fanout", fanout, "measurement or tree")->check(CLI::IsMember({"measurement", "tree"}));
    }

    HammingCircuit build() const {
        auto v = *parse_variant(variant);
        uint32_t width = s;
        if (width == 0) {
            width = (v == Variant::TRADEOFF || v == Variant::RESETS) ? n : 1;
        }
        HammingParams params;
        try {
            params = derive_params(n, width);
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
        BuildOptions options;
        options.fanout = fanout == "tree" ? FanoutStrategy::TREE : FanoutStrategy::MEASUREMENT_BASED;
        options.beta_offset = corrupt_angle;
        return build_variant(v, params, options);
    }
};

void check_capacity(const HammingCircuit &hc, uint32_t cap) {
    uint32_t peak = peak_active_qubits(hc.circuit, hc.layout.data_qubits);
    if (peak > cap) {
        throw CapacityError(
            "simulation needs " + std::to_string(peak) + " simultaneously simulated qubits; the cap is " +
            std::to_string(cap) + " (set HWPROJ_MAX_QUBITS to change it)");
    }
}

json amplitudes_json(const StateVector &state) {
    json arr = json::array();
    for (const auto &a : state.amps()) {
        arr.push_back({a.real(), a.imag()});
    }
    return arr;
}

// ---------------------------------------------------------------------------
// run

struct RunConfig {
    BuildConfig build;
    std::string state = "random";
    std::string state_file;
    std::string mode = "exact";
    uint64_t shots = 10000;
    uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    std::string emit_path;
    bool post_states = false;
};

// Returns the input state, filling in cfg.build.n when the state fixes it.
// Named states are only materialized after `before_alloc` has run.
StateVector resolve_state(RunConfig &cfg, const std::function<void()> &before_alloc) {
    if (!cfg.state_file.empty()) {
        StateVector st;
        try {
            st = parse_amplitudes(read_file(cfg.state_file));
        } catch (const std::invalid_argument &e) {
            throw UsageError(cfg.state_file + ": " + e.what());
        }
        if (cfg.build.n == 0) {
            cfg.build.n = st.num_qubits();
        }
        if (st.num_qubits() != cfg.build.n) {
            throw UsageError(
                "state file describes " + std::to_string(st.num_qubits()) + " qubits but --n is " +
                std::to_string(cfg.build.n));
        }
        cfg.state = "file";
        before_alloc();
        return st;
    }
    if (cfg.build.n == 0) {
        if (cfg.state == "intro3") {
            cfg.build.n = 3;
        } else if (cfg.state == "sqrt3-pair") {
            cfg.build.n = 2;
        } else {
            throw UsageError("--n is required for state `" + cfg.state + "`");
        }
    }
    before_alloc();
    if (cfg.state == "random") {
        Rng rng(cfg.seed);
        return random_state(cfg.build.n, rng);
    }
    try {
        return named_state(cfg.state, cfg.build.n);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

int cmd_run(RunConfig cfg, std::ostream &out) {
    uint32_t cap = simulation_cap();
    HammingCircuit hc;
    auto input = resolve_state(cfg, [&] {
        hc = cfg.build.build();
        check_capacity(hc, cap);
    });
    if (!cfg.emit_path.empty()) {
        write_text(cfg.emit_path, emit(hc.circuit), out);
    }
    RunOptions options;
    options.max_active_qubits = cap;

    auto oracle = exact_hamming_distribution(input);
    uint32_t n = hc.params.n;
    json doc;
    doc["n"] = n;
    doc["variant"] = std::string(variant_name(hc.variant));
    doc["s"] = hc.params.s;
    doc["mode"] = cfg.mode;
    doc["state"] = cfg.state;

    std::map<uint64_t, double> got;
    double max_dev = 0;
    std::ostringstream csv;
    csv.precision(17);
    OutcomeReport report;
    std::map<uint64_t, uint64_t> shot_counts;
    if (cfg.mode == "exact") {
        report = circuit_distribution(hc, input, options);
        for (const auto &[a, p] : report.probs) {
            got[a] = p;
        }
        json probs = json::object();
        for (const auto &[a, p] : got) {
            probs[std::to_string(a)] = p;
        }
        doc["probs"] = probs;
        csv << "outcome,probability,oracle_probability\n";
    } else {
        Rng rng(cfg.seed ^ 0x9E3779B97F4A7C15ULL);
        auto frame = QubitFrame::embed(input, hc.layout.data_qubits, hc.circuit.num_qubits);
        std::map<uint64_t, uint64_t> counts;
        for (uint64_t i = 0; i < cfg.shots; i++) {
            auto r = run_sampled(hc.circuit, frame, rng, options);
            counts[hc.decode_outcome(r.cbits)]++;
        }
        json cj = json::object();
        for (const auto &[a, c] : counts) {
            cj[std::to_string(a)] = c;
            got[a] = static_cast<double>(c) / static_cast<double>(cfg.shots);
        }
        doc["shots"] = cfg.shots;
        doc["counts"] = cj;
        csv << "outcome,count,oracle_probability\n";
        for (const auto &[a, c] : counts) {
            shot_counts[a] = c;
        }
    }

    json oj = json::object();
    for (const auto &[x, p] : oracle.probs) {
        oj[std::to_string(x)] = p;
    }
    doc["oracle_probs"] = oj;
    std::set<uint64_t> keys;
    for (uint64_t x = 0; x <= n; x++) {
        keys.insert(x);
    }
    for (const auto &[a, p] : got) {
        keys.insert(a);
    }
    for (auto a : keys) {
        double want = oracle.probs.contains(static_cast<uint32_t>(a)) ? oracle.probs.at(static_cast<uint32_t>(a)) : 0.0;
        double have = got.contains(a) ? got.at(a) : 0.0;
        max_dev = std::max(max_dev, std::abs(want - have));
        if (cfg.mode == "exact") {
            csv << a << "," << have << "," << want << "\n";
        } else {
            csv << a << "," << (shot_counts.contains(a) ? shot_counts.at(a) : 0) << "," << want << "\n";
        }
    }
    doc["max_abs_dev"] = max_dev;
    doc["seed"] = cfg.seed;
    if (cfg.post_states && cfg.mode == "exact") {
        json ps = json::object();
        for (const auto &[a, st] : report.post_states) {
            ps[std::to_string(a)] = amplitudes_json(st);
        }
        doc["post_states"] = ps;
    }
    write_text(cfg.out, cfg.format == "csv" ? csv.str() : doc.dump(2) + "\n", out);
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyConfig {
    uint32_t n_min = 1;
    uint32_t n_max = 6;
    uint32_t seeds = 25;
    uint64_t seed = 1;
    double tol = 1e-9;
    std::vector<std::string> variants;
    double corrupt_angle = 0;
    std::string fanout = "measurement";
    std::string out;
    std::string format = "json";
};

std::vector<std::pair<std::string, StateVector>> verify_states(uint32_t n, const VerifyConfig &cfg) {
    std::vector<std::pair<std::string, StateVector>> out;
    for (const char *name : {"zeros", "ones", "ghz", "w"}) {
        out.emplace_back(name, named_state(name, n));
    }
    if (n % 2 == 0) {
        out.emplace_back("bellpair-product", bell_pair_product(n));
    }
    if (n == 2) {
        out.emplace_back("sqrt3-pair", sqrt3_pair_state());
    }
    if (n == 3) {
        out.emplace_back("intro3", intro3_state());
    }
    for (uint32_t t = 0; t < cfg.seeds; t++) {
        Rng rng(cfg.seed * 0x9E3779B97F4A7C15ULL + uint64_t{n} * 100003 + t);
        out.emplace_back("random:" + std::to_string(t), random_state(n, rng));
    }
    return out;
}

int cmd_verify(const VerifyConfig &cfg, std::ostream &out) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) {
        throw UsageError("need 1 <= --n-min <= --n-max");
    }
    if (!(cfg.tol > 0)) {
        throw UsageError("--tol must be positive");
    }
    std::vector<std::string> variants = cfg.variants;
    if (variants.empty()) {
        variants = {"alg1", "alg2", "tradeoff", "resets"};
    }
    uint32_t cap = simulation_cap();
    RunOptions options;
    options.max_active_qubits = cap;

    json results = json::array();
    std::ostringstream csv;
    csv.precision(17);
    csv << "variant,n,s,state,pass,max_prob_dev,max_infidelity,out_of_range_prob\n";
    size_t total = 0, failures = 0;
    for (uint32_t n = cfg.n_min; n <= cfg.n_max; n++) {
        auto states = verify_states(n, cfg);
        for (const auto &vname : variants) {
            auto v = *parse_variant(vname);
            std::vector<uint32_t> widths = {1};
            if (v == Variant::TRADEOFF || v == Variant::RESETS) {
                widths = {1, 2, n};
                std::sort(widths.begin(), widths.end());
                widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
                widths.erase(std::remove_if(widths.begin(), widths.end(), [&](uint32_t s) { return s > n; }), widths.end());
            }
            for (auto s : widths) {
                BuildConfig b{n, vname, s, cfg.fanout, cfg.corrupt_angle};
                auto hc = b.build();
                check_capacity(hc, cap);
                for (const auto &[label, st] : states) {
                    auto r = verify_variant(hc, st, cfg.tol, options);
                    total++;
                    failures += r.pass ? 0 : 1;
                    json row;
                    row["variant"] = vname;
                    row["n"] = n;
                    row["s"] = s;
                    row["state"] = label;
                    row["pass"] = r.pass;
                    row["max_prob_dev"] = r.max_prob_dev;
                    row["max_infidelity"] = r.max_infidelity;
                    row["out_of_range_prob"] = r.out_of_range_prob;
                    if (!r.pass) {
                        row["detail"] = r.detail;
                    }
                    results.push_back(row);
                    csv << vname << "," << n << "," << s << "," << label << "," << (r.pass ? 1 : 0) << ","
                        << r.max_prob_dev << "," << r.max_infidelity << "," << r.out_of_range_prob << "\n";
                }
            }
        }
    }
    json doc;
    doc["tol"] = cfg.tol;
    doc["pass"] = failures == 0;
    doc["total"] = total;
    doc["failures"] = failures;
    doc["results"] = results;
    write_text(cfg.out, cfg.format == "csv" ? csv.str() : doc.dump(2) + "\n", out);
    return failures == 0 ? kOk : kValidationFailure;
}

// ---------------------------------------------------------------------------
// resources

struct ResourcesConfig {
    std::vector<uint32_t> ns = {4, 8, 16, 32, 64};
    std::string s_policy = "n";
    std::string variant = "resets";
    std::string fanout = "measurement";
    std::string out;
    std::string format = "csv";
};

int cmd_resources(const ResourcesConfig &cfg, std::ostream &out) {
    auto policy = parse_s_policy(cfg.s_policy);
    if (!policy) {
        throw UsageError("--s-policy must be 1, n, n/2 or a positive integer");
    }
    std::ostringstream csv;
    csv.precision(6);
    csv << "variant,n,s,k,depth,control_qubits,helpers,two_qubit_gates,measurements,resets,depth_per_log,depth_per_nlog\n";
    json rows = json::array();
    for (auto n : cfg.ns) {
        if (n < 1 || n > 1024) {
            throw UsageError("resource sweeps need 1 <= n <= 1024");
        }
        BuildConfig b{n, cfg.variant, policy->for_n(n), cfg.fanout, 0};
        auto hc = b.build();
        auto r = measure_resources(hc);
        ScalingRow row{n, hc.params.s, hc.params.k, r};
        csv << cfg.variant << "," << n << "," << row.s << "," << row.k << "," << r.quantum_depth << ","
            << r.control_qubits << "," << r.helper_qubits << "," << r.two_qubit_gate_count << ","
            << r.measurement_count << "," << r.reset_count << "," << row.depth_per_log() << ","
            << row.depth_per_nlog() << "\n";
        rows.push_back({{"variant", cfg.variant},
                        {"n", n},
                        {"s", row.s},
                        {"k", row.k},
                        {"depth", r.quantum_depth},
                        {"control_qubits", r.control_qubits},
                        {"helpers", r.helper_qubits},
                        {"two_qubit_gates", r.two_qubit_gate_count},
                        {"measurements", r.measurement_count},
                        {"resets", r.reset_count},
                        {"depth_per_log", row.depth_per_log()},
                        {"depth_per_nlog", row.depth_per_nlog()}});
    }
    json doc;
    doc["s_policy"] = cfg.s_policy;
    doc["rows"] = rows;
    write_text(cfg.out, cfg.format == "json" ? doc.dump(2) + "\n" : csv.str(), out);
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coherent Hamming-weight measurement circuits: build, simulate, verify, count, emit."};
    app.name("hwproj");
    app.require_subcommand(1);

    RunConfig run;
    auto *run_cmd = app.add_subcommand("run", "Simulate one circuit on one input state");
    run.build.add_to(run_cmd, false);
    run_cmd->add_option("--state", run.state, "Named state, ry(<angle>)-product, or random");
    run_cmd->add_option("--state-file", run.state_file, "Amplitude file (one `re im` per line)");
    run_cmd->add_option("--mode", run.mode, "exact or shots")->check(CLI::IsMember({"exact", "shots"}));
    run_cmd->add_option("--shots", run.shots, "Shot count")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run.seed, "Seed for random states and shots");
    run_cmd->add_option("--out", run.out, "Output file (default stdout)");
    run_cmd->add_option("--format", run.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_option("--emit", run.emit_path, "Also write the circuit as .hwc text");
    run_cmd->add_flag("--post-states", run.post_states, "Include post-measurement states (exact mode)");

    VerifyConfig verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check every variant against the oracle");
    verify_cmd->add_option("--n-min", verify.n_min, "Smallest n");
    verify_cmd->add_option("--n-max", verify.n_max, "Largest n");
    verify_cmd->add_option("--seeds", verify.seeds, "Random states per configuration");
    verify_cmd->add_option("--seed", verify.seed, "Base seed");
    verify_cmd->add_option("--tol", verify.tol, "Tolerance");
    verify_cmd->add_option("--variant", verify.variants, "Restrict to these variants")
        ->check(CLI::IsMember({"alg1", "alg2", "tradeoff", "resets"}));
    verify_cmd->add_option("--corrupt-angle", verify.corrupt_angle, "Offset added to beta_1 (negative control)");
    verify_cmd->add_option("--fanout", verify.fanout, "measurement or tree")
        ->check(CLI::IsMember({"measurement", "tree"}));
    verify_cmd->add_option("--out", verify.out, "Output file (default stdout)");
    verify_cmd->add_option("--format", verify.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    ResourcesConfig resources;
    auto *res_cmd = app.add_subcommand("resources", "Depth and width table");
    res_cmd->add_option("--ns", resources.ns, "Comma-separated n values")->delimiter(',');
    res_cmd->add_option("--s-policy", resources.s_policy, "1, n, n/2 or a fixed width");
    res_cmd->add_option("--variant", resources.variant, "alg1, alg2, tradeoff or resets")
        ->check(CLI::IsMember({"alg1", "alg2", "tradeoff", "resets"}));
    res_cmd->add_option("--fanout", resources.fanout, "measurement or tree")
        ->check(CLI::IsMember({"measurement", "tree"}));
    res_cmd->add_option("--out", resources.out, "Output file (default stdout)");
    res_cmd->add_option("--format", resources.format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

    BuildConfig emit_cfg;
    std::string emit_out;
    auto *emit_cmd = app.add_subcommand("emit", "Write a circuit as .hwc text");
    emit_cfg.add_to(emit_cmd, true);
    emit_cmd->add_option("--out", emit_out, "Output file (default stdout)");

    std::vector<std::string> argv_store;
    argv_store.push_back("hwproj");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (run_cmd->parsed()) {
            if (!run.state_file.empty() && run_cmd->count("--state") > 0) {
                throw UsageError("give either --state or --state-file, not both");
            }
            return cmd_run(run, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(verify, out);
        }
        if (res_cmd->parsed()) {
            return cmd_resources(resources, out);
        }
        if (emit_cmd->parsed()) {
            write_text(emit_out, emit(emit_cfg.build().circuit), out);
            return kOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const BranchLimitError &e) {
        err << "error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kUsageError;
}

}  // namespace hwproj::cli
