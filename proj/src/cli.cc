// Copyright 2026 The qscd Authors.
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


#include "qscd/cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "qscd/acceptance.h"
#include "qscd/graph.h"
#include "qscd/graphauto.h"
#include "qscd/parallel.h"
#include "qscd/pkc.h"
#include "qscd/reductions.h"

namespace qscd {

namespace {

constexpr const char* kFormatsHelp = R"(File formats:
  permutation  `n: i1 i2 ... in`, the images of 1..n.
  key          mode line `FF n` or `CYC n m`, then a permutation line.
  ciphertext   mode line, then `QSTATE n m entries` followed by one line per
               basis vector: `control re im n: i1 ... in`.
  graph        line `n m`, then m lines `u v` with 1 <= u < v <= n.
Sources (advantage --a/--b): plus, minus, iota, cyc:<s>.
Distinguishers: omniscient (needs --key, or uses the planted automorphism),
  coin, basis-measure.
Exit codes: 0 ok, 1 internal error, 2 usage or input error,
  3 promise violation, 4 tolerance failure.)";

/// Raised for tolerance failures (exit 4) after the report is printed.
struct ToleranceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw std::invalid_argument("cannot write " + path);
    outf << text;
}

std::string fixed6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

SecurityParam mode_params(const std::string& mode, int n, int m) {
    if (mode == "ff") return SecurityParam::ff(n);
    if (mode == "cyc") return SecurityParam::cyc(n, m);
    throw std::invalid_argument("mode must be ff or cyc");
}

/// Key-value report with a trailing summary line.
class Report {
public:
    void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    std::string str(const std::string& summary_head) const {
        std::string out;
        std::string summary = "summary " + summary_head;
        for (const auto& [k, v] : rows_) {
            out += k + "=" + v + "\n";
            if (v.find(' ') == std::string::npos && v.find('\n') == std::string::npos) summary += " " + k + "=" + v;
        }
        return out + summary + "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Common {
    std::uint64_t seed = 0;
    int jobs = 0;
};

Distinguisher make_distinguisher(const std::string& name, const std::optional<Permutation>& key, int m) {
    if (name == "coin") return coin_distinguisher();
    if (name == "basis-measure") return basis_measure_distinguisher();
    if (name == "omniscient") {
        if (!key) throw std::invalid_argument("omniscient distinguisher needs --key");
        return omniscient_distinguisher(*key, m);
    }
    throw std::invalid_argument("unknown distinguisher `" + name + "`");
}

TupleSource make_source(const std::string& name, const KeyPair& kp, int k) {
    const Permutation pi = kp.secret;
    const int n = kp.params.n;
    const int m = kp.params.m;
    if (name == "plus" || name == "minus") {
        if (!is_fpf_involution(pi)) throw std::invalid_argument("plus/minus sources need an FF key");
        if (name == "plus") return [pi, k](Rng& rng) { return plus_tuple(pi, k, rng); };
        return [pi, k](Rng& rng) { return minus_tuple(pi, k, rng); };
    }
    if (name == "iota") return [n, k](Rng& rng) { return iota_tuple(n, k, rng); };
    if (name.rfind("cyc:", 0) == 0) {
        int s = 0;
        try {
            s = std::stoi(name.substr(4));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad source `" + name + "`");
        }
        if (kp.is_ff() && m != 2) throw std::invalid_argument("cyc source needs a CYC key");
        if (s < 0 || s >= m) throw std::invalid_argument("cyc source symbol outside Z_m");
        return [pi, m, s, k](Rng& rng) {
            SampleTuple t;
            for (int c = 0; c < k; ++c) t.samples.push_back(gen_cyc(pi, m, s, rng));
            return t;
        };
    }
    throw std::invalid_argument("unknown source `" + name + "`");
}

Graph planted_graph(bool yes) {
    Graph tree(7);
    for (const auto& [u, v] : std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}}) tree.add_edge(u, v);
    if (yes) return disjoint_union(tree, tree);
    Graph spider(14);
    for (int v = 0; v + 1 < 13; ++v) spider.add_edge(v, v + 1);
    spider.add_edge(2, 13);
    return spider;
}

std::string join_nodes(const std::vector<int>& nodes) {
    std::string out;
    for (int v : nodes) out += (out.empty() ? "" : ",") + std::to_string(v + 1);
    return out.empty() ? "-" : out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coset-state cryptography simulator: QSCD distinguishing, quantum public-key encryption, "
                 "and graph-automorphism reductions."};
    app.footer(kFormatsHelp);
    app.require_subcommand(1);
    Common common;
    app.add_option("--jobs", common.jobs, "Worker threads for trial loops (0: OpenMP default)")
        ->check(CLI::NonNegativeNumber);

    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", common.seed, "Root seed (64-bit)")->required();
    };

    // keygen
    std::string mode = "ff";
    int n = 6;
    int m = 2;
    std::string key_path;
    std::string out_path;
    std::string in_path;
    auto* keygen_cmd = app.add_subcommand("keygen", "Sample a decryption key");
    keygen_cmd->add_option("--mode", mode, "ff or cyc")->check(CLI::IsMember({"ff", "cyc"}))->capture_default_str();
    keygen_cmd->add_option("--n", n, "Degree")->capture_default_str();
    keygen_cmd->add_option("--m", m, "Cycle length (cyc)")->capture_default_str();
    keygen_cmd->add_option("--out", out_path, "Key file to write (default: stdout only)");
    add_seed(keygen_cmd);

    // encrypt
    int message = 0;
    auto* encrypt_cmd = app.add_subcommand("encrypt", "Issue a key copy from the key and encrypt a message");
    encrypt_cmd->add_option("--key", key_path, "Key file")->required();
    encrypt_cmd->add_option("--message", message, "Bit (ff) or symbol in Z_m (cyc)")->required();
    encrypt_cmd->add_option("--out", out_path, "Ciphertext file (default: stdout)");
    add_seed(encrypt_cmd);

    // decrypt
    auto* decrypt_cmd = app.add_subcommand("decrypt", "Decrypt a ciphertext file");
    decrypt_cmd->add_option("--key", key_path, "Key file")->required();
    decrypt_cmd->add_option("--in", in_path, "Ciphertext file")->required();
    add_seed(decrypt_cmd);

    // demo
    std::optional<int> demo_message;
    int copies = 3;
    auto* demo_cmd = app.add_subcommand("demo", "Full key-generation, publication, encryption and decryption transcript");
    demo_cmd->add_option("--mode", mode, "ff or cyc")->check(CLI::IsMember({"ff", "cyc"}))->capture_default_str();
    demo_cmd->add_option("--n", n, "Degree")->capture_default_str();
    demo_cmd->add_option("--m", m, "Cycle length (cyc)")->capture_default_str();
    demo_cmd->add_option("--message", demo_message, "Message (default: random)");
    demo_cmd->add_option("--copies", copies, "Key copies published (ff)")->check(CLI::PositiveNumber)->capture_default_str();
    add_seed(demo_cmd);

    // ga
    std::string graph_path;
    std::string method = "brute";
    auto* ga_cmd = app.add_subcommand("ga", "Decide whether a graph has a nontrivial automorphism");
    ga_cmd->add_option("--graph", graph_path, "Graph file")->required();
    ga_cmd->add_option("--method", method, "brute (all n! relabelings) or search")
        ->check(CLI::IsMember({"brute", "search"}))
        ->capture_default_str();

    // reduce-ga
    bool literal = false;
    auto* reduce_cmd = app.add_subcommand("reduce-ga", "Decide GA with UniqueGA_ff oracle queries, logging each query");
    reduce_cmd->add_option("--graph", graph_path, "Graph file")->required();
    reduce_cmd->add_flag("--literal", literal, "Skip the rigidity pre-checks (queries may break the promise)");

    // attack
    std::string planted = "yes";
    std::string dist_name = "omniscient";
    std::optional<int> tuples;
    std::optional<int> threshold;
    std::optional<int> key_copies;
    int k = 1;
    int p = 1;
    auto* attack_cmd = app.add_subcommand("attack", "Decide a UniqueGA_ff instance with a distinguisher");
    attack_cmd->add_option("--planted", planted, "Built-in 14-node instance: yes or no")
        ->check(CLI::IsMember({"yes", "no"}))
        ->capture_default_str();
    attack_cmd->add_option("--graph", graph_path, "Graph file instead of a planted instance (promise is verified)");
    attack_cmd->add_option("--dist", dist_name, "omniscient, coin or basis-measure")->capture_default_str();
    attack_cmd->add_option("--key", key_path, "Key file for the omniscient distinguisher");
    attack_cmd->add_option("--tuples", tuples, "Tuples per side (default 8 p^2 n)");
    attack_cmd->add_option("--threshold", threshold, "Decision threshold (default 4 p n)");
    attack_cmd->add_option("--k", k, "Samples per tuple")->check(CLI::PositiveNumber)->capture_default_str();
    attack_cmd->add_option("--l", key_copies, "Shape tuples as (challenge, l plus copies)");
    attack_cmd->add_option("--p", p, "Polynomial value for the default formulas")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_seed(attack_cmd);

    // advantage
    std::string source_a = "plus";
    std::string source_b = "minus";
    std::size_t trials = 4000;
    std::string hybrid = "none";
    bool serial = false;
    bool expect_zero = false;
    std::optional<double> expect_min;
    auto* adv_cmd = app.add_subcommand("advantage", "Estimate a distinguisher's advantage between two sources");
    adv_cmd->add_option("--dist", dist_name, "omniscient, coin or basis-measure")->capture_default_str();
    adv_cmd->add_option("--a", source_a, "First source")->capture_default_str();
    adv_cmd->add_option("--b", source_b, "Second source")->capture_default_str();
    adv_cmd->add_option("--mode", mode, "Key mode when no --key is given")
        ->check(CLI::IsMember({"ff", "cyc"}))
        ->capture_default_str();
    adv_cmd->add_option("--n", n, "Degree")->capture_default_str();
    adv_cmd->add_option("--m", m, "Cycle length (cyc)")->capture_default_str();
    adv_cmd->add_option("--k", k, "Samples per tuple")->check(CLI::PositiveNumber)->capture_default_str();
    adv_cmd->add_option("--trials", trials, "Trials per source")->check(CLI::PositiveNumber)->capture_default_str();
    adv_cmd->add_option("--key", key_path, "Key file (default: sampled from the seed)");
    adv_cmd->add_option("--hybrid", hybrid, "Wrap the distinguisher: none, complement or mixture")
        ->check(CLI::IsMember({"none", "complement", "mixture"}))
        ->capture_default_str();
    adv_cmd->add_flag("--serial", serial, "Use the serial reference loop");
    adv_cmd->add_flag("--expect-zero", expect_zero, "Exit 4 unless the advantage is within the CI of 0");
    adv_cmd->add_option("--expect-min", expect_min, "Exit 4 if the advantage is below this value");
    add_seed(adv_cmd);

    // selftest
    std::vector<int> only;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--only", only, "Criterion ids (default: all)")->check(CLI::Range(1, kCriterionCount));
    add_seed(selftest_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    kernels::set_jobs(common.jobs);

    try {
        if (*keygen_cmd) {
            Rng rng = make_stream(common.seed, 0);
            const KeyPair kp = keygen(mode_params(mode, n, m), rng);
            if (!out_path.empty()) write_file(out_path, format_key(kp));
            Report r;
            r.add("command", "keygen");
            r.add("mode", format_mode_line(kp.params));
            r.add("secret", kp.secret.cycle_string());
            r.add("seed", std::to_string(common.seed));
            out << format_key(kp) << r.str("keygen");
        } else if (*encrypt_cmd) {
            const KeyPair kp = parse_key(read_file(key_path));
            Rng rng = make_stream(common.seed, 0);
            const Ciphertext c = [&] {
                if (kp.is_ff()) {
                    KeyCopy copy = issue_key_copy(kp, std::nullopt, rng);
                    return encrypt_ff(message, copy);
                }
                KeySeries series = KeySeries::issue(kp, rng);
                return encrypt_cyc(message, series);
            }();
            const std::string text = format_ciphertext(c);
            if (out_path.empty()) {
                out << text;
            } else {
                write_file(out_path, text);
                out << "command=encrypt\nmode=" << format_mode_line(c.params) << "\nseed=" << common.seed
                    << "\nsummary encrypt ciphertext=" << out_path << "\n";
            }
        } else if (*decrypt_cmd) {
            const KeyPair kp = parse_key(read_file(key_path));
            const Ciphertext c = parse_ciphertext(read_file(in_path));
            Rng rng = make_stream(common.seed, 0);
            const int value = decrypt(kp, c, rng);
            Report r;
            r.add("command", "decrypt");
            r.add("mode", format_mode_line(c.params));
            r.add("message", value);
            r.add("seed", std::to_string(common.seed));
            out << r.str("decrypt");
        } else if (*demo_cmd) {
            const SecurityParam params = mode_params(mode, n, m);
            Rng rng = make_stream(common.seed, 0);
            const KeyPair kp = keygen(params, rng);
            const int range = kp.is_ff() ? 2 : params.m;
            const int msg = demo_message.value_or(uniform_below(rng, range));
            if (msg < 0 || msg >= range) throw std::invalid_argument("demo: message out of range");
            out << "seed=" << common.seed << "\n";
            out << "bob.keygen mode=" << format_mode_line(params) << " secret=" << kp.secret.cycle_string() << "\n";
            const Ciphertext c = [&] {
                if (kp.is_ff()) {
                    std::vector<KeyCopy> published;
                    for (int i = 0; i < copies; ++i) published.push_back(issue_key_copy(kp, std::nullopt, rng));
                    out << "bob.publish copies=" << copies
                        << " support=" << published.front().peek().state.amplitudes().size() << "\n";
                    out << "alice.receive copy=1\n";
                    out << "alice.encrypt message=" << msg << " state=" << (msg == 0 ? "rho+" : "rho-") << "\n";
                    return encrypt_ff(msg, published.front());
                }
                KeySeries series = KeySeries::issue(kp, rng);
                out << "bob.publish series=" << series.modulus() << "\n";
                out << "alice.encrypt message=" << msg << " state=rho(" << msg << ")\n";
                return encrypt_cyc(msg, series);
            }();
            out << "ciphertext.support=" << c.state.amplitudes().size() << " norm=" << fixed6(c.state.norm()) << "\n";
            const auto dist = decrypt_distribution(kp, c);
            const int value = decrypt(kp, c, rng);
            out << "bob.decrypt message=" << value << " probability=" << fixed6(dist[static_cast<std::size_t>(value)])
                << "\n";
            out << (value == msg ? "decrypted=original" : "decrypted=mismatch") << "\n";
            if (value != msg) throw ToleranceFailure("decryption mismatch");
        } else if (*ga_cmd) {
            const Graph g = parse_graph(read_file(graph_path));
            std::size_t count = 0;
            if (method == "brute") {
                if (g.node_count() > 9) throw std::invalid_argument("ga --method brute supports at most 9 nodes");
                count = automorphisms_brute_force(g).size();
            } else {
                count = automorphisms(g, kOracleNodeLimit).size();
            }
            out << "command=ga\nnodes=" << g.node_count() << "\nmethod=" << method << "\nautomorphisms=" << count
                << "\n"
                << (count > 1 ? "YES" : "NO") << "\n";
        } else if (*reduce_cmd) {
            const Graph g = parse_graph(read_file(graph_path));
            std::size_t issued = 0;
            const UniqueGaOracle oracle = [&](const Graph& q) {
                ++issued;
                try {
                    return unique_ga_ff_oracle(q);
                } catch (const PromiseViolation& e) {
                    out << "query " << issued << " nodes=" << q.node_count() << " promise=violated\n";
                    throw;
                }
            };
            const auto result = reduce_ga_to_unique(g, oracle, literal ? ReductionMode::kLiteral : ReductionMode::kSmart);
            out << "command=reduce-ga\nnodes=" << g.node_count() << "\nmode=" << (literal ? "literal" : "smart")
                << "\nqueries=" << result.queries.size() << "\n";
            for (std::size_t q = 0; q < result.queries.size(); ++q) {
                const auto& rq = result.queries[q];
                out << "query " << q + 1 << " depth=" << rq.depth << " fixed=" << join_nodes(rq.fixed)
                    << " i=" << rq.i + 1 << " j=" << rq.j + 1 << " nodes=" << rq.node_count
                    << " answer=" << (rq.answer ? "YES" : "NO") << "\n";
            }
            out << (result.has_nontrivial_automorphism ? "YES" : "NO") << "\n";
        } else if (*attack_cmd) {
            const bool from_file = !graph_path.empty();
            const PromiseInstance instance = from_file ? PromiseInstance::verified(parse_graph(read_file(graph_path)))
                                                       : PromiseInstance::verified(planted_graph(planted == "yes"));
            const int degree = instance.graph.node_count();
            std::optional<Permutation> key;
            if (!key_path.empty()) {
                key = parse_key(read_file(key_path)).secret;
            } else if (instance.automorphism) {
                key = instance.automorphism;
            }
            if (dist_name == "omniscient" && !key) throw std::invalid_argument("attack: omniscient needs --key on a NO instance");
            if (key && key->degree() != degree) throw std::invalid_argument("attack: key degree does not match the graph");
            AttackParams params = AttackParams::from_polynomial(degree, p, k);
            if (tuples) params.tuples_per_side = *tuples;
            if (threshold) params.threshold = *threshold;
            params.key_copies = key_copies;
            const auto outcome = ga_attack(instance, make_distinguisher(dist_name, key, 2), params, common.seed);
            Report r;
            r.add("command", "attack");
            r.add("instance", from_file ? graph_path : "planted-" + planted);
            r.add("nodes", degree);
            r.add("dist", dist_name);
            r.add("k", params.k);
            r.add("l", key_copies ? std::to_string(*key_copies) : std::string("none"));
            r.add("tuples", params.tuples_per_side);
            r.add("threshold", params.threshold);
            r.add("accepted_plus", static_cast<long long>(outcome.accepted_plus));
            r.add("accepted_minus", static_cast<long long>(outcome.accepted_minus));
            r.add("answer", outcome.yes ? "YES" : "NO");
            r.add("seed", std::to_string(common.seed));
            out << r.str("attack");
        } else if (*adv_cmd) {
            const KeyPair kp = [&] {
                if (!key_path.empty()) return parse_key(read_file(key_path));
                Rng rng = make_stream(common.seed, 0);
                return keygen(mode_params(mode, n, m), rng);
            }();
            Distinguisher dist = make_distinguisher(dist_name, kp.secret, kp.params.m);
            std::string label = dist_name;
            if (hybrid != "none") {
                dist = hybrid_to_iota(std::move(dist), hybrid == "complement" ? HybridVariant::kComplementConverted
                                                                                : HybridVariant::kPlainMixture);
                label = "hybrid-" + hybrid + "(" + dist_name + ")";
            }
            const auto a = make_source(source_a, kp, k);
            const auto b = make_source(source_b, kp, k);
            const std::uint64_t trial_seed = stream_seed(common.seed, 1);
            auto report = serial ? estimate_advantage_serial(dist, a, b, trials, trial_seed)
                                 : estimate_advantage(dist, a, b, trials, trial_seed);
            report.distinguisher = label;
            report.source_a = source_a;
            report.source_b = source_b;
            report.seed = common.seed;
            report.params = {{"mode", kp.is_ff() ? "ff" : "cyc"},
                             {"n", std::to_string(kp.params.n)},
                             {"m", std::to_string(kp.params.m)},
                             {"k", std::to_string(k)}};
            out << format_report(report);
            if (expect_zero && !report.within_ci_of_zero()) throw ToleranceFailure("advantage outside the CI of 0");
            if (expect_min && report.advantage < *expect_min) throw ToleranceFailure("advantage below --expect-min");
        } else if (*selftest_cmd) {
            AcceptanceOptions options;
            options.seed = common.seed;
            options.only = only;
            const auto results = run_acceptance(options);
            out << "seed=" << common.seed << "\n" << format_acceptance_report(results);
            err << format_acceptance_timing(results);
            if (!all_passed(results)) throw ToleranceFailure("acceptance criteria failed");
        }
    } catch (const ToleranceFailure& e) {
        err << "tolerance failure: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const PromiseViolation& e) {
        err << "promise violation: " << e.what() << "\n";
        return kExitPromise;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace qscd
