#pragma once

// Command-line front end. run_cli() is the whole program minus the process
// boundary so tests can drive it in-process.
//
// Exit codes: 0 every check passed, 1 at least one check failed,
// 2 usage or parse error.

#include "nstep/nstep.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace nstep::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::string format = "table";
    std::string out;
    std::uint64_t seed = 0;
    std::string convention = "classic";
    unsigned threads = 1;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Writes `text` to --out if given (with a one-line note on `out`), else to `out`.
inline void emit(const GlobalOptions& g, const std::string& text, std::ostream& out, const std::string& note = {}) {
    if (g.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(g.out, std::ios::binary);
    if (!file) {
        throw ParseError("cannot open output file '" + g.out + "'");
    }
    file << text;
    if (!note.empty()) {
        out << note;
    }
}

inline std::string render_report(const GlobalOptions& g, const Json& report) {
    if (g.format == "json") {
        return dump_json(report);
    }
    if (g.format == "csv") {
        return records_to_csv(report.at("records"));
    }
    return report_to_table(report);
}

inline int finish_report(const GlobalOptions& g, const Json& report, std::ostream& out) {
    const Json& s = report.at("summary");
    emit(g, render_report(g, report), out,
         "total " + s.at("total").dump() + ", passed " + s.at("passed").dump() + ", failed " +
             s.at("failed").dump() + " -> " + g.out + "\n");
    return report_all_pass(report) ? kExitPass : kExitFail;
}

inline std::optional<IntMatrix> optional_matrix(const std::string& literal) {
    if (literal.empty()) {
        return std::nullopt;
    }
    return parse_matrix(literal);
}

inline std::vector<std::int64_t> parse_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) {
            end = text.size();
        }
        const std::string part = text.substr(start, end - start);
        if (part.find("..") != std::string::npos) {
            for (int v : parse_range(part).values()) {
                out.push_back(v);
            }
        } else {
            try {
                std::size_t used = 0;
                out.push_back(std::stoll(part, &used));
                if (used != part.size()) {
                    throw ParseError("bad list entry '" + part + "'");
                }
            } catch (const std::logic_error&) {
                throw ParseError("bad list entry '" + part + "'");
            }
        }
        start = end + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------

struct SeqOptions {
    int n = 2;
    std::int64_t from = 1;
    std::int64_t to = 10;
};

inline int cmd_seq(const GlobalOptions& g, const SeqOptions& o, std::ostream& out) {
    const SeqConvention conv = parse_convention(g.convention);
    const auto terms = terms_range(NStepParams(o.n), conv, o.from, o.to);
    std::string text;
    if (g.format == "json") {
        Json j;
        j["version"] = kVersion;
        j["command"] = "seq";
        j["params"] = Json{{"n", o.n}, {"convention", convention_name(conv)}, {"from", o.from}, {"to", o.to}};
        Json arr = Json::array();
        for (const auto& t : terms) {
            arr.push_back(to_decimal(t));
        }
        j["terms"] = std::move(arr);
        text = dump_json(j);
    } else if (g.format == "csv") {
        text = "k,value\n";
        for (std::size_t t = 0; t < terms.size(); ++t) {
            text += std::to_string(o.from + static_cast<std::int64_t>(t)) + "," + to_decimal(terms[t]) + "\n";
        }
    } else {
        for (std::size_t t = 0; t < terms.size(); ++t) {
            text += (t ? " " : "") + to_decimal(terms[t]);
        }
        text += "\n";
    }
    emit(g, text, out);
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string kind = "all";
    std::string n = "2..4";
    std::string r = "1..10";
    std::string s = "1..5";
    std::string p = "1..5";
    std::string q = "1..5";
    int trials = 5;
    long bound = 9;
    std::string matrix;
    std::string matrix_b;
};

inline int cmd_verify(const GlobalOptions& g, const VerifyOptions& o, std::ostream& out) {
    const SeqConvention conv = parse_convention(g.convention);
    IdentityGrid grid;
    grid.n = parse_range(o.n);
    grid.r = parse_range(o.r);
    grid.s = parse_range(o.s);
    grid.p = parse_range(o.p);
    grid.q = parse_range(o.q);
    if (o.trials < 1) {
        throw DomainError("--trials must be at least 1");
    }

    const std::vector<std::string> known{"cassini", "docagne", "vajda", "catalan", "gen-docagne", "ratio", "all"};
    if (std::find(known.begin(), known.end(), o.kind) == known.end()) {
        throw ParseError("unknown identity kind '" + o.kind + "'");
    }
    std::vector<std::string> kinds;
    if (o.kind == "all") {
        kinds = {"cassini", "docagne", "vajda", "catalan", "gen-docagne"};
    } else {
        kinds = {o.kind};
    }

    Json records = Json::array();
    std::vector<std::pair<std::string, double>> timings;
    const auto matrix = optional_matrix(o.matrix);
    for (const auto& kind : kinds) {
        Stopwatch watch;
        std::vector<VerificationRecord> recs;
        if (kind == "cassini") {
            recs = sweep_identity(IdentityKind::Cassini, grid, conv, g.threads);
        } else if (kind == "docagne") {
            recs = sweep_identity(IdentityKind::DOcagne, grid, conv, g.threads);
        } else if (kind == "vajda") {
            recs = sweep_identity(IdentityKind::Vajda, grid, conv, g.threads);
        } else if (kind == "catalan") {
            recs = sweep_identity(IdentityKind::Catalan, grid, conv, g.threads);
        } else if (kind == "gen-docagne") {
            recs = sweep_generalized_docagne(grid.n, grid.r, o.trials, o.bound, g.seed, matrix, g.threads);
        } else if (kind == "ratio") {
            if (matrix && !o.matrix_b.empty()) {
                const IntMatrix b = parse_matrix(o.matrix_b);
                for (int r : grid.r.values()) {
                    recs.push_back(ratio_invariance(*matrix, b, r));
                }
            } else {
                recs = sweep_ratio_invariance(grid.n, grid.r, o.trials, std::max(o.bound, 1L), g.seed, g.threads);
            }
        }
        for (const auto& rec : recs) {
            records.push_back(to_json(rec));
        }
        timings.emplace_back(kind, watch.elapsed_ms());
    }

    Json params{{"kind", o.kind},           {"n", grid.n.str()},       {"r", grid.r.str()},
                {"s", grid.s.str()},        {"p", grid.p.str()},       {"q", grid.q.str()},
                {"convention", convention_name(conv)}, {"trials", o.trials}, {"bound", o.bound},
                {"seed", g.seed}};
    if (matrix) {
        params["matrix"] = format_matrix(*matrix);
    }
    if (!o.matrix_b.empty()) {
        params["matrix_b"] = o.matrix_b;
    }
    return finish_report(g, make_report("verify", std::move(params), std::move(records), timings), out);
}

// ---------------------------------------------------------------------------

struct Prop1Options {
    std::string n = "2..3";
    std::string r = "1..4";
    int trials = 20;
    long bound = 9;
    std::string matrix;
};

inline int cmd_prop1(const GlobalOptions& g, const Prop1Options& o, std::ostream& out) {
    const IntRange n = parse_range(o.n);
    const IntRange r = parse_range(o.r);
    const auto matrix = optional_matrix(o.matrix);
    Stopwatch watch;
    const auto entries = sweep_prop1(n, r, o.trials, o.bound, g.seed, matrix, g.threads);
    const double elapsed = watch.elapsed_ms();
    Json params{{"n", matrix ? std::to_string(matrix->rows()) : n.str()},
                {"r", r.str()},
                {"trials", matrix ? 1 : o.trials},
                {"bound", o.bound},
                {"seed", g.seed}};
    if (matrix) {
        params["matrix"] = format_matrix(*matrix);
    }
    return finish_report(g, make_report("prop1", std::move(params), records_to_json(entries), {{"sweep", elapsed}}),
                         out);
}

// ---------------------------------------------------------------------------

struct BenchOptions {
    std::string task;
    std::string n = "2";
    std::string k = "1000,10000,100000";
    std::string order = "1..6";
    int trials = 50;
    long bound = 99;
};

inline int cmd_bench(const GlobalOptions& g, const BenchOptions& o, std::ostream& out) {
    Json records = Json::array();
    std::vector<std::pair<std::string, double>> timings;
    Json params{{"task", o.task}};
    if (o.task == "term-fast-vs-iter") {
        const SeqConvention conv = parse_convention(g.convention);
        const IntRange n_range = parse_range(o.n);
        const auto ks = parse_list(o.k);
        params["n"] = n_range.str();
        params["k"] = o.k;
        params["convention"] = convention_name(conv);
        for (int n : n_range.values()) {
            for (std::int64_t k : ks) {
                Stopwatch fast_watch;
                const BigInt fast = term_fast(NStepParams(n), conv, k);
                const double fast_ms = fast_watch.elapsed_ms();
                Stopwatch iter_watch;
                const BigInt iter = term(NStepParams(n), conv, k);
                const double iter_ms = iter_watch.elapsed_ms();
                records.push_back(Json{{"case", Json{{"task", o.task}, {"n", n}, {"k", k}}},
                                       {"lhs", to_decimal(fast)},
                                       {"rhs", to_decimal(iter)},
                                       {"pass", fast == iter}});
                const std::string tag = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
                timings.emplace_back("fast " + tag, fast_ms);
                timings.emplace_back("iter " + tag, iter_ms);
            }
        }
    } else if (o.task == "bareiss-vs-laplace") {
        const IntRange orders = parse_range(o.order);
        if (orders.lo < 1 || orders.hi > static_cast<int>(kLaplaceMaxOrder)) {
            throw RangeError("--order must lie within 1.." + std::to_string(kLaplaceMaxOrder));
        }
        if (o.trials < 1) {
            throw DomainError("--trials must be at least 1");
        }
        params["order"] = orders.str();
        params["trials"] = o.trials;
        params["bound"] = o.bound;
        params["seed"] = g.seed;
        for (int order : orders.values()) {
            auto engine = cell_engine(g.seed, {0x62656EU, static_cast<std::uint32_t>(order)});
            double bareiss_ms = 0;
            double laplace_ms = 0;
            for (int t = 0; t < o.trials; ++t) {
                const auto size = static_cast<std::size_t>(order);
                const IntMatrix m = random_matrix(engine, size, size, o.bound);
                Stopwatch bw;
                const BigInt fast = det_bareiss(m);
                bareiss_ms += bw.elapsed_ms();
                Stopwatch lw;
                const BigInt slow = det_laplace(m);
                laplace_ms += lw.elapsed_ms();
                records.push_back(Json{{"case", Json{{"task", o.task}, {"order", order}, {"trial", t}}},
                                       {"lhs", to_decimal(fast)},
                                       {"rhs", to_decimal(slow)},
                                       {"pass", fast == slow}});
            }
            timings.emplace_back("bareiss order=" + std::to_string(order), bareiss_ms);
            timings.emplace_back("laplace order=" + std::to_string(order), laplace_ms);
        }
    } else {
        throw ParseError("unknown bench task '" + o.task + "' (term-fast-vs-iter | bareiss-vs-laplace)");
    }
    return finish_report(g, make_report("bench", std::move(params), std::move(records), timings), out);
}

// ---------------------------------------------------------------------------

struct ProbeOptions {
    std::string n = "2..5";
    std::string r = "1..10";
    std::string s = "1..6";
    std::string p = "1..6";
    std::string q = "1..6";
};

/// Pass grid of each identity family under both conventions. Always exits 0:
/// the probe reports facts, it does not assert them.
inline int cmd_probe(const GlobalOptions& g, const ProbeOptions& o, std::ostream& out) {
    IdentityGrid grid;
    grid.n = parse_range(o.n);
    grid.r = parse_range(o.r);
    grid.s = parse_range(o.s);
    grid.p = parse_range(o.p);
    grid.q = parse_range(o.q);
    Stopwatch watch;
    const auto cells = convention_probe(grid, g.threads);
    const double elapsed = watch.elapsed_ms();

    std::string text;
    if (g.format == "json") {
        Json j;
        j["version"] = kVersion;
        j["command"] = "probe";
        j["params"] = Json{{"n", grid.n.str()}, {"r", grid.r.str()}, {"s", grid.s.str()},
                           {"p", grid.p.str()}, {"q", grid.q.str()}};
        j["grid"] = to_json(cells);
        j["timings_ms"] = Json{{"probe", elapsed}};
        text = dump_json(j);
    } else {
        Json rows = Json::array();
        for (const auto& row : to_json(cells)) {
            rows.push_back(row);
        }
        text = g.format == "csv" ? records_to_csv(rows) : records_to_table(rows);
    }
    emit(g, text, out, "probe grid -> " + g.out + "\n");
    return kExitPass;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinant identities for n-step Fibonacci numbers", "nstep"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--out", g.out, "Write the report to this file");
    app.add_option("--seed", g.seed, "Seed for random matrices");
    app.add_option("--convention", g.convention, "Sequence convention: classic | paper | custom:a,b,...");
    app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::Range(1U, 256U));

    detail::SeqOptions seq;
    auto* seq_cmd = app.add_subcommand("seq", "Print n-step Fibonacci terms")->fallthrough();
    seq_cmd->add_option("--n", seq.n, "Step count (>= 2)")->required();
    seq_cmd->add_option("--from", seq.from, "First index (may be negative)");
    seq_cmd->add_option("--to", seq.to, "Last index");

    detail::VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep an identity and report exact checks")->fallthrough();
    verify_cmd->add_option("kind", verify.kind, "cassini | docagne | vajda | catalan | gen-docagne | ratio | all");
    verify_cmd->add_option("--n", verify.n, "Order range a..b");
    verify_cmd->add_option("--r", verify.r, "r range");
    verify_cmd->add_option("--s", verify.s, "s range (d'Ocagne)");
    verify_cmd->add_option("--p", verify.p, "p range (Vajda, Catalan)");
    verify_cmd->add_option("--q", verify.q, "q range (Vajda)");
    verify_cmd->add_option("--trials", verify.trials, "Random matrices per cell (gen-docagne, ratio)");
    verify_cmd->add_option("--bound", verify.bound, "Entry bound for random matrices");
    verify_cmd->add_option("--matrix", verify.matrix, "Fixed matrix, e.g. \"1 2; 0 1\"");
    verify_cmd->add_option("--matrix-b", verify.matrix_b, "Second fixed matrix (ratio)");

    detail::Prop1Options prop1;
    auto* prop1_cmd = app.add_subcommand("prop1", "Check the signed-minor formula on every deletion")->fallthrough();
    prop1_cmd->add_option("--n", prop1.n, "Order range");
    prop1_cmd->add_option("--r", prop1.r, "Extension length range");
    prop1_cmd->add_option("--trials", prop1.trials, "Random matrices per (n, r)");
    prop1_cmd->add_option("--bound", prop1.bound, "Entries drawn from [-bound, bound]");
    prop1_cmd->add_option("--matrix", prop1.matrix, "Use this matrix instead of random ones");

    detail::BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time two engines and check they agree")->fallthrough();
    bench_cmd->add_option("task", bench.task, "term-fast-vs-iter | bareiss-vs-laplace")->required();
    bench_cmd->add_option("--n", bench.n, "Step count range (term-fast-vs-iter)");
    bench_cmd->add_option("--k", bench.k, "Indices, comma list or ranges (term-fast-vs-iter)");
    bench_cmd->add_option("--order", bench.order, "Matrix order range (bareiss-vs-laplace)");
    bench_cmd->add_option("--trials", bench.trials, "Matrices per order (bareiss-vs-laplace)");
    bench_cmd->add_option("--bound", bench.bound, "Entry bound (bareiss-vs-laplace)");

    detail::ProbeOptions probe;
    auto* probe_cmd =
        app.add_subcommand("probe", "Pass grid of every identity under both conventions")->fallthrough();
    probe_cmd->add_option("--n", probe.n, "Order range");
    probe_cmd->add_option("--r", probe.r, "r range");
    probe_cmd->add_option("--s", probe.s, "s range");
    probe_cmd->add_option("--p", probe.p, "p range");
    probe_cmd->add_option("--q", probe.q, "q range");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*seq_cmd) {
            return detail::cmd_seq(g, seq, out);
        }
        if (*verify_cmd) {
            return detail::cmd_verify(g, verify, out);
        }
        if (*prop1_cmd) {
            return detail::cmd_prop1(g, prop1, out);
        }
        if (*bench_cmd) {
            return detail::cmd_bench(g, bench, out);
        }
        return detail::cmd_probe(g, probe, out);
    } catch (const nstep::Error& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
}

}  // namespace nstep::cli
