#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "modadd/modadd.hpp"

namespace modadd::cli {

namespace {

struct Failure {
    int code;
    std::string msg;
};

struct Args {
    std::string variant = "qclma";
    unsigned n = 4;
    std::int64_t a = 0, b = 0;
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    std::string noise = "reference";
    std::string out;
    bool json = false;
    bool no_barriers = false;
    unsigned threads = 0;
    std::string report_a, report_b;
};

AdderVariant variant_of(const Args& g) {
    if (auto v = parse_variant(g.variant)) return *v;
    throw Failure{kUsage, "unknown variant '" + g.variant + "' (expected qclma or qrca)"};
}

BuildSpec spec_of(const Args& g) { return {g.n, variant_of(g), !g.no_barriers}; }

void check_n(unsigned n, unsigned hi) {
    if (n < 2 || n > hi)
        throw Failure{kOutOfRange, "--n " + std::to_string(n) + " outside [2, " + std::to_string(hi) + "]"};
}

void check_inputs(const Args& g) {
    const std::int64_t N = (std::int64_t{1} << g.n) - 1;
    if (g.a < 0 || g.a >= N || g.b < 0 || g.b >= N)
        throw Failure{kOutOfRange, "inputs must lie in [0, " + std::to_string(N - 1) + "]"};
    if (g.shots == 0) throw Failure{kOutOfRange, "--shots must be positive"};
}

// Path to a JSON config, or the keywords "reference" / "zero".
NoiseModel noise_of(const Args& g) {
    if (g.noise == "reference") return NoiseModel::reference();
    if (g.noise == "zero") return NoiseModel::zero();
    try {
        return load_noise_model(g.noise);
    } catch (const NoiseConfigError& e) {
        throw Failure{kNoiseConfig, e.what()};
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw Failure{kIo, "cannot write '" + path + "'"};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Failure{kIo, "cannot read '" + path + "'"};
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

int cmd_build(const Args& g, std::ostream& out) {
    check_n(g.n, 256);
    const Circuit c = build_adder(spec_of(g));
    write_file(g.out, to_qasm(c));
    out << "wrote " << g.out << " (" << c.width() << " qubits, " << c.size() << " gates)\n";
    return kOk;
}

int cmd_stats(const Args& g, std::ostream& out) {
    check_n(g.n, 256);
    const AdderVariant v = variant_of(g);
    const ResourceReport got = analyze(build_adder(spec_of(g)));
    const ConformanceReport conf = conformance(spec_of(g));
    if (g.json) {
        nlohmann::ordered_json j;
        j["built"] = nlohmann::ordered_json::parse(to_json(got));
        j["conformance"] = nlohmann::ordered_json::parse(to_json(conf));
        out << j.dump(2) << '\n';
    } else {
        out << to_string(v) << " n=" << g.n << '\n';
        out << "metric          built  expected   status\n";
        for (auto& i : conf.items) {
            std::string want = i.lo == i.hi ? std::to_string(i.lo) : "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
            char line[128];
            std::snprintf(line, sizeof line, "%-15s %6zu  %-9s  %s\n", i.metric.c_str(), i.built, want.c_str(),
                          i.ok() ? "ok" : "MISMATCH");
            out << line;
        }
        out << "total_depth     " << got.total_depth << "\nmax_idle        " << got.max_idle() << '\n';
    }
    return conf.ok() ? kOk : kCheckFailed;
}

int cmd_verify(const Args& g, std::ostream& out) {
    check_n(g.n, 12);
    const VerificationReport r = exhaustive_verify(variant_of(g), g.n);
    if (g.json) {
        out << to_json(r) << '\n';
    } else {
        out << (r.pairs_tested - r.mismatch_count) << '/' << r.pairs_tested << " pairs correct";
        if (r.ancilla_violations || r.input_preservation_violations)
            out << ", " << r.ancilla_violations << " ancilla violations, " << r.input_preservation_violations
                << " input-a violations";
        out << '\n';
    }
    return r.ok() ? kOk : kCheckFailed;
}

ShotHistogram simulate(const Args& g, AdderVariant v, const NoiseModel& m) {
    check_n(g.n, 12);
    check_inputs(g);
    return run_noisy_shots(build_adder({g.n, v, !g.no_barriers}), static_cast<std::uint64_t>(g.a), static_cast<std::uint64_t>(g.b), m,
                           g.shots, g.seed);
}

int cmd_simulate(const Args& g, std::ostream& out) {
    const AdderVariant v = variant_of(g);
    const NoiseModel m = noise_of(g);
    const ShotHistogram h = simulate(g, v, m);
    const auto correct = modulo_sum_oracle(g.a, g.b, g.n);
    nlohmann::ordered_json j;
    j["variant"] = to_string(v);
    j["n"] = g.n;
    j["a"] = g.a;
    j["b"] = g.b;
    j["shots"] = g.shots;
    j["seed"] = g.seed;
    j["noise"] = nlohmann::ordered_json::parse(to_json(m));
    j["correct"] = correct;
    j["counts"] = h.counts;
    j["qsfr"] = qsfr(h, correct);
    const std::string text = j.dump(2) + "\n";
    if (g.out.empty())
        out << text;
    else
        write_file(g.out, text);
    return kOk;
}

int cmd_sweep(const Args& g, std::ostream& out) {
    const AdderVariant v = variant_of(g);
    const NoiseModel m = noise_of(g);
    check_n(g.n, 12);
    if (g.shots == 0) throw Failure{kOutOfRange, "--shots must be positive"};
    const QsfrReport r = run_sweep(spec_of(g), m, g.shots, g.seed, g.threads);
    write_file(g.out + ".csv", to_csv(r));
    write_file(g.out + ".json", to_json(r));
    out << to_string(v) << " grand_mean " << fixed(r.grand_mean, 4) << " (" << r.records.size() << " pairs, " << g.shots
        << " shots)\n";
    return kOk;
}

int cmd_compare(const Args& g, std::ostream& out) {
    QsfrReport a, b;
    try {
        a = report_from_json(read_file(g.report_a));
        b = report_from_json(read_file(g.report_b));
    } catch (const std::invalid_argument& e) {
        throw Failure{kIo, e.what()};
    } catch (const NoiseConfigError& e) {
        throw Failure{kIo, e.what()};
    }
    double pct;
    try {
        pct = compare(a, b);
    } catch (const std::invalid_argument& e) {
        throw Failure{kIncompatible, e.what()};
    }
    out << fixed(pct, 2) << "%\n";
    return kOk;
}

int cmd_profile(const Args& g, std::ostream& out) {
    const AdderVariant v = variant_of(g);
    const NoiseModel m = noise_of(g);
    const std::string text = profile_csv(frequency_profile(simulate(g, v, m)));
    if (g.out.empty())
        out << text;
    else
        write_file(g.out, text);
    return kOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Build, analyze and noise-test modulo (2^n - 1) adder circuits", "modadd"};
    app.require_subcommand(1);
    Args g;

    auto variant_opt = [&](CLI::App* s) { s->add_option("--variant", g.variant, "qclma or qrca")->required(); };
    auto n_opt = [&](CLI::App* s) {
        s->add_option("--n", g.n, "operand width in bits")->required();
        s->add_flag("--no-barriers", g.no_barriers, "build without barriers between sub-modules");
    };
    auto noisy = [&](CLI::App* s) {
        s->add_option("--shots", g.shots, "shots per input pair")->capture_default_str();
        s->add_option("--noise", g.noise, "noise config JSON, or 'reference' / 'zero'")->capture_default_str();
        s->add_option("--seed", g.seed, "master seed")->capture_default_str();
    };

    auto* build = app.add_subcommand("build", "write the circuit as OpenQASM 2.0");
    variant_opt(build);
    n_opt(build);
    build->add_option("--out", g.out, "output path")->required();

    auto* stats = app.add_subcommand("stats", "resource report against the closed forms");
    variant_opt(stats);
    n_opt(stats);
    stats->add_flag("--json", g.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "exhaustive check against the arithmetic oracle");
    variant_opt(verify);
    n_opt(verify);
    verify->add_flag("--json", g.json, "JSON output");

    auto* sim = app.add_subcommand("simulate", "noisy shots for one input pair");
    variant_opt(sim);
    n_opt(sim);
    sim->add_option("--a", g.a)->required();
    sim->add_option("--b", g.b)->required();
    noisy(sim);
    sim->add_option("--out", g.out, "write the histogram here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "QSFR over every input pair");
    variant_opt(sweep);
    n_opt(sweep);
    noisy(sweep);
    sweep->add_option("--out", g.out, "output prefix; writes PREFIX.csv and PREFIX.json")->required();
    sweep->add_option("--threads", g.threads, "worker threads (0 = all cores)");

    auto* cmp = app.add_subcommand("compare", "percentage change of REPORT_A's grand mean over REPORT_B's");
    cmp->add_option("REPORT_A", g.report_a)->required();
    cmp->add_option("REPORT_B", g.report_b)->required();

    auto* prof = app.add_subcommand("profile", "outputs ranked by frequency for one input pair");
    variant_opt(prof);
    n_opt(prof);
    prof->add_option("--a", g.a)->required();
    prof->add_option("--b", g.b)->required();
    noisy(prof);
    prof->add_option("--out", g.out, "write the CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "modadd: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (build->parsed()) return cmd_build(g, out);
        if (stats->parsed()) return cmd_stats(g, out);
        if (verify->parsed()) return cmd_verify(g, out);
        if (sim->parsed()) return cmd_simulate(g, out);
        if (sweep->parsed()) return cmd_sweep(g, out);
        if (cmp->parsed()) return cmd_compare(g, out);
        if (prof->parsed()) return cmd_profile(g, out);
    } catch (const Failure& f) {
        err << "modadd: " << f.msg << '\n';
        return f.code;
    } catch (const std::out_of_range& e) {
        err << "modadd: " << e.what() << '\n';
        return kOutOfRange;
    }
    return kUsage;
}

}  // namespace modadd::cli
