#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "modadd/modadd.hpp"

using namespace modadd;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

template <class... T>
std::string fmt(const char* f, T... v) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, v...);
    return buf;
}

unsigned flog(unsigned n) { return std::bit_width(n) - 1; }
unsigned weight(unsigned n) { return static_cast<unsigned>(std::popcount(n)); }

bool expect(bool ok, const std::string& what) {
    if (!ok) note(what);
    return ok;
}

bool c1_correctness() {
    bool ok = true;
    for (auto v : {AdderVariant::QCLMA, AdderVariant::KIM_QRCA})
        for (unsigned n = 2; n <= 8; ++n) {
            auto r = exhaustive_verify(v, n);
            const std::uint64_t N = (1u << n) - 1;
            ok &= expect(r.pairs_tested == N * N && r.mismatch_count == 0 && r.ancilla_violations == 0 &&
                             r.input_preservation_violations == 0,
                         fmt("%s n=%u: %llu mismatches, %llu ancilla, %llu input-a", to_string(v), n,
                             (unsigned long long)r.mismatch_count, (unsigned long long)r.ancilla_violations,
                             (unsigned long long)r.input_preservation_violations));
        }
    return ok;
}

bool c2_depths_n4() {
    auto q = analyze(build_adder({4, AdderVariant::QCLMA}));
    auto k = analyze(build_adder({4, AdderVariant::KIM_QRCA}));
    bool ok = true;
    ok &= expect(q.cnot_depth == 8, fmt("QCLMA CNOT depth %zu, want 8", q.cnot_depth));
    ok &= expect(q.toffoli_depth == 13, fmt("QCLMA Toffoli depth %zu, want 13", q.toffoli_depth));
    ok &= expect(k.cnot_depth == 13, fmt("QRCA CNOT depth %zu, want 13", k.cnot_depth));
    ok &= expect(k.toffoli_depth == 17, fmt("QRCA Toffoli depth %zu, want 17", k.toffoli_depth));
    return ok;
}

bool c3_counts() {
    bool ok = true;
    for (unsigned n : {4u, 8u, 16u, 32u}) {
        const unsigned L = flog(n), L1 = flog(n - 1), w = weight(n);
        auto q = analyze(build_adder({n, AdderVariant::QCLMA}));
        auto eq = [&](const char* what, std::size_t got, std::size_t want) {
            ok &= expect(got == want, fmt("QCLMA n=%u %s %zu, want %zu", n, what, got, want));
        };
        eq("CNOT", q.cnot_count, 6 * n + 2);
        eq("NOT", q.not_count, 2 * n + 1);
        eq("Toffoli", q.toffoli_count, 8 * n - 3 * w - 2 * L - 3);
        eq("qubits", q.qubits, 3 * n + 2 + 2 * L);
        if (n == 4) {
            eq("Toffoli depth", q.toffoli_depth, 13);
        } else {
            const std::size_t lo = 2 * L + 2 * L1 + 5, hi = 3 * L + 2 * L1 + 5;
            ok &= expect(q.toffoli_depth >= lo && q.toffoli_depth <= hi,
                         fmt("QCLMA n=%u Toffoli depth %zu outside [%zu,%zu]", n, q.toffoli_depth, lo, hi));
        }
        auto k = analyze(build_adder({n, AdderVariant::KIM_QRCA}));
        ok &= expect(k.cnot_count == 4 * n, fmt("QRCA n=%u CNOT %zu, want %u", n, k.cnot_count, 4 * n));
        ok &= expect(k.not_count == 2, fmt("QRCA n=%u NOT %zu, want 2", n, k.not_count));
        ok &= expect(k.qubits == 3 * n + 1, fmt("QRCA n=%u qubits %zu, want %u", n, k.qubits, 3 * n + 1));
        ok &= expect(k.toffoli_count >= 3 * n - 4 && k.toffoli_count <= 6 * n - 4,
                     fmt("QRCA n=%u Toffoli %zu outside [%u,%u]", n, k.toffoli_count, 3 * n - 4, 6 * n - 4));
        std::printf("  n=%-2u QCLMA cnot=%zu not=%zu toffoli=%zu qubits=%zu tdepth=%zu | QRCA toffoli=%zu (realized)\n",
                    n, q.cnot_count, q.not_count, q.toffoli_count, q.qubits, q.toffoli_depth, k.toffoli_count);
    }
    return ok;
}

bool c4_scaling() {
    bool ok = true;
    for (unsigned n = 2; n <= 64; ++n) {
        auto q = analyze(build_adder({n, AdderVariant::QCLMA}));
        auto k = analyze(build_adder({n, AdderVariant::KIM_QRCA}));
        ok &= expect(q.cnot_depth == 8, fmt("QCLMA n=%u CNOT depth %zu, want 8", n, q.cnot_depth));
        ok &= expect(k.cnot_depth == 3 * n + 1, fmt("QRCA n=%u CNOT depth %zu, want %u", n, k.cnot_depth, 3 * n + 1));
        ok &= expect(k.toffoli_depth == 5 * n - 3,
                     fmt("QRCA n=%u Toffoli depth %zu, want %u", n, k.toffoli_depth, 5 * n - 3));
    }
    return ok;
}

bool c5_arithmetic() {
    ShotHistogram h;
    h.shots = 155;
    h.counts = {100, 55};
    const double r = qsfr(h, 1);
    const double pct = compare_means(0.6891, 0.4681);
    std::printf("  qsfr 55/100 = %.2f, compare 0.6891 vs 0.4681 = %.2f%%\n", r, pct);
    bool ok = expect(fmt("%.2f", r) == "0.55", fmt("qsfr %.6f", r));
    ok &= expect(fmt("%.2f", pct) == "47.21", fmt("compare %.6f", pct));
    return ok;
}

bool c6_ordering() {
    bool ok = true;
    const auto ref = NoiseModel::reference();
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto t0 = std::chrono::steady_clock::now();
        auto q = run_sweep({4, AdderVariant::QCLMA}, ref, 1024, seed);
        auto k = run_sweep({4, AdderVariant::KIM_QRCA}, ref, 1024, seed);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("  seed %llu: QCLMA %.6f  QRCA %.6f  (%.1fs)\n", (unsigned long long)seed, q.grand_mean,
                    k.grand_mean, secs);
        ok &= expect(q.grand_mean > k.grand_mean,
                     fmt("seed %llu: QCLMA %.6f not above QRCA %.6f", (unsigned long long)seed, q.grand_mean,
                         k.grand_mean));
    }
    for (auto v : {AdderVariant::QCLMA, AdderVariant::KIM_QRCA}) {
        auto z = run_sweep({4, v}, NoiseModel::zero(), 1024, 1);
        ok &= expect(z.grand_mean == 1.0, fmt("%s zero-noise grand mean %.6f", to_string(v), z.grand_mean));
    }
    return ok;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool c7_determinism() {
    auto dir = fs::temp_directory_path() / "modadd_acceptance";
    fs::create_directories(dir);
    auto sweep = [&](const std::string& prefix, const char* threads) {
        const std::string out = (dir / prefix).string();
        const char* argv[] = {"modadd", "sweep", "--variant", "qclma", "--n", "4", "--shots", "1024",
                              "--seed", "7", "--threads", threads, "--out", out.c_str()};
        std::ostringstream o, e;
        return cli::cli_main(14, argv, o, e);
    };
    bool ok = expect(sweep("run1", "0") == 0 && sweep("run2", "0") == 0 && sweep("run3", "1") == 0, "sweep failed");
    for (const char* ext : {".csv", ".json"}) {
        const auto a = slurp(dir / ("run1" + std::string(ext)));
        ok &= expect(!a.empty(), std::string("empty ") + ext);
        ok &= expect(a == slurp(dir / ("run2" + std::string(ext))), std::string("repeat differs: ") + ext);
        ok &= expect(a == slurp(dir / ("run3" + std::string(ext))), std::string("thread count changes ") + ext);
    }
    return ok;
}

bool c8_noise_sanity() {
    bool ok = true;
    NoiseModel flip;
    flip.p_meas = 1;
    for (auto v : {AdderVariant::QCLMA, AdderVariant::KIM_QRCA}) {
        auto c = build_adder({4, v});
        NoisyRunner r(c);
        for (std::uint64_t a = 0; a < 15; ++a)
            for (std::uint64_t b = 0; b < 15; ++b) {
                const auto want = read_register(run_basis(c, a, b), c.layout().output());
                auto z = r.run(a, b, NoiseModel::zero(), 64, a * 15 + b);
                ok &= expect(z.counts[want] == 64, fmt("%s zero noise (%llu,%llu)", to_string(v),
                                                       (unsigned long long)a, (unsigned long long)b));
                auto f = r.run(a, b, flip, 64, a * 15 + b);
                ok &= expect(f.counts[want ^ 15u] == 64, fmt("%s readout flip (%llu,%llu)", to_string(v),
                                                              (unsigned long long)a, (unsigned long long)b));
            }
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> all = {
        {"functional correctness n=2..8", c1_correctness},
        {"depths at n=4", c2_depths_n4},
        {"closed-form gate counts", c3_counts},
        {"depth scaling n=2..64", c4_scaling},
        {"QSFR and compare arithmetic", c5_arithmetic},
        {"noisy sweep ordering", c6_ordering},
        {"sweep determinism", c7_determinism},
        {"noise model sanity", c8_noise_sanity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        notes.clear();
        bool ok = false;
        try {
            ok = all[i].run();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
        }
        std::printf("[%s] %zu. %s\n", ok ? "PASS" : "FAIL", i + 1, all[i].name);
        for (std::size_t j = 0; j < notes.size() && j < 12; ++j) std::printf("  %s\n", notes[j].c_str());
        if (notes.size() > 12) std::printf("  ... %zu more\n", notes.size() - 12);
        std::fflush(stdout);
        failed += !ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
