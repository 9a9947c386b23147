#include "modadd/qsfr.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace modadd {

double qsfr(const ShotHistogram& h, std::uint64_t correct) {
    std::uint64_t top = 0;
    for (auto c : h.counts) top = std::max(top, c);
    if (top == 0) throw std::invalid_argument("qsfr: histogram is empty");
    const std::uint64_t f = correct < h.counts.size() ? h.counts[correct] : 0;
    return static_cast<double>(f) / static_cast<double>(top);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> frequency_profile(const ShotHistogram& h) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> p;
    p.reserve(h.counts.size());
    for (std::uint64_t v = 0; v < h.counts.size(); ++v) p.emplace_back(v, h.counts[v]);
    std::stable_sort(p.begin(), p.end(), [](auto& x, auto& y) { return x.second > y.second; });
    return p;
}

std::string profile_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& profile) {
    std::ostringstream os;
    os << "rank,output,count\n";
    for (std::size_t i = 0; i < profile.size(); ++i) os << i + 1 << ',' << profile[i].first << ',' << profile[i].second << '\n';
    return os.str();
}

QsfrRecord make_record(std::uint64_t a, std::uint64_t b, std::uint64_t correct, const ShotHistogram& h) {
    QsfrRecord r;
    r.a = a;
    r.b = b;
    r.correct = correct;
    r.correct_freq = correct < h.counts.size() ? h.counts[correct] : 0;
    auto prof = frequency_profile(h);
    r.top_output = prof.front().first;
    r.top_freq = prof.front().second;
    r.qsfr = qsfr(h, correct);
    return r;
}

QsfrReport run_sweep(const BuildSpec& spec, const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                     unsigned threads) {
    const unsigned n = spec.n;
    if (n < 2) throw std::invalid_argument("run_sweep: n must be >= 2");
    if (n > 12) throw std::invalid_argument("run_sweep: n must be <= 12");
    if (shots == 0) throw std::invalid_argument("run_sweep: shots must be positive");
    noise.validate();
    const NoisyRunner runner(build_adder(spec));
    const std::uint64_t N = (std::uint64_t{1} << n) - 1;

    QsfrReport rep;
    rep.variant = spec.variant;
    rep.n = n;
    rep.stage_barriers = spec.stage_barriers;
    rep.shots = shots;
    rep.seed = seed;
    rep.noise = noise;
    rep.records.resize(N * N);

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t i; (i = next.fetch_add(1)) < N * N;) {
            const std::uint64_t a = i / N, b = i % N;
            auto h = runner.run(a, b, noise, shots, seed);
            rep.records[i] = make_record(a, b, modulo_sum_oracle(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), n), h);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
        work();
    }

    double total = 0;
    rep.per_a.assign(N, 0.0);
    for (std::uint64_t a = 0; a < N; ++a) {
        double s = 0;
        for (std::uint64_t b = 0; b < N; ++b) s += rep.records[a * N + b].qsfr;
        rep.per_a[a] = s / static_cast<double>(N);
        total += s;
    }
    rep.grand_mean = total / static_cast<double>(N * N);
    return rep;
}

double compare_means(double mean_a, double mean_b) {
    if (mean_b == 0) throw std::invalid_argument("compare: baseline mean is zero");
    return 100.0 * (mean_a - mean_b) / mean_b;
}

double compare(const QsfrReport& a, const QsfrReport& b) {
    if (a.n != b.n) throw std::invalid_argument("compare: reports use different n");
    if (a.stage_barriers != b.stage_barriers) throw std::invalid_argument("compare: reports differ in stage barriers");
    if (a.shots != b.shots) throw std::invalid_argument("compare: reports use different shot counts");
    if (!(a.noise == b.noise)) throw std::invalid_argument("compare: reports use different noise models");
    return compare_means(a.grand_mean, b.grand_mean);
}

std::string to_csv(const QsfrReport& r) {
    std::ostringstream os;
    os << "a,b,correct,correct_freq,top_output,top_freq,qsfr\n";
    char buf[32];
    for (auto& x : r.records) {
        std::snprintf(buf, sizeof buf, "%.6f", x.qsfr);
        os << x.a << ',' << x.b << ',' << x.correct << ',' << x.correct_freq << ',' << x.top_output << ',' << x.top_freq
           << ',' << buf << '\n';
    }
    return os.str();
}

std::string to_json(const QsfrReport& r) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(r.variant);
    j["n"] = r.n;
    j["stage_barriers"] = r.stage_barriers;
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["noise"] = nlohmann::ordered_json::parse(to_json(r.noise));
    j["per_a"] = r.per_a;
    j["grand_mean"] = r.grand_mean;
    return j.dump(2) + "\n";
}

QsfrReport report_from_json(const std::string& text) {
    QsfrReport r;
    try {
        auto j = nlohmann::json::parse(text);
        auto v = parse_variant(j.at("variant").get<std::string>());
        if (!v) throw std::invalid_argument("unknown variant in report");
        r.variant = *v;
        r.n = j.at("n").get<unsigned>();
        r.stage_barriers = j.at("stage_barriers").get<bool>();
        r.shots = j.at("shots").get<std::uint64_t>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.noise = parse_noise_model(j.at("noise").dump());
        r.per_a = j.at("per_a").get<std::vector<double>>();
        r.grand_mean = j.at("grand_mean").get<double>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

}  // namespace modadd
