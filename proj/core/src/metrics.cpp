#include "modadd/metrics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace modadd {

std::size_t ResourceReport::max_idle() const { return idle.empty() ? 0 : *std::max_element(idle.begin(), idle.end()); }

std::size_t ResourceReport::total_idle() const { return std::accumulate(idle.begin(), idle.end(), std::size_t{0}); }

unsigned hamming_weight(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("hamming_weight: n must be >= 1");
    return static_cast<unsigned>(std::popcount(n));
}

unsigned floor_log2(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("floor_log2: n must be >= 1");
    return static_cast<unsigned>(std::bit_width(n)) - 1;
}

std::size_t type_depth(const Circuit& c, GateKind kind) {
    std::vector<std::size_t> last(c.width(), 0);
    std::size_t best = 0, bi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (bi < c.barriers().size() && c.barriers()[bi] == i) {
            std::fill(last.begin(), last.end(), best);
            ++bi;
        }
        auto& g = c.gates()[i];
        std::size_t v = 0;
        for (Qubit q : g) v = std::max(v, last[q]);
        v += g.kind == kind;
        for (Qubit q : g) last[q] = v;
        best = std::max(best, v);
    }
    return best;
}

namespace {

struct Window {
    std::vector<std::vector<bool>> touched;  // [layer][qubit]
    std::vector<long> first, last;
};

Window windows(const Circuit& c, const LayeredSchedule& s) {
    Window w;
    const std::size_t W = c.width();
    w.touched.assign(s.depth(), std::vector<bool>(W, false));
    w.first.assign(W, -1);
    w.last.assign(W, -1);
    for (std::size_t l = 0; l < s.depth(); ++l)
        for (std::size_t gi : s.layers[l])
            for (Qubit q : c.gates()[gi]) {
                w.touched[l][q] = true;
                if (w.first[q] < 0) w.first[q] = static_cast<long>(l);
                w.last[q] = static_cast<long>(l);
            }
    for (Qubit q = 0; q < W; ++q)
        if (w.first[q] >= 0 && c.layout().starts_early(q)) w.first[q] = 0;
    return w;
}

}  // namespace

std::vector<std::vector<Qubit>> idle_per_layer(const Circuit& c, const LayeredSchedule& s) {
    Window w = windows(c, s);
    std::vector<std::vector<Qubit>> idle(s.depth());
    for (std::size_t l = 0; l < s.depth(); ++l)
        for (Qubit q = 0; q < c.width(); ++q)
            if (w.first[q] >= 0 && static_cast<long>(l) >= w.first[q] && static_cast<long>(l) <= w.last[q] &&
                !w.touched[l][q])
                idle[l].push_back(q);
    return idle;
}

ResourceReport analyze(const Circuit& c) {
    ResourceReport r;
    for (auto& g : c.gates()) {
        switch (g.kind) {
            case GateKind::NOT: ++r.not_count; break;
            case GateKind::CNOT: ++r.cnot_count; break;
            case GateKind::TOFFOLI: ++r.toffoli_count; break;
        }
    }
    r.toffoli_count_hi = r.toffoli_count;
    r.cnot_depth = type_depth(c, GateKind::CNOT);
    r.toffoli_depth = type_depth(c, GateKind::TOFFOLI);
    auto s = schedule_asap(c);
    r.total_depth = s.depth();
    r.qubits = c.width();
    r.idle.assign(c.width(), 0);
    for (auto& layer : idle_per_layer(c, s))
        for (Qubit q : layer) ++r.idle[q];
    return r;
}

ResourceReport predicted_resources(AdderVariant variant, unsigned n) {
    if (n < 2) throw std::invalid_argument("predicted_resources: n must be >= 2");
    const std::size_t L = floor_log2(n), L1 = floor_log2(n - 1), w = hamming_weight(n);
    ResourceReport r;
    if (variant == AdderVariant::QCLMA) {
        r.cnot_depth = 8;
        r.toffoli_depth = 3 * L + 2 * L1 + 5;
        r.cnot_count = 6 * n + 2;
        r.toffoli_count = r.toffoli_count_hi = 8 * n - 3 * w - 2 * L - 3;
        r.not_count = 2 * n + 1;
        r.qubits = 3 * n + 2 + 2 * L;
    } else {
        r.cnot_depth = 3 * n + 1;
        r.toffoli_depth = 5 * n - 3;
        r.cnot_count = 4 * n;
        r.not_count = 2;
        r.qubits = 3 * n + 1;
        r.toffoli_count = 3 * n - 4;
        r.toffoli_count_hi = 6 * n - 4;
    }
    return r;
}

std::string to_kv(const ResourceReport& r) {
    std::ostringstream os;
    os << "not_count " << r.not_count << '\n'
       << "cnot_count " << r.cnot_count << '\n'
       << "toffoli_count " << r.toffoli_count << '\n';
    if (r.toffoli_count_hi != r.toffoli_count) os << "toffoli_count_hi " << r.toffoli_count_hi << '\n';
    os << "cnot_depth " << r.cnot_depth << '\n'
       << "toffoli_depth " << r.toffoli_depth << '\n'
       << "total_depth " << r.total_depth << '\n'
       << "qubits " << r.qubits << '\n';
    if (!r.idle.empty()) {
        os << "max_idle " << r.max_idle() << '\n' << "total_idle " << r.total_idle() << '\n' << "idle";
        for (auto v : r.idle) os << ' ' << v;
        os << '\n';
    }
    return os.str();
}

std::string to_json(const ResourceReport& r) {
    nlohmann::ordered_json j;
    j["not_count"] = r.not_count;
    j["cnot_count"] = r.cnot_count;
    j["toffoli_count"] = r.toffoli_count;
    if (r.toffoli_count_hi != r.toffoli_count) j["toffoli_count_hi"] = r.toffoli_count_hi;
    j["cnot_depth"] = r.cnot_depth;
    j["toffoli_depth"] = r.toffoli_depth;
    j["total_depth"] = r.total_depth;
    j["qubits"] = r.qubits;
    if (!r.idle.empty()) {
        j["max_idle"] = r.max_idle();
        j["total_idle"] = r.total_idle();
        j["idle"] = r.idle;
    }
    return j.dump(2);
}

bool ConformanceReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const ConformanceItem& i) { return i.ok(); });
}

ConformanceReport conformance(const BuildSpec& spec) {
    const AdderVariant variant = spec.variant;
    const unsigned n = spec.n;
    const ResourceReport got = analyze(build_adder(spec));
    const ResourceReport want = predicted_resources(variant, n);
    ConformanceReport rep;
    rep.variant = variant;
    rep.n = n;
    auto exact = [&](const char* name, std::size_t built, std::size_t v) { rep.items.push_back({name, built, v, v}); };
    exact("cnot_count", got.cnot_count, want.cnot_count);
    exact("not_count", got.not_count, want.not_count);
    rep.items.push_back({"toffoli_count", got.toffoli_count, want.toffoli_count, want.toffoli_count_hi});
    exact("qubits", got.qubits, want.qubits);
    exact("cnot_depth", got.cnot_depth, want.cnot_depth);
    if (variant == AdderVariant::QCLMA && n != 4) {
        const std::size_t lo = 2 * floor_log2(n) + 2 * floor_log2(n - 1) + 5;
        rep.items.push_back({"toffoli_depth", got.toffoli_depth, lo, want.toffoli_depth});
    } else {
        exact("toffoli_depth", got.toffoli_depth, want.toffoli_depth);
    }
    return rep;
}

std::string to_json(const ConformanceReport& r) {
    nlohmann::ordered_json j;
    j["variant"] = to_string(r.variant);
    j["n"] = r.n;
    j["ok"] = r.ok();
    auto& items = j["items"] = nlohmann::ordered_json::array();
    for (auto& i : r.items)
        items.push_back({{"metric", i.metric}, {"built", i.built}, {"lo", i.lo}, {"hi", i.hi}, {"ok", i.ok()}});
    return j.dump(2);
}

}  // namespace modadd
