#include "modadd/builders.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace modadd {

const char* to_string(AdderVariant v) { return v == AdderVariant::QCLMA ? "QCLMA" : "KIM_QRCA"; }

std::optional<AdderVariant> parse_variant(const std::string& s) {
    std::string t;
    for (char ch : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (t == "qclma") return AdderVariant::QCLMA;
    if (t == "qrca" || t == "kim_qrca") return AdderVariant::KIM_QRCA;
    return std::nullopt;
}

std::uint64_t modulo_sum_oracle(std::int64_t a, std::int64_t b, unsigned n) {
    if (n < 1 || n > 62) throw std::out_of_range("bit width must be in [1, 62]");
    const std::int64_t N = (std::int64_t{1} << n) - 1;
    if (a < 0 || b < 0 || a >= N || b >= N) throw std::out_of_range("operand outside [0, 2^n - 2]");
    return static_cast<std::uint64_t>((a + b) % N);
}

namespace {

using QV = std::vector<Qubit>;

unsigned flog(unsigned x) { return static_cast<unsigned>(std::bit_width(x)) - 1; }

// Propagate-tree ancillae needed by the prefix network over m positions.
unsigned pool_size(unsigned m) {
    if (m < 2) return 0;
    int s = static_cast<int>(m) - std::popcount(m) - static_cast<int>(flog(m));
    return s > 0 ? static_cast<unsigned>(s) : 0;
}

void check_n(unsigned n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2 (n = 1 gives modulus 1)");
    if (n > 256) throw std::invalid_argument("n must be <= 256");
}

QV range(Qubit& next, unsigned count) {
    QV v(count);
    for (auto& q : v) q = next++;
    return v;
}

// Prefix carry network over positions 0..m-1. p[i] holds leaf propagates, slot[k]
// (k = 1..m, slot[0] unused) holds the generate/carry into position k.
class PrefixNet {
public:
    PrefixNet(Circuit& c, QV p, QV slot, const QV& pool)
        : c_(c), m_(static_cast<unsigned>(p.size())), slot_(std::move(slot)), L_(m_ ? flog(m_) : 0) {
        P_.resize(L_ + 1);
        P_[0] = std::move(p);
        std::size_t used = 0;
        for (unsigned t = 1; t < L_; ++t) {
            P_[t].assign(m_ >> t, 0);
            for (unsigned j = 1; j < (m_ >> t); ++j) P_[t][j] = pool.at(used++);
        }
    }

    void p_rounds() {
        for (unsigned t = 1; t < L_; ++t)
            for (unsigned j = 1; j < (m_ >> t); ++j) c_.ccx(P_[t - 1][2 * j], P_[t - 1][2 * j + 1], P_[t][j]);
    }

    void p_unrounds() {
        for (unsigned t = L_; t-- > 1;)
            for (unsigned j = m_ >> t; j-- > 1;) c_.ccx(P_[t - 1][2 * j], P_[t - 1][2 * j + 1], P_[t][j]);
    }

    void g_rounds() {
        for (unsigned t = 1; t <= L_; ++t)
            for (unsigned j = 0; j < (m_ >> t); ++j)
                c_.ccx(P_[t - 1][2 * j + 1], slot_[(j << t) + (1u << (t - 1))], slot_[(j << t) + (1u << t)]);
    }

    struct COp {
        unsigned t, j, dst, src;
    };

    std::vector<COp> c_ops() const {
        std::vector<COp> ops;
        unsigned top = m_ >= 2 ? flog(2 * m_ / 3) : 0;
        for (unsigned t = top; t >= 1; --t)
            for (unsigned j = 1; j <= (m_ - (1u << (t - 1))) / (1u << t); ++j)
                ops.push_back({t, j, (j << t) + (1u << (t - 1)), j << t});
        return ops;
    }

    void c_rounds() {
        for (auto& op : c_ops()) apply(op);
    }

    // Only the carry-round gates on which slot `target` depends.
    void c_rounds_for(unsigned target) {
        auto ops = c_ops();
        std::vector<bool> need(m_ + 1, false);
        need[target] = true;
        std::vector<COp> sel;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it)
            if (need[it->dst]) {
                sel.push_back(*it);
                need[it->src] = true;
            }
        for (auto it = sel.rbegin(); it != sel.rend(); ++it) apply(*it);
    }

private:
    void apply(const COp& op) { c_.ccx(P_[op.t - 1][2 * op.j], slot_[op.src], slot_[op.dst]); }

    Circuit& c_;
    unsigned m_;
    QV slot_;
    unsigned L_;
    std::vector<QV> P_;
};

// Out-of-place carry stage: cc[n] ^= carry(a + b + cc[0]); cc[1..n-1] left holding block generates.
void cla_stage1(Circuit& c, const QV& a, const QV& b, const QV& cc, const QV& pool) {
    const unsigned n = static_cast<unsigned>(a.size());
    for (unsigned i = 0; i < n; ++i) c.ccx(a[i], b[i], cc[i + 1]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    c.ccx(b[0], cc[0], cc[1]);
    PrefixNet net(c, b, cc, pool);
    net.p_rounds();
    net.g_rounds();
    net.c_rounds_for(n);
    net.p_unrounds();
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
}

// In-place truncated adder: b <- a + b + cin mod 2^n. k[1..n-1] are carry scratch (k[0] unused).
void cla_stage2(Circuit& c, const QV& a, const QV& b, Qubit cin, const QV& k, const QV& pool) {
    const unsigned n = static_cast<unsigned>(a.size());
    const QV low(b.begin(), b.end() - 1);
    auto network = [&](Circuit& dst) {
        PrefixNet net(dst, low, k, pool);
        net.p_rounds();
        net.g_rounds();
        net.c_rounds();
        net.p_unrounds();
    };

    for (unsigned i = 0; i + 1 < n; ++i) c.ccx(a[i], b[i], k[i + 1]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    c.ccx(b[0], cin, k[1]);
    network(c);
    for (unsigned i = 1; i < n; ++i) c.cx(k[i], b[i]);
    c.cx(cin, b[0]);

    // Clear the carries: the carries of (a, ~s, cin) equal those of (a, b, cin).
    for (unsigned i = 0; i < n; ++i) c.x(b[i]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    Circuit seg(c.width(), c.layout());
    seg.ccx(b[0], cin, k[1]);
    network(seg);
    c.extend(invert(seg));
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    for (unsigned i = 0; i + 1 < n; ++i) c.ccx(a[i], b[i], k[i + 1]);
    for (unsigned i = 0; i < n; ++i) c.x(b[i]);
}

// Ripple carry stage: z ^= carry(a + b + cr[0]); leaves b = a xor b, cr[i+1] = a_i b_i for i < n-1.
void qrca_stage1(Circuit& c, const QV& a, const QV& b, const QV& cr, Qubit z) {
    const unsigned n = static_cast<unsigned>(a.size());
    QV k(cr.begin() + 1, cr.end());
    k.push_back(z);
    for (unsigned i = 0; i < n; ++i) c.ccx(a[i], b[i], k[i]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    for (unsigned i = 0; i < n; ++i) c.ccx(b[i], cr[i], k[i]);
    for (unsigned i = n - 1; i-- > 0;) c.ccx(b[i], cr[i], k[i]);
}

// Expects b = a xor b and cr[i+1] = a_i b_i (i < n-1); writes the sum of a + b + cr[0]
// into b and clears cr[1..n-1].
void qrca_stage2(Circuit& c, const QV& a, const QV& b, const QV& cr) {
    const unsigned n = static_cast<unsigned>(a.size());
    for (unsigned i = 0; i + 1 < n; ++i) c.ccx(b[i], cr[i], cr[i + 1]);
    c.cx(cr[n - 1], b[n - 1]);
    for (unsigned j = n - 1; j-- > 0;) {
        c.ccx(b[j], cr[j], cr[j + 1]);
        c.cx(a[j], b[j]);
        c.ccx(a[j], b[j], cr[j + 1]);
        c.cx(a[j], b[j]);
        c.cx(cr[j], b[j]);
    }
}

struct Regs {
    RegisterLayout layout;
    Qubit next = 0;
    QV add(const std::string& name, Role role, unsigned count, bool retained = false) {
        QV q = range(next, count);
        if (count) layout.registers.push_back({name, role, q, retained});
        return q;
    }
};

// Slot vector with an unused placeholder at index 0.
QV slots(const QV& q) {
    QV s{0};
    s.insert(s.end(), q.begin(), q.end());
    return s;
}

}  // namespace

Circuit build_qrca_carry_generator(unsigned n) {
    check_n(n);
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cr = r.add("c", Role::carry, n);
    auto z = r.add("carry_out", Role::carry, 1, true);
    Circuit c(r.next, r.layout);
    qrca_stage1(c, a, b, cr, z[0]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    for (unsigned i = 0; i + 1 < n; ++i) c.ccx(a[i], b[i], cr[i + 1]);
    return c;
}

Circuit build_qrca_truncated_adder(unsigned n) {
    check_n(n);
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cr = r.add("c", Role::carry, n);
    Circuit c(r.next, r.layout);
    for (unsigned i = 0; i + 1 < n; ++i) c.ccx(a[i], b[i], cr[i + 1]);
    for (unsigned i = 0; i < n; ++i) c.cx(a[i], b[i]);
    qrca_stage2(c, a, b, cr);
    return c;
}

Circuit build_cla_carry_generator(unsigned n) {
    check_n(n);
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cc = r.add("c", Role::carry, n + 1, true);
    auto pool = r.add("p", Role::propagate_ancilla, pool_size(n));
    r.layout.initial_ones = {cc[0]};
    Circuit c(r.next, r.layout);
    cla_stage1(c, a, b, cc, pool);
    return c;
}

Circuit build_cla_inplace_truncated_adder(unsigned n) {
    check_n(n);
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cin = r.add("cin", Role::carry, 1);
    auto k = r.add("k", Role::carry, n - 1);
    auto pool = r.add("p", Role::propagate_ancilla, pool_size(n - 1));
    Circuit c(r.next, r.layout);
    cla_stage2(c, a, b, cin[0], slots(k), pool);
    return c;
}

namespace {

// Appends to a fresh circuit over the same layout.
struct StageBuilder {
    const RegisterLayout& layout;
    std::size_t width;
    std::vector<AdderStage> stages;
    Circuit& begin(const char* name) {
        stages.push_back({name, Circuit(width, layout)});
        return stages.back().circuit;
    }
};

std::vector<AdderStage> qclma_stages(unsigned n) {
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cc = r.add("c", Role::carry, n + 1, true);
    auto k = r.add("k", Role::carry, n - 1);
    // The stage-2 tree is never larger than the stage-1 tree, so one pool serves both.
    auto pool = r.add("p", Role::propagate_ancilla, std::max(pool_size(n), pool_size(n - 1)));
    r.layout.initial_ones = {cc[0]};
    StageBuilder sb{r.layout, r.next, {}};

    cla_stage1(sb.begin("carry_generator"), a, b, cc, pool);
    // cc[0] becomes the end-around carry: carry(a + b + 1) = [a + b >= 2^n - 1].
    Circuit& sz = sb.begin("set_zero");
    sz.x(cc[0]);
    sz.cx(cc[n], cc[0]);
    cla_stage2(sb.begin("truncated_adder"), a, b, cc[0], slots(k), pool);
    sb.begin("set_zero").cx(cc[n], cc[0]);
    return std::move(sb.stages);
}

std::vector<AdderStage> qrca_stages(unsigned n) {
    Regs r;
    auto a = r.add("a", Role::input_a, n);
    auto b = r.add("b", Role::input_b, n);
    auto cr = r.add("c", Role::carry, n);
    auto z = r.add("carry_out", Role::carry, 1, true);
    StageBuilder sb{r.layout, r.next, {}};

    sb.begin("set_zero").x(cr[0]);
    qrca_stage1(sb.begin("carry_generator"), a, b, cr, z[0]);
    Circuit& sz = sb.begin("set_zero");
    sz.x(cr[0]);
    sz.cx(z[0], cr[0]);
    qrca_stage2(sb.begin("truncated_adder"), a, b, cr);
    sb.begin("set_zero").cx(z[0], cr[0]);
    return std::move(sb.stages);
}

}  // namespace

std::vector<AdderStage> adder_stages(const BuildSpec& spec) {
    check_n(spec.n);
    return spec.variant == AdderVariant::QCLMA ? qclma_stages(spec.n) : qrca_stages(spec.n);
}

Circuit build_adder(const BuildSpec& spec) {
    auto stages = adder_stages(spec);
    Circuit c = std::move(stages.front().circuit);
    for (std::size_t i = 1; i < stages.size(); ++i) {
        if (spec.stage_barriers) c.barrier();
        c.extend(stages[i].circuit);
    }
    return c;
}

}  // namespace modadd
