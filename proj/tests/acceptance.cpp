// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "brute.hpp"

#include "monocirc/circuit_io.hpp"
#include "monocirc/eh_builders.hpp"
#include "monocirc/evaluate.hpp"
#include "monocirc/oracle.hpp"
#include "monocirc/poset.hpp"
#include "monocirc/sampling.hpp"
#include "monocirc/schur.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace monocirc;

namespace {

/// Wall-clock limits, in seconds.
constexpr double h5_limit = 1.0;
constexpr double p25_limit = 1.0;
constexpr double two_row_limit = 5.0;
constexpr double oracle_sweep_limit = 300.0;
constexpr double shelling_limit = 120.0;

/// Per-doubling gate increments.
std::size_t h_increment_limit(std::size_t k) { return 4 * k * k; }
constexpr std::size_t schur_increment_limit = 324;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

int failures = 0;

void run_criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs >= limit_s) {
        std::ostringstream msg;
        msg << "took " << secs << " s, limit " << limit_s << " s";
        r.fail(msg.str());
    }
    if (!r.pass) {
        ++failures;
    }
    std::printf("%s %2d %-28s %8.3f s  %s\n", r.pass ? "PASS" : "FAIL", id, name, secs, r.detail.c_str());
    std::fflush(stdout);
}

Column col(std::initializer_list<unsigned> e) { return Column(std::vector<unsigned>(e)); }

std::vector<GateId> inputs(CircuitBuilder& b, std::size_t k) {
    std::vector<GateId> v;
    for (std::size_t i = 0; i < k; ++i) {
        v.push_back(b.input(i));
    }
    return v;
}

std::size_t h_arith(std::size_t k, std::uint64_t n) {
    CircuitBuilder b(k);
    const auto vars = inputs(b, k);
    return gate_count(prune(b.finish(build_h_single(b, vars, n)))).arith;
}

Outcome h5_two_vars() {
    Outcome r;
    const auto c = brute::h5_circuit();
    const auto count = gate_count(c);
    if (count.arith != 8) {
        r.fail("arith = " + std::to_string(count.arith));
    }
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto p = random_point(rng, 2, 1, 1000);
        if (evaluate(c, p) != brute::h5_expansion(p[0], p[1])) {
            r.fail("mismatch at (" + p[0].get_str() + "," + p[1].get_str() + ")");
        }
    }
    r.detail = r.pass ? "8 gates, 20 points" : r.detail;
    return r;
}

std::vector<Column> pair_row(std::initializer_list<std::pair<unsigned, unsigned>> cs) {
    std::vector<Column> out;
    for (auto [a, b] : cs) {
        out.push_back(col({a, b}));
    }
    return out;
}

/// The five maximal chains of P(2,5) in shelling order, with their descent columns.
const std::vector<std::pair<std::vector<Column>, std::vector<Column>>>& p25_table() {
    static const std::vector<std::pair<std::vector<Column>, std::vector<Column>>> table{
        {pair_row({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}), {}},
        {pair_row({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}), pair_row({{2, 5}})},
        {pair_row({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}), pair_row({{1, 4}})},
        {pair_row({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {4, 5}}), pair_row({{1, 4}, {2, 5}})},
        {pair_row({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}), pair_row({{1, 5}})},
    };
    return table;
}

Outcome p25_shelling() {
    Outcome r;
    const auto iv = Interval::full(2, 5);
    const auto chains = enumerate_max_chains(iv);
    const auto& table = p25_table();
    if (chains.size() != table.size()) {
        r.fail(std::to_string(chains.size()) + " chains");
        return r;
    }
    for (std::size_t i = 0; i < chains.size(); ++i) {
        if (chains[i].columns != table[i].first) {
            r.fail("chain " + std::to_string(i + 1) + " out of order");
        }
        if (compute_q_star(iv, chains[i]).columns(chains[i]) != table[i].second) {
            r.fail("Q* of chain " + std::to_string(i + 1));
        }
    }
    r.detail = r.pass ? "5 chains, Q* sets match" : r.detail;
    return r;
}

Outcome dissection() {
    Outcome r;
    const auto dec = decompose(Partition({6, 6, 4, 1, 1}));
    if (dec.pruned_conjugate != Partition({5, 3, 2})) {
        r.fail("pruned conjugate " + dec.pruned_conjugate.to_string());
    }
    if (dec.pruned_shape != Partition({3, 3, 2, 1, 1})) {
        r.fail("pruned shape " + dec.pruned_shape.to_string());
    }
    if (dec.s() != 3) {
        r.fail("s = " + std::to_string(dec.s()));
    }
    if (dec.heights != std::vector<std::size_t>{5, 3, 2} || dec.widths != std::vector<unsigned>{0, 2, 1}) {
        r.fail("(h, m) pairs differ");
    }
    r.detail = r.pass ? "(5,0),(3,2),(2,1)" : r.detail;
    return r;
}

/// s_(m,m)(x_1..x_5) as a five-term h expression: each maximal chain of P(2,5)
/// contributes (product of its descent monomials) * h_{m-|Q*|}(chain monomials).
mpz_class two_row_formula(unsigned m, const std::vector<mpz_class>& x) {
    auto value = [&](const Column& c) { return x[c[0] - 1] * x[c[1] - 1]; };
    mpz_class total = 0;
    for (const auto& [row, star] : p25_table()) {
        if (star.size() > m) {
            continue;
        }
        mpz_class prefix = 1;
        for (const auto& c : star) {
            prefix *= value(c);
        }
        std::vector<mpz_class> z;
        for (const auto& c : row) {
            z.push_back(value(c));
        }
        total += prefix * h_eval(m - static_cast<unsigned>(star.size()), z);
    }
    return total;
}

Outcome two_row_example() {
    Outcome r;
    std::mt19937_64 rng(510);
    for (unsigned m = 2; m <= 4; ++m) {
        const auto sc = synthesize_schur(Partition({m, m}), 5);
        for (int i = 0; i < 10; ++i) {
            const auto p = random_point(rng, 5, 1, 4);
            if (evaluate(sc.circuit, p) != two_row_formula(m, p)) {
                r.fail("m = " + std::to_string(m));
            }
        }
    }
    r.detail = r.pass ? "m = 2,3,4 at 10 points each" : r.detail;
    return r;
}

Outcome oracle_sweep() {
    Outcome r;
    std::mt19937_64 rng(5);
    std::size_t cases = 0;
    for (unsigned n = 0; n <= 8; ++n) {
        for (const auto& shape : partitions_of(n)) {
            for (unsigned k = 1; k <= 4; ++k) {
                if (shape.length() > k) {
                    continue;
                }
                ++cases;
                CircuitBuilder b(k);
                const auto built = build_schur(b, shape, k);
                const auto c = b.finish(built.output);
                for (int i = 0; i < 10; ++i) {
                    const auto p = random_point(rng, k, 1, 5);
                    if (evaluate(c, p) != schur_eval(shape, p)) {
                        r.fail(shape.to_string() + " k=" + std::to_string(k));
                    }
                }
            }
        }
    }
    r.detail = r.pass ? std::to_string(cases) + " (shape, k) pairs" : r.detail;
    return r;
}

Outcome h_scaling() {
    Outcome r;
    std::size_t worst = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
        std::size_t prev = h_arith(k, std::uint64_t{1} << 5);
        for (unsigned t = 6; t <= 20; ++t) {
            const std::size_t cur = h_arith(k, std::uint64_t{1} << t);
            const std::size_t inc = cur > prev ? cur - prev : 0;
            worst = std::max(worst, inc);
            if (inc > h_increment_limit(k)) {
                r.fail("k=" + std::to_string(k) + " t=" + std::to_string(t) + " increment " + std::to_string(inc));
            }
            prev = cur;
        }
    }
    std::mt19937_64 rng(6);
    for (unsigned k = 1; k <= 5; ++k) {
        const auto p = random_point(rng, k, 1, 9);
        for (std::uint64_t n = 0; n <= 64; ++n) {
            CircuitBuilder b(k);
            const auto vars = inputs(b, k);
            const auto c = b.finish(build_h_single(b, vars, n));
            if (evaluate(c, p) != h_eval(static_cast<unsigned>(n), p)) {
                r.fail("h_" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
    }
    r.detail = r.pass ? "max increment " + std::to_string(worst) : r.detail;
    return r;
}

Outcome schur_growth() {
    Outcome r;
    std::size_t prev = synthesize_schur(Partition({32, 1}), 3).report.arith;
    std::size_t worst = 0;
    for (unsigned t = 6; t <= 16; ++t) {
        const std::size_t cur = synthesize_schur(Partition({1u << t, 1}), 3).report.arith;
        const std::size_t inc = cur > prev ? cur - prev : 0;
        worst = std::max(worst, inc);
        if (inc > schur_increment_limit) {
            r.fail("t=" + std::to_string(t) + " increment " + std::to_string(inc));
        }
        prev = cur;
    }
    r.detail = r.pass ? "max increment " + std::to_string(worst) : r.detail;
    return r;
}

bool subset_of(const std::vector<Column>& small, const std::vector<Column>& big) {
    return std::all_of(small.begin(), small.end(),
                       [&](const Column& c) { return std::find(big.begin(), big.end(), c) != big.end(); });
}

Outcome shelling() {
    Outcome r;
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> weight(1, 5);
    std::size_t intervals = 0;
    for (unsigned k = 1; k <= 6; ++k) {
        for (std::size_t h = 1; h <= std::min<std::size_t>(3, k); ++h) {
            for (const auto& iv : brute::all_intervals(h, k)) {
                ++intervals;
                const std::string where = iv.bottom().to_string() + ".." + iv.top().to_string();
                const auto chains = enumerate_max_chains(iv);
                std::vector<std::vector<Column>> stars;
                for (const auto& q : chains) {
                    stars.push_back(compute_q_star(iv, q).columns(q));
                }

                // Properness: no earlier chain contains a later chain's Q*.
                for (std::size_t q = 0; q < chains.size(); ++q) {
                    for (std::size_t p = 0; p < q; ++p) {
                        if (subset_of(stars[q], chains[p].columns)) {
                            r.fail("properness in " + where);
                        }
                    }
                }

                // Least chain and partition: for every chain C, the maximal chains
                // with Q* in C in Q are exactly one, the least containing C.
                for (const auto& c : brute::all_chains(iv)) {
                    std::size_t least = chains.size();
                    std::size_t hits = 0;
                    std::size_t hit = chains.size();
                    for (std::size_t q = 0; q < chains.size(); ++q) {
                        const bool inside = subset_of(c, chains[q].columns);
                        if (inside && least == chains.size()) {
                            least = q;
                        }
                        if (inside && subset_of(stars[q], c)) {
                            ++hits;
                            hit = q;
                        }
                    }
                    if (hits != 1 || hit != least) {
                        r.fail("least chain mismatch in " + where);
                    }
                }

                std::map<Column, mpz_class> w;
                for (const auto& c : iv.elements()) {
                    w.emplace(c, weight(rng));
                }
                for (unsigned m = 0; m <= 5; ++m) {
                    if (multichain_gf_eval(iv, m, w) != brute::multichain_sum(iv, m, w)) {
                        r.fail("multichain sum m=" + std::to_string(m) + " in " + where);
                    }
                }
            }
        }
    }
    r.detail = r.pass ? std::to_string(intervals) + " intervals" : r.detail;
    return r;
}

Outcome structural_counts() {
    Outcome r;
    for (unsigned k = 1; k <= 6; ++k) {
        for (std::size_t h = 1; h <= std::min<std::size_t>(3, k); ++h) {
            const std::string where = "P(" + std::to_string(h) + "," + std::to_string(k) + ")";
            const auto elems = poset_elements(h, k);
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, h);
            if (binom != static_cast<unsigned long>(elems.size())) {
                r.fail("size of " + where);
            }
            const auto chains = enumerate_max_chains(Interval::full(h, k));
            const std::size_t w = k - h;
            for (const auto& q : chains) {
                if (q.length() != h * w + 1) {
                    r.fail("chain length in " + where);
                }
            }
            mpz_class cap;
            mpz_ui_pow_ui(cap.get_mpz_t(), h, h * w);
            if (cap < static_cast<unsigned long>(chains.size())) {
                r.fail("chain count bound in " + where);
            }
            if (chains.size() != brute::count_syt(std::vector<unsigned>(h, static_cast<unsigned>(w)))) {
                r.fail("SYT count in " + where);
            }
        }
    }
    r.detail = r.pass ? "h <= 3, k <= 6" : r.detail;
    return r;
}

Outcome monotone_roundtrip() {
    Outcome r;
    std::vector<std::pair<std::string, Circuit>> circuits;
    circuits.emplace_back("h5", brute::h5_circuit());
    for (std::size_t k = 1; k <= 6; ++k) {
        for (std::size_t m = 1; m <= k; ++m) {
            CircuitBuilder b(k);
            const auto vars = inputs(b, k);
            circuits.emplace_back("e", prune(b.finish(build_elementary(b, vars).at(m))));
        }
        for (std::uint64_t n : {0u, 1u, 7u, 64u, 1000u}) {
            CircuitBuilder b(k);
            const auto vars = inputs(b, k);
            circuits.emplace_back("h", prune(b.finish(build_h_single(b, vars, n))));
        }
    }
    for (unsigned n = 0; n <= 6; ++n) {
        for (const auto& shape : partitions_of(n)) {
            for (unsigned k = static_cast<unsigned>(std::max<std::size_t>(1, shape.length())); k <= 4; ++k) {
                circuits.emplace_back("schur " + shape.to_string(), synthesize_schur(shape, k).circuit);
            }
        }
    }
    for (const auto& [name, c] : circuits) {
        if (!validate(c).ok()) {
            r.fail(name + " is not monotone");
        }
        if (deserialize(serialize(c)) != c) {
            r.fail(name + " does not round-trip");
        }
    }
    r.detail = r.pass ? std::to_string(circuits.size()) + " circuits" : r.detail;
    return r;
}

} // namespace

int main() {
    run_criterion(1, "h5(x1,x2) circuit", h5_limit, h5_two_vars);
    run_criterion(2, "P(2,5) shelling", p25_limit, p25_shelling);
    run_criterion(3, "shape dissection", 0, dissection);
    run_criterion(4, "two-row expression, k=5", two_row_limit, two_row_example);
    run_criterion(5, "oracle equivalence sweep", oracle_sweep_limit, oracle_sweep);
    run_criterion(6, "h builder scaling", 0, h_scaling);
    run_criterion(7, "schur log growth (n,1)", 0, schur_growth);
    run_criterion(8, "shelling properties", shelling_limit, shelling);
    run_criterion(9, "structural counts", 0, structural_counts);
    run_criterion(10, "monotone + round-trip", 0, monotone_roundtrip);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
