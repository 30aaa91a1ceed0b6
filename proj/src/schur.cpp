#include "monocirc/schur.hpp"

#include "monocirc/eh_builders.hpp"
#include "monocirc/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

namespace monocirc {

PruningDecomposition decompose(const Partition& shape) {
    PruningDecomposition dec;
    dec.source = shape;
    const Partition conj = shape.conjugate();
    for (unsigned h : conj.parts()) {
        if (dec.heights.empty() || dec.heights.back() != h) {
            dec.heights.push_back(h);
        }
    }
    std::vector<unsigned> hs;
    for (auto h : dec.heights) {
        dec.widths.push_back(shape.part(h) - shape.part(h + 1) - 1);
        hs.push_back(static_cast<unsigned>(h));
    }
    dec.pruned_conjugate = Partition(hs);
    dec.pruned_shape = dec.pruned_conjugate.conjugate();
    return dec;
}

std::vector<Pruning> enumerate_prunings(const PruningDecomposition& dec, unsigned k) {
    if (dec.source.length() > k) {
        throw ModelError("shape " + dec.source.to_string() + " has more than k = " + std::to_string(k) + " rows");
    }
    std::vector<Pruning> out;
    if (dec.s() == 0) {
        out.emplace_back();
        return out;
    }
    Pruning cur;
    std::function<void(std::size_t, const Column&)> rec = [&](std::size_t j, const Column& lower) {
        const Interval iv(k, lower, top_column(dec.heights[j], k));
        for (auto& a : iv.elements()) {
            cur.columns.push_back(a);
            cur.lower_bounds.push_back(lower);
            if (j + 1 == dec.s()) {
                out.push_back(cur);
            } else {
                rec(j + 1, a.truncated(dec.heights[j + 1]));
            }
            cur.columns.pop_back();
            cur.lower_bounds.pop_back();
        }
    };
    rec(0, bottom_column(dec.heights[0]));
    return out;
}

Pruning pruning_of(const Tableau& t, const PruningDecomposition& dec) {
    Pruning p;
    for (std::size_t j = 0; j < dec.s(); ++j) {
        const std::size_t h = dec.heights[j];
        const std::size_t col = dec.source.part(h) - 1;
        std::vector<unsigned> entries;
        for (std::size_t i = 0; i < h; ++i) {
            entries.push_back(t.rows.at(i).at(col));
        }
        p.lower_bounds.push_back(j == 0 ? bottom_column(h) : p.columns.back().truncated(h));
        p.columns.emplace_back(std::move(entries));
    }
    return p;
}

namespace {

double binom(unsigned n, unsigned r) {
    if (r > n) {
        return 0;
    }
    double v = 1;
    for (unsigned i = 1; i <= r; ++i) {
        v = v * (n - r + i) / i;
    }
    return v;
}

void fill_bound(GateCountReport& r, const PruningDecomposition& dec) {
    const auto k = static_cast<double>(r.k);
    const auto l = static_cast<double>(r.shape.length());
    const auto s = static_cast<double>(dec.s());

    r.d = 0;
    const Partition conj = r.shape.conjugate();
    for (unsigned c : conj.parts()) {
        r.d = std::max(r.d, c * (r.k - c));
    }
    const double lam1 = r.shape.part(1);
    auto& f = r.bound;
    f.log2_lambda1 = lam1 > 0 ? std::log2(lam1) : 0.0;
    const double log_factor = std::max(1.0, f.log2_lambda1);
    f.k5 = std::pow(k, 5);
    f.two_pow_kl = std::pow(2.0, k * l);
    f.l_pow_d = std::pow(l, r.d);
    f.headline = log_factor * f.k5 * f.two_pow_kl * f.l_pow_d;
    f.intermediate = log_factor * s * l * l * k * k * std::pow(2.0, k * s) * f.l_pow_d;

    double monomials = 0;
    double prunings = 1;
    double chains = 0;
    for (auto hj : dec.heights) {
        const auto h = static_cast<double>(hj);
        monomials += binom(r.k, static_cast<unsigned>(hj));
        prunings *= binom(r.k, static_cast<unsigned>(hj));
        chains += std::pow(h, h * (k - h)) * h * h * (k - h) * (k - h) * log_factor;
    }
    f.explicit_sum = l * monomials + prunings * (2 * s + chains);
}

struct Assembler {
    CircuitBuilder& b;
    unsigned k;
    const PruningDecomposition& dec;
    StageCounts& stages;
    std::vector<GateId> inputs;
    std::map<Column, GateId> monomials;
    std::map<std::tuple<std::size_t, Column, Column>, std::optional<GateId>> inner_cache;

    GateId monomial(const Column& c) {
        if (auto it = monomials.find(c); it != monomials.end()) {
            return it->second;
        }
        GateId g = inputs.at(c[0] - 1);
        for (std::size_t i = 1; i < c.height(); ++i) {
            g = b.mul(g, inputs.at(c[i] - 1));
        }
        monomials.emplace(c, g);
        return g;
    }

    // sum_Q x^{Q*} h_{m-|Q*|}(x^c : c in Q); nullopt when every chain is skipped.
    std::optional<GateId> inner_sum(std::size_t j, const Column& lower, const Column& upper) {
        auto key = std::make_tuple(j, lower, upper);
        if (auto it = inner_cache.find(key); it != inner_cache.end()) {
            return it->second;
        }
        ++stages.intervals;
        const unsigned m = dec.widths[j];
        const Interval iv(k, lower, upper);
        std::optional<GateId> sum;
        for (const auto& q : enumerate_max_chains(iv)) {
            ++stages.chains;
            const auto star = compute_q_star(iv, q);
            if (star.size() > m) {
                ++stages.chains_skipped;
                continue;
            }
            GateId prefix = b.one();
            for (auto idx : star.indices) {
                prefix = mul_skip_one(b, prefix, monomial(q.columns[idx]));
            }
            std::vector<GateId> vars;
            vars.reserve(q.columns.size());
            for (const auto& c : q.columns) {
                vars.push_back(monomial(c));
            }
            ++stages.h_batches;
            const GateId h = build_h_single(b, vars, m - star.size());
            const GateId term = mul_skip_one(b, prefix, h);
            sum = sum ? b.add(*sum, term) : term;
        }
        inner_cache.emplace(std::move(key), sum);
        return sum;
    }
};

} // namespace

SchurBuild build_schur(CircuitBuilder& b, const Partition& shape, unsigned k) {
    if (k == 0) {
        throw ModelError("Schur polynomials need at least one variable");
    }
    if (shape.length() > k) {
        throw ModelError("zero polynomial not representable: shape " + shape.to_string() + " has " +
                         std::to_string(shape.length()) + " rows but k = " + std::to_string(k));
    }
    if (b.num_vars() != k) {
        throw StructuralError("builder has " + std::to_string(b.num_vars()) + " inputs, expected " +
                              std::to_string(k));
    }

    const auto dec = decompose(shape);
    GateCountReport report;
    report.shape = shape;
    report.k = k;
    fill_bound(report, dec);
    const std::size_t arith0 = b.arith_count();
    const std::size_t total0 = b.size();

    Assembler as{b, k, dec, report.stages, {}, {}, {}};
    for (unsigned i = 0; i < k; ++i) {
        as.inputs.push_back(b.input(i));
    }

    std::size_t mark = b.arith_count();
    for (auto h : dec.heights) {
        for (const auto& c : poset_elements(h, k)) {
            as.monomial(c);
        }
    }
    report.stages.column_monomials = as.monomials.size();
    report.stages.gates_monomials = b.arith_count() - mark;

    std::optional<GateId> total;
    std::size_t chain_gates = 0;
    std::size_t assembly_gates = 0;
    for (const auto& p : enumerate_prunings(dec, k)) {
        ++report.stages.prunings;
        mark = b.arith_count();
        std::vector<GateId> inner;
        bool zero = false;
        for (std::size_t j = 0; j < dec.s() && !zero; ++j) {
            auto g = as.inner_sum(j, p.lower_bounds[j], p.columns[j]);
            if (!g) {
                zero = true;
            } else {
                inner.push_back(*g);
            }
        }
        chain_gates += b.arith_count() - mark;
        if (zero) {
            continue;
        }
        ++report.stages.pruning_terms;
        mark = b.arith_count();
        GateId term = b.one();
        for (const auto& a : p.columns) {
            term = mul_skip_one(b, term, as.monomial(a));
        }
        for (GateId g : inner) {
            term = mul_skip_one(b, term, g);
        }
        total = total ? b.add(*total, term) : term;
        assembly_gates += b.arith_count() - mark;
    }
    if (!total) {
        throw std::logic_error("every pruning term vanished for shape " + shape.to_string());
    }
    report.stages.gates_chains = chain_gates;
    report.stages.gates_assembly = assembly_gates;
    report.arith = b.arith_count() - arith0;
    report.total = b.size() - total0;
    return {*total, report};
}

SchurCircuit synthesize_schur(const Partition& shape, unsigned k) {
    CircuitBuilder b(k);
    auto built = build_schur(b, shape, k);
    Circuit c = prune(b.finish(built.output));
    const auto count = gate_count(c);
    built.report.arith = count.arith;
    built.report.total = count.total;
    return {std::move(c), built.report};
}

GateCountReport predict_bound(const Partition& shape, unsigned k) {
    if (shape.length() > k) {
        throw ModelError("shape " + shape.to_string() + " has more than k = " + std::to_string(k) + " rows");
    }
    GateCountReport r;
    r.shape = shape;
    r.k = k;
    fill_bound(r, decompose(shape));
    return r;
}

std::string report_json(const GateCountReport& r) {
    nlohmann::ordered_json j;
    j["shape"] = std::vector<unsigned>(r.shape.parts().begin(), r.shape.parts().end());
    j["k"] = r.k;
    j["arith"] = r.arith;
    j["total"] = r.total;
    j["d"] = r.d;
    j["bound_factors"] = {
        {"log2_lambda1", r.bound.log2_lambda1}, {"k5", r.bound.k5},
        {"two_pow_kl", r.bound.two_pow_kl},     {"l_pow_d", r.bound.l_pow_d},
        {"headline", r.bound.headline},         {"intermediate", r.bound.intermediate},
        {"explicit_sum", r.bound.explicit_sum},
    };
    const auto& s = r.stages;
    j["per_stage"] = {
        {"column_monomials", s.column_monomials}, {"prunings", s.prunings},
        {"pruning_terms", s.pruning_terms},       {"intervals", s.intervals},
        {"chains", s.chains},                     {"chains_skipped", s.chains_skipped},
        {"h_batches", s.h_batches},               {"gates_monomials", s.gates_monomials},
        {"gates_chains", s.gates_chains},         {"gates_assembly", s.gates_assembly},
    };
    return j.dump(2);
}

} // namespace monocirc
