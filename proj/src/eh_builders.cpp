#include "monocirc/eh_builders.hpp"

#include "monocirc/errors.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace monocirc {

GateId HBatch::at(std::uint64_t m) const {
    if (!contains(m)) {
        throw std::out_of_range("h_" + std::to_string(m) + " is outside the batch window [" +
                                std::to_string(lo) + ", " + std::to_string(n) + "]");
    }
    return entries[m - lo];
}

GateId mul_skip_one(CircuitBuilder& b, GateId x, GateId y) {
    if (b.is_one(x)) {
        return y;
    }
    if (b.is_one(y)) {
        return x;
    }
    return b.mul(x, y);
}

EBatch build_elementary(CircuitBuilder& b, std::span<const GateId> var_ids) {
    const std::size_t k = var_ids.size();
    if (k == 0) {
        throw ModelError("elementary symmetric polynomials need at least one variable");
    }
    // prev[m] = e_m over the first j variables, m = 1..j
    std::vector<GateId> prev{var_ids[0]};
    for (std::size_t j = 1; j < k; ++j) {
        const GateId x = var_ids[j];
        std::vector<GateId> cur(j + 1);
        cur[0] = b.add(x, prev[0]);
        for (std::size_t m = 2; m <= j; ++m) {
            cur[m - 1] = b.add(b.mul(x, prev[m - 2]), prev[m - 1]);
        }
        cur[j] = b.mul(x, prev[j - 1]);
        prev = std::move(cur);
    }
    return EBatch{{var_ids.begin(), var_ids.end()}, std::move(prev)};
}

namespace {

std::uint64_t window_lo(std::uint64_t n, std::size_t k) { return n + 1 >= k ? n + 1 - k : 0; }

// h-analogue of the Pascal recurrence: h_m(x_1..x_j) = x_j h_{m-1}(x_1..x_j) + h_m(x_1..x_{j-1}).
HBatch h_batch_direct(CircuitBuilder& b, std::span<const GateId> vars, std::uint64_t n) {
    const std::size_t k = vars.size();
    const GateId one = b.one();
    std::vector<GateId> row(n + 1);
    row[0] = one;
    for (std::uint64_t m = 1; m <= n; ++m) {
        row[m] = mul_skip_one(b, vars[0], row[m - 1]);
    }
    for (std::size_t j = 1; j < k; ++j) {
        std::vector<GateId> next(n + 1);
        next[0] = one;
        for (std::uint64_t m = 1; m <= n; ++m) {
            next[m] = b.add(mul_skip_one(b, vars[j], next[m - 1]), row[m]);
        }
        row = std::move(next);
    }
    HBatch batch{n, {vars.begin(), vars.end()}, window_lo(n, k), {}};
    batch.entries.assign(row.begin() + static_cast<std::ptrdiff_t>(batch.lo), row.end());
    return batch;
}

} // namespace

HBatch build_h_batch(CircuitBuilder& b, std::span<const GateId> var_ids, std::uint64_t n) {
    const std::size_t k = var_ids.size();
    if (k == 0) {
        throw ModelError("complete homogeneous polynomials need at least one variable");
    }
    if (n <= h_base_threshold(k)) {
        return h_batch_direct(b, var_ids, n);
    }

    std::vector<GateId> squares;
    squares.reserve(k);
    for (GateId x : var_ids) {
        squares.push_back(b.mul(x, x));
    }
    const std::uint64_t half = n / 2;
    const HBatch sub = build_h_batch(b, squares, half);
    const EBatch e = build_elementary(b, var_ids);
    const GateId one = b.one();

    HBatch batch{n, {var_ids.begin(), var_ids.end()}, window_lo(n, k), {}};
    for (std::uint64_t m = batch.lo; m <= n; ++m) {
        if (m == 0) {
            batch.entries.push_back(one);
            continue;
        }
        // b ranges over ceil((m-k)/2) .. floor(m/2), clipped at zero.
        const std::uint64_t b_lo = m > k ? (m - k + 1) / 2 : 0;
        std::optional<GateId> sum;
        for (std::uint64_t bb = b_lo; bb <= m / 2; ++bb) {
            if (!sub.contains(bb) || bb + k < half + 1) {
                throw std::logic_error("h recursion index " + std::to_string(bb) +
                                       " outside the squared batch window");
            }
            const std::uint64_t r = m - 2 * bb;
            const GateId e_part = r == 0 ? one : e.at(r);
            const GateId term = mul_skip_one(b, e_part, sub.at(bb));
            sum = sum ? b.add(*sum, term) : term;
        }
        batch.entries.push_back(*sum);
    }
    return batch;
}

GateId build_h_single(CircuitBuilder& b, std::span<const GateId> var_ids, std::uint64_t n) {
    return build_h_batch(b, var_ids, n).at(n);
}

} // namespace monocirc
