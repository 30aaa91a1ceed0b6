#pragma once

/// @file schur.hpp
/// @brief Monotone Schur circuits assembled from prunings, shelled column
/// intervals, and complete homogeneous batches.
///
/// s_lambda = sum over prunings T~ = [a_1|...|a_s] of
///     x^{T~} * prod_j sum_{Q in MaxChains[abar_{j-1}, a_j]} x^{Q*} h_{m_j-|Q*|}(x^{c} : c in Q)
/// where the shape is cut into rectangles h_j x (m_j + 1), one per distinct
/// column height, and abar_j is a_j cut down to height h_{j+1}.

#include "monocirc/circuit.hpp"
#include "monocirc/oracle.hpp"
#include "monocirc/partition.hpp"
#include "monocirc/poset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace monocirc {

/// Rectangles of a shape, one per distinct column height.
struct PruningDecomposition {
    Partition source;
    std::vector<std::size_t> heights; ///< h_1 > ... > h_s
    std::vector<unsigned> widths;     ///< m_j; rectangle j is h_j x (m_j + 1)
    Partition pruned_shape;           ///< one column of each height
    Partition pruned_conjugate;       ///< (h_1, ..., h_s)

    std::size_t s() const noexcept { return heights.size(); }
};

PruningDecomposition decompose(const Partition& shape);

/// A tableau of the pruned shape, split into its columns a_j. Interval j is
/// [lower_bounds[j], columns[j]] in P(h_j, k); lower_bounds[0] = (1..l).
struct Pruning {
    std::vector<Column> columns;
    std::vector<Column> lower_bounds;

    friend bool operator==(const Pruning&, const Pruning&) = default;
};

/// Every SSYT of the pruned shape with entries <= k. Throws ModelError when
/// the shape has more than k rows.
std::vector<Pruning> enumerate_prunings(const PruningDecomposition& dec, unsigned k);

/// Pruning of a concrete tableau: the rightmost column of each height.
Pruning pruning_of(const Tableau& t, const PruningDecomposition& dec);

struct BoundFactors {
    double log2_lambda1 = 0; ///< log2(lambda_1); floored at 1 inside products
    double k5 = 0;
    double two_pow_kl = 0;
    double l_pow_d = 0;
    double headline = 0;     ///< log2(lambda_1) k^5 2^{kl} l^d
    double intermediate = 0; ///< log2(lambda_1) s l^2 k^2 2^{ks} l^d
    double explicit_sum = 0; ///< itemized monomial/pruning/chain cost, unit constants
};

struct StageCounts {
    std::size_t column_monomials = 0;
    std::size_t prunings = 0;
    std::size_t pruning_terms = 0; ///< prunings with every inner sum nonzero
    std::size_t intervals = 0;     ///< distinct (j, interval) pairs
    std::size_t chains = 0;
    std::size_t chains_skipped = 0; ///< |Q*| > m_j
    std::size_t h_batches = 0;
    std::size_t gates_monomials = 0; ///< raw arithmetic gates per stage, before pruning
    std::size_t gates_chains = 0;
    std::size_t gates_assembly = 0;
};

/// Measured size next to the advisory bound terms. The bound terms use unit
/// constants and are not thresholds.
struct GateCountReport {
    Partition shape;
    unsigned k = 0;
    std::size_t arith = 0;
    std::size_t total = 0;
    unsigned d = 0; ///< max_j lambda'_j (k - lambda'_j)
    BoundFactors bound;
    StageCounts stages;
};

std::string report_json(const GateCountReport& r);

/// Predicted side only; `arith`/`total` stay zero.
GateCountReport predict_bound(const Partition& shape, unsigned k);

struct SchurBuild {
    GateId output;
    GateCountReport report; ///< arith/total are raw builder counts added by this call
};

/// Emit s_shape(x_1..x_k) into `b`, whose inputs are the k variables.
/// Throws ModelError when shape has more than k rows (the zero polynomial).
SchurBuild build_schur(CircuitBuilder& b, const Partition& shape, unsigned k);

struct SchurCircuit {
    Circuit circuit; ///< pruned
    GateCountReport report;
};

/// Fresh builder, `build_schur`, prune, and report the pruned size.
SchurCircuit synthesize_schur(const Partition& shape, unsigned k);

} // namespace monocirc
