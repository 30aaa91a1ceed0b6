#pragma once

/// @file eh_builders.hpp
/// @brief Circuits for elementary and complete homogeneous symmetric polynomials.
///
/// Both builders are variable-agnostic: the "variables" are arbitrary gate ids
/// in the builder, so the same code computes h_m over inputs, over squared
/// inputs, or over column monomials.

#include "monocirc/circuit.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace monocirc {

/// e_1..e_k over `var_ids`; e_0 is implicit (the constant one).
struct EBatch {
    std::vector<GateId> var_ids;
    std::vector<GateId> entries; ///< entries[m - 1] computes e_m

    GateId at(std::size_t m) const { return entries.at(m - 1); }
};

/// h_m for every m in [max(0, n - k + 1), n] over `var_ids`.
struct HBatch {
    std::uint64_t n = 0;
    std::vector<GateId> var_ids;
    std::uint64_t lo = 0;        ///< smallest degree held
    std::vector<GateId> entries; ///< entries[m - lo] computes h_m; h_0 is Const(1)

    bool contains(std::uint64_t m) const { return m >= lo && m <= n; }
    GateId at(std::uint64_t m) const;
};

/// Pascal recurrence e_m(x_1..x_j) = x_j e_{m-1}(x_1..x_{j-1}) + e_m(x_1..x_{j-1}).
/// At most 2k^2 arithmetic gates. Throws ModelError for an empty variable list.
EBatch build_elementary(CircuitBuilder& b, std::span<const GateId> var_ids);

/// Degree window at or below which `build_h_batch` uses direct dynamic
/// programming instead of the squaring recursion.
inline std::uint64_t h_base_threshold(std::size_t k) { return 2 * static_cast<std::uint64_t>(k); }

/// h_{n-k+1..n} via h_m = sum_{m-k <= 2b <= m} e_{m-2b} h_b(x_1^2..x_k^2):
/// square the variables, recurse at floor(n/2), then recombine with one
/// e-batch per level. O(k^2 log n) gates.
HBatch build_h_batch(CircuitBuilder& b, std::span<const GateId> var_ids, std::uint64_t n);

/// The h_n member of `build_h_batch`.
GateId build_h_single(CircuitBuilder& b, std::span<const GateId> var_ids, std::uint64_t n);

/// Product that treats Const(1) operands as absent instead of emitting a gate.
GateId mul_skip_one(CircuitBuilder& b, GateId x, GateId y);

} // namespace monocirc
