#pragma once

/// @file circuit.hpp
/// @brief Monotone arithmetic circuits: gates, immutable circuits, and a hash-consing builder.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace monocirc {

/// Dense index of a gate inside a circuit or builder.
struct GateId {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(GateId, GateId) = default;
};

enum class GateKind : std::uint8_t { input, constant, add, mul };

/// One node of a circuit. `value` holds the variable index for inputs and the
/// scalar for constants; `lhs`/`rhs` are only meaningful for add and mul.
struct Gate {
    GateKind kind = GateKind::constant;
    std::uint64_t value = 1;
    GateId lhs{};
    GateId rhs{};

    static Gate input(std::uint64_t var) { return {GateKind::input, var, {}, {}}; }
    static Gate constant(std::uint64_t c) { return {GateKind::constant, c, {}, {}}; }
    static Gate add(GateId a, GateId b) { return {GateKind::add, 0, a, b}; }
    static Gate mul(GateId a, GateId b) { return {GateKind::mul, 0, a, b}; }

    bool is_arithmetic() const noexcept { return kind == GateKind::add || kind == GateKind::mul; }

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// An immutable straight-line program over +, x with a single output.
///
/// Gates are stored in id order. The constructor only checks that the output
/// id exists; everything else (topological order, positive constants, input
/// range) is reported by `validate` so that broken circuits can be inspected.
class Circuit {
  public:
    Circuit(std::size_t num_vars, std::vector<Gate> gates, GateId output);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::span<const Gate> gates() const noexcept { return gates_; }
    const Gate& gate(GateId id) const { return gates_.at(id.index); }
    std::size_t size() const noexcept { return gates_.size(); }
    GateId output() const noexcept { return output_; }

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::size_t num_vars_;
    std::vector<Gate> gates_;
    GateId output_;
};

/// Single-writer arena that hands out gate ids with structural sharing.
///
/// Requests are normalized (commutative operands sorted ascending) and looked
/// up in a hash-cons table, so asking for the same add/mul/input/constant twice
/// returns the same id. No algebraic simplification happens here: `mul(one, x)`
/// is a real gate.
class CircuitBuilder {
  public:
    explicit CircuitBuilder(std::size_t num_vars);

    GateId input(std::size_t var);
    /// Throws ModelError for zero; the monotone model only has positive scalars.
    GateId constant(std::uint64_t value);
    GateId add(GateId a, GateId b);
    GateId mul(GateId a, GateId b);

    /// The Const(1) gate, created on first use.
    GateId one() { return constant(1); }
    bool is_one(GateId id) const;

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t size() const noexcept { return gates_.size(); }
    std::size_t arith_count() const noexcept { return arith_; }
    const Gate& gate(GateId id) const;

    /// Snapshot of the arena with `output` as the sole output. Dead gates are
    /// kept; run `prune` to drop them.
    Circuit finish(GateId output) const;

  private:
    struct Key {
        GateKind kind;
        std::uint64_t value;
        std::uint32_t lhs;
        std::uint32_t rhs;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };

    GateId intern(const Gate& g);
    void check(GateId id) const;

    std::size_t num_vars_;
    std::size_t arith_ = 0;
    std::vector<Gate> gates_;
    std::unordered_map<Key, std::uint32_t, KeyHash> table_;
};

struct GateCount {
    std::size_t arith = 0; ///< add + mul gates; the size measure
    std::size_t total = 0;
};

GateCount gate_count(const Circuit& c);

enum class ViolationKind : std::uint8_t {
    non_topological,
    non_positive_constant,
    input_out_of_range,
    invalid_output,
};

struct Violation {
    std::size_t gate = 0;
    ViolationKind kind = ViolationKind::non_topological;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Check the monotone alphabet and topological numbering. Never throws.
ValidationReport validate(const Circuit& c);

/// Drop every gate the output does not depend on and renumber densely,
/// preserving relative order.
Circuit prune(const Circuit& c);

} // namespace monocirc
