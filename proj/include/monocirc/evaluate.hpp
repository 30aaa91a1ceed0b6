#pragma once

#include "monocirc/circuit.hpp"
#include "monocirc/errors.hpp"
#include "monocirc/semiring.hpp"

#include <span>
#include <string>
#include <vector>

namespace monocirc {

/// Evaluate `c` at `point` in one pass over the gates in id order.
///
/// Throws StructuralError on an arity mismatch or when the circuit is not in
/// topological order (run `validate` first for a full diagnostic).
template <Semiring S>
typename S::value_type evaluate(const Circuit& c, std::span<const typename S::value_type> point,
                                const S& s = S{}) {
    using V = typename S::value_type;
    if (point.size() != c.num_vars()) {
        throw StructuralError("evaluation point has " + std::to_string(point.size()) +
                              " coordinates, circuit expects " + std::to_string(c.num_vars()));
    }
    const auto gates = c.gates();
    std::vector<V> values;
    values.reserve(gates.size());
    for (std::size_t id = 0; id < gates.size(); ++id) {
        const Gate& g = gates[id];
        switch (g.kind) {
        case GateKind::input:
            if (g.value >= point.size()) {
                throw StructuralError("input index out of range at gate " + std::to_string(id));
            }
            values.push_back(point[g.value]);
            break;
        case GateKind::constant:
            if (g.value == 0) {
                throw StructuralError("non-positive constant at gate " + std::to_string(id));
            }
            values.push_back(s.from_nat(g.value));
            break;
        case GateKind::add:
        case GateKind::mul:
            if (g.lhs.index >= id || g.rhs.index >= id) {
                throw StructuralError("non-topological operand at gate " + std::to_string(id));
            }
            if (g.kind == GateKind::add) {
                values.push_back(s.add(values[g.lhs.index], values[g.rhs.index]));
            } else {
                values.push_back(s.mul(values[g.lhs.index], values[g.rhs.index]));
            }
            break;
        }
    }
    return values[c.output().index];
}

inline mpz_class evaluate(const Circuit& c, std::span<const mpz_class> point) {
    return evaluate<IntegerSemiring>(c, point);
}

} // namespace monocirc
