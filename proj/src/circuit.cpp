#include "monocirc/circuit.hpp"

#include "monocirc/errors.hpp"

#include <algorithm>
#include <utility>

namespace monocirc {

Circuit::Circuit(std::size_t num_vars, std::vector<Gate> gates, GateId output)
    : num_vars_(num_vars), gates_(std::move(gates)), output_(output) {
    if (output_.index >= gates_.size()) {
        throw StructuralError("output gate " + std::to_string(output_.index) +
                              " does not exist in a circuit of " + std::to_string(gates_.size()) +
                              " gates");
    }
}

std::size_t CircuitBuilder::KeyHash::operator()(const Key& k) const noexcept {
    std::size_t h = static_cast<std::size_t>(k.kind);
    auto mix = [&h](std::uint64_t v) { h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(k.value);
    mix(k.lhs);
    mix(k.rhs);
    return h;
}

CircuitBuilder::CircuitBuilder(std::size_t num_vars) : num_vars_(num_vars) {}

void CircuitBuilder::check(GateId id) const {
    if (id.index >= gates_.size()) {
        throw StructuralError("gate id " + std::to_string(id.index) + " out of range (builder has " +
                              std::to_string(gates_.size()) + " gates)");
    }
}

const Gate& CircuitBuilder::gate(GateId id) const {
    check(id);
    return gates_[id.index];
}

GateId CircuitBuilder::intern(const Gate& g) {
    const Key key{g.kind, g.value, g.lhs.index, g.rhs.index};
    if (auto it = table_.find(key); it != table_.end()) {
        return GateId{it->second};
    }
    const auto id = static_cast<std::uint32_t>(gates_.size());
    gates_.push_back(g);
    table_.emplace(key, id);
    if (g.is_arithmetic()) {
        ++arith_;
    }
    return GateId{id};
}

GateId CircuitBuilder::input(std::size_t var) {
    if (var >= num_vars_) {
        throw StructuralError("input x" + std::to_string(var + 1) + " out of range for " +
                              std::to_string(num_vars_) + " variables");
    }
    return intern(Gate::input(var));
}

GateId CircuitBuilder::constant(std::uint64_t value) {
    if (value == 0) {
        throw ModelError("constant 0 is not representable in a monotone circuit");
    }
    return intern(Gate::constant(value));
}

GateId CircuitBuilder::add(GateId a, GateId b) {
    check(a);
    check(b);
    if (b < a) {
        std::swap(a, b);
    }
    return intern(Gate::add(a, b));
}

GateId CircuitBuilder::mul(GateId a, GateId b) {
    check(a);
    check(b);
    if (b < a) {
        std::swap(a, b);
    }
    return intern(Gate::mul(a, b));
}

bool CircuitBuilder::is_one(GateId id) const {
    const Gate& g = gate(id);
    return g.kind == GateKind::constant && g.value == 1;
}

Circuit CircuitBuilder::finish(GateId output) const {
    check(output);
    return Circuit(num_vars_, gates_, output);
}

GateCount gate_count(const Circuit& c) {
    GateCount n;
    n.total = c.size();
    n.arith = static_cast<std::size_t>(
        std::count_if(c.gates().begin(), c.gates().end(), [](const Gate& g) { return g.is_arithmetic(); }));
    return n;
}

ValidationReport validate(const Circuit& c) {
    ValidationReport report;
    auto flag = [&report](std::size_t id, ViolationKind kind, std::string msg) {
        report.violations.push_back({id, kind, std::move(msg)});
    };
    const auto gates = c.gates();
    for (std::size_t id = 0; id < gates.size(); ++id) {
        const Gate& g = gates[id];
        switch (g.kind) {
        case GateKind::input:
            if (g.value >= c.num_vars()) {
                flag(id, ViolationKind::input_out_of_range,
                     "input index " + std::to_string(g.value) + " out of range");
            }
            break;
        case GateKind::constant:
            if (g.value == 0) {
                flag(id, ViolationKind::non_positive_constant, "non-positive constant");
            }
            break;
        case GateKind::add:
        case GateKind::mul:
            if (g.lhs.index >= id || g.rhs.index >= id) {
                flag(id, ViolationKind::non_topological,
                     "non-topological: operand " + std::to_string(std::max(g.lhs.index, g.rhs.index)) +
                         " is not smaller than gate " + std::to_string(id));
            }
            break;
        }
    }
    if (c.output().index >= gates.size()) {
        flag(c.output().index, ViolationKind::invalid_output, "output id out of range");
    }
    return report;
}

Circuit prune(const Circuit& c) {
    const auto gates = c.gates();
    std::vector<char> live(gates.size(), 0);
    live[c.output().index] = 1;
    for (std::size_t i = gates.size(); i-- > 0;) {
        if (!live[i] || !gates[i].is_arithmetic()) {
            continue;
        }
        live[gates[i].lhs.index] = 1;
        live[gates[i].rhs.index] = 1;
    }

    std::vector<std::uint32_t> remap(gates.size(), 0);
    std::vector<Gate> kept;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (!live[i]) {
            continue;
        }
        Gate g = gates[i];
        if (g.is_arithmetic()) {
            g.lhs = GateId{remap[g.lhs.index]};
            g.rhs = GateId{remap[g.rhs.index]};
        }
        remap[i] = static_cast<std::uint32_t>(kept.size());
        kept.push_back(g);
    }
    return Circuit(c.num_vars(), std::move(kept), GateId{remap[c.output().index]});
}

} // namespace monocirc
