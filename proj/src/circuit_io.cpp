#include "monocirc/circuit_io.hpp"

#include "monocirc/errors.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace monocirc {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

std::uint64_t parse_u64(std::string_view word, std::size_t line, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
    if (ec != std::errc{} || ptr != word.data() + word.size()) {
        throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                                   std::string(word) + "'");
    }
    return v;
}

std::uint32_t parse_id(std::string_view word, std::size_t line) {
    const auto v = parse_u64(word, line, "gate id");
    if (v > UINT32_MAX) {
        throw ParseError(line, "gate id too large");
    }
    return static_cast<std::uint32_t>(v);
}

std::uint64_t parse_keyed(std::string_view word, std::string_view key, std::size_t line) {
    if (word.substr(0, key.size()) != key) {
        throw ParseError(line, "expected '" + std::string(key) + "<n>' in header");
    }
    return parse_u64(word.substr(key.size()), line, "header field");
}

} // namespace

std::string serialize(const Circuit& c) {
    std::ostringstream out;
    out << "circuit k=" << c.num_vars() << " out=" << c.output().index << '\n';
    const auto gates = c.gates();
    for (std::size_t id = 0; id < gates.size(); ++id) {
        const Gate& g = gates[id];
        out << id;
        switch (g.kind) {
        case GateKind::input:
            out << " in " << g.value;
            break;
        case GateKind::constant:
            out << " const " << g.value;
            break;
        case GateKind::add:
            out << " add " << g.lhs.index << ' ' << g.rhs.index;
            break;
        case GateKind::mul:
            out << " mul " << g.lhs.index << ' ' << g.rhs.index;
            break;
        }
        out << '\n';
    }
    return out.str();
}

Circuit deserialize(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(text.substr(pos, end - pos));
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    while (!lines.empty() && split_words(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError(1, "empty input, expected 'circuit k=<n> out=<id>' header");
    }

    const auto header = split_words(lines[0]);
    if (header.size() != 3 || header[0] != "circuit") {
        throw ParseError(1, "expected 'circuit k=<n> out=<id>' header");
    }
    const auto num_vars = parse_keyed(header[1], "k=", 1);
    const auto out_id = parse_keyed(header[2], "out=", 1);

    std::vector<Gate> gates;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const auto words = split_words(lines[i]);
        if (words.empty()) {
            throw ParseError(line_no, "blank line inside gate list");
        }
        if (words.size() < 3) {
            throw ParseError(line_no, "truncated gate line");
        }
        const auto id = parse_u64(words[0], line_no, "gate id");
        if (id != gates.size()) {
            throw ParseError(line_no, "gate ids must be dense and in order; expected " +
                                          std::to_string(gates.size()) + ", got " + std::to_string(id));
        }
        const auto op = words[1];
        if (op == "in" || op == "const") {
            if (words.size() != 3) {
                throw ParseError(line_no, "'" + std::string(op) + "' takes exactly one argument");
            }
            const auto v = parse_u64(words[2], line_no, op == "in" ? "variable index" : "constant");
            gates.push_back(op == "in" ? Gate::input(v) : Gate::constant(v));
        } else if (op == "add" || op == "mul") {
            if (words.size() != 4) {
                throw ParseError(line_no, "'" + std::string(op) + "' takes exactly two operands");
            }
            const GateId a{parse_id(words[2], line_no)};
            const GateId b{parse_id(words[3], line_no)};
            gates.push_back(op == "add" ? Gate::add(a, b) : Gate::mul(a, b));
        } else {
            throw ParseError(line_no, "unknown gate kind '" + std::string(op) + "'");
        }
    }
    if (out_id >= gates.size()) {
        throw ParseError(1, "output id " + std::to_string(out_id) + " refers to no gate");
    }
    return Circuit(num_vars, std::move(gates), GateId{static_cast<std::uint32_t>(out_id)});
}

std::string export_dot(const Circuit& c) {
    std::ostringstream out;
    out << "digraph circuit {\n  rankdir=BT;\n";
    const auto gates = c.gates();
    for (std::size_t id = 0; id < gates.size(); ++id) {
        const Gate& g = gates[id];
        out << "  g" << id << " [label=\"";
        switch (g.kind) {
        case GateKind::input:
            out << "x" << (g.value + 1) << "\", shape=plaintext";
            break;
        case GateKind::constant:
            out << g.value << "\", shape=box";
            break;
        case GateKind::add:
            out << "+\", shape=circle";
            break;
        case GateKind::mul:
            out << "×\", shape=circle";
            break;
        }
        if (id == c.output().index) {
            out << ", peripheries=2";
        }
        out << "];\n";
    }
    for (std::size_t id = 0; id < gates.size(); ++id) {
        const Gate& g = gates[id];
        if (g.is_arithmetic()) {
            out << "  g" << g.lhs.index << " -> g" << id << ";\n";
            out << "  g" << g.rhs.index << " -> g" << id << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace monocirc
