#pragma once

#include "monocirc/circuit.hpp"

#include <string>
#include <string_view>

namespace monocirc {

/// Line-oriented text form:
///
///     circuit k=<num_vars> out=<output_id>
///     <id> in <var_index>
///     <id> const <value>
///     <id> add <a> <b>
///     <id> mul <a> <b>
///
/// one gate per line in id order, 0-based variable indices.
std::string serialize(const Circuit& c);

/// Inverse of `serialize`. Throws ParseError carrying the offending line.
/// The result is syntactically well formed but not validated.
Circuit deserialize(std::string_view text);

/// Graphviz rendering; one node per gate, one edge per operand.
std::string export_dot(const Circuit& c);

} // namespace monocirc
