#pragma once

/// @file poset.hpp
/// @brief The column posets P(h,k), their intervals, and the lexicographic
/// shelling of maximal chains.
///
/// A column is a strictly increasing vector 1 <= c_1 < ... < c_h <= k, ordered
/// componentwise. A maximal chain of an interval [a, b] walks from a to b by
/// adding 1 to one coordinate per step. Chains are ordered lexicographically:
/// at the first position where two chains differ, compare the lowest row that
/// differs there; smaller entry comes first.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace monocirc {

class Column {
  public:
    Column() = default;
    explicit Column(std::vector<unsigned> entries) : entries_(std::move(entries)) {}

    std::span<const unsigned> entries() const noexcept { return entries_; }
    std::size_t height() const noexcept { return entries_.size(); }
    unsigned operator[](std::size_t i) const { return entries_[i]; }

    /// Strictly increasing with entries in [1, k].
    bool is_valid(unsigned k) const noexcept;
    /// c_1 + ... + c_h - h(h+1)/2
    unsigned rank() const noexcept;
    /// Componentwise order; columns of different heights are incomparable.
    bool leq(const Column& other) const noexcept;
    /// Copy with row `i` (0-based) incremented by one.
    Column incremented(std::size_t i) const;
    /// Top `h` entries.
    Column truncated(std::size_t h) const;

    /// "[2;5]" (top to bottom).
    std::string to_string() const;

    friend auto operator<=>(const Column&, const Column&) = default;
    friend bool operator==(const Column&, const Column&) = default;

  private:
    std::vector<unsigned> entries_;
};

/// (1, 2, ..., h)
Column bottom_column(std::size_t h);
/// (k-h+1, ..., k)
Column top_column(std::size_t h, unsigned k);

/// All C(k,h) columns of P(h,k) in lexicographic order. Throws
/// std::invalid_argument unless 1 <= h <= k.
std::vector<Column> poset_elements(std::size_t h, unsigned k);

class Interval {
  public:
    /// Throws std::invalid_argument unless a, b are columns of the same height
    /// in P(h,k) with a <= b.
    Interval(unsigned k, Column bottom, Column top);

    static Interval full(std::size_t h, unsigned k) { return Interval(k, bottom_column(h), top_column(h, k)); }

    std::size_t height() const noexcept { return bottom_.height(); }
    unsigned k() const noexcept { return k_; }
    const Column& bottom() const noexcept { return bottom_; }
    const Column& top() const noexcept { return top_; }

    bool contains(const Column& c) const noexcept;
    std::vector<Column> elements() const;

  private:
    unsigned k_;
    Column bottom_;
    Column top_;
};

struct MaxChain {
    std::vector<Column> columns; ///< bottom .. top
    std::vector<std::size_t> steps; ///< columns[j+1] = columns[j] + e_{steps[j]}, rows 0-based

    std::size_t length() const noexcept { return columns.size(); }
    bool contains(const Column& c) const;

    friend bool operator==(const MaxChain& a, const MaxChain& b) { return a.columns == b.columns; }
};

/// Indices j into a chain's columns; Q* as a subchain.
struct DescentSet {
    std::vector<std::size_t> indices;

    std::size_t size() const noexcept { return indices.size(); }
    std::vector<Column> columns(const MaxChain& q) const;
};

/// Strict lexicographic order on maximal chains of one interval.
bool chain_precedes(const MaxChain& lhs, const MaxChain& rhs);

/// All maximal chains of `iv`, sorted by `chain_precedes`.
std::vector<MaxChain> enumerate_max_chains(const Interval& iv);

/// Q*: the chain positions j with steps[j-1] > steps[j] for which
/// columns[j-1] + e_{steps[j]} is again a column. Swapping the two steps there
/// yields a lexicographically smaller chain.
DescentSet compute_q_star(const Interval& iv, const MaxChain& q);

/// True iff `q` is the lexicographically least maximal chain of `iv` that
/// contains every column in `c`. Brute force; meant for tests.
bool is_smallest_containing(const Interval& iv, const MaxChain& q, std::span<const Column> c);

/// Generating function of size-m multichains of `iv` at the given weights,
/// computed as sum_Q z^{Q*} h_{m-|Q*|}(z_c : c in Q). Every element of `iv`
/// must have a weight.
mpz_class multichain_gf_eval(const Interval& iv, unsigned m, const std::map<Column, mpz_class>& weights);

} // namespace monocirc
