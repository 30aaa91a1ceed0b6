#pragma once

/// @file oracle.hpp
/// @brief Brute-force symmetric functions by direct enumeration.
///
/// Everything here is deliberately naive and independent of the circuit
/// builders; it is the ground truth the builders are checked against.
/// Tableau entries are 1-based (x_1..x_k); evaluation points are 0-based spans.

#include "monocirc/partition.hpp"
#include "monocirc/semiring.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

namespace monocirc {

struct Tableau {
    Partition shape;
    std::vector<std::vector<unsigned>> rows;

    /// Rows weakly increase, columns strictly increase, entries in [1, k].
    bool is_semistandard(unsigned k) const;
    Monomial weight(unsigned k) const;

    friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows <=> b.rows; }
    friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows == b.rows; }
};

/// Visit every SSYT of `shape` with entries <= k, filling cells row by row.
/// Order is lexicographic on the row-major entry sequence.
void for_each_ssyt(const Partition& shape, unsigned k, const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> enumerate_ssyt(const Partition& shape, unsigned k);

/// Second, independent strategy: fills one column at a time, left to right.
/// Yields the same set as `enumerate_ssyt` in a different order.
std::vector<Tableau> enumerate_ssyt_by_columns(const Partition& shape, unsigned k);

/// s_shape(point) as the sum of x^T over all tableaux; k = point.size().
mpz_class schur_eval(const Partition& shape, std::span<const mpz_class> point);

/// h_m(point): sum over all degree-m monomials.
mpz_class h_eval(unsigned m, std::span<const mpz_class> point);

/// e_m(point): sum over all m-subsets of the variables.
mpz_class e_eval(unsigned m, std::span<const mpz_class> point);

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Monomial expansion of s_shape(x_1..x_k); coefficients are Kostka numbers.
/// Throws EnumerationLimitError once more than `cap` tableaux are seen.
std::map<Monomial, std::uint64_t> schur_poly_map(const Partition& shape, unsigned k,
                                                 std::size_t cap = default_enumeration_cap);

/// Number of SSYT of `shape` with entries <= k, counting stops at cap + 1.
std::uint64_t count_ssyt(const Partition& shape, unsigned k, std::uint64_t cap);

} // namespace monocirc
