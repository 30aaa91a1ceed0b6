#pragma once

/// @file semiring.hpp
/// @brief Carriers a monotone circuit can be evaluated over.

#include "monocirc/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace monocirc {

/// Commutative semiring without a required zero: add, mul and an embedding of
/// the positive naturals. from_nat(1) must be the multiplicative identity.
template <class S>
concept Semiring = requires(const S& s, const typename S::value_type& a, const typename S::value_type& b,
                            std::uint64_t n) {
    typename S::value_type;
    { s.add(a, b) } -> std::convertible_to<typename S::value_type>;
    { s.mul(a, b) } -> std::convertible_to<typename S::value_type>;
    { s.from_nat(n) } -> std::convertible_to<typename S::value_type>;
};

/// Exact integers (GMP).
struct IntegerSemiring {
    using value_type = mpz_class;

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type from_nat(std::uint64_t n) const {
        mpz_class r;
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
        return r;
    }
};

/// 64-bit unsigned arithmetic that throws OverflowError instead of wrapping.
struct CheckedU64Semiring {
    using value_type = std::uint64_t;

    value_type add(value_type a, value_type b) const {
        value_type r;
        if (__builtin_add_overflow(a, b, &r)) {
            throw OverflowError("uint64 overflow in addition");
        }
        return r;
    }
    value_type mul(value_type a, value_type b) const {
        value_type r;
        if (__builtin_mul_overflow(a, b, &r)) {
            throw OverflowError("uint64 overflow in multiplication");
        }
        return r;
    }
    value_type from_nat(std::uint64_t n) const { return n; }
};

/// Exponent vector over a fixed number of variables.
struct Monomial {
    std::vector<unsigned> exponents;

    unsigned degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    if (r.exponents.size() < b.exponents.size()) {
        r.exponents.resize(b.exponents.size(), 0);
    }
    for (std::size_t i = 0; i < b.exponents.size(); ++i) {
        r.exponents[i] += b.exponents[i];
    }
    return r;
}

/// Sparse polynomial with positive integer coefficients.
using Polynomial = std::map<Monomial, mpz_class>;

/// Symbolic evaluation: expands the circuit into its monomial expansion.
/// Use `variable(i)` for the evaluation point.
struct PolynomialSemiring {
    using value_type = Polynomial;

    std::size_t num_vars = 0;

    value_type variable(std::size_t i) const {
        Monomial m{std::vector<unsigned>(num_vars, 0)};
        m.exponents.at(i) = 1;
        return {{m, 1}};
    }
    std::vector<value_type> variables() const {
        std::vector<value_type> vs;
        for (std::size_t i = 0; i < num_vars; ++i) {
            vs.push_back(variable(i));
        }
        return vs;
    }

    value_type add(const value_type& a, const value_type& b) const {
        value_type r = a;
        for (const auto& [m, c] : b) {
            r[m] += c;
        }
        return r;
    }
    value_type mul(const value_type& a, const value_type& b) const {
        value_type r;
        for (const auto& [ma, ca] : a) {
            for (const auto& [mb, cb] : b) {
                r[ma * mb] += ca * cb;
            }
        }
        return r;
    }
    value_type from_nat(std::uint64_t n) const {
        return {{Monomial{std::vector<unsigned>(num_vars, 0)}, IntegerSemiring{}.from_nat(n)}};
    }
};

} // namespace monocirc
