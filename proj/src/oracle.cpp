#include "monocirc/oracle.hpp"

#include "monocirc/errors.hpp"

#include <stdexcept>

namespace monocirc {

bool Tableau::is_semistandard(unsigned k) const {
    if (rows.size() != shape.length()) {
        return false;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != shape.part(i + 1)) {
            return false;
        }
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const unsigned v = rows[i][j];
            if (v < 1 || v > k) {
                return false;
            }
            if (j > 0 && rows[i][j - 1] > v) {
                return false;
            }
            if (i > 0 && rows[i - 1][j] >= v) {
                return false;
            }
        }
    }
    return true;
}

Monomial Tableau::weight(unsigned k) const {
    Monomial m{std::vector<unsigned>(k, 0)};
    for (const auto& row : rows) {
        for (unsigned v : row) {
            ++m.exponents.at(v - 1);
        }
    }
    return m;
}

namespace {

struct RowFiller {
    const Partition& shape;
    unsigned k;
    std::vector<unsigned> col_height;
    Tableau t;
    const std::function<void(const Tableau&)>& visit;

    void fill(std::size_t i, std::size_t j) {
        if (i == shape.length()) {
            visit(t);
            return;
        }
        if (j == shape.part(i + 1)) {
            fill(i + 1, 0);
            return;
        }
        unsigned lo = 1;
        if (j > 0) {
            lo = std::max(lo, t.rows[i][j - 1]);
        }
        if (i > 0) {
            lo = std::max(lo, t.rows[i - 1][j] + 1);
        }
        // Leave room for the cells below in this column.
        const unsigned below = col_height[j] - 1 - static_cast<unsigned>(i);
        if (below >= k) {
            return;
        }
        const unsigned hi = k - below;
        for (unsigned v = lo; v <= hi; ++v) {
            t.rows[i][j] = v;
            fill(i, j + 1);
        }
    }
};

std::vector<unsigned> column_heights(const Partition& shape) {
    const auto conj = shape.conjugate();
    return {conj.parts().begin(), conj.parts().end()};
}

Tableau blank_tableau(const Partition& shape) {
    Tableau t{shape, {}};
    for (std::size_t i = 1; i <= shape.length(); ++i) {
        t.rows.emplace_back(shape.part(i), 0);
    }
    return t;
}

} // namespace

void for_each_ssyt(const Partition& shape, unsigned k, const std::function<void(const Tableau&)>& visit) {
    if (shape.length() > k) {
        return;
    }
    RowFiller f{shape, k, column_heights(shape), blank_tableau(shape), visit};
    f.fill(0, 0);
}

std::vector<Tableau> enumerate_ssyt(const Partition& shape, unsigned k) {
    std::vector<Tableau> out;
    for_each_ssyt(shape, k, [&out](const Tableau& t) { out.push_back(t); });
    return out;
}

std::vector<Tableau> enumerate_ssyt_by_columns(const Partition& shape, unsigned k) {
    std::vector<Tableau> out;
    const auto heights = column_heights(shape);
    Tableau t = blank_tableau(shape);

    // Column j is a strictly increasing run of heights[j] entries, each at
    // least the entry to its left.
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t j, std::size_t i) {
        if (j == heights.size()) {
            out.push_back(t);
            return;
        }
        if (i == heights[j]) {
            fill(j + 1, 0);
            return;
        }
        unsigned lo = i > 0 ? t.rows[i - 1][j] + 1 : 1;
        if (j > 0) {
            lo = std::max(lo, t.rows[i][j - 1]);
        }
        for (unsigned v = lo; v <= k; ++v) {
            t.rows[i][j] = v;
            fill(j, i + 1);
        }
    };
    if (shape.length() <= k) {
        fill(0, 0);
    }
    return out;
}

mpz_class schur_eval(const Partition& shape, std::span<const mpz_class> point) {
    const auto k = static_cast<unsigned>(point.size());
    mpz_class sum = 0;
    for_each_ssyt(shape, k, [&](const Tableau& t) {
        mpz_class term = 1;
        for (const auto& row : t.rows) {
            for (unsigned v : row) {
                term *= point[v - 1];
            }
        }
        sum += term;
    });
    return sum;
}

mpz_class h_eval(unsigned m, std::span<const mpz_class> point) {
    if (point.empty()) {
        return m == 0 ? 1 : 0;
    }
    mpz_class acc = 0;
    std::vector<mpz_class> last_powers(m + 1, mpz_class(1));
    for (unsigned a = 1; a <= m; ++a) {
        last_powers[a] = last_powers[a - 1] * point.back();
    }
    // Distribute the degree over the variables: exponent of x_i, then recurse.
    std::function<void(std::size_t, unsigned, const mpz_class&)> rec = [&](std::size_t i, unsigned rem,
                                                                          const mpz_class& prefix) {
        if (i + 1 == point.size()) {
            acc += prefix * last_powers[rem];
            return;
        }
        mpz_class p = prefix;
        for (unsigned a = 0; a <= rem; ++a) {
            rec(i + 1, rem - a, p);
            p *= point[i];
        }
    };
    rec(0, m, mpz_class(1));
    return acc;
}

mpz_class e_eval(unsigned m, std::span<const mpz_class> point) {
    if (m > point.size()) {
        return 0;
    }
    mpz_class acc = 0;
    std::function<void(std::size_t, unsigned, const mpz_class&)> rec = [&](std::size_t start, unsigned left,
                                                                          const mpz_class& prefix) {
        if (left == 0) {
            acc += prefix;
            return;
        }
        for (std::size_t i = start; i + left <= point.size(); ++i) {
            rec(i + 1, left - 1, prefix * point[i]);
        }
    };
    rec(0, m, mpz_class(1));
    return acc;
}

namespace {
struct CapReached {};
} // namespace

std::uint64_t count_ssyt(const Partition& shape, unsigned k, std::uint64_t cap) {
    std::uint64_t n = 0;
    try {
        for_each_ssyt(shape, k, [&](const Tableau&) {
            if (++n > cap) {
                throw CapReached{};
            }
        });
    } catch (const CapReached&) {
    }
    return n;
}

std::map<Monomial, std::uint64_t> schur_poly_map(const Partition& shape, unsigned k, std::size_t cap) {
    std::map<Monomial, std::uint64_t> poly;
    std::size_t seen = 0;
    for_each_ssyt(shape, k, [&](const Tableau& t) {
        if (++seen > cap) {
            throw EnumerationLimitError("more than " + std::to_string(cap) + " tableaux for shape " +
                                        shape.to_string());
        }
        ++poly[t.weight(k)];
    });
    return poly;
}

} // namespace monocirc
