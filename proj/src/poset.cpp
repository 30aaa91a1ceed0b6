#include "monocirc/poset.hpp"

#include "monocirc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace monocirc {

bool Column::is_valid(unsigned k) const noexcept {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || entries_[i] > k) {
            return false;
        }
        if (i > 0 && entries_[i - 1] >= entries_[i]) {
            return false;
        }
    }
    return true;
}

unsigned Column::rank() const noexcept {
    const auto h = static_cast<unsigned>(entries_.size());
    return std::accumulate(entries_.begin(), entries_.end(), 0u) - h * (h + 1) / 2;
}

bool Column::leq(const Column& other) const noexcept {
    if (height() != other.height()) {
        return false;
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] > other.entries_[i]) {
            return false;
        }
    }
    return true;
}

Column Column::incremented(std::size_t i) const {
    Column c = *this;
    ++c.entries_.at(i);
    return c;
}

Column Column::truncated(std::size_t h) const {
    if (h > entries_.size()) {
        throw std::invalid_argument("cannot truncate a column to a larger height");
    }
    return Column({entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(h)});
}

std::string Column::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) {
            s += ';';
        }
        s += std::to_string(entries_[i]);
    }
    return s + "]";
}

Column bottom_column(std::size_t h) {
    std::vector<unsigned> e(h);
    std::iota(e.begin(), e.end(), 1u);
    return Column(std::move(e));
}

Column top_column(std::size_t h, unsigned k) {
    std::vector<unsigned> e(h);
    std::iota(e.begin(), e.end(), k - static_cast<unsigned>(h) + 1);
    return Column(std::move(e));
}

std::vector<Column> poset_elements(std::size_t h, unsigned k) {
    if (h < 1 || h > k) {
        throw std::invalid_argument("P(h,k) needs 1 <= h <= k");
    }
    std::vector<Column> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned)> rec = [&](unsigned next) {
        if (cur.size() == h) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned v = next; v + (h - cur.size() - 1) <= k; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

Interval::Interval(unsigned k, Column bottom, Column top) : k_(k), bottom_(std::move(bottom)), top_(std::move(top)) {
    if (bottom_.height() == 0 || bottom_.height() != top_.height()) {
        throw std::invalid_argument("interval endpoints must be nonempty columns of equal height");
    }
    if (!bottom_.is_valid(k_) || !top_.is_valid(k_)) {
        throw std::invalid_argument("interval endpoint is not a column of P(h,k)");
    }
    if (!bottom_.leq(top_)) {
        throw std::invalid_argument("interval bottom " + bottom_.to_string() + " is not below top " +
                                    top_.to_string());
    }
}

bool Interval::contains(const Column& c) const noexcept {
    return c.is_valid(k_) && bottom_.leq(c) && c.leq(top_);
}

std::vector<Column> Interval::elements() const {
    std::vector<Column> out;
    for (auto& c : poset_elements(height(), k_)) {
        if (contains(c)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

bool MaxChain::contains(const Column& c) const {
    return std::find(columns.begin(), columns.end(), c) != columns.end();
}

std::vector<Column> DescentSet::columns(const MaxChain& q) const {
    std::vector<Column> out;
    out.reserve(indices.size());
    for (auto j : indices) {
        out.push_back(q.columns.at(j));
    }
    return out;
}

bool chain_precedes(const MaxChain& lhs, const MaxChain& rhs) {
    const std::size_t n = std::min(lhs.columns.size(), rhs.columns.size());
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = lhs.columns[j];
        const auto& b = rhs.columns[j];
        if (a == b) {
            continue;
        }
        for (std::size_t i = a.height(); i-- > 0;) {
            if (a[i] != b[i]) {
                return a[i] < b[i];
            }
        }
    }
    return false;
}

std::vector<MaxChain> enumerate_max_chains(const Interval& iv) {
    std::vector<MaxChain> out;
    MaxChain cur{{iv.bottom()}, {}};
    const std::size_t h = iv.height();
    std::function<void()> walk = [&]() {
        const Column c = cur.columns.back();
        if (c == iv.top()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = 0; i < h; ++i) {
            if (c[i] >= iv.top()[i]) {
                continue;
            }
            Column next = c.incremented(i);
            if (!next.is_valid(iv.k())) {
                continue;
            }
            cur.columns.push_back(std::move(next));
            cur.steps.push_back(i);
            walk();
            cur.columns.pop_back();
            cur.steps.pop_back();
        }
    };
    walk();
    std::sort(out.begin(), out.end(), chain_precedes);
    return out;
}

DescentSet compute_q_star(const Interval& iv, const MaxChain& q) {
    DescentSet d;
    for (std::size_t j = 1; j + 1 < q.columns.size(); ++j) {
        if (q.steps[j - 1] > q.steps[j] && q.columns[j - 1].incremented(q.steps[j]).is_valid(iv.k())) {
            d.indices.push_back(j);
        }
    }
    return d;
}

bool is_smallest_containing(const Interval& iv, const MaxChain& q, std::span<const Column> c) {
    for (const auto& candidate : enumerate_max_chains(iv)) {
        if (std::all_of(c.begin(), c.end(), [&](const Column& x) { return candidate.contains(x); })) {
            return candidate == q;
        }
    }
    return false;
}

mpz_class multichain_gf_eval(const Interval& iv, unsigned m, const std::map<Column, mpz_class>& weights) {
    mpz_class total = 0;
    for (const auto& q : enumerate_max_chains(iv)) {
        const auto star = compute_q_star(iv, q);
        if (star.size() > m) {
            continue;
        }
        mpz_class prefix = 1;
        for (auto j : star.indices) {
            prefix *= weights.at(q.columns[j]);
        }
        std::vector<mpz_class> z;
        z.reserve(q.columns.size());
        for (const auto& c : q.columns) {
            z.push_back(weights.at(c));
        }
        total += prefix * h_eval(m - static_cast<unsigned>(star.size()), z);
    }
    return total;
}

} // namespace monocirc
