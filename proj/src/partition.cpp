#include "monocirc/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace monocirc {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>{})) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
}

unsigned Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

Partition Partition::conjugate() const {
    if (parts_.empty()) {
        return {};
    }
    std::vector<unsigned> conj(parts_.front(), 0);
    for (unsigned p : parts_) {
        for (unsigned j = 0; j < p; ++j) {
            ++conj[j];
        }
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) {
            s += ',';
        }
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rem, unsigned max_part) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned p = std::min(rem, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace monocirc
