#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace monocirc {

/// Integer partition lambda_1 >= lambda_2 >= ... > 0. Trailing zeros passed to
/// the constructor are dropped, so `length()` is the number of nonzero parts.
class Partition {
  public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    std::span<const unsigned> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    unsigned size() const noexcept;
    /// 1-based part lambda_i, zero past the end.
    unsigned part(std::size_t i) const noexcept { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<unsigned> parts_;
};

/// All partitions of `n`, largest part first, in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned n);

} // namespace monocirc
