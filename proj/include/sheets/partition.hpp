#ifndef SHEETS_PARTITION_HPP
#define SHEETS_PARTITION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sheets {

class PartitionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Weakly decreasing sequence of positive integers. Input in any other order
// is rejected rather than sorted.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> parts);

    // "4,3,1"
    static Partition parse(std::string_view text);

    const std::vector<std::size_t>& parts() const { return parts_; }
    // Number of parts (delta).
    std::size_t length() const { return parts_.size(); }
    // Sum of parts (N).
    std::size_t size() const { return size_; }
    // lambda_i for 1-based i, 0 beyond the last part.
    std::size_t part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    std::size_t largest() const { return parts_.empty() ? 0 : parts_.front(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> parts_;
    std::size_t size_ = 0;
};

Partition transpose(const Partition& lambda);

// gap_i = lambda_i - lambda_{i+1}, with lambda_{delta+1} = 0.
std::vector<std::size_t> gaps(const Partition& lambda);

// N^2 - sum of squared transpose parts.
std::size_t dim_G_orbit(const Partition& lambda);

std::size_t dim_K_orbit(const Partition& lambda);

// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(std::size_t n);

}  // namespace sheets

#endif
