#include "sheets/partition.hpp"

#include <charconv>
#include <functional>
#include <numeric>

namespace sheets {

Partition::Partition(std::vector<std::size_t> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0) {
            throw PartitionError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw PartitionError("partition " + to_string() + " is not weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

Partition Partition::parse(std::string_view text)
{
    std::vector<std::size_t> parts;
    while (true) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw PartitionError("malformed partition: expected comma-separated positive integers, got '" +
                                 std::string(token) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition transpose(const Partition& lambda)
{
    std::vector<std::size_t> cols(lambda.largest(), 0);
    for (auto p : lambda.parts()) {
        for (std::size_t j = 0; j < p; ++j) {
            ++cols[j];
        }
    }
    return Partition(std::move(cols));
}

std::vector<std::size_t> gaps(const Partition& lambda)
{
    std::vector<std::size_t> g;
    for (std::size_t i = 1; i <= lambda.length(); ++i) {
        g.push_back(lambda.part(i) - lambda.part(i + 1));
    }
    return g;
}

std::size_t dim_G_orbit(const Partition& lambda)
{
    const std::size_t n = lambda.size();
    std::size_t sum_sq = 0;
    const Partition columns = transpose(lambda);
    for (auto c : columns.parts()) {
        sum_sq += c * c;
    }
    return n * n - sum_sq;
}

std::size_t dim_K_orbit(const Partition& lambda)
{
    return dim_G_orbit(lambda) / 2;
}

std::vector<Partition> partitions_of(std::size_t n)
{
    std::vector<Partition> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    rec(n, n);
    return out;
}

}  // namespace sheets
