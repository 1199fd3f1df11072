#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace zm {

inline constexpr std::size_t kSieveHardLimit = 100'000'000;
inline constexpr std::size_t kSieveDefaultLimit = 10'000'000;

/// Immutable table of d(n), the number of positive divisors, for 1 <= n <= size().
class DivisorTable {
public:
    explicit DivisorTable(std::size_t n);

    std::size_t size() const noexcept { return d_.size() - 1; }
    std::uint32_t operator()(std::size_t n) const noexcept { return d_[n]; }
    /// d(1..N); element i is d(i + 1).
    std::span<const std::uint32_t> values() const noexcept { return {d_.data() + 1, size()}; }

private:
    std::vector<std::uint32_t> d_;  // d_[0] unused
};

/// Builds d(1..N) by adding one to every multiple of each m <= N.
/// Throws CapacityError when N exceeds the hard limit 1e8.
DivisorTable divisor_sieve(std::size_t n);

/// Effective limit for sieves built on demand: ZM_SIEVE_LIMIT if set, else 1e7.
std::size_t sieve_limit();

/// Process-wide table covering at least 1..n, grown on demand and shared
/// immutably. Throws CapacityError if n exceeds sieve_limit().
std::shared_ptr<const DivisorTable> shared_divisors(std::size_t n);

}  // namespace zm
