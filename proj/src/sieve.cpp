#include "zetamoments/sieve.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <string>

#include "zetamoments/errors.hpp"

namespace zm {

DivisorTable::DivisorTable(std::size_t n) : d_(n + 1, 0) {
    for (std::size_t m = 1; m <= n; ++m)
        for (std::size_t k = m; k <= n; k += m) ++d_[k];
}

DivisorTable divisor_sieve(std::size_t n) {
    if (n < 1) throw DomainError("divisor_sieve: N must be >= 1");
    if (n > kSieveHardLimit)
        throw CapacityError("divisor_sieve: N = " + std::to_string(n) + " exceeds 1e8");
    return DivisorTable(n);
}

std::size_t sieve_limit() {
    if (const char* env = std::getenv("ZM_SIEVE_LIMIT")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return std::min<std::size_t>(v, kSieveHardLimit);
    }
    return kSieveDefaultLimit;
}

std::shared_ptr<const DivisorTable> shared_divisors(std::size_t n) {
    static std::mutex mutex;
    static std::shared_ptr<const DivisorTable> table;
    if (n > sieve_limit())
        throw CapacityError("divisor table of size " + std::to_string(n) + " exceeds sieve limit " +
                            std::to_string(sieve_limit()));
    std::lock_guard lock(mutex);
    if (!table || table->size() < n) {
        // Grow geometrically so repeated slightly-larger requests stay cheap.
        std::size_t want = std::max<std::size_t>(n, 4096);
        if (table) want = std::max(want, std::min(2 * table->size(), sieve_limit()));
        table = std::make_shared<const DivisorTable>(divisor_sieve(want));
    }
    return table;
}

}  // namespace zm
