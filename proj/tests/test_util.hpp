#pragma once

#include <cstdint>
#include <vector>

namespace testutil {

inline std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> sieve(n + 1, true);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n; j += i) sieve[j] = false;
    }
    return out;
}

inline std::vector<std::uint32_t> odd_primes_from_5(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p : primes_up_to(n))
        if (p >= 5) out.push_back(p);
    return out;
}

}  // namespace testutil
