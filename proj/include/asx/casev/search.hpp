#pragma once

#include <cstdint>
#include <vector>

namespace asx::casev {

/// Largest max accepted by search_m; keeps every intermediate inside 128 bits.
constexpr std::uint64_t kSearchLimit = 2'000'000'000ULL;

/// Integer square root by Newton iteration.
unsigned __int128 isqrt(unsigned __int128 n);

/// Does m pass both tests: (m^2-2m+9)(9m^2-2m+1) is a perfect square and its
/// root divides m(7m^2-22m+7)?
bool search_candidate(std::uint64_t m);

/// All m in [1, max] passing search_candidate, ascending. jobs > 1 splits the
/// range over threads. Throws InvalidArgument for max = 0 or max > kSearchLimit.
std::vector<std::uint64_t> search_m(std::uint64_t max, unsigned jobs = 1);

}  // namespace asx::casev
