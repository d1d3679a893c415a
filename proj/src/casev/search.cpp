#include "asx/casev/search.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "asx/algebra/errors.hpp"

namespace asx::casev {

using u128 = unsigned __int128;
using i128 = __int128;

u128 isqrt(u128 n) {
  if (n < 2) return n;
  int bits = 0;
  for (u128 t = n; t; t >>= 1) ++bits;
  u128 x = u128(1) << ((bits + 1) / 2);
  while (true) {
    const u128 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

bool search_candidate(std::uint64_t m) {
  const u128 mm = m;
  const u128 f = mm * mm - 2 * mm + 9;
  const u128 g = 9 * mm * mm - 2 * mm + 1;
  const u128 prod = f * g;
  const u128 root = isqrt(prod);
  if (root * root != prod) return false;
  const i128 sm = static_cast<i128>(m);
  i128 num = sm * (7 * sm * sm - 22 * sm + 7);
  if (num < 0) num = -num;
  return static_cast<u128>(num) % root == 0;
}

std::vector<std::uint64_t> search_m(std::uint64_t max, unsigned jobs) {
  if (max == 0) throw Error(ErrorKind::InvalidArgument, "search bound must be at least 1");
  if (max > kSearchLimit) {
    throw Error(ErrorKind::InvalidArgument, "search bound above " + std::to_string(kSearchLimit));
  }
  jobs = std::max(1u, std::min<unsigned>(jobs, 256));
  std::vector<std::vector<std::uint64_t>> found(jobs);
  auto work = [&](unsigned w) {
    const std::uint64_t span = max / jobs + 1;
    const std::uint64_t lo = 1 + w * span;
    const std::uint64_t hi = std::min<std::uint64_t>(max, lo + span - 1);
    for (std::uint64_t m = lo; m <= hi && lo <= max; ++m) {
      if (search_candidate(m)) found[w].push_back(m);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> out;
  for (const auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace asx::casev
