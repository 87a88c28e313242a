#include "qmf/errors.hpp"
#include "qmf/forms.hpp"

#include <mutex>

namespace qmf::forms {

Integer sigma(unsigned a, std::uint64_t n) {
  if (n == 0) throw InvalidInput("sigma needs n >= 1");
  Integer s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += pow_integer(Integer(d), a);
    const std::uint64_t e = n / d;
    if (e != d) s += pow_integer(Integer(e), a);
  }
  return s;
}

std::vector<Integer> sigma_table(unsigned a, std::size_t n) {
  std::vector<Integer> t(n + 1);
  for (std::size_t d = 1; d <= n; ++d) {
    const Integer p = pow_integer(Integer(d), a);
    for (std::size_t m = d; m <= n; m += d) t[m] += p;
  }
  return t;
}

Integer r4(std::uint64_t n) {
  if (n == 0) return 1;
  Integer s = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (d % 4 != 0) s += d;
    const std::uint64_t e = n / d;
    if (e != d && e % 4 != 0) s += e;
  }
  return 8 * s;
}

namespace {

// prod_{n>=1} (1 - q^n)^24 to order n, multiplying by the pentagonal series
// 24 times. Its coefficients are +-1, so each pass is additions only.
std::vector<Integer> eta24(std::size_t n) {
  std::vector<std::pair<std::size_t, int>> pent;
  for (long k = 0;; ++k) {
    bool any = false;
    for (long j : {k, -k}) {
      if (k == 0 && j != 0) continue;
      const long e = j * (3 * j - 1) / 2;
      if (e > static_cast<long>(n)) continue;
      pent.emplace_back(static_cast<std::size_t>(e), (k % 2 == 0) ? 1 : -1);
      any = true;
      if (k == 0) break;
    }
    if (!any) break;
  }
  std::vector<Integer> cur(n + 1), next(n + 1);
  cur[0] = 1;
  for (int pass = 0; pass < 24; ++pass) {
    for (auto& x : next) x = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (cur[i] == 0) continue;
      for (auto [e, s] : pent) {
        if (i + e > n) continue;
        if (s > 0) next[i + e] += cur[i];
        else next[i + e] -= cur[i];
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

struct TauCache {
  std::mutex mu;
  std::shared_ptr<const std::vector<Integer>> table;
};

TauCache& tau_cache() {
  static TauCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const std::vector<Integer>> tau_table(std::size_t n) {
  if (n > kTauLimit)
    throw OrderExceeded("tau requested to " + std::to_string(n) + ", limit " +
                        std::to_string(kTauLimit));
  auto& cache = tau_cache();
  std::lock_guard lock(cache.mu);
  if (!cache.table || cache.table->size() <= n) {
    std::size_t target = std::max<std::size_t>(n, 256);
    if (cache.table) target = std::min(kTauLimit, std::max(target, 2 * (cache.table->size() - 1)));
    auto eta = eta24(target - 1);
    auto t = std::make_shared<std::vector<Integer>>(target + 1);
    for (std::size_t k = 1; k <= target; ++k) (*t)[k] = eta[k - 1];
    cache.table = std::move(t);
  }
  return cache.table;
}

Integer tau(std::size_t n) {
  if (n == 0) throw InvalidInput("tau needs n >= 1");
  return (*tau_table(n))[n];
}

}  // namespace qmf::forms
