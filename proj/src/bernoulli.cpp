#include "zeta/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta {

namespace {

struct BernoulliCache {
  std::mutex mutex;
  // even[k] = B_{2k}; even[0] = B_0 = 1.
  std::vector<mpq_class> even{mpq_class(1)};
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

// Extends the table to include B_{2k_max}. Caller holds the mutex.
void extend(std::vector<mpq_class>& even, int k_max) {
  const mpq_class b1(-1, 2);
  for (int k = static_cast<int>(even.size()); k <= k_max; ++k) {
    const unsigned long n = 2UL * static_cast<unsigned long>(k);
    // B_n = -1/(n+1) * sum_{j<n} C(n+1, j) B_j; odd B_j vanish except B_1.
    mpz_class binom;
    mpq_class sum(0);
    for (unsigned long j = 0; j < n; j += 2) {
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, j);
      sum += mpq_class(binom) * even[j / 2];
    }
    mpz_bin_uiui(binom.get_mpz_t(), n + 1, 1);
    sum += mpq_class(binom) * b1;
    mpq_class bn = -sum / mpq_class(static_cast<long>(n + 1));
    bn.canonicalize();
    even.push_back(std::move(bn));
  }
}

}  // namespace

mpq_class bernoulli_even(int k) {
  if (k < 1) throw std::invalid_argument("bernoulli_even: k must be >= 1, got " + std::to_string(k));
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  if (static_cast<int>(c.even.size()) <= k) extend(c.even, k);
  return c.even[static_cast<std::size_t>(k)];
}

hp::Real bernoulli_even_real(int k) {
  const mpq_class q = bernoulli_even(k);
  hp::Real r;
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

void clear_bernoulli_cache() {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mutex);
  c.even.assign(1, mpq_class(1));
}

}  // namespace zeta
