#include "grank/strata.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "grank/errors.hpp"

namespace grank {

const char* pairing_name(Pairing p) {
  switch (p) {
    case Pairing::AB: return "ab";
    case Pairing::AC: return "ac";
    default: return "bc";
  }
}

Int StrataProfile::total() const {
  Int s = 0;
  for (const auto& [r, c] : counts) s += c;
  return s;
}

std::size_t StrataProfile::max_rank() const {
  std::size_t m = 0;
  for (const auto& [r, c] : counts)
    if (c > 0) m = std::max(m, r);
  return m;
}

Int StrataProfile::cumulative(std::size_t r) const {
  Int s = 0;
  for (const auto& [rr, c] : counts)
    if (rr <= r) s += c;
  return s;
}

int default_thread_count() {
  if (const char* env = std::getenv("GRANK_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1 && n <= 512) return static_cast<int>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace {

// Walk `count` covectors of F_p^d starting at linear index `start`
// (mixed-radix little-endian), accumulating a rank histogram.
void enumerate_range(const FpSliceBasis& sl, const PrimeField& f, uint64_t start, uint64_t count,
                     std::vector<uint64_t>& hist) {
  const std::size_t d = sl.slices.size();
  const std::size_t n = sl.rows * sl.cols;
  const uint32_t p = f.p();
  std::vector<uint32_t> digits(d, 0);
  std::vector<uint32_t> m(n, 0);
  uint64_t idx = start;
  for (std::size_t q = 0; q < d && idx; ++q) {
    digits[q] = static_cast<uint32_t>(idx % p);
    idx /= p;
    if (digits[q]) {
      const uint32_t x = digits[q];
      const auto& s = sl.slices[q];
      for (std::size_t u = 0; u < n; ++u) m[u] = f.add(m[u], f.mul(x, s[u]));
    }
  }
  std::vector<uint32_t> scratch(n);
  for (uint64_t step = 0; step < count; ++step) {
    scratch = m;
    ++hist[fp_rank_inplace(scratch.data(), sl.rows, sl.cols, f)];
    // odometer increment; adding a slice once per carried digit is exact mod p
    for (std::size_t q = 0; q < d; ++q) {
      const auto& s = sl.slices[q];
      for (std::size_t u = 0; u < n; ++u) m[u] = f.add(m[u], s[u]);
      if (++digits[q] < p) break;
      digits[q] = 0;
    }
  }
}

}  // namespace

StrataProfile stratum_counts(const Tensor3& t, Axis axis, uint32_t p, uint64_t budget,
                             int threads) {
  PrimeField f(p);
  const std::size_t d = t.dim(axis);
  uint64_t total = 1;
  for (std::size_t q = 0; q < d; ++q) {
    if (total > budget / p)
      fail(ErrorCode::BudgetExceeded, "stratum enumeration p^d exceeds budget (p=" +
                                          std::to_string(p) + ", d=" + std::to_string(d) + ")");
    total *= p;
  }
  if (total > budget) fail(ErrorCode::BudgetExceeded, "stratum enumeration exceeds budget");
  auto sl = basis_slices_mod_p(t, axis, f);
  const std::size_t maxr = std::min(sl.rows, sl.cols);

  if (threads <= 0) threads = default_thread_count();
  const uint64_t min_chunk = 4096;
  int nchunks = static_cast<int>(std::min<uint64_t>(256, std::max<uint64_t>(1, total / min_chunk)));
  if (threads == 1) nchunks = 1;
  std::vector<std::vector<uint64_t>> hists(nchunks, std::vector<uint64_t>(maxr + 1, 0));
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= nchunks) return;
      const uint64_t lo = total * static_cast<uint64_t>(c) / nchunks;
      const uint64_t hi = total * static_cast<uint64_t>(c + 1) / nchunks;
      enumerate_range(sl, f, lo, hi - lo, hists[c]);
    }
  };
  const int nthreads = std::min(threads, nchunks);
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  StrataProfile prof;
  prof.axis = axis;
  prof.prime = p;
  for (int c = 0; c < nchunks; ++c)
    for (std::size_t r = 0; r <= maxr; ++r)
      if (hists[c][r]) prof.counts[r] += hists[c][r];
  return prof;
}

Int sigma_hat_from_profile(const StrataProfile& prof, std::size_t other_dim) {
  Int s = 0;
  const Int p = prof.prime;
  for (const auto& [r, c] : prof.counts) {
    if (r > other_dim) fail(ErrorCode::BadParams, "profile rank exceeds pairing dimension");
    s += c * boost::multiprecision::pow(p, static_cast<unsigned>(other_dim - r));
  }
  return s;
}

Int sigma_hat_count(const Tensor3& t, Pairing pairing, uint32_t p, uint64_t budget, int threads) {
  const auto& d = t.dims();
  Axis first, second;
  std::size_t first_other, second_other;
  switch (pairing) {
    case Pairing::AB:
      first = Axis::A; second = Axis::B; first_other = d[1]; second_other = d[0];
      break;
    case Pairing::AC:
      first = Axis::A; second = Axis::C; first_other = d[2]; second_other = d[0];
      break;
    default:
      first = Axis::B; second = Axis::C; first_other = d[2]; second_other = d[1];
  }
  // enumerate whichever side has fewer covectors
  const bool use_first = t.dim(first) <= t.dim(second);
  const Axis axis = use_first ? first : second;
  const std::size_t other = use_first ? first_other : second_other;
  auto prof = stratum_counts(t, axis, p, budget, threads);
  return sigma_hat_from_profile(prof, other);
}

}  // namespace grank
