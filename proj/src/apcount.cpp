// Copyright 2026 The apbound Authors
// SPDX-License-Identifier: Apache-2.0

#include "apbound/apcount.hpp"

#include <bit>
#include <condition_variable>
#include <mutex>
#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "apbound/errors.hpp"

namespace apbound {

namespace {

int phi(int k) {
  int r = 0;
  for (int i = 1; i <= k; ++i)
    if (std::gcd(i, k) == 1) ++r;
  return r;
}

inline std::uint64_t rotl_n(std::uint64_t w, int s, int n, std::uint64_t mask) {
  if (s == 0) return w;
  return ((w << s) | (w >> (n - s))) & mask;
}

}  // namespace

ApCounter::ApCounter(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > 64) throw std::invalid_argument("count_aps: n must be in 1..64");
  if (k < 3) throw std::invalid_argument("count_aps: k must be >= 3");
  if (k > n) throw std::invalid_argument("count_aps: k exceeds n");
  for (int b = 1; b < n; ++b) {
    if (n / std::gcd(n, b) < k) continue;  // some of a, a+b, ... would coincide
    valid_b_.push_back(b);
    if (k <= 5) {
      Stride s{};
      for (int i = 1; i < k; ++i)
        s.shifts[i - 1] = static_cast<int>((static_cast<long>(i) * b) % n);
      strides_.push_back(s);
    }
  }
  if (k > 5) return;  // the multiplicity shortcuts below are proven for k <= 5 only
  auto coset_masks = [n](int order) {
    std::vector<std::uint64_t> masks;
    const int step = n / order;
    for (int c = 0; c < step; ++c) {
      std::uint64_t m = 0;
      for (int j = 0; j < order; ++j) m |= std::uint64_t{1} << (n - 1 - (c + j * step));
      masks.push_back(m);
    }
    return masks;
  };
  if (n % k == 0) {
    coset_ = coset_masks(k);
    coset_multiplicity_ = static_cast<long>(k) * phi(k);
  }
  if (k == 4 && n % 5 == 0) punctured_ = coset_masks(5);
}

long ApCounter::count_by_dedup(std::uint64_t word, std::uint64_t mask) const {
  std::vector<std::uint64_t> sets;
  for (int b : valid_b_) {
    for (int a = 0; a < n_; ++a) {
      std::uint64_t set = 0;
      bool inside = true;
      for (int i = 0; i < k_; ++i) {
        const int e = static_cast<int>((a + static_cast<long>(i) * b) % n_);
        const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - e);
        if (!(word & bit)) {
          inside = false;
          break;
        }
        set |= bit;
      }
      if (inside) sets.push_back(set & mask);
    }
  }
  std::sort(sets.begin(), sets.end());
  return static_cast<long>(std::unique(sets.begin(), sets.end()) - sets.begin());
}

long ApCounter::count(std::uint64_t word) const {
  const std::uint64_t mask = n_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  word &= mask;
  if (k_ > 5) return count_by_dedup(word, mask);
  long ordered = 0;
  for (const Stride& s : strides_) {
    std::uint64_t t = word;
    for (int i = 0; i < k_ - 1 && t; ++i) t &= rotl_n(word, s.shifts[i], n_, mask);
    ordered += std::popcount(t);
  }
  long full_cosets = 0;
  for (std::uint64_t m : coset_)
    if ((word & m) == m) ++full_cosets;
  long punctured_sets = 0;
  for (std::uint64_t m : punctured_) {
    const int missing = std::popcount(m & ~word);
    if (missing == 0)
      punctured_sets += 5;  // every one-point deletion of the coset lies in the subset
    else if (missing == 1)
      punctured_sets += 1;
  }
  // Generic sets carry 2 ordered generators; anomalous families are put back
  // with their exact multiplicities (phi(5) = 4 for the punctured family).
  return (ordered - full_cosets * coset_multiplicity_) / 2 + full_cosets - punctured_sets;
}

long count_aps(std::uint64_t word, int n, int k) { return ApCounter(n, k).count(word); }

long count_aps(const BinaryNecklace& necklace, int k) {
  return ApCounter(necklace.length, k).count(necklace.word);
}

namespace {

struct Reduction {
  long best = -1;
  std::uint64_t best_seq = ~std::uint64_t{0};
  std::uint64_t best_word = 0;
  std::map<long, long> histogram;

  void take(long count, std::uint64_t seq, std::uint64_t word, bool hist) {
    if (best < 0 || count < best || (count == best && seq < best_seq)) {
      best = count;
      best_seq = seq;
      best_word = word;
    }
    if (hist) ++histogram[count];
  }
  void merge(const Reduction& other, bool hist) {
    if (other.best >= 0 &&
        (best < 0 || other.best < best || (other.best == best && other.best_seq < best_seq))) {
      best = other.best;
      best_seq = other.best_seq;
      best_word = other.best_word;
    }
    if (hist)
      for (const auto& [c, m] : other.histogram) histogram[c] += m;
  }
};

// Bounded batch queue feeding counting workers; the generator is cheap
// relative to counting, so a single producer keeps workers saturated.
class BatchQueue {
 public:
  explicit BatchQueue(size_t limit) : limit_(limit) {}

  void push(std::vector<std::pair<std::uint64_t, std::uint64_t>>&& batch) {
    std::unique_lock lk(m_);
    notfull_.wait(lk, [&] { return q_.size() < limit_; });
    q_.push_back(std::move(batch));
    lk.unlock();
    notempty_.notify_one();
  }
  bool pop(std::vector<std::pair<std::uint64_t, std::uint64_t>>& batch) {
    std::unique_lock lk(m_);
    notempty_.wait(lk, [&] { return !q_.empty() || done_; });
    if (q_.empty()) return false;
    batch = std::move(q_.front());
    q_.erase(q_.begin());
    lk.unlock();
    notfull_.notify_one();
    return true;
  }
  void close() {
    std::lock_guard lk(m_);
    done_ = true;
    notempty_.notify_all();
  }

 private:
  std::mutex m_;
  std::condition_variable notempty_, notfull_;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> q_;
  size_t limit_;
  bool done_ = false;
};

ApStatistics scan_necklaces(int n, int k, int D, const ApOptions& opt) {
  if (n > opt.enumeration_cap)
    throw cap_exceeded("min_aps: n=" + std::to_string(n) + " exceeds enumeration cap " +
                       std::to_string(opt.enumeration_cap));
  if (D < 0 || D > n) throw std::invalid_argument("min_aps: D out of range");
  const ApCounter counter(n, k);
  ApStatistics stats;
  stats.n = n;
  stats.k = k;
  stats.D = D;

  const int threads = std::max(1, opt.threads);
  Reduction total;
  if (threads == 1) {
    std::uint64_t seq = 0;
    stream(n, D, [&](const BinaryNecklace& v) {
      total.take(counter.count(v.word), seq++, v.word, opt.histogram);
    });
  } else {
    BatchQueue queue(2 * threads);
    std::vector<Reduction> partial(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
        while (queue.pop(batch))
          for (auto [word, seq] : batch)
            partial[w].take(counter.count(word), seq, word, opt.histogram);
      });
    }
    constexpr size_t kBatch = 4096;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> batch;
    batch.reserve(kBatch);
    std::uint64_t seq = 0;
    stream(n, D, [&](const BinaryNecklace& v) {
      batch.emplace_back(v.word, seq++);
      if (batch.size() >= kBatch) {
        queue.push(std::move(batch));
        batch = {};
        batch.reserve(kBatch);
      }
    });
    if (!batch.empty()) queue.push(std::move(batch));
    queue.close();
    for (auto& t : pool) t.join();
    for (const Reduction& r : partial) total.merge(r, opt.histogram);
  }

  stats.min_count = total.best;
  stats.witness = BinaryNecklace{n, total.best_word, D};
  stats.histogram = std::move(total.histogram);
  return stats;
}

}  // namespace

ApStatistics min_aps(int n, int k, int D, const ApOptions& opt) {
  return scan_necklaces(n, k, D, opt);
}

std::map<long, long> distribution(int n, int k, int D, const ApOptions& opt) {
  ApOptions o = opt;
  o.histogram = true;
  return scan_necklaces(n, k, D, o).histogram;
}

WTable w_table(int k, int n_min, int n_max, const ApOptions& opt) {
  if (n_min < std::max(3, k) || n_max < n_min)
    throw std::invalid_argument("w_table: bad n range");
  WTable table;
  table.k = k;
  table.n_min = n_min;
  for (int n = n_min; n <= n_max; ++n) {
    std::vector<std::optional<long>> row(n + 1);
    for (int D = 0; D <= n; ++D) {
      try {
        row[D] = min_aps(n, k, D, opt).min_count;
      } catch (const cap_exceeded&) {
        row[D] = std::nullopt;  // marked uncomputed, never silently truncated
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace apbound
