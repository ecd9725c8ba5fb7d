#include "abelcode/mindist.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace abelcode {

const char* method_name(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::Gray:
      return "gray";
    case DistanceMethod::Exhaustive:
      return "exhaustive";
    case DistanceMethod::BrouwerZimmermann:
      return "brouwer-zimmermann";
    case DistanceMethod::Auto:
      break;
  }
  return "auto";
}

namespace {

using Words = std::vector<u64>;

Words pack_row(std::span<const Sym> row) {
  Words w((row.size() + 63) / 64, 0);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j]) w[j / 64] |= u64{1} << (j % 64);
  }
  return w;
}

std::vector<Sym> unpack(const Words& w, std::size_t len) {
  std::vector<Sym> out(len, 0);
  for (std::size_t j = 0; j < len; ++j) out[j] = (w[j / 64] >> (j % 64)) & 1;
  return out;
}

unsigned popcount(const Words& w) {
  unsigned c = 0;
  for (auto x : w) c += static_cast<unsigned>(std::popcount(x));
  return c;
}

std::size_t weight(std::span<const Sym> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Sym x) { return x != 0; }));
}

// Shared state of a search: best word so far, work counter, stop flag.
struct Search {
  const DistanceOptions& opt;
  std::size_t length;
  std::atomic<u64> best;
  std::atomic<u64> work{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<Sym> witness;

  Search(const DistanceOptions& o, std::size_t l) : opt(o), length(l), best(l + 1) {}

  void offer(u64 w, const std::vector<Sym>& word) {
    if (w == 0 || w >= best.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(mu);
    if (w < best.load()) {
      best = w;
      witness = word;
    }
    if (opt.target && w < *opt.target) stop = true;
  }

  void charge(u64 n) {
    const u64 done = work.fetch_add(n, std::memory_order_relaxed) + n;
    if (opt.budget && done >= opt.budget) stop = true;
  }
};

// --- Gray-code walk over all binary messages -------------------------------

template <std::size_t W>
void gray_chunk(const std::vector<Words>& rows, std::size_t low_bits, u64 chunk, std::size_t length, Search& s) {
  const std::size_t k = rows.size();
  std::array<u64, W> acc{};
  for (std::size_t b = low_bits; b < k; ++b) {
    if ((chunk >> (b - low_bits)) & 1) {
      for (std::size_t w = 0; w < W; ++w) acc[w] ^= rows[b][w];
    }
  }
  std::vector<std::array<u64, W>> r(low_bits);
  for (std::size_t b = 0; b < low_bits; ++b) {
    for (std::size_t w = 0; w < W; ++w) r[b][w] = rows[b][w];
  }
  auto report = [&](const std::array<u64, W>& a) {
    unsigned c = 0;
    for (std::size_t w = 0; w < W; ++w) c += static_cast<unsigned>(std::popcount(a[w]));
    if (c != 0 && c < s.best.load(std::memory_order_relaxed)) {
      s.offer(c, unpack(Words(a.begin(), a.end()), length));
    }
  };
  report(acc);
  const u64 total = u64{1} << low_bits;
  constexpr u64 kBlock = u64{1} << 16;
  for (u64 start = 1; start < total; start += kBlock) {
    if (s.stop.load(std::memory_order_relaxed)) return;
    const u64 end = std::min(total, start + kBlock);
    u64 local_best = s.best.load(std::memory_order_relaxed);
    for (u64 i = start; i < end; ++i) {
      const auto& row = r[std::countr_zero(i)];
      unsigned c = 0;
      for (std::size_t w = 0; w < W; ++w) {
        acc[w] ^= row[w];
        c += static_cast<unsigned>(std::popcount(acc[w]));
      }
      if (c < local_best && c != 0) {
        report(acc);
        local_best = s.best.load(std::memory_order_relaxed);
      }
    }
    s.charge(end - start);
  }
  s.charge(1);
}

void gray_chunk_dynamic(const std::vector<Words>& rows, std::size_t low_bits, u64 chunk, std::size_t length, Search& s) {
  const std::size_t k = rows.size();
  const std::size_t words = rows.empty() ? 0 : rows[0].size();
  Words acc(words, 0);
  for (std::size_t b = low_bits; b < k; ++b) {
    if ((chunk >> (b - low_bits)) & 1) {
      for (std::size_t w = 0; w < words; ++w) acc[w] ^= rows[b][w];
    }
  }
  auto report = [&] {
    const u64 c = popcount(acc);
    if (c != 0 && c < s.best.load(std::memory_order_relaxed)) s.offer(c, unpack(acc, length));
  };
  report();
  const u64 total = u64{1} << low_bits;
  for (u64 i = 1; i < total; ++i) {
    if ((i & 0xffff) == 0) {
      s.charge(0x10000);
      if (s.stop.load(std::memory_order_relaxed)) return;
    }
    const auto& row = rows[std::countr_zero(i)];
    for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
    report();
  }
  s.charge((total - 1) & 0xffff);
}

DistanceResult gray(const MatrixGF& g, const DistanceOptions& opt) {
  const std::size_t k = g.rows();
  if (g.field().q() != 2) throw std::invalid_argument("gray enumeration needs a binary code");
  if (k > kGrayMaxK) throw std::invalid_argument("gray enumeration supports k <= 32");
  std::vector<Words> rows;
  for (std::size_t i = 0; i < k; ++i) rows.push_back(pack_row(g.row(i)));

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::size_t high_bits = 0;
  while (high_bits + 8 < k && (u64{1} << high_bits) < 4ull * threads) ++high_bits;
  const std::size_t low_bits = k - high_bits;
  const u64 chunks = u64{1} << high_bits;

  Search s(opt, g.cols());
  std::atomic<u64> next{0};
  auto worker = [&] {
    for (u64 c = next++; c < chunks && !s.stop.load(); c = next++) {
      if (rows.empty() || rows[0].size() == 1) {
        gray_chunk<1>(rows, low_bits, c, g.cols(), s);
      } else if (rows[0].size() == 2) {
        gray_chunk<2>(rows, low_bits, c, g.cols(), s);
      } else {
        gray_chunk_dynamic(rows, low_bits, c, g.cols(), s);
      }
    }
  };
  threads = static_cast<unsigned>(std::min<u64>(threads, chunks));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  DistanceResult res;
  res.method = DistanceMethod::Gray;
  res.upper = s.best;
  res.witness = s.witness;
  res.work = s.work;
  res.lower = s.stop ? 1 : res.upper;
  return res;
}

// --- every q-ary message ---------------------------------------------------

DistanceResult exhaustive(const MatrixGF& g, const DistanceOptions& opt) {
  const BaseField& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t l = g.cols();
  Search s(opt, l);
  std::vector<Sym> digits(k, 0);
  std::vector<Sym> acc(l, 0);
  bool complete = true;
  while (true) {
    std::size_t i = 0;
    // Advance the odometer; digits are symbol codes 0..q-1.
    while (i < k) {
      const Sym old = digits[i];
      const Sym next = static_cast<Sym>(static_cast<unsigned>(old) + 1 == f.q() ? 0 : old + 1);
      const Sym delta = f.sub(next, old);
      for (std::size_t j = 0; j < l; ++j) acc[j] = f.add(acc[j], f.mul(delta, g.at(i, j)));
      digits[i] = next;
      if (next != 0) break;
      ++i;
    }
    if (i == k) break;
    s.charge(1);
    s.offer(weight(acc), acc);
    if (s.stop) {
      complete = false;
      break;
    }
  }
  DistanceResult res;
  res.method = DistanceMethod::Exhaustive;
  res.upper = s.best;
  res.witness = s.witness;
  res.work = s.work;
  res.lower = complete ? res.upper : 1;
  return res;
}

// --- Brouwer-Zimmermann ----------------------------------------------------

struct Systematic {
  MatrixGF g;
  std::size_t fresh;  // pivots not used by earlier information sets
};

std::vector<Systematic> systematic_generators(const MatrixGF& g) {
  const std::size_t l = g.cols();
  std::vector<bool> used(l, false);
  std::vector<Systematic> out;
  while (true) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < l; ++c) {
      if (!used[c]) order.push_back(c);
    }
    if (order.empty()) break;
    for (std::size_t c = 0; c < l; ++c) {
      if (used[c]) order.push_back(c);
    }
    RowReduction rr = row_reduce(g, order);
    std::size_t fresh = 0;
    for (auto c : rr.pivots) {
      if (!used[c]) ++fresh;
      used[c] = true;
    }
    if (fresh == 0) break;
    out.push_back({std::move(rr.reduced), fresh});
  }
  return out;
}

// All messages of exact weight w (first nonzero coefficient 1) times g.
class WeightWalker {
 public:
  WeightWalker(const MatrixGF& g, Search& s) : g_(g), s_(s), binary_(g.field().q() == 2) {
    if (binary_) {
      for (std::size_t i = 0; i < g.rows(); ++i) packed_.push_back(pack_row(g.row(i)));
    }
  }

  void run(std::size_t w) {
    if (binary_) {
      Words acc(packed_.empty() ? 0 : packed_[0].size(), 0);
      binary(0, w, acc);
    } else {
      std::vector<Sym> acc(g_.cols(), 0);
      qary(0, w, true, acc);
    }
    s_.charge(pending_);
    pending_ = 0;
  }

 private:
  void tick() {
    if (++pending_ == 4096) {
      s_.charge(pending_);
      pending_ = 0;
    }
  }

  void binary(std::size_t start, std::size_t left, Words& acc) {
    if (s_.stop.load(std::memory_order_relaxed)) return;
    if (left == 0) {
      tick();
      const u64 c = popcount(acc);
      if (c < s_.best.load(std::memory_order_relaxed)) s_.offer(c, unpack(acc, g_.cols()));
      return;
    }
    for (std::size_t i = start; i + left <= packed_.size(); ++i) {
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= packed_[i][w];
      binary(i + 1, left - 1, acc);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= packed_[i][w];
      if (s_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  void qary(std::size_t start, std::size_t left, bool first, std::vector<Sym>& acc) {
    if (s_.stop.load(std::memory_order_relaxed)) return;
    const BaseField& f = g_.field();
    if (left == 0) {
      tick();
      s_.offer(weight(acc), acc);
      return;
    }
    for (std::size_t i = start; i + left <= g_.rows(); ++i) {
      for (unsigned a = 1; a < (first ? 2u : f.q()); ++a) {
        const Sym coef = static_cast<Sym>(a);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.add(acc[j], f.mul(coef, g_.at(i, j)));
        qary(i + 1, left - 1, false, acc);
        for (std::size_t j = 0; j < acc.size(); ++j) acc[j] = f.sub(acc[j], f.mul(coef, g_.at(i, j)));
      }
      if (s_.stop.load(std::memory_order_relaxed)) return;
    }
  }

  const MatrixGF& g_;
  Search& s_;
  bool binary_;
  std::vector<Words> packed_;
  u64 pending_ = 0;
};

DistanceResult brouwer_zimmermann(const MatrixGF& g, const DistanceOptions& opt) {
  const std::size_t k = g.rows();
  const auto gens = systematic_generators(g);
  Search s(opt, g.cols());
  u64 lower = 1;
  for (std::size_t w = 1; w <= k; ++w) {
    for (const auto& sys : gens) {
      WeightWalker(sys.g, s).run(w);
      if (s.stop) break;
    }
    if (s.stop) break;
    u64 bound = 0;
    for (const auto& sys : gens) {
      const std::size_t excess = k - sys.fresh;
      if (w + 1 > excess) bound += w + 1 - excess;
    }
    if (w == k) bound = s.best;
    lower = std::max(lower, bound);
    if (lower >= s.best) break;
    if (opt.target && lower >= *opt.target) break;
  }
  DistanceResult res;
  res.method = DistanceMethod::BrouwerZimmermann;
  res.upper = s.best;
  res.witness = s.witness;
  res.work = s.work;
  res.lower = std::min(lower, res.upper);
  return res;
}

}  // namespace

DistanceResult min_distance(const MatrixGF& g, const DistanceOptions& options) {
  if (g.rows() == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  if (rank(g) != g.rows()) throw std::invalid_argument("generator rows must be linearly independent");
  DistanceMethod method = options.method;
  if (method == DistanceMethod::Auto) {
    const auto size = checked_pow(g.field().q(), static_cast<unsigned>(g.rows()));
    if (g.field().q() == 2 && g.rows() <= kAutoGrayMaxK) {
      method = DistanceMethod::Gray;
    } else if (size && *size <= kAutoExhaustiveMax) {
      method = DistanceMethod::Exhaustive;
    } else {
      method = DistanceMethod::BrouwerZimmermann;
    }
  }
  switch (method) {
    case DistanceMethod::Gray:
      return gray(g, options);
    case DistanceMethod::Exhaustive:
      return exhaustive(g, options);
    default:
      return brouwer_zimmermann(g, options);
  }
}

namespace {

struct SupportSearch {
  const MatrixGF& h;
  std::size_t target;
  std::vector<std::size_t> chosen;
  std::vector<Words> cols;  // binary columns, packed over rows
  std::optional<std::vector<Sym>> found;

  bool binary(std::size_t start, Words& acc) {
    if (chosen.size() == target) {
      if (std::any_of(acc.begin(), acc.end(), [](u64 x) { return x != 0; })) return false;
      std::vector<Sym> word(h.cols(), 0);
      for (auto c : chosen) word[c] = 1;
      found = std::move(word);
      return true;
    }
    for (std::size_t c = start; c + (target - chosen.size()) <= h.cols(); ++c) {
      chosen.push_back(c);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= cols[c][w];
      const bool hit = binary(c + 1, acc);
      for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= cols[c][w];
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }

  bool general(std::size_t start) {
    if (chosen.size() == target) {
      const MatrixGF sub = h.select_columns(chosen);
      if (rank(sub) == target) return false;
      const MatrixGF kernel = null_space(sub);
      std::vector<Sym> word(h.cols(), 0);
      for (std::size_t t = 0; t < target; ++t) word[chosen[t]] = kernel.at(0, t);
      found = std::move(word);
      return true;
    }
    for (std::size_t c = start; c + (target - chosen.size()) <= h.cols(); ++c) {
      chosen.push_back(c);
      const bool hit = general(c + 1);
      chosen.pop_back();
      if (hit) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Sym>> low_weight_codeword(const MatrixGF& h, std::size_t max_weight) {
  const bool binary = h.field().q() == 2;
  std::vector<Words> cols;
  if (binary) {
    const MatrixGF t = h.transpose();
    for (std::size_t c = 0; c < h.cols(); ++c) cols.push_back(pack_row(t.row(c)));
  }
  for (std::size_t w = 1; w <= std::min(max_weight, h.cols()); ++w) {
    SupportSearch s{h, w, {}, cols, std::nullopt};
    if (binary) {
      Words acc((h.rows() + 63) / 64, 0);
      s.binary(0, acc);
    } else {
      s.general(0);
    }
    if (s.found) return s.found;
  }
  return std::nullopt;
}

}  // namespace abelcode
