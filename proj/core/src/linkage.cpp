#include "linknav/linkage.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

namespace linknav {
namespace {

// Weight totals below this bound keep 2*sum inside int64.
constexpr std::int64_t kFastLimit = std::int64_t{1} << 61;

// Smallest nonempty mask whose weight is exactly total/2, scanning masks in
// increasing integer order via two half tables.
template <class W>
std::optional<std::uint64_t> exhaustive_half_subset(const std::vector<W>& w, const W& total) {
  const int n = static_cast<int>(w.size());
  const int lo_bits = std::min(n, 12);
  const int hi_bits = n - lo_bits;
  std::vector<W> lo(std::size_t{1} << lo_bits), hi(std::size_t{1} << hi_bits);
  lo[0] = 0;
  for (std::size_t m = 1; m < lo.size(); ++m) lo[m] = lo[m & (m - 1)] + w[static_cast<std::size_t>(std::countr_zero(m))];
  hi[0] = 0;
  for (std::size_t m = 1; m < hi.size(); ++m)
    hi[m] = hi[m & (m - 1)] + w[static_cast<std::size_t>(lo_bits + std::countr_zero(m))];
  for (std::size_t h = 0; h < hi.size(); ++h) {
    for (std::size_t l = (h == 0 ? 1 : 0); l < lo.size(); ++l) {
      if (2 * (hi[h] + lo[l]) == total) return (static_cast<std::uint64_t>(h) << lo_bits) | l;
    }
  }
  return std::nullopt;
}

template <class W>
W mask_weight(const std::vector<W>& w, std::uint64_t mask) {
  W s = 0;
  for (; mask != 0; mask &= mask - 1) s += w[static_cast<std::size_t>(std::countr_zero(mask))];
  return s;
}

// Probes all subsets of size <= 2, their complements and a fixed pseudo-random
// sample. Finding nothing is evidence for genericity, not a proof.
template <class W>
std::optional<std::uint64_t> sampled_half_subset(const std::vector<W>& w, const W& total) {
  const int n = static_cast<int>(w.size());
  const std::uint64_t full = IndexSet::full(n).bits();
  std::optional<std::uint64_t> best;
  auto probe = [&](std::uint64_t m) {
    if (m == 0 || m == full) return;
    if (2 * mask_weight(w, m) == total && (!best || m < *best)) best = m;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::uint64_t m = (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
      probe(m);
      probe(full & ~m);
    }
  }
  std::mt19937_64 rng(0x6c696e6b6e6176ULL);
  for (int t = 0; t < (1 << 20); ++t) probe(rng() & full);
  return best;
}

}  // namespace

Linkage Linkage::create(std::vector<Rational> lengths) {
  const int n = static_cast<int>(lengths.size());
  if (n < 3 || n > IndexSet::kMaxIndex)
    throw InputError(ErrorCode::InvalidInput, "linkage needs 3..64 edges, got " + std::to_string(n));
  for (int i = 0; i < n; ++i) {
    if (lengths[static_cast<std::size_t>(i)] <= 0)
      throw InputError(ErrorCode::NonPositiveLength,
                       "edge " + std::to_string(i + 1) + " has length " + format_rational(lengths[static_cast<std::size_t>(i)]));
  }
  Linkage L;
  L.n_ = n;
  L.lengths_ = std::move(lengths);
  L.perimeter_ = std::accumulate(L.lengths_.begin(), L.lengths_.end(), Rational(0));
  L.order_.resize(static_cast<std::size_t>(n));
  std::iota(L.order_.begin(), L.order_.end(), 1);
  std::stable_sort(L.order_.begin(), L.order_.end(),
                   [&](int a, int b) { return L.length(a) > L.length(b); });
  L.init_weights();
  L.check_genericity();
  for (int i = 1; i <= n; ++i) {
    if (!L.is_short(IndexSet::single(i)))
      throw TriangleInequalityError(i, "edge " + std::to_string(i) + " is not shorter than the rest combined");
  }
  return L;
}

Linkage Linkage::from_integers(const std::vector<long long>& lengths) {
  std::vector<Rational> r;
  r.reserve(lengths.size());
  for (long long x : lengths) r.emplace_back(x);
  return create(std::move(r));
}

void Linkage::init_weights() {
  BigInt d = 1;
  for (const Rational& l : lengths_) {
    const BigInt& q = boost::multiprecision::denominator(l);
    d = d / boost::multiprecision::gcd(d, q) * q;
  }
  big_w_.clear();
  big_total_ = 0;
  for (const Rational& l : lengths_) {
    big_w_.push_back(boost::multiprecision::numerator(l) * (d / boost::multiprecision::denominator(l)));
    big_total_ += big_w_.back();
  }
  fast_ = big_total_ < kFastLimit;
  fast_w_.clear();
  fast_total_ = 0;
  if (fast_) {
    for (const BigInt& w : big_w_) fast_w_.push_back(w.convert_to<std::int64_t>());
    fast_total_ = big_total_.convert_to<std::int64_t>();
  }
}

void Linkage::check_genericity() {
  std::optional<std::uint64_t> witness;
  const bool exhaustive = n_ <= kExhaustiveGenericityLimit;
  if (fast_) {
    if (fast_total_ % 2 != 0) {
      certified_ = true;
      return;
    }
    witness = exhaustive ? exhaustive_half_subset(fast_w_, fast_total_) : sampled_half_subset(fast_w_, fast_total_);
  } else {
    witness = exhaustive ? exhaustive_half_subset(big_w_, big_total_) : sampled_half_subset(big_w_, big_total_);
  }
  if (witness) {
    IndexSet s = IndexSet::from_bits(*witness);
    throw NonGenericError(s, "subset " + s.to_string() + " sums to half the perimeter");
  }
  certified_ = exhaustive;
}

Rational Linkage::sum(IndexSet set) const {
  Rational s = 0;
  set.for_each([&](int i) { s += length(i); });
  return s;
}

Rational Linkage::excess(IndexSet set) const { return sum(set) - perimeter_ / 2; }

bool Linkage::is_short(IndexSet set) const noexcept {
  if (fast_) {
    std::int64_t s = 0;
    for (std::uint64_t b = set.bits(); b != 0; b &= b - 1) s += fast_w_[static_cast<std::size_t>(std::countr_zero(b))];
    return 2 * s < fast_total_;
  }
  BigInt s = 0;
  for (std::uint64_t b = set.bits(); b != 0; b &= b - 1) s += big_w_[static_cast<std::size_t>(std::countr_zero(b))];
  return 2 * s < big_total_;
}

bool Linkage::is_connected() const noexcept {
  return is_short(IndexSet::single(order_[1]) | IndexSet::single(order_[2]));
}

bool Linkage::is_bow() const noexcept {
  const IndexSet b = IndexSet::single(longest());
  for (int i = 1; i <= n_; ++i) {
    if (i != longest() && is_short(b | IndexSet::single(i))) return false;
  }
  return true;
}

std::vector<double> Linkage::lengths_double() const {
  std::vector<double> out;
  out.reserve(lengths_.size());
  for (const Rational& l : lengths_) out.push_back(to_double(l));
  return out;
}

double Linkage::perimeter_double() const { return to_double(perimeter_); }

Linkage Linkage::permuted(const std::vector<int>& order) const {
  if (static_cast<int>(order.size()) != n_) throw InputError(ErrorCode::InvalidInput, "permutation size mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (int o : order) {
    if (o < 1 || o > n_ || seen[static_cast<std::size_t>(o - 1)])
      throw InputError(ErrorCode::InvalidInput, "not a permutation");
    seen[static_cast<std::size_t>(o - 1)] = true;
  }
  // Genericity and the triangle inequality are permutation invariant, so the
  // validated state carries over without rescanning.
  Linkage L;
  L.n_ = n_;
  L.perimeter_ = perimeter_;
  L.certified_ = certified_;
  for (int o : order) L.lengths_.push_back(length(o));
  L.order_.resize(static_cast<std::size_t>(n_));
  std::iota(L.order_.begin(), L.order_.end(), 1);
  std::stable_sort(L.order_.begin(), L.order_.end(),
                   [&](int a, int b) { return L.length(a) > L.length(b); });
  L.init_weights();
  return L;
}

}  // namespace linknav
