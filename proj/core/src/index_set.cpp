#include "linknav/index_set.hpp"

#include "linknav/error.hpp"

namespace linknav {
namespace {

std::uint64_t bit_for(int index) {
  if (index < 1 || index > IndexSet::kMaxIndex)
    throw InputError(ErrorCode::InvalidInput, "index " + std::to_string(index) + " out of range 1..64");
  return std::uint64_t{1} << (index - 1);
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> indices) {
  for (int i : indices) bits_ |= bit_for(i);
}

IndexSet IndexSet::single(int index) { return from_bits(bit_for(index)); }

IndexSet IndexSet::full(int n) {
  if (n < 0 || n > kMaxIndex) throw InputError(ErrorCode::InvalidInput, "set size out of range");
  return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

IndexSet IndexSet::of(const std::vector<int>& indices) {
  IndexSet s;
  for (int i : indices) s.bits_ |= bit_for(i);
  return s;
}

bool IndexSet::contains(int index) const noexcept {
  return index >= 1 && index <= kMaxIndex && ((bits_ >> (index - 1)) & 1U) != 0;
}

int IndexSet::lowest() const noexcept { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

int IndexSet::highest() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int i) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  });
  return s + "}";
}

}  // namespace linknav
