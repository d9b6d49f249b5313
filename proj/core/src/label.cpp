#include "linknav/label.hpp"

#include "linknav/error.hpp"

#include <algorithm>

namespace linknav {
namespace {

void rotate_to_one(std::vector<IndexSet>& parts) {
  auto it = std::find_if(parts.begin(), parts.end(), [](IndexSet s) { return s.contains(1); });
  std::rotate(parts.begin(), it, parts.end());
}

}  // namespace

CyclicPartition::CyclicPartition(std::vector<IndexSet> parts) {
  if (parts.size() < 3)
    throw InputError(ErrorCode::NotAPartition, "a cyclic partition needs at least 3 parts");
  IndexSet seen;
  for (IndexSet s : parts) {
    if (s.empty()) throw InputError(ErrorCode::NotAPartition, "empty part");
    if (s.intersects(seen)) throw InputError(ErrorCode::NotAPartition, "parts overlap at " + (s & seen).to_string());
    seen |= s;
  }
  const int n = seen.highest();
  if (seen != IndexSet::full(n))
    throw InputError(ErrorCode::NotAPartition, "parts do not cover {1.." + std::to_string(n) + "}");
  rotate_to_one(parts);
  parts_ = std::move(parts);
  n_ = n;
}

CyclicPartition::CyclicPartition(std::vector<IndexSet> parts, int n, Trusted) : parts_(std::move(parts)), n_(n) {}

CyclicPartition canonical_unchecked(std::vector<IndexSet> parts, int n) {
  rotate_to_one(parts);
  return CyclicPartition(std::move(parts), n, CyclicPartition::Trusted{});
}

const IndexSet& CyclicPartition::at_cyclic(long i) const {
  const long p = static_cast<long>(parts_.size());
  return parts_[static_cast<std::size_t>(((i % p) + p) % p)];
}

int CyclicPartition::part_of(int index) const noexcept {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].contains(index)) return static_cast<int>(i);
  return -1;
}

bool CyclicPartition::is_admissible(const Linkage& L) const {
  if (n_ != L.size() || parts_.size() < 3) return false;
  return std::all_of(parts_.begin(), parts_.end(), [&](IndexSet s) { return L.is_short(s); });
}

std::string CyclicPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += parts_[i].to_string();
  }
  return s + ")";
}

CyclicPartition canonicalize(std::vector<IndexSet> parts) { return CyclicPartition(std::move(parts)); }

CyclicPartition mirror(const CyclicPartition& p) {
  std::vector<IndexSet> parts(p.parts().begin(), p.parts().end());
  std::reverse(parts.begin() + 1, parts.end());
  return canonical_unchecked(std::move(parts), p.n());
}

bool refines(const CyclicPartition& fine, const CyclicPartition& coarse) {
  if (fine.n() != coarse.n() || fine.size() < coarse.size()) return false;
  const std::size_t q = coarse.size();
  std::vector<std::size_t> owner(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const int c = coarse.part_of(fine[i].lowest());
    if (c < 0 || !fine[i].subset_of(coarse[static_cast<std::size_t>(c)])) return false;
    owner[i] = static_cast<std::size_t>(c);
  }
  // Walking the fine parts cyclically, the owning coarse part may only stay
  // or advance by one, and must advance exactly q times in total.
  std::size_t advances = 0;
  for (std::size_t i = 0; i < fine.size(); ++i) {
    const std::size_t a = owner[i], b = owner[(i + 1) % fine.size()];
    if (b == (a + 1) % q) {
      ++advances;
    } else if (b != a) {
      return false;
    }
  }
  return advances == q;
}

std::optional<Orientation> orientation_class(const Linkage& L, const CyclicPartition& p) {
  if (L.is_connected()) return std::nullopt;
  const auto& order = L.by_length();
  const long pb = p.part_of(order[0]), pk = p.part_of(order[1]), pm = p.part_of(order[2]);
  if (pb < 0 || pk < 0 || pm < 0 || pb == pk || pb == pm || pk == pm)
    throw InputError(ErrorCode::InadmissibleVertex, "label " + p.to_string() + " is not admissible");
  const long size = static_cast<long>(p.size());
  const long dk = ((pk - pb) % size + size) % size, dm = ((pm - pb) % size + size) % size;
  return dk < dm ? Orientation::Positive : Orientation::Negative;
}

void require_admissible(const Linkage& L, const CyclicPartition& p, std::size_t parts, ErrorCode code) {
  if (p.n() != L.size())
    throw InputError(code, "label " + p.to_string() + " is not a partition of {1.." + std::to_string(L.size()) + "}");
  if (parts != 0 && p.size() != parts)
    throw InputError(code, "label " + p.to_string() + " must have " + std::to_string(parts) + " parts");
  for (IndexSet s : p.parts()) {
    if (!L.is_short(s)) throw InputError(code, "part " + s.to_string() + " of " + p.to_string() + " is long");
  }
}

}  // namespace linknav
