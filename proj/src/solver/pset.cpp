#include <algorithm>

#include "chomp/errors.hpp"
#include "chomp/solver.hpp"

namespace chomp {

void SolveConfig::validate() const {
  if (n_max < 1) throw PreconditionError("n_max must be >= 1");
  if (static_cast<std::uint32_t>(n_max) >= kFieldLimit) throw EncodingError("n_max does not fit a 16-bit field");
  if (k < 1 || k > kMaxPackedRows) throw PreconditionError("k must be in 1..4");
  if (thread_count < 1) throw PreconditionError("thread_count must be >= 1");
}

PSet::PSet(int n_max, int k, PackedSet members) : n_max_(n_max), k_(k), members_(std::move(members)) {}

PSet PSet::from_codes(int n_max, int k, std::span<const std::uint64_t> codes) {
  PackedSet members;
  members.reserve(codes.size());
  for (std::uint64_t c : codes) {
    const Position p = unpack(PackedPosition{c}, k);
    if (!p.playable()) throw InvalidStateError("P-set member without the poison square");
    if (p[0] > n_max) throw OutOfRangeError("P-set member " + p.to_string() + " exceeds n_max");
    if (!members.insert(c)) throw InvalidStateError("duplicate P-set member " + p.to_string());
  }
  return PSet(n_max, k, std::move(members));
}

std::vector<std::uint64_t> PSet::sorted_codes() const {
  std::vector<std::uint64_t> out;
  out.reserve(members_.size());
  members_.for_each([&](std::uint64_t c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> PSet::sorted_positions() const {
  std::vector<Position> out;
  out.reserve(members_.size());
  for (std::uint64_t c : sorted_codes()) out.push_back(unpack(PackedPosition{c}, k_));
  return out;
}

bool operator==(const PSet& x, const PSet& y) {
  return x.n_max_ == y.n_max_ && x.k_ == y.k_ && x.sorted_codes() == y.sorted_codes();
}

bool is_p(const PSet& pset, const Position& p) {
  if (p.k() != pset.k()) throw PreconditionError("row count does not match the P-set");
  if (p[0] > pset.n_max()) {
    throw OutOfRangeError("rows[0] = " + std::to_string(p[0]) + " exceeds n_max = " + std::to_string(pset.n_max()));
  }
  return pset.contains(pack(p));
}

TripleIndex::TripleIndex(const PSet& pset) : n_max_(pset.n_max()) {
  if (pset.k() != 4) throw PreconditionError("triple index needs a 4-row P-set");
  const auto codes = pset.sorted_codes();
  ds_.reserve(codes.size());
  std::uint64_t prev = ~std::uint64_t{0};
  for (std::uint64_t c : codes) {
    const std::uint64_t prefix = c >> 16;
    if (prefix != prev) {
      triples_.push_back(Triple{static_cast<int>(packed_field(c, 0)), static_cast<int>(packed_field(c, 1)),
                                static_cast<int>(packed_field(c, 2))});
      offsets_.push_back(static_cast<std::uint32_t>(ds_.size()));
      prev = prefix;
    }
    ds_.push_back(static_cast<int>(packed_field(c, 3)));
  }
  offsets_.push_back(static_cast<std::uint32_t>(ds_.size()));
}

std::span<const int> TripleIndex::extensions_at(std::size_t i) const {
  return std::span<const int>(ds_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::span<const int> TripleIndex::extensions(int a, int b, int c) const {
  const Triple key{a, b, c};
  const auto it = std::lower_bound(triples_.begin(), triples_.end(), key);
  if (it == triples_.end() || *it != key) return {};
  return extensions_at(static_cast<std::size_t>(it - triples_.begin()));
}

TripleIndex build_triple_index(const PSet& pset) { return TripleIndex(pset); }

}  // namespace chomp
