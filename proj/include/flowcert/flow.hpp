#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flowcert/group.hpp"

namespace flowcert {

inline constexpr std::uint64_t kDefaultFlowCap = std::uint64_t{1} << 24;

/// A group-based flow on n indices: an n-tuple of group elements whose sum is
/// the identity. Indices are 0-based throughout the library.
class Flow {
 public:
  Flow(Group group, std::vector<Elem> values);

  const Group& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::vector<Elem>& values() const noexcept { return values_; }
  Elem operator[](std::size_t i) const { return values_[i]; }

  /// Lexicographic by element codes; flows are only compared within one
  /// (group, n).
  friend std::strong_ordering operator<=>(const Flow& a, const Flow& b) {
    return a.values_ <=> b.values_;
  }
  friend bool operator==(const Flow& a, const Flow& b) {
    return a.values_ == b.values_;
  }

 private:
  Group group_;
  std::vector<Elem> values_;
};

Flow make_flow(const Group& group, std::span<const Elem> values);
Flow make_flow(const Group& group, std::span<const std::uint32_t> codes);
inline Flow make_flow(const Group& group,
                      std::initializer_list<std::uint32_t> codes) {
  return make_flow(group,
                   std::span<const std::uint32_t>(codes.begin(), codes.size()));
}

Flow zero_flow(const Group& group, std::size_t n);

/// Number of flows |G|^(n-1), saturating at UINT64_MAX.
std::uint64_t flow_count(const Group& group, std::size_t n);

/// All flows on n indices in ascending lexicographic order: the first n-1
/// entries range lexicographically and the last is solved for.
std::vector<Flow> enumerate_flows(const Group& group, std::size_t n,
                                  std::uint64_t cap = kDefaultFlowCap);

/// Point of M^n = Z^{n|G|}, stored as n consecutive blocks of |G| counts.
struct LatticePoint {
  std::size_t n = 0;
  std::size_t block = 0;
  std::vector<std::uint32_t> coords;

  std::uint32_t at(std::size_t index, Elem e) const {
    return coords[index * block + e.code];
  }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint vertex_embedding(const Flow& f);

/// Space-separated coordinates, no trailing newline.
std::string to_row(const LatticePoint& p);

Flow translate(const Flow& f, const Flow& h);
Flow negate(const Flow& f);

/// sigma[i] is the destination of position i: result[sigma[i]] = f[i].
Flow permute(const Flow& f, std::span<const std::size_t> sigma);
Flow automorph(const Flow& f, const ElemPermutation& pi);

/// Enumerated flows of one (group, n) with a dense code table; the shared
/// context for fiber enumeration and certification, where multisets are
/// handled as sorted flow indices.
class FlowSpace {
 public:
  FlowSpace(Group group, std::size_t n, std::uint64_t cap = kDefaultFlowCap);

  const Group& group() const noexcept { return group_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t flow_count() const noexcept { return flows_.size(); }
  const std::vector<Flow>& flows() const noexcept { return flows_; }
  const Flow& flow(std::size_t idx) const { return flows_[idx]; }

  /// Element code of flow `idx` at position `i`.
  std::uint32_t code(std::size_t idx, std::size_t i) const noexcept {
    return codes_[idx * n_ + i];
  }

  /// Position of `f` in the enumeration order.
  std::uint32_t index_of(const Flow& f) const;

 private:
  Group group_;
  std::size_t n_;
  std::vector<Flow> flows_;
  std::vector<std::uint32_t> codes_;
};

}  // namespace flowcert
