#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "flowcert/flow.hpp"

namespace flowcert {

/// Multiset of flows sharing (group, n), kept sorted lexicographically so
/// equal multisets have equal representations.
class FlowMultiset {
 public:
  FlowMultiset(Group group, std::size_t n, std::vector<Flow> flows = {});
  explicit FlowMultiset(std::vector<Flow> flows);  // non-empty

  const Group& group() const noexcept { return group_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t degree() const noexcept { return flows_.size(); }
  const std::vector<Flow>& flows() const noexcept { return flows_; }

  /// Multiset containment.
  bool contains(const FlowMultiset& sub) const;

  friend bool operator==(const FlowMultiset& a, const FlowMultiset& b) {
    return a.n_ == b.n_ && a.group_ == b.group_ && a.flows_ == b.flows_;
  }
  friend std::strong_ordering operator<=>(const FlowMultiset& a,
                                          const FlowMultiset& b) {
    return a.flows_ <=> b.flows_;
  }

 private:
  Group group_;
  std::size_t n_;
  std::vector<Flow> flows_;
};

/// Per-index content multisets of a multiset of flows, as an n x |G| count
/// matrix (row-major). Equal to the blockwise sum of vertex embeddings.
class ColumnSignature {
 public:
  ColumnSignature(std::size_t n, std::size_t order)
      : n_(n), order_(order), counts_(n * order, 0) {}
  ColumnSignature(std::size_t n, std::size_t order,
                  std::vector<std::uint32_t> counts);

  std::size_t n() const noexcept { return n_; }
  std::size_t order() const noexcept { return order_; }
  std::uint32_t& at(std::size_t i, std::uint32_t code) {
    return counts_[i * order_ + code];
  }
  std::uint32_t at(std::size_t i, std::uint32_t code) const {
    return counts_[i * order_ + code];
  }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  /// Row sum of index 0 (every row sums to the degree when consistent).
  std::uint32_t degree() const;
  bool consistent() const;

  /// Compact byte key used for hashing during partitioning.
  std::string key() const;

  LatticePoint as_lattice_point() const {
    return LatticePoint{n_, order_, counts_};
  }

  friend bool operator==(const ColumnSignature&, const ColumnSignature&) = default;
  friend auto operator<=>(const ColumnSignature& a, const ColumnSignature& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  std::size_t n_;
  std::size_t order_;
  std::vector<std::uint32_t> counts_;
};

ColumnSignature signature(const FlowMultiset& m);

/// Sum of vertex embeddings of the members.
LatticePoint lattice_degree(const FlowMultiset& m);

bool compatible(const FlowMultiset& a, const FlowMultiset& b);

/// Indices whose content multisets differ (empty iff compatible, given equal
/// degrees).
std::vector<std::size_t> differing_indices(const FlowMultiset& a,
                                           const FlowMultiset& b);

struct FiberLimits {
  std::uint64_t max_multisets = std::uint64_t{1} << 27;  // per (G, n, d)
  std::uint64_t max_fiber = std::uint64_t{1} << 22;      // per fiber
  std::uint64_t max_flows = kDefaultFlowCap;
};

/// Number of degree-d multisets over `flows` flows, C(flows+d-1, d),
/// saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t flows, std::size_t d);

/// Multiset as sorted indices into a FlowSpace.
using IndexMultiset = std::vector<std::uint32_t>;

ColumnSignature signature(const FlowSpace& space,
                          std::span<const std::uint32_t> members);
IndexMultiset to_indices(const FlowSpace& space, const FlowMultiset& m);
FlowMultiset to_multiset(const FlowSpace& space,
                         std::span<const std::uint32_t> members);

/// One fiber of degree d, members in canonical (ascending) order, stored
/// flat.
class IndexFiber {
 public:
  IndexFiber(ColumnSignature sig, std::size_t degree)
      : signature_(std::move(sig)), degree_(degree) {}

  const ColumnSignature& signature() const noexcept { return signature_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept {
    return degree_ == 0 ? 0 : data_.size() / degree_;
  }
  std::span<const std::uint32_t> member(std::size_t i) const {
    return {data_.data() + i * degree_, degree_};
  }
  void push(std::span<const std::uint32_t> members) {
    data_.insert(data_.end(), members.begin(), members.end());
  }

 private:
  ColumnSignature signature_;
  std::size_t degree_;
  std::vector<std::uint32_t> data_;
};

/// Depth-first construction of every multiset with signature `sig`, flows
/// tried in canonical order with multiplicity; output is sorted.
IndexFiber enumerate_fiber(const FlowSpace& space, const ColumnSignature& sig,
                           std::uint64_t cap = FiberLimits{}.max_fiber);

std::vector<FlowMultiset> enumerate_fiber(const ColumnSignature& sig,
                                          const Group& group, std::size_t n,
                                          const FiberLimits& limits = {});

/// Partition of all degree-d multisets into fibers, ascending by signature.
std::vector<IndexFiber> partition_fibers(const FlowSpace& space, std::size_t d,
                                         const FiberLimits& limits = {});

/// Streams the partition one fiber at a time, ascending by signature.
void for_each_fiber(const FlowSpace& space, std::size_t d,
                    const FiberLimits& limits,
                    const std::function<void(const IndexFiber&)>& visit);

struct Fiber {
  ColumnSignature signature;
  std::vector<FlowMultiset> members;
};

std::vector<Fiber> enumerate_all_fibers(const Group& group, std::size_t n,
                                        std::size_t d,
                                        const FiberLimits& limits = {});

}  // namespace flowcert
