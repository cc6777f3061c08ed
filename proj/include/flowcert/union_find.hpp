#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace flowcert {

// Disjoint sets whose representative is always the smallest member, so
// component labels come out canonical regardless of merge order.
class UnionFind {
 public:
  explicit UnionFind(std::uint32_t size) : parent_(size), count_(size) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    std::uint32_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::uint32_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    --count_;
    return true;
  }

  std::uint32_t count() const noexcept { return count_; }

 private:
  std::vector<std::uint32_t> parent_;
  std::uint32_t count_;
};

}  // namespace flowcert
