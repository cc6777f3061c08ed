#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace flowcert {

/// Element of a finite abelian group, stored as a mixed-radix code in
/// [0, order). The least-significant digit belongs to the first factor.
struct Elem {
  std::uint32_t code = 0;

  friend auto operator<=>(const Elem&, const Elem&) = default;
};

/// Finite abelian group Z_{k1} x ... x Z_{kr}, kept exactly as given (no
/// invariant-factor normalization).
class Group {
 public:
  static Group make(std::span<const std::uint32_t> factors);
  static Group make(std::initializer_list<std::uint32_t> factors) {
    return make(std::span<const std::uint32_t>(factors.begin(), factors.size()));
  }
  static Group cyclic(std::uint32_t modulus) { return make({modulus}); }

  const std::vector<std::uint32_t>& factors() const noexcept { return factors_; }
  std::uint32_t order() const noexcept { return order_; }
  bool is_cyclic() const noexcept { return factors_.size() == 1; }

  Elem identity() const noexcept { return Elem{0}; }
  bool contains(Elem a) const noexcept { return a.code < order_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem encode(std::span<const std::uint32_t> residues) const;
  std::vector<std::uint32_t> decode(Elem a) const;

  /// All elements ascending by code; identity first.
  std::vector<Elem> elements() const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.factors_ == b.factors_;
  }

 private:
  Group(std::vector<std::uint32_t> factors, std::uint32_t order)
      : factors_(std::move(factors)), order_(order) {}

  void check(Elem a) const;

  std::vector<std::uint32_t> factors_;
  std::uint32_t order_ = 1;
};

inline Group make_group(std::span<const std::uint32_t> factors) {
  return Group::make(factors);
}

/// An element permutation: image[code] = image code.
using ElemPermutation = std::vector<Elem>;

/// Automorphisms of a cyclic group Z_k (multiplication by units), identity
/// first, ordered by unit. Multi-factor groups raise not_implemented.
std::vector<ElemPermutation> automorphisms(const Group& group);

}  // namespace flowcert
