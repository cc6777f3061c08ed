#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "flowcert/fiber.hpp"

namespace flowcert {

/// Exchange of flows `f`, `g` on `indices`: f' agrees with g on the index
/// set and with f elsewhere, symmetrically for g'. Requires the partial sums
/// of f and g over the index set to agree; otherwise InvalidExchangeError.
std::pair<Flow, Flow> exchange_pair(const Flow& f, const Flow& g,
                                    std::span<const std::size_t> indices);

/// Pair exchange addressed by member positions inside a multiset.
struct PairExchange {
  std::size_t first = 0;
  std::size_t second = 0;
  std::vector<std::size_t> indices;
};

/// Replace sub-multiset `removed` by the compatible `inserted`.
struct Move {
  FlowMultiset removed;
  FlowMultiset inserted;

  std::size_t degree() const noexcept { return removed.degree(); }
  Move inverse() const { return Move{inserted, removed}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Throws invalid_move unless |removed| = |inserted| and both are compatible.
void validate(const Move& mv);

Move pair_move(const Flow& f, const Flow& g,
               std::span<const std::size_t> indices);
Move pair_move(const FlowMultiset& m, const PairExchange& ex);

/// (m - removed) + inserted, canonical. Throws containment when `removed`
/// is not a sub-multiset of `m`, invalid_move when the move is invalid.
FlowMultiset apply_move(const FlowMultiset& m, const Move& mv);

/// For G = Z_p, f != g on every index of `differing` (|differing| >= p-1) and
/// `fixed` disjoint from `differing`, returns a subset of `differing` whose
/// union with `fixed` is a valid exchange set for f and g.
///
/// Subsets of the first p-1 indices of `differing` (ascending) are tried
/// smallest first with lexicographic tie-break; only if that window fails is
/// the search widened to all of `differing`. For prime p the window always
/// succeeds; a failure there is reported as internal_invariant. Non-prime
/// cyclic groups are searched the same way but a miss is a precondition
/// error, since no existence guarantee applies.
std::vector<std::size_t> find_exchange_subset(
    const Flow& f, const Flow& g, std::span<const std::size_t> differing,
    std::span<const std::size_t> fixed);

/// Coloring of length n with values in {0, 1, ..., colors}; 0 is "no color".
class Coloring {
 public:
  Coloring(std::uint32_t colors, std::vector<std::uint32_t> values);

  std::uint32_t colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint32_t operator[](std::size_t i) const { return values_[i]; }
  const std::vector<std::uint32_t>& values() const noexcept { return values_; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::uint32_t colors_;
  std::vector<std::uint32_t> values_;
};

/// Swap of the values at positions k1, k2 between two colorings. Requires
/// f1(k1) = 0, f2(k2) = 0 and f1(k2) = f2(k1).
std::pair<Coloring, Coloring> transform_colorings(const Coloring& f1,
                                                  const Coloring& f2,
                                                  std::size_t k1,
                                                  std::size_t k2);

}  // namespace flowcert
