#include "flowcert/group.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "flowcert/error.hpp"

namespace flowcert {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_group: return "invalid-group";
    case ErrorKind::invalid_element: return "invalid-element";
    case ErrorKind::not_a_flow: return "not-a-flow";
    case ErrorKind::shape: return "shape";
    case ErrorKind::invalid_permutation: return "invalid-permutation";
    case ErrorKind::not_implemented: return "not-implemented";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::invalid_exchange: return "invalid-exchange";
    case ErrorKind::containment: return "containment";
    case ErrorKind::invalid_move: return "invalid-move";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::internal_invariant: return "internal-invariant";
    case ErrorKind::invalid_transformation: return "invalid-transformation";
    case ErrorKind::invalid_fiber: return "invalid-fiber";
    case ErrorKind::incompatible: return "incompatible";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Group Group::make(std::span<const std::uint32_t> factors) {
  if (factors.empty()) {
    throw Error(ErrorKind::invalid_group, "group needs at least one factor");
  }
  std::uint64_t order = 1;
  for (auto k : factors) {
    if (k < 2) {
      throw Error(ErrorKind::invalid_group,
                  "cyclic factor must be >= 2, got " + std::to_string(k));
    }
    order *= k;
    if (order > std::numeric_limits<std::uint32_t>::max() / 2) {
      throw Error(ErrorKind::invalid_group, "group order too large");
    }
  }
  return Group({factors.begin(), factors.end()},
               static_cast<std::uint32_t>(order));
}

void Group::check(Elem a) const {
  if (a.code >= order_) {
    throw Error(ErrorKind::invalid_element,
                "element code " + std::to_string(a.code) +
                    " out of range for group of order " +
                    std::to_string(order_));
  }
}

Elem Group::add(Elem a, Elem b) const {
  check(a);
  check(b);
  if (is_cyclic()) return Elem{(a.code + b.code) % order_};
  std::uint32_t x = a.code, y = b.code, out = 0, radix = 1;
  for (auto k : factors_) {
    out += ((x % k + y % k) % k) * radix;
    x /= k;
    y /= k;
    radix *= k;
  }
  return Elem{out};
}

Elem Group::neg(Elem a) const {
  check(a);
  if (is_cyclic()) return Elem{(order_ - a.code) % order_};
  std::uint32_t x = a.code, out = 0, radix = 1;
  for (auto k : factors_) {
    out += ((k - x % k) % k) * radix;
    x /= k;
    radix *= k;
  }
  return Elem{out};
}

Elem Group::encode(std::span<const std::uint32_t> residues) const {
  if (residues.size() != factors_.size()) {
    throw Error(ErrorKind::invalid_element, "residue tuple has wrong length");
  }
  std::uint32_t out = 0, radix = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (residues[i] >= factors_[i]) {
      throw Error(ErrorKind::invalid_element, "residue out of range");
    }
    out += residues[i] * radix;
    radix *= factors_[i];
  }
  return Elem{out};
}

std::vector<std::uint32_t> Group::decode(Elem a) const {
  check(a);
  std::vector<std::uint32_t> out;
  out.reserve(factors_.size());
  std::uint32_t x = a.code;
  for (auto k : factors_) {
    out.push_back(x % k);
    x /= k;
  }
  return out;
}

std::vector<Elem> Group::elements() const {
  std::vector<Elem> out(order_);
  for (std::uint32_t c = 0; c < order_; ++c) out[c] = Elem{c};
  return out;
}

std::vector<ElemPermutation> automorphisms(const Group& group) {
  if (!group.is_cyclic()) {
    throw Error(ErrorKind::not_implemented,
                "automorphisms are only implemented for cyclic groups");
  }
  const std::uint32_t k = group.order();
  std::vector<ElemPermutation> out;
  for (std::uint32_t u = 1; u < k; ++u) {
    if (std::gcd(u, k) != 1) continue;
    ElemPermutation perm(k);
    for (std::uint32_t x = 0; x < k; ++x) {
      perm[x] = Elem{static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(u) * x) % k)};
    }
    out.push_back(std::move(perm));
  }
  return out;
}

}  // namespace flowcert
