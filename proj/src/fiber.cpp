#include "flowcert/fiber.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "flowcert/error.hpp"

namespace flowcert {

FlowMultiset::FlowMultiset(Group group, std::size_t n, std::vector<Flow> flows)
    : group_(std::move(group)), n_(n), flows_(std::move(flows)) {
  for (const auto& f : flows_) {
    if (f.group() != group_ || f.size() != n_) {
      throw Error(ErrorKind::shape, "multiset members differ in group or n");
    }
  }
  std::sort(flows_.begin(), flows_.end());
}

namespace {

const Flow& first_of(const std::vector<Flow>& flows) {
  if (flows.empty()) {
    throw Error(ErrorKind::shape, "empty multiset needs an explicit shape");
  }
  return flows.front();
}

}  // namespace

FlowMultiset::FlowMultiset(std::vector<Flow> flows)
    : group_(first_of(flows).group()),
      n_(flows.front().size()),
      flows_(std::move(flows)) {
  for (const auto& f : flows_) {
    if (f.group() != group_ || f.size() != n_) {
      throw Error(ErrorKind::shape, "multiset members differ in group or n");
    }
  }
  std::sort(flows_.begin(), flows_.end());
}

bool FlowMultiset::contains(const FlowMultiset& sub) const {
  return std::includes(flows_.begin(), flows_.end(), sub.flows_.begin(),
                       sub.flows_.end());
}

ColumnSignature::ColumnSignature(std::size_t n, std::size_t order,
                                 std::vector<std::uint32_t> counts)
    : n_(n), order_(order), counts_(std::move(counts)) {
  if (counts_.size() != n_ * order_) {
    throw Error(ErrorKind::shape, "signature count matrix has wrong size");
  }
}

std::uint32_t ColumnSignature::degree() const {
  std::uint32_t d = 0;
  for (std::size_t c = 0; c < order_ && n_ > 0; ++c) d += counts_[c];
  return d;
}

bool ColumnSignature::consistent() const {
  const std::uint32_t d = degree();
  for (std::size_t i = 1; i < n_; ++i) {
    std::uint32_t row = 0;
    for (std::size_t c = 0; c < order_; ++c) row += counts_[i * order_ + c];
    if (row != d) return false;
  }
  return true;
}

std::string ColumnSignature::key() const {
  std::string out;
  out.reserve(counts_.size() * 2);
  for (auto c : counts_) {
    out.push_back(static_cast<char>(c & 0xff));
    out.push_back(static_cast<char>((c >> 8) & 0xff));
  }
  return out;
}

ColumnSignature signature(const FlowMultiset& m) {
  ColumnSignature sig(m.n(), m.group().order());
  for (const auto& f : m.flows()) {
    for (std::size_t i = 0; i < m.n(); ++i) ++sig.at(i, f[i].code);
  }
  return sig;
}

LatticePoint lattice_degree(const FlowMultiset& m) {
  LatticePoint sum{m.n(), m.group().order(),
                   std::vector<std::uint32_t>(m.n() * m.group().order(), 0)};
  for (const auto& f : m.flows()) {
    const auto p = vertex_embedding(f);
    for (std::size_t k = 0; k < p.coords.size(); ++k) sum.coords[k] += p.coords[k];
  }
  return sum;
}

bool compatible(const FlowMultiset& a, const FlowMultiset& b) {
  if (a.group() != b.group() || a.n() != b.n()) {
    throw Error(ErrorKind::shape, "multisets differ in group or n");
  }
  return a.degree() == b.degree() && signature(a) == signature(b);
}

std::vector<std::size_t> differing_indices(const FlowMultiset& a,
                                           const FlowMultiset& b) {
  if (a.group() != b.group() || a.n() != b.n()) {
    throw Error(ErrorKind::shape, "multisets differ in group or n");
  }
  const auto sa = signature(a), sb = signature(b);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.n(); ++i) {
    for (std::uint32_t c = 0; c < a.group().order(); ++c) {
      if (sa.at(i, c) != sb.at(i, c)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::uint64_t multiset_count(std::uint64_t flows, std::size_t d) {
  if (flows == 0) return d == 0 ? 1 : 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // c = C(flows-1+i, i); i divides c * (flows-1+i), so after cancelling
  // gcd(c, i) the rest of i divides flows-1+i.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= d; ++i) {
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t top = (flows - 1 + i) / (i / g);
    if (__builtin_mul_overflow(c / g, top, &c)) return kMax;
  }
  return c;
}

ColumnSignature signature(const FlowSpace& space,
                          std::span<const std::uint32_t> members) {
  ColumnSignature sig(space.n(), space.group().order());
  for (auto idx : members) {
    for (std::size_t i = 0; i < space.n(); ++i) ++sig.at(i, space.code(idx, i));
  }
  return sig;
}

IndexMultiset to_indices(const FlowSpace& space, const FlowMultiset& m) {
  IndexMultiset out;
  out.reserve(m.degree());
  for (const auto& f : m.flows()) out.push_back(space.index_of(f));
  return out;  // sorted: index order is flow order
}

FlowMultiset to_multiset(const FlowSpace& space,
                         std::span<const std::uint32_t> members) {
  std::vector<Flow> flows;
  flows.reserve(members.size());
  for (auto idx : members) flows.push_back(space.flow(idx));
  return FlowMultiset(space.group(), space.n(), std::move(flows));
}

namespace {

class FiberSearch {
 public:
  FiberSearch(const FlowSpace& space, const ColumnSignature& sig,
              std::uint64_t cap)
      : space_(space),
        remaining_(sig),
        fiber_(sig, sig.degree()),
        cap_(cap),
        chosen_(sig.degree()) {}

  IndexFiber run() && {
    descend(0, 0);
    return std::move(fiber_);
  }

 private:
  bool fits(std::uint32_t idx) const {
    for (std::size_t i = 0; i < space_.n(); ++i) {
      if (remaining_.at(i, space_.code(idx, i)) == 0) return false;
    }
    return true;
  }

  void take(std::uint32_t idx, int delta) {
    for (std::size_t i = 0; i < space_.n(); ++i) {
      remaining_.at(i, space_.code(idx, i)) += delta;
    }
  }

  void descend(std::size_t depth, std::uint32_t start) {
    if (depth == chosen_.size()) {
      if (fiber_.size() >= cap_) {
        throw CapacityError(cap_ + 1, cap_, "fiber enumeration");
      }
      fiber_.push(chosen_);
      return;
    }
    const auto count = static_cast<std::uint32_t>(space_.flow_count());
    for (std::uint32_t idx = start; idx < count; ++idx) {
      if (!fits(idx)) continue;
      take(idx, -1);
      chosen_[depth] = idx;
      descend(depth + 1, idx);
      take(idx, +1);
    }
  }

  const FlowSpace& space_;
  ColumnSignature remaining_;
  IndexFiber fiber_;
  std::uint64_t cap_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

IndexFiber enumerate_fiber(const FlowSpace& space, const ColumnSignature& sig,
                           std::uint64_t cap) {
  if (sig.n() != space.n() || sig.order() != space.group().order()) {
    throw Error(ErrorKind::shape, "signature shape does not match flow space");
  }
  if (!sig.consistent()) {
    throw Error(ErrorKind::invalid_fiber,
                "signature rows do not share a common degree");
  }
  return FiberSearch(space, sig, cap).run();
}

std::vector<FlowMultiset> enumerate_fiber(const ColumnSignature& sig,
                                          const Group& group, std::size_t n,
                                          const FiberLimits& limits) {
  const FlowSpace space(group, n, limits.max_flows);
  const auto fiber = enumerate_fiber(space, sig, limits.max_fiber);
  std::vector<FlowMultiset> out;
  out.reserve(fiber.size());
  for (std::size_t k = 0; k < fiber.size(); ++k) {
    out.push_back(to_multiset(space, fiber.member(k)));
  }
  return out;
}

std::vector<IndexFiber> partition_fibers(const FlowSpace& space, std::size_t d,
                                         const FiberLimits& limits) {
  if (d == 0) throw Error(ErrorKind::precondition, "degree must be >= 1");
  const std::uint64_t total = multiset_count(space.flow_count(), d);
  if (total > limits.max_multisets) {
    throw CapacityError(total, limits.max_multisets,
                        "d=" + std::to_string(d));
  }

  const auto flows = static_cast<std::uint32_t>(space.flow_count());

  std::vector<IndexFiber> fibers;
  std::unordered_map<std::string, std::size_t> by_key;
  by_key.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(total, 1u << 20)));

  // Combinations with repetition in lexicographic order, so each fiber
  // receives its members already sorted.
  std::vector<std::uint32_t> chosen(d, 0);
  for (;;) {
    const auto sig = signature(space, chosen);
    auto [it, fresh] = by_key.try_emplace(sig.key(), fibers.size());
    if (fresh) fibers.emplace_back(sig, d);
    auto& fiber = fibers[it->second];
    if (fiber.size() >= limits.max_fiber) {
      throw CapacityError(fiber.size() + 1, limits.max_fiber,
                          "d=" + std::to_string(d) + " fiber #" +
                              std::to_string(it->second));
    }
    fiber.push(chosen);

    std::size_t pos = d;
    while (pos > 0 && chosen[pos - 1] + 1 == flows) --pos;
    if (pos == 0) break;
    const std::uint32_t next = chosen[pos - 1] + 1;
    std::fill(chosen.begin() + static_cast<std::ptrdiff_t>(pos - 1),
              chosen.end(), next);
  }

  std::sort(fibers.begin(), fibers.end(),
            [](const IndexFiber& a, const IndexFiber& b) {
              return a.signature() < b.signature();
            });
  return fibers;
}

void for_each_fiber(const FlowSpace& space, std::size_t d,
                    const FiberLimits& limits,
                    const std::function<void(const IndexFiber&)>& visit) {
  for (const auto& fiber : partition_fibers(space, d, limits)) visit(fiber);
}

std::vector<Fiber> enumerate_all_fibers(const Group& group, std::size_t n,
                                        std::size_t d,
                                        const FiberLimits& limits) {
  const FlowSpace space(group, n, limits.max_flows);
  std::vector<Fiber> out;
  for_each_fiber(space, d, limits, [&](const IndexFiber& fiber) {
    Fiber f{fiber.signature(), {}};
    f.members.reserve(fiber.size());
    for (std::size_t k = 0; k < fiber.size(); ++k) {
      f.members.push_back(to_multiset(space, fiber.member(k)));
    }
    out.push_back(std::move(f));
  });
  return out;
}

}  // namespace flowcert
