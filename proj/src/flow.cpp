#include "flowcert/flow.hpp"

#include <algorithm>
#include <limits>

#include "flowcert/error.hpp"

namespace flowcert {

namespace {

Elem sum_of(const Group& group, std::span<const Elem> values) {
  Elem s = group.identity();
  for (auto v : values) s = group.add(s, v);
  return s;
}

void require_same_shape(const Flow& a, const Flow& b) {
  if (a.group() != b.group() || a.size() != b.size()) {
    throw Error(ErrorKind::shape, "flows differ in group or length");
  }
}

}  // namespace

Flow::Flow(Group group, std::vector<Elem> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorKind::shape, "a flow needs at least one index");
  }
  for (auto v : values_) {
    if (!group_.contains(v)) {
      throw Error(ErrorKind::invalid_element,
                  "element code " + std::to_string(v.code) + " out of range");
    }
  }
  const Elem s = sum_of(group_, values_);
  if (s != group_.identity()) {
    throw NotAFlowError(s.code, "values sum to " + std::to_string(s.code) +
                                    ", not the identity");
  }
}

Flow make_flow(const Group& group, std::span<const Elem> values) {
  return Flow(group, {values.begin(), values.end()});
}

Flow make_flow(const Group& group, std::span<const std::uint32_t> codes) {
  std::vector<Elem> values;
  values.reserve(codes.size());
  for (auto c : codes) values.push_back(Elem{c});
  return Flow(group, std::move(values));
}

Flow zero_flow(const Group& group, std::size_t n) {
  return Flow(group, std::vector<Elem>(n, group.identity()));
}

std::uint64_t flow_count(const Group& group, std::size_t n) {
  if (n == 0) return 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / group.order()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= group.order();
  }
  return total;
}

std::vector<Flow> enumerate_flows(const Group& group, std::size_t n,
                                  std::uint64_t cap) {
  if (n == 0) throw Error(ErrorKind::shape, "n must be >= 1");
  const std::uint64_t total = flow_count(group, n);
  if (total > cap) {
    throw CapacityError(total, cap, "flows(n=" + std::to_string(n) + ")");
  }
  std::vector<Flow> out;
  out.reserve(total);
  std::vector<Elem> head(n - 1, group.identity());
  for (std::uint64_t k = 0; k < total; ++k) {
    std::vector<Elem> values = head;
    values.push_back(group.neg(sum_of(group, head)));
    out.emplace_back(group, std::move(values));
    // Odometer with the last head position least significant.
    for (std::size_t i = head.size(); i-- > 0;) {
      if (head[i].code + 1 < group.order()) {
        ++head[i].code;
        break;
      }
      head[i].code = 0;
    }
  }
  return out;
}

LatticePoint vertex_embedding(const Flow& f) {
  LatticePoint p;
  p.n = f.size();
  p.block = f.group().order();
  p.coords.assign(p.n * p.block, 0);
  for (std::size_t i = 0; i < p.n; ++i) p.coords[i * p.block + f[i].code] = 1;
  return p;
}

std::string to_row(const LatticePoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.coords[i]);
  }
  return out;
}

Flow translate(const Flow& f, const Flow& h) {
  require_same_shape(f, h);
  std::vector<Elem> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    values[i] = f.group().add(f[i], h[i]);
  }
  return Flow(f.group(), std::move(values));
}

Flow negate(const Flow& f) {
  std::vector<Elem> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = f.group().neg(f[i]);
  return Flow(f.group(), std::move(values));
}

Flow permute(const Flow& f, std::span<const std::size_t> sigma) {
  const std::size_t n = f.size();
  if (sigma.size() != n) {
    throw Error(ErrorKind::invalid_permutation, "permutation has wrong length");
  }
  std::vector<bool> hit(n, false);
  std::vector<Elem> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n || hit[sigma[i]]) {
      throw Error(ErrorKind::invalid_permutation, "not a bijection on [n]");
    }
    hit[sigma[i]] = true;
    values[sigma[i]] = f[i];
  }
  return Flow(f.group(), std::move(values));
}

Flow automorph(const Flow& f, const ElemPermutation& pi) {
  if (pi.size() != f.group().order()) {
    throw Error(ErrorKind::shape, "automorphism does not match group order");
  }
  std::vector<Elem> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values[i] = pi[f[i].code];
  return Flow(f.group(), std::move(values));
}

FlowSpace::FlowSpace(Group group, std::size_t n, std::uint64_t cap)
    : group_(std::move(group)), n_(n), flows_(enumerate_flows(group_, n, cap)) {
  codes_.reserve(flows_.size() * n_);
  for (const auto& f : flows_) {
    for (auto v : f.values()) codes_.push_back(v.code);
  }
}

std::uint32_t FlowSpace::index_of(const Flow& f) const {
  if (f.group() != group_ || f.size() != n_) {
    throw Error(ErrorKind::shape, "flow does not belong to this flow space");
  }
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    idx = idx * group_.order() + f[i].code;
  }
  return static_cast<std::uint32_t>(idx);
}

}  // namespace flowcert
