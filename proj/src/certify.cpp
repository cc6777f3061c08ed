#include "flowcert/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <deque>
#include <thread>

#include "flowcert/error.hpp"
#include "flowcert/union_find.hpp"

namespace flowcert {

namespace {

// Runs body(i) for i in [0, count) on `threads` workers. Results must be
// written to per-index slots; no ordering between calls is implied.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (;;) {
          const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= count || failed.load(std::memory_order_relaxed)) return;
          try {
            body(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

int compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const auto c = std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                        b.begin(), b.end());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::optional<std::size_t> position_in(const IndexFiber& fiber,
                                       std::span<const std::uint32_t> target) {
  std::size_t lo = 0, hi = fiber.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const int c = compare(fiber.member(mid), target);
    if (c == 0) return mid;
    if (c < 0) lo = mid + 1; else hi = mid;
  }
  return std::nullopt;
}

// Multiset difference a - b of sorted index lists.
IndexMultiset minus(std::span<const std::uint32_t> a,
                    std::span<const std::uint32_t> b) {
  IndexMultiset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

struct FiberOutcome {
  std::uint32_t components = 1;
  std::uint32_t second_root = 0;
};

FiberOutcome examine(const IndexFiber& fiber, std::size_t m) {
  const auto dec = fiber_components(fiber, m);
  FiberOutcome out{dec.component_count, 0};
  if (!dec.connected()) {
    for (std::uint32_t k = 1; k < dec.label.size(); ++k) {
      if (dec.label[k] != 0) {
        out.second_root = k;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::incomplete: return "incomplete";
  }
  return "unknown";
}

bool adjacent(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
              std::size_t max_move_degree) {
  const std::size_t d = a.size();
  if (b.size() != d) return false;
  std::size_t shared = 0, i = 0, j = 0;
  bool equal = true;
  while (i < d && j < d) {
    if (a[i] == b[j]) {
      ++shared;
      ++i;
      ++j;
    } else {
      equal = false;
      if (a[i] < b[j]) ++i; else ++j;
    }
  }
  if (equal && shared == d) return false;
  return shared + max_move_degree >= d;
}

ComponentDecomposition fiber_components(const IndexFiber& fiber,
                                        std::size_t max_move_degree) {
  const auto k = static_cast<std::uint32_t>(fiber.size());
  UnionFind sets(k);
  for (std::uint32_t i = 0; i < k && sets.count() > 1; ++i) {
    for (std::uint32_t j = i + 1; j < k; ++j) {
      if (sets.find(i) == sets.find(j)) continue;
      if (adjacent(fiber.member(i), fiber.member(j), max_move_degree)) {
        sets.unite(i, j);
      }
    }
  }
  ComponentDecomposition out;
  out.label.resize(k);
  for (std::uint32_t i = 0; i < k; ++i) out.label[i] = sets.find(i);
  out.component_count = sets.count();
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber_edges(
    const IndexFiber& fiber, std::size_t max_move_degree) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto k = static_cast<std::uint32_t>(fiber.size());
  for (std::uint32_t i = 0; i < k; ++i) {
    for (std::uint32_t j = i + 1; j < k; ++j) {
      if (adjacent(fiber.member(i), fiber.member(j), max_move_degree)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

ComponentDecomposition fiber_connected_under(
    std::span<const FlowMultiset> fiber, std::size_t max_move_degree) {
  if (max_move_degree < 2) {
    throw Error(ErrorKind::precondition, "move degree bound must be >= 2");
  }
  if (fiber.empty()) return {};
  std::vector<FlowMultiset> sorted(fiber.begin(), fiber.end());
  std::sort(sorted.begin(), sorted.end());
  const auto& head = sorted.front();
  const auto sig = signature(head);
  for (const auto& m : sorted) {
    if (m.group() != head.group() || m.n() != head.n() ||
        m.degree() != head.degree() || signature(m) != sig) {
      throw Error(ErrorKind::invalid_fiber, "fiber members have mixed signatures");
    }
  }
  const FlowSpace space(head.group(), head.n());
  IndexFiber indexed(sig, head.degree());
  for (const auto& m : sorted) indexed.push(to_indices(space, m));
  return fiber_components(indexed, max_move_degree);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FLOWCERT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::string CertificationReport::statement() const {
  const std::string scope = "n=" + std::to_string(n) +
                            ", moves of degree <= " +
                            std::to_string(max_move_degree);
  switch (verdict()) {
    case Verdict::verified:
      return "verified up to degree " + std::to_string(max_degree) + " for " +
             scope + "; higher degrees not checked";
    case Verdict::refuted:
      return "disconnected fiber at degree " +
             std::to_string(witnesses.front().degree) + " for " + scope +
             "; generators of higher degree are required";
    case Verdict::incomplete: {
      const std::size_t done = degrees.empty() ? 1 : degrees.back().degree;
      return "verified up to degree " + std::to_string(done) + " for " + scope +
             "; sweep stopped by capacity limit at " + capacity->where;
    }
  }
  return {};
}

CertificationReport certify_degree(const Group& group, std::size_t n,
                                   std::size_t max_degree,
                                   std::size_t max_move_degree,
                                   const CertifyOptions& options) {
  if (max_move_degree < 2 || max_degree < max_move_degree) {
    throw Error(ErrorKind::precondition, "need max_degree >= m >= 2");
  }
  const auto start = std::chrono::steady_clock::now();
  CertificationReport report{.group = group,
                             .n = n,
                             .max_degree = max_degree,
                             .max_move_degree = max_move_degree};
  const unsigned threads = resolve_threads(options.threads);

  try {
    const FlowSpace space(group, n, options.limits.max_flows);
    for (std::size_t d = 2; d <= max_degree; ++d) {
      const auto fibers = partition_fibers(space, d, options.limits);
      std::vector<FiberOutcome> outcomes(fibers.size());
      parallel_for(fibers.size(), threads, [&](std::size_t k) {
        outcomes[k] = examine(fibers[k], max_move_degree);
      });

      DegreeStats stats{.degree = d, .fiber_count = fibers.size()};
      for (std::size_t k = 0; k < fibers.size(); ++k) {
        const auto& fiber = fibers[k];
        stats.multiset_count += fiber.size();
        stats.largest_fiber = std::max<std::uint64_t>(stats.largest_fiber, fiber.size());
        if (outcomes[k].components <= 1) continue;
        ++stats.disconnected_count;
        if (!options.all_witnesses && !report.witnesses.empty()) continue;
        report.witnesses.push_back(Witness{
            .degree = d,
            .signature = fiber.signature(),
            .fiber_size = fiber.size(),
            .component_count = outcomes[k].components,
            .first = to_multiset(space, fiber.member(0)),
            .second = to_multiset(space, fiber.member(outcomes[k].second_root)),
        });
      }
      report.degrees.push_back(stats);
      if (options.on_degree) options.on_degree(d, stats);
      if (!report.witnesses.empty() && !options.all_witnesses) break;
    }
  } catch (const CapacityError& e) {
    report.capacity = CapacityNote{e.where(), e.required(), e.cap()};
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::optional<std::vector<Move>> find_move_path(const FlowMultiset& from,
                                                const FlowMultiset& to,
                                                std::size_t max_move_degree,
                                                const FiberLimits& limits) {
  if (from.group() != to.group() || from.n() != to.n()) {
    throw Error(ErrorKind::shape, "multisets differ in group or n");
  }
  if (!compatible(from, to)) {
    throw Error(ErrorKind::incompatible, "endpoints are not compatible");
  }
  if (max_move_degree < 1) {
    throw Error(ErrorKind::precondition, "move degree bound must be >= 1");
  }
  if (from == to) return std::vector<Move>{};

  const FlowSpace space(from.group(), from.n(), limits.max_flows);
  const auto fiber = enumerate_fiber(space, signature(from), limits.max_fiber);
  const auto source = position_in(fiber, to_indices(space, from));
  const auto target = position_in(fiber, to_indices(space, to));
  if (!source || !target) {
    throw Error(ErrorKind::internal_invariant, "endpoint missing from its fiber");
  }

  constexpr auto kUnseen = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> parent(fiber.size(), kUnseen);
  std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(*source)};
  parent[*source] = static_cast<std::uint32_t>(*source);
  while (!queue.empty() && parent[*target] == kUnseen) {
    const auto at = queue.front();
    queue.pop_front();
    for (std::uint32_t k = 0; k < fiber.size(); ++k) {
      if (parent[k] != kUnseen) continue;
      if (!adjacent(fiber.member(at), fiber.member(k), max_move_degree)) continue;
      parent[k] = at;
      queue.push_back(k);
    }
  }
  if (parent[*target] == kUnseen) return std::nullopt;

  std::vector<std::uint32_t> chain{static_cast<std::uint32_t>(*target)};
  while (chain.back() != *source) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());

  std::vector<Move> moves;
  for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
    const auto before = fiber.member(chain[s]);
    const auto after = fiber.member(chain[s + 1]);
    moves.push_back(Move{to_multiset(space, minus(before, after)),
                         to_multiset(space, minus(after, before))});
  }
  return moves;
}

std::optional<Witness> find_indispensable(const Group& group, std::size_t n,
                                          std::size_t max_move_degree,
                                          std::size_t max_degree,
                                          const CertifyOptions& options) {
  auto opts = options;
  opts.all_witnesses = false;
  auto report = certify_degree(group, n, std::max(max_degree, max_move_degree),
                               max_move_degree, opts);
  if (!report.witnesses.empty()) return std::move(report.witnesses.front());
  if (report.capacity) {
    throw CapacityError(report.capacity->required, report.capacity->cap,
                        report.capacity->where);
  }
  return std::nullopt;
}

}  // namespace flowcert
