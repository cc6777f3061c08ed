#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flowcert/fiber.hpp"
#include "flowcert/moves.hpp"

namespace flowcert {

/// True iff a and b (sorted, degree d) differ and share at least d - m
/// members, i.e. one move of degree <= m turns one into the other.
bool adjacent(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
              std::size_t max_move_degree);

/// Component labels of a fiber graph. label[k] is the position of the
/// smallest (canonically first) member of k's component.
struct ComponentDecomposition {
  std::vector<std::uint32_t> label;
  std::uint32_t component_count = 0;

  bool connected() const noexcept { return component_count <= 1; }
};

ComponentDecomposition fiber_components(const IndexFiber& fiber,
                                        std::size_t max_move_degree);

/// Edge list (i < j, ascending) of the fiber graph under moves of degree
/// <= max_move_degree.
std::vector<std::pair<std::uint32_t, std::uint32_t>> fiber_edges(
    const IndexFiber& fiber, std::size_t max_move_degree);

/// Flow-level entry point. Members must share one signature (invalid_fiber
/// otherwise) and max_move_degree >= 2. Labels refer to positions in the
/// canonically sorted member list.
ComponentDecomposition fiber_connected_under(
    std::span<const FlowMultiset> fiber, std::size_t max_move_degree);

struct DegreeStats {
  std::size_t degree = 0;
  std::uint64_t fiber_count = 0;
  std::uint64_t multiset_count = 0;
  std::uint64_t disconnected_count = 0;
  std::uint64_t largest_fiber = 0;

  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

/// A fiber that moves of degree <= m do not connect: two members from
/// different components (the canonical minima of the first two).
struct Witness {
  std::size_t degree = 0;
  ColumnSignature signature{0, 0};
  std::uint64_t fiber_size = 0;
  std::uint32_t component_count = 0;
  FlowMultiset first;
  FlowMultiset second;
};

struct CapacityNote {
  std::string where;
  std::uint64_t required = 0;
  std::uint64_t cap = 0;
};

enum class Verdict { verified, refuted, incomplete };

std::string_view to_string(Verdict v) noexcept;

struct CertificationReport {
  Group group;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  std::size_t max_move_degree = 0;
  std::vector<DegreeStats> degrees;
  std::vector<Witness> witnesses;
  std::optional<CapacityNote> capacity;
  double elapsed_ms = 0.0;

  Verdict verdict() const noexcept {
    if (!witnesses.empty()) return Verdict::refuted;
    if (capacity) return Verdict::incomplete;
    return Verdict::verified;
  }
  /// Human-readable scope of the verdict; never claims more than the sweep.
  std::string statement() const;
};

struct CertifyOptions {
  FiberLimits limits;
  unsigned threads = 0;  // 0: FLOWCERT_THREADS or hardware concurrency
  bool all_witnesses = false;
  std::function<void(std::size_t degree, const DegreeStats&)> on_degree;
};

/// Resolved worker count for `requested` (0 means automatic).
unsigned resolve_threads(unsigned requested);

/// Checks every fiber of degree 2..max_degree for connectivity under moves of
/// degree <= max_move_degree. By default the sweep stops after the first
/// degree with a disconnected fiber and keeps only its first witness (by
/// signature); `all_witnesses` continues and keeps every one. Capacity
/// overruns end the sweep and are recorded, not thrown.
CertificationReport certify_degree(const Group& group, std::size_t n,
                                   std::size_t max_degree,
                                   std::size_t max_move_degree,
                                   const CertifyOptions& options = {});

/// Shortest sequence of moves of degree <= max_move_degree from `from` to
/// `to`, or nullopt when they lie in different components.
std::optional<std::vector<Move>> find_move_path(const FlowMultiset& from,
                                                const FlowMultiset& to,
                                                std::size_t max_move_degree,
                                                const FiberLimits& limits = {});

/// First disconnected fiber scanning degrees 2..max_degree ascending (and
/// signatures ascending), or nullopt if none. CapacityError propagates.
std::optional<Witness> find_indispensable(const Group& group, std::size_t n,
                                          std::size_t max_move_degree,
                                          std::size_t max_degree,
                                          const CertifyOptions& options = {});

}  // namespace flowcert
