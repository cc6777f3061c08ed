#pragma once

// Worked examples from the literature on Z2/Z3 claw-tree flows, plus values
// frozen from the brute-force oracles in oracles.hpp.

#include <vector>

#include "flowcert/fiber.hpp"

namespace fixtures {

using flowcert::Flow;
using flowcert::FlowMultiset;
using flowcert::Group;
using flowcert::make_flow;

inline const Group z2 = Group::cyclic(2);
inline const Group z3 = Group::cyclic(3);

// Z2, n = 3: the four flows and their vertices.
inline const std::vector<std::vector<std::uint32_t>> kZ2N3Flows{
    {0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
inline const std::vector<std::vector<std::uint32_t>> kZ2N3Vertices{
    {1, 0, 1, 0, 1, 0}, {1, 0, 0, 1, 0, 1}, {0, 1, 1, 0, 0, 1}, {0, 1, 0, 1, 1, 0}};

// Z2, n = 6: a degree-3 pair joined by two quadratic exchanges.
inline FlowMultiset m1() {
  return FlowMultiset({make_flow(z2, {1, 1, 1, 1, 1, 1}), make_flow(z2, {0, 0, 0, 0, 0, 0}),
                       make_flow(z2, {1, 1, 1, 1, 0, 0})});
}
inline FlowMultiset m1_tilde() {
  return FlowMultiset({make_flow(z2, {0, 1, 0, 1, 0, 0}), make_flow(z2, {1, 0, 1, 0, 1, 1}),
                       make_flow(z2, {1, 1, 1, 1, 0, 0})});
}
inline FlowMultiset m2() {
  return FlowMultiset({make_flow(z2, {0, 1, 0, 1, 0, 0}), make_flow(z2, {1, 1, 1, 0, 1, 0}),
                       make_flow(z2, {1, 0, 1, 1, 0, 1})});
}
// Size of the fiber containing m1 (brute force over all C(34,3) bags).
inline constexpr std::size_t kM1FiberSize = 31;

// Z3 cubic relation on three indices, completed to n = 4 by zero sum.
inline FlowMultiset cubic_left() {
  return FlowMultiset({make_flow(z3, {0, 1, 1, 1}), make_flow(z3, {1, 0, 0, 2}),
                       make_flow(z3, {2, 0, 1, 0})});
}
inline FlowMultiset cubic_right() {
  return FlowMultiset({make_flow(z3, {2, 0, 0, 1}), make_flow(z3, {0, 0, 1, 2}),
                       make_flow(z3, {1, 1, 1, 0})});
}

// Z3, n = 3, degree 3: the unique fiber that quadratic moves leave
// disconnected (every index holds {0,1,2}); three isolated members.
inline FlowMultiset z3_witness_a() {
  return FlowMultiset({make_flow(z3, {0, 0, 0}), make_flow(z3, {1, 1, 1}),
                       make_flow(z3, {2, 2, 2})});
}
inline FlowMultiset z3_witness_b() {
  return FlowMultiset({make_flow(z3, {0, 1, 2}), make_flow(z3, {1, 2, 0}),
                       make_flow(z3, {2, 0, 1})});
}
inline FlowMultiset z3_witness_c() {
  return FlowMultiset({make_flow(z3, {0, 2, 1}), make_flow(z3, {1, 0, 2}),
                       make_flow(z3, {2, 1, 0})});
}

// Per-degree sweep statistics {d, fibers, multisets, disconnected, largest},
// frozen from the brute-force oracle.
struct Sweep {
  std::size_t d;
  std::uint64_t fibers, multisets, disconnected, largest;
};
inline const std::vector<Sweep> kZ2N4M2{
    {2, 33, 36, 0, 4}, {3, 96, 120, 0, 4}, {4, 225, 330, 0, 10}, {5, 456, 792, 0, 10}};
inline const std::vector<Sweep> kZ2N5M2{{2, 106, 136, 0, 4}, {3, 432, 816, 0, 10},
                                        {4, 1307, 3876, 0, 40}};
inline const std::vector<Sweep> kZ3N3M3{{2, 45, 45, 0, 1}, {3, 163, 165, 0, 3},
                                        {4, 477, 495, 0, 3}, {5, 1197, 1287, 0, 3},
                                        {6, 2674, 3003, 0, 6}};
inline const std::vector<Sweep> kZ3N4M3{
    {2, 324, 378, 0, 3}, {3, 2308, 3654, 0, 27}, {4, 11475, 27405, 0, 36}};

}  // namespace fixtures
