#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "flowcert/certify.hpp"
#include "flowcert/fiber.hpp"
#include "flowcert/moves.hpp"

namespace flowcert {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

json to_json(const Group& group);
json to_json(const Flow& flow);
json to_json(const FlowMultiset& m);
json to_json(const ColumnSignature& sig);
json to_json(const Move& mv);
json to_json(const Fiber& fiber);
json to_json(const Witness& w);
json to_json(const DegreeStats& s);
/// Elapsed time is only included on request so that reports stay
/// byte-identical across runs.
json to_json(const CertificationReport& report, bool include_timing = false);

Group group_from_json(const json& j);

/// Accepts a bare array of code arrays or an object carrying one under
/// "flows" (as emitted by the `flows` command). Errors name the offending
/// row and column.
FlowMultiset multiset_from_json(const json& j, const Group& group, std::size_t n);
Move move_from_json(const json& j, const Group& group, std::size_t n);

FlowMultiset load_multiset(const std::filesystem::path& path, const Group& group,
                           std::size_t n);

}  // namespace flowcert
