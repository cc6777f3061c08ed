#include "flowcert/json_io.hpp"

#include <fstream>
#include <sstream>

#include "flowcert/error.hpp"

namespace flowcert {

json to_json(const Group& group) { return json{{"factors", group.factors()}}; }

json to_json(const Flow& flow) {
  json out = json::array();
  for (auto v : flow.values()) out.push_back(v.code);
  return out;
}

json to_json(const FlowMultiset& m) {
  json out = json::array();
  for (const auto& f : m.flows()) out.push_back(to_json(f));
  return out;
}

json to_json(const ColumnSignature& sig) {
  json out = json::array();
  for (std::size_t i = 0; i < sig.n(); ++i) {
    json row = json::array();
    for (std::uint32_t c = 0; c < sig.order(); ++c) row.push_back(sig.at(i, c));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Move& mv) {
  return json{{"out", to_json(mv.removed)}, {"in", to_json(mv.inserted)}};
}

json to_json(const Fiber& fiber) {
  json members = json::array();
  for (const auto& m : fiber.members) members.push_back(to_json(m));
  return json{{"format", kFormatVersion},
              {"signature", to_json(fiber.signature)},
              {"multisets", std::move(members)}};
}

json to_json(const Witness& w) {
  return json{{"degree", w.degree},
              {"signature", to_json(w.signature)},
              {"fiber_size", w.fiber_size},
              {"components", w.component_count},
              {"a", to_json(w.first)},
              {"b", to_json(w.second)}};
}

json to_json(const DegreeStats& s) {
  return json{{"d", s.degree},
              {"fiber_count", s.fiber_count},
              {"multiset_count", s.multiset_count},
              {"disconnected_count", s.disconnected_count},
              {"largest_fiber", s.largest_fiber}};
}

json to_json(const CertificationReport& report, bool include_timing) {
  json degrees = json::array();
  for (const auto& s : report.degrees) degrees.push_back(to_json(s));
  json witnesses = json::array();
  for (const auto& w : report.witnesses) witnesses.push_back(to_json(w));
  json out{{"format", kFormatVersion},
           {"group", to_json(report.group)},
           {"n", report.n},
           {"d_max", report.max_degree},
           {"m", report.max_move_degree},
           {"degrees", std::move(degrees)},
           {"witnesses", std::move(witnesses)},
           {"verdict", to_string(report.verdict())},
           {"statement", report.statement()}};
  if (report.capacity) {
    out["capacity"] = json{{"where", report.capacity->where},
                           {"required", report.capacity->required},
                           {"cap", report.capacity->cap}};
  }
  if (include_timing) out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

Group group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array()) {
    throw ParseError(ErrorKind::parse, -1, -1, "group must be {\"factors\":[...]}");
  }
  std::vector<std::uint32_t> factors;
  for (const auto& f : j["factors"]) {
    if (!f.is_number_unsigned()) {
      throw ParseError(ErrorKind::parse, -1, -1, "group factor must be a non-negative integer");
    }
    factors.push_back(f.get<std::uint32_t>());
  }
  return Group::make(factors);
}

FlowMultiset multiset_from_json(const json& j, const Group& group, std::size_t n) {
  const json* rows = &j;
  if (j.is_object()) {
    if (j.contains("format") && j["format"] != kFormatVersion) {
      throw ParseError(ErrorKind::parse, -1, -1, "unsupported format version");
    }
    if (j.contains("n") && j["n"] != n) {
      throw ParseError(ErrorKind::shape, -1, -1, "file n does not match --n");
    }
    if (j.contains("group") && group_from_json(j["group"]) != group) {
      throw ParseError(ErrorKind::shape, -1, -1, "file group does not match --group");
    }
    if (!j.contains("flows")) {
      throw ParseError(ErrorKind::parse, -1, -1, "object has no \"flows\" array");
    }
    rows = &j["flows"];
  }
  if (!rows->is_array()) {
    throw ParseError(ErrorKind::parse, -1, -1, "expected an array of flows");
  }
  std::vector<Flow> flows;
  for (std::size_t r = 0; r < rows->size(); ++r) {
    const auto& row = (*rows)[r];
    const auto rr = static_cast<long>(r);
    if (!row.is_array()) {
      throw ParseError(ErrorKind::parse, rr, -1,
                       "row " + std::to_string(r) + " is not an array");
    }
    if (row.size() != n) {
      throw ParseError(ErrorKind::shape, rr, -1,
                       "row " + std::to_string(r) + " has " +
                           std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n));
    }
    std::vector<Elem> values;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const auto& v = row[c];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= group.order()) {
        throw ParseError(ErrorKind::invalid_element, rr, static_cast<long>(c),
                         "row " + std::to_string(r) + " col " + std::to_string(c) +
                             ": not an element code of the group");
      }
      values.push_back(Elem{v.get<std::uint32_t>()});
    }
    try {
      flows.emplace_back(group, std::move(values));
    } catch (const NotAFlowError& e) {
      throw ParseError(ErrorKind::not_a_flow, rr, -1,
                       "row " + std::to_string(r) + ": " + e.what());
    }
  }
  return FlowMultiset(group, n, std::move(flows));
}

Move move_from_json(const json& j, const Group& group, std::size_t n) {
  if (!j.is_object() || !j.contains("out") || !j.contains("in")) {
    throw ParseError(ErrorKind::parse, -1, -1, "move must be {\"out\":..,\"in\":..}");
  }
  return Move{multiset_from_json(j["out"], group, n),
              multiset_from_json(j["in"], group, n)};
}

FlowMultiset load_multiset(const std::filesystem::path& path, const Group& group,
                           std::size_t n) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(ErrorKind::parse, -1, -1, "cannot open " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(ErrorKind::parse, -1, static_cast<long>(e.byte),
                     path.string() + ": " + e.what());
  }
  return multiset_from_json(j, group, n);
}

}  // namespace flowcert
