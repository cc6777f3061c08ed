#include "flowcert/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "flowcert/certify.hpp"
#include "flowcert/error.hpp"
#include "flowcert/json_io.hpp"

namespace flowcert {

namespace {

struct RunConfig {
  std::vector<std::uint32_t> factors{2};
  std::size_t n = 3;
  std::size_t max_degree = 4;
  std::size_t max_move_degree = 2;
  FiberLimits limits;
  unsigned threads = 0;
  std::string output;
  std::string format = "json";
  std::string file_a;
  std::string file_b;
  bool all_witnesses = false;
  bool timing = false;
  bool progress = false;
};

void add_shape(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--group", cfg.factors,
                  "cyclic factor moduli, e.g. 3 or 2,2")
      ->delimiter(',')
      ->required();
  cmd->add_option("--n", cfg.n, "number of indices (leaves)")
      ->required()
      ->check(CLI::PositiveNumber);
}

void add_caps(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-multisets", cfg.limits.max_multisets,
                  "cap on degree-d multisets per sweep")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-fiber", cfg.limits.max_fiber, "cap on one fiber")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-flows", cfg.limits.max_flows, "cap on |G|^(n-1)")
      ->check(CLI::PositiveNumber);
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--output,-o", cfg.output, "write data to this file");
  cmd->add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

std::string join(const Flow& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(f[i].code);
  }
  return s;
}

std::string join(const FlowMultiset& m) {
  std::string s = "{";
  for (std::size_t k = 0; k < m.degree(); ++k) {
    if (k) s += ", ";
    s += "(" + join(m.flows()[k]) + ")";
  }
  return s + "}";
}

void emit_error(std::ostream& err, std::string_view kind, const std::string& message,
                json extra = json::object()) {
  json j{{"format", kFormatVersion}, {"error", kind}, {"message", message}};
  for (auto& [k, v] : extra.items()) j[k] = v;
  err << j.dump() << '\n';
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  Group group() const { return Group::make(cfg_.factors); }
  bool text() const { return cfg_.format == "text"; }

  std::ostream& sink() {
    if (cfg_.output.empty()) return out_;
    if (!file_) {
      file_.emplace(cfg_.output);
      if (!*file_) {
        throw Error(ErrorKind::parse, "cannot open output " + cfg_.output);
      }
    }
    return *file_;
  }

  void emit(const json& j) { sink() << j.dump() << '\n'; }

  int flows() {
    const auto g = group();
    const auto all = enumerate_flows(g, cfg_.n, cfg_.limits.max_flows);
    if (text()) {
      for (const auto& f : all) sink() << join(f) << '\n';
      return kExitOk;
    }
    json list = json::array();
    for (const auto& f : all) list.push_back(to_json(f));
    emit({{"format", kFormatVersion},
          {"group", to_json(g)},
          {"n", cfg_.n},
          {"flows", std::move(list)}});
    return kExitOk;
  }

  int export_matrix() {
    const auto all = enumerate_flows(group(), cfg_.n, cfg_.limits.max_flows);
    auto& os = sink();
    os << all.size() << ' ' << cfg_.n * group().order() << '\n';
    for (const auto& f : all) os << to_row(vertex_embedding(f)) << '\n';
    return kExitOk;
  }

  int compat() {
    const auto g = group();
    const auto a = load_multiset(cfg_.file_a, g, cfg_.n);
    const auto b = load_multiset(cfg_.file_b, g, cfg_.n);
    const bool ok = compatible(a, b);
    const auto diff = differing_indices(a, b);
    if (text()) {
      sink() << (ok ? "compatible" : "incompatible");
      if (a.degree() != b.degree()) {
        sink() << " (degrees " << a.degree() << " and " << b.degree() << ")";
      } else if (!ok) {
        sink() << " at indices";
        for (auto i : diff) sink() << ' ' << i;
      }
      sink() << '\n';
    } else {
      emit({{"format", kFormatVersion},
            {"compatible", ok},
            {"degrees", {a.degree(), b.degree()}},
            {"differing_indices", diff}});
    }
    return ok ? kExitOk : kExitRefuted;
  }

  int path() {
    const auto g = group();
    const auto a = load_multiset(cfg_.file_a, g, cfg_.n);
    const auto b = load_multiset(cfg_.file_b, g, cfg_.n);
    const auto moves = find_move_path(a, b, cfg_.max_move_degree, cfg_.limits);
    if (text()) {
      if (!moves) {
        sink() << "not connected by moves of degree <= " << cfg_.max_move_degree
               << '\n';
      } else {
        auto at = a;
        sink() << join(at) << '\n';
        for (const auto& mv : *moves) {
          at = apply_move(at, mv);
          sink() << "  replace " << join(mv.removed) << " by "
                 << join(mv.inserted) << "\n" << join(at) << '\n';
        }
      }
    } else {
      json j{{"format", kFormatVersion},
             {"m", cfg_.max_move_degree},
             {"connected", moves.has_value()}};
      if (moves) {
        json list = json::array();
        for (const auto& mv : *moves) list.push_back(to_json(mv));
        j["length"] = moves->size();
        j["moves"] = std::move(list);
      }
      emit(j);
    }
    return moves ? kExitOk : kExitRefuted;
  }

  int fiber() {
    const auto g = group();
    const auto a = load_multiset(cfg_.file_a, g, cfg_.n);
    const auto sig = signature(a);
    Fiber f{sig, enumerate_fiber(sig, g, cfg_.n, cfg_.limits)};
    if (text()) {
      for (const auto& m : f.members) sink() << join(m) << '\n';
    } else {
      emit(to_json(f));
    }
    return kExitOk;
  }

  CertifyOptions certify_options(std::ostream& err) const {
    CertifyOptions opts{.limits = cfg_.limits,
                        .threads = cfg_.threads,
                        .all_witnesses = cfg_.all_witnesses};
    if (cfg_.progress) {
      opts.on_degree = [&err](std::size_t d, const DegreeStats& s) {
        err << "degree " << d << ": " << s.fiber_count << " fibers, "
            << s.multiset_count << " multisets, " << s.disconnected_count
            << " disconnected\n";
      };
    }
    return opts;
  }

  int certify(std::ostream& err) {
    if (cfg_.max_move_degree > cfg_.max_degree) {
      throw CLI::ValidationError("--m must not exceed --dmax");
    }
    const auto report = certify_degree(group(), cfg_.n, cfg_.max_degree,
                                       cfg_.max_move_degree,
                                       certify_options(err));
    if (text()) {
      auto& os = sink();
      os << to_string(report.verdict()) << ": " << report.statement() << '\n';
      for (const auto& s : report.degrees) {
        os << "d=" << s.degree << " fibers=" << s.fiber_count
           << " multisets=" << s.multiset_count
           << " disconnected=" << s.disconnected_count
           << " largest=" << s.largest_fiber << '\n';
      }
      for (const auto& w : report.witnesses) {
        os << "witness d=" << w.degree << " components=" << w.component_count
           << ": " << join(w.first) << " vs " << join(w.second) << '\n';
      }
      if (cfg_.timing) os << "elapsed_ms=" << report.elapsed_ms << '\n';
    } else {
      emit(to_json(report, cfg_.timing));
    }
    switch (report.verdict()) {
      case Verdict::verified: return kExitOk;
      case Verdict::refuted: return kExitRefuted;
      case Verdict::incomplete:
        emit_error(err, "capacity", report.capacity->where,
                   {{"required", report.capacity->required},
                    {"cap", report.capacity->cap}});
        return kExitCapacity;
    }
    return kExitOk;
  }

  int witness(std::ostream& err) {
    const auto w = find_indispensable(group(), cfg_.n, cfg_.max_move_degree,
                                      cfg_.max_degree, certify_options(err));
    if (text()) {
      if (w) {
        sink() << "witness d=" << w->degree << " components="
               << w->component_count << ": " << join(w->first) << " vs "
               << join(w->second) << '\n';
      } else {
        sink() << "none up to degree "
               << std::max(cfg_.max_degree, cfg_.max_move_degree) << '\n';
      }
    } else {
      json j{{"format", kFormatVersion},
             {"group", to_json(group())},
             {"n", cfg_.n},
             {"m", cfg_.max_move_degree},
             {"d_max", std::max(cfg_.max_degree, cfg_.max_move_degree)},
             {"found", w.has_value()}};
      if (w) j["witness"] = to_json(*w);
      emit(j);
    }
    return w ? kExitRefuted : kExitOk;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::optional<std::ofstream> file_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"flowcert: exact flow-model certification on claw trees"};
  app.require_subcommand(1);

  auto* flows = app.add_subcommand("flows", "list all flows as code arrays");
  add_shape(flows, cfg);
  add_common(flows, cfg);
  flows->add_option("--max-flows", cfg.limits.max_flows, "cap on |G|^(n-1)");

  auto* matrix = app.add_subcommand("export-matrix",
                                    "vertex matrix: 'rows cols' then one row per flow");
  add_shape(matrix, cfg);
  matrix->add_option("--output,-o", cfg.output, "write data to this file");
  matrix->add_option("--max-flows", cfg.limits.max_flows, "cap on |G|^(n-1)");

  auto* compat = app.add_subcommand("compat", "compare two multisets");
  add_shape(compat, cfg);
  add_common(compat, cfg);
  compat->add_option("--a", cfg.file_a, "first multiset file")->required();
  compat->add_option("--b", cfg.file_b, "second multiset file")->required();

  auto* path = app.add_subcommand("path", "shortest move sequence between two multisets");
  add_shape(path, cfg);
  add_common(path, cfg);
  add_caps(path, cfg);
  path->add_option("--a", cfg.file_a, "start multiset file")->required();
  path->add_option("--b", cfg.file_b, "target multiset file")->required();
  path->add_option("--m", cfg.max_move_degree, "maximal move degree")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* fiber = app.add_subcommand("fiber", "all multisets compatible with one");
  add_shape(fiber, cfg);
  add_common(fiber, cfg);
  add_caps(fiber, cfg);
  fiber->add_option("--a", cfg.file_a, "multiset file")->required();

  auto* certify = app.add_subcommand("certify", "exhaustive fiber connectivity sweep");
  auto* witness = app.add_subcommand("witness", "lowest-degree disconnected fiber");
  for (auto* cmd : {certify, witness}) {
    add_shape(cmd, cfg);
    add_common(cmd, cfg);
    add_caps(cmd, cfg);
    cmd->add_option("--m", cfg.max_move_degree, "maximal move degree")
        ->required()
        ->check(CLI::Range(2, 1 << 16));
    cmd->add_option("--threads", cfg.threads,
                    "worker threads (default: FLOWCERT_THREADS or all cores)");
    cmd->add_flag("--progress", cfg.progress, "per-degree progress on stderr");
  }
  certify->add_option("--dmax", cfg.max_degree, "highest degree to check")
      ->required()
      ->check(CLI::Range(2, 1 << 16));
  certify->add_flag("--all-witnesses", cfg.all_witnesses,
                    "continue after the first disconnected fiber");
  certify->add_flag("--timing", cfg.timing, "include elapsed time in the report");
  witness->add_option("--dmax", cfg.max_degree, "highest degree to scan (default 4)")
      ->check(CLI::Range(2, 1 << 16));

  std::vector<std::string> argv_store{"flowcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    Runner run(cfg, out);
    if (*flows) return run.flows();
    if (*matrix) return run.export_matrix();
    if (*compat) return run.compat();
    if (*path) return run.path();
    if (*fiber) return run.fiber();
    if (*certify) return run.certify(err);
    if (*witness) return run.witness(err);
  } catch (const CapacityError& e) {
    emit_error(err, "capacity", e.what(),
               {{"where", e.where()}, {"required", e.required()}, {"cap", e.cap()}});
    return kExitCapacity;
  } catch (const ParseError& e) {
    json extra = json::object();
    if (e.row() >= 0) extra["row"] = e.row();
    if (e.col() >= 0) extra["col"] = e.col();
    emit_error(err, to_string(e.kind()), e.what(), std::move(extra));
    return kExitUsage;
  } catch (const Error& e) {
    emit_error(err, to_string(e.kind()), e.what());
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    emit_error(err, "usage", e.what());
    return kExitUsage;
  }
  emit_error(err, "usage", "no subcommand");
  return kExitUsage;
}

}  // namespace flowcert
