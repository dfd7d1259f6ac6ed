#include "icl/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <unistd.h>

#include "icl/errors.hpp"
#include "icl/families.hpp"
#include "icl/index_code.hpp"
#include "icl/serialize.hpp"

namespace icl::cli {

Range parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("bad range '" + text + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto colon = text.find(':');
  Range range;
  if (colon == std::string::npos) {
    range.lo = range.hi = number(text);
  } else {
    range.lo = number(text.substr(0, colon));
    range.hi = number(text.substr(colon + 1));
  }
  if (range.lo > range.hi) throw InvalidInput("empty range '" + text + "'");
  return range;
}

void RunConfig::validate() const {
  const bool needs_graph = command == Command::Analyze || command == Command::Code || command == Command::Verify;
  if (needs_graph && inputs.size() != 1) throw InvalidInput("exactly one --input graph file is required");
  if (command == Command::Verify && code_path.empty()) throw InvalidInput("verify needs --code");
  if (command == Command::Code) {
    if (scheme == Scheme::Binary && !seed) throw InvalidInput("scheme binary requires --seed");
    if (scheme != Scheme::Binary && seed) throw InvalidInput("--seed only applies to scheme binary");
  }
  if (caps.enumerate == 0 || caps.fractional_local == 0 || caps.rfold == 0 || caps.minrank == 0)
    throw InvalidInput("solver caps must be positive");
  if (command == Command::Family && family != "oddeven" && family != "universal")
    throw InvalidInput("unknown family '" + family + "' (expected oddeven or universal)");
}

SolverCaps caps_from_environment() {
  if (const char* env = std::getenv("ICL_CAP_N"); env && *env) {
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0)
      throw InvalidInput("ICL_CAP_N must be a positive integer");
    return SolverCaps::uniform(std::stoull(s));
  }
  return SolverCaps::defaults();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw InvalidInput("write failed for '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidInput("cannot rename into '" + path + "': " + ec.message());
  }
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string text_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << " = " << v << '\n';
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& config) {
  const Digraph side_info = read_graph_file(config.inputs.at(0));
  const Digraph interference = directed_complement(side_info);
  const UndirectedGraph interference_u = shadow(interference);
  const auto& caps = config.caps;

  const ProperColoring chi = optimal_coloring(interference_u, caps);
  const FractionalSolution chi_f = fractional_chromatic(interference_u, caps);
  const LocalColoring chi_l = local_chromatic(interference, caps);
  const FractionalSolution chi_fl = fractional_local_chromatic(interference, caps);

  Json invariants = Json::array();
  invariants.push_back(invariant_json("chromatic_number", Rational(chi.num_colors), to_json(chi)));
  invariants.push_back(invariant_json("fractional_chromatic", chi_f.objective, to_json(chi_f)));
  invariants.push_back(invariant_json("local_chromatic", Rational(chi_l.local_value), to_json(chi_l)));
  invariants.push_back(
      invariant_json("fractional_local_chromatic", chi_fl.objective, to_json(chi_fl), chi_fl.exact));
  std::vector<std::pair<std::string, std::string>> rows{
      {"chromatic_number", to_string(Rational(chi.num_colors))},
      {"fractional_chromatic", to_string(chi_f.objective)},
      {"local_chromatic", to_string(Rational(chi_l.local_value))},
      {"fractional_local_chromatic", to_string(chi_fl.objective) + (chi_fl.exact ? "" : " (upper bound)")}};
  if (side_info.size() <= caps.minrank) {
    const std::size_t mr = minrank2(side_info, caps);
    invariants.push_back(invariant_json("minrank2", Rational(mr), Json::object()));
    rows.push_back({"minrank2", std::to_string(mr)});
  }
  Json doc{{"n", side_info.size()}, {"invariants", invariants}};
  CommandResult result;
  result.summary = text_table(rows);
  result.document = config.format == OutputFormat::Text ? result.summary : dump(doc);
  return result;
}

CommandResult cmd_code(const RunConfig& config) {
  const Digraph side_info = read_graph_file(config.inputs.at(0));
  IndexCode code = [&] {
    switch (config.scheme) {
      case Scheme::Binary:
        return construct_binary_code(side_info, *config.seed, 64, config.caps);
      case Scheme::Fractional:
        return construct_fractional_code(side_info, config.caps).code;
      case Scheme::Scalar:
      default:
        return construct_scalar_code(side_info, config.caps).code;
    }
  }();
  const VerificationReport report = verify(code, side_info);
  CommandResult result;
  std::ostringstream summary;
  summary << "scheme = " << code.scheme << "\nfield = GF(" << code.field().q() << ")\nrate = "
          << to_string(code.broadcast_rate()) << "\nbit_rate = " << code.bit_rate()
          << "\nvalid = " << (report.valid ? "true" : "false") << '\n';
  result.summary = summary.str();
  if (!report.valid) {
    result.exit_code = kCheckFailed;
    result.summary += "refusing to emit a code that fails verification\n";
    return result;
  }
  Json doc = to_json(code);
  doc["verification"] = to_json(report);
  result.document = config.format == OutputFormat::Text ? result.summary : dump(doc);
  return result;
}

CommandResult cmd_verify(const RunConfig& config) {
  const Digraph side_info = read_graph_file(config.inputs.at(0));
  Json code_json;
  try {
    code_json = Json::parse(read_text(config.code_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("code file: ") + e.what());
  }
  const IndexCode code = index_code_from_json(code_json);
  const VerificationReport report = verify(code, side_info);
  CommandResult result;
  result.exit_code = report.valid ? kOk : kCheckFailed;
  result.summary = std::string("valid = ") + (report.valid ? "true" : "false") + "\n";
  result.document = config.format == OutputFormat::Text ? result.summary : dump(to_json(report));
  return result;
}

CommandResult cmd_family(const RunConfig& config) {
  CommandResult result;
  const GraphFormat gf = config.format == OutputFormat::Json ? GraphFormat::Json : GraphFormat::EdgeList;
  if (config.family == "universal") {
    const UniversalParams params{config.r, config.m, config.k};
    params.validate();
    const Digraph g = universal_digraph(params);
    result.document = serialize_graph(g, gf);
    result.summary = "vertices = " + std::to_string(g.size()) + "\nedges = " + std::to_string(g.edge_count()) + "\n";
    return result;
  }
  const Digraph g = odd_even_tournament(config.n);
  result.document = serialize_graph(g, gf);
  std::ostringstream summary;
  summary << "n = " << config.n << "\nlocal_bound = " << to_string(Rational(config.n, 2) + 1) << '\n';
  std::size_t max_closed = 0;
  for (Vertex v = 0; v < g.size(); ++v) max_closed = std::max(max_closed, g.out(v).size() + 1);
  summary << "max_closed_out_degree = " << max_closed << '\n';
  bool ok = Rational(max_closed) <= Rational(config.n, 2) + 1;
  if (g.size() <= config.caps.enumerate) {
    const auto chi_l = local_chromatic(g, config.caps);
    const auto chi_f = fractional_chromatic(shadow(g), config.caps);
    summary << "local_chromatic = " << chi_l.local_value << "\nfractional_chromatic = " << to_string(chi_f.objective)
            << '\n';
    ok = ok && Rational(chi_l.local_value) <= Rational(config.n, 2) + 1 && chi_f.objective == config.n;
  } else {
    summary << "solvers skipped: n above cap " << config.caps.enumerate << '\n';
  }
  summary << "gap_ok = " << (ok ? "true" : "false") << '\n';
  result.summary = summary.str();
  if (!ok) result.exit_code = kCheckFailed;
  return result;
}

CommandResult cmd_universal(const RunConfig& config) {
  const RatioReport report = universal_ratio({config.r, config.m, config.k});
  CommandResult result;
  result.summary = text_table({{"num_vertices", report.num_vertices.get_str()},
                               {"alpha", report.alpha.value.get_str() + (report.alpha.exact ? "" : " (lower bound)")},
                               {"chi_f", to_string(report.chi_f) + (report.alpha.exact ? "" : " (upper bound)")},
                               {"ratio", to_decimal(report.ratio, 12)},
                               {"bound_ok", report.bound_ok ? "true" : "false"}});
  result.document = config.format == OutputFormat::Text ? result.summary : dump(to_json(report));
  if (!report.bound_ok) result.exit_code = kCheckFailed;
  return result;
}

CommandResult cmd_sweep(const RunConfig& config) {
  Range ks = config.k_range ? *config.k_range : Range{config.k, config.k};
  if (ks.lo < 2) throw InvalidInput("sweep needs k >= 2 (--k or --k-range)");
  SweepResult sweep;
  for (std::size_t k = ks.lo; k <= ks.hi; ++k) {
    const Range ms = config.m_range ? *config.m_range : Range{k, 40 * k};
    SweepResult part = ratio_sweep(ms.lo, ms.hi, k, k, config.r);
    for (auto& row : part.rows) {
      sweep.rows.push_back(std::move(row));
      if (sweep.rows.back().ratio > sweep.rows[sweep.max_index].ratio) sweep.max_index = sweep.rows.size() - 1;
    }
    sweep.all_ok = sweep.all_ok && part.all_ok;
  }
  CommandResult result;
  if (sweep.rows.empty()) throw InvalidInput("sweep: parameter ranges are empty");
  const auto& best = sweep.rows[sweep.max_index];
  result.summary = "rows = " + std::to_string(sweep.rows.size()) + "\nmax_ratio = " + to_decimal(best.ratio, 12) +
                   " at m=" + std::to_string(best.params.m) + " k=" + std::to_string(best.params.k) +
                   "\nall_bound_ok = " + (sweep.all_ok ? "true" : "false") + "\n";
  if (config.format == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& row : sweep.rows) rows.push_back(to_json(row));
    result.document = dump(Json{{"rows", rows}, {"max_index", sweep.max_index}, {"all_bound_ok", sweep.all_ok}});
  } else if (config.format == OutputFormat::Text) {
    result.document = result.summary;
  } else {
    result.document = sweep_csv(sweep);
  }
  if (!sweep.all_ok) result.exit_code = kCheckFailed;
  return result;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    CommandResult result;
    switch (config.command) {
      case Command::Analyze: result = cmd_analyze(config); break;
      case Command::Code: result = cmd_code(config); break;
      case Command::Verify: result = cmd_verify(config); break;
      case Command::Family: result = cmd_family(config); break;
      case Command::Universal: result = cmd_universal(config); break;
      case Command::Sweep: result = cmd_sweep(config); break;
    }
    if (!result.document.empty()) {
      if (config.output.empty()) {
        out << result.document;
        if (result.document != result.summary) err << result.summary;
      } else {
        write_file_atomic(config.output, result.document);
        out << result.summary;
      }
    } else {
      err << result.summary;
    }
    return result.exit_code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CheckFailed& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace icl::cli
