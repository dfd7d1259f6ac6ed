#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "icl/cli.hpp"
#include "icl/errors.hpp"

using namespace icl::cli;

int main(int argc, char** argv) {
  CLI::App app{"Local-coloring index codes: invariants, constructions, verification, extremal families"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<std::size_t> cap_n;
  std::string scheme = "scalar";
  std::string format;
  std::string m_range;
  std::string k_range;

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"text", OutputFormat::Text}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--output", config.output, "Output file (written atomically); stdout if omitted");
    sub->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--cap-n", cap_n, "Vertex cap for the exact solvers")->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Coloring invariants of a side-information graph");
  analyze->add_option("--input", config.inputs, "Side-information graph file")->required();
  common(analyze);

  auto* code = app.add_subcommand("code", "Build and verify an index code");
  code->add_option("--input", config.inputs, "Side-information graph file")->required();
  code->add_option("--scheme", scheme, "scalar | binary | fractional")
      ->check(CLI::IsMember({"scalar", "binary", "fractional"}));
  code->add_option("--seed", config.seed, "Seed for the binary scheme");
  common(code);

  auto* verify = app.add_subcommand("verify", "Check an index code against a side-information graph");
  verify->add_option("--input", config.inputs, "Side-information graph file")->required();
  verify->add_option("--code", config.code_path, "Index code JSON")->required();
  common(verify);

  auto* family = app.add_subcommand("family", "Generate oddeven or universal digraphs");
  family->add_option("name", config.family, "oddeven | universal")->required();
  family->add_option("--n", config.n, "Vertex count (oddeven)");
  family->add_option("--m", config.m, "Ground set size (universal)");
  family->add_option("--k", config.k, "Locality parameter (universal)");
  family->add_option("--r", config.r, "Fold (universal)");
  common(family);

  auto* universal = app.add_subcommand("universal", "Closed-form ratio for U(r,m,k)");
  universal->add_option("--m", config.m)->required();
  universal->add_option("--k", config.k)->required();
  universal->add_option("--r", config.r);
  common(universal);

  auto* sweep = app.add_subcommand("sweep", "Ratio table over parameter ranges");
  sweep->add_option("--k", config.k, "Single k");
  sweep->add_option("--k-range", k_range, "k range a:b");
  sweep->add_option("--m-range", m_range, "m range a:b (default k:40k)");
  sweep->add_option("--r", config.r);
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kInvalidInput;
  }

  try {
    config.caps = caps_from_environment();
    if (cap_n) config.caps = icl::SolverCaps::uniform(*cap_n);
    const auto defaults = icl::SolverCaps::defaults();
    if (config.caps.enumerate > defaults.enumerate || config.caps.fractional_local > defaults.fractional_local)
      std::cerr << "warning: solver caps raised above defaults; exact solvers are exponential\n";
    if (!k_range.empty()) config.k_range = parse_range(k_range);
    if (!m_range.empty()) config.m_range = parse_range(m_range);
  } catch (const icl::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  if (*analyze) config.command = Command::Analyze;
  if (*code) config.command = Command::Code;
  if (*verify) config.command = Command::Verify;
  if (*family) config.command = Command::Family;
  if (*universal) config.command = Command::Universal;
  if (*sweep) config.command = Command::Sweep;

  config.scheme = scheme == "binary" ? Scheme::Binary : scheme == "fractional" ? Scheme::Fractional : Scheme::Scalar;
  if (!format.empty())
    config.format = formats.at(format);
  else if (config.command == Command::Sweep)
    config.format = OutputFormat::Csv;
  else if (config.command == Command::Family)
    config.format = OutputFormat::Text;  // edge list

  return run(config, std::cout, std::cerr);
}
