#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

constexpr int kExitUsage = 2;

void add_common(CLI::App &cmd, cliffkit::cli::RunConfig &cfg, std::string &signature,
                std::string &format) {
  cmd.add_option("--signature", signature, "Metric signature p,q (e.g. 0,2)");
  cmd.add_option("--out", cfg.out_path, "Output file (default: stdout)");
  cmd.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

int main(int argc, char **argv) {
  using namespace cliffkit::cli;

  CLI::App app{"Clifford algebra identity checks and approximation experiments"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string signature;
  std::string format;

  auto *verify = app.add_subcommand("verify", "Run the identity verification sweeps");
  add_common(*verify, cfg, signature, format);
  verify->add_option("--max-n", cfg.max_n, "Largest n = p + q to sweep")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Seed for randomized samples")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Random samples per signature")
      ->capture_default_str();

  auto *approx = app.add_subcommand("approx", "Bernstein degree sweep for a built-in target");
  add_common(*approx, cfg, signature, format);
  approx->add_option("--target", cfg.target, "constant | coordinate | clifford-exp | rotor")
      ->capture_default_str();
  approx->add_option("--degrees", cfg.degrees, "Comma-separated degree list")
      ->delimiter(',')
      ->capture_default_str();

  auto *table = app.add_subcommand("table", "Print the blade multiplication table");
  add_common(*table, cfg, signature, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!signature.empty())
      cfg.signature = cliffkit::parse_signature(signature);
    if (!format.empty())
      cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

    if (verify->parsed())
      return cmd_verify(cfg, std::cout, std::cerr);
    if (approx->parsed())
      return cmd_approx(cfg, std::cout, std::cerr);
    return cmd_table(cfg, std::cout, std::cerr);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
