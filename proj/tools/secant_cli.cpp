// secant: command-line front end for the secant invariant engine.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error,
// 3 numerical degeneracy (resample budget exhausted).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "secant/errors.hpp"
#include "secant/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secant invariants of parametrized projective varieties"};
  app.require_subcommand(1);

  secant::RunConfig config;
  std::string mode = "prime-field";
  std::string format = "text";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--trials", config.trials, "generic points per rank measurement")
        ->default_val(3);
    cmd->add_option("--prime", config.prime, "prime modulus (> 2^60)")
        ->default_val(secant::kMersenne61);
    cmd->add_option("--seed", config.seed, "master seed")->default_val(0);
    cmd->add_option("--mode", mode, "prime-field | rational")->default_val("prime-field");
    cmd->add_option("--format", format, "json | csv | text")->default_val("text");
  };

  auto* analyze = app.add_subcommand("analyze", "analyze one catalog variety");
  analyze->add_option("--variety", config.variety_key, "catalog key, e.g. veronese:5")
      ->required();
  add_common(analyze);

  auto* verify = app.add_subcommand("verify-paper", "run the full verification matrix");
  add_common(verify);

  auto* list = app.add_subcommand("list-catalog", "print the catalog key grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) {
      for (const auto& key : secant::catalog_listing()) std::cout << key << '\n';
      return kExitPass;
    }
    config.mode = secant::parse_field_mode(mode);
    config.format = secant::parse_output_format(format);

    if (analyze->parsed()) {
      const auto doc = secant::cmd_analyze(config);
      std::cout << secant::serialize(doc, config.format);
      return doc.all_passed() ? kExitPass : kExitCheckFailure;
    }
    const auto summary = secant::cmd_verify_paper(config);
    std::cout << secant::serialize(summary, config.format);
    if (const auto* failure = summary.first_failure()) {
      std::cerr << "failing row: " << failure->criterion << " " << failure->subject << '\n';
      return kExitCheckFailure;
    }
    return kExitPass;
  } catch (const secant::ResampleExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const secant::ProjectionHitSecantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const secant::DegeneratePointError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}
