#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "secant/classifier.hpp"
#include "secant/engine.hpp"
#include "secant/field.hpp"

namespace secant {

inline constexpr std::string_view kSchemaVersion = "1";

enum class OutputFormat { kJson, kCsv, kText };

std::string_view to_string(OutputFormat format);
OutputFormat parse_output_format(std::string_view text);

struct RunConfig {
  std::string variety_key;
  int trials = 3;
  std::uint64_t prime = kMersenne61;
  std::uint64_t seed = 0;
  FieldMode mode = FieldMode::kPrime;
  OutputFormat format = OutputFormat::kText;

  // Throws PreconditionError / InvalidFieldConfigError. The variety key is
  // checked by cmd_analyze, not here.
  void validate() const;
  EngineConfig engine() const;
};

struct NamedCheck {
  std::string name;
  bool passed = false;
};

// Exactly five checks, in this order: zak, delta_bounds, prop_IR,
// fiber_law, gauss_finite. A check whose hypotheses do not hold for the
// report passes vacuously.
std::vector<NamedCheck> run_checks(const SecantReport& report, bool smooth);

// Candidate cases for the report's (n, N); out_of_range outside the
// classified window or for n < 2.
std::vector<ClassificationCase> classify(const SecantReport& report);

struct ReportDocument {
  RunConfig config;
  SecantReport report;
  std::vector<ClassificationCase> classification;
  std::vector<NamedCheck> checks;

  bool all_passed() const;
};

ReportDocument cmd_analyze(const RunConfig& config);
std::string serialize(const ReportDocument& doc, OutputFormat format);

struct VerifyRow {
  std::string criterion;  // "AC1" .. "AC8"
  std::string subject;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct VerifySummary {
  RunConfig config;
  std::vector<VerifyRow> rows;

  bool reduced_confidence() const { return config.trials == 1; }
  bool all_passed() const;
  // First failing row, if any.
  const VerifyRow* first_failure() const;
};

inline constexpr int kFirstVerifiedCriterion = 1;
inline constexpr int kLastVerifiedCriterion = 8;

// Rows of one acceptance criterion (1..8).
std::vector<VerifyRow> verify_criterion(int criterion, const RunConfig& config);
VerifySummary cmd_verify_paper(const RunConfig& config);
std::string serialize(const VerifySummary& summary, OutputFormat format);

// Representative catalog keys, one per family.
std::vector<std::string> catalog_listing();

}  // namespace secant
