#pragma once

// Command implementations behind the tacsq executable. Kept in a library so
// tests can drive them without spawning processes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tac/evolution.hpp"
#include "tac/spectrum.hpp"

namespace tac::cli {

inline constexpr const char* kToolName = "tacsq";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitInvalidInput = 2,
  kExitNumericFailure = 3,
};

enum class Command { charpoly, spectrum, classify, verify, evolve, table1 };
enum class Format { json, csv, text };

struct RunConfig {
  Command command = Command::charpoly;
  /// Required for every command except table1 (where it selects one row).
  std::optional<HalfInt> j;
  /// Decimal strings, parsed at the requested precision.
  std::string chi = "1";
  std::string omega = "0";
  std::string t_max = "3";
  long steps = 601;
  int digits = kDefaultDigits;
  /// Empty selects the command's default (csv for evolve, text for verify
  /// and table1, json otherwise).
  std::optional<Format> format;
  /// Empty writes to the output stream passed to run().
  std::string output_path;
  /// verify only: flip the sign of one squared chain coupling.
  bool inject_fault = false;
};

std::string to_string(Command c);
Command parse_command(const std::string& text);
Format parse_format(const std::string& text);

/// Runs one command, writing results to `out` (or cfg.output_path) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_charpoly(const RunConfig& cfg, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_classify(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_evolve(const RunConfig& cfg, std::ostream& out);
int cmd_table1(const RunConfig& cfg, std::ostream& out);

/// Significant digits printed for floating values: max(17, digits - 10).
int output_digits(int digits);
/// Enough significant digits to read a value back bit for bit.
int exact_digits(const Real& x);

nlohmann::json metadata_json(const RunConfig& cfg);
/// "# key: value" lines.
void write_metadata_comments(const RunConfig& cfg, std::ostream& out);

nlohmann::json radical_to_json(const RadicalExpr& e);
RadicalExpr radical_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const SpectrumReport& report);
SpectrumReport spectrum_from_json(const nlohmann::json& j);
/// Field-by-field equality, values compared exactly.
bool same_report(const SpectrumReport& a, const SpectrumReport& b);

void write_csv(const TimeSeries& series, const RunConfig& cfg, std::ostream& out);

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The property suite behind `verify`: chiral anticommutation, pairing,
/// trace moments, unitarity, conservation laws, oracle agreement and, for
/// j = 2, the closed-form propagator.
std::vector<PropertyResult> verify_properties(HalfInt j, const Real& chi, const Real& omega, int digits,
                                              bool inject_fault = false);

/// Closed-form exp(-i chi_t H/chi) for j = 2 (rows m = 2 ... -2). Entries
/// coupling m = 0 with m = +-2 are sin(2 sqrt(3) chi_t)/sqrt(2).
DenseOperator closed_form_propagator_j2(const Real& chi_t, int digits);

struct Table1Row {
  HalfInt j;
  std::string status;  // MATCH, MISMATCH or UNPARSEABLE
  bool questionable = false;
  /// For rows with a corrected candidate: does it equal the computed polynomial.
  std::optional<bool> corrected_match;
  /// Structural checks on the computed polynomial (parity, leading
  /// coefficient, all roots real, degeneracy column).
  bool structure_ok = false;
  std::string detail;
  /// MATCH, or a known misprint whose corrected candidate matches.
  bool acceptable() const;
};

Table1Row check_table1_row(HalfInt j);

}  // namespace tac::cli
