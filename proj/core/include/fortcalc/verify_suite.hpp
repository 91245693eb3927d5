#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fortcalc {

enum class Profile { kQuick, kFull };

enum class CheckStatus {
  kPass,
  kFail,
  kSkipped,
  // Closed form differs from its oracle by exactly the documented amount.
  kKnownDiscrepancy,
};

// Wire names: "pass", "fail", "skipped", "known-paper-discrepancy".
const char* to_string(CheckStatus status);
const char* to_string(Profile profile);
Profile parse_profile(const std::string& name);

struct CheckResult {
  std::string name;
  std::string oracle;  // what the measured value is checked against
  CheckStatus status = CheckStatus::kFail;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;  // skip reason or discrepancy description
  double wall_time_s = 0.0;
};

struct VerificationReport {
  Profile profile = Profile::kQuick;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool passed() const;  // no check has status kFail
  int count(CheckStatus status) const;
};

// Runs every closed-form-versus-oracle check. Randomized draws are seeded from
// `seed`, so measured values are reproducible for a given binary.
VerificationReport run_verification(Profile profile, std::uint64_t seed);

// JSON array of check objects. Wall times are left out so that reports for
// the same seed are byte-identical.
std::string report_to_json(const VerificationReport& report);

std::string report_to_text(const VerificationReport& report);

}  // namespace fortcalc
