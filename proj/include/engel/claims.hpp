#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "engel/presentation.hpp"
#include "engel/report.hpp"

namespace engel {

/// Options for the verification driver.
struct VerifyOptions {
  long characteristic_override = -1; // -1: use the presentation's
  int jobs = 1;
  std::uint64_t seed = 0x5eed5eedULL;

  // Selective runs; when any is set, only the selected identity is checked.
  std::optional<int> lie_engel_n;
  std::optional<int> group_engel_n;
  std::optional<int> star_engel_n;
  std::string strategy = "symbolic"; // symbolic | symmetrized | both
  std::optional<ClaimStatus> expect; // expected status for selective runs
};

struct Expectation {
  std::string id;
  ClaimStatus expect;
};

/// The default claim catalog in acceptance-criteria order.
std::vector<Expectation> default_expectations();

std::vector<Expectation> load_expectations_file(const std::string& path);
std::string render_expectations(const std::vector<Expectation>& expectations);

/// Runs the full default catalog (or the selected single identity) against
/// the presentation. Dispatches on characteristic: 0 runs over the
/// rationals, p over the prime field.
VerificationReport run_claim_catalog(const PresentationSpec& spec, const VerifyOptions& opt);

/// Exit logic: every non-exploratory claim must match its expectation
/// (claims without one must pass; expectations for claims that did not run
/// are ignored). Returns the list of mismatches.
std::vector<std::string> expectation_mismatches(const VerificationReport& report,
                                                const std::vector<Expectation>& expectations);

} // namespace engel
