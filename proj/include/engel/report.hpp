#pragma once

#include <optional>
#include <string>
#include <vector>

#include "engel/errors.hpp"

namespace engel {

enum class ClaimStatus { pass, fail, exploratory };

std::string to_string(ClaimStatus s);
ClaimStatus claim_status_from_string(const std::string& s);

/// A concrete counterexample: named elements in basis coordinates plus the
/// rendered nonzero value of the violated identity.
struct Witness {
  std::vector<std::pair<std::string, std::string>> elements;
  std::string value;
};

struct Claim {
  std::string id;         // unique, stable
  std::string statement;  // human sentence
  std::string anchor;     // stable machine key of the mathematical assertion
  ClaimStatus status = ClaimStatus::pass;
  std::optional<Witness> witness;
  std::optional<std::string> detail; // e.g. observed outcome of an exploratory run
  double millis = 0;
};

struct AlgebraSummary {
  std::vector<std::string> generators;
  long characteristic = 0;
  int dim = 0;
  std::vector<int> graded_dims;
  int nilpotency_degree = 0;
  bool outside_theorem_hypotheses = false;
};

/// Ordered claim list plus the algebra summary. Claims keep catalog order;
/// ids are unique and every failing claim carries a witness.
class VerificationReport {
public:
  AlgebraSummary algebra;

  void add(Claim c);
  const std::vector<Claim>& claims() const { return claims_; }
  const Claim* find(const std::string& id) const;

private:
  std::vector<Claim> claims_;
};

/// Deterministic plain-text rendering; timing lines are opt-in because they
/// are outside the byte-determinism contract.
std::string render_report_text(const VerificationReport& r, bool include_timings = false);

/// Deterministic structured (JSON) rendering.
std::string render_report_json(const VerificationReport& r, bool include_timings = false);

VerificationReport parse_report_json(const std::string& text);

} // namespace engel
