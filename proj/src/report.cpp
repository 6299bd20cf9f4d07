#include "engel/report.hpp"

#include <sstream>

#include <json.hpp>

namespace engel {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::exploratory: return "exploratory";
  }
  throw internal_error("bad claim status");
}

ClaimStatus claim_status_from_string(const std::string& s) {
  if (s == "pass") return ClaimStatus::pass;
  if (s == "fail") return ClaimStatus::fail;
  if (s == "exploratory") return ClaimStatus::exploratory;
  throw domain_error("unknown claim status '" + s + "'");
}

void VerificationReport::add(Claim c) {
  ENGEL_CHECK(find(c.id) == nullptr, "duplicate claim id: " + c.id);
  ENGEL_CHECK(c.status != ClaimStatus::fail || c.witness.has_value(),
              "failing claim without a witness: " + c.id);
  claims_.push_back(std::move(c));
}

const Claim* VerificationReport::find(const std::string& id) const {
  for (const auto& c : claims_)
    if (c.id == id) return &c;
  return nullptr;
}

std::string render_report_text(const VerificationReport& r, bool include_timings) {
  std::ostringstream out;
  out << "algebra: generators";
  for (const auto& g : r.algebra.generators) out << " " << g;
  out << "; characteristic " << r.algebra.characteristic;
  if (r.algebra.outside_theorem_hypotheses) out << " (outside theorem hypotheses)";
  out << "; dim " << r.algebra.dim << "; graded dims";
  for (std::size_t i = 0; i < r.algebra.graded_dims.size(); ++i)
    out << (i ? "," : " ") << r.algebra.graded_dims[i];
  out << "; nilpotency degree " << r.algebra.nilpotency_degree << "\n";
  for (const auto& c : r.claims()) {
    out << to_string(c.status) << "  " << c.id;
    if (include_timings) out << "  [" << c.millis << " ms]";
    out << "\n    " << c.statement << "\n";
    if (c.detail) out << "    detail: " << *c.detail << "\n";
    if (c.witness) {
      for (const auto& [name, value] : c.witness->elements)
        out << "    witness " << name << " = " << value << "\n";
      out << "    witness value = " << c.witness->value << "\n";
    }
  }
  return out.str();
}

std::string render_report_json(const VerificationReport& r, bool include_timings) {
  nlohmann::ordered_json doc;
  doc["algebra"] = {
      {"generators", r.algebra.generators},
      {"characteristic", r.algebra.characteristic},
      {"dim", r.algebra.dim},
      {"graded_dims", r.algebra.graded_dims},
      {"nilpotency_degree", r.algebra.nilpotency_degree},
      {"outside_theorem_hypotheses", r.algebra.outside_theorem_hypotheses},
  };
  doc["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : r.claims()) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["anchor"] = c.anchor;
    j["status"] = to_string(c.status);
    if (c.detail) j["detail"] = *c.detail;
    if (c.witness) {
      nlohmann::ordered_json w;
      w["elements"] = nlohmann::ordered_json::array();
      for (const auto& [name, value] : c.witness->elements)
        w["elements"].push_back({{"name", name}, {"value", value}});
      w["value"] = c.witness->value;
      j["witness"] = w;
    }
    if (include_timings) j["millis"] = c.millis;
    doc["claims"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

namespace {

VerificationReport parse_report_doc(const nlohmann::json& doc) {
  VerificationReport r;
  const auto& a = doc.at("algebra");
  r.algebra.generators = a.at("generators").get<std::vector<std::string>>();
  r.algebra.characteristic = a.at("characteristic").get<long>();
  r.algebra.dim = a.at("dim").get<int>();
  r.algebra.graded_dims = a.at("graded_dims").get<std::vector<int>>();
  r.algebra.nilpotency_degree = a.at("nilpotency_degree").get<int>();
  r.algebra.outside_theorem_hypotheses = a.at("outside_theorem_hypotheses").get<bool>();
  for (const auto& j : doc.at("claims")) {
    Claim c;
    c.id = j.at("id").get<std::string>();
    c.statement = j.at("statement").get<std::string>();
    c.anchor = j.at("anchor").get<std::string>();
    c.status = claim_status_from_string(j.at("status").get<std::string>());
    if (j.contains("detail")) c.detail = j["detail"].get<std::string>();
    if (j.contains("witness")) {
      Witness w;
      for (const auto& e : j["witness"].at("elements"))
        w.elements.emplace_back(e.at("name").get<std::string>(),
                                e.at("value").get<std::string>());
      w.value = j["witness"].at("value").get<std::string>();
      c.witness = std::move(w);
    }
    if (j.contains("millis")) c.millis = j["millis"].get<double>();
    r.add(std::move(c));
  }
  return r;
}

} // namespace

VerificationReport parse_report_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("invalid report JSON: ") + e.what(), e.byte);
  }
  try {
    return parse_report_doc(doc);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("report schema violation: ") + e.what(), 0);
  }
}

} // namespace engel
