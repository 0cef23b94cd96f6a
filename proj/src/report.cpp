#include "pvitau/report.hpp"

#include <algorithm>
#include <sstream>

#include "pvitau/sequence_io.hpp"

namespace pvitau {

std::string to_string(ResidualStatus s) {
  switch (s) {
    case ResidualStatus::zero: return "zero";
    case ResidualStatus::nonzero: return "nonzero";
    case ResidualStatus::flagged: return "flagged";
  }
  return "zero";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::flagged: return "flagged";
  }
  return "pass";
}

Json poly_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeff_strings()) a.push_back(c);
  return a;
}

namespace {

std::string millis(double ms) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << ms;
  return ss.str();
}

}  // namespace

Json to_json(const VerificationReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["subject"] = r.subject;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? poly_json(*r.witness) : Json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.details.empty()) j["details"] = r.details;
  if (timing) j["elapsed_ms"] = millis(r.elapsed_ms);
  return j;
}

Json to_json(const ConjectureReport& r, bool timing) {
  Json j;
  j["conjecture"] = r.conjecture;
  j["subject"] = r.subject;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  j["details"] = r.details;
  j["witnesses"] = r.witnesses;
  if (timing) j["elapsed_ms"] = millis(r.elapsed_ms);
  return j;
}

std::string verification_document(const std::vector<VerificationReport>& reports, bool timing) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "verification";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, timing));
  doc["reports"] = std::move(arr);
  doc["exit_code"] = exit_code(reports);
  return doc.dump(1) + "\n";
}

std::string conjecture_document(const std::vector<ConjectureReport>& reports, bool timing) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "conjecture";
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r, timing));
  doc["reports"] = std::move(arr);
  doc["exit_code"] = exit_code(reports);
  return doc.dump(1) + "\n";
}

int exit_code(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.status == ResidualStatus::nonzero; })
             ? 1
             : 0;
}

int exit_code(const std::vector<ConjectureReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const auto& r) { return r.verdict == Verdict::fail; })
             ? 1
             : 0;
}

}  // namespace pvitau
