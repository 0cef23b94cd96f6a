#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pvitau/poly.hpp"

namespace pvitau {

using Json = nlohmann::ordered_json;

enum class ResidualStatus { zero, nonzero, flagged };
enum class Verdict { pass, fail, flagged };
std::string to_string(ResidualStatus s);
std::string to_string(Verdict v);

struct VerificationReport {
  std::string suite;
  std::string subject;
  Json params = Json::object();
  ResidualStatus status = ResidualStatus::zero;
  std::optional<Poly> witness;  // nonzero residual numerator
  std::string note;
  Json details = Json::object();
  double elapsed_ms = 0;
};

struct ConjectureReport {
  std::string conjecture;
  std::string subject;
  Json params = Json::object();
  Verdict verdict = Verdict::pass;
  Json details = Json::object();
  std::vector<std::string> witnesses;
  double elapsed_ms = 0;
};

Json to_json(const VerificationReport& r, bool timing);
Json to_json(const ConjectureReport& r, bool timing);

// One document per run; reports keep the order given. Timing fields only
// when requested so the default output is byte-reproducible.
std::string verification_document(const std::vector<VerificationReport>& reports, bool timing);
std::string conjecture_document(const std::vector<ConjectureReport>& reports, bool timing);

// 0 when every non-flagged residual is zero, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);
// 0 unless some report fails.
int exit_code(const std::vector<ConjectureReport>& reports);

Json poly_json(const Poly& p);

}  // namespace pvitau
