#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affmon/groebner.hpp"
#include "affmon/json_convert.hpp"

namespace affmon {

/// One checkable claim. The rule picks the verifier, data carries the
/// witness it re-checks, and uses lists the earlier steps the claim builds
/// on (never later ones).
struct CertStep {
  std::string rule;
  std::string claim;
  std::string method;  // "structural", "oracle" or "brute-force"
  Json data = Json::object();
  std::vector<std::size_t> uses;
};

struct Certificate {
  std::string verdict;  // "yes", "no" or "unsupported"
  std::string subject;
  std::vector<CertStep> steps;
};

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);  // throws ParseError

/// FNV-1a over the canonical serialization, as 16 hex digits. Two
/// certificates with equal digests are byte-identical when serialized.
std::string certificate_digest(const Certificate& cert);
std::string digest_bytes(const std::string& bytes);

struct VerifyResult {
  bool ok = false;
  bool malformed = false;         // structurally broken, nothing was checked
  bool budget_exceeded = false;   // an oracle recheck ran out of budget
  std::optional<std::size_t> failed_step;
  std::string message;
};

/// Re-checks every step against its rule. Steps are independent except for
/// the uses ordering, so the first broken one is reported.
VerifyResult verify_certificate(const Certificate& cert,
                                std::size_t oracle_budget = default_reduction_budget());

std::vector<std::string> known_certificate_rules();

}  // namespace affmon
