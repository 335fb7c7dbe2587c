#pragma once

#include <string>

#include "json.hpp"
#include "regset/regular_sets.hpp"

namespace regset {

// Field order: group {label, order, spec}, H, A, r, s, double_coset_reps,
// U, X, checks.
nlohmann::ordered_json certificate_to_json(const RegSetCertificate& cert,
                                           const nlohmann::json& group_spec);
nlohmann::ordered_json certificate_to_json(const RegSetCertificate& cert);

struct VerifyReport {
  bool valid = false;
  Transcript transcript;
};

// Rebuilds G from the embedded group description and audits the certificate from scratch;
// the stored checks are ignored. Throws ParseError on schema violations.
VerifyReport verify_certificate(const nlohmann::json& doc);
bool verify_certificate_file(const std::string& path);

}  // namespace regset
