#pragma once

// Registry of machine-checkable identities. Every check compares two
// independently computed sides: enumeration, recurrence, grammar or closed form.

#include <string>
#include <string_view>
#include <vector>

namespace gramcalc {

struct VerifyParams {
  int n_max = 8;   // enumerative range
  int order = 12;  // series truncation
};

struct IdentityCheck {
  std::string id;
  VerifyParams params;
  bool pass = false;
  /// First failing instance; empty on success.
  std::string witness;
  /// What was compared, including any range capped by the brute-force bound.
  std::string detail;
};

/// Registered ids in report order.
const std::vector<std::string>& identity_ids();
/// One-line description of an id. Throws std::invalid_argument if unknown.
std::string_view identity_description(std::string_view id);

/// Throws std::invalid_argument for an unknown id.
IdentityCheck verify(std::string_view id, const VerifyParams& params = {});
std::vector<IdentityCheck> verify_all(const VerifyParams& params = {});

}  // namespace gramcalc
