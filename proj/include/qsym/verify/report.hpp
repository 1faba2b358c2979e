// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSYM_VERIFY_REPORT_HPP_
#define QSYM_VERIFY_REPORT_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace qsym {

enum class ClaimStatus { kPass, kFail, kSkipped };
std::string to_string(ClaimStatus s);

struct Claim {
  std::string id;
  std::string anchor;  // where the claim is stated
  std::string expected;
  std::string computed;
  ClaimStatus status = ClaimStatus::kFail;
  std::string reason;  // for skipped claims
  double ms = 0;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Claim>& claims() const { return claims_; }

  // Runs `compute`, timing it, and records pass iff its result equals
  // `expected`. A thrown CapacityExceeded or std::length_error records a
  // skip; any other exception a failure. Throws std::invalid_argument for a
  // repeated id or an empty anchor.
  const Claim& check(std::string id, std::string anchor, std::string expected,
                     const std::function<std::string()>& compute);
  const Claim& skip(std::string id, std::string anchor, std::string expected, std::string reason);
  void add(Claim claim);
  void append(const VerificationReport& other);

  bool passed() const;  // no claim failed
  std::size_t count(ClaimStatus s) const;
  const Claim* find(const std::string& id) const;

  // {suite, timestamp, claims: [{id, anchor, expected, computed, status, ms}]}.
  // Without timing the timestamp and ms fields are omitted, which makes the
  // output reproducible byte for byte.
  std::string to_json(bool with_timing = true) const;
  // One line per claim.
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<Claim> claims_;
};

}  // namespace qsym

#endif  // QSYM_VERIFY_REPORT_HPP_
