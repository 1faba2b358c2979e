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

#include "qsym/verify/report.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qsym/analysis/conjugacy.hpp"

namespace qsym {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::kPass:
      return "pass";
    case ClaimStatus::kFail:
      return "fail";
    case ClaimStatus::kSkipped:
      return "skipped";
  }
  return "fail";
}

void VerificationReport::add(Claim claim) {
  if (claim.anchor.empty()) throw std::invalid_argument("claim without anchor: " + claim.id);
  if (find(claim.id) != nullptr) throw std::invalid_argument("repeated claim id: " + claim.id);
  claims_.push_back(std::move(claim));
}

const Claim& VerificationReport::check(std::string id, std::string anchor, std::string expected,
                                       const std::function<std::string()>& compute) {
  Claim c{std::move(id), std::move(anchor), std::move(expected), "", ClaimStatus::kFail, "", 0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.computed = compute();
    c.status = c.computed == c.expected ? ClaimStatus::kPass : ClaimStatus::kFail;
  } catch (const CapacityExceeded& e) {
    c.status = ClaimStatus::kSkipped;
    c.reason = e.what();
  } catch (const std::length_error& e) {
    c.status = ClaimStatus::kSkipped;
    c.reason = e.what();
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
  }
  c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  add(std::move(c));
  return claims_.back();
}

const Claim& VerificationReport::skip(std::string id, std::string anchor, std::string expected, std::string reason) {
  add(Claim{std::move(id), std::move(anchor), std::move(expected), "", ClaimStatus::kSkipped, std::move(reason), 0});
  return claims_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.claims()) add(c);
}

bool VerificationReport::passed() const { return count(ClaimStatus::kFail) == 0; }

std::size_t VerificationReport::count(ClaimStatus s) const {
  std::size_t n = 0;
  for (const auto& c : claims_) n += c.status == s ? 1 : 0;
  return n;
}

const Claim* VerificationReport::find(const std::string& id) const {
  for (const auto& c : claims_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::string VerificationReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  if (with_timing) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream ts;
    ts << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    j["timestamp"] = ts.str();
  }
  j["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims_) {
    nlohmann::ordered_json r;
    r["id"] = c.id;
    r["anchor"] = c.anchor;
    r["expected"] = c.expected;
    r["computed"] = c.computed;
    r["status"] = to_string(c.status);
    if (!c.reason.empty()) r["reason"] = c.reason;
    if (with_timing) r["ms"] = std::round(c.ms * 1000) / 1000;
    j["claims"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : claims_) {
    out << std::left << std::setw(8) << to_string(c.status) << c.id << "  expected=" << c.expected
        << " computed=" << c.computed;
    if (!c.reason.empty()) out << " (" << c.reason << ")";
    out << "\n";
  }
  out << suite_ << ": " << count(ClaimStatus::kPass) << " pass, " << count(ClaimStatus::kFail) << " fail, "
      << count(ClaimStatus::kSkipped) << " skipped\n";
  return out.str();
}

}  // namespace qsym
