#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicross {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NotInvertible,
  BadTable,
  ConductorMismatch,
  NotDivisible,
  NotRightAction,
  NotLeftAction,
  Comp1Fails,
  Comp2Fails,
  NotSubgroup,
  NotExactFactorization,
  NotComposable,
  CocycleFails,
  NormalizationFails,
  ParentMismatch,
  BidegreeUnsupported,
  ConditionFails,
  CharacterIllDefined,
  GammaConditionFails,
  NotSemidirect,
  NoOrderQUnit,
  BadParameters,
  SchemaError,
  InternalCheck,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotRightAction: return "NotRightAction";
    case ErrorCode::NotLeftAction: return "NotLeftAction";
    case ErrorCode::Comp1Fails: return "Comp1Fails";
    case ErrorCode::Comp2Fails: return "Comp2Fails";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotExactFactorization: return "NotExactFactorization";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::CocycleFails: return "CocycleFails";
    case ErrorCode::NormalizationFails: return "NormalizationFails";
    case ErrorCode::ParentMismatch: return "ParentMismatch";
    case ErrorCode::BidegreeUnsupported: return "BidegreeUnsupported";
    case ErrorCode::ConditionFails: return "ConditionFails";
    case ErrorCode::CharacterIllDefined: return "CharacterIllDefined";
    case ErrorCode::GammaConditionFails: return "GammaConditionFails";
    case ErrorCode::NotSemidirect: return "NotSemidirect";
    case ErrorCode::NoOrderQUnit: return "NoOrderQUnit";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InternalCheck: return "InternalCheck";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Validation outcome of a structural precondition; `witness` names the first
// offending tuple.
struct ValidationIssue {
  ErrorCode code;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  void add(ErrorCode code, std::string witness) {
    issues.push_back({code, std::move(witness)});
  }
  void add(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
  // Throws the first recorded issue, if any.
  void require() const {
    if (!issues.empty()) throw Error(issues.front().code, issues.front().witness);
  }
};

// FailFast stops a sweep at the first counterexample; CountAll keeps going and
// tallies every failure (the witness still records the first one).
enum class FailMode { FailFast, CountAll };

struct CheckResult {
  std::string name;
  bool pass = true;
  long long checked = 0;
  long long failed = 0;
  std::string witness;  // empty when pass
};

struct Report {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void add(const Report& r) {
    checks.insert(checks.end(), r.checks.begin(), r.checks.end());
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

inline std::string report_to_string(const Report& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.pass ? "PASS" : "FAIL") << " " << c.name << " (" << c.checked
       << " checked";
    if (c.failed > 0) os << ", " << c.failed << " failed";
    os << ")";
    if (!c.witness.empty()) os << " [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

// Collects one named sweep. expect() returns false when the sweep should stop
// (fail-fast and already failed).
class Checker {
 public:
  Checker(std::string name, FailMode mode) : mode_(mode) { res_.name = std::move(name); }

  template <typename WitnessFn>
  bool expect(bool ok, WitnessFn&& witness) {
    ++res_.checked;
    if (!ok) {
      ++res_.failed;
      if (res_.pass) {
        res_.pass = false;
        res_.witness = witness();
      }
      if (mode_ == FailMode::FailFast) return false;
    }
    return true;
  }
  bool keep_going() const { return res_.pass || mode_ == FailMode::CountAll; }
  CheckResult finish() { return res_; }

 private:
  CheckResult res_;
  FailMode mode_;
};

namespace detail {
// join("g", 3, "x", 1) -> "g=3 x=1"
inline void witness_parts(std::ostringstream&) {}
template <typename V, typename... Rest>
void witness_parts(std::ostringstream& os, const char* key, const V& v, Rest&&... rest) {
  os << key << "=" << v;
  if constexpr (sizeof...(rest) > 0) os << " ";
  witness_parts(os, std::forward<Rest>(rest)...);
}
}  // namespace detail

template <typename... Parts>
std::string witness(Parts&&... parts) {
  std::ostringstream os;
  detail::witness_parts(os, std::forward<Parts>(parts)...);
  return os.str();
}

}  // namespace bicross
