#pragma once

#include "json.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qlat {

enum class Verdict { Pass, Fail, Skipped, Flagged };

std::string_view verdict_name(Verdict v);

/// Outcome of one check: {check, instance, parameters, verdict, witnesses[]}.
struct CheckReport {
  std::string check;
  std::string instance;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  Verdict verdict = Verdict::Pass;
  std::size_t cases = 0;
  std::size_t violations = 0;
  bool sampled = false;
  std::string note;
  std::vector<nlohmann::ordered_json> witnesses;

  static constexpr std::size_t kMaxWitnesses = 16;

  bool passed() const { return verdict == Verdict::Pass; }

  /// Records a violation, keeping at most kMaxWitnesses witnesses.
  void fail(nlohmann::ordered_json witness);

  /// Folds `other` into this report (counts, witnesses, worst verdict).
  void absorb(const CheckReport& other);

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace qlat
