#include "qlat/report.hpp"

namespace qlat {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    case Verdict::Flagged: return "flagged";
  }
  return "unknown";
}

void CheckReport::fail(nlohmann::ordered_json witness) {
  verdict = Verdict::Fail;
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void CheckReport::absorb(const CheckReport& other) {
  cases += other.cases;
  violations += other.violations;
  sampled = sampled || other.sampled;
  for (const auto& w : other.witnesses) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(w);
  }
  if (other.verdict == Verdict::Fail) verdict = Verdict::Fail;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["instance"] = instance;
  j["parameters"] = parameters;
  j["verdict"] = std::string(verdict_name(verdict));
  j["mode"] = sampled ? "sampled" : "exhaustive";
  j["cases"] = cases;
  j["violations"] = violations;
  if (!note.empty()) j["note"] = note;
  j["witnesses"] = witnesses;
  return j;
}

std::string CheckReport::to_text() const {
  std::string s = "[" + std::string(verdict_name(verdict)) + "] " + check + " on " + instance;
  s += " (" + std::to_string(cases) + " cases, " + (sampled ? "sampled" : "exhaustive");
  if (violations) s += ", " + std::to_string(violations) + " violations";
  s += ")";
  if (!note.empty()) s += "\n    note: " + note;
  for (const auto& w : witnesses) s += "\n    witness: " + w.dump();
  return s;
}

}  // namespace qlat
