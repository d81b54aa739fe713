// Command-line front end over the C API.

#include <CLI11.hpp>
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qlat/qlat.h"

namespace {

using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config_path;
  std::string instance;
  std::string fesspe;
  std::optional<int> radius;
  std::optional<unsigned long long> seed;
  std::string out;
  std::string format = "text";
  bool timing = false;

  int max_size = 2;
  std::string lemma = "all";
  std::string literal;

  bool structured() const { return format == "structured"; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thin RAII wrappers; the C API owns the allocation scheme.
struct StringDeleter {
  void operator()(char* s) const { qlat_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(qlat_instance* p) const { qlat_instance_free(p); }
};
struct AlgebraDeleter {
  void operator()(qlat_algebra* p) const { qlat_algebra_free(p); }
};

class ApiError : public std::runtime_error {
 public:
  ApiError(qlat_status status, const std::string& message)
      : std::runtime_error(message), status(status), position(qlat_last_error_position()) {}
  qlat_status status;
  size_t position;
};

void check(qlat_status s) {
  if (s != QLAT_OK) throw ApiError(s, qlat_last_error());
}

json instance_from_spec(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return json::parse(spec);
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  json j = {{"kind", kind}};
  if (colon != std::string::npos) {
    int value = 0;
    try {
      value = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("bad instance parameter in '" + spec + "'");
    }
    j[kind == "half_line" ? "denominator_bound" : "rank"] = value;
  }
  return j;
}

json load_config(const Options& o) {
  json cfg = json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot read config file " + o.config_path);
    try {
      cfg = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  }
  if (!o.instance.empty()) cfg["instance"] = instance_from_spec(o.instance);
  if (!cfg.contains("instance")) throw UsageError("no instance given; use --config or --instance");
  if (!o.fesspe.empty()) cfg["fesspe"] = o.fesspe;
  if (o.radius) cfg["radius"] = *o.radius;
  if (o.seed) cfg["seed"] = *o.seed;
  if (!o.out.empty()) cfg["out"] = o.out;
  if (o.timing) cfg["timing"] = true;
  return cfg;
}

int default_radius(const json& cfg, int fallback) {
  if (!cfg.contains("radius")) return fallback;
  const auto& r = cfg["radius"];
  if (r.is_number_integer()) return r.get<int>();
  if (r.is_object() && r.contains("default") && r["default"].is_number_integer()) return r["default"].get<int>();
  return fallback;
}

void emit(const json& cfg, const std::string& text) {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
  if (cfg.contains("out") && cfg["out"].is_string()) {
    std::ofstream f(cfg["out"].get<std::string>());
    if (!f) throw UsageError("cannot write " + cfg["out"].get<std::string>());
    f << text;
  }
}

std::unique_ptr<qlat_instance, InstanceDeleter> make_instance(const json& cfg) {
  qlat_instance* raw = nullptr;
  check(qlat_instance_create(cfg["instance"].dump().c_str(), &raw));
  return std::unique_ptr<qlat_instance, InstanceDeleter>(raw);
}

std::unique_ptr<qlat_algebra, AlgebraDeleter> parse_literal(const qlat_instance* inst, const std::string& text) {
  qlat_algebra* raw = nullptr;
  check(qlat_algebra_parse(inst, text.c_str(), &raw));
  return std::unique_ptr<qlat_algebra, AlgebraDeleter>(raw);
}

int run_checks(json cfg, const Options& o, std::optional<std::vector<std::string>> checks) {
  if (checks) cfg["checks"] = *checks;
  char* raw = nullptr;
  int failed = 0;
  check(qlat_run(cfg.dump().c_str(), o.structured() ? QLAT_FORMAT_STRUCTURED : QLAT_FORMAT_TEXT, &raw, &failed));
  CString report(raw);
  emit(cfg, report.get());
  return failed ? kExitFail : kExitPass;
}

int cmd_find_fesspe(const json& cfg, const Options& o) {
  auto inst = make_instance(cfg);
  const int radius = default_radius(cfg, 3);
  char* raw = nullptr;
  check(qlat_find_fesspe(inst.get(), o.max_size, radius, &raw));
  CString found(raw);
  json F = json::parse(found.get());
  if (o.structured()) {
    json j = {{"instance", cfg["instance"]}, {"max_size", o.max_size}, {"radius", radius}, {"fesspe", F}};
    emit(cfg, j.dump(2) + "\n");
  } else if (F.is_null()) {
    emit(cfg, "no finite exhaustive set with at most " + std::to_string(o.max_size) +
                  " elements at radius " + std::to_string(radius) + "\n");
  } else {
    std::string s = "{";
    for (std::size_t i = 0; i < F.size(); ++i) s += (i ? "," : "") + F[i].get<std::string>();
    emit(cfg, s + "}\n");
  }
  return kExitPass;
}

int cmd_grade(const json& cfg, const Options& o) {
  auto inst = make_instance(cfg);
  auto x = parse_literal(inst.get(), o.literal);
  char* raw = nullptr;
  check(qlat_algebra_grade(x.get(), &raw));
  CString graded(raw);
  if (o.structured()) {
    json j = json::parse(graded.get());
    j["input"] = o.literal;
    emit(cfg, j.dump(2) + "\n");
    return kExitPass;
  }
  json j = json::parse(graded.get());
  std::ostringstream s;
  for (const auto& c : j["components"]) {
    s << "degree " << c["label"].get<std::string>() << ": " << c["element"].get<std::string>() << '\n';
  }
  s << "expectation: " << j["expectation"].get<std::string>() << '\n';
  emit(cfg, s.str());
  return kExitPass;
}

int cmd_dump_matrix(const json& cfg, const Options& o) {
  auto inst = make_instance(cfg);
  auto x = parse_literal(inst.get(), o.literal);
  char* raw = nullptr;
  check(qlat_algebra_dump_matrix(x.get(), default_radius(cfg, 2), &raw));
  CString text(raw);
  emit(cfg, text.get());
  return kExitPass;
}

void print_parse_error(const ApiError& e, const std::string& literal) {
  std::cerr << "error: " << e.what() << '\n';
  if (e.status == QLAT_ERR_PARSE && !literal.empty() && e.position != static_cast<size_t>(-1)) {
    std::cerr << "  " << literal << '\n' << "  " << std::string(std::min(e.position, literal.size()), ' ') << "^\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact checks for quasi-lattice ordered monoids and their Toeplitz algebras", "qlat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  app.add_option("--config", o.config_path, "Run configuration (JSON)");
  app.add_option("--instance", o.instance,
                 "Instance, e.g. free_monoid:2, free_abelian:2, divisibility, half_line:4");
  app.add_option("--fesspe", o.fesspe, "Candidate finite exhaustive set, e.g. {a,b}");
  app.add_option("--radius", o.radius, "Ball radius for every check")->check(CLI::Range(1, 64));
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--out", o.out, "Also write the report to this path");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timing", o.timing, "Include wall-clock time per check");

  auto* run = app.add_subcommand("run", "Run the checks enabled in the configuration");
  auto* qlo = app.add_subcommand("check-qlo", "Order axioms of the instance");
  auto* find = app.add_subcommand("find-fesspe", "Search for a finite exhaustive set");
  find->add_option("--max-size", o.max_size, "Largest set size to try")->check(CLI::Range(1, 8));
  auto* lemmas = app.add_subcommand("verify-lemmas", "Lemma suites");
  lemmas->add_option("--lemma", o.lemma, "A check name, or all");
  auto* grade = app.add_subcommand("grade", "Degree decomposition and expectation of an element");
  grade->add_option("literal", o.literal, "Element such as \"V(ab,b) + 2 V(a,a)\"")->required();
  auto* spectrum = app.add_subcommand("spectrum", "Census of hereditary directed subsets of the ball");
  auto* dump = app.add_subcommand("dump-matrix", "Matrix of an element on the ball");
  dump->add_option("literal", o.literal, "Element literal")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    json cfg = load_config(o);
    if (run->parsed()) return run_checks(cfg, o, std::nullopt);
    if (qlo->parsed()) return run_checks(cfg, o, std::vector<std::string>{"qlo-axioms"});
    if (spectrum->parsed()) return run_checks(cfg, o, std::vector<std::string>{"spectrum"});
    if (lemmas->parsed()) {
      if (o.lemma == "all") {
        return run_checks(cfg, o,
                          std::vector<std::string>{"chi-formula", "nica-covariance", "lub-products", "commutation",
                                                   "rank-one", "ideal-j", "sum-to-identity", "partition",
                                                   "commutant"});
      }
      return run_checks(cfg, o, std::vector<std::string>{o.lemma});
    }
    if (find->parsed()) return cmd_find_fesspe(cfg, o);
    if (grade->parsed()) return cmd_grade(cfg, o);
    if (dump->parsed()) return cmd_dump_matrix(cfg, o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    print_parse_error(e, o.literal);
    return e.status == QLAT_ERR_INTERNAL ? kExitFail : kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
