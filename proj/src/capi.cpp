#include "qlat/qlat.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>

#include "qlat/algebra.hpp"
#include "qlat/errors.hpp"
#include "qlat/suite.hpp"
#include "qlat/syntax.hpp"
#include "qlat/truncation.hpp"

struct qlat_instance {
  qlat::MonoidPtr monoid;
};

struct qlat_algebra {
  qlat::AlgebraElement value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_position = std::numeric_limits<std::size_t>::max();

void clear_error() {
  last_error.clear();
  last_position = std::numeric_limits<std::size_t>::max();
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
qlat_status guarded(F&& f) {
  clear_error();
  try {
    f();
    return QLAT_OK;
  } catch (const qlat::ParseError& e) {
    last_error = e.what();
    last_position = e.position();
    return QLAT_ERR_PARSE;
  } catch (const qlat::ConfigError& e) {
    last_error = e.what();
    return QLAT_ERR_CONFIG;
  } catch (const qlat::InstanceMismatch& e) {
    last_error = e.what();
    return QLAT_ERR_INSTANCE_MISMATCH;
  } catch (const qlat::Unsupported& e) {
    last_error = e.what();
    return QLAT_ERR_UNSUPPORTED;
  } catch (const qlat::InvalidArgument& e) {
    last_error = e.what();
    return QLAT_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return QLAT_ERR_CONFIG;
  } catch (const std::exception& e) {
    last_error = e.what();
    return QLAT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return QLAT_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw qlat::InvalidArgument(std::string(what) + " is null");
}

nlohmann::json parse_json(const char* text) {
  require(text, "config");
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw qlat::ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* qlat_version(void) { return "0.1.0"; }

const char* qlat_status_name(qlat_status status) {
  switch (status) {
    case QLAT_OK: return "ok";
    case QLAT_ERR_PARSE: return "parse error";
    case QLAT_ERR_CONFIG: return "config error";
    case QLAT_ERR_INSTANCE_MISMATCH: return "instance mismatch";
    case QLAT_ERR_UNSUPPORTED: return "unsupported";
    case QLAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QLAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qlat_last_error(void) { return last_error.c_str(); }

size_t qlat_last_error_position(void) { return last_position; }

void qlat_string_free(char* s) { std::free(s); }

qlat_status qlat_instance_create(const char* config_json, qlat_instance** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto m = qlat::make_monoid(parse_json(config_json));
    *out = new qlat_instance{std::move(m)};
  });
}

void qlat_instance_free(qlat_instance* instance) { delete instance; }

qlat_status qlat_instance_name(const qlat_instance* instance, char** out) {
  return guarded([&] {
    require(instance, "instance");
    require(out, "out");
    *out = dup(instance->monoid->name());
  });
}

qlat_status qlat_instance_ball(const qlat_instance* instance, int radius, char** out_json) {
  return guarded([&] {
    require(instance, "instance");
    require(out_json, "out");
    if (radius < 0) throw qlat::InvalidArgument("radius must be non-negative");
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : instance->monoid->enumerate_ball(radius)) j.push_back(instance->monoid->format(p));
    *out_json = dup(j.dump());
  });
}

qlat_status qlat_join(const qlat_instance* instance, const char* p, const char* q, char** out) {
  return guarded([&] {
    require(instance, "instance");
    require(p, "p");
    require(q, "q");
    require(out, "out");
    const auto& m = *instance->monoid;
    auto j = m.join(m.parse(p), m.parse(q));
    *out = dup(j.is_finite() ? m.format(j.value()) : "inf");
  });
}

qlat_status qlat_algebra_parse(const qlat_instance* instance, const char* text, qlat_algebra** out) {
  return guarded([&] {
    require(instance, "instance");
    require(text, "text");
    require(out, "out");
    *out = nullptr;
    *out = new qlat_algebra{qlat::parse_algebra(instance->monoid, text)};
  });
}

void qlat_algebra_free(qlat_algebra* x) { delete x; }

qlat_status qlat_algebra_add(const qlat_algebra* x, const qlat_algebra* y, qlat_algebra** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = nullptr;
    *out = new qlat_algebra{x->value + y->value};
  });
}

qlat_status qlat_algebra_mul(const qlat_algebra* x, const qlat_algebra* y, qlat_algebra** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = nullptr;
    *out = new qlat_algebra{x->value * y->value};
  });
}

qlat_status qlat_algebra_star(const qlat_algebra* x, qlat_algebra** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = nullptr;
    *out = new qlat_algebra{x->value.star()};
  });
}

qlat_status qlat_algebra_equal(const qlat_algebra* x, const qlat_algebra* y, int* out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = x->value == y->value ? 1 : 0;
  });
}

qlat_status qlat_algebra_to_string(const qlat_algebra* x, char** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = dup(qlat::format(x->value));
  });
}

qlat_status qlat_algebra_grade(const qlat_algebra* x, char** out_json) {
  return guarded([&] {
    require(x, "x");
    require(out_json, "out");
    const auto& m = x->value.monoid();
    nlohmann::ordered_json j;
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& [g, part] : qlat::grade(x->value)) {
      j["components"].push_back({{"label", m.format(g)}, {"element", qlat::format(part)}});
    }
    j["expectation"] = qlat::format(qlat::expectation(x->value));
    *out_json = dup(j.dump());
  });
}

qlat_status qlat_algebra_dump_matrix(const qlat_algebra* x, int radius, char** out_text) {
  return guarded([&] {
    require(x, "x");
    require(out_text, "out");
    if (radius < 0) throw qlat::InvalidArgument("radius must be non-negative");
    const auto S = qlat::Truncation::ball(x->value.monoid_ptr(), radius);
    const auto T = qlat::truncate(x->value, S);
    std::string s = "basis:";
    for (const auto& t : S.elements()) s += " " + S.monoid().format(t);
    s += "\n" + T.matrix.dump();
    if (!T.escapes.empty()) {
      s += "leaves truncation:";
      for (auto c : T.escapes) s += " " + S.monoid().format(S.elements()[c]);
      s += "\n";
    }
    *out_text = dup(s);
  });
}

qlat_status qlat_run(const char* config_json, qlat_format format, char** out_report, int* failed) {
  return guarded([&] {
    require(out_report, "out");
    require(failed, "failed");
    *out_report = nullptr;
    auto config = qlat::RunConfig::from_json(parse_json(config_json));
    auto report = qlat::run(config);
    *failed = report.failed() ? 1 : 0;
    *out_report = dup(format == QLAT_FORMAT_STRUCTURED ? report.to_json().dump(2) + "\n" : report.to_text());
  });
}

qlat_status qlat_find_fesspe(const qlat_instance* instance, int max_size, int radius, char** out_json) {
  return guarded([&] {
    require(instance, "instance");
    require(out_json, "out");
    const auto& m = *instance->monoid;
    auto F = qlat::find_fesspe(m, max_size, radius);
    nlohmann::json j;
    if (F) {
      j = nlohmann::json::array();
      for (const auto& f : *F) j.push_back(m.format(f));
    }
    *out_json = dup(j.dump());
  });
}

}  // extern "C"
