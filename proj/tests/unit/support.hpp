#pragma once

#include <string>
#include <vector>

#include "qlat/algebra.hpp"
#include "qlat/syntax.hpp"

namespace test {

inline qlat::Element E(const qlat::MonoidPtr& m, const std::string& text) { return m->parse(text); }

inline qlat::AlgebraElement A(const qlat::MonoidPtr& m, const std::string& text) {
  return qlat::parse_algebra(m, text);
}

inline std::vector<qlat::Element> Es(const qlat::MonoidPtr& m, const std::string& text) {
  return qlat::parse_element_list(*m, text);
}

/// Library elements of an oracle ball, through the text syntax.
template <class O>
std::vector<qlat::Element> lift(const qlat::MonoidPtr& m, const O& o, const std::vector<typename O::T>& xs) {
  std::vector<qlat::Element> out;
  for (const auto& x : xs) out.push_back(m->parse(o.format(x)));
  return out;
}

}  // namespace test
