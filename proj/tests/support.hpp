#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "mflow/measure.hpp"

namespace testing {

using mflow::Rational;
using Q = Rational;
using M1 = mflow::Measure1<Rational>;
using M2 = mflow::Measure2<Rational>;

inline Q q(const std::string& s) { return mflow::parse_rational(s); }

inline mflow::SpacePtr labels(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return mflow::make_space(v);
}

inline M1 m1(const mflow::SpacePtr& sp, std::initializer_list<const char*> w) {
  std::vector<Q> v;
  for (const char* s : w) v.push_back(q(s));
  return M1(sp, v);
}

// Row-major n x n table.
inline M2 m2(const mflow::SpacePtr& sp, std::initializer_list<const char*> w) {
  std::vector<Q> v;
  for (const char* s : w) v.push_back(q(s));
  return M2(sp, v);
}

}  // namespace testing
