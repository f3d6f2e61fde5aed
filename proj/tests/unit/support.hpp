#pragma once

#include <doctest.h>

#include <algorithm>

#include "extalg/graded.hpp"
#include "extalg/linalg.hpp"

namespace testsupport {

using extalg::Dimension;

template <extalg::Kind K>
extalg::Graded<K> make(int n, std::vector<std::pair<std::vector<int>, double>> terms) {
  extalg::Graded<K> out(Dimension{n});
  for (const auto& [idx, c] : terms)
    out = out + extalg::Graded<K>::blade(Dimension{n}, extalg::BladeIndex::of(idx), c);
  return out;
}

inline extalg::Multivector mv(int n, std::vector<std::pair<std::vector<int>, double>> terms) {
  return make<extalg::Kind::vector>(n, std::move(terms));
}

inline extalg::Multiform mf(int n, std::vector<std::pair<std::vector<int>, double>> terms) {
  return make<extalg::Kind::form>(n, std::move(terms));
}

// Relative distance with an absolute floor of 1 on the scale.
template <extalg::Kind K>
double distance(const extalg::Graded<K>& a, const extalg::Graded<K>& b) {
  return extalg::max_abs_diff(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

}  // namespace testsupport
