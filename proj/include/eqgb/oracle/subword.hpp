// Copyright 2026 The eqgb Authors.
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

#ifndef EQGB_ORACLE_SUBWORD_HPP
#define EQGB_ORACLE_SUBWORD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eqgb/monomial.hpp"

namespace eqgb::oracle {

/// Over the dense order a monomial is its word of exponents read in atom
/// order. u embeds into w when some increasing position map sends each
/// letter of u to a letter of w that is at least as large.
inline bool labelled_subword(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& w) {
  std::size_t j = 0;
  for (std::uint32_t letter : u) {
    while (j < w.size() && w[j] < letter) ++j;
    if (j == w.size()) return false;
    ++j;
  }
  return true;
}

inline std::vector<std::uint32_t> exponent_word(const Monomial& m) {
  std::vector<std::uint32_t> w;
  for (const auto& [a, e] : m.entries()) w.push_back(e);
  return w;
}

inline bool dense_divides_upto_g(const Monomial& m, const Monomial& n) {
  return labelled_subword(exponent_word(m), exponent_word(n));
}

}  // namespace eqgb::oracle

#endif  // EQGB_ORACLE_SUBWORD_HPP
