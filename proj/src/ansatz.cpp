// Copyright 2026 The uvcc-circuits developers
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

#include "uvcc/ansatz.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "uvcc/errors.hpp"

namespace uvcc {

std::vector<QubitPair> term_qubits(const ExcitationTerm& t,
                                   const ModeSpec& spec,
                                   const QubitLayout& layout) {
  if (t.entries.empty()) throw InvalidTerm("term has no entries");
  if (t.order() > spec.mode_count())
    throw InvalidTerm("term order exceeds mode count");
  std::set<int> modes_seen;
  std::vector<QubitPair> pairs;
  pairs.reserve(t.entries.size());
  for (const auto& en : t.entries) {
    if (en.mode < 0 || en.mode >= spec.mode_count())
      throw InvalidTerm("entry mode out of range");
    if (!modes_seen.insert(en.mode).second)
      throw InvalidTerm("term excites mode " + std::to_string(en.mode) +
                        " twice");
    const int d = spec.modes[en.mode].levels;
    if (en.from_level < 0 || en.from_level >= d || en.to_level < 0 ||
        en.to_level >= d)
      throw InvalidTerm("entry level out of range for mode " +
                        spec.modes[en.mode].label);
    if (en.from_level == en.to_level)
      throw InvalidTerm("entry from_level == to_level");
    pairs.push_back({layout.qubit(en.mode, en.from_level),
                     layout.qubit(en.mode, en.to_level)});
  }
  return pairs;
}

std::vector<ExcitationTerm> enumerate_reference_excitations(
    const ModeSpec& spec, int max_order) {
  spec.validate();
  const int M = spec.mode_count();
  if (max_order < 1 || max_order > M)
    throw std::invalid_argument("max_order must be in [1, mode count]");

  // All non-reference occupation tuples, lexicographic.
  std::vector<std::vector<int>> targets;
  std::vector<int> occ(M, 0);
  while (true) {
    int i = M - 1;
    while (i >= 0 && occ[i] + 1 == spec.modes[i].levels) occ[i--] = 0;
    if (i < 0) break;
    ++occ[i];
    const int excited =
        static_cast<int>(std::count_if(occ.begin(), occ.end(),
                                       [](int n) { return n != 0; }));
    if (excited >= 1 && excited <= max_order) targets.push_back(occ);
  }
  std::stable_sort(targets.begin(), targets.end(),
                   [](const auto& a, const auto& b) {
                     auto nz = [](const std::vector<int>& v) {
                       return std::count_if(v.begin(), v.end(),
                                            [](int n) { return n != 0; });
                     };
                     return nz(a) > nz(b);
                   });

  std::vector<ExcitationTerm> terms;
  terms.reserve(targets.size());
  for (const auto& tgt : targets) {
    ExcitationTerm t;
    for (int m = 0; m < M; ++m)
      if (tgt[m] != 0) t.entries.push_back({m, 0, tgt[m]});
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace uvcc
