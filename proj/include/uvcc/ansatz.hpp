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

#pragma once

#include <vector>

#include "uvcc/modal_encoding.hpp"

namespace uvcc {

// One excitation within a single mode: from_level -> to_level.
struct ExcitationEntry {
  int mode = 0;
  int from_level = 0;
  int to_level = 1;
};

// One Trotter factor of the cluster operator: a simultaneous excitation of
// `entries.size()` distinct modes, rotating by theta between the two
// involved unary patterns.
struct ExcitationTerm {
  std::vector<ExcitationEntry> entries;
  double theta = 0.0;

  int order() const { return static_cast<int>(entries.size()); }
};

// The (g, e) qubit pair of one entry: g holds the from-level, e the to-level.
// Pair 0 supplies the rotation target (its g qubit plays the q0 role).
struct QubitPair {
  int g = 0;
  int e = 0;
};

struct AnsatzSpec {
  ModeSpec spec;
  ModalState reference;
  std::vector<ExcitationTerm> terms;  // applied in list order
};

// Derived (g, e) qubit pairs in entry order. Throws InvalidTerm on repeated
// modes, invalid levels or from == to.
std::vector<QubitPair> term_qubits(const ExcitationTerm& t,
                                   const ModeSpec& spec,
                                   const QubitLayout& layout);

// One term per occupation tuple with 1..max_order modes excited from the
// ground reference. Ordered by descending order m, then lexicographic
// target tuple; angles start at zero.
std::vector<ExcitationTerm> enumerate_reference_excitations(
    const ModeSpec& spec, int max_order);

}  // namespace uvcc
