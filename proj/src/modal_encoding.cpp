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

#include "uvcc/modal_encoding.hpp"

#include <stdexcept>

#include "uvcc/errors.hpp"

namespace uvcc {

void ModeSpec::validate() const {
  if (modes.empty()) throw std::invalid_argument("ModeSpec: no modes");
  for (const auto& m : modes) {
    if (m.levels < 2)
      throw std::invalid_argument("ModeSpec: mode '" + m.label +
                                  "' needs at least 2 levels");
  }
}

QubitLayout QubitLayout::of(const ModeSpec& spec) {
  QubitLayout layout;
  int off = 0;
  layout.mode_offsets.reserve(spec.modes.size());
  for (const auto& m : spec.modes) {
    layout.mode_offsets.push_back(off);
    off += m.levels;
  }
  return layout;
}

int qubit_count(const ModeSpec& spec) {
  int n = 0;
  for (const auto& m : spec.modes) n += m.levels;
  return n;
}

std::string encode_unary(const ModalState& state, const ModeSpec& spec) {
  if (state.occupation.size() != spec.modes.size())
    throw InvalidState("encode_unary: occupation length != mode count");
  std::string bits(qubit_count(spec), '0');
  int off = 0;
  for (size_t i = 0; i < spec.modes.size(); ++i) {
    const int n = state.occupation[i];
    const int d = spec.modes[i].levels;
    if (n < 0 || n >= d)
      throw InvalidState("encode_unary: level " + std::to_string(n) +
                         " out of range for mode " + spec.modes[i].label);
    bits[off + n] = '1';
    off += d;
  }
  return bits;
}

std::optional<ModalState> decode_unary(std::string_view bits,
                                       const ModeSpec& spec) {
  if (static_cast<int>(bits.size()) != qubit_count(spec))
    throw LengthMismatch("decode_unary: expected " +
                         std::to_string(qubit_count(spec)) + " bits, got " +
                         std::to_string(bits.size()));
  ModalState state;
  int off = 0;
  for (const auto& m : spec.modes) {
    int level = -1;
    for (int l = 0; l < m.levels; ++l) {
      if (bits[off + l] == '1') {
        if (level >= 0) return std::nullopt;  // two levels occupied
        level = l;
      }
    }
    if (level < 0) return std::nullopt;  // empty block
    state.occupation.push_back(level);
    off += m.levels;
  }
  return state;
}

std::vector<std::string> enumerate_physical(const ModeSpec& spec) {
  std::vector<std::string> out;
  const int M = spec.mode_count();
  std::vector<int> occ(M, 0);
  while (true) {
    out.push_back(encode_unary(ModalState{occ}, spec));
    int i = M - 1;
    while (i >= 0 && occ[i] + 1 == spec.modes[i].levels) occ[i--] = 0;
    if (i < 0) break;
    ++occ[i];
  }
  return out;
}

}  // namespace uvcc
