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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uvcc {

// One vibrational mode truncated to its `levels` lowest basis states.
struct Mode {
  std::string label;
  int levels = 2;
};

// Ordered register of modes. Mode i occupies a contiguous qubit block of
// size levels_i; within a block, qubit index == level index. Bitstrings are
// rendered with qubit 0 as the leftmost character.
struct ModeSpec {
  std::vector<Mode> modes;

  int mode_count() const { return static_cast<int>(modes.size()); }
  void validate() const;  // throws std::invalid_argument
};

// Occupation numbers, one level per mode.
struct ModalState {
  std::vector<int> occupation;

  bool operator==(const ModalState&) const = default;
};

struct QubitLayout {
  std::vector<int> mode_offsets;

  static QubitLayout of(const ModeSpec& spec);
  // Global qubit holding level `level` of mode `mode`.
  int qubit(int mode, int level) const { return mode_offsets[mode] + level; }
};

int qubit_count(const ModeSpec& spec);

// Unary (one-hot) encoding: level n of a mode sets qubit n of its block.
std::string encode_unary(const ModalState& state, const ModeSpec& spec);

// Inverse of encode_unary; nullopt when some block is not one-hot.
// Throws LengthMismatch when bits.size() != qubit_count(spec).
std::optional<ModalState> decode_unary(std::string_view bits,
                                       const ModeSpec& spec);

// All product(d_i) unary-valid bitstrings, ordered lexicographically by
// occupation tuple (n_0, n_1, ...).
std::vector<std::string> enumerate_physical(const ModeSpec& spec);

}  // namespace uvcc
