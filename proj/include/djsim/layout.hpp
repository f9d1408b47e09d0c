// Copyright 2026 The djsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>

#include "djsim/qstate.hpp"

// Composite spaces are always ordered (atoms, photon1, photon2).
namespace djsim::layout {

inline const std::string kAtoms = "atoms";
inline const std::string kPhoton1 = "photon1";
inline const std::string kPhoton2 = "photon2";

inline SpaceLabel photon(const std::string &name) {
    return SpaceLabel::single(name, 2);
}

inline SpaceLabel photons() {
    return SpaceLabel({{kPhoton1, 2}, {kPhoton2, 2}});
}

/// Atom subsystem of dimension `atom_dim` followed by both photons. With
/// atom_dim == 2 this is the 8-dim collective model.
inline SpaceLabel joint(std::size_t atom_dim) {
    return SpaceLabel({{kAtoms, atom_dim}, {kPhoton1, 2}, {kPhoton2, 2}});
}

inline SpaceLabel collective() { return joint(2); }

/// Name of the j-th atom (0-based) in the unreduced N-atom space.
inline std::string atom_name(std::size_t j) {
    return "atom" + std::to_string(j + 1);
}

} // namespace djsim::layout
