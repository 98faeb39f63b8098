// Copyright 2026 The fermiq Authors
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

#include <cstddef>

namespace fermiq {

/// Largest orbital count accepted by the change-of-basis matrices.
inline constexpr std::size_t kMaxOrbitals = 1024;

/// Default qubit cap for anything that materializes a 2^n x 2^n matrix.
inline constexpr std::size_t kDefaultDenseCap = 12;

/// Pauli-sum terms with |coefficient| below this are dropped.
inline constexpr double kDropTolerance = 1e-12;

/// Chemical precision in hartree.
inline constexpr double kChemicalPrecision = 1e-4;

}  // namespace fermiq
