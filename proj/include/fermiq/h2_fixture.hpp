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

#include <sstream>
#include <string_view>

#include "fermiq/integrals.hpp"

namespace fermiq {

/// Copy of data/h2_sto3g.txt.
inline constexpr std::string_view kH2Sto3gIntegrals = R"fixture(
# H2, STO-3G, R = 1.401000 bohr, restricted Hartree-Fock integrals.
# Spin orbitals: 0 = g alpha, 1 = g beta, 2 = u alpha, 3 = u beta.
# h2 i j k l is the coefficient of (1/2) a_i^+ a_j^+ a_k a_l, equal to the
# chemist-notation integral (il|jk). All symmetry-related entries are listed.
n 4
h1 0 0 -1.252477
h1 1 1 -1.252477
h1 2 2 -0.475934
h1 3 3 -0.475934
h2 0 0 0 0 0.674493
h2 0 0 2 2 0.181287
h2 0 1 1 0 0.674493
h2 0 1 3 2 0.181287
h2 0 2 0 2 0.181287
h2 0 2 2 0 0.663472
h2 0 3 1 2 0.181287
h2 0 3 3 0 0.663472
h2 1 0 0 1 0.674493
h2 1 0 2 3 0.181287
h2 1 1 1 1 0.674493
h2 1 1 3 3 0.181287
h2 1 2 0 3 0.181287
h2 1 2 2 1 0.663472
h2 1 3 1 3 0.181287
h2 1 3 3 1 0.663472
h2 2 0 0 2 0.663472
h2 2 0 2 0 0.181287
h2 2 1 1 2 0.663472
h2 2 1 3 0 0.181287
h2 2 2 0 0 0.181287
h2 2 2 2 2 0.697397
h2 2 3 1 0 0.181287
h2 2 3 3 2 0.697397
h2 3 0 0 3 0.663472
h2 3 0 2 1 0.181287
h2 3 1 1 3 0.663472
h2 3 1 3 1 0.181287
h2 3 2 0 1 0.181287
h2 3 2 2 3 0.697397
h2 3 3 1 1 0.181287
h2 3 3 3 3 0.697397
)fixture";

/// H2 integrals at 1.401 bohr.
inline IntegralTable h2_sto3g() {
  std::istringstream in{std::string(kH2Sto3gIntegrals)};
  return load_integrals(in);
}

}  // namespace fermiq
