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

#include "fermiq/binary_matrix.hpp"
#include "fermiq/bk_sets.hpp"
#include "fermiq/circuit.hpp"
#include "fermiq/composite.hpp"
#include "fermiq/config.hpp"
#include "fermiq/dense.hpp"
#include "fermiq/encoding.hpp"
#include "fermiq/error.hpp"
#include "fermiq/fermion_oracle.hpp"
#include "fermiq/h2_fixture.hpp"
#include "fermiq/hamiltonian.hpp"
#include "fermiq/index_set.hpp"
#include "fermiq/integrals.hpp"
#include "fermiq/occupation.hpp"
#include "fermiq/pauli_string.hpp"
#include "fermiq/pauli_sum.hpp"
#include "fermiq/spectral.hpp"
#include "fermiq/state_vector.hpp"
#include "fermiq/synthesis.hpp"
#include "fermiq/trotter.hpp"
