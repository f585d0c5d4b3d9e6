// Copyright 2026 The qscd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Cyclic coset states. For pi in K_n^m and a symbol s in Z_m,
 *
 *   |Phi^sigma_{pi,s}> = m^{-1/2} sum_t w^{st} |sigma pi^t>,   w = exp(2 pi i/m).
 *
 * The Fourier transforms are evaluated exactly, so decoding is deterministic
 * up to floating-point error.
 */

#pragma once

#include <vector>

#include "qscd/qscdff.h"

namespace qscd {

/// Samples carry provenance kind kPhi with the hidden pi and symbol s.
using CyclicSample = PureSample;

/// F_pi |pi^k> = m^{-1/2} sum_t w^{kt} |pi^t>  (m = order of pi).
SparseState cyclic_fourier_basis(const Permutation& pi, int m, int k);

/// rho^(s) draw: F_pi|pi^s>, then left translation by uniform sigma.
CyclicSample gen_cyc(const Permutation& pi, int m, int s, Rng& rng);
CyclicSample gen_cyc_at(const Permutation& pi, int m, int s, const Permutation& sigma);

/// Generalized controlled-pi test: control |0> over Z_m, inverse Fourier,
/// controlled pi^r, forward Fourier, measure. Returns the measured symbol.
int decode_cyc(const SparseState& state, const Permutation& pi, int m, Rng& rng);

/// Exact outcome distribution of decode_cyc over Z_m.
std::vector<double> decode_distribution(const SparseState& state, const Permutation& pi, int m);

}  // namespace qscd
