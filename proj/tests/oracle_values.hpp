/*
 *   Copyright 2026 The superstab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Values produced by tests/oracles/compute_oracles.py (mpmath, 50 digits),
// evaluated directly from the closed forms. Regenerate with that script.

namespace superstab::oracle {

// ln f(2) for ln f(y) = y + ln(1 + 0.1 y^-2)
inline constexpr double kLogFPerturbedAt2 = 2.024692612590371501;

// Ten-term partial sums of alpha(x) = sum_n x^-(2^n - 1)
inline constexpr double kAlpha2 = 0.63284301804378628742;
inline constexpr double kAlpha3 = 0.37082768743291898335;
inline constexpr double kAlpha5 = 0.208012800032768;

// Orbit bound at a = 2, y = 1, n = 5, psi = 0.2 for the perturbed instance
inline constexpr double kPartialLhs = 3.0498281022564566853;
inline constexpr double kPartialRhs = 37.2;
inline constexpr double kPartialOrbitSum = 37.2;

// Final bound and measured gap at y = 1, anchors {2, 3, 4}, psi = 0.2
inline constexpr double kFinalBoundY1 = 0.4;
inline constexpr double kFinalGapY1 = 0.095310179804324860044;

// max |ln f(xy) - x ln f(y)| over grid 1..8 pairs with xy <= 8, x != 1
inline constexpr double kRawConclusionResidual = 0.76092015786764638104;

// Worst ratio violation, grid 1..8, psi = 0.2, orbit depth 3, anchors 2..8
inline constexpr double kValidationWorst = 0.53276370200868887723;

// |1/1.01 - 1|
inline constexpr double kGerShifted = 0.0099009900990099009901;

// f(x) = 2^x (1 + 0.05 x^-2), delta = 0.1, x = 2, 3, 4
struct SandwichRow {
  double x, alpha, lower, ratio, upper;
};
inline constexpr SandwichRow kSandwich[] = {
    {2, 0.63284301804378629, 0.93549762996655586, 0.98765432098765432, 1.0621725454924348},
    {3, 0.37082768743291898, 0.96168281543580591, 0.99447513812154696, 1.0359756643644097},
    {4, 0.26568603608757257, 0.97239535074782564, 0.99688473520249221, 1.0256459239980714},
};

}  // namespace superstab::oracle
