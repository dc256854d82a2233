// Copyright 2026 The qcorr Authors
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

#ifndef QCORR_TOLERANCES_H
#define QCORR_TOLERANCES_H

namespace qcorr::tol {

// Input validation.
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kDensityEigenFloor = -1e-9;
inline constexpr double kPsdClamp = 1e-10;
inline constexpr double kBellDiagonalEigenFloor = -1e-12;
inline constexpr double kOffXEntry = 1e-10;

// Eigensolvers.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 64;
inline constexpr double kEigenDegeneracy = 1e-12;
inline constexpr double kCardanoDiscriminant = 1e-14;

// Dynamics.
inline constexpr double kEnergyDegeneracy = 1e-12;
inline constexpr int kKrausDefaultOrder = 40;
inline constexpr int kKrausMaxOrder = 640;
inline constexpr double kKrausCompleteness = 1e-10;
inline constexpr double kRk4TraceDrift = 1e-6;

// Measures.
inline constexpr double kBlochVectorZero = 1e-9;
inline constexpr double kTddDenominator = 1e-12;
/// Measure values below this are reported as exactly zero.
inline constexpr double kMeasureZeroFloor = 1e-13;
inline constexpr int kMinGrid = 64;
inline constexpr int kDefaultGrid = 2048;
inline constexpr int kNelderMeadIterations = 200;
inline constexpr double kNelderMeadTolerance = 1e-10;

// Closed form vs brute-force agreement.
inline constexpr double kOracleConcurrence = 1e-10;
inline constexpr double kOracleLqu = 1e-4;
inline constexpr double kOracleUin = 1e-4;
inline constexpr double kOracleTdd = 2e-3;

}  // namespace qcorr::tol

#endif
