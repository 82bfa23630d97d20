// Copyright 2026 The DGSP Authors.
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

#ifndef DGSP_IO_H_
#define DGSP_IO_H_

#include <string>

#include "json.hpp"

#include "dgsp/filters.h"
#include "dgsp/multifactor.h"
#include "dgsp/perturb.h"
#include "dgsp/spectrum.h"

namespace dgsp {

using Json = nlohmann::ordered_json;

// Complex numbers are objects {"re": x, "im": y}.
Json ComplexToJson(Complex z);
Complex ComplexFromJson(const Json& j);
Json ComplexMatrixToJson(const CMatrix& m);
CMatrix ComplexMatrixFromJson(const Json& j);

// {"n", "lambda_p", "lambda_u", "coeffs"} with coeffs[i][j] = a(i, j).
Json SpectrumToJson(const SpectralBasis& basis, const SpectralMatrix& a);
SpectralMatrix SpectrumFromJson(const Json& j);

// {"n", "weights"} with the same layout as spectrum coefficients.
Json KernelToJson(const SpectralKernel& h);
SpectralKernel KernelFromJson(const Json& j);

// {"order", "n", "axes": ["j1", ...], "coeffs": nested arrays, j1 outermost}.
Json TensorToJson(const TensorSpectrum& t);
TensorSpectrum TensorFromJson(const Json& j);

Json ReportToJson(const PerturbationReport& report);
// One row per scale: scale, pairing flag, transform distance and bound, then
// distance and bound for each filter power.
std::string ReportToCsv(const PerturbationReport& report);

void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

}  // namespace dgsp

#endif  // DGSP_IO_H_
