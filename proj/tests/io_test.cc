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

#include "dgsp/io.h"

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "dgsp/errors.h"
#include "dgsp/graph.h"
#include "dgsp/multifactor.h"
#include "dgsp/svg.h"
#include "oracles.h"

namespace dgsp {
namespace {

TEST(JsonTest, SpectrumRoundTripIsExact) {
  Rng rng(1);
  const SpectralBasis b = BuildBasis(oracle::RandomInvertible(6, rng));
  const SpectralMatrix a = Forward(b, oracle::RandomSignal(6, rng));
  const Json j = SpectrumToJson(b, a);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["lambda_p"].size(), 6u);
  EXPECT_EQ(j["lambda_u"].size(), 6u);
  const SpectralMatrix back = SpectrumFromJson(Json::parse(j.dump()));
  EXPECT_EQ(back.coeffs, a.coeffs);
}

TEST(JsonTest, KernelRoundTrip) {
  Rng rng(2);
  SpectralKernel h{CMatrix(3, 3)};
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) h.weights(i, j) = Complex(rng.Normal(), rng.Normal());
  }
  EXPECT_EQ(KernelFromJson(Json::parse(KernelToJson(h).dump())).weights, h.weights);
}

TEST(JsonTest, TensorRoundTrip) {
  Rng rng(3);
  TensorSpectrum t(3, 4);
  for (Complex& z : t.data()) z = Complex(rng.Normal(), rng.Normal());
  const TensorSpectrum back = TensorFromJson(Json::parse(TensorToJson(t).dump()));
  EXPECT_EQ(back.order(), 3);
  EXPECT_EQ(back.data(), t.data());
}

TEST(JsonTest, MalformedSpectrumIsRejected) {
  EXPECT_THROW(SpectrumFromJson(Json::parse(R"({"n": 2, "coeffs": [[1]]})")), Error);
}

TEST(FormatTest, SeventeenDigitsRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.Normal() * std::pow(10.0, rng.Uniform(-20, 20));
    EXPECT_EQ(std::stod(FormatDouble(x)), x);
  }
}

TEST(SvgTest, HeatmapStructure) {
  Matrix m(2, 3);
  m << 0, 1, 2, 3, 4, 5;
  const std::string svg = HeatmapSvg(m);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1)) {
    ++rects;
  }
  EXPECT_GE(rects, 6u);
}

TEST(SvgTest, ZeroMatrixAndBadColormap) {
  EXPECT_NO_THROW(HeatmapSvg(Matrix::Zero(3, 3)));
  HeatmapOptions bad;
  bad.colormap = "jet";
  EXPECT_THROW(HeatmapSvg(Matrix::Ones(2, 2), bad), InvalidArgumentError);
}

}  // namespace
}  // namespace dgsp
