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

#include <fstream>
#include <sstream>

#include "dgsp/errors.h"
#include "dgsp/graph.h"

namespace dgsp {

namespace {

void RequireSquareArray(const Json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != j.size()) {
      throw ValidationError(std::string(what) + " must be square");
    }
  }
}

Json TensorLevel(const TensorSpectrum& t, std::size_t& offset, int depth) {
  Json level = Json::array();
  for (int j = 0; j < t.extent(); ++j) {
    if (depth + 1 == t.order()) {
      level.push_back(ComplexToJson(t.data()[offset++]));
    } else {
      level.push_back(TensorLevel(t, offset, depth + 1));
    }
  }
  return level;
}

void ReadTensorLevel(const Json& j, TensorSpectrum& t, std::size_t& offset,
                     int depth) {
  if (!j.is_array() || static_cast<int>(j.size()) != t.extent()) {
    throw ValidationError("tensor coefficients have the wrong shape");
  }
  for (const Json& item : j) {
    if (depth + 1 == t.order()) {
      t.data()[offset++] = ComplexFromJson(item);
    } else {
      ReadTensorLevel(item, t, offset, depth + 1);
    }
  }
}

}  // namespace

Json ComplexToJson(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex ComplexFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ValidationError("complex value must be {\"re\", \"im\"}");
  }
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

Json ComplexMatrixToJson(const CMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(ComplexToJson(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix ComplexMatrixFromJson(const Json& j) {
  RequireSquareArray(j, "coefficient matrix");
  const int n = static_cast<int>(j.size());
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = ComplexFromJson(j[r][c]);
  }
  return m;
}

Json SpectrumToJson(const SpectralBasis& basis, const SpectralMatrix& a) {
  Json lambda_p = Json::array();
  for (double x : basis.p_values) lambda_p.push_back(x);
  Json lambda_u = Json::array();
  for (Complex z : basis.u_values) lambda_u.push_back(ComplexToJson(z));
  return {{"n", a.size()},
          {"lambda_p", std::move(lambda_p)},
          {"lambda_u", std::move(lambda_u)},
          {"coeffs", ComplexMatrixToJson(a.coeffs)}};
}

SpectralMatrix SpectrumFromJson(const Json& j) {
  SpectralMatrix a{ComplexMatrixFromJson(j.at("coeffs"))};
  if (j.at("n").get<int>() != a.size()) {
    throw ValidationError("spectrum size field disagrees with coefficients");
  }
  return a;
}

Json KernelToJson(const SpectralKernel& h) {
  return {{"n", h.size()}, {"weights", ComplexMatrixToJson(h.weights)}};
}

SpectralKernel KernelFromJson(const Json& j) {
  SpectralKernel h{ComplexMatrixFromJson(j.at("weights"))};
  if (j.at("n").get<int>() != h.size()) {
    throw ValidationError("kernel size field disagrees with weights");
  }
  return h;
}

Json TensorToJson(const TensorSpectrum& t) {
  Json axes = Json::array();
  for (int a = 1; a <= t.order(); ++a) axes.push_back("j" + std::to_string(a));
  std::size_t offset = 0;
  return {{"order", t.order()},
          {"n", t.extent()},
          {"axes", std::move(axes)},
          {"coeffs", TensorLevel(t, offset, 0)}};
}

TensorSpectrum TensorFromJson(const Json& j) {
  TensorSpectrum t(j.at("order").get<int>(), j.at("n").get<int>());
  std::size_t offset = 0;
  ReadTensorLevel(j.at("coeffs"), t, offset, 0);
  return t;
}

Json ReportToJson(const PerturbationReport& report) {
  Json filters = Json::array();
  for (std::size_t a = 0; a < report.ks.size(); ++a) {
    filters.push_back({{"k", report.ks[a]},
                       {"distances", report.filter_distances[a]},
                       {"slope", report.filter_slopes[a]},
                       {"worst_case_gain", report.filter_gains[a]},
                       {"fitted_C", report.filter_constants[a]},
                       {"bound_degree", 2 * report.ks[a] + 4},
                       {"bounds", report.filter_bounds[a]}});
  }
  std::vector<int> pairing(report.pairing_ok.begin(), report.pairing_ok.end());
  return {{"scales", report.scales},
          {"pairing_ok", pairing},
          {"eps_hat", report.eps_hat},
          {"eps_hat_note",
           "heuristic validity radius from eigenvalue-gap monitoring"},
          {"bound_base", report.bound_base},
          {"transform",
           {{"distances", report.transform_distances},
            {"slope", report.transform_slope},
            {"worst_case_gain", report.transform_gain},
            {"fitted_C", report.transform_constant},
            {"bound_degree", 3},
            {"bounds", report.transform_bounds}}},
          {"filters", std::move(filters)}};
}

std::string ReportToCsv(const PerturbationReport& report) {
  std::ostringstream out;
  out << "scale,pairing_ok,transform_distance,transform_bound";
  for (int k : report.ks) out << ",filter" << k << "_distance,filter" << k << "_bound";
  out << '\n';
  for (std::size_t t = 0; t < report.scales.size(); ++t) {
    out << FormatDouble(report.scales[t]) << ',' << (report.pairing_ok[t] ? 1 : 0)
        << ',' << FormatDouble(report.transform_distances[t]) << ','
        << FormatDouble(report.transform_bounds[t]);
    for (std::size_t a = 0; a < report.ks.size(); ++a) {
      out << ',' << FormatDouble(report.filter_distances[a][t]) << ','
          << FormatDouble(report.filter_bounds[a][t]);
    }
    out << '\n';
  }
  return out.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgumentError("cannot write " + path);
  out << text;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dgsp
