// Copyright 2026 The esdsim Authors
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

#include "esd/channels.hpp"

#include <cmath>
#include <sstream>

namespace esd {
namespace {

void check_unit_interval(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream msg;
    msg << name << " = " << v << " must lie in [0, 1]";
    throw ParameterError(msg.str());
  }
}

}  // namespace

const char* to_string(ChannelLabel label) {
  switch (label) {
    case ChannelLabel::Amplitude: return "amplitude";
    case ChannelLabel::Phase: return "phase";
    case ChannelLabel::Depolarizing: return "depolarizing";
    case ChannelLabel::Custom: return "custom";
  }
  return "unknown";
}

const char* to_string(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::Amplitude: return "amplitude";
    case NoiseKind::Phase: return "phase";
    case NoiseKind::Depolarizing: return "depolarizing";
  }
  return "unknown";
}

KrausSet::KrausSet(std::size_t dim, ChannelLabel label, std::vector<ComplexMat> ops)
    : dim_(dim), label_(label), ops_(std::move(ops)) {
  if (dim != 2 && dim != 4) throw DimensionError("KrausSet: dimension must be 2 or 4");
  for (const ComplexMat& k : ops_)
    if (k.dim() != dim) throw DimensionError("KrausSet: operator dimension differs from set dimension");
}

void validate(const NoiseSpec& noise) {
  if (!(noise.rate > 0.0) || !std::isfinite(noise.rate)) {
    std::ostringstream msg;
    msg << "noise rate = " << noise.rate << " must be > 0";
    throw ParameterError(msg.str());
  }
}

KrausSet amplitude_kraus(double eta) {
  check_unit_interval("eta", eta);
  const double s = std::sqrt(1.0 - eta * eta);
  return KrausSet(2, ChannelLabel::Amplitude,
                  {ComplexMat(2, {eta, 0.0, 0.0, 1.0}), ComplexMat(2, {0.0, 0.0, s, 0.0})});
}

KrausSet phase_kraus(double gamma) {
  check_unit_interval("gamma", gamma);
  const double s = std::sqrt(1.0 - gamma * gamma);
  return KrausSet(2, ChannelLabel::Phase,
                  {ComplexMat(2, {1.0, 0.0, 0.0, gamma}), ComplexMat(2, {0.0, 0.0, 0.0, s})});
}

KrausSet depolarizing_kraus(double p) {
  check_unit_interval("p", p);
  const double k0 = std::sqrt(1.0 - p);
  const double k = std::sqrt(p / 3.0);
  const Complex i(0.0, 1.0);
  return KrausSet(2, ChannelLabel::Depolarizing,
                  {ComplexMat(2, {k0, 0.0, 0.0, k0}), ComplexMat(2, {0.0, k, k, 0.0}),
                   ComplexMat(2, {0.0, k * i, -k * i, 0.0}), ComplexMat(2, {k, 0.0, 0.0, -k})});
}

KrausSet lift_first(const KrausSet& k) {
  if (k.dim() != 2) throw DimensionError("lift_first: expected single-qubit Kraus operators");
  const ComplexMat id = ComplexMat::identity(2);
  std::vector<ComplexMat> lifted;
  lifted.reserve(k.ops().size());
  for (const ComplexMat& op : k.ops()) lifted.push_back(kron(op, id));
  return KrausSet(4, k.label(), std::move(lifted));
}

double check_completeness(const KrausSet& k) {
  ComplexMat sum = ComplexMat::zeros(k.dim());
  for (const ComplexMat& op : k.ops()) sum = sum + dagger(op) * op;
  return frobenius_distance(sum, ComplexMat::identity(k.dim()));
}

DensityMatrix apply(const DensityMatrix& rho, const KrausSet& k) {
  if (k.dim() != 4) throw DimensionError("apply: Kraus operators must be 4x4 (use lift_first)");
  const double residual = check_completeness(k);
  if (residual > kCompletenessTol) {
    std::ostringstream msg;
    msg << "apply: Kraus set is not trace preserving (||sum K^dagger K - I||_F = " << residual << ")";
    throw ParameterError(msg.str());
  }
  ComplexMat out = ComplexMat::zeros(4);
  for (const ComplexMat& op : k.ops()) out = out + op * rho.matrix() * dagger(op);
  try {
    return DensityMatrix::from_matrix(out);
  } catch (const NumericalError& e) {
    throw NumericalError(std::string("apply: output failed validation: ") + e.what());
  }
}

namespace detail {

ComplexMat partial_trace_first(const ComplexMat& rho) {
  if (rho.dim() != 4) throw DimensionError("partial_trace_first: expected a 4x4 matrix");
  return ComplexMat::generate(2, [&](std::size_t r, std::size_t c) {
    return rho(r, c) + rho(2 + r, 2 + c);
  });
}

}  // namespace detail
}  // namespace esd
