// Copyright 2026 The evtrig Authors.
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

#include "evtrig/autodiff/ops.h"

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

#include "evtrig/error.h"

namespace evtrig::ad {

namespace {

using RowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatMap = Eigen::Map<RowMajor>;
using ConstMatMap = Eigen::Map<const RowMajor>;
using VecMap = Eigen::Map<Eigen::VectorXd>;
using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;

ConstMatMap AsMatrix(const Tensor &t) {
  return ConstMatMap(t.values().data(), t.rows(), t.cols());
}

Tensor MakeOutput(const Tape &tape, Shape shape,
                  std::initializer_list<const Tensor *> inputs) {
  bool grad = false;
  if (!tape.recording()) return Tensor::Zeros(std::move(shape));
  for (const Tensor *t : inputs) grad = grad || t->requires_grad();
  return Tensor::Zeros(std::move(shape), grad);
}

[[noreturn]] void ShapeError(const char *op, const Tensor &a,
                             const Tensor &b) {
  throw Error(ErrorCode::kShapeMismatch,
              std::string(op) + ": " + ShapeString(a.shape()) + " vs " +
                  ShapeString(b.shape()));
}

// Shape checks shared by the binary elementwise ops.
Shape BroadcastShape(const char *op, const Tensor &a, const Tensor &b) {
  if (a.shape() == b.shape()) return a.shape();
  if (a.size() == 1) return b.shape();
  if (b.size() == 1) return a.shape();
  ShapeError(op, a, b);
}

// Accumulates `g` into `t`'s gradient, summing when t was broadcast.
void AccumulateBroadcast(Tensor t, std::span<const double> g,
                         std::span<const double> factor, double sign) {
  if (!t.requires_grad()) return;
  std::span<double> tg = t.grad();
  if (tg.size() == g.size()) {
    if (factor.empty()) {
      for (size_t i = 0; i < g.size(); ++i) tg[i] += sign * g[i];
    } else {
      for (size_t i = 0; i < g.size(); ++i) {
        tg[i] += sign * g[i] * factor[factor.size() == 1 ? 0 : i];
      }
    }
    return;
  }
  double total = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    total += g[i] * (factor.empty() ? 1.0 : factor[factor.size() == 1 ? 0 : i]);
  }
  tg[0] += sign * total;
}

double At(std::span<const double> v, size_t i) {
  return v.size() == 1 ? v[0] : v[i];
}

double StableSigmoid(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

Tensor MatMul(Tape &tape, const Tensor &a, const Tensor &b) {
  if (a.rank() != 2 || (b.rank() != 1 && b.rank() != 2) ||
      a.cols() != b.rows()) {
    ShapeError("matmul", a, b);
  }
  Shape shape = b.rank() == 1 ? Shape{a.rows()} : Shape{a.rows(), b.cols()};
  Tensor out = MakeOutput(tape, shape, {&a, &b});
  const size_t m = a.rows(), n = b.rank() == 1 ? 1 : b.cols();
  MatMap(out.values().data(), m, n).noalias() = AsMatrix(a) * AsMatrix(b);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), b = Tensor(b), out, m, n]() mutable {
      ConstMatMap g(out.grad().data(), m, n);
      if (a.requires_grad()) {
        MatMap(a.grad().data(), a.rows(), a.cols()).noalias() +=
            g * AsMatrix(b).transpose();
      }
      if (b.requires_grad()) {
        MatMap(b.grad().data(), b.rows(), b.cols()).noalias() +=
            AsMatrix(a).transpose() * g;
      }
    });
  }
  return out;
}

Tensor Add(Tape &tape, const Tensor &a, const Tensor &b) {
  Tensor out = MakeOutput(tape, BroadcastShape("add", a, b), {&a, &b});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = At(a.values(), i) + At(b.values(), i);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), b = Tensor(b), out]() mutable {
      AccumulateBroadcast(a, out.grad(), {}, 1.0);
      AccumulateBroadcast(b, out.grad(), {}, 1.0);
    });
  }
  return out;
}

Tensor Sub(Tape &tape, const Tensor &a, const Tensor &b) {
  Tensor out = MakeOutput(tape, BroadcastShape("sub", a, b), {&a, &b});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = At(a.values(), i) - At(b.values(), i);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), b = Tensor(b), out]() mutable {
      AccumulateBroadcast(a, out.grad(), {}, 1.0);
      AccumulateBroadcast(b, out.grad(), {}, -1.0);
    });
  }
  return out;
}

Tensor Mul(Tape &tape, const Tensor &a, const Tensor &b) {
  Tensor out = MakeOutput(tape, BroadcastShape("mul", a, b), {&a, &b});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = At(a.values(), i) * At(b.values(), i);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), b = Tensor(b), out]() mutable {
      AccumulateBroadcast(a, out.grad(), b.values(), 1.0);
      AccumulateBroadcast(b, out.grad(), a.values(), 1.0);
    });
  }
  return out;
}

Tensor Concat(Tape &tape, const Tensor &a, const Tensor &b) {
  if (a.rank() != 1 || b.rank() != 1) ShapeError("concat", a, b);
  const size_t na = a.size();
  Tensor out = MakeOutput(tape, {na + b.size()}, {&a, &b});
  std::span<double> o = out.values();
  std::copy(a.values().begin(), a.values().end(), o.begin());
  std::copy(b.values().begin(), b.values().end(), o.begin() + na);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), b = Tensor(b), out, na]() mutable {
      std::span<const double> g = out.grad();
      if (a.requires_grad()) {
        for (size_t i = 0; i < na; ++i) a.grad()[i] += g[i];
      }
      if (b.requires_grad()) {
        for (size_t i = 0; i < b.size(); ++i) b.grad()[i] += g[na + i];
      }
    });
  }
  return out;
}

Tensor Tanh(Tape &tape, const Tensor &a) {
  Tensor out = MakeOutput(tape, a.shape(), {&a});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = std::tanh(a.values()[i]);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), out]() mutable {
      std::span<const double> y = out.values(), g = out.grad();
      for (size_t i = 0; i < y.size(); ++i) {
        a.grad()[i] += g[i] * (1.0 - y[i] * y[i]);
      }
    });
  }
  return out;
}

Tensor Sigmoid(Tape &tape, const Tensor &a) {
  Tensor out = MakeOutput(tape, a.shape(), {&a});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = StableSigmoid(a.values()[i]);
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), out]() mutable {
      std::span<const double> y = out.values(), g = out.grad();
      for (size_t i = 0; i < y.size(); ++i) {
        a.grad()[i] += g[i] * y[i] * (1.0 - y[i]);
      }
    });
  }
  return out;
}

Tensor Sum(Tape &tape, const Tensor &a) {
  Tensor out = MakeOutput(tape, {}, {&a});
  double total = 0;
  for (double v : a.values()) total += v;
  out.values()[0] = total;
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), out]() mutable {
      double g = out.grad()[0];
      for (double &ag : a.grad()) ag += g;
    });
  }
  return out;
}

Tensor Scale(Tape &tape, const Tensor &a, double factor) {
  Tensor out = MakeOutput(tape, a.shape(), {&a});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = factor * a.values()[i];
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), out, factor]() mutable {
      std::span<const double> g = out.grad();
      for (size_t i = 0; i < g.size(); ++i) a.grad()[i] += factor * g[i];
    });
  }
  return out;
}

Tensor Lookup(Tape &tape, const Tensor &table, int index) {
  if (table.rank() != 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "lookup table must be a matrix, got " +
                    ShapeString(table.shape()));
  }
  if (index < 0 || static_cast<size_t>(index) >= table.rows()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(index) + " of table with " +
                    std::to_string(table.rows()) + " rows");
  }
  const size_t d = table.cols();
  Tensor out = MakeOutput(tape, {d}, {&table});
  std::span<const double> row = table.values().subspan(index * d, d);
  std::copy(row.begin(), row.end(), out.values().begin());
  if (out.requires_grad()) {
    tape.Record(out, [table = Tensor(table), out, index, d]() mutable {
      std::span<double> tg = table.grad().subspan(index * d, d);
      std::span<const double> g = out.grad();
      for (size_t i = 0; i < d; ++i) tg[i] += g[i];
    });
  }
  return out;
}

Tensor ApplyMask(Tape &tape, const Tensor &a, std::vector<double> mask) {
  if (mask.size() != a.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "mask of " + std::to_string(mask.size()) + " for tensor " +
                    ShapeString(a.shape()));
  }
  Tensor out = MakeOutput(tape, a.shape(), {&a});
  std::span<double> o = out.values();
  for (size_t i = 0; i < o.size(); ++i) o[i] = a.values()[i] * mask[i];
  if (out.requires_grad()) {
    tape.Record(out, [a = Tensor(a), out, mask = std::move(mask)]() mutable {
      std::span<const double> g = out.grad();
      for (size_t i = 0; i < g.size(); ++i) a.grad()[i] += g[i] * mask[i];
    });
  }
  return out;
}

Tensor Dropout(Tape &tape, const Tensor &a, double rate, Rng &rng,
               bool train_mode) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw Error(ErrorCode::kInvalidRate,
                "dropout rate must be in [0, 1), got " + std::to_string(rate));
  }
  if (!train_mode || rate == 0.0) return a;
  const double keep_scale = 1.0 / (1.0 - rate);
  std::vector<double> mask(a.size());
  for (double &m : mask) m = rng.Uniform() < rate ? 0.0 : keep_scale;
  return ApplyMask(tape, a, std::move(mask));
}

std::vector<double> SoftmaxValues(std::span<const double> logits) {
  std::vector<double> p(logits.size());
  if (logits.empty()) return p;
  double mx = *std::max_element(logits.begin(), logits.end());
  double z = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    p[i] = std::exp(logits[i] - mx);
    z += p[i];
  }
  for (double &v : p) v /= z;
  return p;
}

Tensor SoftmaxCrossEntropy(Tape &tape, const Tensor &logits, int gold) {
  if (logits.rank() != 1 || logits.size() == 0) {
    throw Error(ErrorCode::kShapeMismatch,
                "cross entropy needs a logit vector, got " +
                    ShapeString(logits.shape()));
  }
  if (gold < 0 || static_cast<size_t>(gold) >= logits.size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "gold index " + std::to_string(gold) + " for " +
                    std::to_string(logits.size()) + " logits");
  }
  std::span<const double> x = logits.values();
  double mx = *std::max_element(x.begin(), x.end());
  double z = 0;
  for (double v : x) z += std::exp(v - mx);
  double log_z = mx + std::log(z);

  Tensor out = MakeOutput(tape, {}, {&logits});
  out.values()[0] = log_z - x[gold];
  if (out.requires_grad()) {
    tape.Record(out, [logits = Tensor(logits), out, gold]() mutable {
      double g = out.grad()[0];
      std::vector<double> p = SoftmaxValues(logits.values());
      std::span<double> lg = logits.grad();
      for (size_t i = 0; i < p.size(); ++i) {
        lg[i] += g * (p[i] - (static_cast<int>(i) == gold ? 1.0 : 0.0));
      }
    });
  }
  return out;
}

}  // namespace evtrig::ad
