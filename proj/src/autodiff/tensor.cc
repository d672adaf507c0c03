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

#include "evtrig/autodiff/tensor.h"

#include <algorithm>

#include "evtrig/error.h"

namespace evtrig::ad {

std::string ShapeString(const Shape &shape) {
  std::string s = "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) s += "x";
    s += std::to_string(shape[i]);
  }
  return s + "]";
}

size_t NumElements(const Shape &shape) {
  size_t n = 1;
  for (size_t d : shape) n *= d;
  return n;
}

Tensor Tensor::Zeros(Shape shape, bool requires_grad) {
  if (shape.size() > 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "rank > 2 not supported: " + ShapeString(shape));
  }
  auto s = std::make_shared<Storage>();
  s->values.assign(NumElements(shape), 0.0);
  s->shape = std::move(shape);
  Tensor t(std::move(s));
  t.set_requires_grad(requires_grad);
  return t;
}

Tensor Tensor::FromValues(Shape shape, std::vector<double> values,
                          bool requires_grad) {
  if (NumElements(shape) != values.size() || shape.size() > 2) {
    throw Error(ErrorCode::kShapeMismatch,
                "shape " + ShapeString(shape) + " does not fit " +
                    std::to_string(values.size()) + " values");
  }
  auto s = std::make_shared<Storage>();
  s->shape = std::move(shape);
  s->values = std::move(values);
  Tensor t(std::move(s));
  t.set_requires_grad(requires_grad);
  return t;
}

Tensor Tensor::Vector(std::vector<double> values, bool requires_grad) {
  size_t n = values.size();
  return FromValues({n}, std::move(values), requires_grad);
}

Tensor Tensor::Scalar(double value, bool requires_grad) {
  return FromValues({}, {value}, requires_grad);
}

size_t Tensor::rows() const {
  const Shape &s = storage_->shape;
  return s.empty() ? 1 : s[0];
}

size_t Tensor::cols() const {
  const Shape &s = storage_->shape;
  return s.size() < 2 ? 1 : s[1];
}

double Tensor::item() const {
  if (size() != 1) {
    throw Error(ErrorCode::kShapeMismatch,
                "item() on tensor of shape " + ShapeString(shape()));
  }
  return storage_->values[0];
}

void Tensor::set_requires_grad(bool on) {
  storage_->requires_grad = on;
  if (on) {
    storage_->grad.assign(storage_->values.size(), 0.0);
  } else {
    storage_->grad.clear();
    storage_->grad.shrink_to_fit();
  }
}

void Tensor::ZeroGrad() {
  std::fill(storage_->grad.begin(), storage_->grad.end(), 0.0);
}

Tensor Tensor::Clone() const {
  auto s = std::make_shared<Storage>(*storage_);
  return Tensor(std::move(s));
}

}  // namespace evtrig::ad
