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

#ifndef EVTRIG_AUTODIFF_TENSOR_H_
#define EVTRIG_AUTODIFF_TENSOR_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace evtrig::ad {

using Shape = std::vector<size_t>;

std::string ShapeString(const Shape &shape);
size_t NumElements(const Shape &shape);

// Dense row-major double tensor of rank 0, 1 or 2 with a gradient slot.
//
// Tensor is a handle: copies share the same storage, which is what lets a
// recorded backward rule write into the gradient of a parameter owned
// elsewhere. Use Clone() for an independent copy.
class Tensor {
 public:
  Tensor() = default;

  static Tensor Zeros(Shape shape, bool requires_grad = false);
  static Tensor FromValues(Shape shape, std::vector<double> values,
                           bool requires_grad = false);
  static Tensor Vector(std::vector<double> values, bool requires_grad = false);
  static Tensor Scalar(double value, bool requires_grad = false);

  bool defined() const { return storage_ != nullptr; }
  const Shape &shape() const { return storage_->shape; }
  size_t rank() const { return storage_->shape.size(); }
  size_t size() const { return storage_->values.size(); }
  size_t rows() const;
  size_t cols() const;

  std::span<double> values() { return storage_->values; }
  std::span<const double> values() const { return storage_->values; }
  double item() const;

  // Empty unless requires_grad() is set.
  std::span<double> grad() { return storage_->grad; }
  std::span<const double> grad() const { return storage_->grad; }

  bool requires_grad() const { return storage_->requires_grad; }
  void set_requires_grad(bool on);
  void ZeroGrad();

  Tensor Clone() const;
  bool SameStorage(const Tensor &other) const {
    return storage_ == other.storage_;
  }

 private:
  struct Storage {
    Shape shape;
    std::vector<double> values;
    std::vector<double> grad;
    bool requires_grad = false;
  };

  explicit Tensor(std::shared_ptr<Storage> storage)
      : storage_(std::move(storage)) {}

  std::shared_ptr<Storage> storage_;
};

}  // namespace evtrig::ad

#endif  // EVTRIG_AUTODIFF_TENSOR_H_
