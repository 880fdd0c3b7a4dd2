#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "mmcore/errors.hpp"
#include "mmcore/shape.hpp"

namespace mmcore {

template <typename S>
using Buffer = std::shared_ptr<std::vector<S>>;

template <typename S>
Buffer<S> make_buffer(std::int64_t n, S fill = S(0)) {
  return std::make_shared<std::vector<S>>(static_cast<size_t>(n), fill);
}

// Dense row-major tensor. Cheap to copy: the value and gradient buffers are
// shared. `node` links the tensor to the graph that produced it (-1 for
// tensors outside any graph). Values are treated as immutable once an op has
// consumed them; gradients accumulate into `grad` during backward.
template <typename S>
class Tensor {
 public:
  using Scalar = S;

  Tensor() = default;
  explicit Tensor(Shape shape)
      : shape_(std::move(shape)), data_(make_buffer<S>(shape_.numel())) {}
  Tensor(Shape shape, std::vector<S> values)
      : shape_(std::move(shape)),
        data_(std::make_shared<std::vector<S>>(std::move(values))) {
    if (static_cast<std::int64_t>(data_->size()) != shape_.numel())
      throw ConfigError("Tensor: data length " + std::to_string(data_->size()) +
                        " != numel of " + shape_.str());
  }

  static Tensor full(Shape shape, S v) {
    Tensor t(std::move(shape));
    std::fill(t.data_->begin(), t.data_->end(), v);
    return t;
  }
  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor scalar(S v) { return Tensor(Shape{1}, {v}); }

  const Shape& shape() const { return shape_; }
  std::int64_t numel() const { return shape_.numel(); }
  bool defined() const { return static_cast<bool>(data_); }

  S* data() { return data_->data(); }
  const S* data() const { return data_->data(); }
  std::span<S> values() { return {data_->data(), data_->size()}; }
  std::span<const S> values() const { return {data_->data(), data_->size()}; }
  const Buffer<S>& buffer() const { return data_; }

  S& operator[](std::int64_t i) { return (*data_)[static_cast<size_t>(i)]; }
  S operator[](std::int64_t i) const { return (*data_)[static_cast<size_t>(i)]; }

  bool has_grad() const { return static_cast<bool>(grad_); }
  S* grad() { return grad_->data(); }
  const S* grad() const { return grad_->data(); }
  std::span<const S> grad_values() const { return {grad_->data(), grad_->size()}; }
  const Buffer<S>& grad_buffer() const { return grad_; }

  void ensure_grad() {
    if (!grad_) grad_ = make_buffer<S>(shape_.numel());
  }
  void zero_grad() {
    if (grad_) std::fill(grad_->begin(), grad_->end(), S(0));
  }

  bool all_finite() const {
    for (S v : *data_)
      if (!std::isfinite(static_cast<double>(v))) return false;
    return true;
  }

  template <typename T>
  Tensor<T> cast() const {
    Tensor<T> out{shape_};
    for (std::int64_t i = 0; i < numel(); ++i)
      out[i] = static_cast<T>((*data_)[static_cast<size_t>(i)]);
    return out;
  }

  // Graph node id of the op that produced this tensor; -1 if none.
  int node = -1;

 private:
  Shape shape_;
  Buffer<S> data_;
  Buffer<S> grad_;
};

// Integer tensor for token ids and labels.
struct IntTensor {
  Shape shape;
  std::vector<int> data;

  IntTensor() = default;
  IntTensor(Shape s, std::vector<int> v) : shape(std::move(s)), data(std::move(v)) {
    if (static_cast<std::int64_t>(data.size()) != shape.numel())
      throw ConfigError("IntTensor: data length != numel of " + shape.str());
  }
};

}  // namespace mmcore
