#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "mmcore/errors.hpp"

namespace mmcore {

// Dimension list of a dense row-major tensor. All dims are positive.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<int> dims) : dims_(dims) { validate(); }
  explicit Shape(std::vector<int> dims) : dims_(std::move(dims)) { validate(); }

  int rank() const { return static_cast<int>(dims_.size()); }
  int operator[](int i) const { return dims_[static_cast<size_t>(i)]; }
  const std::vector<int>& dims() const { return dims_; }

  std::int64_t numel() const {
    std::int64_t n = 1;
    for (int d : dims_) n *= d;
    return n;
  }

  bool operator==(const Shape& o) const { return dims_ == o.dims_; }
  bool operator!=(const Shape& o) const { return dims_ != o.dims_; }

  std::string str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < dims_.size(); ++i) {
      if (i) os << ',';
      os << dims_[i];
    }
    os << ']';
    return os.str();
  }

 private:
  void validate() const {
    for (int d : dims_)
      if (d <= 0) throw ConfigError("Shape: non-positive dim in " + str());
  }

  std::vector<int> dims_;
};

}  // namespace mmcore
