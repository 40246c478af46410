#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace logltn {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_numel(const Shape& s) {
  std::size_t n = 1;
  for (std::size_t d : s) n *= d;
  return n;
}

inline std::string shape_str(const Shape& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

/// Row-major strides; stride of the last axis is 1.
inline std::vector<std::size_t> shape_strides(const Shape& s) {
  std::vector<std::size_t> st(s.size(), 1);
  for (std::size_t i = s.size(); i-- > 1;) st[i - 1] = st[i] * s[i];
  return st;
}

struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense row-major tensor of doubles. Scalars have an empty shape.
struct Tensor {
  Shape shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(Shape s, std::vector<double> d) : shape(std::move(s)), data(std::move(d)) {
    assert(data.size() == shape_numel(shape));
  }

  static Tensor zeros(Shape s) {
    std::size_t n = shape_numel(s);
    return Tensor(std::move(s), std::vector<double>(n, 0.0));
  }
  static Tensor full(Shape s, double v) {
    std::size_t n = shape_numel(s);
    return Tensor(std::move(s), std::vector<double>(n, v));
  }
  static Tensor scalar(double v) { return Tensor({}, {v}); }
  static Tensor vector(std::vector<double> d) {
    Shape s{d.size()};
    return Tensor(std::move(s), std::move(d));
  }
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> d) {
    if (d.size() != rows * cols) throw ShapeError("matrix data size mismatch");
    return Tensor({rows, cols}, std::move(d));
  }

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  bool is_scalar() const { return data.size() == 1 && shape.empty(); }

  double& operator[](std::size_t i) { return data[i]; }
  double operator[](std::size_t i) const { return data[i]; }

  double& at2(std::size_t r, std::size_t c) {
    assert(rank() == 2);
    return data[r * shape[1] + c];
  }
  double at2(std::size_t r, std::size_t c) const {
    assert(rank() == 2);
    return data[r * shape[1] + c];
  }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }
  bool has_nan() const {
    for (double v : data)
      if (std::isnan(v)) return true;
    return false;
  }
};

/// Walks every flat index of `shape` while tracking the flat offsets of two
/// axis subsets (kept vs reduced). Used by the multi-axis reductions.
struct AxisSplitWalker {
  // contribution of +1 step along each axis to the kept / reduced flat index
  std::vector<std::size_t> kept_step, red_step;
  std::vector<std::size_t> coord, dims;
  std::size_t kept = 0, red = 0;
  bool done_ = false;

  AxisSplitWalker(const Shape& shape, const std::vector<bool>& reduced) {
    dims.assign(shape.begin(), shape.end());
    coord.assign(shape.size(), 0);
    kept_step.assign(shape.size(), 0);
    red_step.assign(shape.size(), 0);
    std::size_t ks = 1, rs = 1;
    for (std::size_t i = shape.size(); i-- > 0;) {
      if (reduced[i]) {
        red_step[i] = rs;
        rs *= shape[i];
      } else {
        kept_step[i] = ks;
        ks *= shape[i];
      }
    }
    if (shape_numel(shape) == 0) done_ = true;
  }

  bool done() const { return done_; }

  void advance() {
    for (std::size_t i = dims.size(); i-- > 0;) {
      ++coord[i];
      kept += kept_step[i];
      red += red_step[i];
      if (coord[i] < dims[i]) return;
      kept -= kept_step[i] * dims[i];
      red -= red_step[i] * dims[i];
      coord[i] = 0;
    }
    done_ = true;
  }
};

}  // namespace logltn
