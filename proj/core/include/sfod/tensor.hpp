#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sfod {

/// Dense row-major tensor of doubles. Shapes are small (rank <= 4).
/// This is a plain value type; autodiff wraps it in graph nodes.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> v;

  Tensor() = default;
  explicit Tensor(std::vector<int> s);
  Tensor(std::vector<int> s, double fill);
  Tensor(std::vector<int> s, std::vector<double> data);

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }
  static Tensor scalar(double x) { return Tensor({1}, {x}); }

  int64_t numel() const { return static_cast<int64_t>(v.size()); }
  int ndim() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  bool same_shape(const Tensor& o) const { return shape == o.shape; }
  bool empty() const { return v.empty(); }

  double& operator[](size_t i) { return v[i]; }
  double operator[](size_t i) const { return v[i]; }

  double* data() { return v.data(); }
  const double* data() const { return v.data(); }

  /// (n, c, y, x) accessor for rank-4 tensors.
  double& at4(int n, int c, int y, int x) {
    return v[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + y) * shape[3] + x];
  }
  double at4(int n, int c, int y, int x) const {
    return v[((static_cast<size_t>(n) * shape[1] + c) * shape[2] + y) * shape[3] + x];
  }
  /// (r, c) accessor for rank-2 tensors.
  double& at2(int r, int c) { return v[static_cast<size_t>(r) * shape[1] + c]; }
  double at2(int r, int c) const { return v[static_cast<size_t>(r) * shape[1] + c]; }

  void add_(const Tensor& o);
  void scale_(double k);
  bool all_finite() const;
  double abs_max() const;

  std::string shape_str() const;
};

int64_t shape_numel(const std::vector<int>& s);

}  // namespace sfod
