// Copyright 2026 The chandisc authors
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

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace chandisc {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// Role of a subsystem within a layout.
enum class Role { Input, Output, Auxiliary };

/// A named finite-dimensional subsystem.
struct SpaceLabel {
  std::string name;
  int dim = 0;
  Role role = Role::Auxiliary;

  SpaceLabel() = default;
  SpaceLabel(std::string name_, int dim_, Role role_ = Role::Auxiliary)
      : name(std::move(name_)), dim(dim_), role(role_) {
    if (dim < 1) throw std::invalid_argument("SpaceLabel: dim must be >= 1");
  }

  friend bool operator==(const SpaceLabel& a, const SpaceLabel& b) {
    return a.name == b.name && a.dim == b.dim;
  }
};

/// An ordered list of distinct labels; fixes the tensor factorization of a space.
class Layout {
 public:
  Layout() = default;
  explicit Layout(std::vector<SpaceLabel> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i].name == labels_[j].name)
          throw std::invalid_argument("Layout: duplicate label '" + labels_[i].name + "'");
  }

  const std::vector<SpaceLabel>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  const SpaceLabel& operator[](std::size_t i) const { return labels_[i]; }

  long total_dim() const {
    long d = 1;
    for (const auto& l : labels_) d *= l.dim;
    return d;
  }

  bool contains(const std::string& name) const { return find(name) >= 0; }

  int find(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i].name == name) return static_cast<int>(i);
    return -1;
  }

  int index_of(const std::string& name) const {
    int i = find(name);
    if (i < 0) throw std::invalid_argument("Layout: unknown label '" + name + "'");
    return i;
  }

  /// Row-major strides: flat = sum_i idx_i * stride_i.
  std::vector<long> strides() const {
    std::vector<long> s(labels_.size(), 1);
    for (int i = static_cast<int>(labels_.size()) - 2; i >= 0; --i)
      s[i] = s[i + 1] * labels_[i + 1].dim;
    return s;
  }

  /// Layout with the labels in `names` removed.
  Layout without(const std::vector<std::string>& names) const {
    std::vector<SpaceLabel> kept;
    for (const auto& l : labels_)
      if (std::find(names.begin(), names.end(), l.name) == names.end()) kept.push_back(l);
    return Layout(kept);
  }

  /// Name-sorted copy, the canonical order for comparisons.
  Layout sorted() const {
    std::vector<SpaceLabel> ls = labels_;
    std::sort(ls.begin(), ls.end(),
              [](const SpaceLabel& a, const SpaceLabel& b) { return a.name < b.name; });
    return Layout(ls);
  }

  friend bool operator==(const Layout& a, const Layout& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<SpaceLabel> labels_;
};

}  // namespace chandisc
