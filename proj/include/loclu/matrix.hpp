#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace loclu {

// Dense row-major matrix of vertex attributes (rows = vertices).
struct AttributeMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // rows * cols, row-major

  AttributeMatrix() = default;
  AttributeMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), values(r * c, 0.0) {}

  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> out(rows);
    for (std::size_t i = 0; i < rows; ++i) out[i] = at(i, j);
    return out;
  }

  // Column j restricted to the given vertex ids, in id order.
  std::vector<double> gather_column(std::span<const std::uint32_t> members, std::size_t j) const {
    std::vector<double> out(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) out[i] = at(members[i], j);
    return out;
  }

  AttributeMatrix with_appended_column(std::span<const double> col) const {
    AttributeMatrix out(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(i, j);
      out.at(i, cols) = col[i];
    }
    return out;
  }
};

}  // namespace loclu
