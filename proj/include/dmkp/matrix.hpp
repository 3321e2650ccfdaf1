#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "dmkp/numbers.hpp"

namespace dmkp {

// Dense row-major integer matrix.  Entries are int64; all arithmetic that
// could overflow (determinants, products with LP solutions) promotes to Int.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, long long fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Mat(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  long long& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  long long at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<long long> col(int j) const {
    std::vector<long long> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
  }

  // y = A x with exact arithmetic.
  std::vector<Int> mul(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("mul: size mismatch");
    std::vector<Int> y(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += make_int(at(i, j)) * x[j];
    return y;
  }

  std::vector<Int> mul_i64(const std::vector<long long>& x) const {
    std::vector<Int> xi;
    xi.reserve(x.size());
    for (long long v : x) xi.push_back(make_int(v));
    return mul(xi);
  }

  bool operator==(const Mat& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

inline Int dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += make_int(a[i]) * make_int(b[i]);
  return s;
}

}  // namespace dmkp
