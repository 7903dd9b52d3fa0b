#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace growth {

using IntVec = std::vector<int>;

/// Small dense integer matrix, row-major. Sized for root-system ranks (<= 8).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  std::span<const int> data() const { return data_; }
  IntVec column(int c) const;
  IntVec row(int r) const;

  IntMatrix transpose() const;
  IntVec apply(std::span<const int> v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& m);

/// Classical adjugate: adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

int gcd_of(std::span<const int> v);
int dot(std::span<const int> a, std::span<const int> b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);

std::string to_string(std::span<const int> v);
std::string to_string(const IntMatrix& m);

}  // namespace growth
