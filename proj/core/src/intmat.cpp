#include "growth/intmat.hpp"

#include <numeric>
#include <stdexcept>

namespace growth {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
  data_.reserve(std::size_t(rows_) * cols_);
  for (const auto& r : rows) {
    if (int(r.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::column(int c) const {
  IntVec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVec IntMatrix::row(int r) const {
  return IntVec(data_.begin() + std::ptrdiff_t(r) * cols_, data_.begin() + std::ptrdiff_t(r + 1) * cols_);
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMatrix::apply(std::span<const int> v) const {
  if (int(v.size()) != cols_) throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
  IntVec out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    int acc = 0;
    const int* row = data_.data() + std::size_t(r) * cols_;
    for (int c = 0; c < cols_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const int aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  std::vector<std::int64_t> a(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[std::size_t(i) * n + j] = m(i, j);
  auto at = [&](int i, int j) -> std::int64_t& { return a[std::size_t(i) * n + j]; };

  int sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) { swap = i; break; }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return std::int64_t(sign * at(n - 1, n - 1));
}

IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("adjugate: matrix not square");
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = m(r, c);
        }
        ++mr;
      }
      // adj = transpose of the cofactor matrix
      adj(j, i) = int(((i + j) % 2 ? -1 : 1) * determinant(minor));
    }
  return adj;
}

int gcd_of(std::span<const int> v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  return g;
}

int dot(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

IntVec operator-(const IntVec& a) {
  IntVec out(a);
  for (auto& x : out) x = -x;
  return out;
}

std::string to_string(std::span<const int> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += std::to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace growth
