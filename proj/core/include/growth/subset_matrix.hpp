#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "growth/subset.hpp"

namespace growth {

/// Position of sub among the subsets of universe in ascending order.
inline std::size_t subset_rank(Subset sub, Subset universe) {
  std::size_t idx = 0;
  int bit = 0;
  for (int i : members(universe)) {
    if (contains(sub, i)) idx |= std::size_t{1} << bit;
    ++bit;
  }
  return idx;
}

/// Matrix with rows indexed by subsets of one generator set and columns by
/// subsets of another, both in ascending mask order.
template <class T>
class SubsetMatrix {
 public:
  SubsetMatrix() = default;
  SubsetMatrix(Subset row_universe, Subset col_universe, const T& fill = T{})
      : row_universe_(row_universe),
        col_universe_(col_universe),
        rows_(std::size_t{1} << cardinality(row_universe)),
        cols_(std::size_t{1} << cardinality(col_universe)),
        data_(rows_ * cols_, fill) {}

  Subset row_universe() const { return row_universe_; }
  Subset col_universe() const { return col_universe_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(Subset r, Subset c) { return data_[index(r, c)]; }
  const T& at(Subset r, Subset c) const { return data_[index(r, c)]; }

  /// Subsets labelling the rows / columns, ascending.
  std::vector<Subset> row_labels() const { return labels(row_universe_); }
  std::vector<Subset> col_labels() const { return labels(col_universe_); }

  friend bool operator==(const SubsetMatrix& a, const SubsetMatrix& b) {
    return a.row_universe_ == b.row_universe_ && a.col_universe_ == b.col_universe_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(Subset r, Subset c) const {
    if (!is_subset(r, row_universe_) || !is_subset(c, col_universe_))
      throw std::out_of_range("SubsetMatrix: label outside its universe");
    return subset_rank(r, row_universe_) * cols_ + subset_rank(c, col_universe_);
  }
  static std::vector<Subset> labels(Subset u) {
    std::vector<Subset> out;
    for_each_subset(u, [&](Subset s) { out.push_back(s); });
    return out;
  }

  Subset row_universe_ = 0;
  Subset col_universe_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class A, class B>
auto multiply(const SubsetMatrix<A>& x, const SubsetMatrix<B>& y) {
  using R = decltype(std::declval<const A&>() * std::declval<const B&>());
  if (x.col_universe() != y.row_universe()) throw std::invalid_argument("SubsetMatrix product: universes differ");
  SubsetMatrix<R> out(x.row_universe(), y.col_universe());
  for (Subset r : x.row_labels())
    for (Subset c : y.col_labels()) {
      R acc{};
      for (Subset m : x.col_labels()) {
        const A& a = x.at(r, m);
        if (a == A{}) continue;
        const B& b = y.at(m, c);
        if (b == B{}) continue;
        acc += a * b;
      }
      out.at(r, c) = std::move(acc);
    }
  return out;
}

}  // namespace growth
