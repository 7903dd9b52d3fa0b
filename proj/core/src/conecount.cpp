#include "growth/conecount.hpp"

#include <algorithm>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

ConeCounter::ConeCounter(RootSystem rs, std::uint64_t scan_limit) : rs_(std::move(rs)), scan_limit_(scan_limit) {
  const int n = rs_.rank();
  for (int i = 0; i < n; ++i) {
    const IntVec& w = rs_.cone_generators()[std::size_t(i)];
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; }))
      throw std::logic_error("cone generator with a negative entry; the box scan would be invalid");
    const IntVec cw = rs_.cartan().apply(w);
    for (int j = 0; j < n; ++j)
      if ((j == i) != (cw[std::size_t(j)] != 0) || cw[std::size_t(i)] < 0)
        throw std::logic_error("C w_i is not a positive multiple of e_i");
    scale_.push_back(cw[std::size_t(i)]);
    weights_.push_back(two_rho_weight(rs_, w));
  }
}

bool ConeCounter::in_parallelepiped(Subset indices, const IntVec& m) const {
  // m = sum lambda_i w_i with lambda_i = (C m)_i / scale_i
  const IntVec cm = rs_.cartan().apply(m);
  for (int j = 0; j < rs_.rank(); ++j) {
    const int v = cm[std::size_t(j)];
    if (contains(indices, j)) {
      if (v < 0 || v >= scale_[std::size_t(j)]) return false;
    } else if (v != 0) {
      return false;
    }
  }
  return true;
}

std::vector<IntVec> ConeCounter::scan_box(Subset indices) const {
  const int n = rs_.rank();
  IntVec upper(std::size_t(n), 0);
  for (int i : members(indices)) upper = upper + rs_.cone_generators()[std::size_t(i)];
  std::vector<IntVec> out;
  IntVec m(std::size_t(n), 0);
  while (true) {
    if (in_parallelepiped(indices, m)) out.push_back(m);
    int k = n - 1;
    while (k >= 0 && m[std::size_t(k)] == upper[std::size_t(k)]) m[std::size_t(k--)] = 0;
    if (k < 0) break;
    ++m[std::size_t(k)];
  }
  return out;
}

std::vector<IntVec> ConeCounter::scan_residues(Subset indices) const {
  // lambda_i = a_i / scale_i with 0 <= a_i < scale_i; keep integral combinations
  const int n = rs_.rank();
  const auto idx = members(indices);
  const std::int64_t s = rs_.det();
  std::vector<int> a(idx.size(), 0);
  std::vector<IntVec> out;
  while (true) {
    std::vector<std::int64_t> acc(std::size_t(n), 0);  // det * m
    for (std::size_t p = 0; p < idx.size(); ++p) {
      const int i = idx[p];
      const IntVec& w = rs_.cone_generators()[std::size_t(i)];
      const std::int64_t coef = std::int64_t(a[p]) * (s / scale_[std::size_t(i)]);
      for (int r = 0; r < n; ++r) acc[std::size_t(r)] += coef * w[std::size_t(r)];
    }
    if (std::all_of(acc.begin(), acc.end(), [&](std::int64_t v) { return v % s == 0; })) {
      IntVec m(static_cast<std::size_t>(n), 0);
      for (int r = 0; r < n; ++r) m[std::size_t(r)] = int(acc[std::size_t(r)] / s);
      out.push_back(std::move(m));
    }
    std::size_t p = 0;
    while (p < idx.size() && a[p] + 1 == scale_[std::size_t(idx[p])]) a[p++] = 0;
    if (p == idx.size()) break;
    ++a[p];
  }
  return out;
}

std::vector<IntVec> ConeCounter::scan(Subset indices, ScanMethod method) const {
  if (!is_subset(indices, full_subset(rs_.rank()))) throw std::invalid_argument("cone index out of range");
  auto out = method == ScanMethod::box ? scan_box(indices) : scan_residues(indices);
  std::sort(out.begin(), out.end());
  return out;
}

const ParallelepipedPoints& ConeCounter::points(Subset indices) const {
  if (!is_subset(indices, full_subset(rs_.rank()))) throw std::invalid_argument("cone index out of range");
  {
    std::lock_guard lock(mutex_);
    auto it = points_.find(indices);
    if (it != points_.end()) return it->second;
  }
  std::uint64_t box = 1;
  std::uint64_t residues = 1;
  {
    IntVec upper(std::size_t(rs_.rank()), 0);
    for (int i : members(indices)) {
      upper = upper + rs_.cone_generators()[std::size_t(i)];
      residues = std::min<std::uint64_t>(residues * std::uint64_t(scale_[std::size_t(i)]), scan_limit_ + 1);
    }
    for (int u : upper) box = std::min<std::uint64_t>(box * std::uint64_t(u + 1), scan_limit_ + 1);
  }
  if (std::min(box, residues) > scan_limit_)
    throw BoundExceeded("parallelepiped scan for " + rs_.label() + " exceeds the scan limit");
  // The box scan is the reference method; the residue walk gives the same set
  // and is used only when it is the cheaper of the two.
  ParallelepipedPoints result{indices, box <= residues ? scan_box(indices) : scan_residues(indices)};
  std::sort(result.points.begin(), result.points.end());
  std::lock_guard lock(mutex_);
  return points_.emplace(indices, std::move(result)).first->second;
}

IntPoly ConeCounter::point_numerator(Subset indices) const {
  IntPoly num;
  for (const auto& m : points(indices).points) num += IntPoly::t_power(unsigned(two_rho_weight(rs_, m)));
  return num;
}

const RatFun& ConeCounter::sigma_closed(Subset indices) const {
  {
    std::lock_guard lock(mutex_);
    auto it = closed_.find(indices);
    if (it != closed_.end()) return it->second;
  }
  IntPoly den{1};
  for (int i : members(indices)) den *= IntPoly::one_minus_t_power(unsigned(weights_[std::size_t(i)]));
  RatFun r(point_numerator(indices), std::move(den));
  std::lock_guard lock(mutex_);
  return closed_.emplace(indices, std::move(r)).first->second;
}

const RatFun& ConeCounter::sigma_open(Subset indices) const {
  {
    std::lock_guard lock(mutex_);
    auto it = open_.find(indices);
    if (it != open_.end()) return it->second;
  }
  // Sum over the common denominator prod_{i in I} (1 - t^{2w_i}) and reduce once;
  // adding reduced fractions face by face costs a polynomial gcd per face.
  IntPoly num;
  IntPoly den{1};
  for (int i : members(indices)) den *= IntPoly::one_minus_t_power(unsigned(weights_[std::size_t(i)]));
  for_each_subset(indices, [&](Subset face) {
    IntPoly term = point_numerator(face);
    for (int i : members(indices))
      if (!contains(face, i)) term *= IntPoly::one_minus_t_power(unsigned(weights_[std::size_t(i)]));
    if ((cardinality(indices) - cardinality(face)) % 2 == 0)
      num += term;
    else
      num -= term;
  });
  RatFun acc(std::move(num), std::move(den));
  std::lock_guard lock(mutex_);
  return open_.emplace(indices, std::move(acc)).first->second;
}

RatFun ConeCounter::f_Q_product_form(Subset q) const {
  unsigned shift = 0;
  IntPoly den{1};
  for (int i : members(cone_indices(rs_, q))) {
    shift += unsigned(weights_[std::size_t(i)]);
    den *= IntPoly::one_minus_t_power(unsigned(weights_[std::size_t(i)]));
  }
  return RatFun(IntPoly::t_power(shift), std::move(den));
}

bool ConeCounter::trivial_parallelepipeds(Subset q) const {
  bool trivial = true;
  for_each_subset(cone_indices(rs_, q), [&](Subset indices) {
    if (points(indices).points.size() != 1) trivial = false;
  });
  return trivial;
}

ParallelepipedPoints parallelepiped_points(const RootSystem& rs, Subset indices) {
  return ConeCounter(rs).points(indices);
}
RatFun sigma_closed(const RootSystem& rs, Subset indices) { return ConeCounter(rs).sigma_closed(indices); }
RatFun sigma_open(const RootSystem& rs, Subset indices) { return ConeCounter(rs).sigma_open(indices); }
RatFun f_Q(const RootSystem& rs, Subset q) { return ConeCounter(rs).f_Q(q); }

}  // namespace growth
