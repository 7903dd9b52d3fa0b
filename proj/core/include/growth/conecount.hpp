#pragma once

// Lattice points of the simplicial cones spanned by the cone generators w_i,
// and their generating functions specialized at z_i = t^2.

#include <map>
#include <mutex>
#include <vector>

#include "growth/exactalg.hpp"
#include "growth/intmat.hpp"
#include "growth/rootdata.hpp"
#include "growth/subset.hpp"

namespace growth {

struct ParallelepipedPoints {
  Subset indices = 0;
  std::vector<IntVec> points;  // lexicographic order
};

/// Index set I(Q) = {i : s_i not in Q} of the cone attached to Q.
inline Subset cone_indices(const RootSystem& rs, Subset q) { return full_subset(rs.rank()) & ~q; }

enum class ScanMethod { box, residues };

/// Memoizing front end; all results are exact and deterministic.
class ConeCounter {
 public:
  /// Box scans larger than this many candidates are refused.
  static constexpr std::uint64_t kDefaultScanLimit = 50'000'000;

  explicit ConeCounter(RootSystem rs, std::uint64_t scan_limit = kDefaultScanLimit);

  const RootSystem& roots() const { return rs_; }

  /// Integer points m = sum_{i in I} lambda_i w_i with 0 <= lambda_i < 1.
  const ParallelepipedPoints& points(Subset indices) const;
  /// The same point set by one named method, unmemoized and without the scan limit.
  std::vector<IntVec> scan(Subset indices, ScanMethod method) const;
  /// (sum over points of t^<2rho,m>) / prod_{i in I} (1 - t^<2rho,w_i>).
  const RatFun& sigma_closed(Subset indices) const;
  /// Inclusion-exclusion over the faces: the series of the open cone.
  const RatFun& sigma_open(Subset indices) const;
  /// f_Q = sigma_open(I(Q)).
  RatFun f_Q(Subset q) const { return sigma_open(cone_indices(rs_, q)); }

  /// t^{sum 2w_i} / prod (1 - t^{2w_i}) over i in I(Q).
  RatFun f_Q_product_form(Subset q) const;
  /// True when every cone C(R) with R containing Q has only the origin in its parallelepiped.
  bool trivial_parallelepipeds(Subset q) const;

  /// <2rho, w_i>.
  long generator_weight(int i) const { return weights_[std::size_t(i)]; }

 private:
  std::vector<IntVec> scan_box(Subset indices) const;
  std::vector<IntVec> scan_residues(Subset indices) const;
  bool in_parallelepiped(Subset indices, const IntVec& m) const;
  IntPoly point_numerator(Subset indices) const;

  RootSystem rs_;
  std::uint64_t scan_limit_;
  std::vector<long> weights_;
  IntVec scale_;  // C w_i = scale_[i] e_i
  mutable std::mutex mutex_;
  mutable std::map<Subset, ParallelepipedPoints> points_;
  mutable std::map<Subset, RatFun> closed_;
  mutable std::map<Subset, RatFun> open_;
};

ParallelepipedPoints parallelepiped_points(const RootSystem& rs, Subset indices);
RatFun sigma_closed(const RootSystem& rs, Subset indices);
RatFun sigma_open(const RootSystem& rs, Subset indices);
RatFun f_Q(const RootSystem& rs, Subset q);

}  // namespace growth
