#pragma once

// Rational series of the affine Weyl group attached to a root system:
// p_{Q,J,K}(t), the double coset series ^J W~^K(t) and normalizer series,
// assembled from finite-group polynomials and cone series.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "growth/affineweyl.hpp"
#include "growth/conecount.hpp"
#include "growth/exactalg.hpp"
#include "growth/finiteweyl.hpp"
#include "growth/report.hpp"
#include "growth/subset_matrix.hpp"

namespace growth {

struct PipelineOptions {
  /// Compute p_{Q,J,K} by both the double sum and the matrix product and
  /// throw InternalMismatch if they differ.
  bool cross_check = false;
  std::size_t max_group_order = FiniteWeyl::kDefaultMaxOrder;
  /// When set, M_S is read from and written to a JSON file in this directory.
  std::string cache_dir;
};

class AffineSeries {
 public:
  explicit AffineSeries(RootSystem rs, PipelineOptions opts = {});

  const RootSystem& roots() const { return fw_->roots(); }
  const FiniteWeyl& finite() const { return *fw_; }
  std::shared_ptr<const FiniteWeyl> finite_ptr() const { return fw_; }
  const ConeCounter& cones() const { return cones_; }
  const PipelineOptions& options() const { return opts_; }
  /// The finite generators S as a subset.
  Subset generators() const { return fw_->all(); }

  /// p_{Q,S,S}(t) = t^{l(w_Q) - l(w_0)} f_Q(t).
  RatFun p_SS(Subset q) const;
  /// M_S: rows Q, columns J, entries p_{Q,J,S}(t).
  const SubsetMatrix<RatFun>& matrix_M_affine() const;
  /// Rows Q in K, columns J in S, entries p_{Q,J,K}(t).
  SubsetMatrix<RatFun> matrix_M_affine(Subset k) const;

  RatFun p_full(Subset q, Subset j, Subset k) const;
  /// Row Q of M_{K,S} times column J of M_S.
  RatFun p_matrix_path(Subset q, Subset j, Subset k) const;
  /// Double sum over Q' and Q'' containing Q' written out term by term.
  RatFun p_double_sum(Subset q, Subset j, Subset k) const;

  /// Sum over Q in K of p_{Q,J,K}.
  RatFun double_coset_series(Subset j, Subset k) const;
  /// W_J(t) p_{J,J,J}(t).
  RatFun normalizer_series(Subset j) const;
  /// The growth series of the whole affine group.
  RatFun growth_series() const { return double_coset_series(0, 0); }

  /// Poincare polynomial of the parabolic subgroup of the affine group on the
  /// generators in j (bit n = affine generator); j must be proper.
  IntPoly affine_parabolic_poincare(Subset j) const;

  /// Identity checks through the given degree; the brute-force parts use an
  /// enumeration of all elements of length <= degree.
  Report affine_identity_checks(unsigned degree, bool with_enumeration = true) const;
  /// Runs both p-paths for every (Q, J, K) and reports agreement.
  Report dual_path_checks() const;

 private:
  Subset conj(const WeylElement& g, Subset s) const;
  SubsetMatrix<RatFun> assemble_M_S() const;
  std::optional<SubsetMatrix<RatFun>> load_cached_M_S() const;
  void store_cached_M_S(const SubsetMatrix<RatFun>& m) const;
  const SubsetMatrix<IntPoly>& finite_M(Subset k) const;

  PipelineOptions opts_;
  std::shared_ptr<const FiniteWeyl> fw_;
  ConeCounter cones_;
  WeylElement w0_;
  std::vector<RatFun> p_ss_;

  mutable std::once_flag ms_once_;
  mutable SubsetMatrix<RatFun> ms_;
  mutable std::mutex mutex_;
  mutable std::map<Subset, SubsetMatrix<IntPoly>> finite_m_;
};

/// Truncated agreement of a rational function with integer counts; returns the
/// first degree where they differ.
std::optional<int> first_difference(const RatFun& r, const std::vector<long long>& counts);

/// Compares every p_{Q,J,K}, ^J W~^K, normalizer and growth series against a
/// brute-force enumeration up to max_length.
Report verify_against_oracle(const AffineSeries& series, int max_length);

}  // namespace growth
