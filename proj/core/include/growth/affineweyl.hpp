#pragma once

// The affine Weyl group as pairs (w, v) with w finite and v in the coroot
// lattice. The pair acts on the coroot space by y -> w(y + v).
//
// An affine root (alpha, k) is the affine function y -> <alpha, y> + k and is
// positive when alpha > 0, k >= 0 or alpha < 0, k >= 1. The group acts on
// affine roots by composition with the inverse map, which gives
//   (w, v) . (alpha, k) = (w alpha, k - <alpha, v>).
//
// Generators are indexed 0..n-1 for the simple reflections of W and n for the
// reflection in (-highest root, 1).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "growth/finiteweyl.hpp"

namespace growth {

struct AffineRoot {
  IntVec root;  // simple-root coordinates
  int level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

class AffineElement {
 public:
  AffineElement() = default;
  AffineElement(WeylElement fin, IntVec trans, int length)
      : fin_(std::move(fin)), trans_(std::move(trans)), length_(length) {}

  const WeylElement& fin() const { return fin_; }
  /// Translation vector in simple-coroot coordinates.
  const IntVec& trans() const { return trans_; }
  int length() const { return length_; }

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.fin_ == b.fin_ && a.trans_ == b.trans_;
  }

 private:
  WeylElement fin_;
  IntVec trans_;
  int length_ = 0;
};

struct Classification {
  bool is_min_rep = false;
  /// {k in K : x alpha_k = alpha_j, j in J}; meaningful when is_min_rep.
  Subset q = 0;
};

class AffineWeyl {
 public:
  explicit AffineWeyl(std::shared_ptr<const FiniteWeyl> fw);

  const FiniteWeyl& finite() const { return *fw_; }
  std::shared_ptr<const FiniteWeyl> finite_ptr() const { return fw_; }
  const RootSystem& roots() const { return fw_->roots(); }
  int rank() const { return fw_->rank(); }
  /// Index of the affine generator.
  int affine_index() const { return rank(); }

  AffineElement identity() const;
  AffineElement translation(const IntVec& v) const;
  AffineElement from_finite(const WeylElement& w) const;
  AffineElement make(const WeylElement& w, const IntVec& v) const;
  /// Generator i in 0..n.
  const AffineElement& generator(int i) const { return gens_[std::size_t(i)]; }
  /// The reflection in the zero set of the affine root a.
  AffineElement reflection(const AffineRoot& a) const;

  AffineElement mul(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;

  /// sum over alpha > 0 of |<alpha, v> + chi(w alpha)|, chi the indicator of negative roots.
  int length_of(const WeylElement& w, const IntVec& v) const;

  AffineRoot act(const AffineElement& x, const AffineRoot& a) const;
  bool is_positive(const AffineRoot& a) const;
  /// (alpha_i, 0) for i < n, then (-highest root, 1).
  std::vector<AffineRoot> simple_affine_roots() const;
  const AffineRoot& simple_affine_root(int i) const { return simple_roots_[std::size_t(i)]; }

  /// Positive affine roots sent to negative ones.
  std::vector<AffineRoot> inversion_set(const AffineElement& x) const;

  /// Membership in the minimal (W_J, W_K) double coset representatives, with Q.
  Classification classify(const AffineElement& x, Subset j, Subset k) const;

  /// y -> w(y + v) evaluated on a coroot-coordinate point.
  IntVec apply(const AffineElement& x, const IntVec& y) const;

  /// Dedup key of (matrix, translation).
  static std::string key(const AffineElement& x);

 private:
  std::shared_ptr<const FiniteWeyl> fw_;
  std::vector<AffineElement> gens_;
  std::vector<AffineRoot> simple_roots_;
};

/// All elements of length <= max_length, in BFS order.
class AffineTable {
 public:
  static constexpr std::size_t kDefaultMaxElements = 10'000'000;

  AffineTable(const AffineWeyl& aw, int max_length, std::size_t max_elements = kDefaultMaxElements);

  int max_length() const { return max_length_; }
  const std::vector<AffineElement>& elements() const { return elements_; }
  std::optional<std::size_t> find(const AffineElement& x) const;
  /// Number of elements of each length 0..max_length.
  std::vector<long long> length_counts() const;

 private:
  int max_length_;
  std::vector<AffineElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Brute-force truncated series for one (J, K): bins by Q plus their total.
struct OracleSeries {
  Subset j = 0;
  Subset k = 0;
  int max_length = 0;
  std::map<Subset, std::vector<long long>> by_q;  // every Q in K present
  std::vector<long long> total;
};

OracleSeries oracle_series(const AffineWeyl& aw, const AffineTable& table, Subset j, Subset k);

/// Truncated h-series: x in ^J W with x alpha_k = alpha_r mapping K onto R exactly.
std::vector<long long> oracle_h_counts(const AffineWeyl& aw, const AffineTable& table, Subset r, Subset j, Subset k);

/// Truncated series of the normalizer of W_J.
std::vector<long long> oracle_normalizer_counts(const AffineWeyl& aw, const AffineTable& table, Subset j);

}  // namespace growth
