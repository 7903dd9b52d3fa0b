#pragma once

// Finite Weyl groups W_{S'} as integer matrices acting on the root lattice,
// with the exact series p^{S'}_{Q,J,K}(t) and h^{S'}_{R,J,K}(t).
//
// An element x is stored by two matrices: mat() acts on simple-root
// coordinates, comat() on simple-coroot coordinates. Lengths are inversion
// counts |{beta > 0 : x beta < 0}|.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "growth/exactalg.hpp"
#include "growth/intmat.hpp"
#include "growth/report.hpp"
#include "growth/rootdata.hpp"
#include "growth/subset.hpp"
#include "growth/subset_matrix.hpp"

namespace growth {

enum class Side { left, right };

class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(IntMatrix mat, IntMatrix comat, int length)
      : mat_(std::move(mat)), comat_(std::move(comat)), length_(length) {}

  const IntMatrix& mat() const { return mat_; }
  const IntMatrix& comat() const { return comat_; }
  int length() const { return length_; }

  IntVec act(const IntVec& root) const { return mat_.apply(root); }
  IntVec act_coroot(const IntVec& m) const { return comat_.apply(m); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.mat_ == b.mat_; }

 private:
  IntMatrix mat_;
  IntMatrix comat_;
  int length_ = 0;
};

/// Row-major byte encoding of a matrix, used as a dedup key.
std::string matrix_key(const IntMatrix& m);

/// Ascent data of one group element relative to the generators of its table.
struct ElementProfile {
  Subset left_ascents = 0;
  Subset right_ascents = 0;
  /// simple_image[k] = j when x alpha_k = alpha_j, -1 otherwise (k in the generators).
  std::array<std::int8_t, kMaxRank> simple_image{};
};

/// All elements of a parabolic subgroup W_{S'}, in BFS order from the identity.
class GroupTable {
 public:
  Subset generators() const { return gens_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  const ElementProfile& profile(std::size_t i) const { return profiles_[i]; }
  std::size_t inverse_of(std::size_t i) const { return inverse_[i]; }
  std::optional<std::size_t> find(const IntMatrix& mat) const;

  const IntPoly& poincare() const { return poincare_; }
  const WeylElement& longest() const { return elements_[longest_]; }

  /// p^{S'}_{Q,J,K}(t); all subsets must lie in generators().
  IntPoly p_poly(Subset q, Subset j, Subset k) const;
  /// h^{S'}_{R,J,K}(t); all subsets must lie in generators().
  IntPoly h_poly(Subset r, Subset j, Subset k) const;
  /// W^J(t): elements with J among their right ascents.
  IntPoly min_coset_poincare(Subset j) const;

 private:
  friend class FiniteWeyl;
  using Bins = std::unordered_map<std::uint64_t, std::vector<long long>>;

  void build_p_bins() const;
  void build_h_bins() const;
  void check_subsets(std::initializer_list<Subset> subsets) const;
  static IntPoly from_counts(const std::vector<long long>& counts);

  Subset gens_ = 0;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> inverse_;
  std::vector<ElementProfile> profiles_;
  IntPoly poincare_;
  std::size_t longest_ = 0;

  mutable std::once_flag p_once_;
  mutable std::once_flag h_once_;
  mutable Bins p_bins_;
  mutable Bins h_bins_;
};

class FiniteWeyl {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 1'000'000;

  explicit FiniteWeyl(RootSystem rs, std::size_t max_order = kDefaultMaxOrder);

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }
  Subset all() const { return full_subset(rank()); }

  WeylElement identity() const;
  WeylElement simple(int i) const { return simple_[std::size_t(i)]; }
  WeylElement reflection(const Root& beta) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& x) const;

  int length_of(const IntMatrix& mat) const;
  /// N(x) = {beta > 0 : x beta < 0}, in root coordinates.
  std::vector<IntVec> inversion_set(const WeylElement& x) const;

  /// Right descents {i in s : x alpha_i < 0}; left descents {i in s : x^-1 alpha_i < 0}.
  Subset descent_set(const WeylElement& x, Side side, Subset s) const;
  /// {j : x alpha_k = alpha_j, k in K} when every alpha_k lands on a simple root.
  std::optional<Subset> conj_subset(const WeylElement& x, Subset k) const;
  /// As conj_subset, but x alpha_k = -alpha_j is also accepted, so the result
  /// is the subset with x W_K x^-1 = W_result.
  std::optional<Subset> conjugate_parabolic(const WeylElement& x, Subset k) const;

  /// The longest element w_s of W_s.
  WeylElement longest(Subset s) const;
  /// The longest element w(H,J) of W_H^J, for J a subset of H.
  WeylElement longest_coset_rep(Subset h, Subset j) const;

  /// Cached enumeration of W_s; throws BoundExceeded past the order cap.
  std::shared_ptr<const GroupTable> table(Subset s) const;

  IntPoly poincare(Subset s) const { return table(s)->poincare(); }
  IntPoly p_poly(Subset s, Subset q, Subset j, Subset k) const { return table(s)->p_poly(q, j, k); }
  IntPoly h_poly(Subset s, Subset r, Subset j, Subset k) const { return table(s)->h_poly(r, j, k); }

  /// M_{K,S'}: rows Q in K, columns J in S', entries p^{S'}_{Q,J,K}.
  SubsetMatrix<IntPoly> matrix_M(Subset k, Subset s) const;
  /// N_{J,S'}: rows R in J, columns K in S', entries h^{S'}_{R,J,K}.
  SubsetMatrix<IntPoly> matrix_N(Subset j, Subset s) const;

  /// Exact checks of the parabolic identities inside W_s.
  Report identity_checks(Subset s) const;

  bool is_positive(const IntVec& root) const;

 private:
  std::shared_ptr<GroupTable> enumerate(Subset s) const;

  RootSystem rs_;
  std::size_t max_order_;
  std::vector<WeylElement> simple_;
  std::vector<IntVec> positive_coords_;
  mutable std::mutex cache_mutex_;
  mutable std::map<Subset, std::shared_ptr<const GroupTable>> cache_;
};

/// Poincare polynomial of the finite group generated by the given matrices,
/// with length measured in those generators (BFS depth).
IntPoly poincare_of_generated(const std::vector<IntMatrix>& gens, std::size_t max_order);

}  // namespace growth
