#pragma once

// Irreducible reduced crystallographic root systems, in simple-root
// coordinates throughout.
//
// Conventions:
//   * cartan()(i, j) = <alpha_i, alpha_j^vee>.
//   * A root beta is stored by its coordinates in the simple roots and its
//     coroot beta^vee by coordinates in the simple coroots.
//   * An element v = sum m_j alpha_j^vee of the coroot lattice pairs with a
//     root beta as <beta, v> = beta^T C m.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "growth/intmat.hpp"
#include "growth/subset.hpp"

namespace growth {

struct Root {
  IntVec coords;  // in the simple roots
  IntVec coroot;  // in the simple coroots

  int height() const;
};

class RootSystem {
 public:
  /// Standard Lie labels: A_n (n>=1), B_n/C_n (n>=2), D_n (n>=4), E6-E8, F4, G2.
  static RootSystem build(char type, int rank);
  /// "A2", "b3", "G2", ...
  static RootSystem from_label(std::string_view label);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

  const IntMatrix& cartan() const { return cartan_; }
  std::int64_t det() const { return det_; }  // |det C|
  const IntMatrix& cartan_adjugate() const { return adjugate_; }

  /// Ordered by height, then lexicographically; the first rank() entries are the simple roots.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return positive_.back(); }
  /// Coordinates r of 2*rho = sum_i r_i alpha_i; satisfies r C = (2,...,2).
  const IntVec& two_rho() const { return two_rho_; }
  /// Primitive cone generators w_1..w_n (gcd-reduced columns of |det C| C^-1).
  const std::vector<IntVec>& cone_generators() const { return cone_gens_; }

  /// +(i+1) if coords is positive_roots()[i], -(i+1) if its negative, nullopt otherwise.
  std::optional<int> root_index(const IntVec& coords) const;
  bool is_root(const IntVec& coords) const { return root_index(coords).has_value(); }
  /// The root with this coordinate vector (either sign), including its coroot.
  Root root(const IntVec& coords) const;

  /// <beta, v> for beta in root coordinates and v in coroot coordinates.
  int pair(const IntVec& root_coords, const IntVec& coroot_coords) const;

  /// Matrix of s_beta acting on root coordinates / on coroot coordinates.
  IntMatrix reflection(const Root& beta) const;
  IntMatrix coreflection(const Root& beta) const;
  IntMatrix simple_reflection(int i) const { return reflection(positive_[std::size_t(i)]); }
  IntMatrix simple_coreflection(int i) const { return coreflection(positive_[std::size_t(i)]); }

  /// Connected components of the Dynkin diagram restricted to s.
  std::vector<Subset> components(Subset s) const;

 private:
  RootSystem(char type, int rank, IntMatrix cartan);
  void close_roots();

  char type_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  IntMatrix adjugate_;
  std::int64_t det_ = 0;
  std::vector<Root> positive_;
  std::map<IntVec, int> index_;
  IntVec two_rho_;
  std::vector<IntVec> cone_gens_;
};

/// Cartan matrix for a valid (type, rank); throws std::invalid_argument otherwise.
IntMatrix cartan_matrix(char type, int rank);

std::vector<IntVec> cone_generators(const RootSystem& rs);

/// <2 rho, v> for v = sum m_i alpha_i^vee, computed as r C m (equal to 2 * sum m_i).
long two_rho_weight(const RootSystem& rs, const IntVec& m);

/// Positive roots supported on J.
std::vector<Root> positive_roots_of(const RootSystem& rs, Subset j);

}  // namespace growth
