#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "growth/errors.hpp"
#include "growth/finiteweyl.hpp"
#include "oracles.hpp"

using namespace growth;

namespace {

FiniteWeyl group(const char* label) { return FiniteWeyl(RootSystem::from_label(label)); }

bool contains_root(const std::vector<IntVec>& set, const IntVec& r) {
  return std::find(set.begin(), set.end(), r) != set.end();
}

IntVec simple_root(int n, int i) {
  IntVec e(std::size_t(n), 0);
  e[std::size_t(i)] = 1;
  return e;
}

std::vector<long long> counts_of(const IntPoly& p) {
  std::vector<long long> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_si());
  return out;
}

std::vector<long long> trimmed(std::vector<long long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST(FiniteWeyl, OrdersAndPoincareMatchInvariantDegrees) {
  for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "F4", "G2", "E6"}) {
    SCOPED_TRACE(label);
    const auto fw = group(label);
    const auto rs = RootSystem::from_label(label);
    EXPECT_EQ(fw.poincare(fw.all()), oracle::poincare_from_degrees(oracle::invariant_degrees(rs.type(), rs.rank())));
    EXPECT_EQ(fw.longest(fw.all()).length(), int(rs.positive_roots().size()));
  }
  EXPECT_EQ(group("F4").table(0b1111)->size(), 1152u);
  EXPECT_EQ(group("A2").poincare(0b11), IntPoly({1, 2, 2, 1}));
  EXPECT_EQ(group("B3").table(0b011)->size(), 6u);
}

TEST(FiniteWeyl, OrderCapIsEnforced) {
  EXPECT_THROW(FiniteWeyl(RootSystem::from_label("E7")).table(full_subset(7)), BoundExceeded);
  EXPECT_THROW(FiniteWeyl(RootSystem::from_label("A3"), 10).table(0b111), BoundExceeded);
}

TEST(FiniteWeyl, DescentExamples) {
  const auto fw = group("A2");
  const auto e = fw.identity();
  EXPECT_EQ(fw.descent_set(e, Side::left, 0b11), 0u);
  EXPECT_EQ(fw.descent_set(e, Side::right, 0b11), 0u);
  const auto w0 = fw.longest(0b11);
  EXPECT_EQ(fw.descent_set(w0, Side::left, 0b11), 0b11u);
  EXPECT_EQ(fw.descent_set(w0, Side::right, 0b11), 0b11u);
  const auto s1s2 = fw.multiply(fw.simple(0), fw.simple(1));
  EXPECT_EQ(fw.descent_set(s1s2, Side::right, 0b11), 0b10u);
  EXPECT_EQ(fw.descent_set(s1s2, Side::left, 0b11), 0b01u);
}

TEST(FiniteWeyl, ConjSubsetExamples) {
  const auto fw = group("A2");
  EXPECT_EQ(fw.conj_subset(fw.identity(), 0b10), 0b10u);
  const auto s2s1 = fw.multiply(fw.simple(1), fw.simple(0));
  EXPECT_EQ(fw.conj_subset(s2s1, 0b10), 0b01u);
  EXPECT_FALSE(fw.conj_subset(fw.simple(0), 0b10));
}

TEST(FiniteWeyl, LongestCosetRepExamples) {
  const auto fw = group("A2");
  EXPECT_EQ(fw.longest_coset_rep(0b11, 0b11), fw.identity());
  EXPECT_EQ(fw.longest_coset_rep(0b11, 0), fw.longest(0b11));
  EXPECT_EQ(fw.longest_coset_rep(0b11, 0).length(), 3);
  const auto w = fw.longest_coset_rep(0b11, 0b01);
  EXPECT_EQ(w, fw.multiply(fw.longest(0b11), fw.simple(0)));
  EXPECT_EQ(w.length(), 2);
  EXPECT_EQ(fw.conj_subset(w, 0b01), 0b10u);
}

TEST(FiniteWeyl, PolyExamples) {
  const auto fw = group("A2");
  const Subset s = 0b11;
  EXPECT_EQ(fw.p_poly(s, 0, 0b01, 0b01), IntPoly({0, 1}));
  EXPECT_EQ(fw.p_poly(s, 0, 0b10, 0b01), IntPoly{1});
  for_each_subset(s, [&](Subset q) {
    for_each_subset(s, [&](Subset j) { EXPECT_EQ(fw.p_poly(s, q, j, s), q == j ? IntPoly{1} : IntPoly{}); });
  });
  EXPECT_EQ(fw.h_poly(s, 0, 0, 0), fw.poincare(s));
  EXPECT_EQ(fw.h_poly(s, 0b01, 0b01, 0b10), IntPoly({0, 0, 1}));
  EXPECT_TRUE(fw.h_poly(s, 0b01, 0b01, 0b11).is_zero());
}

TEST(FiniteWeyl, MatrixExamples) {
  const auto fw = group("A2");
  const auto m0 = fw.matrix_M(0, 0b11);
  EXPECT_EQ(m0.at(0, 0), IntPoly({1, 2, 2, 1}));
  EXPECT_EQ(m0.at(0, 0b01), IntPoly({1, 1, 1}));
  EXPECT_EQ(m0.at(0, 0b10), IntPoly({1, 1, 1}));
  EXPECT_EQ(m0.at(0, 0b11), IntPoly{1});
  const auto m1 = fw.matrix_M(0b01, 0b11);
  EXPECT_EQ(m1.at(0, 0), IntPoly({1, 1, 1}));
  EXPECT_EQ(m1.at(0, 0b01), IntPoly({0, 1}));
  EXPECT_EQ(m1.at(0, 0b10), IntPoly{1});
  EXPECT_TRUE(m1.at(0, 0b11).is_zero());
  EXPECT_TRUE(m1.at(0b01, 0).is_zero());
  EXPECT_EQ(m1.at(0b01, 0b01), IntPoly{1});
  EXPECT_EQ(m1.at(0b01, 0b10), IntPoly({0, 0, 1}));
  EXPECT_EQ(m1.at(0b01, 0b11), IntPoly{1});
  const auto mss = fw.matrix_M(0b11, 0b11);
  for (Subset q : mss.row_labels())
    for (Subset j : mss.col_labels()) EXPECT_EQ(mss.at(q, j), q == j ? IntPoly{1} : IntPoly{});
}

TEST(FiniteWeyl, PermutationOracleTypeA) {
  for (int n = 1; n <= 3; ++n) {
    const auto fw = FiniteWeyl(RootSystem::build('A', n));
    const Subset s = fw.all();
    for_each_subset(s, [&](Subset j) {
      for_each_subset(s, [&](Subset k) {
        for_each_subset(k, [&](Subset q) {
          EXPECT_EQ(trimmed(counts_of(fw.p_poly(s, q, j, k))), trimmed(oracle::permutation_p_counts(n, q, j, k)))
              << "A" << n << " Q=" << to_string(q) << " J=" << to_string(j) << " K=" << to_string(k);
        });
      });
    });
  }
}

TEST(FiniteWeyl, LengthCoherenceAndDescentDuality) {
  for (const char* label : {"A3", "B3", "C3", "G2", "D4"}) {
    SCOPED_TRACE(label);
    const auto fw = group(label);
    const int n = fw.rank();
    for (const auto& x : fw.table(fw.all())->elements()) {
      const auto inv = fw.inversion_set(x);
      ASSERT_EQ(int(inv.size()), x.length());
      ASSERT_EQ(fw.length_of(x.mat()), x.length());
      const auto xinv = fw.inverse(x);
      const auto inv_left = fw.inversion_set(xinv);
      for (int i = 0; i < n; ++i) {
        const IntVec a = simple_root(n, i);
        EXPECT_EQ(contains(fw.descent_set(x, Side::right, fw.all()), i), contains_root(inv, a));
        EXPECT_EQ(contains(fw.descent_set(x, Side::left, fw.all()), i), contains_root(inv_left, a));
        // a right descent shortens: l(x s_i) = l(x) - 1
        const int l = fw.multiply(x, fw.simple(i)).length();
        EXPECT_EQ(l, contains_root(inv, a) ? x.length() - 1 : x.length() + 1);
      }
    }
  }
}

TEST(FiniteWeyl, RightDivisorCriterion) {
  // l(wu) = l(w) - l(u) exactly when N(u^-1) is contained in N(w)
  for (const char* label : {"A3", "B3"}) {
    SCOPED_TRACE(label);
    const auto fw = group(label);
    const auto& els = fw.table(fw.all())->elements();
    for (const auto& w : els) {
      const auto nw = fw.inversion_set(w);
      for (const auto& u : els) {
        const auto nu = fw.inversion_set(fw.inverse(u));
        const bool subset = std::all_of(nu.begin(), nu.end(), [&](const IntVec& r) { return contains_root(nw, r); });
        EXPECT_EQ(fw.multiply(w, u).length() == w.length() - u.length(), subset);
      }
    }
  }
}

TEST(FiniteWeyl, UniqueParabolicFactorization) {
  for (const char* label : {"A3", "B3", "G2"}) {
    SCOPED_TRACE(label);
    const auto fw = group(label);
    const auto& els = fw.table(fw.all())->elements();
    for_each_subset(fw.all(), [&](Subset j) {
      const auto& sub = fw.table(j)->elements();
      std::map<std::string, int> hits;
      for (const auto& u : els) {
        if (fw.descent_set(u, Side::right, j) != 0) continue;
        for (const auto& v : sub) {
          const auto x = fw.multiply(u, v);
          EXPECT_EQ(x.length(), u.length() + v.length());
          ++hits[matrix_key(x.mat())];
        }
      }
      EXPECT_EQ(hits.size(), els.size());
      for (const auto& [key, count] : hits) EXPECT_EQ(count, 1);
    });
  }
}

TEST(FiniteWeyl, ConjugationRule) {
  // conj_subset(x, K) = R means x s_k x^-1 = s_{r(k)}
  const auto fw = group("B3");
  for (const auto& x : fw.table(fw.all())->elements())
    for_each_subset(fw.all(), [&](Subset k) {
      auto r = fw.conj_subset(x, k);
      if (!r) return;
      EXPECT_EQ(cardinality(*r), cardinality(k));
      for (int i : members(k)) {
        const auto conj = fw.multiply(fw.multiply(x, fw.simple(i)), fw.inverse(x));
        bool matched = false;
        for (int jj : members(*r)) matched = matched || conj == fw.simple(jj);
        EXPECT_TRUE(matched);
      }
    });
}

TEST(FiniteWeyl, HPolyCardinalityRule) {
  const auto fw = group("A3");
  const Subset s = fw.all();
  for_each_subset(s, [&](Subset r) {
    for_each_subset(s, [&](Subset j) {
      for_each_subset(s, [&](Subset k) {
        if (cardinality(r) != cardinality(k) || !is_subset(r, j)) EXPECT_TRUE(fw.h_poly(s, r, j, k).is_zero());
      });
    });
  });
}

TEST(FiniteWeyl, IdentitySuitePasses) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    const auto fw = group(label);
    const auto rep = fw.identity_checks(fw.all());
    EXPECT_TRUE(rep.all_passed()) << label << "\n" << rep.to_text();
    EXPECT_GT(rep.results().size(), 5u);
  }
  // on a proper subset too
  const auto b3 = group("B3");
  EXPECT_TRUE(b3.identity_checks(0b110).all_passed());
}
