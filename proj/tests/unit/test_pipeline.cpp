#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "growth/errors.hpp"
#include "growth/pipeline.hpp"
#include "growth/serialize.hpp"
#include "oracles.hpp"

using namespace growth;

namespace {

IntPoly om(unsigned k) { return IntPoly::one_minus_t_power(k); }
IntPoly tp(unsigned k) { return IntPoly::t_power(k); }

AffineSeries make(const char* label, bool cross_check = true) {
  PipelineOptions opts;
  opts.cross_check = cross_check;
  return AffineSeries(RootSystem::from_label(label), opts);
}

std::vector<long long> counts_of(const RatFun& r, int degree) {
  std::vector<long long> out;
  for (const auto& c : expand(r, unsigned(degree))) out.push_back(c.get_si());
  return out;
}

RatFun bott(const char* label) {
  const auto rs = RootSystem::from_label(label);
  return oracle::affine_growth_from_degrees(oracle::invariant_degrees(rs.type(), rs.rank()));
}

const RatFun kA2Den = RatFun(IntPoly{1}, om(2) * om(6));

}  // namespace

TEST(Pipeline, PSSExamples) {
  const auto a2 = make("A2");
  EXPECT_EQ(a2.p_SS(0b11), RatFun::constant(1));
  EXPECT_EQ(a2.p_SS(0b01), RatFun(tp(4), om(6)));
  EXPECT_EQ(a2.p_SS(0), RatFun(IntPoly({0, 1, 0, -1, 0, 1}), om(2) * om(6)));
}

TEST(Pipeline, A2MatrixMS) {
  const auto a2 = make("A2");
  const auto& ms = a2.matrix_M_affine();
  auto entry = [](IntPoly p) { return RatFun(std::move(p)) * kA2Den; };
  const IntPoly e{1};
  const IntPoly one_m_t2 = om(2);
  const IntPoly row0_1 = IntPoly({0, 1, 1, 0, 0, 1});  // t(1 + t + t^4)
  EXPECT_EQ(ms.at(0, 0), entry(IntPoly({1, 1, 1}) * IntPoly({1, 0, 0, 1})));
  EXPECT_EQ(ms.at(0, 0b01), entry(row0_1));
  EXPECT_EQ(ms.at(0, 0b10), entry(row0_1));
  EXPECT_EQ(ms.at(0, 0b11), entry(IntPoly({0, 1, 0, -1, 0, 1})));
  EXPECT_TRUE(ms.at(0b01, 0).is_zero());
  EXPECT_EQ(ms.at(0b01, 0b01), entry(one_m_t2));
  EXPECT_EQ(ms.at(0b01, 0b10), entry(tp(4) * one_m_t2));
  EXPECT_EQ(ms.at(0b01, 0b11), entry(tp(4) * one_m_t2));
  EXPECT_TRUE(ms.at(0b10, 0).is_zero());
  EXPECT_EQ(ms.at(0b10, 0b01), entry(tp(4) * one_m_t2));
  EXPECT_EQ(ms.at(0b10, 0b10), entry(one_m_t2));
  EXPECT_EQ(ms.at(0b10, 0b11), entry(tp(4) * one_m_t2));
  for (Subset j : {0u, 1u, 2u}) EXPECT_TRUE(ms.at(0b11, j).is_zero());
  EXPECT_EQ(ms.at(0b11, 0b11), RatFun(e));
}

TEST(Pipeline, FullRowIsUnitVector) {
  for (const char* label : {"A3", "B3", "G2"}) {
    const auto s = make(label);
    const auto& ms = s.matrix_M_affine();
    for (Subset j : ms.col_labels())
      EXPECT_EQ(ms.at(s.generators(), j), j == s.generators() ? RatFun::constant(1) : RatFun()) << label;
  }
}

TEST(Pipeline, PFullWithKEqualSIsMSEntry) {
  const auto b2 = make("B2");
  const auto& ms = b2.matrix_M_affine();
  for (Subset q : ms.row_labels())
    for (Subset j : ms.col_labels()) EXPECT_EQ(b2.p_full(q, j, 0b11), ms.at(q, j));
}

TEST(Pipeline, GrowthSeriesMatchesBottFormula) {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A4"}) {
    EXPECT_EQ(make(label, false).growth_series(), bott(label)) << label;
  }
}

TEST(Pipeline, LeftQuotientTimesParabolicIsWhole) {
  for (const char* label : {"A2", "B3", "G2"}) {
    const auto s = make(label, false);
    const RatFun whole = s.growth_series();
    for_each_subset(s.generators(), [&](Subset j) {
      EXPECT_EQ(s.double_coset_series(j, 0) * RatFun(s.finite().poincare(j)), whole) << label << " J=" << to_string(j);
    });
  }
}

TEST(Pipeline, SeriesExamples) {
  const auto a2 = make("A2");
  const RatFun sum = RatFun::constant(1) + RatFun(tp(4).scaled(2), om(6)) +
                     RatFun(IntPoly({0, 1, 0, -1, 0, 1}), om(2) * om(6));
  EXPECT_EQ(a2.double_coset_series(0b11, 0b11), sum);
  EXPECT_EQ(a2.double_coset_series(0, 0), a2.growth_series());
  EXPECT_EQ(a2.normalizer_series(0), a2.growth_series());
  // W_J = {1, s_1}; its normalizer is W_J times translations t(a v), <alpha_1, v> = 0, of length 6|a|
  EXPECT_EQ(a2.normalizer_series(0b01), RatFun(IntPoly{1, 1} * (IntPoly{1} + tp(6)), om(6)));
  EXPECT_EQ(a2.normalizer_series(0b11), RatFun(a2.finite().poincare(0b11)));
  EXPECT_EQ(counts_of(a2.growth_series(), 0), std::vector<long long>{1});
}

TEST(Pipeline, AffinePermutationOracle) {
  for (int n = 1; n <= 3; ++n) {
    PipelineOptions opts;
    opts.cross_check = true;
    const AffineSeries s(RootSystem::build('A', n), opts);
    const int L = n == 3 ? 7 : 11;
    for_each_subset(s.generators(), [&](Subset j) {
      for_each_subset(s.generators(), [&](Subset k) {
        for (const auto& [q, counts] : oracle::affine_permutation_p_counts(n, j, k, L))
          EXPECT_EQ(counts_of(s.p_full(q, j, k), L), counts)
              << "A" << n << " Q=" << to_string(q) << " J=" << to_string(j) << " K=" << to_string(k);
      });
    });
  }
}

TEST(Pipeline, ExpansionsAreNonnegative) {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto s = make(label, false);
    for_each_subset(s.generators(), [&](Subset j) {
      for_each_subset(s.generators(), [&](Subset k) {
        for_each_subset(k, [&](Subset q) {
          const RatFun r = s.p_full(q, j, k);
          ASSERT_TRUE(r.is_power_series());
          for (const auto& c : expand(r, 20)) EXPECT_GE(c, 0) << label;
        });
      });
    });
  }
}

TEST(Pipeline, DualPathsAgree) {
  for (const char* label : {"A2", "B2", "G2", "A3"}) {
    const auto rep = make(label, false).dual_path_checks();
    EXPECT_TRUE(rep.all_passed()) << rep.to_text();
  }
}

TEST(Pipeline, AffineIdentitiesHold) {
  const auto rep = make("A2").affine_identity_checks(12);
  EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}

TEST(Pipeline, VerifyAgainstOracle) {
  const auto rep = verify_against_oracle(make("B2"), 10);
  EXPECT_TRUE(rep.all_passed()) << rep.to_text();
}

TEST(Pipeline, FirstDifference) {
  const RatFun r(IntPoly{1}, om(1));
  EXPECT_FALSE(first_difference(r, {1, 1, 1, 1}));
  EXPECT_EQ(first_difference(r, {1, 1, 2, 1}), 2);
}

TEST(Pipeline, SubsetArguments) {
  const auto a2 = make("A2");
  EXPECT_THROW(a2.p_full(0, 0, 0b100), std::invalid_argument);
  EXPECT_THROW(a2.matrix_M_affine(0b100), std::invalid_argument);
  EXPECT_TRUE(a2.p_full(0b10, 0, 0b01).is_zero());  // Q outside K: empty set
}

TEST(Pipeline, DiskCacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "growth_cache_test";
  std::filesystem::remove_all(dir);
  PipelineOptions opts;
  opts.cache_dir = dir.string();
  const auto fresh = AffineSeries(RootSystem::from_label("B2"), opts).matrix_M_affine();
  ASSERT_TRUE(std::filesystem::exists(dir / "M_S-B2.json"));
  opts.cross_check = true;
  EXPECT_EQ(AffineSeries(RootSystem::from_label("B2"), opts).matrix_M_affine(), fresh);

  // a tampered cache is caught when cross-checking
  auto doc = nlohmann::json::parse(std::ifstream(dir / "M_S-B2.json"));
  doc["entries"][0][0] = to_json(RatFun::constant(7));
  std::ofstream(dir / "M_S-B2.json") << doc.dump();
  EXPECT_THROW(AffineSeries(RootSystem::from_label("B2"), opts).matrix_M_affine(), InternalMismatch);
  std::filesystem::remove_all(dir);
}

TEST(Pipeline, DeterministicOutput) {
  auto dump = [] {
    const auto s = make("G2", false);
    nlohmann::json all = nlohmann::json::array();
    for (Subset r : s.matrix_M_affine().row_labels())
      for (Subset c : s.matrix_M_affine().col_labels()) all.push_back(to_json(s.matrix_M_affine().at(r, c)));
    return all.dump();
  };
  EXPECT_EQ(dump(), dump());
}
