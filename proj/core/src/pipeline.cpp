#include "growth/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "growth/errors.hpp"
#include "growth/serialize.hpp"

namespace growth {

namespace {

int sign_of(int size_difference) { return size_difference % 2 == 0 ? 1 : -1; }

std::string triple(Subset q, Subset j, Subset k) {
  return "Q=" + to_string(q) + " J=" + to_string(j) + " K=" + to_string(k);
}

}  // namespace

AffineSeries::AffineSeries(RootSystem rs, PipelineOptions opts)
    : opts_(opts),
      fw_(std::make_shared<FiniteWeyl>(rs, opts.max_group_order)),
      cones_(rs),
      w0_(fw_->longest(fw_->all())) {
  const Subset s = generators();
  p_ss_.resize(std::size_t(1) << roots().rank());
  for_each_subset(s, [&](Subset q) {
    const int shift = int(positive_roots_of(roots(), q).size()) - w0_.length();
    RatFun r = monomial_shift(cones_.f_Q(q), shift);
    if (!r.is_power_series())
      throw InternalMismatch("p_{Q,S,S} is not a power series for Q=" + to_string(q) + ": " + to_text(r));
    p_ss_[q] = std::move(r);
  });
}

RatFun AffineSeries::p_SS(Subset q) const {
  if (!is_subset(q, generators())) throw std::invalid_argument("Q must consist of finite generators");
  return p_ss_[q];
}

Subset AffineSeries::conj(const WeylElement& g, Subset s) const {
  auto c = fw_->conjugate_parabolic(g, s);
  if (!c) throw InternalMismatch("conjugate of a parabolic subset is not parabolic");
  return *c;
}

SubsetMatrix<RatFun> AffineSeries::assemble_M_S() const {
  const Subset s = generators();
  auto table = fw_->table(s);
  SubsetMatrix<RatFun> m(s, s);
  for_each_subset(s, [&](Subset q) {
    for_each_subset(s, [&](Subset j) {
      RatFun acc;
      for_each_between(q, s, [&](Subset outer) {
        // w0 w_{Q'} Q w_{Q'} w0 inside w0 Q' w0
        const Subset inner = conj(fw_->multiply(w0_, fw_->longest(outer)), q);
        const Subset image = conj(w0_, outer);
        if (!is_subset(inner, image)) throw InternalMismatch("conjugated Q not inside conjugated Q'");
        const IntPoly p = table->p_poly(inner, j, image);
        if (!p.is_zero()) acc += RatFun(p) * p_ss_[outer];
      });
      m.at(q, j) = std::move(acc);
    });
  });
  return m;
}

namespace {
constexpr int kCacheFormat = 1;
}

std::optional<SubsetMatrix<RatFun>> AffineSeries::load_cached_M_S() const {
  const auto path = std::filesystem::path(opts_.cache_dir) / ("M_S-" + roots().label() + ".json");
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format").get<int>() != kCacheFormat || doc.at("type").get<std::string>() != roots().label())
      return std::nullopt;
    const Subset s = generators();
    SubsetMatrix<RatFun> m(s, s);
    const auto& rows = doc.at("entries");
    const auto labels = m.row_labels();
    if (rows.size() != labels.size()) return std::nullopt;
    for (std::size_t r = 0; r < labels.size(); ++r) {
      if (rows[r].size() != labels.size()) return std::nullopt;
      for (std::size_t c = 0; c < labels.size(); ++c) m.at(labels[r], labels[c]) = ratfun_from_json(rows[r][c]);
    }
    return m;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void AffineSeries::store_cached_M_S(const SubsetMatrix<RatFun>& m) const {
  std::error_code ec;
  std::filesystem::create_directories(opts_.cache_dir, ec);
  const auto path = std::filesystem::path(opts_.cache_dir) / ("M_S-" + roots().label() + ".json");
  nlohmann::json rows = nlohmann::json::array();
  for (Subset r : m.row_labels()) {
    nlohmann::json row = nlohmann::json::array();
    for (Subset c : m.col_labels()) row.push_back(to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  std::ofstream out(path);
  if (out) out << nlohmann::json{{"format", kCacheFormat}, {"type", roots().label()}, {"entries", rows}}.dump() << "\n";
}

const SubsetMatrix<RatFun>& AffineSeries::matrix_M_affine() const {
  std::call_once(ms_once_, [this] {
    if (opts_.cache_dir.empty()) {
      ms_ = assemble_M_S();
      return;
    }
    if (auto cached = load_cached_M_S()) {
      if (opts_.cross_check && !(*cached == assemble_M_S()))
        throw InternalMismatch("cached M_S for " + roots().label() + " differs from a fresh computation");
      ms_ = std::move(*cached);
      return;
    }
    ms_ = assemble_M_S();
    store_cached_M_S(ms_);
  });
  return ms_;
}

const SubsetMatrix<IntPoly>& AffineSeries::finite_M(Subset k) const {
  {
    std::lock_guard lock(mutex_);
    auto it = finite_m_.find(k);
    if (it != finite_m_.end()) return it->second;
  }
  auto m = fw_->matrix_M(k, generators());
  std::lock_guard lock(mutex_);
  return finite_m_.emplace(k, std::move(m)).first->second;
}

SubsetMatrix<RatFun> AffineSeries::matrix_M_affine(Subset k) const {
  if (!is_subset(k, generators())) throw std::invalid_argument("K must consist of finite generators");
  return multiply(finite_M(k), matrix_M_affine());
}

RatFun AffineSeries::p_matrix_path(Subset q, Subset j, Subset k) const {
  const auto& mk = finite_M(k);
  const auto& ms = matrix_M_affine();
  RatFun acc;
  for_each_subset(generators(), [&](Subset mid) {
    const IntPoly& a = mk.at(q, mid);
    if (!a.is_zero()) acc += RatFun(a) * ms.at(mid, j);
  });
  return acc;
}

RatFun AffineSeries::p_double_sum(Subset q, Subset j, Subset k) const {
  const Subset s = generators();
  auto table = fw_->table(s);
  RatFun acc;
  for_each_subset(s, [&](Subset outer) {
    const WeylElement g = fw_->multiply(w0_, fw_->longest(outer));
    const Subset image = conj(w0_, outer);
    IntPoly coeff;
    for_each_subset(outer, [&](Subset mid) {
      const IntPoly first = table->p_poly(q, mid, k);
      if (first.is_zero()) return;
      coeff += first * table->p_poly(conj(g, mid), j, image);
    });
    if (!coeff.is_zero()) acc += RatFun(coeff) * p_ss_[outer];
  });
  return acc;
}

RatFun AffineSeries::p_full(Subset q, Subset j, Subset k) const {
  const Subset s = generators();
  if (!is_subset(q, s) || !is_subset(j, s) || !is_subset(k, s))
    throw std::invalid_argument("Q, J, K must consist of finite generators");
  if (!is_subset(q, k)) return {};
  RatFun r = p_matrix_path(q, j, k);
  if (opts_.cross_check) {
    const RatFun other = p_double_sum(q, j, k);
    if (!(other == r))
      throw InternalMismatch("p-series paths disagree at " + triple(q, j, k) + ": matrix " + to_text(r) +
                             ", double sum " + to_text(other));
  }
  return r;
}

RatFun AffineSeries::double_coset_series(Subset j, Subset k) const {
  RatFun acc;
  for_each_subset(k, [&](Subset q) { acc += p_full(q, j, k); });
  return acc;
}

RatFun AffineSeries::normalizer_series(Subset j) const {
  return RatFun(fw_->poincare(j)) * p_full(j, j, j);
}

IntPoly AffineSeries::affine_parabolic_poincare(Subset j) const {
  const int n = roots().rank();
  if (!is_subset(j, full_subset(n + 1)) || j == full_subset(n + 1))
    throw std::invalid_argument("affine parabolic subset must be proper");
  if (!contains(j, n)) return fw_->poincare(j);
  // a proper parabolic subgroup maps isomorphically onto its linear part
  std::vector<IntMatrix> gens;
  for (int i : members(j))
    gens.push_back(i < n ? roots().simple_reflection(i) : roots().reflection(roots().highest_root()));
  return poincare_of_generated(gens, opts_.max_group_order);
}

Report AffineSeries::affine_identity_checks(unsigned degree, bool with_enumeration) const {
  Report report;
  const int n = roots().rank();
  const Subset s = generators();
  const RatFun growth = growth_series();

  {
    RatFun alt = RatFun::constant(sign_of(n + 1));
    for_each_subset(full_subset(n + 1), [&](Subset j) {
      if (j == full_subset(n + 1)) return;
      const RatFun term = growth / RatFun(affine_parabolic_poincare(j));
      alt += cardinality(j) % 2 == 0 ? term : -term;
    });
    const auto coeffs = expand(alt, degree);
    int bad = -1;
    for (std::size_t d = 0; d < coeffs.size() && bad < 0; ++d)
      if (coeffs[d] != 0) bad = int(d);
    report.add("alternating sum of W~/W~_J vanishes through degree " + std::to_string(degree), bad < 0,
               bad < 0 ? "" : "first nonzero coefficient at degree " + std::to_string(bad));
  }
  if (!with_enumeration) return report;

  const AffineWeyl aw(fw_);
  const AffineTable table(aw, int(degree));
  const auto counts = table.length_counts();
  auto growth_diff = first_difference(growth, counts);
  report.add("growth series matches enumeration through degree " + std::to_string(degree), !growth_diff,
             growth_diff ? "degree " + std::to_string(*growth_diff) : "");

  std::map<std::pair<Subset, Subset>, OracleSeries> oracle;
  auto bins = [&](Subset j, Subset k) -> const OracleSeries& {
    auto key = std::make_pair(j, k);
    auto it = oracle.find(key);
    if (it == oracle.end()) it = oracle.emplace(key, oracle_series(aw, table, j, k)).first;
    return it->second;
  };

  CheckTally decomposition("W~(t) = sum over Q of W_J W_K / W_Q p_{Q,J,K} through degree " +
                           std::to_string(degree));
  CheckTally cor_p("alternating sum of enumerated p_{R,J,H} equals t^l(w(K,Q)) p_{Q',J,K}");
  CheckTally cor_h("alternating sum of enumerated h_{R,H,K} equals t^l(w(J,R)) h_{R',J,K}");

  for_each_subset(s, [&](Subset j) {
    for_each_subset(s, [&](Subset k) {
      RatFun rhs;
      const IntPoly wjk = fw_->poincare(j) * fw_->poincare(k);
      for_each_subset(k, [&](Subset q) { rhs += RatFun(wjk, fw_->poincare(q)) * p_full(q, j, k); });
      auto diff = first_difference(rhs, counts);
      decomposition.record(!diff, "J=" + to_string(j) + " K=" + to_string(k) +
                                      (diff ? " degree " + std::to_string(*diff) : ""));

      for_each_subset(k, [&](Subset q) {
        std::vector<long long> lhs(degree + 1, 0);
        for_each_between(q, k, [&](Subset h) {
          const int sg = sign_of(cardinality(h) - cardinality(q));
          const auto& o = bins(j, h);
          for_each_between(q, h, [&](Subset r) {
            const auto& c = o.by_q.at(r);
            for (std::size_t d = 0; d < lhs.size(); ++d) lhs[d] += sg * c[d];
          });
        });
        const WeylElement v = fw_->longest_coset_rep(k, q);
        auto qp = fw_->conj_subset(v, q);
        bool ok = qp.has_value();
        if (ok) ok = !first_difference(monomial_shift(p_full(*qp, j, k), v.length()), lhs);
        cor_p.record(ok, triple(q, j, k));
      });

      for_each_subset(j, [&](Subset r) {
        std::vector<long long> lhs(degree + 1, 0);
        for_each_between(r, j, [&](Subset h) {
          const int sg = sign_of(cardinality(h) - cardinality(r));
          const auto c = oracle_h_counts(aw, table, r, h, k);
          for (std::size_t d = 0; d < lhs.size(); ++d) lhs[d] += sg * c[d];
        });
        const WeylElement v = fw_->longest_coset_rep(j, r);
        auto rp = fw_->conj_subset(v, r);
        bool ok = rp.has_value();
        if (ok) {
          const auto c = oracle_h_counts(aw, table, *rp, j, k);
          std::vector<long long> rhs(degree + 1, 0);
          for (std::size_t d = std::size_t(v.length()); d < rhs.size(); ++d) rhs[d] = c[d - std::size_t(v.length())];
          ok = rhs == lhs;
        }
        cor_h.record(ok, "R=" + to_string(r) + " J=" + to_string(j) + " K=" + to_string(k));
      });
    });
  });
  decomposition.flush_into(report);
  cor_p.flush_into(report);
  cor_h.flush_into(report);
  return report;
}

Report AffineSeries::dual_path_checks() const {
  Report report;
  CheckTally tally("double sum equals M_{K,S} M_S product for every (Q,J,K)");
  const Subset s = generators();
  for_each_subset(s, [&](Subset k) {
    for_each_subset(k, [&](Subset q) {
      for_each_subset(s, [&](Subset j) { tally.record(p_double_sum(q, j, k) == p_matrix_path(q, j, k), triple(q, j, k)); });
    });
  });
  tally.flush_into(report);
  return report;
}

std::optional<int> first_difference(const RatFun& r, const std::vector<long long>& counts) {
  if (counts.empty()) return std::nullopt;
  const auto coeffs = expand(r, unsigned(counts.size() - 1));
  for (std::size_t d = 0; d < counts.size(); ++d)
    if (coeffs[d] != BigInt(static_cast<long>(counts[d]))) return int(d);
  return std::nullopt;
}

Report verify_against_oracle(const AffineSeries& series, int max_length) {
  Report report;
  const AffineWeyl aw(series.finite_ptr());
  const AffineTable table(aw, max_length);
  const Subset s = series.generators();
  const std::string upto = " through length " + std::to_string(max_length);

  auto diff_text = [](std::optional<int> d) { return d ? " (degree " + std::to_string(*d) + ")" : std::string(); };
  auto nonnegative = [&](const RatFun& r) {
    for (const auto& c : expand(r, unsigned(max_length)))
      if (c < 0) return false;
    return true;
  };

  const RatFun growth = series.growth_series();
  auto gd = first_difference(growth, table.length_counts());
  report.add("growth series matches enumeration" + upto, !gd, diff_text(gd));

  CheckTally p_tally("p_{Q,J,K} matches enumeration" + upto);
  CheckTally coset_tally("^J W~^K matches enumeration" + upto);
  CheckTally norm_tally("normalizer series matches enumeration" + upto);
  CheckTally sym_tally("^J W~^K = ^K W~^J");
  CheckTally pos_tally("series expand with nonnegative coefficients");

  for_each_subset(s, [&](Subset j) {
    for_each_subset(s, [&](Subset k) {
      const OracleSeries o = oracle_series(aw, table, j, k);
      for (const auto& [q, counts] : o.by_q) {
        const RatFun p = series.p_full(q, j, k);
        auto d = first_difference(p, counts);
        p_tally.record(!d, triple(q, j, k) + diff_text(d));
        pos_tally.record(nonnegative(p), triple(q, j, k));
      }
      const RatFun dc = series.double_coset_series(j, k);
      auto d = first_difference(dc, o.total);
      coset_tally.record(!d, "J=" + to_string(j) + " K=" + to_string(k) + diff_text(d));
      sym_tally.record(dc == series.double_coset_series(k, j), "J=" + to_string(j) + " K=" + to_string(k));
    });
    const RatFun ns = series.normalizer_series(j);
    auto d = first_difference(ns, oracle_normalizer_counts(aw, table, j));
    norm_tally.record(!d, "J=" + to_string(j) + diff_text(d));
    pos_tally.record(nonnegative(ns), "normalizer J=" + to_string(j));
  });
  p_tally.flush_into(report);
  coset_tally.flush_into(report);
  norm_tally.flush_into(report);
  sym_tally.flush_into(report);
  pos_tally.flush_into(report);
  return report;
}

}  // namespace growth
