#include "growth/finiteweyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "growth/errors.hpp"
#include "growth/serialize.hpp"

namespace growth {

namespace {

std::uint64_t bin_key(Subset a, Subset b, Subset c) {
  return std::uint64_t(a) | (std::uint64_t(b) << 16) | (std::uint64_t(c) << 32);
}

void bump(std::vector<long long>& counts, int degree) {
  if (counts.size() <= std::size_t(degree)) counts.resize(std::size_t(degree) + 1, 0);
  ++counts[std::size_t(degree)];
}

bool column_positive(const IntMatrix& m, int c) {
  for (int r = 0; r < m.rows(); ++r) {
    if (m(r, c) > 0) return true;
    if (m(r, c) < 0) return false;
  }
  return false;
}

// j >= 0 when column c is +e_j; -(j+1) when it is -e_j; kNotSimple otherwise
constexpr int kNotSimple = -1000;
int column_simple(const IntMatrix& m, int c) {
  int found = kNotSimple;
  for (int r = 0; r < m.rows(); ++r) {
    const int v = m(r, c);
    if (v == 0) continue;
    if (found != kNotSimple || (v != 1 && v != -1)) return kNotSimple;
    found = v == 1 ? r : -(r + 1);
  }
  return found;
}

int sign_of_size(Subset a, Subset b) { return (cardinality(a) - cardinality(b)) % 2 == 0 ? 1 : -1; }

}  // namespace

std::string matrix_key(const IntMatrix& m) {
  std::string key;
  key.reserve(m.data().size() * 2);
  for (int v : m.data()) {
    if (v < -32768 || v > 32767) throw std::overflow_error("matrix_key: entry out of range");
    const auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(v));
    key.push_back(char(u & 0xff));
    key.push_back(char(u >> 8));
  }
  return key;
}

// ---------------------------------------------------------------------------
// GroupTable

std::optional<std::size_t> GroupTable::find(const IntMatrix& mat) const {
  auto it = index_.find(matrix_key(mat));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void GroupTable::check_subsets(std::initializer_list<Subset> subsets) const {
  for (Subset s : subsets)
    if (!is_subset(s, gens_))
      throw std::invalid_argument("subset " + to_string(s) + " not contained in generators " + to_string(gens_));
}

IntPoly GroupTable::from_counts(const std::vector<long long>& counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (long long v : counts) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

void GroupTable::build_p_bins() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& prof = profiles_[i];
    const int len = elements_[i].length();
    for_each_subset(prof.left_ascents, [&](Subset j) {
      for_each_subset(prof.right_ascents, [&](Subset k) {
        Subset q = 0;
        for (int kk : members(k)) {
          const int img = prof.simple_image[std::size_t(kk)];
          if (img >= 0 && contains(j, img)) q |= singleton(kk);
        }
        bump(p_bins_[bin_key(q, j, k)], len);
      });
    });
  }
}

void GroupTable::build_h_bins() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& prof = profiles_[i];
    const int len = elements_[i].length();
    Subset mapped = 0;
    for (int k : members(gens_))
      if (prof.simple_image[std::size_t(k)] >= 0) mapped |= singleton(k);
    for_each_subset(mapped, [&](Subset k) {
      Subset r = 0;
      for (int kk : members(k)) r |= singleton(prof.simple_image[std::size_t(kk)]);
      // x alpha_k = alpha_r forces r to be a left ascent
      for_each_between(r, prof.left_ascents, [&](Subset j) { bump(h_bins_[bin_key(r, j, k)], len); });
    });
  }
}

IntPoly GroupTable::p_poly(Subset q, Subset j, Subset k) const {
  check_subsets({q, j, k});
  if (!is_subset(q, k)) return {};
  std::call_once(p_once_, [this] { build_p_bins(); });
  auto it = p_bins_.find(bin_key(q, j, k));
  return it == p_bins_.end() ? IntPoly{} : from_counts(it->second);
}

IntPoly GroupTable::h_poly(Subset r, Subset j, Subset k) const {
  check_subsets({r, j, k});
  if (!is_subset(r, j)) return {};
  std::call_once(h_once_, [this] { build_h_bins(); });
  auto it = h_bins_.find(bin_key(r, j, k));
  return it == h_bins_.end() ? IntPoly{} : from_counts(it->second);
}

IntPoly GroupTable::min_coset_poincare(Subset j) const {
  check_subsets({j});
  std::vector<long long> counts;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (is_subset(j, profiles_[i].right_ascents)) bump(counts, elements_[i].length());
  return from_counts(counts);
}

// ---------------------------------------------------------------------------
// FiniteWeyl

FiniteWeyl::FiniteWeyl(RootSystem rs, std::size_t max_order) : rs_(std::move(rs)), max_order_(max_order) {
  if (rs_.rank() > kMaxRank) throw std::invalid_argument("rank too large");
  for (int i = 0; i < rs_.rank(); ++i)
    simple_.emplace_back(rs_.simple_reflection(i), rs_.simple_coreflection(i), 1);
  for (const auto& r : rs_.positive_roots()) positive_coords_.push_back(r.coords);
}

bool FiniteWeyl::is_positive(const IntVec& root) const {
  for (int v : root) {
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return false;
}

WeylElement FiniteWeyl::identity() const {
  return {IntMatrix::identity(rank()), IntMatrix::identity(rank()), 0};
}

WeylElement FiniteWeyl::reflection(const Root& beta) const {
  IntMatrix m = rs_.reflection(beta);
  const int len = length_of(m);
  return {std::move(m), rs_.coreflection(beta), len};
}

int FiniteWeyl::length_of(const IntMatrix& mat) const {
  int n = 0;
  for (const auto& beta : positive_coords_)
    if (!is_positive(mat.apply(beta))) ++n;
  return n;
}

WeylElement FiniteWeyl::multiply(const WeylElement& a, const WeylElement& b) const {
  IntMatrix m = a.mat() * b.mat();
  const int len = length_of(m);
  return {std::move(m), a.comat() * b.comat(), len};
}

WeylElement FiniteWeyl::inverse(const WeylElement& x) const {
  // With A = mat, B = comat the pairing is preserved: A^T C B = C, so
  // A^-1 = C^-T B^T C^T and B^-1 = C^-1 A^T C, with C^-1 = adj(C) / det(C).
  const IntMatrix& c = rs_.cartan();
  const IntMatrix& adj = rs_.cartan_adjugate();
  const auto det = int(rs_.det());
  auto divide = [&](IntMatrix m) {
    for (int r = 0; r < m.rows(); ++r)
      for (int col = 0; col < m.cols(); ++col) {
        if (m(r, col) % det != 0) throw InternalMismatch("inverse: non-integral entry");
        m(r, col) /= det;
      }
    return m;
  };
  IntMatrix inv = divide(adj.transpose() * x.comat().transpose() * c.transpose());
  IntMatrix coinv = divide(adj * x.mat().transpose() * c);
  return {std::move(inv), std::move(coinv), x.length()};
}

std::vector<IntVec> FiniteWeyl::inversion_set(const WeylElement& x) const {
  std::vector<IntVec> out;
  for (const auto& beta : positive_coords_)
    if (!is_positive(x.act(beta))) out.push_back(beta);
  return out;
}

Subset FiniteWeyl::descent_set(const WeylElement& x, Side side, Subset s) const {
  const IntMatrix m = side == Side::right ? x.mat() : inverse(x).mat();
  Subset out = 0;
  for (int i : members(s))
    if (!column_positive(m, i)) out |= singleton(i);
  return out;
}

std::optional<Subset> FiniteWeyl::conj_subset(const WeylElement& x, Subset k) const {
  Subset out = 0;
  for (int kk : members(k)) {
    const int j = column_simple(x.mat(), kk);
    if (j < 0) return std::nullopt;
    out |= singleton(j);
  }
  return out;
}

std::optional<Subset> FiniteWeyl::conjugate_parabolic(const WeylElement& x, Subset k) const {
  Subset out = 0;
  for (int kk : members(k)) {
    const int j = column_simple(x.mat(), kk);
    if (j == kNotSimple) return std::nullopt;
    out |= singleton(j >= 0 ? j : -j - 1);
  }
  return out;
}

WeylElement FiniteWeyl::longest(Subset s) const {
  if (!is_subset(s, all())) throw std::invalid_argument("longest: subset out of range");
  WeylElement x = identity();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i : members(s))
      if (column_positive(x.mat(), i)) {
        x = multiply(x, simple_[std::size_t(i)]);
        moved = true;
        break;
      }
  }
  return x;
}

WeylElement FiniteWeyl::longest_coset_rep(Subset h, Subset j) const {
  if (!is_subset(j, h)) throw std::invalid_argument("longest_coset_rep: J must be contained in H");
  Subset h1 = 0;
  for (Subset comp : rs_.components(h))
    if (comp & (h & ~j)) h1 |= comp;
  return multiply(longest(h1), longest(j & h1));
}

namespace {

// |W| = n! * prod(highest root coefficients) * det C for each irreducible component
std::uint64_t predicted_order(const RootSystem& rs, Subset s) {
  std::uint64_t order = 1;
  for (Subset comp : rs.components(s)) {
    const auto idx = members(comp);
    const int n = int(idx.size());
    IntMatrix sub(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) sub(a, b) = rs.cartan()(idx[std::size_t(a)], idx[std::size_t(b)]);
    std::uint64_t f = std::uint64_t(determinant(sub));
    for (int a = 2; a <= n; ++a) f *= std::uint64_t(a);
    const Root top = positive_roots_of(rs, comp).back();
    for (int i : idx) f *= std::uint64_t(top.coords[std::size_t(i)]);
    order *= f;
  }
  return order;
}

}  // namespace

std::shared_ptr<GroupTable> FiniteWeyl::enumerate(Subset s) const {
  if (!is_subset(s, all())) throw std::invalid_argument("enumerate: subset out of range");
  if (const auto order = predicted_order(rs_, s); order > max_order_)
    throw BoundExceeded("W_" + to_string(s) + " of " + rs_.label() + " has order " + std::to_string(order) +
                        ", above the order cap " + std::to_string(max_order_));
  auto t = std::make_shared<GroupTable>();
  t->gens_ = s;
  auto& elems = t->elements_;
  elems.push_back(identity());
  t->index_.emplace(matrix_key(elems[0].mat()), 0);
  const auto gens = members(s);

  for (std::size_t pos = 0; pos < elems.size(); ++pos) {
    const IntMatrix cur = elems[pos].mat();
    const IntMatrix cocur = elems[pos].comat();
    const int depth = elems[pos].length();
    for (int i : gens) {
      IntMatrix m = cur * simple_[std::size_t(i)].mat();
      auto key = matrix_key(m);
      if (t->index_.count(key)) continue;
      if (elems.size() >= max_order_)
        throw BoundExceeded("W_" + to_string(s) + " of " + rs_.label() + " exceeds the order cap " +
                            std::to_string(max_order_));
      if (length_of(m) != depth + 1) throw InternalMismatch("BFS depth differs from inversion count");
      t->index_.emplace(std::move(key), elems.size());
      elems.emplace_back(std::move(m), cocur * simple_[std::size_t(i)].comat(), depth + 1);
    }
  }

  std::vector<long long> counts;
  t->inverse_.resize(elems.size());
  t->profiles_.resize(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& x = elems[i];
    bump(counts, x.length());
    if (x.length() > elems[t->longest_].length()) t->longest_ = i;
    const WeylElement inv = inverse(x);
    auto idx = t->find(inv.mat());
    if (!idx) throw InternalMismatch("inverse missing from group table");
    t->inverse_[i] = *idx;

    ElementProfile prof;
    prof.simple_image.fill(-1);
    for (int k : gens) {
      if (column_positive(x.mat(), k)) prof.right_ascents |= singleton(k);
      if (column_positive(inv.mat(), k)) prof.left_ascents |= singleton(k);
      const int img = column_simple(x.mat(), k);
      if (img >= 0) prof.simple_image[std::size_t(k)] = std::int8_t(img);
    }
    t->profiles_[i] = prof;
  }
  t->poincare_ = GroupTable::from_counts(counts);
  return t;
}

std::shared_ptr<const GroupTable> FiniteWeyl::table(Subset s) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
  }
  auto built = enumerate(s);
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(s, std::move(built)).first->second;
}

SubsetMatrix<IntPoly> FiniteWeyl::matrix_M(Subset k, Subset s) const {
  if (!is_subset(k, s)) throw std::invalid_argument("matrix_M: K must be contained in S'");
  auto t = table(s);
  SubsetMatrix<IntPoly> m(k, s);
  for_each_subset(k, [&](Subset q) { for_each_subset(s, [&](Subset j) { m.at(q, j) = t->p_poly(q, j, k); }); });
  return m;
}

SubsetMatrix<IntPoly> FiniteWeyl::matrix_N(Subset j, Subset s) const {
  if (!is_subset(j, s)) throw std::invalid_argument("matrix_N: J must be contained in S'");
  auto t = table(s);
  SubsetMatrix<IntPoly> m(j, s);
  for_each_subset(j, [&](Subset r) { for_each_subset(s, [&](Subset k) { m.at(r, k) = t->h_poly(r, j, k); }); });
  return m;
}

Report FiniteWeyl::identity_checks(Subset s) const {
  Report report;
  auto t = table(s);
  const IntPoly& w = t->poincare();
  const int top = t->longest().length();
  auto name = [](Subset a) { return to_string(a); };

  {
    IntPoly alt;
    bool divisible = true;
    for_each_subset(s, [&](Subset j) {
      auto q = exact_quotient(w, poincare(j));
      if (!q) {
        divisible = false;
        return;
      }
      alt += q->scaled(sign_of_size(j, 0));
    });
    const bool ok = divisible && alt == IntPoly::t_power(unsigned(top));
    report.add("alternating sum of W/W_J equals t^" + std::to_string(top), ok, "got " + to_text(alt));
  }

  {
    std::vector<BigInt> rev(w.coeffs().rbegin(), w.coeffs().rend());
    report.add("Poincare polynomial is palindromic of degree l(w0)",
               IntPoly(rev) == w && w.degree() == top && longest(s).length() == top);
  }

  CheckTally coset("W^J(t) W_J(t) = W(t)");
  for_each_subset(s, [&](Subset j) { coset.record(t->min_coset_poincare(j) * poincare(j) == w, "J=" + name(j)); });
  coset.flush_into(report);

  CheckTally partition("p_{K,J,K} = sum over R of h_{R,J,K}");
  CheckTally hrules("h_{R,J,K} = 0 unless |R| = |K|; p_{K,J,K} = h_{J,J,K} when |J| = |K|");
  CheckTally decomposition("W(t) = sum over Q of W_J W_K / W_Q p_{Q,J,K}");
  CheckTally cor_p("alternating sum of p_{R,J,H} equals t^l(w(K,Q)) p_{Q',J,K}");
  CheckTally cor_h("alternating sum of h_{R,H,K} equals t^l(w(J,R)) h_{R',J,K}");

  for_each_subset(s, [&](Subset j) {
    for_each_subset(s, [&](Subset k) {
      const std::string jk = "J=" + name(j) + " K=" + name(k);

      IntPoly hsum;
      for_each_subset(j, [&](Subset r) {
        const IntPoly h = t->h_poly(r, j, k);
        hsum += h;
        if (cardinality(r) != cardinality(k)) hrules.record(h.is_zero(), jk + " R=" + name(r));
      });
      partition.record(t->p_poly(k, j, k) == hsum, jk);
      if (cardinality(j) == cardinality(k)) hrules.record(t->p_poly(k, j, k) == t->h_poly(j, j, k), jk);

      IntPoly total;
      const IntPoly wjk = poincare(j) * poincare(k);
      bool exact = true;
      for_each_subset(k, [&](Subset q) {
        auto f = exact_quotient(wjk, poincare(q));
        if (!f) {
          exact = false;
          return;
        }
        total += *f * t->p_poly(q, j, k);
      });
      decomposition.record(exact && total == w, jk);

      for_each_subset(k, [&](Subset q) {
        IntPoly lhs;
        for_each_between(q, k, [&](Subset h) {
          for_each_between(q, h, [&](Subset r) { lhs += t->p_poly(r, j, h).scaled(sign_of_size(h, q)); });
        });
        const WeylElement v = longest_coset_rep(k, q);
        auto qp = conj_subset(v, q);
        const bool ok = qp && is_subset(*qp, k) && lhs == t->p_poly(*qp, j, k).shifted(unsigned(v.length()));
        cor_p.record(ok, jk + " Q=" + name(q));
      });

      for_each_subset(j, [&](Subset r) {
        IntPoly lhs;
        for_each_between(r, j, [&](Subset h) { lhs += t->h_poly(r, h, k).scaled(sign_of_size(h, r)); });
        const WeylElement v = longest_coset_rep(j, r);
        auto rp = conj_subset(v, r);
        const bool ok = rp && is_subset(*rp, j) && lhs == t->h_poly(*rp, j, k).shifted(unsigned(v.length()));
        cor_h.record(ok, jk + " R=" + name(r));
      });
    });
  });
  partition.flush_into(report);
  hrules.flush_into(report);
  decomposition.flush_into(report);
  cor_p.flush_into(report);
  cor_h.flush_into(report);

  CheckTally mlaw("M_{K,S'} = M_{K,K'} M_{K',S'}");
  CheckTally nlaw("N_{J,S'} = N_{J,J'} N_{J',S'}");
  for_each_subset(s, [&](Subset mid) {
    for_each_subset(mid, [&](Subset low) {
      const std::string tag = "inner=" + name(low) + " middle=" + name(mid);
      mlaw.record(matrix_M(low, s) == growth::multiply(matrix_M(low, mid), matrix_M(mid, s)), tag);
      nlaw.record(matrix_N(low, s) == growth::multiply(matrix_N(low, mid), matrix_N(mid, s)), tag);
    });
  });
  mlaw.flush_into(report);
  nlaw.flush_into(report);
  return report;
}

IntPoly poincare_of_generated(const std::vector<IntMatrix>& gens, std::size_t max_order) {
  if (gens.empty()) return IntPoly{1};
  const int n = gens.front().rows();
  std::unordered_map<std::string, int> depth;
  std::deque<IntMatrix> queue{IntMatrix::identity(n)};
  depth.emplace(matrix_key(queue.front()), 0);
  std::vector<long long> counts{1};
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    const int d = depth.at(matrix_key(cur));
    for (const auto& g : gens) {
      IntMatrix m = cur * g;
      auto key = matrix_key(m);
      if (depth.count(key)) continue;
      if (depth.size() >= max_order) throw BoundExceeded("generated group exceeds the order cap");
      depth.emplace(std::move(key), d + 1);
      bump(counts, d + 1);
      queue.push_back(std::move(m));
    }
  }
  std::vector<BigInt> c;
  for (long long v : counts) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

}  // namespace growth
