#include "growth/affineweyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "growth/errors.hpp"

namespace growth {

namespace {

void bump(std::vector<long long>& counts, int degree) {
  if (std::size_t(degree) < counts.size()) ++counts[std::size_t(degree)];
}

// j when v = e_j, -1 otherwise
int simple_index(const IntVec& v) {
  int found = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || found >= 0) return -1;
    found = int(i);
  }
  return found;
}

}  // namespace

AffineWeyl::AffineWeyl(std::shared_ptr<const FiniteWeyl> fw) : fw_(std::move(fw)) {
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    IntVec e(std::size_t(n), 0);
    e[std::size_t(i)] = 1;
    simple_roots_.push_back({e, 0});
  }
  simple_roots_.push_back({-roots().highest_root().coords, 1});
  for (const auto& a : simple_roots_) gens_.push_back(reflection(a));
}

AffineElement AffineWeyl::identity() const { return {fw_->identity(), IntVec(std::size_t(rank()), 0), 0}; }

AffineElement AffineWeyl::make(const WeylElement& w, const IntVec& v) const {
  if (int(v.size()) != rank()) throw std::invalid_argument("translation has the wrong dimension");
  return {w, v, length_of(w, v)};
}

AffineElement AffineWeyl::translation(const IntVec& v) const { return make(fw_->identity(), v); }

AffineElement AffineWeyl::from_finite(const WeylElement& w) const { return make(w, IntVec(std::size_t(rank()), 0)); }

AffineElement AffineWeyl::reflection(const AffineRoot& a) const {
  // y -> y - (<alpha, y> + k) alpha^vee = s_alpha(y + k alpha^vee)
  const Root alpha = roots().root(a.root);
  IntVec v = alpha.coroot;
  for (auto& x : v) x *= a.level;
  return make(fw_->reflection(alpha), v);
}

AffineElement AffineWeyl::mul(const AffineElement& x, const AffineElement& y) const {
  // w(w'(z + v') + v) = ww'(z + v' + w'^-1 v)
  const WeylElement w = fw_->multiply(x.fin(), y.fin());
  const IntVec v = y.trans() + fw_->inverse(y.fin()).act_coroot(x.trans());
  return make(w, v);
}

AffineElement AffineWeyl::inverse(const AffineElement& x) const {
  // z -> w^-1 z - v = w^-1 (z - w v)
  return {fw_->inverse(x.fin()), -x.fin().act_coroot(x.trans()), x.length()};
}

int AffineWeyl::length_of(const WeylElement& w, const IntVec& v) const {
  const IntVec cv = roots().cartan().apply(v);
  int total = 0;
  for (const auto& alpha : roots().positive_roots()) {
    const int chi = fw_->is_positive(w.act(alpha.coords)) ? 0 : 1;
    total += std::abs(dot(alpha.coords, cv) + chi);
  }
  return total;
}

AffineRoot AffineWeyl::act(const AffineElement& x, const AffineRoot& a) const {
  return {x.fin().act(a.root), a.level - roots().pair(a.root, x.trans())};
}

bool AffineWeyl::is_positive(const AffineRoot& a) const {
  return fw_->is_positive(a.root) ? a.level >= 0 : a.level >= 1;
}

std::vector<AffineRoot> AffineWeyl::simple_affine_roots() const { return simple_roots_; }

std::vector<AffineRoot> AffineWeyl::inversion_set(const AffineElement& x) const {
  // x . (alpha, k) has level k - <alpha, v>, positive once k > max |<alpha, v>|
  int bound = 0;
  for (const auto& alpha : roots().positive_roots())
    bound = std::max(bound, std::abs(roots().pair(alpha.coords, x.trans())));
  std::vector<AffineRoot> out;
  for (const auto& alpha : roots().positive_roots())
    for (const IntVec& root : {alpha.coords, IntVec(-alpha.coords)})
      for (int k = fw_->is_positive(root) ? 0 : 1; k <= bound + 1; ++k) {
        AffineRoot a{root, k};
        if (!is_positive(act(x, a))) out.push_back(std::move(a));
      }
  return out;
}

Classification AffineWeyl::classify(const AffineElement& x, Subset j, Subset k) const {
  Classification c;
  const AffineElement xinv = inverse(x);
  for (int jj : members(j))
    if (!is_positive(act(xinv, simple_roots_[std::size_t(jj)]))) return c;
  for (int kk : members(k)) {
    const AffineRoot img = act(x, simple_roots_[std::size_t(kk)]);
    if (!is_positive(img)) return c;
    if (img.level == 0) {
      const int s = simple_index(img.root);
      if (s >= 0 && contains(j, s)) c.q |= singleton(kk);
    }
  }
  c.is_min_rep = true;
  return c;
}

IntVec AffineWeyl::apply(const AffineElement& x, const IntVec& y) const { return x.fin().act_coroot(y + x.trans()); }

std::string AffineWeyl::key(const AffineElement& x) {
  std::string k = matrix_key(x.fin().mat());
  const std::size_t at = k.size();
  k.resize(at + x.trans().size() * sizeof(int));
  std::memcpy(k.data() + at, x.trans().data(), x.trans().size() * sizeof(int));
  return k;
}

AffineTable::AffineTable(const AffineWeyl& aw, int max_length, std::size_t max_elements) : max_length_(max_length) {
  if (max_length < 0) throw std::invalid_argument("max length must be nonnegative");
  elements_.push_back(aw.identity());
  index_.emplace(AffineWeyl::key(elements_[0]), 0);
  for (std::size_t pos = 0; pos < elements_.size(); ++pos) {
    const AffineElement cur = elements_[pos];
    if (cur.length() >= max_length) continue;
    for (int g = 0; g <= aw.rank(); ++g) {
      AffineElement y = aw.mul(cur, aw.generator(g));
      auto key = AffineWeyl::key(y);
      if (index_.count(key)) continue;
      // BFS discovers y at depth cur + 1 exactly when the closed formula agrees
      if (y.length() != cur.length() + 1)
        throw InternalMismatch("closed-form length disagrees with BFS depth");
      if (elements_.size() >= max_elements)
        throw BoundExceeded("affine enumeration exceeds " + std::to_string(max_elements) + " elements");
      index_.emplace(std::move(key), elements_.size());
      elements_.push_back(std::move(y));
    }
  }
}

std::optional<std::size_t> AffineTable::find(const AffineElement& x) const {
  auto it = index_.find(AffineWeyl::key(x));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<long long> AffineTable::length_counts() const {
  std::vector<long long> counts(std::size_t(max_length_) + 1, 0);
  for (const auto& x : elements_) bump(counts, x.length());
  return counts;
}

OracleSeries oracle_series(const AffineWeyl& aw, const AffineTable& table, Subset j, Subset k) {
  const Subset fin = full_subset(aw.rank());
  if (!is_subset(j, fin) || !is_subset(k, fin))
    throw std::invalid_argument("J and K must consist of finite generators");
  OracleSeries out;
  out.j = j;
  out.k = k;
  out.max_length = table.max_length();
  const std::vector<long long> zeros(std::size_t(table.max_length()) + 1, 0);
  out.total = zeros;
  for_each_subset(k, [&](Subset q) { out.by_q[q] = zeros; });
  for (const auto& x : table.elements()) {
    const Classification c = aw.classify(x, j, k);
    if (!c.is_min_rep) continue;
    bump(out.by_q[c.q], x.length());
    bump(out.total, x.length());
  }
  return out;
}

std::vector<long long> oracle_h_counts(const AffineWeyl& aw, const AffineTable& table, Subset r, Subset j,
                                       Subset k) {
  std::vector<long long> counts(std::size_t(table.max_length()) + 1, 0);
  for (const auto& x : table.elements()) {
    if (!aw.classify(x, j, 0).is_min_rep) continue;
    Subset image = 0;
    bool simple = true;
    for (int kk : members(k)) {
      const AffineRoot img = aw.act(x, aw.simple_affine_root(kk));
      const int s = img.level == 0 ? simple_index(img.root) : -1;
      if (s < 0) {
        simple = false;
        break;
      }
      image |= singleton(s);
    }
    if (simple && image == r) bump(counts, x.length());
  }
  return counts;
}

std::vector<long long> oracle_normalizer_counts(const AffineWeyl& aw, const AffineTable& table, Subset j) {
  std::vector<long long> counts(std::size_t(table.max_length()) + 1, 0);
  for (const auto& x : table.elements()) {
    bool normalizes = true;
    for (int jj : members(j)) {
      const AffineRoot img = aw.act(x, aw.simple_affine_root(jj));
      bool inside = img.level == 0;
      for (std::size_t i = 0; inside && i < img.root.size(); ++i)
        if (img.root[i] != 0 && !contains(j, int(i))) inside = false;
      if (!inside) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) bump(counts, x.length());
  }
  return counts;
}

}  // namespace growth
