#include "growth/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace growth {

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

IntMatrix cartan_matrix(char type, int n) {
  type = char(std::toupper(static_cast<unsigned char>(type)));
  auto bad = [&] {
    return std::invalid_argument(std::string("unsupported root system ") + type + std::to_string(n));
  };
  if (n < 1 || n > 8) throw bad();
  IntMatrix c(n, n);
  auto link = [&](int i, int j) {  // simply laced edge i - j (zero-based)
    c(i, j) = -1;
    c(j, i) = -1;
  };
  for (int i = 0; i < n; ++i) c(i, i) = 2;

  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'C':  // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':  // Bourbaki numbering: 1-3-4-5-6-7-8 with 2 attached to 4
      if (n < 6) throw bad();
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      if (n != 4) throw bad();
      link(0, 1);
      link(2, 3);
      c(1, 2) = -2;
      c(2, 1) = -1;
      break;
    case 'G':  // alpha_1 long, alpha_2 short
      if (n != 2) throw bad();
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
    default:
      throw bad();
  }
  return c;
}

RootSystem RootSystem::build(char type, int rank) {
  type = char(std::toupper(static_cast<unsigned char>(type)));
  return RootSystem(type, rank, cartan_matrix(type, rank));
}

RootSystem RootSystem::from_label(std::string_view label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(label.data() + 1, label.data() + label.size(), rank);
  if (ec != std::errc{} || ptr != label.data() + label.size())
    throw std::invalid_argument("bad root system label '" + std::string(label) + "'");
  return build(label[0], rank);
}

RootSystem::RootSystem(char type, int rank, IntMatrix cartan)
    : type_(type), rank_(rank), cartan_(std::move(cartan)) {
  const std::int64_t d = determinant(cartan_);
  if (d <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  det_ = d;
  adjugate_ = adjugate(cartan_);
  close_roots();

  // 2 rho = sum of positive roots
  two_rho_.assign(std::size_t(rank_), 0);
  for (const auto& r : positive_) two_rho_ = two_rho_ + r.coords;

  cone_gens_.clear();
  for (int i = 0; i < rank_; ++i) {
    // |det C| C^-1 e_i = adj(C) e_i since det C > 0
    IntVec v = adjugate_.column(i);
    const int g = gcd_of(v);
    for (auto& x : v) {
      if (x < 0) throw std::logic_error("cone generator with a negative entry in " + label());
      x /= g;
    }
    cone_gens_.push_back(std::move(v));
  }
}

void RootSystem::close_roots() {
  const int n = rank_;
  positive_.clear();
  index_.clear();
  for (int i = 0; i < n; ++i) {
    IntVec e(std::size_t(n), 0);
    e[std::size_t(i)] = 1;
    positive_.push_back({e, e});
  }
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
  std::map<IntVec, IntVec> seen;
  for (const auto& r : positive_) seen.emplace(r.coords, r.coroot);
  std::vector<Root> frontier = positive_;
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        int pairing = 0;  // <beta, alpha_i^vee> = (C^T beta)_i
        for (int j = 0; j < n; ++j) pairing += beta.coords[std::size_t(j)] * cartan_(j, i);
        int copairing = 0;  // <alpha_i, beta^vee> = (C beta^vee)_i
        for (int j = 0; j < n; ++j) copairing += cartan_(i, j) * beta.coroot[std::size_t(j)];
        Root img = beta;
        img.coords[std::size_t(i)] -= pairing;
        img.coroot[std::size_t(i)] -= copairing;
        if (std::all_of(img.coords.begin(), img.coords.end(), [](int x) { return x >= 0; }) &&
            seen.emplace(img.coords, img.coroot).second)
          next.push_back(img);
      }
    frontier = std::move(next);
  }
  positive_.clear();
  for (auto& [coords, coroot] : seen) positive_.push_back({coords, coroot});
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return std::lexicographical_compare(a.coords.rbegin(), a.coords.rend(), b.coords.rbegin(), b.coords.rend());
  });
  for (std::size_t k = 0; k < positive_.size(); ++k) {
    index_.emplace(positive_[k].coords, int(k) + 1);
    index_.emplace(-positive_[k].coords, -int(k) - 1);
  }
}

std::optional<int> RootSystem::root_index(const IntVec& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Root RootSystem::root(const IntVec& coords) const {
  auto idx = root_index(coords);
  if (!idx) throw std::invalid_argument("not a root: " + to_string(coords));
  const Root& r = positive_[std::size_t(std::abs(*idx) - 1)];
  if (*idx > 0) return r;
  return {-r.coords, -r.coroot};
}

int RootSystem::pair(const IntVec& root_coords, const IntVec& coroot_coords) const {
  return dot(root_coords, cartan_.apply(coroot_coords));
}

IntMatrix RootSystem::reflection(const Root& beta) const {
  // column j: e_j - <alpha_j, beta^vee> beta
  const IntVec c = cartan_.apply(beta.coroot);
  IntMatrix m = IntMatrix::identity(rank_);
  for (int j = 0; j < rank_; ++j)
    for (int r = 0; r < rank_; ++r) m(r, j) -= c[std::size_t(j)] * beta.coords[std::size_t(r)];
  return m;
}

IntMatrix RootSystem::coreflection(const Root& beta) const {
  // column j: e_j - <beta, alpha_j^vee> beta^vee
  const IntVec c = cartan_.transpose().apply(beta.coords);
  IntMatrix m = IntMatrix::identity(rank_);
  for (int j = 0; j < rank_; ++j)
    for (int r = 0; r < rank_; ++r) m(r, j) -= c[std::size_t(j)] * beta.coroot[std::size_t(r)];
  return m;
}

std::vector<Subset> RootSystem::components(Subset s) const {
  std::vector<Subset> out;
  Subset left = s;
  while (left) {
    Subset comp = left & (~left + 1);
    Subset grown = comp;
    do {
      comp = grown;
      for (int i : members(comp))
        for (int j : members(left))
          if (cartan_(i, j) != 0) grown |= singleton(j);
    } while (grown != comp);
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<IntVec> cone_generators(const RootSystem& rs) { return rs.cone_generators(); }

long two_rho_weight(const RootSystem& rs, const IntVec& m) {
  if (int(m.size()) != rs.rank()) throw std::invalid_argument("two_rho_weight: dimension mismatch");
  return rs.pair(rs.two_rho(), m);
}

std::vector<Root> positive_roots_of(const RootSystem& rs, Subset j) {
  std::vector<Root> out;
  for (const auto& r : rs.positive_roots()) {
    bool inside = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (r.coords[std::size_t(i)] != 0 && !contains(j, i)) inside = false;
    if (inside) out.push_back(r);
  }
  return out;
}

}  // namespace growth
