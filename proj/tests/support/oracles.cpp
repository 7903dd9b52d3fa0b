#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace oracle {

using growth::IntPoly;
using growth::RatFun;
using growth::Subset;

Counts open_cone_counts(const growth::IntMatrix& cartan, Subset indices, unsigned max_degree) {
  const int n = cartan.rows();
  const int top = int(max_degree / 2);
  Counts out(max_degree + 1, 0);
  std::vector<int> m(std::size_t(n), 0);
  while (true) {
    const int sum = std::accumulate(m.begin(), m.end(), 0);
    if (2 * sum <= int(max_degree)) {
      bool inside = true;
      for (int i = 0; i < n && inside; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan(i, j) * m[std::size_t(j)];
        inside = growth::contains(indices, i) ? pairing > 0 : pairing == 0;
      }
      if (inside) ++out[std::size_t(2 * sum)];
    }
    int k = n - 1;
    while (k >= 0 && m[std::size_t(k)] == top) m[std::size_t(k--)] = 0;
    if (k < 0) break;
    ++m[std::size_t(k)];
  }
  return out;
}

std::vector<unsigned> invariant_degrees(char type, int n) {
  std::vector<unsigned> d;
  switch (type) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(unsigned(i));
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(unsigned(2 * i));
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(unsigned(2 * i));
      d.push_back(unsigned(n));
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
    default:
      break;
  }
  if (d.empty()) throw std::invalid_argument("no degrees for this type");
  return d;
}

IntPoly poincare_from_degrees(const std::vector<unsigned>& degrees) {
  IntPoly p{1};
  for (unsigned d : degrees) p *= IntPoly::q_integer(d);
  return p;
}

RatFun affine_growth_from_degrees(const std::vector<unsigned>& degrees) {
  RatFun r = RatFun::constant(1);
  for (unsigned d : degrees)
    r *= RatFun(IntPoly::one_minus_t_power(d),
                IntPoly::one_minus_t_power(1) * IntPoly::one_minus_t_power(d - 1));
  return r;
}

namespace {

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

}  // namespace

// w alpha_k = e_{w(k)} - e_{w(k+1)} for 1-based k; arrays are 0-based
Counts permutation_p_counts(int n, Subset q, Subset j, Subset k) {
  const int size = n + 1;
  std::vector<int> w(static_cast<std::size_t>(size));
  std::iota(w.begin(), w.end(), 1);
  Counts out(std::size_t(n * (n + 1) / 2 + 1), 0);
  do {
    std::vector<int> inv(static_cast<std::size_t>(size));
    for (int p = 0; p < size; ++p) inv[std::size_t(w[std::size_t(p)] - 1)] = p + 1;
    bool min_rep = true;
    Subset got = 0;
    for (int i = 1; i <= n; ++i) {
      if (growth::contains(k, i - 1) && w[std::size_t(i - 1)] > w[std::size_t(i)]) min_rep = false;
      if (growth::contains(j, i - 1) && inv[std::size_t(i - 1)] > inv[std::size_t(i)]) min_rep = false;
    }
    if (!min_rep) continue;
    for (int kk = 1; kk <= n; ++kk) {
      if (!growth::contains(k, kk - 1)) continue;
      const int a = w[std::size_t(kk - 1)];
      const int b = w[std::size_t(kk)];
      if (b == a + 1 && growth::contains(j, a - 1)) got |= growth::singleton(kk - 1);
    }
    if (got == q) ++out[std::size_t(inversions(w))];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

using Window = std::vector<long>;  // f(1..N)

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

// value f(i) for any integer i
long eval(const Window& f, long i) {
  const long size = long(f.size());
  const long r = ((i - 1) % size + size) % size;  // 0-based residue
  return f[std::size_t(r)] + (i - 1 - r);
}

long eval_inverse(const Window& f, long v) {
  const long size = long(f.size());
  for (long p = 1; p <= size; ++p) {
    const long d = v - f[std::size_t(p - 1)];
    if (d % size == 0) return p + d;
  }
  throw std::logic_error("not an affine permutation");
}

// Shi's formula: sum over 1 <= i < j <= N of |floor((f(j) - f(i)) / N)|
int affine_length(const Window& f) {
  const long size = long(f.size());
  long len = 0;
  for (long i = 0; i < size; ++i)
    for (long j = i + 1; j < size; ++j) len += std::abs(floor_div(f[std::size_t(j)] - f[std::size_t(i)], size));
  return int(len);
}

Window right_multiply(const Window& f, int gen) {
  Window g = f;
  const std::size_t size = f.size();
  if (gen == 0) {
    g[0] = f[size - 1] - long(size);
    g[size - 1] = f[0] + long(size);
  } else {
    std::swap(g[std::size_t(gen - 1)], g[std::size_t(gen)]);
  }
  return g;
}

std::vector<std::pair<Window, int>> enumerate_affine(int n, int max_length) {
  const int size = n + 1;
  Window id(static_cast<std::size_t>(size));
  std::iota(id.begin(), id.end(), 1L);
  std::set<Window> seen{id};
  std::vector<std::pair<Window, int>> out{{id, 0}};
  std::vector<Window> frontier{id};
  for (int depth = 1; depth <= max_length; ++depth) {
    std::vector<Window> next;
    for (const auto& f : frontier)
      for (int gen = 0; gen <= n; ++gen) {
        Window g = right_multiply(f, gen);
        if (seen.insert(g).second) {
          next.push_back(g);
          out.emplace_back(g, depth);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::map<Subset, Counts> affine_permutation_p_counts(int n, Subset j, Subset k, int max_length) {
  std::map<Subset, Counts> out;
  growth::for_each_subset(k, [&](Subset q) { out[q] = Counts(std::size_t(max_length + 1), 0); });
  for (const auto& [f, len] : enumerate_affine(n, max_length)) {
    bool min_rep = true;
    for (int i = 1; i <= n && min_rep; ++i) {
      if (growth::contains(k, i - 1) && eval(f, i) > eval(f, i + 1)) min_rep = false;
      if (growth::contains(j, i - 1) && eval_inverse(f, i) > eval_inverse(f, i + 1)) min_rep = false;
    }
    if (!min_rep) continue;
    Subset q = 0;
    for (int kk = 1; kk <= n; ++kk) {
      if (!growth::contains(k, kk - 1)) continue;
      const long a = eval(f, kk);
      const long b = eval(f, kk + 1);
      const long residue = ((a - 1) % (n + 1) + (n + 1)) % (n + 1) + 1;  // in 1..n+1
      if (b == a + 1 && residue <= n && growth::contains(j, int(residue) - 1)) q |= growth::singleton(kk - 1);
    }
    ++out[q][std::size_t(len)];
  }
  return out;
}

Counts affine_permutation_length_counts(int n, int max_length) {
  Counts out(std::size_t(max_length + 1), 0);
  for (const auto& [f, depth] : enumerate_affine(n, max_length)) {
    const int len = affine_length(f);
    if (len != depth) throw std::logic_error("BFS depth and inversion formula disagree");
    ++out[std::size_t(len)];
  }
  return out;
}

Counts series_by_division(const RatFun& r, unsigned degree) {
  // solve den * c = num one coefficient at a time
  const auto& num = r.num().coeffs();
  const auto& den = r.den().coeffs();
  if (den.empty() || den[0] == 0) throw std::domain_error("not a power series");
  std::vector<growth::BigInt> c(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) {
    growth::BigInt acc = i < num.size() ? num[i] : growth::BigInt(0);
    for (unsigned d = 1; d <= i && d < den.size(); ++d) acc -= den[d] * c[i - d];
    if (acc % den[0] != 0) throw std::domain_error("non-integral coefficient");
    c[i] = acc / den[0];
  }
  Counts out;
  for (const auto& v : c) out.push_back(v.get_si());
  return out;
}

}  // namespace oracle
