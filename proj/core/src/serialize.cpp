#include "growth/serialize.hpp"

#include <stdexcept>

namespace growth {

std::optional<DenominatorFactors> factor_one_minus_t_powers(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  DenominatorFactors out;
  out.t_power = unsigned(p.valuation());
  IntPoly rest = p.unshifted(out.t_power);
  if (rest.coefficient(0) != 1) return std::nullopt;
  while (rest.degree() > 0) {
    // the lowest positive-degree term of prod (1 - t^k) is -m t^kmin
    const int k = [&] {
      for (int i = 1; i <= rest.degree(); ++i)
        if (rest.coeffs()[std::size_t(i)] != 0) return i;
      return -1;
    }();
    if (k < 0 || rest.coeffs()[std::size_t(k)] > 0) return std::nullopt;
    auto q = exact_quotient(rest, IntPoly::one_minus_t_power(unsigned(k)));
    if (!q) return std::nullopt;
    rest = std::move(*q);
    ++out.one_minus_t[unsigned(k)];
  }
  return out;
}

namespace {

// Phi_d for d = 1.., built on demand from t^d - 1 = prod_{e | d} Phi_e
const IntPoly& cyclotomic(unsigned d) {
  static std::vector<IntPoly> cache{IntPoly{}};
  while (cache.size() <= d) {
    const auto n = unsigned(cache.size());
    IntPoly p = IntPoly::t_power(n) - IntPoly{1};
    for (unsigned e = 1; e < n; ++e)
      if (n % e == 0) p = *exact_quotient(p, cache[e]);
    cache.push_back(std::move(p));
  }
  return cache[d];
}

}  // namespace

std::optional<DisplayForm> display_form(const RatFun& r) {
  if (r.den().is_zero()) return std::nullopt;
  DisplayForm out;
  out.den.t_power = unsigned(r.den().valuation());
  IntPoly rest = r.den().unshifted(out.den.t_power);
  // multiplicities of the cyclotomic factors of the denominator
  std::map<unsigned, unsigned> phi;
  const int bound = 4 * rest.degree() + 8;
  for (unsigned d = 1; rest.degree() > 0 && int(d) <= bound; ++d) {
    while (rest.degree() >= cyclotomic(d).degree()) {
      auto q = exact_quotient(rest, cyclotomic(d));
      if (!q) break;
      rest = std::move(*q);
      ++phi[d];
    }
  }
  if (rest.degree() != 0) return std::nullopt;
  // cover them greedily by factors 1 - t^k, largest k first
  IntPoly cover{1};
  while (!phi.empty()) {
    const unsigned k = phi.rbegin()->first;
    ++out.den.one_minus_t[k];
    cover *= IntPoly::one_minus_t_power(k);
    for (auto it = phi.begin(); it != phi.end();) {
      if (k % it->first == 0 && --it->second == 0)
        it = phi.erase(it);
      else
        ++it;
    }
  }
  auto extra = exact_quotient(cover.shifted(out.den.t_power), r.den());
  if (!extra) return std::nullopt;
  out.num = r.num() * *extra;
  return out;
}

namespace {

std::string power(unsigned d, bool latex) {
  if (d == 0) return "1";
  if (d == 1) return "t";
  return latex ? "t^{" + std::to_string(d) + "}" : "t^" + std::to_string(d);
}

std::string render_poly(const IntPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + (latex ? "" : "*");
      out += power(unsigned(i), latex);
    }
  }
  return out;
}

int term_count(const IntPoly& p) {
  int n = 0;
  for (const auto& c : p.coeffs())
    if (c != 0) ++n;
  return n;
}

// t^v * (rest), pulling out the lowest power of t
std::string render_factored_num(const IntPoly& num, bool latex) {
  if (num.is_zero()) return "0";
  const unsigned v = unsigned(num.valuation());
  if (v == 0 || term_count(num) == 1) return render_poly(num, latex);
  IntPoly rest = num.unshifted(v);
  std::string inner = render_poly(rest, latex);
  return power(v, latex) + (latex ? "" : "*") + "(" + inner + ")";
}

std::string render_factors(const DenominatorFactors& f, bool latex, bool& needs_parens) {
  std::string out;
  int factors = 0;
  auto append = [&](const std::string& s) {
    if (!out.empty() && !latex) out += "*";
    out += s;
    ++factors;
  };
  if (f.t_power > 0) append(power(f.t_power, latex));
  for (auto [k, m] : f.one_minus_t) {
    std::string base = "(1 - " + power(k, latex) + ")";
    if (m > 1) base += latex ? "^{" + std::to_string(m) + "}" : "^" + std::to_string(m);
    append(base);
  }
  needs_parens = factors > 1;
  return factors == 0 ? "1" : out;
}

// num/den with den written as t^a prod (1 - t^k) when possible
std::pair<std::string, std::string> render_parts(const RatFun& r, bool latex, bool& den_parens) {
  if (auto d = display_form(r)) return {render_factored_num(d->num, latex), render_factors(d->den, latex, den_parens)};
  den_parens = term_count(r.den()) > 1;
  return {render_factored_num(r.num(), latex), render_poly(r.den(), latex)};
}

}  // namespace

std::string to_text(const IntPoly& p) { return render_poly(p, false); }
std::string to_latex(const IntPoly& p) { return render_poly(p, true); }

std::string to_text(const RatFun& r) {
  if (r.den() == IntPoly{1}) return render_poly(r.num(), false);
  bool parens = false;
  auto [num, den] = render_parts(r, false, parens);
  const bool num_parens = num.find(' ') != std::string::npos && num.back() != ')';
  return (num_parens ? "(" + num + ")" : num) + "/" + (parens ? "(" + den + ")" : den);
}

std::string to_latex(const RatFun& r) {
  if (r.den() == IntPoly{1}) return render_poly(r.num(), true);
  bool parens = false;
  auto [num, den] = render_parts(r, true, parens);
  return "\\frac{" + num + "}{" + den + "}";
}

nlohmann::json to_json(const IntPoly& p) {
  auto arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

nlohmann::json to_json(const RatFun& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of coefficients");
  std::vector<BigInt> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) {
    if (c.is_string()) {
      BigInt v;
      if (v.set_str(c.get<std::string>(), 10) != 0)
        throw std::invalid_argument("bad integer coefficient: " + c.get<std::string>());
      coeffs.push_back(std::move(v));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<long>());
    } else {
      throw std::invalid_argument("coefficient must be a decimal string or integer");
    }
  }
  return IntPoly(std::move(coeffs));
}

RatFun ratfun_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational function JSON needs \"num\" and \"den\"");
  return RatFun(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json coefficients_to_json(const std::vector<BigInt>& coeffs) {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs) {
    if (c.fits_slong_p())
      arr.push_back(c.get_si());
    else
      arr.push_back(c.get_str());
  }
  return arr;
}

}  // namespace growth
