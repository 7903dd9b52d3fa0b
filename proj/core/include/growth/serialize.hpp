#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "growth/exactalg.hpp"

namespace growth {

/// den = t^t_power * prod (1 - t^k)^mult
struct DenominatorFactors {
  unsigned t_power = 0;
  std::map<unsigned, unsigned> one_minus_t;  // k -> multiplicity
};

/// Factors p as t^a * prod (1 - t^k)^m when it has that shape.
std::optional<DenominatorFactors> factor_one_minus_t_powers(const IntPoly& p);

/// r rewritten as num / (t^a prod (1 - t^k)^m), not necessarily reduced.
struct DisplayForm {
  IntPoly num;
  DenominatorFactors den;
};
/// Available when the denominator of r is t^a times a product of cyclotomic
/// polynomials; the factors 1 - t^k are chosen greedily from the largest k.
std::optional<DisplayForm> display_form(const RatFun& r);

std::string to_text(const IntPoly& p);
std::string to_text(const RatFun& r);
std::string to_latex(const IntPoly& p);
std::string to_latex(const RatFun& r);

/// Coefficients as decimal strings: ["1","0","-1"].
nlohmann::json to_json(const IntPoly& p);
/// {"num": [...], "den": [...]} with decimal-string coefficients.
nlohmann::json to_json(const RatFun& r);
/// Accepts decimal strings or JSON integers as coefficients; normalizes.
IntPoly poly_from_json(const nlohmann::json& j);
RatFun ratfun_from_json(const nlohmann::json& j);

/// Integers when they fit in int64, decimal strings otherwise.
nlohmann::json coefficients_to_json(const std::vector<BigInt>& coeffs);

}  // namespace growth
