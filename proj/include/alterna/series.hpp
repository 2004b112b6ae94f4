#pragma once
// Truncated power series in one distinguished variable, with LaurentPoly
// coefficients in the remaining variables.

#include <vector>

#include "laurent.hpp"

namespace alterna {

struct TruncatedSeries {
  int order = 0;             // M
  std::string tvar = "t";
  std::vector<LaurentPoly> coeffs;  // size order+1, coefficient of t^0..t^M

  TruncatedSeries() : coeffs(1) {}
  TruncatedSeries(int M, std::string t) : order(M), tvar(std::move(t)), coeffs(M + 1) {}

  const LaurentPoly& at(int k) const { return coeffs.at(k); }

  bool operator==(const TruncatedSeries& o) const {
    return order == o.order && tvar == o.tvar && coeffs == o.coeffs;
  }
};

// Split a polynomial by its power of `tvar`; the returned slices no longer
// contain tvar.  Negative powers of tvar are rejected.
inline std::map<int, LaurentPoly> split_by_var(const LaurentPoly& p, const std::string& tvar) {
  std::map<int, LaurentPoly> out;
  for (const auto& [m, c] : p.terms) {
    Monomial rest = m;
    int e = 0;
    auto it = rest.find(tvar);
    if (it != rest.end()) {
      e = it->second;
      rest.erase(it);
    }
    if (e < 0) throw std::invalid_argument("series: negative power of " + tvar);
    out[e].add_term(rest, c);
  }
  return out;
}

inline TruncatedSeries series_expand(const LaurentPoly& num, const LaurentPoly& den,
                                     const std::string& tvar, int M) {
  auto ns = split_by_var(num, tvar);
  auto ds = split_by_var(den, tvar);
  if (!ds.count(0) || ds.begin()->first != 0)
    throw std::invalid_argument("series: denominator has no constant term in " + tvar);
  const LaurentPoly& d0 = ds[0];

  TruncatedSeries s(M, tvar);
  for (int k = 0; k <= M; ++k) {
    LaurentPoly rhs = ns.count(k) ? ns[k] : LaurentPoly();
    for (const auto& [j, dj] : ds) {
      if (j == 0 || j > k) continue;
      rhs -= dj * s.coeffs[k - j];
    }
    auto q = div_exact(rhs, d0);
    if (!q) throw std::invalid_argument("series: coefficient not divisible by constant term");
    s.coeffs[k] = *q;
  }

  // den * series == num up to the truncation order, by construction; keep the
  // check anyway since it is cheap relative to everything downstream.
  for (int k = 0; k <= M; ++k) {
    LaurentPoly acc;
    for (const auto& [j, dj] : ds) {
      if (j > k) continue;
      acc += dj * s.coeffs[k - j];
    }
    LaurentPoly want = ns.count(k) ? ns[k] : LaurentPoly();
    if (acc != want) throw std::logic_error("series: round-trip check failed");
  }
  return s;
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order || a.tvar != b.tvar)
    throw std::invalid_argument("series: order/variable mismatch");
  TruncatedSeries r(a.order, a.tvar);
  for (int k = 0; k <= a.order; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
  return r;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order != b.order || a.tvar != b.tvar)
    throw std::invalid_argument("series: order/variable mismatch");
  TruncatedSeries r(a.order, a.tvar);
  for (int i = 0; i <= a.order; ++i)
    for (int j = 0; i + j <= a.order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

}  // namespace alterna
