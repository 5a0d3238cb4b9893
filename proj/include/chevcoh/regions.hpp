#pragma once

#include "chevcoh/weyl_group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace chevcoh {

inline bool is_restricted(const Weight& lambda, std::int64_t p, std::int64_t r) {
  require_prime(p);
  if (r < 1) throw InvalidInput("r must be >= 1");
  const std::int64_t top = ipow(p, r) - 1;
  for (auto x : lambda.coords())
    if (x < 0 || x > top) return false;
  return true;
}

/// Coordinatewise base-p expansion lambda = sum_i digits[i] p^i, each digit in X_1(T).
inline std::vector<Weight> steinberg_digits(const Weight& lambda, std::int64_t p) {
  require_prime(p);
  if (!is_dominant(lambda)) throw InvalidInput("Steinberg digits need a dominant weight");
  std::vector<Weight> digits;
  Weight rest = lambda;
  do {
    Weight d(rest.rank());
    for (std::size_t i = 0; i < rest.rank(); ++i) {
      d[i] = rest[i] % p;
      rest[i] /= p;
    }
    digits.push_back(std::move(d));
  } while (!rest.is_zero());
  return digits;
}

enum class RegionKind { GammaChastkofsky, Gamma, Gamma2h1, Pi, Cp, D, Xr };

inline std::string region_name(RegionKind k) {
  switch (k) {
    case RegionKind::GammaChastkofsky: return "GammaChastkofsky";
    case RegionKind::Gamma: return "Gamma";
    case RegionKind::Gamma2h1: return "Gamma2h1";
    case RegionKind::Pi: return "Pi";
    case RegionKind::Cp: return "Cp";
    case RegionKind::D: return "D";
    case RegionKind::Xr: return "Xr";
  }
  return "?";
}

inline RegionKind parse_region(const std::string& s) {
  for (auto k : {RegionKind::GammaChastkofsky, RegionKind::Gamma, RegionKind::Gamma2h1, RegionKind::Pi,
                 RegionKind::Cp, RegionKind::D, RegionKind::Xr})
    if (region_name(k) == s) return k;
  throw InvalidInput("unknown region '" + s + "' (expected GammaChastkofsky, Gamma, Gamma2h1, Pi, Cp, D or Xr)");
}

inline bool region_uses_p(RegionKind k) {
  return k == RegionKind::Pi || k == RegionKind::Cp || k == RegionKind::D || k == RegionKind::Xr;
}
inline bool region_uses_r(RegionKind k) { return k == RegionKind::Pi || k == RegionKind::Xr; }

struct RegionSpec {
  RegionKind kind = RegionKind::Gamma;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> r;

  static RegionSpec make(RegionKind kind, std::optional<std::int64_t> p = {}, std::optional<std::int64_t> r = {}) {
    RegionSpec s{kind, p, r};
    s.validate();
    return s;
  }

  void validate() const {
    const auto name = region_name(kind);
    if (region_uses_p(kind) != p.has_value())
      throw InvalidInput("region " + name + (p ? " takes no prime" : " requires a prime p"));
    if (region_uses_r(kind) != r.has_value())
      throw InvalidInput("region " + name + (r ? " takes no r" : " requires r"));
    if (p) require_prime(*p);
    if (r && *r < 1) throw InvalidInput("region " + name + " requires r >= 1");
  }
};

namespace detail {

/// Linear functional sum_i coef[i] lambda_i compared against a bound.
struct RegionInequality {
  std::vector<Rational> coef;
  Rational bound;
  bool strict = false;

  bool holds(const Weight& w) const {
    Rational s = 0;
    for (std::size_t i = 0; i < coef.size(); ++i) s += coef[i] * w[i];
    return strict ? s < bound : s <= bound;
  }
};

inline RegionInequality region_inequality(const RootSystem& rs, const RegionSpec& region) {
  region.validate();
  const auto h = rs.coxeter_number();
  const std::size_t n = rs.rank();
  RegionInequality q;
  switch (region.kind) {
    case RegionKind::GammaChastkofsky:
      q = {rs.coroot_functional(rs.highest_short_root()), Rational(h), true};
      break;
    case RegionKind::Gamma:
      q = {rs.coroot_functional(rs.highest_short_root()), Rational(h - 1), true};
      break;
    case RegionKind::Gamma2h1:
      q = {rs.coroot_functional(rs.highest_short_root()), Rational(2 * h - 1), true};
      break;
    case RegionKind::Pi: {
      // <lambda + rho, a0^vee> <= 2 p^r <rho, a0^vee>
      const std::int64_t rho_a0 = rs.pair(rs.rho(), rs.highest_short_root());
      const std::int64_t pr = ipow(*region.p, *region.r);
      q = {rs.coroot_functional(rs.highest_short_root()), Rational(2 * pr * rho_a0 - rho_a0), false};
      break;
    }
    case RegionKind::Cp:
      q = {rs.coroot_functional(rs.highest_root()), Rational(*region.p * (*region.p - 1)), false};
      break;
    case RegionKind::D: {
      // b = (<alpha_i, alpha_j^vee>)^{-1}; that matrix is the transpose of our Cartan matrix.
      // sum_ij lambda_i b_ij < p(p-1)/2
      const auto& inv = rs.inverse_cartan();
      q.coef.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q.coef[i] += inv[j][i];
      q.bound = Rational(*region.p * (*region.p - 1), 2);
      q.strict = true;
      break;
    }
    case RegionKind::Xr:
      break;
  }
  return q;
}

}  // namespace detail

inline bool in_region(const RootSystem& rs, const Weight& lambda, const RegionSpec& region) {
  if (lambda.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
  if (!is_dominant(lambda)) throw InvalidInput("region membership is defined for dominant weights");
  if (region.kind == RegionKind::Xr) {
    region.validate();
    return is_restricted(lambda, *region.p, *region.r);
  }
  return detail::region_inequality(rs, region).holds(lambda);
}

/// Every dominant weight of the region, sorted lexicographically.
inline std::vector<Weight> enumerate_region(const RootSystem& rs, const RegionSpec& region) {
  region.validate();
  const std::size_t n = rs.rank();
  std::vector<std::int64_t> upper(n);
  if (region.kind == RegionKind::Xr) {
    std::fill(upper.begin(), upper.end(), ipow(*region.p, *region.r) - 1);
  } else {
    // All coefficients are positive, so each coordinate is bounded on its own.
    const auto q = detail::region_inequality(rs, region);
    for (std::size_t i = 0; i < n; ++i) {
      if (q.coef[i] <= 0) throw std::logic_error("region functional is not positive");
      const Rational lim = q.bound / q.coef[i];
      upper[i] = static_cast<std::int64_t>(numerator(lim) / denominator(lim));
    }
  }
  std::vector<Weight> out;
  Weight w(n);
  while (true) {
    if (in_region(rs, w, region)) out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == upper[i - 1]) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

enum class ThresholdSource { Jantzen, Andersen, BNP };

inline ThresholdSource parse_threshold_source(const std::string& s) {
  if (s == "Jantzen") return ThresholdSource::Jantzen;
  if (s == "Andersen") return ThresholdSource::Andersen;
  if (s == "BNP") return ThresholdSource::BNP;
  throw InvalidInput("unknown threshold source '" + s + "' (expected Jantzen, Andersen or BNP)");
}

/// Published bound on <mu, alpha_0^vee> for composition factors L(mu) below which
/// restriction H^i(G, V) -> H^i(G(F_q), V) is an isomorphism.
inline std::int64_t res_iso_threshold(const RootSystem& rs, std::int64_t p, std::int64_t r, ThresholdSource source) {
  require_prime(p);
  if (r < 1) throw InvalidInput("r must be >= 1");
  const auto fam = rs.spec().family;
  const std::int64_t pr = ipow(p, r), pr1 = ipow(p, r - 1);
  const std::int64_t h = rs.coxeter_number();
  switch (source) {
    case ThresholdSource::Jantzen:
      return fam == Family::G ? pr - 3 * pr1 - 3 : pr - 2 * pr1 - 2;
    case ThresholdSource::Andersen:
      if (p < 3 * (h - 1))
        throw InvalidInput("Andersen's bound needs p >= 3(h-1) = " + std::to_string(3 * (h - 1)));
      if (fam == Family::A && rs.rank() == 1) throw InvalidInput("Andersen's bound excludes type A1");
      return pr - pr1 - 2;
    case ThresholdSource::BNP:
      if (r < 2) throw InvalidInput("the optimal bound needs r >= 2");
      switch (fam) {
        case Family::A: return rs.rank() == 1 ? pr - 2 * pr1 : pr - pr1;
        case Family::B:
        case Family::C:
        case Family::D: return pr;
        case Family::F:
        case Family::G: return 2 * pr - pr1 + 1;
      }
  }
  return 0;
}

/// Affine Weyl group linkage: some u in W has nu + rho - u(lambda + rho) in p * (root lattice).
inline bool is_linked(const WeylGroup& weyl, const Weight& lambda, const Weight& nu, std::int64_t p) {
  require_prime(p);
  const auto& rs = weyl.root_system();
  if (lambda.rank() != rs.rank() || nu.rank() != rs.rank())
    throw InvalidInput("weight rank does not match the root system");
  const Weight target = nu + rs.rho();
  const Weight shifted = lambda + rs.rho();
  for (const auto& u : weyl.elements()) {
    auto diff = rs.to_root_lattice(target - apply(u, shifted));
    if (!diff) continue;
    bool divisible = true;
    for (auto x : diff->coords())
      if (x % p != 0) divisible = false;
    if (divisible) return true;
  }
  return false;
}

}  // namespace chevcoh
