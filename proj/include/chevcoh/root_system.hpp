#pragma once

#include "chevcoh/types.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace chevcoh {

enum class Family { A, B, C, D, G, F };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::G: return 'G';
    case Family::F: return 'F';
  }
  return '?';
}

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'G': case 'g': return Family::G;
      case 'F': case 'f': return Family::F;
      default: break;
    }
  }
  throw InvalidInput("unknown root-system family '" + s + "' (expected one of A, B, C, D, G, F)");
}

struct RootSystemSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

inline void validate(const RootSystemSpec& s) {
  const auto bad = [&](const std::string& why) {
    throw InvalidInput("invalid root system " + s.name() + ": " + why);
  };
  if (s.rank < 1) bad("rank must be positive");
  switch (s.family) {
    case Family::A: break;
    case Family::B:
    case Family::C:
      if (s.rank < 2) bad("types B and C require rank >= 2");
      break;
    case Family::D:
      if (s.rank < 3) bad("type D requires rank >= 3");
      break;
    case Family::G:
      if (s.rank != 2) bad("type G has rank 2");
      break;
    case Family::F:
      if (s.rank != 4) bad("type F has rank 4");
      break;
  }
}

/// Cartan matrix in Bourbaki numbering with C[i][j] = <alpha_j, alpha_i^vee>.
/// Column j is alpha_j written in fundamental-weight coordinates.
inline IntMatrix cartan_matrix(const RootSystemSpec& s) {
  validate(s);
  const int n = s.rank;
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (s.family) {
    case Family::A:
    case Family::B:
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      // B_n: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2.
      if (s.family == Family::B) c[n - 1][n - 2] = -2;
      // C_n: alpha_n long, so <alpha_n, alpha_{n-1}^vee> = -2.
      if (s.family == Family::C) c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
      break;
    case Family::G:
      c[0][1] = -3;  // alpha_1 short
      c[1][0] = -1;
      break;
    case Family::F:
      c[0][1] = c[1][0] = -1;
      c[1][2] = -1;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -2;
      c[2][3] = c[3][2] = -1;
      break;
  }
  return c;
}

/// Exact inverse of a square integer matrix (Gauss-Jordan over Q).
inline RationalMatrix invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvalidInput("singular matrix");
    std::swap(a[col], a[piv]);
    const Rational pv = a[col][col];
    for (auto& x : a[col]) x /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

class RootSystem {
 public:
  const RootSystemSpec& spec() const { return spec_; }
  std::size_t rank() const { return static_cast<std::size_t>(spec_.rank); }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<std::int64_t>& symmetrizer() const { return sym_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  const RationalMatrix& inverse_cartan() const { return inverse_; }
  Weight rho() const { return Weight(std::vector<std::int64_t>(rank(), 1)); }
  std::int64_t coxeter_number() const { return coxeter_; }
  /// alpha-tilde
  const RootVector& highest_root() const { return highest_; }
  /// alpha_0
  const RootVector& highest_short_root() const { return highest_short_; }

  RootVector simple_root(std::size_t i) const {
    RootVector v(rank());
    v[i] = 1;
    return v;
  }

  bool is_root(const RootVector& v) const {
    if (v.rank() != rank()) return false;
    const bool pos = std::binary_search(sorted_.begin(), sorted_.end(), v);
    return pos || std::binary_search(sorted_.begin(), sorted_.end(), -v);
  }

  /// (u, v) in the normalization (alpha_i, alpha_i) = 2 d_i.
  std::int64_t inner(const RootVector& u, const RootVector& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) s += u[i] * sym_[i] * cartan_[i][j] * v[j];
    return s;
  }

  /// <lambda, beta^vee> = 2 (lambda, beta) / (beta, beta), for any nonzero root-lattice vector.
  Rational pair_rational(const Weight& w, const RootVector& beta) const {
    std::int64_t num = 0;
    for (std::size_t j = 0; j < rank(); ++j) num += 2 * beta[j] * sym_[j] * w[j];
    const std::int64_t den = inner(beta, beta);
    if (den == 0) throw InvalidInput("cannot pair against the zero vector");
    return Rational(num, den);
  }

  /// <lambda, beta^vee> for a root beta of this system.
  std::int64_t pair(const Weight& w, const RootVector& beta) const {
    if (w.rank() != rank()) throw InvalidInput("weight rank does not match the root system");
    if (!is_root(beta)) throw InvalidInput("vector " + beta.to_string() + " is not a root of " + spec_.name());
    const Rational r = pair_rational(w, beta);
    return static_cast<std::int64_t>(numerator(r));
  }

  /// C * coords: the root-lattice vector written in fundamental-weight coordinates.
  Weight root_to_weight(const RootVector& v) const {
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) w[i] += cartan_[i][j] * v[j];
    return w;
  }

  /// Exact coordinates of lambda in the simple-root basis.
  std::vector<Rational> weight_to_root_coords(const Weight& w) const {
    std::vector<Rational> v(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) v[i] += inverse_[i][j] * w[j];
    return v;
  }

  /// lambda in simple-root coordinates when lambda lies in the root lattice.
  std::optional<RootVector> to_root_lattice(const Weight& w) const {
    RootVector out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < rank(); ++j) s += scaled_inverse_[i][j] * w[j];
      if (s % inverse_denominator_ != 0) return std::nullopt;
      out[i] = s / inverse_denominator_;
    }
    return out;
  }

  /// Coefficients c_i = <omega_i, beta^vee>, so that <lambda, beta^vee> = sum c_i lambda_i.
  std::vector<Rational> coroot_functional(const RootVector& beta) const {
    std::vector<Rational> c(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      Weight e(rank());
      e[i] = 1;
      c[i] = pair_rational(e, beta);
    }
    return c;
  }

  friend RootSystem build_root_system(const RootSystemSpec& spec);

 private:
  RootSystemSpec spec_;
  IntMatrix cartan_;
  std::vector<std::int64_t> sym_;
  std::vector<RootVector> positive_;
  std::vector<RootVector> sorted_;
  RationalMatrix inverse_;
  // inverse_ == scaled_inverse_ / inverse_denominator_
  IntMatrix scaled_inverse_;
  std::int64_t inverse_denominator_ = 1;
  std::int64_t coxeter_ = 0;
  RootVector highest_;
  RootVector highest_short_;
};

namespace detail {

/// Minimal positive integers d with d_i C_ij = d_j C_ji.
inline std::vector<std::int64_t> symmetrizer(const IntMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, 0);
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (c[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * c[i][j] / c[j][i];
      stack.push_back(j);
    }
  }
  BigInt l = 1;
  for (const auto& x : d) l = boost::multiprecision::lcm(l, denominator(x));
  std::vector<std::int64_t> out(n);
  BigInt g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational scaled = d[i] * l;
    out[i] = static_cast<std::int64_t>(numerator(scaled));
    g = boost::multiprecision::gcd(g, BigInt(out[i]));
  }
  for (auto& x : out) x /= static_cast<std::int64_t>(g);
  return out;
}

}  // namespace detail

inline RootSystem build_root_system(const RootSystemSpec& spec) {
  validate(spec);
  RootSystem rs;
  rs.spec_ = spec;
  rs.cartan_ = cartan_matrix(spec);
  rs.sym_ = detail::symmetrizer(rs.cartan_);
  const std::size_t n = rs.rank();

  // Closure of the simple roots under simple reflections,
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i with <beta, alpha_i^vee> = (C beta)_i.
  std::set<RootVector> roots;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    frontier.push_back(rs.simple_root(i));
    roots.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<RootVector> next;
    for (const auto& b : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t c = 0;
        for (std::size_t j = 0; j < n; ++j) c += rs.cartan_[i][j] * b[j];
        RootVector nb = b;
        nb[i] -= c;
        if (roots.insert(nb).second) next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& r : roots)
    if (r.is_nonnegative()) rs.positive_.push_back(r);
  std::sort(rs.positive_.begin(), rs.positive_.end(), [](const RootVector& a, const RootVector& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  rs.sorted_ = rs.positive_;
  std::sort(rs.sorted_.begin(), rs.sorted_.end());

  rs.inverse_ = invert(rs.cartan_);
  BigInt den = 1;
  for (const auto& row : rs.inverse_)
    for (const auto& x : row) den = boost::multiprecision::lcm(den, denominator(x));
  rs.inverse_denominator_ = static_cast<std::int64_t>(den);
  rs.scaled_inverse_.assign(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.scaled_inverse_[i][j] = static_cast<std::int64_t>(numerator(Rational(rs.inverse_[i][j] * den)));
  rs.highest_ = rs.positive_.back();

  std::int64_t short_len = rs.inner(rs.positive_.front(), rs.positive_.front());
  for (const auto& r : rs.positive_) short_len = std::min(short_len, rs.inner(r, r));
  for (const auto& r : rs.positive_)
    if (rs.inner(r, r) == short_len) rs.highest_short_ = r;  // sorted by height, last wins

  rs.coxeter_ = rs.pair(rs.rho(), rs.highest_short_) + 1;
  return rs;
}

inline std::int64_t pair(const RootSystem& rs, const Weight& w, const RootVector& beta) { return rs.pair(w, beta); }

/// Weyl's dimension formula for H^0(lambda): product over positive roots of
/// <lambda + rho, alpha^vee> / <rho, alpha^vee>.
inline BigInt weyl_dimension(const Weight& lambda, const RootSystem& rs) {
  if (lambda.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
  if (!is_dominant(lambda)) throw InvalidInput("weyl dimension needs a dominant weight, got " + lambda.to_string());
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (const auto& a : rs.positive_roots()) {
    num *= rs.pair(shifted, a);
    den *= rs.pair(rs.rho(), a);
  }
  return num / den;
}

inline std::vector<Rational> weight_to_root_coords(const Weight& lambda, const RootSystem& rs) {
  return rs.weight_to_root_coords(lambda);
}

/// Closed-form number of positive roots.
inline std::int64_t positive_root_count(const RootSystemSpec& s) {
  const std::int64_t n = s.rank;
  switch (s.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::G: return 6;
    case Family::F: return 24;
  }
  return 0;
}

}  // namespace chevcoh
