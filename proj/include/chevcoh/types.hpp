#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevcoh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rejected input: bad family/rank, non-prime p, a violated formula hypothesis.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource guard (Weyl-group cap, degree cap) was exceeded.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Integer coordinate vector shared by Weight and RootVector. The Tag keeps
/// the two bases from mixing silently.
template <class Tag>
class Coords {
 public:
  Coords() = default;
  explicit Coords(std::size_t rank) : c_(rank, 0) {}
  explicit Coords(std::vector<std::int64_t> c) : c_(std::move(c)) {}
  Coords(std::initializer_list<std::int64_t> c) : c_(c) {}

  std::size_t rank() const { return c_.size(); }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coords() const { return c_; }
  const std::vector<std::int64_t>& vec() const { return c_; }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (auto x : c_)
      if (x < 0) return false;
    return true;
  }

  Coords& operator+=(const Coords& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Coords& operator-=(const Coords& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Coords& operator*=(std::int64_t k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator*(std::int64_t k, Coords a) { return a *= k; }
  friend Coords operator-(Coords a) { return a *= -1; }

  friend bool operator==(const Coords&, const Coords&) = default;
  friend auto operator<=>(const Coords&, const Coords&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Coords& v) {
    os << '(';
    for (std::size_t i = 0; i < v.c_.size(); ++i) os << (i ? "," : "") << v.c_[i];
    return os << ')';
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  void check(const Coords& o) const {
    if (o.c_.size() != c_.size()) throw InvalidInput("coordinate rank mismatch");
  }
  std::vector<std::int64_t> c_;
};

struct WeightTag {};
struct RootTag {};

inline std::size_t hash_coords(std::span<const std::int64_t> c) {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : c) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace detail

/// Weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
using Weight = detail::Coords<detail::WeightTag>;
/// Element of the root lattice in simple-root coordinates.
using RootVector = detail::Coords<detail::RootTag>;

inline bool is_dominant(const Weight& w) { return w.is_nonnegative(); }

inline std::int64_t height(const RootVector& v) {
  std::int64_t h = 0;
  for (auto x : v.coords()) h += x;
  return h;
}

struct CoordsHash {
  template <class Tag>
  std::size_t operator()(const detail::Coords<Tag>& v) const {
    return detail::hash_coords(v.coords());
  }
};

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline void require_prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
}

inline std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Parses "1,0,-2" into a coordinate vector.
inline std::vector<std::int64_t> parse_coords(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    auto tok = s.substr(pos, next - pos);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse coordinate '" + tok + "' in '" + s + "'");
    }
    if (used != tok.size()) throw InvalidInput("cannot parse coordinate '" + tok + "' in '" + s + "'");
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace chevcoh
