#pragma once

#include "chevcoh/root_system.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chevcoh {

inline constexpr std::int64_t kDefaultWeylCap = 2'000'000;

/// Closed-form |W|; saturates at INT64_MAX.
inline std::int64_t weyl_group_order(const RootSystemSpec& s) {
  validate(s);
  const std::int64_t n = s.rank;
  auto fact = [](std::int64_t k) {
    std::int64_t r = 1;
    for (std::int64_t i = 2; i <= k; ++i) {
      if (r > INT64_MAX / i) return INT64_MAX;
      r *= i;
    }
    return r;
  };
  auto scaled = [](std::int64_t a, std::int64_t b) { return a > INT64_MAX / b ? INT64_MAX : a * b; };
  switch (s.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return n >= 62 ? INT64_MAX : scaled(fact(n), std::int64_t{1} << n);
    case Family::D: return n >= 63 ? INT64_MAX : scaled(fact(n), std::int64_t{1} << (n - 1));
    case Family::G: return 12;
    case Family::F: return 1152;
  }
  return 0;
}

class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::vector<int> word, IntMatrix action) : word_(std::move(word)), action_(std::move(action)) {}

  /// Lexicographically least among the shortest words, 0-based simple indices.
  const std::vector<int>& reduced_word() const { return word_; }
  const IntMatrix& action_matrix() const { return action_; }
  int length() const { return static_cast<int>(word_.size()); }
  int sign() const { return word_.size() % 2 ? -1 : 1; }
  bool is_identity() const { return word_.empty(); }

  /// 1-based word such as "s1s2s1"; "e" for the identity.
  std::string word_string() const {
    if (word_.empty()) return "e";
    std::string s;
    for (int i : word_) s += "s" + std::to_string(i + 1);
    return s;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

 private:
  std::vector<int> word_;
  IntMatrix action_;
};

inline Weight apply(const WeylElement& w, const Weight& lambda) {
  const auto& m = w.action_matrix();
  Weight out(lambda.rank());
  for (std::size_t i = 0; i < lambda.rank(); ++i)
    for (std::size_t j = 0; j < lambda.rank(); ++j) out[i] += m[i][j] * lambda[j];
  return out;
}

/// w . lambda = w(lambda + rho) - rho; rho is all ones in these coordinates.
inline Weight dot_apply(const WeylElement& w, const Weight& lambda) {
  Weight shifted = lambda;
  for (std::size_t i = 0; i < shifted.rank(); ++i) shifted[i] += 1;
  Weight out = apply(w, shifted);
  for (std::size_t i = 0; i < out.rank(); ++i) out[i] -= 1;
  return out;
}

namespace detail {

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// s_i(lambda) = lambda - lambda_i alpha_i, alpha_i being column i of the Cartan matrix.
inline IntMatrix simple_reflection(const IntMatrix& cartan, std::size_t i) {
  IntMatrix m = identity_matrix(cartan.size());
  for (std::size_t a = 0; a < cartan.size(); ++a) m[a][i] -= cartan[a][i];
  return m;
}

}  // namespace detail

class WeylGroup {
 public:
  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& simple_reflection(std::size_t i) const { return elements_.at(1 + i); }

  /// Element with the given action matrix, if any.
  const WeylElement* find(const IntMatrix& action) const {
    auto it = index_.find(action);
    return it == index_.end() ? nullptr : &elements_[it->second];
  }

  /// Element represented by an arbitrary (not necessarily reduced) word.
  const WeylElement& from_word(const std::vector<int>& word) const {
    IntMatrix m = detail::identity_matrix(rs_.rank());
    for (int i : word) {
      if (i < 0 || static_cast<std::size_t>(i) >= rs_.rank()) throw InvalidInput("simple reflection index out of range");
      m = detail::multiply(m, detail::simple_reflection(rs_.cartan(), static_cast<std::size_t>(i)));
    }
    return elements_[index_.at(m)];
  }

  const WeylElement& compose(const WeylElement& u, const WeylElement& v) const {
    return elements_[index_.at(detail::multiply(u.action_matrix(), v.action_matrix()))];
  }

  friend WeylGroup enumerate(const RootSystem& rs, std::int64_t cap);

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
};

/// Breadth-first closure over simple reflections. Elements come out sorted by
/// (length, reduced word), and each element's word is the lexicographically
/// least reduced word because level k is extended in word order.
inline WeylGroup enumerate(const RootSystem& rs, std::int64_t cap = kDefaultWeylCap) {
  const std::int64_t expected = weyl_group_order(rs.spec());
  if (expected > cap)
    throw ResourceCapExceeded("Weyl group of " + rs.spec().name() + " has order " + std::to_string(expected) +
                              ", above the enumeration cap " + std::to_string(cap));
  const std::size_t n = rs.rank();
  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < n; ++i) reflections.push_back(detail::simple_reflection(rs.cartan(), i));

  WeylGroup g;
  g.rs_ = rs;
  g.elements_.emplace_back(std::vector<int>{}, detail::identity_matrix(n));
  g.index_.emplace(g.elements_.back().action_matrix(), 0);
  std::size_t level_begin = 0;
  while (level_begin < g.elements_.size()) {
    const std::size_t level_end = g.elements_.size();
    for (std::size_t e = level_begin; e < level_end; ++e) {
      for (std::size_t i = 0; i < n; ++i) {
        IntMatrix m = detail::multiply(g.elements_[e].action_matrix(), reflections[i]);
        if (g.index_.contains(m)) continue;
        if (static_cast<std::int64_t>(g.elements_.size()) >= cap)
          throw ResourceCapExceeded("Weyl group enumeration exceeded cap " + std::to_string(cap) +
                                    " (closed-form order " + std::to_string(expected) + ")");
        std::vector<int> word = g.elements_[e].reduced_word();
        word.push_back(static_cast<int>(i));
        g.index_.emplace(m, g.elements_.size());
        g.elements_.emplace_back(std::move(word), std::move(m));
      }
    }
    level_begin = level_end;
  }
  return g;
}

/// lambda* = -w0 lambda.
inline Weight dual_weight(const WeylGroup& w, const Weight& lambda) { return -apply(w.longest(), lambda); }

struct PWDecomposition {
  const WeylElement* w = nullptr;
  Weight mu;
};

/// All (w, mu) with mu dominant and lambda = p mu + w.0, searching every w in W.
inline std::vector<PWDecomposition> decompose_pw(const WeylGroup& weyl, const Weight& lambda, std::int64_t p) {
  require_prime(p);
  if (!is_dominant(lambda)) throw InvalidInput("decomposition needs a dominant weight, got " + lambda.to_string());
  const Weight zero(lambda.rank());
  std::vector<PWDecomposition> out;
  for (const auto& w : weyl.elements()) {
    Weight diff = lambda - dot_apply(w, zero);
    bool ok = true;
    for (std::size_t i = 0; i < diff.rank() && ok; ++i) {
      if (diff[i] % p != 0) ok = false;
      else diff[i] /= p;
    }
    if (ok && is_dominant(diff)) out.push_back({&w, diff});
  }
  return out;
}

}  // namespace chevcoh
