#pragma once

#include "chevcoh/kostant.hpp"
#include "chevcoh/regions.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chevcoh {

inline constexpr const char* kLinkageDefinition =
    "affine Weyl group W_p = W x pZPhi under the dot action (simply connected G)";

/// H^i(G_1, H^0(nu))^(-1) = ind_B^G(S^m(u^*) (x) mu) with nu = p mu + w.0 and
/// m = (i - l(w)) / 2; the descriptor records (w, mu, m).
struct G1CohDescriptor {
  const WeylElement* w = nullptr;
  Weight mu;
  std::int64_t sym_power = 0;
  Weight nu;
};

struct AdmissiblePair {
  const WeylElement* w = nullptr;
  Weight mu;
  Weight lambda;  // p mu + w.0
};

/// Largest <mu, alpha-tilde^vee> compatible with a nonzero degree-i term:
/// (p - 1) <mu, alpha-tilde^vee> - 1 <= i.
inline std::int64_t mu_search_bound(std::int64_t i, std::int64_t p) {
  if (p < 2) throw InvalidInput("p must be >= 2");
  if (i < 0) return 0;
  return (i + 1) / (p - 1);
}

/// Same truncation for a given family. For G2 the root pairing bound 2 is
/// replaced by 3, which gives (p - 1) <mu, alpha-tilde^vee> <= 3i - 1.
inline std::int64_t mu_search_bound(std::int64_t i, std::int64_t p, Family family) {
  if (family != Family::G) return mu_search_bound(i, p);
  if (p < 2) throw InvalidInput("p must be >= 2");
  if (i < 1) return 0;
  return (3 * i - 1) / (p - 1);
}

struct PublishedBound {
  std::int64_t degree = 0;
  std::optional<std::int64_t> dimension;
  std::string source;
};

/// First nonvanishing degree of H^*(G(F_q), k), q = p^r, where it is known in
/// closed form: type C_n with p > 2n, and type A_n (n >= 2, p > n + 1, r = 1).
inline std::optional<PublishedBound> published_bound(Family family, int rank, std::int64_t p, std::int64_t r) {
  if (!is_prime(p) || r < 1) return std::nullopt;
  const std::int64_t n = rank;
  if (family == Family::C && n >= 2 && p > 2 * n) {
    PublishedBound b{r * (p - 2), std::nullopt, "type C_n, p > 2n: first nonzero degree r(p-2)"};
    if (r == 1) {
      b.dimension = 1;
      b.source = "type C_n, p > 2n: H^{p-2}(G(F_p), k) = k";
    }
    return b;
  }
  if (family == Family::A && n >= 2 && p > n + 1 && r == 1) {
    if (p == n + 2) return PublishedBound{p - 2, 2, "type A_n, p = n+2: H^{p-2} = k+k"};
    if (n == 2 && (p - 1) % 3 == 0) return PublishedBound{2 * p - 6, 2, "type A_2, 3 | p-1: H^{2p-6} = k+k"};
    if (n == 2) return PublishedBound{2 * p - 3, 1, "type A_2, 3 does not divide p-1: H^{2p-3} = k"};
    if (n == 3 && p > 5) return PublishedBound{2 * p - 6, 1, "type A_3, p > 5: H^{2p-6} = k"};
    if (n > 3 && p > n + 2) return PublishedBound{2 * p - 3, 1, "type A_n generic, n > 3, p > n+2: H^{2p-3} = k"};
  }
  return std::nullopt;
}

struct Witness {
  Weight lambda;
  const WeylElement* w = nullptr;
  Weight mu;
  BigInt dimension;
};

struct DegreeBound {
  std::int64_t degree = 0;
  BigInt bound;
};

struct CohomologyReport {
  RootSystemSpec spec;
  std::int64_t p = 0;
  std::int64_t r = 1;
  std::optional<std::int64_t> m;
  std::vector<Witness> witnesses;
  std::int64_t search_ceiling = 0;
  /// Upper bound on dim H^i(G(F_p), k) for every scanned degree i = 0..min(m, ceiling).
  std::vector<DegreeBound> degree_bounds;
  bool uniqueness_at_m = false;
  /// No two witnesses lie in the same linkage class.
  bool witnesses_pairwise_unlinked = false;
  bool linkage_hypothesis_verified = false;
  /// Dominant nu < lambda, linked to a witness, with H^{m+1} != 0.
  std::vector<Weight> linkage_violations;
  BigInt dimension_upper_bound = 0;
  std::optional<BigInt> exact_dimension;
  std::optional<PublishedBound> published;
  std::optional<bool> matches_published;
  std::string linkage_definition = kLinkageDefinition;
};

/// Degree-by-degree evaluation of H^i(G, H^0(lambda) (x) H^0(lambda^*)^(1)) and
/// of the resulting bounds on H^i(G(F_p), k), for p > h.
class CohomologyEngine {
 public:
  CohomologyEngine(const WeylGroup& weyl, const PartitionTable& table, std::int64_t p)
      : weyl_(weyl), table_(table), rs_(weyl.root_system()), p_(p) {
    require_prime(p);
    if (!(table.root_system().spec() == rs_.spec()))
      throw InvalidInput("partition table belongs to another root system");
    if (p <= rs_.coxeter_number())
      throw InvalidInput("the G1-cohomology formula needs p > h; got p = " + std::to_string(p) + ", h = " +
                         std::to_string(rs_.coxeter_number()) + " for " + rs_.spec().name());
  }

  std::int64_t prime() const { return p_; }
  const WeylGroup& weyl() const { return weyl_; }

  std::optional<G1CohDescriptor> g1_descriptor(std::int64_t i, const Weight& nu) const {
    if (i < 0) throw InvalidInput("degree must be >= 0");
    check_weight(nu);
    auto d = unique_decomposition(nu);
    if (!d) return std::nullopt;
    const std::int64_t len = d->w->length();
    if (i < len || (i - len) % 2 != 0) return std::nullopt;
    return G1CohDescriptor{d->w, d->mu, (i - len) / 2, nu};
  }

  /// dim H^i(G, H^0(lambda) (x) H^0(lambda^*)^(1))
  ///   = sum_u (-1)^{l(u)} P_{(i - l(w))/2}(u.lambda - mu)   for lambda = p mu + w.0.
  BigInt ext_tensor_dim(std::int64_t i, const Weight& lambda) const {
    auto desc = g1_descriptor(i, lambda);
    if (!desc) return 0;
    BigInt sum = 0;
    for (const auto& u : weyl_.elements()) {
      auto target = rs_.to_root_lattice(dot_apply(u, lambda) - desc->mu);
      if (!target || !target->is_nonnegative()) continue;
      const BigInt c = table_.count(*target, desc->sym_power);
      if (u.sign() > 0) sum += c;
      else sum -= c;
    }
    if (sum < 0)
      throw std::logic_error("negative alternating sum " + sum.str() + " at degree " + std::to_string(i) +
                             ", lambda = " + lambda.to_string() + " for " + rs_.spec().name());
    return sum;
  }

  /// Candidate (w, mu, lambda) at degree i: lambda = p mu + w.0 dominant,
  /// l(w) <= i with matching parity, <mu, alpha-tilde^vee> within the truncation
  /// bound, and, for mu != 0 outside G2, (p-1)<mu,s^vee> + l(w) + <w.0,s^vee> <= i
  /// for every positive root s. Sorted by lambda.
  std::vector<AdmissiblePair> admissible_pairs(std::int64_t i) const {
    if (i < 0) throw InvalidInput("degree must be >= 0");
    const auto family = rs_.spec().family;
    const auto mus = dominant_weights_below_highest_root(mu_search_bound(i, p_, family));
    const Weight zero(rs_.rank());
    std::vector<AdmissiblePair> out;
    for (const auto& w : weyl_.elements()) {
      const std::int64_t len = w.length();
      if (len > i || (i - len) % 2 != 0) continue;
      const Weight w0 = dot_apply(w, zero);
      for (const auto& mu : mus) {
        Weight lambda = p_ * mu + w0;
        if (!is_dominant(lambda)) continue;
        if (family != Family::G && !mu.is_zero()) {
          bool ok = true;
          for (const auto& s : rs_.positive_roots()) {
            if ((p_ - 1) * rs_.pair(mu, s) + len + rs_.pair(w0, s) > i) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
        }
        out.push_back({&w, mu, std::move(lambda)});
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lambda < b.lambda; });
    return out;
  }

  /// Upper bound on dim H^i(G(F_p), k): the sum of ext_tensor_dim over the admissible pairs.
  BigInt upper_bound_dim(std::int64_t i) const {
    BigInt total = 0;
    for (const auto& pr : admissible_pairs(i)) total += ext_tensor_dim(i, pr.lambda);
    return total;
  }

  /// Least m >= 1 with some dominant lambda having a nonzero degree-m term,
  /// then the checks that make the degree-m value exact.
  CohomologyReport first_nontrivial(std::int64_t max_degree) const {
    if (max_degree < 1) throw InvalidInput("maximum degree must be >= 1");
    CohomologyReport rep;
    rep.spec = rs_.spec();
    rep.p = p_;
    rep.search_ceiling = max_degree;
    rep.published = published_bound(rep.spec.family, rep.spec.rank, p_, 1);
    rep.degree_bounds.push_back({0, upper_bound_dim(0)});

    for (std::int64_t i = 1; i <= max_degree && !rep.m; ++i) {
      BigInt bound = 0;
      for (const auto& pr : admissible_pairs(i)) {
        BigInt d = ext_tensor_dim(i, pr.lambda);
        if (d == 0) continue;
        bound += d;
        rep.witnesses.push_back({pr.lambda, pr.w, pr.mu, d});
      }
      rep.degree_bounds.push_back({i, bound});
      if (!rep.witnesses.empty()) {
        rep.m = i;
        rep.dimension_upper_bound = bound;
      }
    }
    if (!rep.m) return rep;

    const std::int64_t m = *rep.m;
    rep.uniqueness_at_m = rep.witnesses.size() == 1;
    rep.witnesses_pairwise_unlinked = true;
    for (std::size_t a = 0; a < rep.witnesses.size(); ++a)
      for (std::size_t b = a + 1; b < rep.witnesses.size(); ++b)
        if (is_linked(weyl_, rep.witnesses[a].lambda, rep.witnesses[b].lambda, p_))
          rep.witnesses_pairwise_unlinked = false;

    for (const auto& wit : rep.witnesses)
      for (const auto& nu : dominant_weights_strictly_below(wit.lambda))
        if (is_linked(weyl_, wit.lambda, nu, p_) && ext_tensor_dim(m + 1, nu) != 0)
          rep.linkage_violations.push_back(nu);
    std::sort(rep.linkage_violations.begin(), rep.linkage_violations.end());
    rep.linkage_violations.erase(std::unique(rep.linkage_violations.begin(), rep.linkage_violations.end()),
                                 rep.linkage_violations.end());
    rep.linkage_hypothesis_verified = rep.linkage_violations.empty();

    // Each witness sits alone in its linkage class and clears the degree m+1
    // test, so every witness contributes its full dimension.
    if (rep.linkage_hypothesis_verified && (rep.uniqueness_at_m || rep.witnesses_pairwise_unlinked))
      rep.exact_dimension = rep.dimension_upper_bound;

    if (rep.published) {
      bool match = rep.published->degree == m;
      if (rep.published->dimension)
        match = match && rep.exact_dimension && *rep.exact_dimension == *rep.published->dimension;
      rep.matches_published = match;
    }
    return rep;
  }

  /// Dominant mu with <mu, alpha-tilde^vee> <= bound, lexicographic order.
  std::vector<Weight> dominant_weights_below_highest_root(std::int64_t bound) const {
    const std::size_t n = rs_.rank();
    std::vector<std::int64_t> coef(n);
    for (std::size_t j = 0; j < n; ++j) {
      Weight e(n);
      e[j] = 1;
      coef[j] = rs_.pair(e, rs_.highest_root());
    }
    std::vector<Weight> out;
    Weight w(n);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t left) {
      if (j == n) {
        out.push_back(w);
        return;
      }
      for (std::int64_t v = 0; v * coef[j] <= left; ++v) {
        w[j] = v;
        rec(j + 1, left - v * coef[j]);
      }
      w[j] = 0;
    };
    if (bound >= 0) rec(0, bound);
    return out;
  }

  /// Dominant nu with lambda - nu a nonzero sum of simple roots.
  std::vector<Weight> dominant_weights_strictly_below(const Weight& lambda) const {
    const std::size_t n = rs_.rank();
    const auto root_coords = rs_.weight_to_root_coords(lambda);
    std::vector<std::int64_t> upper(n);
    for (std::size_t j = 0; j < n; ++j) {
      // dominant weights have nonnegative root coordinates
      const Rational& x = root_coords[j];
      upper[j] = x < 0 ? -1 : static_cast<std::int64_t>(numerator(x) / denominator(x));
    }
    std::vector<Weight> out;
    if (std::any_of(upper.begin(), upper.end(), [](auto u) { return u < 0; })) return out;
    RootVector c(n);
    while (true) {
      if (!c.is_zero()) {
        Weight nu = lambda - rs_.root_to_weight(c);
        if (is_dominant(nu)) out.push_back(std::move(nu));
      }
      std::size_t j = n;
      while (j > 0 && c[j - 1] == upper[j - 1]) c[--j] = 0;
      if (j == 0) break;
      ++c[j - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void check_weight(const Weight& nu) const {
    if (nu.rank() != rs_.rank()) throw InvalidInput("weight rank does not match the root system");
    if (!is_dominant(nu)) throw InvalidInput("weight " + nu.to_string() + " is not dominant");
  }

  std::optional<PWDecomposition> unique_decomposition(const Weight& nu) const {
    auto ds = decompose_pw(weyl_, nu, p_);
    if (ds.empty()) return std::nullopt;
    if (ds.size() > 1)
      throw std::logic_error("weight " + nu.to_string() + " has several decompositions p mu + w.0 with p > h");
    return ds.front();
  }

  const WeylGroup& weyl_;
  const PartitionTable& table_;
  const RootSystem& rs_;
  std::int64_t p_;
};

}  // namespace chevcoh
