#pragma once

#include "chevcoh/weyl_group.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace chevcoh {

/// Memoized Kostant partition function P_n(nu): the number of multisets of
/// exactly n positive roots summing to nu.
///
/// Recurrence over a fixed ordering beta_0, ..., beta_{N-1} of the positive roots
/// (highest first, simple roots last):
///
///   f(k, nu, n) = sum_{m >= 0} f(k + 1, nu - m beta_k, n - m),   f(N, 0, 0) = 1.
///
/// Once only simple roots remain the multiset is forced, so the tail is
/// answered directly. The memo is keyed by (k, nu, n) and is shared across
/// queries; lookups and inserts are synchronized, so one table may serve
/// concurrent callers. Entries are pure functions of the key, so interleaving
/// never changes a result.
class PartitionTable {
 public:
  static constexpr int kSchemaVersion = 1;
  /// Sentinel part count meaning "any number of parts" (the total P(nu)).
  static constexpr std::int64_t kAnyCount = -1;

  explicit PartitionTable(const RootSystem& rs) : rs_(rs) {
    roots_ = rs.positive_roots();
    std::reverse(roots_.begin(), roots_.end());
    first_simple_ = roots_.size() - rs.rank();
    max_height_.assign(roots_.size() + 1, 0);
    for (std::size_t k = roots_.size(); k-- > 0;)
      max_height_[k] = std::max(max_height_[k + 1], height(roots_[k]));
  }

  const RootSystem& root_system() const { return rs_; }

  BigInt count(const RootVector& nu, std::int64_t n) const {
    if (nu.rank() != rs_.rank()) throw InvalidInput("target rank does not match the root system");
    if (n < 0) return 0;
    return solve(0, nu, n);
  }

  BigInt total(const RootVector& nu) const {
    if (nu.rank() != rs_.rank()) throw InvalidInput("target rank does not match the root system");
    return solve(0, nu, kAnyCount);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

  /// Serialized memo: {"schemaVersion", "family", "rank", "entries": [[k, n, [nu...], "value"], ...]}.
  nlohmann::json to_json() const {
    std::vector<std::pair<Key, BigInt>> entries;
    {
      std::shared_lock lock(mutex_);
      entries.assign(memo_.begin(), memo_.end());
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [key, value] : entries) {
      std::vector<std::int64_t> nu(key.begin() + 2, key.end());
      arr.push_back({key[0], key[1], nu, value.str()});
    }
    return {{"schemaVersion", kSchemaVersion},
            {"family", std::string(1, family_letter(rs_.spec().family))},
            {"rank", rs_.spec().rank},
            {"entries", std::move(arr)}};
  }

  /// Merges a serialized memo. Returns false (and leaves the table unchanged)
  /// when the payload is for another system or schema version.
  bool merge_json(const nlohmann::json& j) {
    try {
      if (j.at("schemaVersion").get<int>() != kSchemaVersion) return false;
      if (j.at("family").get<std::string>() != std::string(1, family_letter(rs_.spec().family))) return false;
      if (j.at("rank").get<int>() != rs_.spec().rank) return false;
      std::vector<std::pair<Key, BigInt>> parsed;
      for (const auto& e : j.at("entries")) {
        Key key{e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>()};
        auto nu = e.at(2).get<std::vector<std::int64_t>>();
        if (nu.size() != rs_.rank()) return false;
        key.insert(key.end(), nu.begin(), nu.end());
        parsed.emplace_back(std::move(key), BigInt(e.at(3).get<std::string>()));
      }
      std::unique_lock lock(mutex_);
      for (auto& [k, v] : parsed) memo_.emplace(std::move(k), std::move(v));
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static std::filesystem::path cache_file(const std::filesystem::path& dir, const RootSystemSpec& spec) {
    return dir / ("kostant-" + spec.name() + ".v" + std::to_string(kSchemaVersion) + ".json");
  }

  /// Loads a cache file if present and valid; a missing or stale file is ignored.
  bool load_cache(const std::filesystem::path& dir) {
    std::ifstream in(cache_file(dir, rs_.spec()));
    if (!in) return false;
    auto j = nlohmann::json::parse(in, nullptr, false);
    return !j.is_discarded() && merge_json(j);
  }

  void save_cache(const std::filesystem::path& dir) const {
    std::filesystem::create_directories(dir);
    const auto path = cache_file(dir, rs_.spec());
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << to_json().dump();
    }
    std::filesystem::rename(tmp, path);
  }

 private:
  using Key = std::vector<std::int64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return detail::hash_coords(k); }
  };

  BigInt solve(std::size_t k, const RootVector& nu, std::int64_t n) const {
    if (!nu.is_nonnegative()) return 0;
    const std::int64_t h = height(nu);
    const bool any = n == kAnyCount;
    if (!any && (h < n || h > n * max_height_[k])) return 0;
    if (k >= first_simple_) {
      // Only simple roots left: the multiset is nu itself.
      return (any || h == n) ? 1 : 0;
    }
    if (h == 0) return 1;

    Key key;
    key.reserve(nu.rank() + 2);
    key.push_back(static_cast<std::int64_t>(k));
    key.push_back(n);
    key.insert(key.end(), nu.vec().begin(), nu.vec().end());
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    BigInt result = 0;
    RootVector rest = nu;
    for (std::int64_t m = 0; any || m <= n; ++m) {
      if (!rest.is_nonnegative()) break;
      result += solve(k + 1, rest, any ? kAnyCount : n - m);
      rest -= roots_[k];
    }

    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), result);
    return result;
  }

  RootSystem rs_;
  std::vector<RootVector> roots_;
  std::size_t first_simple_ = 0;
  std::vector<std::int64_t> max_height_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, BigInt, KeyHash> memo_;
};

inline BigInt partition_count(const PartitionTable& table, const RootVector& nu, std::int64_t n) {
  return table.count(nu, n);
}

inline BigInt partition_total(const PartitionTable& table, const RootVector& nu) { return table.total(nu); }

inline constexpr std::int64_t kBruteForceHeightLimit = 12;

/// Independent oracle for P_n(nu): walks every nondecreasing sequence of n
/// positive-root indices and counts those summing to nu. No memo, no pruning.
inline BigInt brute_force_partition_count(const RootSystem& rs, const RootVector& nu, std::int64_t n) {
  if (nu.rank() != rs.rank()) throw InvalidInput("target rank does not match the root system");
  if (height(nu) > kBruteForceHeightLimit)
    throw InvalidInput("brute-force oracle is limited to targets of height <= " +
                       std::to_string(kBruteForceHeightLimit));
  if (n < 0) return 0;
  // Every positive root has height >= 1.
  if (n > std::max<std::int64_t>(height(nu), 0)) return 0;
  const auto& roots = rs.positive_roots();
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  BigInt hits = 0;
  while (true) {
    RootVector sum(rs.rank());
    for (auto i : idx) sum += roots[i];
    if (sum == nu) ++hits;
    // next nondecreasing sequence
    std::size_t pos = idx.size();
    while (pos > 0 && idx[pos - 1] + 1 == roots.size()) --pos;
    if (pos == 0) break;
    const std::size_t v = idx[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < idx.size(); ++j) idx[j] = v;
  }
  return hits;
}

/// Kostant's multiplicity formula, used as a cross-check of the partition DP:
/// m_lambda(mu) = sum_u (-1)^{l(u)} P(u.lambda - mu).
inline BigInt weight_multiplicity(const WeylGroup& weyl, const PartitionTable& table, const Weight& lambda,
                                  const Weight& mu) {
  if (!is_dominant(lambda)) throw InvalidInput("multiplicity needs a dominant highest weight");
  const auto& rs = weyl.root_system();
  if (mu.rank() != rs.rank()) throw InvalidInput("weight rank does not match the root system");
  BigInt sum = 0;
  for (const auto& u : weyl.elements()) {
    auto target = rs.to_root_lattice(dot_apply(u, lambda) - mu);
    if (!target || !target->is_nonnegative()) continue;
    const BigInt p = table.total(*target);
    if (u.sign() > 0) sum += p;
    else sum -= p;
  }
  if (sum < 0) throw std::logic_error("negative weight multiplicity: partition table is inconsistent");
  return sum;
}

}  // namespace chevcoh
