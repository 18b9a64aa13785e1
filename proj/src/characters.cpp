#include "arrgr/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "arrgr/error.hpp"

namespace arrgr {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(parts[i]);
  }
  return out + ")";
}

Partition make_partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw InputError("partition parts must be weakly decreasing");
  }
  return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(Partition{current});
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition cycle_type(const std::vector<std::size_t>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = perm.at(j)) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition{std::move(parts)};
}

long class_size(const Partition& mu) {
  // n! / prod_k (k^{m_k} m_k!)
  long n_fact = 1;
  for (int i = 2; i <= mu.size(); ++i) n_fact *= i;
  std::map<int, int> mult;
  for (int p : mu.parts) ++mult[p];
  long denom = 1;
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) denom *= k;
    for (int i = 2; i <= m; ++i) denom *= i;
  }
  return n_fact / denom;
}

namespace {

// Beta-set of lambda with `len` beads: lambda_i + (len - 1 - i).
std::set<int> beta_set(const Partition& lambda, std::size_t len) {
  std::set<int> beads;
  for (std::size_t i = 0; i < len; ++i) {
    const int part = i < lambda.parts.size() ? lambda.parts[i] : 0;
    beads.insert(part + static_cast<int>(len - 1 - i));
  }
  return beads;
}

Partition from_beta_set(const std::set<int>& beads) {
  std::vector<int> parts;
  int i = static_cast<int>(beads.size()) - 1;
  for (auto it = beads.rbegin(); it != beads.rend(); ++it, --i) {
    const int part = *it - i;
    if (part > 0) parts.push_back(part);
  }
  return Partition{std::move(parts)};
}

long mn_recursive(const Partition& lambda, std::vector<int> mu, std::map<std::pair<Partition, std::vector<int>>, long>& memo) {
  if (mu.empty()) return lambda.parts.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = mu.front();
  std::vector<int> rest(mu.begin() + 1, mu.end());
  // Removing a border strip of length k = moving one bead from b to b - k.
  const auto beads = beta_set(lambda, lambda.parts.size());
  long total = 0;
  for (int b : beads) {
    const int target = b - k;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int c : beads) {
      if (c > target && c < b) ++between;
    }
    auto moved = beads;
    moved.erase(b);
    moved.insert(target);
    const long sign = between % 2 == 0 ? 1 : -1;
    total += sign * mn_recursive(from_beta_set(moved), rest, memo);
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw InputError("mn_character: |lambda| != |mu|");
  std::map<std::pair<Partition, std::vector<int>>, long> memo;
  return mn_recursive(lambda, mu.parts, memo);
}

std::map<Partition, long> decompose(const CharacterVector& chi, int n) {
  long n_fact = 1;
  for (int i = 2; i <= n; ++i) n_fact *= i;
  const auto classes = partitions_of(n);
  for (const auto& mu : classes) {
    if (!chi.count(mu)) throw InputError("character missing class " + mu.to_string());
  }
  std::map<Partition, long> out;
  for (const auto& lambda : classes) {
    Rational m = 0;
    for (const auto& mu : classes) m += Rational(class_size(mu)) * chi.at(mu) * Rational(mn_character(lambda, mu));
    m /= Rational(n_fact);
    if (m.get_den() != 1 || m < 0) {
      throw ConsistencyError("not a character: multiplicity of " + lambda.to_string() + " is " + to_string(m));
    }
    if (m != 0) out[lambda] = m.get_num().get_si();
  }
  return out;
}

CharacterVector regular_character(int n) {
  CharacterVector chi;
  long n_fact = 1;
  for (int i = 2; i <= n; ++i) n_fact *= i;
  for (const auto& mu : partitions_of(n)) {
    const bool identity = std::all_of(mu.parts.begin(), mu.parts.end(), [](int p) { return p == 1; });
    chi[mu] = identity ? Rational(n_fact) : Rational(0);
  }
  return chi;
}

}  // namespace arrgr
