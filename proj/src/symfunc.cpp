#include "fockcrystal/symfunc.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "fockcrystal/quiver.hpp"

namespace fc {

Rat z_value(const Partition& nu) {
  Rat z = 1;
  long long run = 0, prev = -1;
  for (std::size_t u = 1; u <= nu.length(); ++u) {
    long long p = nu.row(u);
    z *= p;
    if (p == prev) {
      ++run;
    } else {
      run = 1;
      prev = p;
    }
    z *= run;  // accumulates the multiplicity factorial
  }
  return z;
}

long long max_degree() {
  static long long cap = [] {
    if (const char* env = std::getenv("FOCKCRYSTAL_MAX_DEGREE")) {
      char* end = nullptr;
      long long v = std::strtoll(env, &end, 10);
      if (end && *end == '\0' && v > 0) return v;
    }
    return 24LL;
  }();
  return cap;
}

namespace {
// character value by hook removal on bead windows: remove a border strip of the
// largest class part, signed by the number of beads jumped over
Int chi_rec(const Partition& la, const Partition& nu,
            std::map<std::pair<Partition, Partition>, Int>& memo) {
  if (la.size() != nu.size()) throw std::invalid_argument("character needs equal sizes");
  if (la.empty()) return 1;
  auto key = std::make_pair(la, nu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  long long r = nu.row(1);
  std::vector<long long> rest(nu.parts().begin() + 1, nu.parts().end());
  Partition nu_rest(rest);
  Int total = 0;
  std::size_t n = la.length() + 1;
  auto window = beta_window(la, 0, n);
  for (long long b : window) {
    if (beta_member(la, 0, b - r)) continue;
    long long jumped = 0;
    for (long long c : window)
      if (c > b - r && c < b) ++jumped;
    Int sign = (jumped % 2 == 0) ? 1 : -1;
    Partition la2 = remove_e_hook(la, 0, {b - r, b}, r);
    total += sign * chi_rec(la2, nu_rest, memo);
  }
  memo[key] = total;
  return total;
}

std::map<std::pair<Partition, Partition>, Int>& chi_memo() {
  static std::map<std::pair<Partition, Partition>, Int> memo;
  return memo;
}
}  // namespace

Int chi(const Partition& label, const Partition& cls) {
  return chi_rec(label, cls, chi_memo());
}

std::size_t CharTable::index(const Partition& la) const {
  auto it = std::lower_bound(parts.begin(), parts.end(), la,
                             [](const Partition& a, const Partition& b) { return b < a; });
  if (it == parts.end() || !(*it == la)) throw std::invalid_argument("label out of range");
  return static_cast<std::size_t>(it - parts.begin());
}

const CharTable& char_table(long long m) {
  if (m < 0) throw std::invalid_argument("degree must be >= 0");
  if (m > max_degree())
    throw unsupported_error("degree exceeds FOCKCRYSTAL_MAX_DEGREE (" +
                            std::to_string(max_degree()) + ")");
  static std::map<long long, CharTable> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  CharTable t;
  t.parts = partitions_of(m);
  t.chi.resize(t.parts.size());
  for (std::size_t a = 0; a < t.parts.size(); ++a) {
    t.chi[a].resize(t.parts.size());
    for (std::size_t b = 0; b < t.parts.size(); ++b)
      t.chi[a][b] = chi(t.parts[a], t.parts[b]);
  }
  return cache.emplace(m, std::move(t)).first->second;
}

SymFunc phi(const Partition& la) {
  const CharTable& t = char_table(la.size());
  std::size_t a = t.index(la);
  SymFunc f;
  for (std::size_t b = 0; b < t.parts.size(); ++b) {
    if (t.chi[a][b] == 0) continue;
    f[t.parts[b]] = Rat(t.chi[a][b]) / z_value(t.parts[b]);
  }
  return f;
}

std::map<Partition, Rat> to_phi(const SymFunc& f) {
  // phi_lambda are Hall-orthonormal; coefficient of phi_lambda is <f, phi_lambda>
  std::map<long long, SymFunc> by_degree;
  for (const auto& [nu, c] : f) {
    if (c == 0) continue;
    by_degree[nu.size()][nu] = c;
  }
  std::map<Partition, Rat> out;
  for (const auto& [deg, part] : by_degree) {
    const CharTable& t = char_table(deg);
    for (std::size_t a = 0; a < t.parts.size(); ++a) {
      Rat coeff = 0;
      for (const auto& [nu, c] : part) coeff += c * Rat(t.chi[a][t.index(nu)]);
      if (coeff != 0) out[t.parts[a]] = coeff;
    }
  }
  return out;
}

SymFunc from_phi(const std::map<Partition, Rat>& f) {
  SymFunc out;
  for (const auto& [la, c] : f) {
    if (c == 0) continue;
    for (const auto& [nu, v] : phi(la)) {
      Rat& slot = out[nu];
      slot += c * v;
      if (slot == 0) out.erase(nu);
    }
  }
  return out;
}

SymFunc add(SymFunc a, const SymFunc& b) {
  for (const auto& [nu, c] : b) {
    Rat& slot = a[nu];
    slot += c;
    if (slot == 0) a.erase(nu);
  }
  return a;
}

SymFunc scale(SymFunc a, const Rat& c) {
  if (c == 0) return {};
  for (auto& [nu, v] : a) v *= c;
  return a;
}

namespace {
Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<long long> parts;
  parts.reserve(a.length() + b.length());
  parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}
}  // namespace

SymFunc p_multiply(const SymFunc& f, const Partition& la) {
  SymFunc out;
  for (const auto& [nu, c] : f) {
    if (c == 0) continue;
    out[merge_parts(nu, la)] += c;
  }
  return out;
}

SymFunc p_lower(const SymFunc& f, long long n) {
  if (n <= 0) throw std::invalid_argument("lowering index must be positive");
  SymFunc out;
  for (const auto& [nu, c] : f) {
    long long mult = 0;
    for (long long p : nu.parts())
      if (p == n) ++mult;
    if (mult == 0) continue;
    std::vector<long long> rest;
    bool dropped = false;
    for (long long p : nu.parts()) {
      if (p == n && !dropped) {
        dropped = true;
        continue;
      }
      rest.push_back(p);
    }
    Rat& slot = out[Partition(rest)];
    slot += c * n * mult;
    if (slot == 0) out.erase(Partition(rest));
  }
  return out;
}

Rat hall(const SymFunc& f, const SymFunc& g) {
  Rat out = 0;
  const SymFunc& small = f.size() <= g.size() ? f : g;
  const SymFunc& big = f.size() <= g.size() ? g : f;
  for (const auto& [nu, c] : small) {
    auto it = big.find(nu);
    if (it != big.end()) out += c * it->second * z_value(nu);
  }
  return out;
}

SymFunc frob_up(const SymFunc& f, long long a) {
  if (a <= 0) throw std::invalid_argument("stretch factor must be positive");
  SymFunc out;
  for (const auto& [nu, c] : f) {
    std::vector<long long> parts;
    for (long long p : nu.parts()) parts.push_back(a * p);
    out[Partition(parts)] += c;
  }
  return out;
}

SymFunc frob_down(const SymFunc& f, long long a) {
  if (a <= 0) throw std::invalid_argument("stretch factor must be positive");
  SymFunc out;
  for (const auto& [nu, c] : f) {
    std::vector<long long> parts;
    bool divisible = true;
    for (long long p : nu.parts()) {
      if (p % a != 0) {
        divisible = false;
        break;
      }
      parts.push_back(p / a);
    }
    if (!divisible) continue;
    Partition mu(parts);
    Rat& slot = out[mu];
    slot += c * z_value(nu) / z_value(mu);
    if (slot == 0) out.erase(mu);
  }
  return out;
}

std::map<Partition, Rat> phi_mult_p(const Partition& la, long long n) {
  if (n <= 0) throw std::invalid_argument("positive index expected");
  // border-strip rule on the bead window: slide a bead up by n, signed by the
  // number of beads jumped over; no character table needed at any degree
  std::map<Partition, Rat> out;
  auto w = beta_window(la, 0, la.length() + n + 1);
  for (long long b : w) {
    if (beta_member(la, 0, b + n)) continue;
    long long jumped = 0;
    for (long long c : w)
      if (c > b && c < b + n) ++jumped;
    std::vector<long long> moved = w;
    *std::find(moved.begin(), moved.end(), b) = b + n;
    std::sort(moved.rbegin(), moved.rend());
    out[partition_from_window(moved, 0)] = jumped % 2 == 0 ? Rat(1) : Rat(-1);
  }
  return out;
}

std::map<Partition, Rat> phi_lower_p(const Partition& la, long long n) {
  if (n <= 0) throw std::invalid_argument("positive index expected");
  std::map<Partition, Rat> out;
  auto w = beta_window(la, 0, la.length() + 2);
  for (long long b : w) {
    if (beta_member(la, 0, b - n)) continue;
    long long jumped = 0;
    for (long long c : w)
      if (c > b - n && c < b) ++jumped;
    std::vector<long long> moved = w;
    *std::find(moved.begin(), moved.end(), b) = b - n;
    std::sort(moved.rbegin(), moved.rend());
    out[partition_from_window(moved, 0)] = jumped % 2 == 0 ? Rat(1) : Rat(-1);
  }
  return out;
}

}  // namespace fc
