#include "fockcrystal/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fockcrystal/rational.hpp"

namespace fc {

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t u = 0; u < parts_.size(); ++u) {
    if (parts_[u] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (u > 0 && parts_[u - 1] < parts_[u])
      throw std::invalid_argument("partition parts must be non-increasing");
  }
}

long long Partition::size() const {
  long long s = 0;
  for (long long p : parts_) s += p;
  return s;
}

long long Partition::row(std::size_t u) const {
  if (u == 0 || u > parts_.size()) return 0;
  return parts_[u - 1];
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t u = 0; u < parts_.size(); ++u) {
    if (u) os << ',';
    os << parts_[u];
  }
  return os.str();
}

Partition parse_partition(const std::string& s) {
  if (s.empty() || s == "0") return Partition();
  std::vector<long long> parts;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad partition entry: " + tok);
    parts.push_back(v);
  }
  return Partition(parts);  // validates order/positivity
}

std::vector<long long> beta_window(const Partition& la, long long charge, std::size_t n) {
  std::vector<long long> w;
  w.reserve(n);
  for (std::size_t u = 1; u <= n; ++u)
    w.push_back(la.row(u) + charge + 1 - static_cast<long long>(u));
  return w;
}

bool beta_member(const Partition& la, long long charge, long long x) {
  long long len = static_cast<long long>(la.length());
  if (x <= charge - len) return true;
  for (std::size_t u = 1; u <= la.length(); ++u)
    if (la.row(u) + charge + 1 - static_cast<long long>(u) == x) return true;
  return false;
}

std::pair<Partition, long long> partition_from_window(const std::vector<long long>& beads) {
  if (beads.empty()) throw std::invalid_argument("empty bead window");
  for (std::size_t u = 1; u < beads.size(); ++u)
    if (beads[u - 1] <= beads[u])
      throw std::invalid_argument("bead window must be strictly decreasing");
  long long n = static_cast<long long>(beads.size());
  long long charge = beads.back() + n - 1;
  std::vector<long long> parts;
  parts.reserve(beads.size());
  for (long long u = 1; u <= n; ++u) {
    long long p = beads[static_cast<std::size_t>(u - 1)] - charge - 1 + u;
    if (p < 0) throw std::invalid_argument("bead window does not describe a partition");
    parts.push_back(p);
  }
  return {Partition(parts), charge};
}

Partition partition_from_window(const std::vector<long long>& beads, long long charge) {
  auto [la, c] = partition_from_window(beads);
  if (c != charge)
    throw std::invalid_argument("tail not consecutive: window charge " + std::to_string(c) +
                                " disagrees with stated charge " + std::to_string(charge));
  return la;
}

std::vector<Hook> e_hooks(const Partition& la, long long charge, long long e) {
  if (e <= 0) throw std::invalid_argument("hook length must be positive");
  std::vector<Hook> hooks;
  for (std::size_t u = 1; u <= la.length(); ++u) {
    long long b = la.row(u) + charge + 1 - static_cast<long long>(u);
    if (!beta_member(la, charge, b - e)) hooks.push_back({b - e, b});
  }
  std::sort(hooks.begin(), hooks.end());
  return hooks;
}

Partition remove_e_hook(const Partition& la, long long charge, const Hook& h, long long e) {
  auto [x, b] = h;
  if (b - x != e) throw std::invalid_argument("hook endpoints do not differ by e");
  if (!beta_member(la, charge, b) || beta_member(la, charge, x))
    throw std::invalid_argument("not a removable hook");
  long long len = static_cast<long long>(la.length());
  // window floor strictly below x so the moved bead stays inside the window
  long long lo = std::min(x, charge - len) - 1;
  std::vector<long long> w;
  for (std::size_t u = 1; u <= la.length(); ++u)
    w.push_back(la.row(u) + charge + 1 - static_cast<long long>(u));
  for (long long bead = charge - len; bead > lo; --bead) w.push_back(bead);
  bool replaced = false;
  for (auto& bead : w)
    if (bead == b) {
      bead = x;
      replaced = true;
      break;
    }
  if (!replaced) throw std::logic_error("hook bead missing from window");
  std::sort(w.rbegin(), w.rend());
  return partition_from_window(w, charge);
}

std::vector<Hook> e_hook_removal_sequence(const Partition& la, long long charge, long long e) {
  std::vector<Hook> seq;
  Partition cur = la;
  for (;;) {
    auto hooks = e_hooks(cur, charge, e);
    if (hooks.empty()) break;
    Hook h = hooks.back();  // largest x
    seq.push_back(h);
    cur = remove_e_hook(cur, charge, h, e);
  }
  return seq;
}

ChargedMulti beta_quotient(const Partition& la, long long charge, long long l) {
  if (l <= 0) throw std::invalid_argument("quotient modulus must be positive");
  std::size_t n = la.length() + 2 * static_cast<std::size_t>(l) + 2;
  auto w = beta_window(la, charge, n);
  ChargedMulti out;
  out.mu.resize(static_cast<std::size_t>(l));
  out.charges.resize(static_cast<std::size_t>(l));
  long long total = 0;
  for (long long p = 1; p <= l; ++p) {
    std::vector<long long> wp;
    for (long long b : w)
      if (imod(b, l) == imod(p, l)) wp.push_back((b - p + l) / l);
    auto [mu, s] = partition_from_window(wp);
    out.mu[static_cast<std::size_t>(p - 1)] = mu;
    out.charges[static_cast<std::size_t>(p - 1)] = s;
    total += s;
  }
  if (total != charge) throw std::logic_error("quotient charges do not sum to the input charge");
  return out;
}

std::pair<Partition, long long> beta_compose(const ChargedMulti& m) {
  long long l = static_cast<long long>(m.mu.size());
  if (l == 0 || m.charges.size() != m.mu.size())
    throw std::invalid_argument("component and charge lists must be non-empty and equal length");
  long long d = 0;
  for (long long s : m.charges) d += s;
  // pick a bead threshold B below every component's window, then materialize
  // exactly the beads above B of each class
  long long B = 0;
  bool first = true;
  for (long long p = 1; p <= l; ++p) {
    std::size_t idx = static_cast<std::size_t>(p - 1);
    long long len = static_cast<long long>(m.mu[idx].length());
    long long v = p - l + l * (m.charges[idx] - len);
    if (first || v < B) B = v;
    first = false;
  }
  B -= 2 * l;
  std::vector<long long> beads;
  for (long long p = 1; p <= l; ++p) {
    std::size_t idx = static_cast<std::size_t>(p - 1);
    long long s = m.charges[idx];
    // beads of component p with image > B: positions u = 1..L
    long long c_low = fdiv(B + l - p, l) + 1;  // smallest c with p - l + l*c > B
    long long L = s + 1 - c_low;
    if (L < static_cast<long long>(m.mu[idx].length()))
      throw std::logic_error("bead window too shallow");
    auto wp = beta_window(m.mu[idx], s, static_cast<std::size_t>(L));
    for (long long c : wp) beads.push_back(p - l + l * c);
  }
  std::sort(beads.rbegin(), beads.rend());
  long long k = static_cast<long long>(beads.size());
  if (B + k - d != 0) throw std::logic_error("bead count mismatch in composition");
  std::vector<long long> parts;
  long long prev = -1;
  for (long long u = 1; u <= k; ++u) {
    long long la_u = beads[static_cast<std::size_t>(u - 1)] - d - 1 + u;
    if (la_u < 0 || (u > 1 && la_u > prev))
      throw std::logic_error("composed beads do not describe a partition");
    prev = la_u;
    parts.push_back(la_u);
  }
  return {Partition(parts), d};
}

CoreQuotient e_core_quotient(const Partition& la, long long e) {
  CoreQuotient cq;
  auto q = beta_quotient(la, 0, e);
  cq.quotient = q.mu;
  cq.charges = q.charges;
  auto seq = e_hook_removal_sequence(la, 0, e);
  Partition core = la;
  for (const Hook& h : seq) core = remove_e_hook(core, 0, h, e);
  cq.core = core;
  cq.weight = static_cast<long long>(seq.size());
  long long qsize = 0;
  for (const auto& mu : cq.quotient) qsize += mu.size();
  if (qsize != cq.weight || la.size() != core.size() + e * cq.weight)
    throw std::logic_error("core/quotient size bookkeeping failed");
  return cq;
}

Partition staircase(long long t) {
  if (t < 0) throw std::invalid_argument("staircase index must be >= 0");
  std::vector<long long> parts;
  for (long long p = t; p >= 1; --p) parts.push_back(p);
  return Partition(parts);
}

std::array<long long, 2> staircase_charges(long long t) {
  if (t < 0) throw std::invalid_argument("staircase index must be >= 0");
  if (t % 2 == 0) return {-t / 2, t / 2};
  return {(1 + t) / 2, -(1 + t) / 2};
}

Partition from_two_quotient(long long t, const Partition& mu1, const Partition& mu2) {
  auto sc = staircase_charges(t);
  ChargedMulti m;
  m.mu = {mu1, mu2};
  m.charges = {sc[0], sc[1]};
  auto [la, d] = beta_compose(m);
  if (d != 0) throw std::logic_error("two-quotient charges must sum to zero");
  return la;
}

long long two_core_index(const Partition& la) {
  Partition core = e_core_quotient(la, 2).core;
  long long t = static_cast<long long>(core.length());
  if (core != staircase(t)) throw std::logic_error("2-core is not a staircase");
  return t;
}

long long a_value(const Partition& la) {
  long long a = 0;
  for (std::size_t u = 1; u <= la.length(); ++u)
    a += (static_cast<long long>(u) - 1) * la.row(u);
  return a;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance requires equal sizes");
  long long sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t u = 1; u <= len; ++u) {
    sa += a.row(u);
    sb += b.row(u);
    if (sa > sb) return false;
  }
  return true;
}

namespace {
void gen_partitions(long long n, long long maxpart, std::vector<long long>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (long long p = std::min(n, maxpart); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(long long n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<long long> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

std::vector<std::array<Partition, 2>> bipartitions_of(long long n) {
  std::vector<std::array<Partition, 2>> out;
  for (long long a = n; a >= 0; --a)
    for (const auto& m1 : partitions_of(a))
      for (const auto& m2 : partitions_of(n - a)) out.push_back({m1, m2});
  return out;
}

}  // namespace fc
