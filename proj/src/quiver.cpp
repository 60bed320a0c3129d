#include "fockcrystal/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fockcrystal/rational.hpp"

namespace fc {

QuiverSpec QuiverSpec::gu_char0() {
  QuiverSpec s;
  s.family = Family::GU;
  return s;
}

QuiverSpec QuiverSpec::bc_char0() {
  QuiverSpec s;
  s.family = Family::BC;
  return s;
}

QuiverSpec QuiverSpec::gu_mod(long long e) {
  if (e < 3) throw unsupported_error("GU quiver needs the order of -q to be at least 3");
  QuiverSpec s;
  s.family = Family::GU;
  s.modl = true;
  s.e = e;
  if (e % 2 == 1) {
    s.f = 2 * e;
    s.d = e;
  } else {
    s.f = (e % 4 == 2) ? e / 2 : e;
    s.d = e / 2;
  }
  return s;
}

QuiverSpec QuiverSpec::bc_mod(long long f) {
  if (f < 3) throw unsupported_error("BC quiver needs the order of q to be at least 3");
  QuiverSpec s;
  s.family = Family::BC;
  s.modl = true;
  s.f = f;
  s.d = (f % 2 == 0) ? f / 2 : f;
  // order of -q: f even gives f / gcd(f, f/2 + 1); f odd gives 2f
  if (f % 2 == 1) {
    s.e = 2 * f;
  } else {
    long long a = f, b = f / 2 + 1;
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    s.e = f / a;
  }
  return s;
}

QuiverSpec QuiverSpec::gu_circle(long long e) {
  if (e < 2) throw unsupported_error("circle quiver needs the order of -q to be at least 2");
  QuiverSpec s;
  s.family = Family::GU;
  s.modl = true;
  s.circle = true;
  s.e = e;
  s.f = e;  // used only for spec equality
  s.d = e;
  return s;
}

bool is_vertex(const QuiverSpec& spec, int sign, long long k) {
  try {
    normalize(spec, sign, k);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Residue normalize(const QuiverSpec& spec, int sign, long long k) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("residue sign must be +-1");
  if (spec.circle) {
    if (sign != 1) throw std::invalid_argument("circle residues carry no sign");
    return {1, imod(k, spec.e)};
  }
  if (!spec.modl) {
    if (spec.family == Family::GU) {
      int want = (imod(k, 2) == 0) ? 1 : -1;
      if (sign != want)
        throw std::invalid_argument(
            "not a vertex: sign -1 in a GU spec must be rewritten in base -q");
    }
    return {sign, k};
  }
  long long kk = imod(k, spec.f);
  int ss = sign;
  if (spec.f % 2 == 0 && ss == -1) {  // -q^k = q^{k + f/2}
    ss = 1;
    kk = imod(kk + spec.f / 2, spec.f);
  }
  if (spec.family == Family::GU) {
    if (spec.f % 2 == 1) return {ss, kk};  // e = 2 mod 4: all signed classes appear
    // f = 2e (e odd): -1 = q^e is an odd power, so powers of -q have even exponent;
    // f = e (e = 0 mod 4): -1 = q^{e/2} is even, every class appears
    if (spec.f == 2 * spec.e && kk % 2 != 0)
      throw std::invalid_argument(
          "not a vertex: sign -1 in a GU spec must be rewritten in base -q");
  }
  return {ss, kk};
}

Residue from_mq_exponent(const QuiverSpec& spec, long long m) {
  if (spec.circle) return {1, imod(m, spec.e)};
  if (spec.family != Family::GU)
    throw std::invalid_argument("(-q)-exponents only address GU residues");
  return normalize(spec, imod(m, 2) == 0 ? 1 : -1, m);
}

long long mq_exponent(const QuiverSpec& spec, const Residue& r) {
  if (spec.circle) return r.k;
  if (spec.family != Family::GU)
    throw std::invalid_argument("(-q)-exponents only address GU residues");
  if (!spec.modl) return r.k;
  for (long long m = 0; m < spec.e; ++m)
    if (from_mq_exponent(spec, m) == r) return m;
  throw std::invalid_argument("residue is not a vertex of this GU quiver");
}

Residue from_v_exponent(const QuiverSpec& spec, long long n) {
  if (spec.circle) return from_mq_exponent(spec, n);
  if (spec.family == Family::GU) return from_mq_exponent(spec, 2 * n);
  return normalize(spec, 1, n);
}

Residue arrow(const QuiverSpec& spec, const Residue& r) {
  if (spec.circle) return {1, imod(r.k + 1, spec.e)};
  if (spec.family == Family::GU) return normalize(spec, r.sign, r.k + 2);
  return normalize(spec, r.sign, r.k + 1);
}

Residue arrow_inv(const QuiverSpec& spec, const Residue& r) {
  if (spec.circle) return {1, imod(r.k - 1, spec.e)};
  if (spec.family == Family::GU) return normalize(spec, r.sign, r.k - 2);
  return normalize(spec, r.sign, r.k - 1);
}

std::vector<Residue> vertices(const QuiverSpec& spec) {
  if (!spec.modl) throw std::invalid_argument("infinite quiver has no vertex list");
  std::vector<Residue> vs;
  if (spec.circle || spec.family == Family::GU) {
    for (long long m = 0; m < spec.e; ++m) vs.push_back(from_mq_exponent(spec, m));
  } else if (spec.f % 2 == 0) {
    for (long long k = 0; k < spec.f; ++k) vs.push_back({1, k});
  } else {
    for (int s : {1, -1})
      for (long long k = 0; k < spec.f; ++k) vs.push_back({s, k});
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<std::vector<Residue>> components(const QuiverSpec& spec) {
  auto vs = vertices(spec);
  std::vector<std::vector<Residue>> comps;
  std::map<Residue, bool> seen;
  for (const Residue& v : vs) {
    if (seen[v]) continue;
    std::vector<Residue> cyc;
    Residue cur = v;
    do {
      cyc.push_back(cur);
      seen[cur] = true;
      cur = arrow(spec, cur);
    } while (cur != v);
    comps.push_back(cyc);
  }
  return comps;
}

long long cycle_size(const QuiverSpec& spec) {
  if (!spec.modl) throw std::invalid_argument("infinite quiver has no cycle size");
  if (spec.circle) return spec.e;
  if (spec.family == Family::GU) return spec.e % 2 == 1 ? spec.e : spec.e / 2;
  return spec.f;
}

bool is_affine(const QuiverSpec& spec, const Residue& r) {
  if (!spec.modl) return false;
  if (spec.circle) return r.k == 0;
  if (spec.family == Family::GU) {
    if (r == normalize(spec, 1, 0)) return true;
    return spec.e % 2 == 0 && r == from_mq_exponent(spec, spec.e - 1);
  }
  if (r == Residue{1, 0}) return true;
  return spec.f % 2 == 1 && r == Residue{-1, 0};
}

Residue spec_map(const QuiverSpec& from_char0, const QuiverSpec& to, const Residue& r) {
  if (from_char0.modl) throw std::invalid_argument("spec_map expects a characteristic-0 source");
  if (from_char0.family != to.family)
    throw std::invalid_argument("spec_map cannot change the quiver family");
  return normalize(to, r.sign, r.k);
}

std::string residue_str(const QuiverSpec& spec, const Residue& r) {
  std::ostringstream os;
  if (spec.circle || spec.family == Family::GU) {
    long long m = mq_exponent(spec, r);
    if (m == 0) return "1";
    os << "(-q)^" << m;
    return os.str();
  }
  if (r.k == 0) return r.sign == 1 ? "1" : "-1";
  if (r.sign == -1) os << '-';
  os << "q^" << r.k;
  return os.str();
}

Residue parse_residue(const QuiverSpec& spec, const std::string& s) {
  if (s == "1") return spec.circle ? Residue{1, 0} : normalize(spec, 1, 0);
  if (s == "-1") return normalize(spec, -1, 0);
  auto expo = [&](const std::string& str, std::size_t at) {
    std::size_t pos = 0;
    long long v = std::stoll(str.substr(at), &pos);
    if (at + pos != str.size()) throw std::invalid_argument("bad residue: " + str);
    return v;
  };
  if (s.rfind("(-q)^", 0) == 0) return from_mq_exponent(spec, expo(s, 5));
  if (s.rfind("-q^", 0) == 0) return normalize(spec, -1, expo(s, 3));
  if (s.rfind("q^", 0) == 0) return normalize(spec, 1, expo(s, 2));
  throw std::invalid_argument("bad residue: " + s);
}

}  // namespace fc
