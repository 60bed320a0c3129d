#include "fockcrystal/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace fc {

void Weight::prune() {
  for (auto it = lambda.begin(); it != lambda.end();)
    it = it->second == 0 ? lambda.erase(it) : std::next(it);
}

Weight& Weight::operator+=(const Weight& o) {
  if (!(spec == o.spec)) throw std::invalid_argument("weights live on different quivers");
  for (const auto& [r, c] : o.lambda) lambda[r] += c;
  delta += o.delta;
  prune();
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (!(spec == o.spec)) throw std::invalid_argument("weights live on different quivers");
  for (const auto& [r, c] : o.lambda) lambda[r] -= c;
  delta -= o.delta;
  prune();
  return *this;
}

Weight& Weight::operator*=(long long c) {
  for (auto& [r, v] : lambda) v *= c;
  delta *= c;
  prune();
  return *this;
}

bool Weight::operator==(const Weight& o) const {
  return spec == o.spec && lambda == o.lambda && delta == o.delta;
}

long long Weight::lambda_at(const Residue& r) const {
  auto it = lambda.find(r);
  return it == lambda.end() ? 0 : it->second;
}

Weight operator+(Weight a, const Weight& b) { return a += b; }
Weight operator-(Weight a, const Weight& b) { return a -= b; }

Weight fundamental_weight(const QuiverSpec& spec, const Residue& r) {
  Weight w(spec);
  w.lambda[r] = 1;
  return w;
}

Weight simple_root(const QuiverSpec& spec, const Residue& r) {
  Weight w(spec);
  w.lambda[r] += 2;
  w.lambda[arrow(spec, r)] -= 1;
  w.lambda[arrow_inv(spec, r)] -= 1;
  if (spec.modl && is_affine(spec, r)) w.delta += 1;
  w.prune();
  return w;
}

long long alpha_pairing(const Weight& w, const Residue& r) { return w.lambda_at(r); }

Weight weyl_reflect(const Weight& w, const Residue& r) {
  Weight a = simple_root(w.spec, r);
  a *= alpha_pairing(w, r);
  Weight out = w;
  out -= a;
  return out;
}

Weight sigma_twist(const Weight& w) {
  const QuiverSpec& spec = w.spec;
  if (spec.family != Family::BC || !spec.modl || spec.f % 2 != 0)
    throw std::invalid_argument("residue negation twist needs a BC quiver with even q-order");
  Weight out(spec);
  for (const auto& [r, c] : w.lambda) out.lambda[normalize(spec, r.sign, r.k + spec.d)] += c;
  out.delta = w.delta;
  out.prune();
  return out;
}

Weight kappa_star(const Weight& cw) {
  if (!cw.spec.circle) throw std::invalid_argument("kappa_star expects a circle-quiver weight");
  QuiverSpec gu = QuiverSpec::gu_mod(cw.spec.e);
  Weight out(gu);
  for (const auto& [r, c] : cw.lambda) {
    long long m = mq_exponent(cw.spec, r);
    out.lambda[from_mq_exponent(gu, m)] += c;
    out.lambda[from_mq_exponent(gu, m - 1)] += c;
  }
  out.delta = cw.delta;
  out.prune();
  return out;
}

Rat delta_shift(long long s, long long N) {
  if (N <= 0) throw std::invalid_argument("cycle size must be positive");
  long long sbar = imod(s, N);
  Rat a = Rat(sbar) * (1 - Rat(sbar, N));
  Rat b = Rat(s) * (Rat(s, N) - 1);
  return (a + b) / 2;
}

std::string weight_json(const Weight& w) {
  std::ostringstream os;
  os << "{\"lambda\":[";
  bool first = true;
  for (const auto& [r, c] : w.lambda) {
    if (!first) os << ',';
    first = false;
    os << "[\"" << residue_str(w.spec, r) << "\"," << c << ']';
  }
  os << "],\"delta\":\"" << rat_str(w.delta) << "\"}";
  return os.str();
}

}  // namespace fc
