#pragma once

#include <map>
#include <string>

#include "fockcrystal/quiver.hpp"
#include "fockcrystal/rational.hpp"

namespace fc {

// Affine weight in fundamental-weight coordinates: sum of c_i * Lambda_i plus delta * d.
// Characteristic-0 specs carry no delta part.
struct Weight {
  QuiverSpec spec;
  std::map<Residue, long long> lambda;  // zero entries pruned
  Rat delta = 0;

  Weight() = default;
  explicit Weight(QuiverSpec s) : spec(std::move(s)) {}

  Weight& operator+=(const Weight&);
  Weight& operator-=(const Weight&);
  Weight& operator*=(long long);
  bool operator==(const Weight&) const;
  bool operator!=(const Weight& o) const { return !(*this == o); }

  long long lambda_at(const Residue&) const;
  void prune();
};

Weight operator+(Weight, const Weight&);
Weight operator-(Weight, const Weight&);

Weight fundamental_weight(const QuiverSpec&, const Residue&);
// expanded simple root: 2*Lambda_i - Lambda_{i v} - Lambda_{i v^-1} (+ delta when i is affine);
// coefficients accumulate when the cycle has length <= 2
Weight simple_root(const QuiverSpec&, const Residue&);

// pairing with the simple coroot: the Lambda_i coefficient
long long alpha_pairing(const Weight&, const Residue&);

// simple reflection s_i(w) = w - <alpha_i^vee, w> alpha_i
Weight weyl_reflect(const Weight&, const Residue&);

// residue twist i -> -i on an even-q-order BC quiver (q-exponent shift by d); fixes delta
Weight sigma_twist(const Weight&);

// transport a circle-quiver weight to the GU quiver:
// Lambda_{j,o} -> Lambda_j + Lambda_{j (-q)^-1}, delta_o -> delta
Weight kappa_star(const Weight& circle_weight);

// charge normalization Delta(s, N) = (sbar (1 - sbar/N) + s (s/N - 1)) / 2 with sbar = s mod N
Rat delta_shift(long long s, long long N);

// {"lambda":[["q^2",1],...],"delta":"-3/2"} with residues in canonical order
std::string weight_json(const Weight&);

}  // namespace fc
