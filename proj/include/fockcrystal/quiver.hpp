#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

// raised on parameter combinations outside the supported scope (CLI exit 3)
struct unsupported_error : std::runtime_error {
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { GU, BC };

// Residue quiver of q-power eigenvalues.
//  - GU: vertices are the powers of -q, internal coordinates are (sign, q-exponent)
//    with even q-order folded to sign +1 (-q^k = q^{k + f/2}); arrows multiply by q^2.
//  - BC: vertices are +-q^k; arrows multiply by q.
//  - circle: companion cyclic quiver on the powers of -q themselves, arrows multiply
//    by -q; residues are stored directly as (-q)-exponents (sign always +1).
struct QuiverSpec {
  Family family = Family::GU;
  bool modl = false;   // false: characteristic 0 (infinite order)
  bool circle = false;  // GU companion cyclic quiver
  long long f = 0;  // order of q       (0 when infinite)
  long long e = 0;  // order of -q      (0 when infinite)
  long long d = 0;  // order of q^2     (0 when infinite)

  static QuiverSpec gu_char0();
  static QuiverSpec bc_char0();
  static QuiverSpec gu_mod(long long e);  // e >= 3
  static QuiverSpec bc_mod(long long f);  // f >= 3
  static QuiverSpec gu_circle(long long e);

  bool operator==(const QuiverSpec& o) const {
    return family == o.family && modl == o.modl && circle == o.circle && f == o.f;
  }
};

struct Residue {
  int sign = 1;      // +1 or -1
  long long k = 0;   // q-exponent (or (-q)-exponent on the circle quiver)

  bool operator==(const Residue& o) const { return sign == o.sign && k == o.k; }
  bool operator!=(const Residue& o) const { return !(*this == o); }
  bool operator<(const Residue& o) const {
    if (sign != o.sign) return sign > o.sign;  // +1 sorts first
    return k < o.k;
  }
};

// reduce (sign, q-exponent) to the canonical vertex; throws std::invalid_argument
// when the class is not a vertex of the quiver
Residue normalize(const QuiverSpec&, int sign, long long k);
bool is_vertex(const QuiverSpec&, int sign, long long k);

// the vertex (-q)^m (GU and circle quivers)
Residue from_mq_exponent(const QuiverSpec&, long long m);
long long mq_exponent(const QuiverSpec&, const Residue&);

// the vertex v^n where v is the Fock step of the quiver (q^2 on GU, q on BC, -q on circle)
Residue from_v_exponent(const QuiverSpec&, long long n);

Residue arrow(const QuiverSpec&, const Residue&);      // multiply by the arrow step
Residue arrow_inv(const QuiverSpec&, const Residue&);

std::vector<Residue> vertices(const QuiverSpec&);                    // finite specs only
std::vector<std::vector<Residue>> components(const QuiverSpec&);    // arrow cycles
long long cycle_size(const QuiverSpec&);                            // finite specs only
bool is_affine(const QuiverSpec&, const Residue&);  // false on infinite specs

// map a characteristic-0 residue into a finite spec of the same family
Residue spec_map(const QuiverSpec& from_char0, const QuiverSpec& to, const Residue&);

// "q^3", "-q^2", "(-q)^1"; the identity prints as "1" and -q^0 as "-1"
std::string residue_str(const QuiverSpec&, const Residue&);
Residue parse_residue(const QuiverSpec&, const std::string&);

}  // namespace fc
