#pragma once

#include <optional>
#include <vector>

#include "homstruct/numerics.hpp"

namespace homstruct {

/// Lattice in C spanned by two R-independent periods. After reduction the
/// basis satisfies |l1| <= |l2|, |Re(l2/l1)| <= 1/2 and Im(l2/l1) > 0.
struct Lattice {
  ComplexScalar l1, l2;
  bool reduced = false;

  Lattice() = default;
  Lattice(ComplexScalar a, ComplexScalar b) : l1(std::move(a)), l2(std::move(b)) {}

  std::complex<double> tau() const { return l2.value() / l1.value(); }
};

/// Gauss (Lagrange) reduction; throws "dependent_periods" when the periods
/// are R-dependent. A boundary representative with Re(tau) = -1/2 is shifted
/// to +1/2 so the hexagonal lattice always reduces to tau ~ e^{i pi/3}.
Lattice reduce_basis(const ComplexScalar& l1, const ComplexScalar& l2,
                     const Tolerance& tol = Tolerance());

/// Largest n with zeta_n * L = L; one of 2 (generic), 4 (square), 6 (hexagonal).
int symmetry_order(const Lattice& lattice, const Tolerance& tol = Tolerance());

/// If sub is contained in super, the index (ratio of fundamental-domain
/// areas, a positive integer); absent otherwise.
std::optional<long> is_sublattice(const Lattice& sub, const Lattice& super,
                                  const Tolerance& tol = Tolerance());

/// Integer coordinates of z in the lattice basis, if z is a lattice point.
std::optional<std::pair<long, long>> lattice_coordinates(const ComplexScalar& z,
                                                         const Lattice& lattice,
                                                         const Tolerance& tol = Tolerance());

/// Finitely generated multiplicative subgroup of C^x, plus declared torsion:
/// torsion = r means all r-th roots of unity belong to the group.
struct MultGroup {
  std::vector<ComplexScalar> generators;
  int torsion = 1;
};

/// Bounded-exponent membership test: x = zeta * prod g_i^{e_i} with |e_i| <=
/// exp_bound and zeta an allowed torsion root. A negative answer only means
/// "not found within bound".
bool member_mult(const ComplexScalar& x, const MultGroup& group, int exp_bound = 20,
                 const Tolerance& tol = Tolerance());

/// Membership of exp(alpha) in the group, tested additively on logarithms
/// (robust when exp(alpha) would overflow).
bool member_exponent(const ComplexScalar& alpha, const MultGroup& group, int exp_bound = 20,
                     const Tolerance& tol = Tolerance());

/// Grain test: c != 0 with exp(c*lambda) in the group for both periods.
bool is_grain(const ComplexScalar& c, const Lattice& lattice, const MultGroup& group,
              int exp_bound = 20, const Tolerance& tol = Tolerance());

struct GrainSet {
  Lattice lattice;
  MultGroup group;
  std::vector<ComplexScalar> grains;
};

/// All grains c = a / l1 with a in the aprime lattice of coefficient height
/// <= height_bound and c * L contained in aprime; every returned value is
/// re-verified through is_grain.
GrainSet grains_enumerate(const Lattice& lattice, const Lattice& aprime, int height_bound = 10,
                          const Tolerance& tol = Tolerance());

}  // namespace homstruct
