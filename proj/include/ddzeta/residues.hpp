// The rational residue function R(-m,-n) and the exact identities it
// satisfies: the Saalschuetz Bernoulli reciprocity and the residue
// reciprocity law.
#ifndef DDZETA_RESIDUES_HPP
#define DDZETA_RESIDUES_HPP

#include "ddzeta/exact.hpp"

namespace ddzeta {

// R(-m,-n) = (-1)^n m! n! / (m+n+1)! + sum_{k even, 1<=k<=n} C(n,k) zeta(k-m-n),
// for m, n >= 0 with m+n odd.  Evaluated through both the zeta form and the
// equivalent Bernoulli form; the two are asserted to agree exactly.
Rational residue_r(unsigned m, unsigned n);

struct SaalschutzTriple {
  Rational lhs_term1;
  Rational lhs_term2;
  Rational rhs;  // p! q! / (p+q+1)!
};

// The two sums of the Saalschuetz identity
//   (-1)^{p+1} sum_{l=0}^{q} C(q,l) B_{p+1+l}/(p+1+l)
// + (-1)^{q+1} sum_{l=0}^{p} C(p,l) B_{q+1+l}/(q+1+l)  =  p! q! / (p+q+1)!
// under the B1 = -1/2 convention.
SaalschutzTriple saalschutz_check(unsigned p, unsigned q);

struct ReciprocityTriple {
  Rational lhs;         // (-1)^n R(-m,-n) + (-1)^m R(-n,-m)
  Rational rhs;         // m! n! / (m+n+1)!
  Rational difference;  // lhs - rhs
};

// Residue reciprocity for m, n >= 1 with m+n odd.
ReciprocityTriple reciprocity_check(unsigned m, unsigned n);

}  // namespace ddzeta

#endif
