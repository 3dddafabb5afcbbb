#ifndef DFV_THETAMOD_HPP
#define DFV_THETAMOD_HPP

/* Restriction of nilradicals to the fixed torus of a symmetric pair: the
   weight multiset of u_J ∩ g^{-θ} and its decomposition into irreducible
   highest-weight summands over the Levi-fixed-part acting on it. */

#include <string>
#include <vector>

#include "dfv/pairs.hpp"
#include "dfv/rootsys.hpp"

namespace dfv {

// Action of the involution on the positive roots of one presentation.
struct ThetaRoots {
  // image[i] = positive-root index of the involution applied to root i.
  std::vector<int> image;
  // +1: fixed root line inside the fixed subalgebra; -1: fixed root line in
  // the (-1)-eigenspace; 0: not a fixed root.
  std::vector<int> fixed_sign;
};

ThetaRoots theta_on_roots(const SymmetricPair& pair, int presentation = 0);

// One weight of u_J ∩ g^{-θ} on the fixed torus, stored as the symmetrised
// ambient vector (root plus its involution image; twice the root for fixed
// roots), together with the contributing positive roots.
struct RestrictedWeight {
  VecI doubled;
  std::vector<int> sources;  // positive-root indices, size 1 or 2
};

// Weights of u_J ∩ g^{-θ} for the parabolic with the given REMOVED ambient
// nodes.  One entry per fixed noncompact root of u_J and one per involution
// orbit {α, θα} lying entirely inside u_J.
std::vector<RestrictedWeight> nilrad_theta_weights(const SymmetricPair& pair,
                                                   const ParabolicSpec& j,
                                                   int presentation = 0);

// An irreducible summand of the restriction module.
struct ModuleSummand {
  VecI hw_doubled;   // symmetrised highest weight
  VecI omega;        // pairings with ALL simple restricted coroots (catalog order)
  int multiplicity = 1;
  Int dim = 1;       // dimension of one copy
  std::string tag;   // symbolic identification ("C6", "L3 C6", ...); "" = none
  // Highest weight per simple factor of the acting algebra, aligned with
  // ReductiveAlgebra::factors; each entry is in that factor's own fundamental
  // coordinates, the zero vector for factors acting trivially.
  std::vector<VecI> factor_hw;
  // Restriction of the highest weight to the centre of the acting algebra,
  // in canonical coordinates fixed per Levi (length = centre dimension).
  // Constant across the weights of the summand, so it identifies the central
  // character; two summands agree on the centre iff these vectors are equal.
  VecQ central;
};

struct HWModule {
  LeviIntersection levi;  // the acting algebra l_J ∩ k
  std::vector<ModuleSummand> summands;
  Int total_dim() const {
    Int s = 0;
    for (const auto& x : summands) s += x.multiplicity * x.dim;
    return s;
  }
};

// Decomposes u_J ∩ g^{-θ} under l_J ∩ k by greedy highest-weight peeling with
// exact character subtraction; throws on any inconsistency (non-dominant
// maximal weight, negative multiplicity).
HWModule decompose(const SymmetricPair& pair, const ParabolicSpec& j,
                   int presentation = 0);

// The (-1)-eigenspace module of the stable enlargement of a compact-side
// parabolic (named by its removed simple restricted roots).
HWModule pbborel_module(const SymmetricPair& pair, const ParabolicSpec& q);

}  // namespace dfv

#endif
