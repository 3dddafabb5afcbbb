#ifndef DFV_ROOTSYS_HPP
#define DFV_ROOTSYS_HPP

/* Root systems in Bourbaki numbering, reductive algebra summaries, and the
   exact character-level utilities built on them (Weyl dimension formula,
   fundamental-weight coordinate changes, irreducible weight multisets). */

#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "dfv/matq.hpp"
#include "dfv/rat.hpp"

namespace dfv {

// ---------------------------------------------------------------- RootSystem

struct RootSystem {
  char type = 0;  // 'A'..'G'
  int rank = 0;
  std::vector<VecI> cartan;          // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<VecI> simple_roots;    // identity basis in simple-root coords
  std::vector<VecI> positive_roots;  // sorted by (height, lex)
  VecQ d;                            // d[i] = (alpha_i,alpha_i)/2, long roots -> 1

  // Symmetrized bilinear form: (alpha_i, alpha_j) = cartan[i][j] * d[j].
  Rat inner(const VecQ& x, const VecQ& y) const;
  Rat inner(const VecI& x, const VecI& y) const;
  // <beta, alpha_i^vee> for beta in simple-root coords (always an integer).
  int pair_coroot(const VecI& beta, int i) const;
  int height(const VecI& beta) const;
  bool is_positive_root(const VecI& beta) const;
  int dim_algebra() const { return rank + 2 * static_cast<int>(positive_roots.size()); }

  std::unordered_set<VecI, VecIHash> m_posset;  // lookup index for positive roots
};

// Builds the root system for a simple type; validates (type, rank) bounds
// (A n>=1, B n>=2, C n>=2, D n>=3, E 6..8, F 4, G 2) with a diagnostic.
const RootSystem& build_root_system(char type, int rank);

// Simple-root coords -> fundamental-weight coords and back, as a pair of
// mutually inverse rational matrices (first: root->omega, second: omega->root).
std::pair<MatQ, MatQ> fundamental_weight_basis(const RootSystem& rs);

// -------------------------------------------------------- reductive algebras

struct SimpleFactor {
  char type;
  int rank;
  bool operator==(const SimpleFactor& o) const { return type == o.type && rank == o.rank; }
  bool operator<(const SimpleFactor& o) const {
    return type != o.type ? type < o.type : rank < o.rank;
  }
};

int factor_dim(const SimpleFactor& f);
std::string factor_name(const SimpleFactor& f);  // "sl_3", "so_7", "sp_2", "e6", ...

// Isomorphism-class summary of a reductive algebra: simple factors sorted by
// (type, rank) plus the dimension of the centre.
struct ReductiveAlgebra {
  std::vector<SimpleFactor> factors;  // kept sorted
  int center_dim = 0;

  void add_factor(char type, int rank);
  int dim() const;
  int rank() const;
  std::string name() const;  // e.g. "gl_1+sl_2+sp_3"
  bool operator==(const ReductiveAlgebra& o) const {
    return factors == o.factors && center_dim == o.center_dim;
  }
};

// Dominant weight of a reductive algebra: integral fundamental-weight coords
// per simple factor (in the sorted factor order) plus rational central
// character coordinates.
struct Weight {
  std::vector<VecI> omega;  // one coordinate vector per simple factor
  VecQ central;             // one coordinate per centre dimension
};

// Dimension of the irreducible with a given highest weight (product of the
// Weyl dimension formula over the factors); rejects non-dominant input.
Int weyl_dimension(const ReductiveAlgebra& alg, const Weight& hw);
Int weyl_dimension_factor(char type, int rank, const VecI& hw_omega);

// ------------------------------------------------- irreducible weight tables

// Full weight multiset of the irreducible V(hw) for one simple factor, in
// fundamental-weight coordinates.  Computed once per (type, rank, hw) by
// saturating the weight set and running Freudenthal's recursion; cached.
struct WeightMultiset {
  std::vector<std::pair<VecI, long>> entries;  // (omega-coords, multiplicity)
  long total = 0;                              // = dim V(hw)
};
const WeightMultiset& irrep_weight_multiset(char type, int rank, const VecI& hw_omega);

// Weyl group orbit of a weight (omega-coords), as a set.
std::vector<VecI> weyl_orbit_of_weight(char type, int rank, const VecI& weight_omega);

// --------------------------------------------------- diagram classification

// One irreducible component of a (possibly disconnected) Dynkin diagram given
// by generalized Cartan integers: the recognised type and the member nodes in
// Bourbaki order (indices refer to the caller's node numbering).
struct DiagramComponent {
  char type;
  int rank;
  std::vector<int> nodes;
};

// Classifies the diagram with Cartan pairings cart(i,j) and squared-length
// halves len(i); orderings are made deterministic by preferring smaller node
// indices where the diagram has a symmetry.
std::vector<DiagramComponent> classify_diagram(
    int n, const std::function<int(int, int)>& cart, const std::function<Rat(int)>& len);

}  // namespace dfv

#endif
