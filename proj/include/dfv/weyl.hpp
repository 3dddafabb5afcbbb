#ifndef DFV_WEYL_HPP
#define DFV_WEYL_HPP

/* Weyl group elements as integer matrices on simple-root coordinates.
   The matrix is the canonical form: equality and hashing go through it, the
   stored word is one reduced expression (BFS order, lexicographic ties). */

#include "dfv/rootsys.hpp"

namespace dfv {

struct WeylElement {
  VecI word;                 // reduced word in simple reflection indices
  std::vector<VecI> matrix;  // action on simple-root coords, row-major

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// Action of a Weyl matrix on a vector in simple-root coordinates.
VecI weyl_apply(const std::vector<VecI>& m, const VecI& x);
std::vector<VecI> weyl_matmul(const std::vector<VecI>& a, const std::vector<VecI>& b);
std::vector<VecI> weyl_identity_matrix(int rank);
WeylElement weyl_identity(int rank);

// Multiply on the right by a simple reflection (word grows by one letter; the
// caller is responsible for the letter actually increasing the length).
WeylElement weyl_mul_gen(const RootSystem& rs, const WeylElement& w, int i);

// |W| for a full simple system or for the subsystem spanned by the nodes J.
Int weyl_order(char type, int rank);
Int weyl_order_subsystem(const RootSystem& rs, const VecI& j_nodes);

// Cost guard: default 10^7 group elements, override via DFV_WEYL_BOUND.
long weyl_enumeration_bound();

// Full enumeration, BFS by length with lexicographic tie-break.  Refuses with
// a diagnostic naming |W| when the group exceeds the bound.
std::vector<WeylElement> weyl_generate(const RootSystem& rs, long bound = 0);

// Longest element of the standard parabolic subgroup W_J (J = node subset).
WeylElement weyl_longest(const RootSystem& rs, const VecI& j_nodes);

// Minimal-length representatives of the cosets W_J \ W.
std::vector<WeylElement> min_coset_reps(const RootSystem& rs, const VecI& j_nodes,
                                        long bound = 0);

// Minimal-length representatives of double cosets W_J \ W / W_J'; asserts the
// minimal element of each coset is unique.
std::vector<WeylElement> min_double_coset_reps(const RootSystem& rs, const VecI& j_nodes,
                                               const VecI& j2_nodes, long bound = 0);

// J* = -w_0(J) for the full longest element w_0, as a sorted node list.
VecI j_star(const RootSystem& rs, const VecI& j_nodes);

}  // namespace dfv

#endif
