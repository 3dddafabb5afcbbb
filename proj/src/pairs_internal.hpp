#ifndef DFV_PAIRS_INTERNAL_HPP
#define DFV_PAIRS_INTERNAL_HPP

/* Build-side interface between the presentation-derivation machinery
   (pairs.cpp) and the family catalog (catalog_data.cpp). */

#include <map>

#include "dfv/pairs.hpp"

namespace dfv {

struct PresentationSpec {
  std::string name;
  char type = 0;
  int rank = 0;
  VecI sigma;    // node involution; empty = identity
  VecI painted;  // 0-based painted nodes
  // Explicit simple-k-root representatives in catalog order; empty = derive
  // them (indecomposable restrictions, components matched to expected_blocks).
  std::vector<VecI> beta_exprs;
  // Catalog block structure for auto-derivation, e.g. [so_p, so_q]; blocks
  // with no simple roots (so_1, so_2) are skipped automatically.
  std::vector<ReductiveAlgebra> expected_blocks;
};

struct PairSpec {
  std::string family;
  std::vector<int> params;
  std::string name;
  std::vector<PresentationSpec> presentations;
  ReductiveAlgebra expected_k;
  bool hermitian = false;
  int hermitian_node = -1;
  bool msplit = false;
  std::function<std::optional<RecipeResult>(const VecI&)> recipe;
  std::function<std::optional<ReductiveAlgebra>(int, const VecI&)> mpart_table;
};

// Derives and cross-checks everything; throws on any inconsistency.
SymmetricPair build_pair_from_spec(const PairSpec& spec);

// Shared involution helpers (defined in pairs.cpp, reused by the
// theta-module layer).
VecI sigma_apply(const VoganDiagram& vd, const VecI& v);
VecI doubled_restriction(const VoganDiagram& vd, const VecI& v);
int fixed_root_sign(const RootSystem& rs, const VecI& sigma);
// Expresses target in the basis given by columns (exact); nullopt when the
// target is outside the span or the columns are dependent.
std::optional<VecQ> solve_in_basis(const std::vector<VecI>& columns,
                                   const VecI& target);

// Implemented by catalog_data.cpp: family descriptors plus builder functions.
void register_catalog(std::vector<PairFamily>& families,
                      std::map<std::string, std::function<SymmetricPair(const std::vector<int>&)>>& builders);

}  // namespace dfv

#endif
