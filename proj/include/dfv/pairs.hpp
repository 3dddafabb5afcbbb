#ifndef DFV_PAIRS_HPP
#define DFV_PAIRS_HPP

/* Symmetric-pair catalog: involution presentations of each (g, k), restricted
   root data of k, Levi intersections l_J ∩ k, theta-stable parabolic recipes,
   and M-part tables.

   A presentation is a diagram involution sigma plus a set of painted
   sigma-fixed nodes.  Restricted weights (functionals on the fixed part of the
   Cartan) are stored as DOUBLED integer vectors in ambient simple-root
   coordinates: dbl(alpha) = alpha + sigma(alpha), so the true restriction is
   dbl/2 and everything stays integral and hashable. */

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dfv/rootsys.hpp"

namespace dfv {

// ------------------------------------------------------------- presentation

struct VoganDiagram {
  const RootSystem* rs = nullptr;
  VecI node_involution;  // permutation of {0..rank-1}, order <= 2, diagram automorphism
  VecI painted;          // sorted node indices, all fixed by the involution
};

// Derived restriction data of one presentation (positive side only).
struct PresentationData {
  std::vector<VecI> k_lines;       // doubled weights of the k-root lines
  std::vector<VecI> p_lines;       // doubled weights of the lines in u_B meeting the (-1)-eigenspace
  std::vector<VecI> beta_doubled;  // doubled simple k-roots, catalog order
  std::vector<VecI> kroot_beta;    // k_lines[i] rewritten in beta coordinates (nonnegative integers)
  std::vector<std::vector<int>> fiber_of_line;  // positive-root indices restricting onto each k-line
  std::vector<std::vector<int>> fiber_of_beta;  // same for each beta (size 1 or 2)
  std::vector<uint32_t> line_fiber_mask;        // ambient support union of each k-line's fiber
  std::vector<uint32_t> beta_fiber_mask;        // ambient support union of each beta's fiber
  std::vector<uint32_t> line_beta_mask;         // beta-support of each k-line
  std::vector<VecI> kcartan;                    // Cartan pairings of the simple k-roots
  int num_node_orbits = 0;                      // = rank of the fixed torus = rank_k
};

struct Presentation {
  std::string name;  // diagnostic tag: "std", "swap", "cross7", ...
  VoganDiagram vd;
  std::vector<VecI> beta_exprs;  // ambient representative root of each simple k-root
  PresentationData data;
};

// ------------------------------------------------------------------ recipes

// How a chosen theta-stable parabolic leads to a finiteness verdict.
enum class MKind {
  Identity,    // the Levi lies inside k; verdict equals the K/B_K-side verdict at J'
  Torus,       // M-part is the fixed torus; verdict = linear independence of the weights
  Encoded,     // verdict comes from the per-family closed-form table
  FilterOnly,  // usable only as a necessary condition (sphericity filter at J')
};

struct RecipeResult {
  int presentation = 0;  // index into SymmetricPair::presentations
  VecI removed_g;        // ambient nodes removed (sorted, 0-based)
  MKind kind = MKind::Encoded;
  std::string encoded_id;  // key into the encoded verdict/M-part tables
};

// ---------------------------------------------------------------- catalog

struct SymmetricPair {
  std::string family;  // catalog id, e.g. "sl2n-spn"
  std::vector<int> params;
  std::string name;  // display, e.g. "(sl_8, sp_4)"
  std::vector<Presentation> presentations;  // [0] is the primary one
  ReductiveAlgebra k_algebra;
  bool hermitian = false;
  int hermitian_node = -1;  // ambient painted node with k = Levi of (all nodes minus it)
  bool msplit_rule_valid = false;  // fixed anti-invariant torus is a maximal split part
  Int dim_g = 0, dim_k = 0;
  int rank_g = 0, rank_k = 0;
  // Closed-form theta-stable-parabolic recipes: K-side removed set -> recipe.
  std::function<std::optional<RecipeResult>(const VecI& removed_k)> recipe;
  // Encoded M-part entries: (presentation, ambient removed set) -> algebra.
  std::function<std::optional<ReductiveAlgebra>(int pres, const VecI& removed_g)> mpart_table;

  const RootSystem& rs() const { return *presentations[0].vd.rs; }
};

// A parabolic named by its REMOVED simple nodes (tables list removed sets).
struct ParabolicSpec {
  enum Side { GSide, KSide };
  Side side = GSide;
  VecI removed;  // sorted node indices, 0-based
};

struct LeviIntersection {
  ReductiveAlgebra algebra;  // l_J ∩ k
  VecI j_k;                  // K-node indices kept (J_K), ascending
};

struct PairFamily {
  std::string id;
  std::string display;  // e.g. "(sl_{p+q}, sl_p + sl_q + C)"
  int num_params = 0;
  std::vector<int> sample;  // representative parameters (used by the audit dump)
  // Returns "" if the parameter list is admissible, else a diagnostic.
  std::function<std::string(const std::vector<int>&)> check;
};

// All parameterized families.
const std::vector<PairFamily>& catalog();

// Cached instantiation; throws with a diagnostic for unknown ids/bad params.
const SymmetricPair& get_pair(const std::string& family, const std::vector<int>& params);

// ------------------------------------------------------------- operations

// l_J ∩ k for J = (all nodes) minus removed, computed by the fiber rule: a
// simple k-root survives iff every ambient root restricting onto it lies in
// the span of J.  Asserts the result is a Levi of k (every k-root line of l_J
// is supported on the surviving simple k-roots).
LeviIntersection levi_intersection(const SymmetricPair& pair, const ParabolicSpec& j,
                                   int presentation = 0);

// Theta-stable parabolic realizing the K-side parabolic with removed set q:
// encoded recipe when one covers the shape, otherwise a search over
// sigma-stable ambient subsets.  The result round-trips through
// levi_intersection.  Throws an "unsupported corner" diagnostic when neither
// path yields one.
RecipeResult theta_stable_parabolic_for(const SymmetricPair& pair, const ParabolicSpec& q);

// M-part of the Levi at jprime (ambient removed set): encoded table entry if
// present, else the generic rules (Levi inside k; fixed-compact subsystem rule
// for the families where the fixed anti-invariant torus is a maximal split
// part).  Throws when no rule applies.
ReductiveAlgebra m_part(const SymmetricPair& pair, const ParabolicSpec& jprime,
                        int presentation = 0);

struct PairDims {
  Int dim_g, dim_k;
  int rank_g, rank_k;
};
PairDims dims(const SymmetricPair& pair);

// --------------------------------------------------------- shared helpers

// sigma action on a vector in simple-root coordinates.
VecI sigma_apply(const VoganDiagram& vd, const VecI& v);
// doubled restriction v + sigma(v).
VecI doubled_restriction(const VoganDiagram& vd, const VecI& v);
// Exact solve of (columns)*x = target for linearly independent columns;
// nullopt if inconsistent.
std::optional<VecQ> solve_in_basis(const std::vector<VecI>& columns, const VecI& target);
// Positive k-roots (beta coords) supported on the node subset jk.
std::vector<VecI> k_roots_in_span(const SymmetricPair& pair, int presentation, const VecI& jk);
// Classified isomorphism type of standard algebras (so_2 = pure centre, ...).
ReductiveAlgebra alg_sl(int m);
ReductiveAlgebra alg_so(int m);
ReductiveAlgebra alg_sp(int m);
ReductiveAlgebra alg_sum(ReductiveAlgebra a, const ReductiveAlgebra& b);
ReductiveAlgebra alg_center(int dim);

// Serialize the whole catalog (families, presentations, beta expressions,
// dimensions) as a JSON string for auditing.
std::string catalog_json();

}  // namespace dfv

#endif
