#ifndef DFV_SPHERICAL_HPP
#define DFV_SPHERICAL_HPP

/* Sphericity of highest-weight modules under the Borel of their reductive
   acting algebra, decided two independent ways: exact rank of the Borel
   action at a deterministic generic rational point on an explicit matrix
   realization, and lookup in an encoded multiplicity-free classification
   with saturation conditions on the central torus. */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfv/matq.hpp"
#include "dfv/rootsys.hpp"
#include "dfv/thetamod.hpp"

namespace dfv {

// Explicit exact matrix model of the acting algebra on the module.
struct ModuleRealization {
  int dim = 0;
  std::vector<std::string> labels;  // one label per basis vector
  // Diagonal matrices: one per Cartan generator (simple coroot) of each
  // simple factor, factors in algebra order, followed by one per central
  // gl_1 direction.  Diagonal entries are the corresponding weight values.
  std::vector<MatQ> cartan;
  // One matrix per positive root of each simple factor (factor order, then
  // root order of the factor's root system).
  std::vector<MatQ> raising;
  // Per basis vector: concatenated simple-coroot pairings of all factors
  // followed by the central coordinates.  Used for consistency checks.
  std::vector<VecQ> weights;
};

struct SphericityVerdict {
  bool spherical = false;
  enum class Method { RankCheck, Table, Hardcoded } method = Method::RankCheck;
  // Human-readable evidence: the generic point summary and achieved rank,
  // or the matched classification entry.
  std::string witness;
};

// Builds the matrix model of the module: every summand must be a tensor
// product over the simple factors of recognised shapes (trivial; natural or
// its dual for the classical types; any irreducible of a rank-one factor;
// symmetric or alternating square of a type-A natural and their duals; the
// alternating cube of C^6; spin or half-spin of an orthogonal factor of
// dimension at most 12).  Throws std::runtime_error("unrealizable: ...")
// for anything else, e.g. modules of exceptional factors.
ModuleRealization realize(const ReductiveAlgebra& alg, const HWModule& m);

// Rank of the span {h.v, e.v, z.v} of the Borel generators applied to a
// deterministic pseudo-random rational point v with integer entries in
// [-1000, 1000] derived from the seed; spherical iff the rank equals dim V.
// Up to three seeds are tried before a non-spherical verdict is returned.
SphericityVerdict is_spherical_rank(const ReductiveAlgebra& alg,
                                    const HWModule& m, std::uint64_t seed);

// Canonicalizes the module (drops trivially-acting factors, normalizes by
// the outer symmetry, drops trivial summands with independent central
// characters) and matches it against the encoded multiplicity-free list,
// resolving torus saturation conditions with the actual central characters.
// nullopt = outside the encoded dictionary.
std::optional<SphericityVerdict> is_spherical_table(const ReductiveAlgebra& alg,
                                                    const HWModule& m);

// Production policy: dimension bound, then rank check when the module is
// realizable, then table lookup; nullopt = undecidable by both methods.
std::optional<SphericityVerdict> decide_sphericity(
    const ReductiveAlgebra& alg, const HWModule& m,
    std::uint64_t seed = 20260822u);

// Multiplicity-freeness of the symmetric powers S^d of the dual module for
// d = 1..dmax (dmax <= 5), computed from exact characters via the power-sum
// recursion and iterated highest-weight peeling.  Entry d-1 of the result
// answers degree d.  Throws when the weight expansion exceeds the cost guard.
std::vector<bool> sym_power_mult_free(const ReductiveAlgebra& alg,
                                      const HWModule& m, int dmax);

}  // namespace dfv

#endif
