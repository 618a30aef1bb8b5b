#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgw/axioms.hpp"
#include "cgw/examples.hpp"  // PresentationMap (functor data between presentations)

namespace cgw {

struct TruncatedSimplicialSet;  // simplicial.hpp

using BigInt = boost::multiprecision::cpp_int;
// row-major; a matrix with zero rows still remembers its width
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;  // rows*cols entries

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  static IntMatrix identity(int n);
  bool operator==(const IntMatrix&) const = default;
};
IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix mat_from_rows(const std::vector<std::vector<long long>>& rows, int cols = -1);
std::string mat_to_string(const IntMatrix& m);  // row-major, one row per line

// Z^generators modulo the row lattice of `relations`
struct AbelianGroupPresentation {
  std::vector<std::string> generators;
  IntMatrix relations;  // width == generators.size()
};

// isomorphism class of a finitely generated abelian group:
// Z^rank ⊕ Z/d1 ⊕ ... with d1 | d2 | ..., every di >= 2
struct SmithInvariants {
  std::vector<BigInt> invariant_factors;
  int rank = 0;
  bool operator==(const SmithInvariants&) const = default;
  bool trivial() const { return rank == 0 && invariant_factors.empty(); }
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/4", ...
};

// d = u * input * v with u, v unimodular; diagonal d with divisibility chain
struct SmithDecomposition {
  IntMatrix d, u, v;
  IntMatrix u_inv, v_inv;
  int rank = 0;  // number of nonzero diagonal entries
};
SmithDecomposition smith_decompose(const IntMatrix& m);

// cokernel shape of `m` read as a relation matrix (rows = relations):
// invariants of Z^cols / rowspace(m)
SmithInvariants smith_normal_form(const IntMatrix& m);
SmithInvariants presentation_invariants(const AbelianGroupPresentation& g);

// is v in the row lattice of the decomposed matrix?
bool in_row_lattice(const SmithDecomposition& dec, const std::vector<BigInt>& v);

// saturated basis of {x : x * m = 0} as rows (may have zero rows)
IntMatrix left_kernel_basis(const IntMatrix& m);

// invariants of rowspace(lattice) / rowspace(sub); rows of `sub` must lie in
// the lattice
SmithInvariants lattice_quotient_invariants(const IntMatrix& lattice, const IntMatrix& sub);

// relators are words over signed letters: +(i+1) = generator i, -(i+1) = its inverse
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<int>> relators;
};

AbelianGroupPresentation abelianize(const GroupPresentation& g);

struct K0Options {
  bool basepoint_relation = true;  // adds the relation [zero] = 0
  bool assume_axioms = false;      // skip the category-axiom gate
};

// generators = objects; one relation BL + TR - TL - BR per distinguished
// square, plus the basepoint relation unless disabled
AbelianGroupPresentation k0_presentation(const CgwPresentation& p, const K0Options& opts = {});

// map on K0 presentations induced by functor data `f` (entries source -> target);
// the functor is verified (families, identities, composition, zero, phi,
// square kinds, cokernel/kernel tables) and the generator matrix is checked to
// send source relations into the target relation lattice
struct KZeroMap {
  AbelianGroupPresentation source, target;
  IntMatrix matrix;  // rows = source generators, cols = target generators
  SmithInvariants kernel, cokernel;
  bool is_isomorphism() const { return kernel.trivial() && cokernel.trivial(); }
};
KZeroMap induced_k0_map(const CgwPresentation& src, const CgwPresentation& dst,
                        const PresentationMap& f, const K0Options& opts = {});

// hypotheses of the devissage theorem for the full subcategory on subA, then
// (when they hold) the K0 consequence.  Clauses: "subobjects", "quotients",
// "pushout-creation", "filtration", "k0-isomorphism".
struct DevissageResult {
  AxiomReport report;
  // object name -> m-morphism ids of a filtration from the zero object
  std::vector<std::pair<std::string, std::vector<std::string>>> filtrations;
  std::optional<KZeroMap> k0;
};
DevissageResult devissage_check(const CgwPresentation& pB, const SubcategorySpec& subA);

// edge-path presentation of pi_1 of the basepoint component: spanning tree by
// breadth-first search with lexicographic tie-breaking; generators = non-tree
// non-degenerate edges; relators kill tree and degenerate edges and impose
// (d2)(d0)(d1)^-1 per non-degenerate 2-simplex
GroupPresentation edge_path_group(const TruncatedSimplicialSet& ss, const std::string& basepoint);

// pi_1(nerve of Q(p)) abelianized must match the square-relation presentation
AxiomReport k0_cross_check(const CgwPresentation& p, const SizeCaps& caps = SizeCaps::from_env());

// K0-level exactness of A -> C -> C\A (implemented with the quotient builder)
struct LocalizationExactness {
  AxiomReport report;  // clauses: composite-zero, surjectivity, cokernel-match
  KZeroMap inclusion;   // K0(A)  -> K0(C)
  KZeroMap projection;  // K0(C)  -> K0(C\A)
  SmithInvariants cokernel;  // coker(K0(A) -> K0(C))
  SmithInvariants quotient;  // K0(C\A)
};
LocalizationExactness localization_exactness_check(const CgwPresentation& pC,
                                                   const SubcategorySpec& subA);

}  // namespace cgw
