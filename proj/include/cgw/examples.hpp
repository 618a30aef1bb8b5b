#pragma once

#include <map>

#include "cgw/axioms.hpp"

namespace cgw {

// Finite topological space presented by its specialization preorder:
// (x, y) in `below` means x lies in the closure of {y}.  Open subspaces are
// the up-closed subsets, closed subspaces the down-closed ones.
struct SpaceData {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> below;
  // Optional: restrict the objects to the homeomorphism classes of the listed
  // subspaces (point-index lists).  Empty list = every class.  The empty
  // subspace is always included.
  std::vector<std::vector<int>> object_filter;
  std::vector<long> rank_cap;  // boundary-tagging cap; default {#points}
};

struct BuilderSpec {
  std::string kind;  // finset | finset_based | vect_f2 | finite_space | product | negative
  int size = 0;      // finset / finset_based
  int dim = 0;       // vect_f2
  SpaceData space;   // finite_space
  std::vector<BuilderSpec> factors;  // product
};

CgwPresentation finset(int n);        // n <= 4
CgwPresentation finset_based(int n);  // n <= 3
CgwPresentation vect_f2(int d);       // d <= 2
CgwPresentation finite_space(const SpaceData& space);  // <= 6 points
CgwPresentation product_presentation(const CgwPresentation& a, const CgwPresentation& b);
CgwPresentation build_example(const BuilderSpec& spec);

SpaceData sierpinski_space();
SpaceData discrete_space(int n);

// Regression fixture: a finite-space object list that is complement-closed
// but misses the class of some intersection of closed subobjects; fails
// axiom (P) on a named cospan while the kernel-level axioms still hold.
CgwPresentation negative_p_fixture();

// Renaming tables between two presentations; used to certify that a builder
// dictionary is an isomorphism of the full structures.
struct PresentationMap {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> e_morphisms;
  std::map<std::string, std::string> m_morphisms;
};

// Checks that `map` is a bijective, structure-preserving dictionary a -> b:
// objects, both morphism families, sources/targets, composition tables,
// squares with their kinds, the zero object, phi pairs and the c/k tables.
ValidationReport check_presentation_isomorphism(const CgwPresentation& a,
                                                const CgwPresentation& b,
                                                const PresentationMap& map);

// Dictionary sending finset(n) to the family-swap of finset_based(n):
// an injection acting as an e-morphism corresponds to a based injection,
// and acting as an m-morphism to the collapse map onto its complement.
PresentationMap finset_based_dictionary(int n);

}  // namespace cgw
