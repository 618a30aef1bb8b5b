#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cgw/ktheory.hpp"

namespace cgw {

// simplicial set truncated at level N: simplex ids per level, face maps
// d_i: level n -> n-1 (0 <= i <= n), degeneracies s_i: level n -> n+1 (n < N)
struct TruncatedSimplicialSet {
  int truncation = 0;
  std::vector<std::vector<std::string>> levels;
  std::vector<std::vector<std::vector<int>>> faces;         // faces[n][i][k]
  std::vector<std::vector<std::vector<int>>> degeneracies;  // degeneracies[n][i][k]

  int face(int n, int i, int k) const { return faces[n][i][k]; }
  int degeneracy(int n, int i, int k) const { return degeneracies[n][i][k]; }
  int size(int n) const { return static_cast<int>(levels[n].size()); }
  int index_of(int level, const std::string& id) const;  // -1 when absent
  bool is_degenerate(int n, int k) const;  // lies in the image of a degeneracy
};

// structural well-formedness + every simplicial identity instance that
// type-checks within the truncation
ValidationReport check_simplicial_identities(const TruncatedSimplicialSet& ss);

// nerve of one morphism family read as an ordinary category: n-simplices are
// composable chains (degenerate = chains containing an identity)
TruncatedSimplicialSet nerve(const FiniteDoubleCategory& cat, Family fam, int trunc,
                             const SizeCaps& caps = SizeCaps::from_env());

// nerve of the poset 0 < 1 < ... < k
TruncatedSimplicialSet standard_simplex(int k, int trunc);

struct SDotOptions {
  bool assume_axioms = false;
  SizeCaps caps = SizeCaps::from_env();
};

// levels of the object simplicial set: level n enumerates the staircase
// diagrams C_{ij} (0 <= i <= j <= n) with zero diagonal and every inner
// square distinguished; faces delete a row+column, degeneracies repeat one
TruncatedSimplicialSet s_dot_levels(const CgwPresentation& p, int trunc,
                                    const SDotOptions& opts = {});

// the doubling functor on monotone maps: f: [a] -> [b] (value table, size a+1)
// goes to f^op * f: [2a+1] -> [2b+1] under the identification of the op-join
// with reversed barred elements on top of plain ones
std::vector<int> sd_of_monotone(const std::vector<int>& f, int b);
std::vector<int> monotone_coface(int n, int i);        // delta_i: [n-1] -> [n]
std::vector<int> monotone_codegeneracy(int n, int i);  // sigma_i: [n+1] -> [n]

// (sd X)_k = X_{2k+1} with structure maps along the doubled cofaces and
// codegeneracies; requires input truncation >= 2n+1
TruncatedSimplicialSet edgewise_subdivide(const TruncatedSimplicialSet& ss, int n);

// connected components of the 1-skeleton: component index per vertex,
// numbered by first appearance
std::vector<int> pi0(const TruncatedSimplicialSet& ss);
int pi0_count(const TruncatedSimplicialSet& ss);

// boundary matrices on normalized (non-degenerate) chains in degrees 0..2
struct ChainComplex {
  std::vector<std::string> basis0, basis1, basis2;
  IntMatrix d1, d2;  // one row per edge over basis0 / per triangle over basis1
};
ChainComplex normalized_chains(const TruncatedSimplicialSet& ss);  // needs truncation >= 2

// (H0, H1) as Smith invariants
std::pair<SmithInvariants, SmithInvariants> homology(const TruncatedSimplicialSet& ss);

// abelianized pi_1 of the level-2 staircase set must match the
// square-relation presentation of K0
AxiomReport s_dot_vs_q_check(const CgwPresentation& p, const SizeCaps& caps = SizeCaps::from_env());

}  // namespace cgw
