#pragma once

#include <optional>

#include "cgw/core.hpp"

namespace cgw {

struct CkEntry {
  int obj = -1;  // kernel/cokernel object
  int mor = -1;  // g^k: obj >-> dst(g)  (resp. f^c: obj ~> dst(f))
};

struct CkAssignment {
  std::vector<CkEntry> k;  // indexed by e-morphism
  std::vector<CkEntry> c;  // indexed by m-morphism
};

struct PhiPairing {
  bool identity = false;
  std::vector<std::pair<int, int>> pairs;  // (e-iso, m-iso); ignored when identity
};

struct IsoPair {
  int e = -1;
  int m = -1;
};

// Per-object "size" vectors for truncation-boundary tagging; empty = no tagging.
struct RankData {
  std::vector<std::vector<long>> rank;
  std::vector<long> cap;
  bool enabled() const { return !cap.empty(); }
  bool exceeds(const std::vector<long>& v) const;
  std::vector<long> of(int obj) const { return rank[obj]; }
};

struct CgwPresentation {
  FiniteDoubleCategory cat;
  PhiPairing phi;
  CkAssignment ck;
  int zero = -1;
  RankData rank;

  std::vector<int> phi_e_to_m;  // -1 on non-isos
  std::vector<int> phi_m_to_e;
  std::vector<IsoPair> iso_pairs;

  void resolve_phi();  // fills the maps above; throws InputError when malformed
  int phi_em(int e) const { return phi_e_to_m[e]; }
  int phi_me(int m) const { return phi_m_to_e[m]; }
  const CkEntry& k_of(int e_mor) const;
  const CkEntry& c_of(int m_mor) const;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct AxiomResult {
  std::string axiom;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Violation> witnesses;
  bool only_boundary() const;
  void witness(std::string detail, bool boundary = false);
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  void add(AxiomResult r) { results.push_back(std::move(r)); }
  bool pass() const;
  bool only_boundary() const;  // at least one witness, every witness boundary-tagged
  const AxiomResult* find(const std::string& axiom) const;
};

ValidationReport validate_phi(const CgwPresentation& p);
ValidationReport validate_ck_tables(const CgwPresentation& p);  // totality + typing + round trips

AxiomResult check_zero(const CgwPresentation& p);
AxiomResult check_axiom_i(const CgwPresentation& p);
AxiomResult check_monic(const CgwPresentation& p);
AxiomResult check_kernels(const CgwPresentation& p);
AxiomResult check_axiom_a(const CgwPresentation& p);

// k on Ar-square morphisms of e-type, c on m-type: derived unique fills per square.
struct SquareFills {
  std::vector<int> k_fill;  // per square index: m-morphism kernel(left) >-> kernel(right); -1 n/a
  std::vector<int> c_fill;  // per square index: e-morphism coker(top) ~> coker(bottom); -1 n/a
  ValidationReport report;
};
SquareFills derive_ck_on_squares(const CgwPresentation& p, SquareKind kind = SquareKind::Distinguished);

AxiomResult check_ck_equivalences(const CgwPresentation& p);

struct MixedCompletion {
  bool found = false;
  Square square;
  ValidationReport report;
};
// m-then-e: f: A>->B, g: B~>C; the distinguished square (top=f, right=g, left: A~>D, bottom: D>->C)
MixedCompletion complete_me(const CgwPresentation& p, int f, int g);
// e-then-m: f: A~>B, g: B>->C; the distinguished square (top: A>->D, left=f, right: D~>C, bottom=g)
MixedCompletion complete_em(const CgwPresentation& p, int f, int g);
MixedCompletion mixed_square_complete(const CgwPresentation& p, Family first_family, int f, int g);

struct InducedMorphism {
  bool found = false;
  int mor = -1;
  ValidationReport report;
};
// f: C>->B, g: B>->A: the induced e-morphism coker(g) ~> coker(g after f) over A
InducedMorphism cokernel_of_composite(const CgwPresentation& p, int f, int g);
// dual: f: C~>B, g: B~>A: induced m-morphism ker(g) >-> ker(g after f)
InducedMorphism kernel_of_composite(const CgwPresentation& p, int f, int g);

struct MixedPullbackResult {
  bool found = false;
  int obj = -1;    // W = A (*)_C B
  int e_leg = -1;  // W ~> A
  int m_leg = -1;  // W >-> B
  Square square;   // stored commutative square (top=m_leg, bottom=f, left=e_leg, right=g)
  ValidationReport report;
};
// f: A>->C (m), g: B~>C (e)
MixedPullbackResult mixed_pullback(const CgwPresentation& p, int f, int g);

AxiomResult check_axiom_p(const CgwPresentation& p);
AxiomResult check_axiom_u(const CgwPresentation& p);
AxiomResult check_axiom_s(const CgwPresentation& p);
AxiomReport check_pre_acgw(const CgwPresentation& p);
AxiomResult check_acgw_pp(const CgwPresentation& p);

AxiomResult check_kernel_cube(const CgwPresentation& p);        // six-face cube construction
AxiomResult check_square_iso_transfer(const CgwPresentation& p);  // bottom iso => top iso, and dual

AxiomReport check_cgw(const CgwPresentation& p);
enum class AxiomLevel { Cgw, PreAcgw, Acgw };
AxiomReport check_axioms(const CgwPresentation& p, AxiomLevel level);

struct SubcategorySpec {
  std::vector<std::string> objects;  // full subcategory on these
};
AxiomReport check_subcategory_closure(const CgwPresentation& p, const SubcategorySpec& sub);
bool in_subcategory(const CgwPresentation& p, const SubcategorySpec& sub, int obj);
AxiomResult check_one_of_three(const CgwPresentation& p, const SubcategorySpec& sub);

// restriction of p to the full subcategory (inherits phi/ck/zero); throws InputError
// when ck leaves the subcategory or zero is absent
CgwPresentation restrict_presentation(const CgwPresentation& p, const SubcategorySpec& sub);

// family-swapped presentation: the two morphism families trade places (indices
// preserved), every square is transposed, the k/c tables swap, phi inverts.
// Checks about one family apply to the other family of the transpose.
CgwPresentation transpose_presentation(const CgwPresentation& p);

// all isomorphism pairs (e, m) from src to dst, in e-index order
std::vector<IsoPair> iso_pairs_between(const CgwPresentation& p, int src, int dst);

}  // namespace cgw
