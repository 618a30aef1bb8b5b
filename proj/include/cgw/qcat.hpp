#pragma once

#include "cgw/axioms.hpp"

namespace cgw {

// A morphism-of-spans datum A ~> X >-> B: collapse onto the middle, then embed.
// The middle is dst(e_leg) == src(m_leg).
struct SpanDiagram {
  int e_leg = -1;
  int m_leg = -1;
  friend bool operator==(const SpanDiagram& a, const SpanDiagram& b) {
    return a.e_leg == b.e_leg && a.m_leg == b.m_leg;
  }
};

// Equivalence class of spans with fixed endpoints.  Representatives are closed
// under the middle-isomorphism relation and sorted by (middle object id,
// e-leg id, m-leg id); canonical_rep is the least one.
struct QMorphism {
  int src = -1;
  int dst = -1;
  std::vector<SpanDiagram> representatives;
  SpanDiagram canonical_rep;
};

struct QCategory {
  std::vector<QMorphism> morphisms;      // class index order (construction order)
  std::vector<std::vector<int>> hom;     // src * n_objects + dst -> class indices
  std::vector<int> compose_table;        // dense u * n + v -> class index, -1 undefined
  std::vector<int> identity_class;       // per object
  FiniteDoubleCategory cat;              // the generated ordinary category (m-family)
  ValidationReport report;               // construction notes + category law validation

  int n_objects = 0;
  int compose(int u, int v) const { return compose_table[static_cast<size_t>(u) * morphisms.size() + v]; }
  const std::vector<int>& hom_classes(int src, int dst) const {
    return hom[static_cast<size_t>(src) * n_objects + dst];
  }
  int class_of(const SpanDiagram& s) const;  // -1 when the span is unknown
};

// Middle-iso relation: some iso pair X -> X' makes the source triangle commute
// in the e-family and the target triangle commute in the m-family.  False when
// the endpoints differ.  Exhaustive search over iso pairs.
bool spans_equivalent(const CgwPresentation& p, const SpanDiagram& s1, const SpanDiagram& s2);

// The full equivalence class seeded by one span.
QMorphism q_class_of(const CgwPresentation& p, const SpanDiagram& s);

QMorphism q_identity(const CgwPresentation& p, int obj);

// Composite class via the distinguished-square completion of m_leg(u) against
// e_leg(v); the completion is recomputed (and its uniqueness re-certified) on
// every call.  Throws ContractError when endpoints mismatch or no unique
// completion exists.
QMorphism q_compose(const CgwPresentation& p, const QMorphism& u, const QMorphism& v);

struct QOptions {
  // Build even when the category axioms are not verified; composition gaps are
  // then recorded in the report instead of rejecting the input.
  bool assume_completion = false;
  SizeCaps caps = SizeCaps::from_env();
};

// All hom-sets as equivalence classes plus the composition table.  Category
// laws are validated post hoc on the generated ordinary category.  Throws
// InputError when the axioms fail (unless assume_completion) or a size cap is
// exceeded.
QCategory build_q_category(const CgwPresentation& p, const QOptions& opts = {});

// True iff both legs of the canonical representative are isomorphisms.  Always
// cross-checked against a brute-force two-sided-inverse search over spans;
// disagreement throws ContractError.
bool q_is_iso(const CgwPresentation& p, const QMorphism& u);

// Slice category over B vs the two-step filtration category L_B (objects:
// chains B1 >-> B2 >-> B).  Verifies: the slice is a preorder, the filtration
// category is a preorder, and the comparison functor (kernel of the e-leg,
// then the m-leg) is fully faithful and essentially surjective.
AxiomReport slice_preorder_check(const CgwPresentation& p, int B);

}  // namespace cgw
