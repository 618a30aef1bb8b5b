#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace cgw {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Family : int { E = 0, M = 1 };

constexpr int fam_i(Family f) { return static_cast<int>(f); }
inline Family other_family(Family f) { return f == Family::E ? Family::M : Family::E; }
inline const char* family_name(Family f) { return f == Family::E ? "e" : "m"; }

enum class SquareKind : int { Commutative = 0, Distinguished = 1 };

struct Morphism {
  std::string id;
  int src = -1;
  int dst = -1;
};

// Orientation: m-morphisms run left-to-right (top TL->TR, bottom BL->BR),
// e-morphisms run top-to-bottom (left TL->BL, right TR->BR).
struct Square {
  SquareKind kind;
  int top = -1;     // M
  int bottom = -1;  // M
  int left = -1;    // E
  int right = -1;   // E
};

using SquareKey = std::array<int, 4>;  // top, bottom, left, right
inline SquareKey square_key(const Square& s) { return {s.top, s.bottom, s.left, s.right}; }

struct Violation {
  std::string code;
  std::string detail;
  bool boundary = false;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool only_boundary() const;
  void add(std::string code, std::string detail, bool boundary = false);
  void merge(const ValidationReport& other);
};

// String-keyed description, mirroring the JSON document layout.
struct RawMorphism {
  std::string id, src, dst;
};
struct RawCompose {
  std::string first, second, result;
};
struct RawSquare {
  std::string kind, top, bottom, left, right;
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> e_morphisms, m_morphisms;
  std::vector<RawCompose> e_compose, m_compose;
  std::vector<RawSquare> squares;
};

struct SizeCaps {
  int objects = 12;
  int morphisms = 128;
  bool force = false;
  static SizeCaps from_env();  // reads CGW_SIZE_CAP ("N" or "N,M")
};

class FiniteDoubleCategory {
 public:
  static FiniteDoubleCategory build(const RawCategory& raw, const SizeCaps& caps = SizeCaps::from_env());

  int n_objects() const { return static_cast<int>(objects_.size()); }
  const std::string& object(int i) const { return objects_[i]; }
  int object_index(const std::string& id) const;
  int object_index_checked(const std::string& id) const;

  int n_mors(Family f) const { return static_cast<int>(mors_[fam_i(f)].size()); }
  const Morphism& mor(Family f, int i) const { return mors_[fam_i(f)][i]; }
  int mor_index(Family f, const std::string& id) const;
  int mor_index_checked(Family f, const std::string& id) const;

  // "first then second" (diagrammatic); -1 when the table has no entry.
  int compose(Family f, int first, int second) const;
  int compose_checked(Family f, int first, int second) const;
  int identity(Family f, int obj) const { return identity_[fam_i(f)][obj]; }

  const std::vector<Square>& squares() const { return squares_; }
  // present with at least the requested strength (distinguished counts as commutative)
  bool has_square(SquareKind at_least, int top, int bottom, int left, int right) const;
  std::optional<SquareKind> square_kind(int top, int bottom, int left, int right) const;
  const std::vector<int>& squares_with_top(int m) const { return by_top_[m]; }
  const std::vector<int>& squares_with_bottom(int m) const { return by_bottom_[m]; }
  const std::vector<int>& squares_with_left(int e) const { return by_left_[e]; }
  const std::vector<int>& squares_with_right(int e) const { return by_right_[e]; }

  const std::vector<int>& hom(Family f, int src, int dst) const;

  bool is_monic(Family f, int m) const;
  int inverse(Family f, int m) const;  // -1 when not invertible
  bool is_iso(Family f, int m) const { return inverse(f, m) >= 0; }
  std::vector<int> isomorphisms(Family f) const;

  int square_tl(const Square& s) const { return mor(Family::M, s.top).src; }
  int square_tr(const Square& s) const { return mor(Family::M, s.top).dst; }
  int square_bl(const Square& s) const { return mor(Family::M, s.bottom).src; }
  int square_br(const Square& s) const { return mor(Family::M, s.bottom).dst; }

  std::string describe_square(const Square& s) const;
  RawCategory to_raw() const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> mors_[2];
  std::vector<int> comp_[2];  // dense n*n, -1 = undefined
  std::vector<Square> squares_;

  std::unordered_map<std::string, int> object_index_;
  std::unordered_map<std::string, int> mor_index_[2];
  std::vector<int> identity_[2];
  std::vector<int> inverse_[2];
  std::map<SquareKey, SquareKind> square_map_;
  std::vector<std::vector<int>> by_top_, by_bottom_, by_left_, by_right_;
  std::vector<std::vector<int>> hom_[2];  // src*n_objects+dst -> morphism indices

  void index();
  friend FiniteDoubleCategory saturate(const FiniteDoubleCategory&);
};

ValidationReport validate_category(const FiniteDoubleCategory& cat, Family f);
// both families + square well-formedness + pasting/iso-inversion closure
ValidationReport validate_double_category(const FiniteDoubleCategory& cat);
ValidationReport check_pasting_closure(const FiniteDoubleCategory& cat);
ValidationReport check_iso_inversion(const FiniteDoubleCategory& cat);

// horizontal: s2 sits to the right of s1 (s1.right == s2.left);
// vertical: s2 sits below s1 (s1.bottom == s2.top).
std::optional<Square> try_paste(const FiniteDoubleCategory& cat, const Square& s1, const Square& s2,
                                bool horizontal);
Square paste_squares(const FiniteDoubleCategory& cat, const Square& s1, const Square& s2, bool horizontal);
// closes the square set under pasting (kinds propagated); returns a new category
FiniteDoubleCategory saturate(const FiniteDoubleCategory& cat);

struct ConeResult {
  int apex = -1;
  int leg1 = -1;  // ... -> A (pullback) / A -> ... (pushout)
  int leg2 = -1;
};
struct LimitSearch {
  std::optional<ConeResult> result;      // first universal cone in enumeration order
  std::vector<ConeResult> all_universal; // ambiguity record
};

// cospan f: A->C, g: B->C (dst(f)==dst(g)); legs leg1: P->A, leg2: P->B
LimitSearch pullback(const FiniteDoubleCategory& cat, Family fam, int f, int g);
// span f: A->B, g: A->C (src(f)==src(g)); legs leg1: B->P, leg2: C->P
LimitSearch pushout(const FiniteDoubleCategory& cat, Family fam, int f, int g);
// does the given cone/cocone satisfy the universal property for the cospan/span (f,g)?
bool is_pullback_cone(const FiniteDoubleCategory& cat, Family fam, int f, int g, int leg1, int leg2);
bool is_pushout_cocone(const FiniteDoubleCategory& cat, Family fam, int f, int g, int leg1, int leg2);

FiniteDoubleCategory product_category(const FiniteDoubleCategory& c1, const FiniteDoubleCategory& c2,
                                      const std::string& sep = "|");

// full subcategory on the given objects: all morphisms between them, all squares with corners inside
RawCategory full_subcategory_raw(const FiniteDoubleCategory& cat, const std::vector<std::string>& object_ids);

}  // namespace cgw
