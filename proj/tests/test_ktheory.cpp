#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "cgw/examples.hpp"
#include "cgw/ktheory.hpp"
#include "cgw/qcat.hpp"
#include "cgw/simplicial.hpp"

using namespace cgw;

namespace {

constexpr Family E = Family::E;
constexpr Family M = Family::M;

SizeCaps big_caps() {
  SizeCaps c;
  c.objects = 4000;
  c.morphisms = 2000000;
  return c;
}

PresentationMap identity_map(const CgwPresentation& p) {
  PresentationMap f;
  for (int o = 0; o < p.cat.n_objects(); ++o) f.objects[p.cat.object(o)] = p.cat.object(o);
  for (int m = 0; m < p.cat.n_mors(M); ++m) f.m_morphisms[p.cat.mor(M, m).id] = p.cat.mor(M, m).id;
  for (int e = 0; e < p.cat.n_mors(E); ++e) f.e_morphisms[p.cat.mor(E, e).id] = p.cat.mor(E, e).id;
  return f;
}

// one-object groupoid on {1, g} with g*g = 1
FiniteDoubleCategory two_torsion_category() {
  RawCategory raw;
  raw.objects = {"x"};
  raw.m_morphisms = {{"id_x", "x", "x"}, {"g", "x", "x"}};
  raw.e_morphisms = {{"id_x", "x", "x"}};
  raw.m_compose = {{"id_x", "id_x", "id_x"},
                   {"id_x", "g", "g"},
                   {"g", "id_x", "g"},
                   {"g", "g", "id_x"}};
  raw.e_compose = {{"id_x", "id_x", "id_x"}};
  return FiniteDoubleCategory::build(raw);
}

template <class F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const std::exception& ex) {
    return ex.what();
  }
  return "";
}

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-9, 9);
  IntMatrix m(rows, cols);
  for (BigInt& v : m.a) v = entry(rng);
  return m;
}

// reorder the edge list of a 2-truncated simplicial set; permutes the BFS
// tie-breaking that edge_path_group sees
TruncatedSimplicialSet permute_edges(const TruncatedSimplicialSet& ss,
                                     const std::vector<int>& perm) {
  TruncatedSimplicialSet out = ss;
  const int ne = ss.size(1);
  std::vector<int> inv(ne);
  for (int e = 0; e < ne; ++e) inv[perm[e]] = e;
  for (int e = 0; e < ne; ++e) out.levels[1][perm[e]] = ss.levels[1][e];
  for (int i = 0; i < 2; ++i)
    for (int e = 0; e < ne; ++e) out.faces[1][i][perm[e]] = ss.faces[1][i][e];
  for (auto& map : out.degeneracies[0])
    for (int& v : map) v = perm[v];
  for (auto& map : out.faces[2])
    for (int& v : map) v = perm[v];
  for (auto& map : out.degeneracies[1]) {
    std::vector<int> moved(map.size());
    for (int e = 0; e < ne; ++e) moved[perm[e]] = map[e];
    map = moved;
  }
  return out;
}

}  // namespace

TEST_CASE("integer matrices multiply and validate") {
  IntMatrix a = mat_from_rows({{1, 2}, {3, 4}});
  CHECK(mat_mul(a, IntMatrix::identity(2)) == a);
  CHECK(mat_mul(IntMatrix::identity(2), a) == a);
  IntMatrix b = mat_from_rows({{1, 0, 2}, {0, 1, 3}});
  IntMatrix ab = mat_mul(a, b);
  CHECK(ab.at(0, 2) == 8);
  CHECK(ab.at(1, 2) == 18);
  CHECK_THROWS_AS(mat_from_rows({{1, 2}, {3}}), InputError);
  CHECK(mat_from_rows({}, 3).cols == 3);
}

TEST_CASE("smith normal form on pinned matrices") {
  CHECK(smith_normal_form(IntMatrix::identity(3)).trivial());
  CHECK(smith_normal_form(IntMatrix::identity(3)).rank == 0);

  SmithInvariants zero2 = smith_normal_form(IntMatrix(2, 2));
  CHECK(zero2.rank == 2);
  CHECK(zero2.invariant_factors.empty());
  CHECK(zero2.to_string() == "Z^2");

  SmithInvariants inv = smith_normal_form(mat_from_rows({{2, 4}, {6, 8}}));
  CHECK(inv.rank == 0);
  REQUIRE(inv.invariant_factors.size() == 2);
  CHECK(inv.invariant_factors[0] == 2);
  CHECK(inv.invariant_factors[1] == 4);

  // divisibility normalization: Z^2 / <2e1, 3e2> = Z/6
  SmithInvariants diag = smith_normal_form(mat_from_rows({{2, 0}, {0, 3}}));
  CHECK(diag.rank == 0);
  REQUIRE(diag.invariant_factors.size() == 1);
  CHECK(diag.invariant_factors[0] == 6);

  // wide and tall shapes
  CHECK(smith_normal_form(mat_from_rows({{0, 0, 5}})).to_string() == "Z^2 ⊕ Z/5");
  CHECK(smith_normal_form(mat_from_rows({{1}, {1}, {1}})).trivial());
}

TEST_CASE("smith decomposition tracks unimodular transforms") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    IntMatrix m = random_matrix(rng, rows, cols);
    SmithDecomposition dec = smith_decompose(m);
    CHECK(mat_mul(mat_mul(dec.u, m), dec.v) == dec.d);
    CHECK(mat_mul(dec.u, dec.u_inv) == IntMatrix::identity(rows));
    CHECK(mat_mul(dec.v, dec.v_inv) == IntMatrix::identity(cols));
    for (int i = 0; i + 1 < dec.rank; ++i)
      CHECK(dec.d.at(i + 1, i + 1) % dec.d.at(i, i) == 0);
  }
}

TEST_CASE("invariant factors ignore row order and sign") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = random_matrix(rng, 3, 3);
    IntMatrix flipped = m;
    for (int j = 0; j < 3; ++j) {
      flipped.at(0, j) = m.at(2, j);
      flipped.at(2, j) = m.at(0, j);
      flipped.at(1, j) = -m.at(1, j);
    }
    CHECK(smith_normal_form(m) == smith_normal_form(flipped));
  }
}

TEST_CASE("row lattice membership") {
  SmithDecomposition dec = smith_decompose(mat_from_rows({{2, 0}, {0, 2}}));
  CHECK(in_row_lattice(dec, {4, 2}));
  CHECK(in_row_lattice(dec, {0, 0}));
  CHECK_FALSE(in_row_lattice(dec, {1, 0}));
  CHECK_FALSE(in_row_lattice(dec, {2, 1}));
  SmithDecomposition tall = smith_decompose(mat_from_rows({{1, 1, 0}}));
  CHECK(in_row_lattice(tall, {3, 3, 0}));
  CHECK_FALSE(in_row_lattice(tall, {1, 0, 0}));
}

TEST_CASE("left kernels are saturated") {
  IntMatrix k = left_kernel_basis(mat_from_rows({{1}, {1}}));
  REQUIRE(k.rows == 1);
  CHECK(mat_mul(k, mat_from_rows({{1}, {1}})) == IntMatrix(1, 1));
  IntMatrix k2 = left_kernel_basis(mat_from_rows({{2}, {0}}));
  REQUIRE(k2.rows == 1);
  CHECK(k2.at(0, 0) == 0);
  BigInt second = k2.at(0, 1);
  CHECK((second == 1 || second == -1));
  CHECK(left_kernel_basis(IntMatrix::identity(3)).rows == 0);
}

TEST_CASE("lattice quotients") {
  CHECK(lattice_quotient_invariants(IntMatrix::identity(2), mat_from_rows({{2, 0}, {0, 3}}))
            .to_string() == "Z/6");
  SmithInvariants q = lattice_quotient_invariants(IntMatrix::identity(2), mat_from_rows({{2, 0}}));
  CHECK(q.rank == 1);
  REQUIRE(q.invariant_factors.size() == 1);
  CHECK(q.invariant_factors[0] == 2);
  // index-2 sublattice of a rank-1 lattice inside Z^2
  CHECK(lattice_quotient_invariants(mat_from_rows({{1, 1}}), mat_from_rows({{2, 2}}))
            .to_string() == "Z/2");
  // sub must land inside the ambient lattice
  CHECK_THROWS_AS(lattice_quotient_invariants(mat_from_rows({{2, 0}}), mat_from_rows({{1, 0}})),
                  ContractError);
}

TEST_CASE("abelianization of word presentations") {
  GroupPresentation free2{{"a", "b"}, {}};
  CHECK(presentation_invariants(abelianize(free2)).to_string() == "Z^2");
  GroupPresentation cyclic{{"a"}, {{1, 1}}};
  CHECK(presentation_invariants(abelianize(cyclic)).to_string() == "Z/2");
  GroupPresentation commutator{{"a", "b"}, {{1, 2, -1, -2}}};
  CHECK(presentation_invariants(abelianize(commutator)).to_string() == "Z^2");
  GroupPresentation bad{{"a"}, {{2}}};
  CHECK_THROWS_AS(abelianize(bad), ContractError);
}

TEST_CASE("class group of the inclusion-based category on small sets") {
  CgwPresentation p = finset(3);
  AbelianGroupPresentation k0 = k0_presentation(p);
  CHECK(k0.generators.size() == 4);
  CHECK(presentation_invariants(k0).to_string() == "Z");

  K0Options nb;
  nb.basepoint_relation = false;
  CHECK(presentation_invariants(k0_presentation(p, nb)).to_string() == "Z^2");

  // [3] = 3[1] holds in the relation lattice; [3] = 2[1] does not
  SmithDecomposition dec = smith_decompose(k0.relations);
  CHECK(in_row_lattice(dec, {0, -3, 0, 1}));
  CHECK_FALSE(in_row_lattice(dec, {0, -2, 0, 1}));
  CHECK(in_row_lattice(dec, {0, -1, -1, 1}));  // [3] = [1] + [2]

  // every square relation sums to zero: corner signs cancel
  AbelianGroupPresentation raw = k0_presentation(p, nb);
  for (int r = 0; r < raw.relations.rows; ++r) {
    BigInt sum = 0;
    for (int c = 0; c < raw.relations.cols; ++c) sum += raw.relations.at(r, c);
    CHECK(sum == 0);
  }
}

TEST_CASE("class groups across the example corpus") {
  CHECK(presentation_invariants(k0_presentation(finset(0))).trivial());
  CHECK(presentation_invariants(k0_presentation(finset(1))).to_string() == "Z");
  CHECK(presentation_invariants(k0_presentation(vect_f2(2))).to_string() == "Z");
  CHECK(presentation_invariants(k0_presentation(finset_based(2))).to_string() == "Z");
  CHECK(presentation_invariants(k0_presentation(finite_space(sierpinski_space()))).to_string() ==
        "Z");
  CgwPresentation square = product_presentation(finset(1), finset(1));
  CHECK(presentation_invariants(k0_presentation(square)).to_string() == "Z^2");
}

TEST_CASE("class group presentations refuse broken inputs") {
  // full subcategory on {0, 1} loses the pushout 1 + 1 and fails the axioms
  CgwPresentation broken = restrict_presentation(finset(3), SubcategorySpec{{"0", "1"}});
  CHECK_THROWS_AS(k0_presentation(broken), InputError);
  CHECK(thrown_message([&] { k0_presentation(broken); })
            .find("requires the category axioms") != std::string::npos);
  K0Options assume;
  assume.assume_axioms = true;
  CHECK_NOTHROW(k0_presentation(broken, assume));
}

TEST_CASE("induced maps on class groups") {
  CgwPresentation p2 = finset(2);
  KZeroMap id_map = induced_k0_map(p2, p2, identity_map(p2));
  CHECK(id_map.is_isomorphism());
  CHECK(id_map.kernel.trivial());
  CHECK(id_map.cokernel.trivial());

  // full subcategory on {0, 1} includes into the ambient category; the
  // restriction drops pushouts, so its class group is taken on faith
  CgwPresentation p3 = finset(3);
  CgwPresentation sub = restrict_presentation(p3, SubcategorySpec{{"0", "1"}});
  K0Options assume;
  assume.assume_axioms = true;
  KZeroMap incl = induced_k0_map(sub, p3, identity_map(sub), assume);
  CHECK(incl.is_isomorphism());

  // first-factor embedding into a product: injective but not surjective
  CgwPresentation p1 = finset(1);
  CgwPresentation square = product_presentation(p1, p1);
  PresentationMap first;
  first.objects = {{"0", "0|0"}, {"1", "1|0"}};
  first.m_morphisms = {{"id_0", "id_0|0"}, {"inj_0_1", "inj_0_1|id_0"}, {"id_1", "id_1|0"}};
  first.e_morphisms = first.m_morphisms;
  KZeroMap emb = induced_k0_map(p1, square, first);
  CHECK(emb.kernel.trivial());
  CHECK(emb.cokernel.to_string() == "Z");
  CHECK_FALSE(emb.is_isomorphism());
  CHECK(emb.matrix.rows == 2);
  CHECK(emb.matrix.cols == 4);
}

TEST_CASE("functor verification rejects non-functors") {
  CgwPresentation p1 = finset(1);
  PresentationMap bad = identity_map(p1);
  bad.m_morphisms["inj_0_1"] = "id_0";  // endpoints disagree
  CHECK(thrown_message([&] { induced_k0_map(p1, p1, bad); }).find("functor rejected") !=
        std::string::npos);

  PresentationMap missing = identity_map(p1);
  missing.objects.erase("1");
  CHECK(thrown_message([&] { induced_k0_map(p1, p1, missing); }).find("functor rejected") !=
        std::string::npos);

  PresentationMap unknown = identity_map(p1);
  unknown.e_morphisms["inj_0_1"] = "nope";
  CHECK(thrown_message([&] { induced_k0_map(p1, p1, unknown); }).find("functor rejected") !=
        std::string::npos);
}

TEST_CASE("devissage accepts the rank filtration of planes over F2") {
  CgwPresentation pv = vect_f2(2);
  SubcategorySpec sub;
  sub.objects = {"F2^0", "F2^1"};
  DevissageResult res = devissage_check(pv, sub);
  CHECK(res.report.pass());
  REQUIRE(res.k0.has_value());
  CHECK(res.k0->is_isomorphism());
  REQUIRE(res.filtrations.size() == 3);
  CHECK(res.filtrations[0].first == "F2^0");
  CHECK(res.filtrations[0].second.empty());
  CHECK(res.filtrations[1].second == std::vector<std::string>{"lin_0_1_0"});
  CHECK(res.filtrations[2].second == std::vector<std::string>{"lin_0_1_0", "lin_1_2_1"});
}

TEST_CASE("devissage rejects a subcategory that skips the line") {
  CgwPresentation pv = vect_f2(2);
  SubcategorySpec sub;
  sub.objects = {"F2^0", "F2^2"};
  DevissageResult res = devissage_check(pv, sub);
  CHECK_FALSE(res.report.pass());
  const AxiomResult* subo = res.report.find("subobjects");
  REQUIRE(subo != nullptr);
  CHECK(subo->status == CheckStatus::Fail);
  REQUIRE_FALSE(subo->witnesses.empty());
  CHECK(subo->witnesses[0].detail.find("lin_1_2_1") != std::string::npos);
  CHECK(subo->witnesses[0].detail.find("F2^1") != std::string::npos);
  // the class-group clause is skipped once the hypotheses fail
  const AxiomResult* k0 = res.report.find("k0-isomorphism");
  REQUIRE(k0 != nullptr);
  CHECK(k0->status == CheckStatus::Skipped);
  CHECK_FALSE(res.k0.has_value());
}

TEST_CASE("devissage on the whole category is trivially exact") {
  CgwPresentation pv = vect_f2(2);
  SubcategorySpec sub;
  sub.objects = {"F2^0", "F2^1", "F2^2"};
  DevissageResult res = devissage_check(pv, sub);
  CHECK(res.report.pass());
  REQUIRE(res.k0.has_value());
  CHECK(res.k0->is_isomorphism());

  CgwPresentation p3 = finset(3);
  SubcategorySpec all;
  for (int o = 0; o < p3.cat.n_objects(); ++o) all.objects.push_back(p3.cat.object(o));
  CHECK(devissage_check(p3, all).report.pass());
}

TEST_CASE("edge-path groups of tiny nerves") {
  // one-object one-morphism nerve: trivial group
  TruncatedSimplicialSet point = nerve(finset(0).cat, M, 2, big_caps());
  GroupPresentation trivial = edge_path_group(point, "0");
  CHECK(trivial.generators.empty());
  CHECK(presentation_invariants(abelianize(trivial)).trivial());

  // one-object groupoid with a 2-torsion loop
  TruncatedSimplicialSet bz2 = nerve(two_torsion_category(), M, 2, big_caps());
  CHECK(bz2.size(0) == 1);
  CHECK(bz2.size(1) == 2);
  CHECK(bz2.size(2) == 4);
  GroupPresentation pi1 = edge_path_group(bz2, "x");
  REQUIRE(pi1.generators.size() == 1);
  REQUIRE(pi1.relators.size() == 1);
  CHECK(pi1.relators[0] == std::vector<int>{1, 1});
  CHECK(presentation_invariants(abelianize(pi1)).to_string() == "Z/2");
}

TEST_CASE("edge-path group guards") {
  TruncatedSimplicialSet one = nerve(finset(1).cat, M, 1, big_caps());
  CHECK_THROWS_AS(edge_path_group(one, "0"), InputError);
  TruncatedSimplicialSet two = nerve(finset(1).cat, M, 2, big_caps());
  CHECK_THROWS_AS(edge_path_group(two, "missing"), InputError);
}

TEST_CASE("edge-path group of the span category matches the class group") {
  QOptions qo;
  qo.caps = big_caps();
  QCategory qc = build_q_category(finset(1), qo);
  TruncatedSimplicialSet nv = nerve(qc.cat, M, 2, big_caps());
  CHECK(nv.size(0) == 2);
  CHECK(nv.size(1) == 4);
  CHECK(nv.size(2) == 6);
  GroupPresentation pi1 = edge_path_group(nv, "0");
  CHECK(pi1.generators.size() == 1);
  CHECK(pi1.relators.empty());
  CHECK(presentation_invariants(abelianize(pi1)).to_string() == "Z");
}

TEST_CASE("edge-path abelianization is independent of edge order") {
  QOptions qo;
  qo.caps = big_caps();
  for (int variant = 0; variant < 2; ++variant) {
    CgwPresentation p = variant == 0 ? finset(2) : vect_f2(2);
    QCategory qc = build_q_category(p, qo);
    TruncatedSimplicialSet nv = nerve(qc.cat, M, 2, big_caps());
    SmithInvariants base =
        presentation_invariants(abelianize(edge_path_group(nv, p.cat.object(p.zero))));
    std::mt19937 rng(99 + variant);
    std::vector<int> perm(nv.size(1));
    for (int i = 0; i < nv.size(1); ++i) perm[i] = i;
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      TruncatedSimplicialSet shuffled = permute_edges(nv, perm);
      REQUIRE(check_simplicial_identities(shuffled).ok());
      SmithInvariants again =
          presentation_invariants(abelianize(edge_path_group(shuffled, p.cat.object(p.zero))));
      CHECK(base == again);
    }
  }
}

TEST_CASE("loop-group cross-check agrees on the corpus") {
  CHECK(k0_cross_check(finset(1), big_caps()).pass());
  CHECK(k0_cross_check(finset(2), big_caps()).pass());
  CHECK(k0_cross_check(vect_f2(1), big_caps()).pass());
  CHECK(k0_cross_check(vect_f2(2), big_caps()).pass());
  CHECK(k0_cross_check(finite_space(sierpinski_space()), big_caps()).pass());
  CHECK(k0_cross_check(finset_based(2), big_caps()).pass());
}
