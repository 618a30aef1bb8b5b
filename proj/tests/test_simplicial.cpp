#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "cgw/examples.hpp"
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

template <class F>
std::string thrown_message(F&& f) {
  try {
    f();
  } catch (const std::exception& ex) {
    return ex.what();
  }
  return "";
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

// Free simplicial set on a handful of nondegenerate cells.  A simplex is a
// normal form (monotone surjection onto the base's dimension, base cell); the
// structure maps compose tables and peel off faces for every missed value.
struct FreeFill {
  struct Cell {
    int dim = 0;
    std::vector<std::pair<std::vector<int>, std::string>> faces;  // normal forms
  };
  std::map<std::string, Cell> cells;

  using NF = std::pair<std::vector<int>, std::string>;

  void vertex(const std::string& id) { cells[id] = {0, {}}; }
  void cell(const std::string& id, std::vector<std::pair<std::vector<int>, std::string>> faces) {
    cells[id] = {static_cast<int>(faces.size()) - 1, std::move(faces)};
  }

  NF normalize(std::vector<int> u, std::string base) const {
    while (true) {
      int d = cells.at(base).dim;
      int missed = -1;
      std::vector<char> hit(d + 1, 0);
      for (int v : u) hit[v] = 1;
      for (int v = d; v >= 0; --v)
        if (!hit[v]) {
          missed = v;
          break;
        }
      if (missed < 0) return {u, base};
      const NF& face = cells.at(base).faces[missed];
      std::vector<int> next(u.size());
      for (size_t i = 0; i < u.size(); ++i) {
        int v = u[i] > missed ? u[i] - 1 : u[i];
        next[i] = face.first[v];
      }
      u = std::move(next);
      base = face.second;
    }
  }

  NF apply(const std::vector<int>& g, const NF& x) const {
    std::vector<int> u(g.size());
    for (size_t i = 0; i < g.size(); ++i) u[i] = x.first[g[i]];
    return normalize(std::move(u), x.second);
  }

  static std::string nf_id(const NF& x) {
    std::string id = x.second;
    for (int v : x.first) id += "|" + std::to_string(v);
    return id;
  }

  TruncatedSimplicialSet build(int trunc) const {
    TruncatedSimplicialSet out;
    out.truncation = trunc;
    out.levels.resize(trunc + 1);
    out.faces.resize(trunc + 1);
    out.degeneracies.resize(trunc + 1);
    std::vector<std::vector<NF>> data(trunc + 1);
    std::vector<std::map<std::string, int>> index(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
      for (const auto& [id, c] : cells) {
        if (c.dim > n) continue;
        // monotone surjections [n] ->> [dim]: choose the increment positions
        std::vector<int> incr(c.dim);
        for (int i = 0; i < c.dim; ++i) incr[i] = i;
        while (true) {
          // value at pos = number of increment gaps strictly before pos
          std::vector<int> table(n + 1, 0);
          for (int pos = 1; pos <= n; ++pos) {
            table[pos] = table[pos - 1];
            for (int i = 0; i < c.dim; ++i)
              if (incr[i] == pos - 1) table[pos] = table[pos - 1] + 1;
          }
          NF nf{table, id};
          index[n][nf_id(nf)] = static_cast<int>(data[n].size());
          data[n].push_back(nf);
          out.levels[n].push_back(nf_id(nf));
          int t = c.dim - 1;
          while (t >= 0 && incr[t] == n - c.dim + t) --t;
          if (t < 0) break;
          ++incr[t];
          for (int i = t + 1; i < c.dim; ++i) incr[i] = incr[i - 1] + 1;
        }
      }
    }
    for (int n = 1; n <= trunc; ++n) {
      out.faces[n].assign(n + 1, std::vector<int>(data[n].size(), -1));
      for (int i = 0; i <= n; ++i)
        for (size_t k = 0; k < data[n].size(); ++k)
          out.faces[n][i][k] =
              index[n - 1].at(nf_id(apply(monotone_coface(n, i), data[n][k])));
    }
    for (int n = 0; n < trunc; ++n) {
      out.degeneracies[n].assign(n + 1, std::vector<int>(data[n].size(), -1));
      for (int i = 0; i <= n; ++i)
        for (size_t k = 0; k < data[n].size(); ++k)
          out.degeneracies[n][i][k] =
              index[n + 1].at(nf_id(apply(monotone_codegeneracy(n, i), data[n][k])));
    }
    return out;
  }
};

FreeFill circle_cells() {
  FreeFill f;
  f.vertex("v");
  f.cell("e", {{{0}, "v"}, {{0}, "v"}});
  return f;
}

FreeFill wedge_cells() {
  FreeFill f;
  f.vertex("v");
  f.cell("e1", {{{0}, "v"}, {{0}, "v"}});
  f.cell("e2", {{{0}, "v"}, {{0}, "v"}});
  return f;
}

FreeFill sphere_cells() {
  FreeFill f;
  f.vertex("v");
  f.cell("t", {{{0, 0}, "v"}, {{0, 0}, "v"}, {{0, 0}, "v"}});
  return f;
}

// Exhaustive staircase census: fill every step slot independently and keep
// the assignments whose composed window squares are all stored distinguished.
// Shares only the core category with the production enumeration.
struct NaiveStairs {
  const CgwPresentation& p;
  int n;
  std::vector<std::vector<int>> mstep, estep, win;
  std::set<std::string> ids;

  NaiveStairs(const CgwPresentation& pp, int nn) : p(pp), n(nn) {
    mstep.assign(n + 1, std::vector<int>(n + 1, -1));
    estep.assign(n + 1, std::vector<int>(n + 1, -1));
    win.assign(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i <= n; ++i) win[i][i] = p.zero;
    if (n == 0) {
      ids.insert("pt");
      return;
    }
    fill_m(0, 0);
  }

  int mcomp(int i, int j, int k) const {
    int cur = p.cat.identity(M, win[i][j]);
    for (int t = j; t < k; ++t) cur = p.cat.compose_checked(M, cur, mstep[i][t]);
    return cur;
  }
  int ecomp(int i, int l, int j) const {
    int cur = p.cat.identity(E, win[l][j]);
    for (int t = l - 1; t >= i; --t) cur = p.cat.compose_checked(E, cur, estep[t][j]);
    return cur;
  }

  void fill_m(int i, int j) {
    if (i > n - 1) {
      fill_e(0, 1);
      return;
    }
    int ni = j + 1 > n - 1 ? i + 1 : i;
    int nj = j + 1 > n - 1 ? i + 1 : j + 1;
    for (int m = 0; m < p.cat.n_mors(M); ++m) {
      if (p.cat.mor(M, m).src != win[i][j]) continue;
      mstep[i][j] = m;
      win[i][j + 1] = p.cat.mor(M, m).dst;
      fill_m(ni, nj);
    }
    mstep[i][j] = -1;
  }

  void fill_e(int i, int j) {
    if (i > n - 1) {
      if (valid()) ids.insert(id());
      return;
    }
    int ni = j + 1 > n ? i + 1 : i;
    int nj = j + 1 > n ? i + 2 : j + 1;
    for (int e : p.cat.hom(E, win[i + 1][j], win[i][j])) {
      estep[i][j] = e;
      fill_e(ni, nj);
    }
    estep[i][j] = -1;
  }

  bool valid() const {
    for (int i = 0; i < n; ++i)
      for (int l = i + 1; l <= n; ++l)
        for (int j = l; j < n; ++j)
          for (int k = j + 1; k <= n; ++k)
            if (!p.cat.has_square(SquareKind::Distinguished, mcomp(l, j, k), mcomp(i, j, k),
                                  ecomp(i, l, j), ecomp(i, l, k)))
              return false;
    return true;
  }

  std::string id() const {
    std::string out = "m:";
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) out += p.cat.mor(M, mstep[i][j]).id + ",";
    out += "e:";
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j <= n; ++j) out += p.cat.mor(E, estep[i][j]).id + ",";
    out.pop_back();
    return out;
  }
};

std::vector<int> compose_tables(const std::vector<int>& g, const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

std::vector<int> random_monotone(std::mt19937& rng, int a, int b) {
  std::uniform_int_distribution<int> pick(0, b);
  std::vector<int> f(a + 1);
  for (int& v : f) v = pick(rng);
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<int> level_sizes(const TruncatedSimplicialSet& ss) {
  std::vector<int> out;
  for (int n = 0; n <= ss.truncation; ++n) out.push_back(ss.size(n));
  return out;
}

}  // namespace

TEST_CASE("standard simplices") {
  TruncatedSimplicialSet d1 = standard_simplex(1, 3);
  CHECK(level_sizes(d1) == std::vector<int>{2, 3, 4, 5});
  CHECK(check_simplicial_identities(d1).ok());

  TruncatedSimplicialSet d2 = standard_simplex(2, 3);
  CHECK(level_sizes(d2) == std::vector<int>{3, 6, 10, 15});
  CHECK(check_simplicial_identities(d2).ok());
  int nondeg1 = 0, nondeg2 = 0;
  for (int k = 0; k < d2.size(1); ++k) nondeg1 += d2.is_degenerate(1, k) ? 0 : 1;
  for (int k = 0; k < d2.size(2); ++k) nondeg2 += d2.is_degenerate(2, k) ? 0 : 1;
  CHECK(nondeg1 == 3);
  CHECK(nondeg2 == 1);

  TruncatedSimplicialSet pt = standard_simplex(0, 2);
  CHECK(level_sizes(pt) == std::vector<int>{1, 1, 1});
  CHECK(pt.is_degenerate(1, 0));
  CHECK_THROWS_AS(standard_simplex(-1, 2), InputError);
}

TEST_CASE("nerves of small categories") {
  TruncatedSimplicialSet nv = nerve(finset(1).cat, M, 2, big_caps());
  CHECK(level_sizes(nv) == std::vector<int>{2, 3, 4});
  CHECK(check_simplicial_identities(nv).ok());
  int nondeg = 0;
  for (int k = 0; k < nv.size(1); ++k) nondeg += nv.is_degenerate(1, k) ? 0 : 1;
  CHECK(nondeg == 1);
  for (int k = 0; k < nv.size(2); ++k) CHECK(nv.is_degenerate(2, k));

  TruncatedSimplicialSet bz2 = nerve(two_torsion_category(), M, 3, big_caps());
  CHECK(level_sizes(bz2) == std::vector<int>{1, 2, 4, 8});
  CHECK(check_simplicial_identities(bz2).ok());

  // edge endpoints follow the arrow: d1 = source, d0 = target
  int arrow = nv.index_of(1, "inj_0_1");
  REQUIRE(arrow >= 0);
  CHECK(nv.levels[0][nv.face(1, 1, arrow)] == "0");
  CHECK(nv.levels[0][nv.face(1, 0, arrow)] == "1");
}

TEST_CASE("nerve of the span category on tiny sets") {
  QOptions qo;
  qo.caps = big_caps();
  QCategory qc = build_q_category(finset(1), qo);
  TruncatedSimplicialSet nv = nerve(qc.cat, M, 2, big_caps());
  CHECK(level_sizes(nv) == std::vector<int>{2, 4, 6});
  CHECK(check_simplicial_identities(nv).ok());
  ChainComplex cc = normalized_chains(nv);
  CHECK(cc.basis1.size() == 2);
  CHECK(cc.basis2.empty());
}

TEST_CASE("nerve respects the size cap") {
  QOptions qo;
  qo.caps = big_caps();
  QCategory qc = build_q_category(finset(2), qo);
  SizeCaps tight;
  tight.morphisms = 20;
  CHECK_THROWS_AS(nerve(qc.cat, M, 2, tight), InputError);
  CHECK(thrown_message([&] { nerve(qc.cat, M, 2, tight); }).find("size cap exceeded") !=
        std::string::npos);
  tight.force = true;
  CHECK_NOTHROW(nerve(qc.cat, M, 2, tight));
}

TEST_CASE("free fills satisfy the simplicial identities") {
  TruncatedSimplicialSet circle = circle_cells().build(5);
  CHECK(level_sizes(circle) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(check_simplicial_identities(circle).ok());

  TruncatedSimplicialSet wedge = wedge_cells().build(5);
  CHECK(level_sizes(wedge) == std::vector<int>{1, 3, 5, 7, 9, 11});
  CHECK(check_simplicial_identities(wedge).ok());

  TruncatedSimplicialSet sphere = sphere_cells().build(5);
  CHECK(level_sizes(sphere) == std::vector<int>{1, 1, 2, 4, 7, 11});
  CHECK(check_simplicial_identities(sphere).ok());
}

TEST_CASE("connected components") {
  FreeFill f;
  f.vertex("a");
  f.vertex("b");
  f.vertex("w");
  f.cell("e", {{{0}, "b"}, {{0}, "a"}});  // a -> b
  TruncatedSimplicialSet ss = f.build(1);
  CHECK(check_simplicial_identities(ss).ok());
  CHECK(pi0_count(ss) == 2);
  std::vector<int> comp = pi0(ss);
  CHECK(comp[ss.index_of(0, "a|0")] == comp[ss.index_of(0, "b|0")]);
  CHECK(comp[ss.index_of(0, "a|0")] != comp[ss.index_of(0, "w|0")]);
}

TEST_CASE("homology of the model surfaces") {
  auto [c0, c1] = homology(circle_cells().build(2));
  CHECK(c0.to_string() == "Z");
  CHECK(c1.to_string() == "Z");

  auto [w0, w1] = homology(wedge_cells().build(2));
  CHECK(w0.to_string() == "Z");
  CHECK(w1.to_string() == "Z^2");

  auto [s0, s1] = homology(sphere_cells().build(2));
  CHECK(s0.to_string() == "Z");
  CHECK(s1.trivial());

  auto [n0, n1] = homology(nerve(finset(1).cat, M, 2, big_caps()));
  CHECK(n0.to_string() == "Z");
  CHECK(n1.trivial());

  // 2-torsion loop space: H1 detects the group
  auto [b0, b1] = homology(nerve(two_torsion_category(), M, 2, big_caps()));
  CHECK(b0.to_string() == "Z");
  CHECK(b1.to_string() == "Z/2");

  QOptions qo;
  qo.caps = big_caps();
  auto [q0, q1] = homology(nerve(build_q_category(finset(1), qo).cat, M, 2, big_caps()));
  CHECK(q0.to_string() == "Z");
  CHECK(q1.to_string() == "Z");

  CHECK_THROWS_AS(normalized_chains(standard_simplex(1, 1)), InputError);
}

TEST_CASE("staircase level sizes across the corpus") {
  SDotOptions so;
  so.caps = big_caps();
  CHECK(level_sizes(s_dot_levels(finset(0), 3, so)) == std::vector<int>{1, 1, 1, 1});
  CHECK(level_sizes(s_dot_levels(finset(1), 3, so)) == std::vector<int>{1, 2, 3, 4});
  CHECK(level_sizes(s_dot_levels(finset(2), 3, so)) == std::vector<int>{1, 3, 9, 30});
  CHECK(level_sizes(s_dot_levels(finset(3), 2, so)) == std::vector<int>{1, 4, 33});
  CHECK(level_sizes(s_dot_levels(vect_f2(1), 3, so)) == std::vector<int>{1, 2, 3, 4});
  CHECK(level_sizes(s_dot_levels(vect_f2(2), 2, so)) == std::vector<int>{1, 3, 18});
  CHECK(level_sizes(s_dot_levels(finite_space(sierpinski_space()), 2, so)) ==
        std::vector<int>{1, 3, 6});
}

TEST_CASE("staircase levels agree with the exhaustive census") {
  SDotOptions so;
  so.caps = big_caps();
  auto census = [&](const CgwPresentation& p, int trunc) {
    TruncatedSimplicialSet ss = s_dot_levels(p, trunc, so);
    for (int n = 0; n <= trunc; ++n) {
      NaiveStairs naive(p, n);
      std::set<std::string> got(ss.levels[n].begin(), ss.levels[n].end());
      CHECK(naive.ids == got);
    }
  };
  census(finset(2), 3);
  census(vect_f2(2), 2);
  census(finite_space(sierpinski_space()), 2);
  census(finset_based(2), 2);
}

TEST_CASE("staircase faces and degeneracies act as expected") {
  SDotOptions so;
  so.caps = big_caps();
  CgwPresentation p = finset(2);
  TruncatedSimplicialSet ss = s_dot_levels(p, 2, so);
  CHECK(check_simplicial_identities(ss).ok());
  // every level-1 staircase collapses to the point both ways
  for (int k = 0; k < ss.size(1); ++k) {
    CHECK(ss.levels[0][ss.face(1, 0, k)] == "pt");
    CHECK(ss.levels[0][ss.face(1, 1, k)] == "pt");
  }
  // degenerating the point yields the identity staircase on the zero object
  int dp = ss.degeneracy(0, 0, 0);
  CHECK(ss.levels[1][dp] == "m:id_0,e:id_0");
  // one staircase per object at level 1
  CHECK(ss.size(1) == p.cat.n_objects());
}

TEST_CASE("staircase construction gates its input") {
  CgwPresentation broken = restrict_presentation(finset(3), SubcategorySpec{{"0", "1"}});
  CHECK_THROWS_AS(s_dot_levels(broken, 2), InputError);
  CHECK(thrown_message([&] { s_dot_levels(broken, 2); })
            .find("requires the category axioms") != std::string::npos);
  CHECK_THROWS_AS(s_dot_levels(finset(1), 4), InputError);
  CHECK_THROWS_AS(s_dot_levels(finset(1), -1), InputError);
}

TEST_CASE("staircase levels respect the size cap") {
  SDotOptions tight;
  tight.caps = SizeCaps{};
  CHECK(thrown_message([&] { s_dot_levels(finset(3), 3, tight); }).find("size cap exceeded") !=
        std::string::npos);
  SDotOptions forced;
  forced.caps = SizeCaps{};
  forced.caps.force = true;
  TruncatedSimplicialSet big = s_dot_levels(finset(3), 3, forced);
  CHECK(big.size(3) == 582);
}

TEST_CASE("identity checker pinpoints mutations") {
  TruncatedSimplicialSet nv = nerve(finset(1).cat, M, 2, big_caps());
  REQUIRE(check_simplicial_identities(nv).ok());

  TruncatedSimplicialSet broken_face = nv;
  broken_face.faces[2][1][0] = (broken_face.faces[2][1][0] + 1) % broken_face.size(1);
  ValidationReport r1 = check_simplicial_identities(broken_face);
  CHECK_FALSE(r1.ok());
  bool face_law = false;
  for (const Violation& v : r1.violations)
    face_law |= v.code == "dd-identity" || v.code == "ds-identity";
  CHECK(face_law);

  TruncatedSimplicialSet broken_degen = nv;
  broken_degen.degeneracies[0][0][0] = (broken_degen.degeneracies[0][0][0] + 1) % nv.size(1);
  ValidationReport r2 = check_simplicial_identities(broken_degen);
  CHECK_FALSE(r2.ok());
  bool degen_law = false;
  for (const Violation& v : r2.violations)
    degen_law |= v.code == "ds-identity" || v.code == "ss-identity";
  CHECK(degen_law);

  TruncatedSimplicialSet dup = nv;
  dup.levels[1][0] = dup.levels[1][1];
  ValidationReport r3 = check_simplicial_identities(dup);
  CHECK_FALSE(r3.ok());
  CHECK(r3.violations[0].code == "duplicate-id");

  TruncatedSimplicialSet misshapen = nv;
  misshapen.faces[2].pop_back();
  ValidationReport r4 = check_simplicial_identities(misshapen);
  CHECK_FALSE(r4.ok());
  CHECK(r4.violations[0].code == "shape");

  TruncatedSimplicialSet out_of_range = nv;
  out_of_range.faces[1][0][0] = 99;
  ValidationReport r5 = check_simplicial_identities(out_of_range);
  CHECK_FALSE(r5.ok());
  CHECK(r5.violations[0].code == "face-range");
}

TEST_CASE("join reindexing tables up to dimension three") {
  using T = std::vector<int>;
  // cofaces
  CHECK(sd_of_monotone(monotone_coface(1, 0), 1) == T{0, 3});
  CHECK(sd_of_monotone(monotone_coface(1, 1), 1) == T{1, 2});
  CHECK(sd_of_monotone(monotone_coface(2, 0), 2) == T{0, 1, 4, 5});
  CHECK(sd_of_monotone(monotone_coface(2, 1), 2) == T{0, 2, 3, 5});
  CHECK(sd_of_monotone(monotone_coface(2, 2), 2) == T{1, 2, 3, 4});
  CHECK(sd_of_monotone(monotone_coface(3, 0), 3) == T{0, 1, 2, 5, 6, 7});
  CHECK(sd_of_monotone(monotone_coface(3, 1), 3) == T{0, 1, 3, 4, 6, 7});
  CHECK(sd_of_monotone(monotone_coface(3, 2), 3) == T{0, 2, 3, 4, 5, 7});
  CHECK(sd_of_monotone(monotone_coface(3, 3), 3) == T{1, 2, 3, 4, 5, 6});
  // codegeneracies
  CHECK(sd_of_monotone(monotone_codegeneracy(0, 0), 0) == T{0, 0, 1, 1});
  CHECK(sd_of_monotone(monotone_codegeneracy(1, 0), 1) == T{0, 1, 1, 2, 2, 3});
  CHECK(sd_of_monotone(monotone_codegeneracy(1, 1), 1) == T{0, 0, 1, 2, 3, 3});
  CHECK(sd_of_monotone(monotone_codegeneracy(2, 0), 2) == T{0, 1, 2, 2, 3, 3, 4, 5});
  CHECK(sd_of_monotone(monotone_codegeneracy(2, 1), 2) == T{0, 1, 1, 2, 3, 4, 4, 5});
  CHECK(sd_of_monotone(monotone_codegeneracy(2, 2), 2) == T{0, 0, 1, 2, 3, 4, 5, 5});
  CHECK(sd_of_monotone(monotone_codegeneracy(3, 0), 3) == T{0, 1, 2, 3, 3, 4, 4, 5, 6, 7});
  CHECK(sd_of_monotone(monotone_codegeneracy(3, 1), 3) == T{0, 1, 2, 2, 3, 4, 5, 5, 6, 7});
  CHECK(sd_of_monotone(monotone_codegeneracy(3, 2), 3) == T{0, 1, 1, 2, 3, 4, 5, 6, 6, 7});
  CHECK(sd_of_monotone(monotone_codegeneracy(3, 3), 3) == T{0, 0, 1, 2, 3, 4, 5, 6, 7, 7});
  // identities double up around the midpoint
  CHECK(sd_of_monotone({0, 1, 2}, 2) == T{0, 1, 2, 3, 4, 5});
  // guards
  CHECK_THROWS_AS(sd_of_monotone({}, 1), InputError);
  CHECK_THROWS_AS(sd_of_monotone({1, 0}, 1), InputError);
  CHECK_THROWS_AS(sd_of_monotone({0, 2}, 1), InputError);
}

TEST_CASE("join reindexing is functorial") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    int a = trial % 4, b = 1 + (trial / 4) % 4, c = 1 + (trial / 16) % 4;
    std::vector<int> f = random_monotone(rng, a, b);
    std::vector<int> g = random_monotone(rng, b, c);
    std::vector<int> lhs = sd_of_monotone(compose_tables(g, f), c);
    std::vector<int> rhs = compose_tables(sd_of_monotone(g, c), sd_of_monotone(f, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("edgewise subdivision of simplices") {
  TruncatedSimplicialSet pt = edgewise_subdivide(standard_simplex(0, 3), 1);
  CHECK(level_sizes(pt) == std::vector<int>{1, 1});
  CHECK(check_simplicial_identities(pt).ok());

  TruncatedSimplicialSet sd1 = edgewise_subdivide(standard_simplex(1, 3), 1);
  CHECK(sd1.size(0) == 3);
  CHECK(sd1.size(1) == 5);
  CHECK(check_simplicial_identities(sd1).ok());
  CHECK(pi0_count(sd1) == 1);
  // the three vertices are the original edge's simplices: 0, 1, and the arrow
  std::set<std::string> verts(sd1.levels[0].begin(), sd1.levels[0].end());
  CHECK(verts == std::set<std::string>{"0,0", "0,1", "1,1"});

  TruncatedSimplicialSet sd2 = edgewise_subdivide(standard_simplex(2, 5), 2);
  CHECK(level_sizes(sd2) == std::vector<int>{6, 15, 28});
  CHECK(check_simplicial_identities(sd2).ok());
  CHECK(pi0_count(sd2) == 1);
  auto [h0, h1] = homology(sd2);
  CHECK(h0.to_string() == "Z");
  CHECK(h1.trivial());

  CHECK_THROWS_AS(edgewise_subdivide(standard_simplex(1, 2), 1), InputError);
  CHECK_THROWS_AS(edgewise_subdivide(standard_simplex(1, 3), -1), InputError);
}

TEST_CASE("subdivision preserves components and low homology") {
  // circle
  TruncatedSimplicialSet circle5 = circle_cells().build(5);
  TruncatedSimplicialSet sd_circle = edgewise_subdivide(circle5, 2);
  CHECK(check_simplicial_identities(sd_circle).ok());
  CHECK(sd_circle.size(0) == 2);
  CHECK(pi0_count(sd_circle) == 1);
  auto [c0, c1] = homology(sd_circle);
  CHECK(c0.to_string() == "Z");
  CHECK(c1.to_string() == "Z");

  // wedge of two loops
  TruncatedSimplicialSet sd_wedge = edgewise_subdivide(wedge_cells().build(5), 2);
  auto [w0, w1] = homology(sd_wedge);
  CHECK(w0.to_string() == "Z");
  CHECK(w1.to_string() == "Z^2");

  // sphere: still simply connected
  TruncatedSimplicialSet sd_sphere = edgewise_subdivide(sphere_cells().build(5), 2);
  auto [s0, s1] = homology(sd_sphere);
  CHECK(s0.to_string() == "Z");
  CHECK(s1.trivial());

  // 2-torsion classifying nerve: H1 = Z/2 survives subdivision
  TruncatedSimplicialSet bz2 = nerve(two_torsion_category(), M, 5, big_caps());
  TruncatedSimplicialSet sd_bz2 = edgewise_subdivide(bz2, 2);
  CHECK(pi0_count(sd_bz2) == pi0_count(bz2));
  auto [b0, b1] = homology(sd_bz2);
  CHECK(b0.to_string() == "Z");
  CHECK(b1.to_string() == "Z/2");

  // span-category nerve of tiny sets: the free loop survives
  QOptions qo;
  qo.caps = big_caps();
  TruncatedSimplicialSet qn = nerve(build_q_category(finset(1), qo).cat, M, 5, big_caps());
  TruncatedSimplicialSet sd_qn = edgewise_subdivide(qn, 2);
  CHECK(pi0_count(sd_qn) == pi0_count(qn));
  auto [q0, q1] = homology(sd_qn);
  CHECK(q0.to_string() == "Z");
  CHECK(q1.to_string() == "Z");
}

TEST_CASE("staircase nerve matches the span-category loop group") {
  CHECK(s_dot_vs_q_check(finset(1), big_caps()).pass());
  CHECK(s_dot_vs_q_check(finset(2), big_caps()).pass());
  CHECK(s_dot_vs_q_check(vect_f2(1), big_caps()).pass());
  CHECK(s_dot_vs_q_check(vect_f2(2), big_caps()).pass());
  CHECK(s_dot_vs_q_check(finite_space(sierpinski_space()), big_caps()).pass());
  CHECK(s_dot_vs_q_check(finset_based(2), big_caps()).pass());
}
