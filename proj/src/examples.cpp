#include "cgw/examples.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>

namespace cgw {

namespace {

constexpr Family E = Family::E;
constexpr Family M = Family::M;

std::string join_vals(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += static_cast<char>('0' + x);
  return s;
}

std::string suffix_vals(const std::vector<int>& v) {
  return v.empty() ? std::string() : "_" + join_vals(v);
}

// all injective value sequences [a] -> [b], lexicographic
std::vector<std::vector<int>> injections(int a, int b) {
  std::vector<std::vector<int>> out;
  if (a > b) return out;
  std::vector<int> cur;
  std::vector<char> used(std::max(b, 1), 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == a) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < b; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      cur.push_back(v);
      rec();
      cur.pop_back();
      used[v] = 0;
    }
  };
  rec();
  return out;
}

bool is_identity_seq(int a, int b, const std::vector<int>& v) {
  if (a != b) return false;
  for (int i = 0; i < a; ++i)
    if (v[i] != i) return false;
  return true;
}

struct Inj {
  int a = 0, b = 0;
  std::vector<int> v;
};

// shared injection catalogue for finset / finset_based
struct InjCatalogue {
  std::vector<Inj> mors;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> index;

  explicit InjCatalogue(int n) {
    for (int a = 0; a <= n; ++a)
      for (int b = a; b <= n; ++b)
        for (auto& v : injections(a, b)) {
          index[{{a, b}, v}] = static_cast<int>(mors.size());
          mors.push_back({a, b, v});
        }
  }
  int at(int a, int b, const std::vector<int>& v) const { return index.at({{a, b}, v}); }
  int compose(int i, int j) const {  // i then j
    const Inj& u = mors[i];
    const Inj& w = mors[j];
    std::vector<int> comp(u.a);
    for (int x = 0; x < u.a; ++x) comp[x] = w.v[u.v[x]];
    return at(u.a, w.b, comp);
  }
  std::vector<int> complement(int i) const {  // increasing enumeration of [b] minus im
    const Inj& m = mors[i];
    std::vector<char> im(std::max(m.b, 1), 0);
    for (int x : m.v) im[x] = 1;
    std::vector<int> out;
    for (int x = 0; x < m.b; ++x)
      if (!im[x]) out.push_back(x);
    return out;
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// finset
// ---------------------------------------------------------------------------

CgwPresentation finset(int n) {
  if (n < 0 || n > 4) throw InputError("finset: size must be in 0..4");
  InjCatalogue cat(n);
  auto name = [&](int i) {
    const Inj& m = cat.mors[i];
    if (is_identity_seq(m.a, m.b, m.v)) return "id_" + std::to_string(m.a);
    return "inj_" + std::to_string(m.a) + "_" + std::to_string(m.b) + suffix_vals(m.v);
  };

  RawCategory raw;
  for (int k = 0; k <= n; ++k) raw.objects.push_back(std::to_string(k));
  for (int i = 0; i < static_cast<int>(cat.mors.size()); ++i) {
    RawMorphism rm{name(i), std::to_string(cat.mors[i].a), std::to_string(cat.mors[i].b)};
    raw.e_morphisms.push_back(rm);
    raw.m_morphisms.push_back(rm);
  }
  for (int i = 0; i < static_cast<int>(cat.mors.size()); ++i)
    for (int j = 0; j < static_cast<int>(cat.mors.size()); ++j) {
      if (cat.mors[i].b != cat.mors[j].a) continue;
      RawCompose rc{name(i), name(j), name(cat.compose(i, j))};
      raw.e_compose.push_back(rc);
      raw.m_compose.push_back(rc);
    }

  // squares: top t: A->B, left l: A->C, bottom bm: C->D, right r: B->D.
  for (const Inj& t : cat.mors)
    for (const Inj& l : cat.mors) {
      if (l.a != t.a) continue;
      for (const Inj& bm : cat.mors) {
        if (bm.a != l.b) continue;
        for (const Inj& r : cat.mors) {
          if (r.a != t.b || r.b != bm.b) continue;
          bool commute = true;
          for (int i = 0; i < t.a && commute; ++i) commute = r.v[t.v[i]] == bm.v[l.v[i]];
          if (!commute) continue;
          std::vector<char> in_r(std::max(r.b, 1), 0), in_b(std::max(r.b, 1), 0);
          for (int x : r.v) in_r[x] = 1;
          for (int x : bm.v) in_b[x] = 1;
          int inter = 0, uni = 0;
          for (int x = 0; x < r.b; ++x) {
            inter += (in_r[x] && in_b[x]) ? 1 : 0;
            uni += (in_r[x] || in_b[x]) ? 1 : 0;
          }
          if (inter != t.a) continue;  // corner object is the intersection
          bool cover = uni == r.b;
          raw.squares.push_back({cover ? "distinguished" : "commutative",
                                 name(cat.at(t.a, t.b, t.v)), name(cat.at(bm.a, bm.b, bm.v)),
                                 name(cat.at(l.a, l.b, l.v)), name(cat.at(r.a, r.b, r.v))});
        }
      }
    }

  CgwPresentation p;
  p.cat = FiniteDoubleCategory::build(raw);
  p.phi.identity = true;
  p.zero = p.cat.object_index_checked("0");
  const int nm = static_cast<int>(cat.mors.size());
  p.ck.k.resize(nm);
  p.ck.c.resize(nm);
  for (int i = 0; i < nm; ++i) {
    const Inj& m = cat.mors[i];
    int cm = cat.at(m.b - m.a, m.b, cat.complement(i));
    int obj = p.cat.object_index_checked(std::to_string(m.b - m.a));
    p.ck.k[p.cat.mor_index_checked(E, name(i))] = {obj, p.cat.mor_index_checked(M, name(cm))};
    p.ck.c[p.cat.mor_index_checked(M, name(i))] = {obj, p.cat.mor_index_checked(E, name(cm))};
  }
  p.rank.cap = {n};
  p.rank.rank.assign(p.cat.n_objects(), {});
  for (int k = 0; k <= n; ++k) p.rank.rank[p.cat.object_index_checked(std::to_string(k))] = {k};
  p.resolve_phi();
  return p;
}

// ---------------------------------------------------------------------------
// finset_based
// ---------------------------------------------------------------------------

namespace {

// underlying collapse value at y for the section s: [a] -> [b]; -1 = basepoint
int collapse_at(const Inj& s, int y) {
  for (int i = 0; i < s.a; ++i)
    if (s.v[i] == y) return i;
  return -1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

CgwPresentation finset_based(int n) {
  if (n < 0 || n > 3) throw InputError("finset_based: size must be in 0..3");
  InjCatalogue cat(n);
  auto obj_name = [](int k) { return std::to_string(k) + "+"; };
  auto m_name = [&](int i) {
    const Inj& m = cat.mors[i];
    if (is_identity_seq(m.a, m.b, m.v)) return "id_" + obj_name(m.a);
    return "binj_" + std::to_string(m.a) + "_" + std::to_string(m.b) + suffix_vals(m.v);
  };
  auto e_name = [&](int i) {
    const Inj& m = cat.mors[i];
    if (is_identity_seq(m.a, m.b, m.v)) return "id_" + obj_name(m.a);
    return "bcol_" + std::to_string(m.a) + "_" + std::to_string(m.b) + suffix_vals(m.v);
  };

  RawCategory raw;
  for (int k = 0; k <= n; ++k) raw.objects.push_back(obj_name(k));
  for (int i = 0; i < static_cast<int>(cat.mors.size()); ++i) {
    raw.m_morphisms.push_back({m_name(i), obj_name(cat.mors[i].a), obj_name(cat.mors[i].b)});
    raw.e_morphisms.push_back({e_name(i), obj_name(cat.mors[i].a), obj_name(cat.mors[i].b)});
  }
  for (int i = 0; i < static_cast<int>(cat.mors.size()); ++i)
    for (int j = 0; j < static_cast<int>(cat.mors.size()); ++j) {
      if (cat.mors[i].b != cat.mors[j].a) continue;
      int r = cat.compose(i, j);
      raw.m_compose.push_back({m_name(i), m_name(j), m_name(r)});
      raw.e_compose.push_back({e_name(i), e_name(j), e_name(r)});
    }

  // Square data: top/bottom are based injections tau, beta; left/right carry
  // collapse maps lambda: BL+ -> TL+ and rho: BR+ -> TR+ (stored by section).
  // Every ambient-commuting square is commutative; the square is distinguished
  // when the canonical map from the pushout of (lambda, beta) to TR+ is
  // bijective.
  for (const Inj& t : cat.mors)
    for (const Inj& l : cat.mors) {
      if (l.a != t.a) continue;  // l: TL -> BL section
      for (const Inj& bm : cat.mors) {
        if (bm.a != l.b) continue;  // beta: BL -> BR
        for (const Inj& r : cat.mors) {
          if (r.a != t.b || r.b != bm.b) continue;  // r: TR -> BR section
          const int tl = t.a, tr = t.b, bl = bm.a, br = bm.b;
          bool commute = true;
          for (int y = 0; y < bl && commute; ++y) {
            int ly = collapse_at(l, y);
            int lhs = ly < 0 ? -1 : t.v[ly];
            int rhs = collapse_at(r, bm.v[y]);
            commute = lhs == rhs;
          }
          if (!commute) continue;
          // nodes: 0 = basepoint, 1..tl = TL, tl+1..tl+br = BR
          UnionFind uf(1 + tl + br);
          for (int y = 0; y < bl; ++y) {
            int ly = collapse_at(l, y);
            uf.unite(ly < 0 ? 0 : 1 + ly, 1 + tl + bm.v[y]);
          }
          std::map<int, int> value;  // root -> image in TR+ (-1 = basepoint)
          int classes = 0;
          auto assign = [&](int node, int val) {
            int root = uf.find(node);
            if (value.emplace(root, val).second) ++classes;
          };
          assign(0, -1);
          for (int x = 0; x < tl; ++x) assign(1 + x, t.v[x]);
          for (int d = 0; d < br; ++d) assign(1 + tl + d, collapse_at(r, d));
          std::set<int> vals;
          for (auto& [root, val] : value) vals.insert(val);
          bool bijective = static_cast<int>(vals.size()) == classes && classes == tr + 1;
          raw.squares.push_back({bijective ? "distinguished" : "commutative",
                                 m_name(cat.at(t.a, t.b, t.v)), m_name(cat.at(bm.a, bm.b, bm.v)),
                                 e_name(cat.at(l.a, l.b, l.v)), e_name(cat.at(r.a, r.b, r.v))});
        }
      }
    }

  CgwPresentation p;
  p.cat = FiniteDoubleCategory::build(raw);
  p.zero = p.cat.object_index_checked("0+");
  const int nm = static_cast<int>(cat.mors.size());
  p.ck.k.resize(nm);
  p.ck.c.resize(nm);
  for (int i = 0; i < nm; ++i) {
    const Inj& m = cat.mors[i];
    int cm = cat.at(m.b - m.a, m.b, cat.complement(i));
    int obj = p.cat.object_index_checked(obj_name(m.b - m.a));
    p.ck.k[p.cat.mor_index_checked(E, e_name(i))] = {obj, p.cat.mor_index_checked(M, m_name(cm))};
    p.ck.c[p.cat.mor_index_checked(M, m_name(i))] = {obj, p.cat.mor_index_checked(E, e_name(cm))};
  }
  for (int i = 0; i < nm; ++i) {
    const Inj& m = cat.mors[i];
    if (m.a != m.b) continue;  // bijective sections are exactly the isos
    p.phi.pairs.push_back({p.cat.mor_index_checked(E, e_name(i)), p.cat.mor_index_checked(M, m_name(i))});
  }
  p.rank.cap = {n};
  p.rank.rank.assign(p.cat.n_objects(), {});
  for (int k = 0; k <= n; ++k) p.rank.rank[p.cat.object_index_checked(obj_name(k))] = {k};
  p.resolve_phi();
  return p;
}

// ---------------------------------------------------------------------------
// vect_f2
// ---------------------------------------------------------------------------

namespace {

struct Mat {  // rows x cols over F2, row-major
  int rows = 0, cols = 0;
  std::vector<uint8_t> a;
  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  uint8_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  uint8_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
  uint64_t bits() const {
    uint64_t x = 0;
    for (size_t i = 0; i < a.size(); ++i) x |= static_cast<uint64_t>(a[i]) << i;
    return x;
  }
};

Mat mat_id(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k)
      if (x.at(i, k))
        for (int j = 0; j < y.cols; ++j) z.at(i, j) ^= y.at(k, j);
  return z;
}

int mat_rank(Mat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.a[static_cast<size_t>(r) * m.cols + j], m.a[static_cast<size_t>(piv) * m.cols + j]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.at(i, c))
        for (int j = 0; j < m.cols; ++j) m.at(i, j) ^= m.at(r, j);
    ++r;
  }
  return r;
}

Mat mat_stack(const Mat& top, const Mat& bot) {  // same cols
  Mat z(top.rows + bot.rows, top.cols);
  std::copy(top.a.begin(), top.a.end(), z.a.begin());
  std::copy(bot.a.begin(), bot.a.end(), z.a.begin() + top.a.size());
  return z;
}

Mat mat_concat(const Mat& lhs, const Mat& rhs) {  // same rows
  Mat z(lhs.rows, lhs.cols + rhs.cols);
  for (int i = 0; i < z.rows; ++i) {
    for (int j = 0; j < lhs.cols; ++j) z.at(i, j) = lhs.at(i, j);
    for (int j = 0; j < rhs.cols; ++j) z.at(i, lhs.cols + j) = rhs.at(i, j);
  }
  return z;
}

Mat mat_inverse(const Mat& m) {  // square, invertible
  Mat aug = mat_concat(m, mat_id(m.rows));
  int n = m.rows;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (aug.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) throw ContractError("mat_inverse: singular matrix");
    for (int j = 0; j < aug.cols; ++j) std::swap(aug.a[static_cast<size_t>(c) * aug.cols + j], aug.a[static_cast<size_t>(piv) * aug.cols + j]);
    for (int i = 0; i < n; ++i)
      if (i != c && aug.at(i, c))
        for (int j = 0; j < aug.cols; ++j) aug.at(i, j) ^= aug.at(c, j);
  }
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

// reduced column basis of the null space of s, ordered by free column
Mat mat_kernel(const Mat& s) {
  Mat m = s;
  std::vector<int> pivot_of_row;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.a[static_cast<size_t>(r) * m.cols + j], m.a[static_cast<size_t>(piv) * m.cols + j]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && m.at(i, c))
        for (int j = 0; j < m.cols; ++j) m.at(i, j) ^= m.at(r, j);
    pivot_of_row.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(std::max(m.cols, 1), 0);
  for (int c : pivot_of_row) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(s.cols, static_cast<int>(free_cols.size()));
  for (int j = 0; j < static_cast<int>(free_cols.size()); ++j) {
    int fc = free_cols[j];
    k.at(fc, j) = 1;
    for (int row = 0; row < static_cast<int>(pivot_of_row.size()); ++row)
      if (m.at(row, fc)) k.at(pivot_of_row[row], j) = 1;
  }
  return k;
}

std::vector<Mat> all_matrices(int rows, int cols) {
  std::vector<Mat> out;
  int bits = rows * cols;
  for (uint64_t w = 0; w < (1ull << bits); ++w) {
    Mat m(rows, cols);
    for (int i = 0; i < bits; ++i) m.a[i] = (w >> i) & 1;
    out.push_back(std::move(m));
  }
  if (bits == 0) out.resize(1, Mat(rows, cols));
  return out;
}

}  // namespace

CgwPresentation vect_f2(int d) {
  if (d < 0 || d > 2) throw InputError("vect_f2: dimension must be in 0..2");
  auto obj_name = [](int k) { return "F2^" + std::to_string(k); };

  // m-morphisms: injective matrices dst x src; e-morphisms X ~> B carry the
  // underlying surjection B -> X (matrix dim(X) x dim(B)).
  struct Lin {
    int src, dst;
    Mat mat;
    std::string id;
  };
  std::vector<Lin> mm, em;
  std::map<std::pair<std::pair<int, int>, uint64_t>, int> m_index, e_index;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      for (Mat& m : all_matrices(b, a)) {
        if (mat_rank(m) != a) continue;  // injective
        std::string id = m.identity() ? "id_" + obj_name(a)
                                      : "lin_" + std::to_string(a) + "_" + std::to_string(b) + "_" +
                                            std::to_string(m.bits());
        m_index[{{a, b}, m.bits()}] = static_cast<int>(mm.size());
        mm.push_back({a, b, m, id});
      }
  for (int x = 0; x <= d; ++x)
    for (int b = 0; b <= d; ++b)
      for (Mat& s : all_matrices(x, b)) {
        if (mat_rank(s) != x) continue;  // surjective onto X
        std::string id = s.identity() ? "id_" + obj_name(x)
                                      : "sur_" + std::to_string(x) + "_" + std::to_string(b) + "_" +
                                            std::to_string(s.bits());
        e_index[{{x, b}, s.bits()}] = static_cast<int>(em.size());
        em.push_back({x, b, s, id});
      }

  RawCategory raw;
  for (int k = 0; k <= d; ++k) raw.objects.push_back(obj_name(k));
  for (const Lin& l : mm) raw.m_morphisms.push_back({l.id, obj_name(l.src), obj_name(l.dst)});
  for (const Lin& l : em) raw.e_morphisms.push_back({l.id, obj_name(l.src), obj_name(l.dst)});
  for (const Lin& u : mm)
    for (const Lin& w : mm) {
      if (u.dst != w.src) continue;
      Mat comp = mat_mul(w.mat, u.mat);
      raw.m_compose.push_back({u.id, w.id, mm[m_index.at({{u.src, w.dst}, comp.bits()})].id});
    }
  for (const Lin& u : em)
    for (const Lin& w : em) {
      if (u.dst != w.src) continue;  // u: X ~> Y, w: Y ~> Z
      Mat comp = mat_mul(u.mat, w.mat);
      raw.e_compose.push_back({u.id, w.id, em[e_index.at({{u.src, w.dst}, comp.bits()})].id});
    }

  // every ambient-commuting square is commutative; distinguished = bistable
  for (const Lin& t : mm)
    for (const Lin& l : em) {
      if (l.src != t.src) continue;  // l: TL ~> BL, matrix BL -> TL
      for (const Lin& bm : mm) {
        if (bm.src != l.dst) continue;
        for (const Lin& r : em) {
          if (r.src != t.dst || r.dst != bm.dst) continue;
          if (!(mat_mul(t.mat, l.mat) == mat_mul(r.mat, bm.mat))) continue;
          bool dist = false;
          if (t.src + bm.dst == t.dst + bm.src) {
            dist = mat_rank(mat_stack(l.mat, bm.mat)) == bm.src &&
                   mat_rank(mat_concat(t.mat, r.mat)) == t.dst;
          }
          raw.squares.push_back({dist ? "distinguished" : "commutative", t.id, bm.id, l.id, r.id});
        }
      }
    }

  CgwPresentation p;
  p.cat = FiniteDoubleCategory::build(raw);
  p.zero = p.cat.object_index_checked(obj_name(0));
  p.ck.k.resize(em.size());
  p.ck.c.resize(mm.size());
  for (size_t i = 0; i < em.size(); ++i) {
    Mat k = mat_kernel(em[i].mat);  // dst x (dst-src)
    int obj = em[i].dst - em[i].src;
    int mi = m_index.at({{obj, em[i].dst}, k.bits()});
    p.ck.k[p.cat.mor_index_checked(E, em[i].id)] = {p.cat.object_index_checked(obj_name(obj)),
                                                    p.cat.mor_index_checked(M, mm[mi].id)};
  }
  for (size_t i = 0; i < mm.size(); ++i) {
    const Lin& f = mm[i];
    int b = f.dst, a = f.src;
    // complete im(f) by standard basis vectors, project onto the new part
    Mat pbase(b, b);
    for (int r = 0; r < b; ++r)
      for (int c = 0; c < a; ++c) pbase.at(r, c) = f.mat.at(r, c);
    int filled = a;
    for (int cand = 0; cand < b && filled < b; ++cand) {
      for (int r = 0; r < b; ++r) pbase.at(r, filled) = r == cand ? 1 : 0;
      Mat head(b, filled + 1);
      for (int r = 0; r < b; ++r)
        for (int c = 0; c <= filled; ++c) head.at(r, c) = pbase.at(r, c);
      if (mat_rank(head) == filled + 1) ++filled;
    }
    Mat inv = mat_inverse(pbase);
    Mat q(b - a, b);
    for (int r = 0; r < b - a; ++r)
      for (int c = 0; c < b; ++c) q.at(r, c) = inv.at(a + r, c);
    int ei = e_index.at({{b - a, b}, q.bits()});
    p.ck.c[p.cat.mor_index_checked(M, f.id)] = {p.cat.object_index_checked(obj_name(b - a)),
                                                p.cat.mor_index_checked(E, em[ei].id)};
  }
  for (const Lin& g : em) {
    if (g.src != g.dst) continue;  // square surjections are the isos
    Mat inv = mat_inverse(g.mat);
    int mi = m_index.at({{g.src, g.dst}, inv.bits()});
    p.phi.pairs.push_back({p.cat.mor_index_checked(E, g.id), p.cat.mor_index_checked(M, mm[mi].id)});
  }
  p.rank.cap = {d};
  p.rank.rank.assign(p.cat.n_objects(), {});
  for (int k = 0; k <= d; ++k) p.rank.rank[p.cat.object_index_checked(obj_name(k))] = {k};
  p.resolve_phi();
  return p;
}

// ---------------------------------------------------------------------------
// finite_space
// ---------------------------------------------------------------------------

namespace {

struct LocalPoset {
  int k = 0;
  std::vector<char> leq;  // k*k, leq[i*k+j] = (i <= j)
  bool le(int i, int j) const { return leq[static_cast<size_t>(i) * k + j] != 0; }
};

uint64_t poset_signature(const LocalPoset& p) {
  std::vector<int> perm(p.k);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t enc = 0;
    for (int i = 0; i < p.k; ++i)
      for (int j = 0; j < p.k; ++j)
        if (p.le(perm[i], perm[j])) enc |= 1ull << (i * p.k + j);
    best = std::min(best, enc);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// injective order-embeddings (preserving and reflecting) of u into v, lexicographic
std::vector<std::vector<int>> order_embeddings(const LocalPoset& u, const LocalPoset& v) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used(std::max(v.k, 1), 0);
  std::function<void()> rec = [&]() {
    int i = static_cast<int>(cur.size());
    if (i == u.k) {
      out.push_back(cur);
      return;
    }
    for (int w = 0; w < v.k; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = (u.le(j, i) == v.le(cur[j], w)) && (u.le(i, j) == v.le(w, cur[j]));
      if (!ok) continue;
      used[w] = 1;
      cur.push_back(w);
      rec();
      cur.pop_back();
      used[w] = 0;
    }
  };
  rec();
  return out;
}

}  // namespace

CgwPresentation finite_space(const SpaceData& space) {
  const int n = static_cast<int>(space.points.size());
  if (n > 6) throw InputError("finite_space: at most 6 points");
  std::map<std::string, int> pt_index;
  for (int i = 0; i < n; ++i) {
    if (pt_index.count(space.points[i])) throw InputError("finite_space: duplicate point " + space.points[i]);
    pt_index[space.points[i]] = i;
  }
  std::vector<char> leq(static_cast<size_t>(n) * std::max(n, 1), 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (auto& [lo, hi] : space.below) {
    auto a = pt_index.find(lo), b = pt_index.find(hi);
    if (a == pt_index.end() || b == pt_index.end())
      throw InputError("finite_space: order pair references unknown point");
    leq[static_cast<size_t>(a->second) * n + b->second] = 1;
  }
  for (int k = 0; k < n; ++k)  // transitive closure
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[static_cast<size_t>(i) * n + k] && leq[static_cast<size_t>(k) * n + j])
          leq[static_cast<size_t>(i) * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (leq[static_cast<size_t>(i) * n + j] && leq[static_cast<size_t>(j) * n + i])
        throw InputError("finite_space: specialization order is not antisymmetric (space not T0)");

  // candidate subspaces
  std::vector<uint32_t> masks;
  if (space.object_filter.empty()) {
    for (uint32_t m = 0; m < (1u << n); ++m) masks.push_back(m);
  } else {
    std::set<uint32_t> seen{0u};
    for (const auto& subset : space.object_filter) {
      uint32_t m = 0;
      for (int idx : subset) {
        if (idx < 0 || idx >= n) throw InputError("finite_space: object filter index out of range");
        m |= 1u << idx;
      }
      seen.insert(m);
    }
    masks.assign(seen.begin(), seen.end());
  }
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  auto induced = [&](uint32_t mask) {
    LocalPoset lp;
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) pts.push_back(i);
    lp.k = static_cast<int>(pts.size());
    lp.leq.assign(static_cast<size_t>(lp.k) * std::max(lp.k, 1), 0);
    for (int i = 0; i < lp.k; ++i)
      for (int j = 0; j < lp.k; ++j)
        lp.leq[static_cast<size_t>(i) * lp.k + j] = leq[static_cast<size_t>(pts[i]) * n + pts[j]];
    return lp;
  };

  struct ClassInfo {
    LocalPoset rep;
    std::string name;
  };
  std::vector<ClassInfo> classes;
  std::map<std::pair<int, uint64_t>, int> class_of_sig;
  std::vector<int> count_of_size(n + 1, 0);
  for (uint32_t mask : masks) {
    LocalPoset lp = induced(mask);
    auto sig = std::make_pair(lp.k, poset_signature(lp));
    if (class_of_sig.count(sig)) continue;
    class_of_sig[sig] = static_cast<int>(classes.size());
    classes.push_back({lp, std::to_string(lp.k)});
    count_of_size[lp.k]++;
  }
  // disambiguate names when several classes share a size
  {
    std::vector<int> next(n + 1, 0);
    for (auto& c : classes)
      if (count_of_size[c.rep.k] > 1) c.name += static_cast<char>('a' + next[c.rep.k]++);
  }
  auto class_lookup = [&](const LocalPoset& lp) {
    auto it = class_of_sig.find({lp.k, poset_signature(lp)});
    return it == class_of_sig.end() ? -1 : it->second;
  };

  struct Emb {
    int src_cls, dst_cls;
    std::vector<int> v;
    bool in_m = false, in_e = false;
    std::string id;
  };
  std::vector<Emb> embs;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> emb_index;
  const int nc = static_cast<int>(classes.size());
  for (int uc = 0; uc < nc; ++uc)
    for (int vc = 0; vc < nc; ++vc) {
      const LocalPoset& u = classes[uc].rep;
      const LocalPoset& v = classes[vc].rep;
      for (auto& f : order_embeddings(u, v)) {
        std::vector<char> in_img(std::max(v.k, 1), 0);
        for (int x : f) in_img[x] = 1;
        bool down = true, up = true;
        for (int y = 0; y < v.k; ++y) {
          if (in_img[y]) continue;
          for (int x = 0; x < v.k; ++x) {
            if (!in_img[x]) continue;
            if (v.le(y, x)) down = false;  // something below the image is missing
            if (v.le(x, y)) up = false;
          }
        }
        if (!down && !up) continue;
        Emb e;
        e.src_cls = uc;
        e.dst_cls = vc;
        e.v = f;
        e.in_m = down;
        e.in_e = up;
        bool ident = uc == vc && is_identity_seq(u.k, v.k, f);
        e.id = ident ? "id_" + classes[uc].name
                     : "em_" + classes[uc].name + "_" + classes[vc].name + suffix_vals(f);
        emb_index[{{uc, vc}, f}] = static_cast<int>(embs.size());
        embs.push_back(std::move(e));
      }
    }

  RawCategory raw;
  for (auto& c : classes) raw.objects.push_back(c.name);
  for (const Emb& e : embs) {
    RawMorphism rm{e.id, classes[e.src_cls].name, classes[e.dst_cls].name};
    if (e.in_m) raw.m_morphisms.push_back(rm);
    if (e.in_e) raw.e_morphisms.push_back(rm);
  }
  for (const Emb& e1 : embs)
    for (const Emb& e2 : embs) {
      if (e1.dst_cls != e2.src_cls) continue;
      bool in_m = e1.in_m && e2.in_m, in_e = e1.in_e && e2.in_e;
      if (!in_m && !in_e) continue;
      std::vector<int> comp(e1.v.size());
      for (size_t i = 0; i < e1.v.size(); ++i) comp[i] = e2.v[e1.v[i]];
      const Emb& r = embs[emb_index.at({{e1.src_cls, e2.dst_cls}, comp})];
      if (in_m) raw.m_compose.push_back({e1.id, e2.id, r.id});
      if (in_e) raw.e_compose.push_back({e1.id, e2.id, r.id});
    }

  for (const Emb& t : embs) {
    if (!t.in_m) continue;
    for (const Emb& l : embs) {
      if (!l.in_e || l.src_cls != t.src_cls) continue;
      for (const Emb& bm : embs) {
        if (!bm.in_m || bm.src_cls != l.dst_cls) continue;
        for (const Emb& r : embs) {
          if (!r.in_e || r.src_cls != t.dst_cls || r.dst_cls != bm.dst_cls) continue;
          bool commute = true;
          for (size_t i = 0; i < t.v.size() && commute; ++i)
            commute = r.v[t.v[i]] == bm.v[l.v[i]];
          if (!commute) continue;
          const int brk = classes[r.dst_cls].rep.k;
          std::vector<char> in_r(std::max(brk, 1), 0), in_b(std::max(brk, 1), 0);
          for (int x : r.v) in_r[x] = 1;
          for (int x : bm.v) in_b[x] = 1;
          int inter = 0, uni = 0;
          for (int x = 0; x < brk; ++x) {
            inter += (in_r[x] && in_b[x]) ? 1 : 0;
            uni += (in_r[x] || in_b[x]) ? 1 : 0;
          }
          if (inter != static_cast<int>(t.v.size())) continue;
          bool cover = uni == brk;
          raw.squares.push_back({cover ? "distinguished" : "commutative", t.id, bm.id, l.id, r.id});
        }
      }
    }
  }

  CgwPresentation p;
  p.cat = FiniteDoubleCategory::build(raw);
  p.phi.identity = true;
  p.zero = p.cat.object_index_checked(classes[class_lookup(induced(0))].name);

  // complements: canonical embedding of the complement class onto the
  // complement subset, lexicographically first among the order-isomorphisms
  auto complement_entry = [&](const Emb& e, bool complement_is_open) {
    const LocalPoset& v = classes[e.dst_cls].rep;
    std::vector<char> in_img(std::max(v.k, 1), 0);
    for (int x : e.v) in_img[x] = 1;
    std::vector<int> comp_pts;
    for (int y = 0; y < v.k; ++y)
      if (!in_img[y]) comp_pts.push_back(y);
    LocalPoset cp;
    cp.k = static_cast<int>(comp_pts.size());
    cp.leq.assign(static_cast<size_t>(cp.k) * std::max(cp.k, 1), 0);
    for (int i = 0; i < cp.k; ++i)
      for (int j = 0; j < cp.k; ++j) cp.leq[static_cast<size_t>(i) * cp.k + j] = v.le(comp_pts[i], comp_pts[j]);
    int cls = class_lookup(cp);
    if (cls < 0)
      throw InputError("finite_space: object list is not closed under complements (at " + e.id + ")");
    std::vector<int> chosen;
    for (auto& f : order_embeddings(classes[cls].rep, v)) {
      bool onto_comp = true;
      for (int x : f)
        if (in_img[x]) {
          onto_comp = false;
          break;
        }
      if (onto_comp && static_cast<int>(f.size()) == cp.k) {
        chosen = f;
        break;  // embedding lists are lexicographic
      }
    }
    if (chosen.empty() && cp.k > 0)
      throw ContractError("finite_space: no embedding onto complement of " + e.id);
    if (cp.k == 0) chosen = {};
    const Emb& ce = embs[emb_index.at({{cls, e.dst_cls}, chosen})];
    if (complement_is_open && !ce.in_e) throw ContractError("finite_space: complement of " + e.id + " not open");
    if (!complement_is_open && !ce.in_m) throw ContractError("finite_space: complement of " + e.id + " not closed");
    return std::make_pair(cls, ce.id);
  };

  p.ck.k.resize(p.cat.n_mors(E));
  p.ck.c.resize(p.cat.n_mors(M));
  for (const Emb& e : embs) {
    if (e.in_m) {
      auto [cls, id] = complement_entry(e, true);
      p.ck.c[p.cat.mor_index_checked(M, e.id)] = {p.cat.object_index_checked(classes[cls].name),
                                                  p.cat.mor_index_checked(E, id)};
    }
    if (e.in_e) {
      auto [cls, id] = complement_entry(e, false);
      p.ck.k[p.cat.mor_index_checked(E, e.id)] = {p.cat.object_index_checked(classes[cls].name),
                                                  p.cat.mor_index_checked(M, id)};
    }
  }
  p.rank.cap = space.rank_cap.empty() ? std::vector<long>{n} : space.rank_cap;
  p.rank.rank.assign(p.cat.n_objects(), {});
  for (int c = 0; c < nc; ++c)
    p.rank.rank[p.cat.object_index_checked(classes[c].name)] = {classes[c].rep.k};
  p.resolve_phi();
  return p;
}

SpaceData sierpinski_space() {
  SpaceData s;
  s.points = {"a", "b"};
  s.below = {{"a", "b"}};  // {b} is the open point
  return s;
}

SpaceData discrete_space(int n) {
  if (n < 0 || n > 6) throw InputError("discrete_space: 0..6 points");
  SpaceData s;
  for (int i = 0; i < n; ++i) s.points.push_back("p" + std::to_string(i));
  return s;
}

CgwPresentation negative_p_fixture() {
  SpaceData s;
  s.points = {"a1", "b1", "a2", "b2", "p", "q"};
  s.below = {{"a1", "b1"}, {"a2", "b2"}};
  // even-size subspace classes only: the class of a closed intersection can
  // be odd-sized and therefore fall outside the object list
  s.object_filter = {
      {},
      {0, 1},              // one chain
      {4, 5},              // two isolated points
      {1, 3, 4, 5},        // four pairwise-incomparable points
      {0, 1, 4, 5},        // chain plus two points
      {0, 1, 2, 3},        // two chains
      {0, 1, 2, 3, 4, 5},  // whole space
  };
  s.rank_cap = {5};
  return finite_space(s);
}

// ---------------------------------------------------------------------------
// product
// ---------------------------------------------------------------------------

namespace {

std::string product_mor_id(const CgwPresentation& a, const CgwPresentation& b, Family f, int ia,
                           int ib, const std::string& sep) {
  const Morphism& ma = a.cat.mor(f, ia);
  const Morphism& mb = b.cat.mor(f, ib);
  if (ma.src == ma.dst && mb.src == mb.dst && a.cat.identity(f, ma.src) == ia &&
      b.cat.identity(f, mb.src) == ib)
    return "id_" + a.cat.object(ma.src) + sep + b.cat.object(mb.src);
  return ma.id + sep + mb.id;
}

}  // namespace

CgwPresentation product_presentation(const CgwPresentation& a, const CgwPresentation& b) {
  if (static_cast<int>(a.phi_e_to_m.size()) != a.cat.n_mors(E) ||
      static_cast<int>(b.phi_e_to_m.size()) != b.cat.n_mors(E))
    throw ContractError("product_presentation: factors must be resolved");
  const std::string sep = "|";
  CgwPresentation p;
  p.cat = product_category(a.cat, b.cat);
  p.zero = p.cat.object_index_checked(a.cat.object(a.zero) + sep + b.cat.object(b.zero));

  p.ck.k.resize(p.cat.n_mors(E));
  p.ck.c.resize(p.cat.n_mors(M));
  for (int ia = 0; ia < a.cat.n_mors(E); ++ia)
    for (int ib = 0; ib < b.cat.n_mors(E); ++ib) {
      const CkEntry& ka = a.ck.k[ia];
      const CkEntry& kb = b.ck.k[ib];
      int e = p.cat.mor_index_checked(E, product_mor_id(a, b, E, ia, ib, sep));
      p.ck.k[e] = {p.cat.object_index_checked(a.cat.object(ka.obj) + sep + b.cat.object(kb.obj)),
                   p.cat.mor_index_checked(M, product_mor_id(a, b, M, ka.mor, kb.mor, sep))};
    }
  for (int ia = 0; ia < a.cat.n_mors(M); ++ia)
    for (int ib = 0; ib < b.cat.n_mors(M); ++ib) {
      const CkEntry& ca = a.ck.c[ia];
      const CkEntry& cb = b.ck.c[ib];
      int m = p.cat.mor_index_checked(M, product_mor_id(a, b, M, ia, ib, sep));
      p.ck.c[m] = {p.cat.object_index_checked(a.cat.object(ca.obj) + sep + b.cat.object(cb.obj)),
                   p.cat.mor_index_checked(E, product_mor_id(a, b, E, ca.mor, cb.mor, sep))};
    }

  for (const IsoPair& pa : a.iso_pairs)
    for (const IsoPair& pb : b.iso_pairs)
      p.phi.pairs.push_back({p.cat.mor_index_checked(E, product_mor_id(a, b, E, pa.e, pb.e, sep)),
                             p.cat.mor_index_checked(M, product_mor_id(a, b, M, pa.m, pb.m, sep))});

  p.rank.cap = a.rank.cap;
  p.rank.cap.insert(p.rank.cap.end(), b.rank.cap.begin(), b.rank.cap.end());
  p.rank.rank.assign(p.cat.n_objects(), {});
  for (int oa = 0; oa < a.cat.n_objects(); ++oa)
    for (int ob = 0; ob < b.cat.n_objects(); ++ob) {
      std::vector<long> rv = a.rank.rank.empty() ? std::vector<long>{} : a.rank.rank[oa];
      const auto& rb = b.rank.rank.empty() ? std::vector<long>{} : b.rank.rank[ob];
      rv.insert(rv.end(), rb.begin(), rb.end());
      p.rank.rank[p.cat.object_index_checked(a.cat.object(oa) + sep + b.cat.object(ob))] = rv;
    }
  p.resolve_phi();
  return p;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

CgwPresentation build_example(const BuilderSpec& spec) {
  if (spec.kind == "finset") return finset(spec.size);
  if (spec.kind == "finset_based") return finset_based(spec.size);
  if (spec.kind == "vect_f2") return vect_f2(spec.dim);
  if (spec.kind == "finite_space") return finite_space(spec.space);
  if (spec.kind == "negative") return negative_p_fixture();
  if (spec.kind == "product") {
    if (spec.factors.size() != 2) throw InputError("product: exactly two factors required");
    CgwPresentation a = build_example(spec.factors[0]);
    CgwPresentation b = build_example(spec.factors[1]);
    return product_presentation(a, b);
  }
  throw InputError("unknown example kind: " + spec.kind);
}

// ---------------------------------------------------------------------------
// dictionaries
// ---------------------------------------------------------------------------

ValidationReport check_presentation_isomorphism(const CgwPresentation& a, const CgwPresentation& b,
                                                const PresentationMap& map) {
  ValidationReport rep;
  if (static_cast<int>(a.phi_e_to_m.size()) != a.cat.n_mors(E) ||
      static_cast<int>(b.phi_e_to_m.size()) != b.cat.n_mors(E))
    throw ContractError("check_presentation_isomorphism: presentations must be resolved");

  auto obj_image = [&](int oa) -> int {
    auto it = map.objects.find(a.cat.object(oa));
    return it == map.objects.end() ? -1 : b.cat.object_index(it->second);
  };
  if (a.cat.n_objects() != b.cat.n_objects())
    rep.add("dict-object", "object counts differ: " + std::to_string(a.cat.n_objects()) + " vs " +
                               std::to_string(b.cat.n_objects()));
  std::set<int> obj_seen;
  for (int oa = 0; oa < a.cat.n_objects(); ++oa) {
    int ob = obj_image(oa);
    if (ob < 0)
      rep.add("dict-object", "object '" + a.cat.object(oa) + "' has no image");
    else if (!obj_seen.insert(ob).second)
      rep.add("dict-object", "object image '" + b.cat.object(ob) + "' duplicated");
  }
  if (!rep.ok()) return rep;

  std::vector<std::vector<int>> mor_image(2);
  for (Family f : {E, M}) {
    const auto& table = f == E ? map.e_morphisms : map.m_morphisms;
    auto& img = mor_image[fam_i(f)];
    img.assign(a.cat.n_mors(f), -1);
    if (a.cat.n_mors(f) != b.cat.n_mors(f))
      rep.add("dict-morphism", std::string(family_name(f)) + "-morphism counts differ");
    std::set<int> seen;
    for (int i = 0; i < a.cat.n_mors(f); ++i) {
      const Morphism& ma = a.cat.mor(f, i);
      auto it = table.find(ma.id);
      int j = it == table.end() ? -1 : b.cat.mor_index(f, it->second);
      if (j < 0) {
        rep.add("dict-morphism", std::string(family_name(f)) + "-morphism '" + ma.id + "' has no image");
        continue;
      }
      if (!seen.insert(j).second)
        rep.add("dict-morphism", "image '" + b.cat.mor(f, j).id + "' duplicated");
      const Morphism& mb = b.cat.mor(f, j);
      if (obj_image(ma.src) != mb.src || obj_image(ma.dst) != mb.dst)
        rep.add("dict-morphism", "'" + ma.id + "' endpoints not preserved");
      img[i] = j;
    }
  }
  if (!rep.ok()) return rep;

  for (Family f : {E, M}) {
    const auto& img = mor_image[fam_i(f)];
    long defined_a = 0, defined_b = 0;
    for (int i = 0; i < a.cat.n_mors(f); ++i)
      for (int j = 0; j < a.cat.n_mors(f); ++j) {
        int r = a.cat.compose(f, i, j);
        if (r < 0) continue;
        ++defined_a;
        int rb = b.cat.compose(f, img[i], img[j]);
        if (rb != img[r])
          rep.add("dict-compose", std::string(family_name(f)) + "-composites of '" +
                                      a.cat.mor(f, i).id + "' and '" + a.cat.mor(f, j).id +
                                      "' not preserved");
      }
    for (int i = 0; i < b.cat.n_mors(f); ++i)
      for (int j = 0; j < b.cat.n_mors(f); ++j)
        if (b.cat.compose(f, i, j) >= 0) ++defined_b;
    if (defined_a != defined_b)
      rep.add("dict-compose", std::string(family_name(f)) + "-composition table sizes differ");
  }

  auto kind_map = [](const FiniteDoubleCategory& cat) {
    std::map<SquareKey, SquareKind> km;
    for (const Square& s : cat.squares()) {
      auto [it, ins] = km.try_emplace(square_key(s), s.kind);
      if (!ins && static_cast<int>(s.kind) > static_cast<int>(it->second)) it->second = s.kind;
    }
    return km;
  };
  auto akm = kind_map(a.cat), bkm = kind_map(b.cat);
  if (akm.size() != bkm.size()) rep.add("dict-square", "square counts differ");
  const auto& ei = mor_image[fam_i(E)];
  const auto& mi = mor_image[fam_i(M)];
  for (auto& [key, kind] : akm) {
    SquareKey bk{mi[key[0]], mi[key[1]], ei[key[2]], ei[key[3]]};
    auto it = bkm.find(bk);
    if (it == bkm.end() || it->second != kind)
      rep.add("dict-square", "square (" + a.cat.mor(M, key[0]).id + "," + a.cat.mor(M, key[1]).id +
                                 "," + a.cat.mor(E, key[2]).id + "," + a.cat.mor(E, key[3]).id +
                                 ") not preserved with its kind");
  }

  if (obj_image(a.zero) != b.zero) rep.add("dict-zero", "zero object not preserved");

  for (int g = 0; g < a.cat.n_mors(E); ++g) {
    const CkEntry& ka = a.ck.k[g];
    const CkEntry& kb = b.ck.k[ei[g]];
    if (obj_image(ka.obj) != kb.obj || mi[ka.mor] != kb.mor)
      rep.add("dict-ck", "kernel entry of '" + a.cat.mor(E, g).id + "' not preserved");
  }
  for (int f = 0; f < a.cat.n_mors(M); ++f) {
    const CkEntry& ca = a.ck.c[f];
    const CkEntry& cb = b.ck.c[mi[f]];
    if (obj_image(ca.obj) != cb.obj || ei[ca.mor] != cb.mor)
      rep.add("dict-ck", "cokernel entry of '" + a.cat.mor(M, f).id + "' not preserved");
  }

  std::set<std::pair<int, int>> b_pairs;
  for (const IsoPair& pb : b.iso_pairs) b_pairs.insert({pb.e, pb.m});
  for (const IsoPair& pa : a.iso_pairs)
    if (!b_pairs.count({ei[pa.e], mi[pa.m]}))
      rep.add("dict-phi", "phi pair ('" + a.cat.mor(E, pa.e).id + "','" + a.cat.mor(M, pa.m).id +
                              "') not preserved");
  return rep;
}

PresentationMap finset_based_dictionary(int n) {
  if (n < 0 || n > 3) throw InputError("finset_based_dictionary: size must be in 0..3");
  PresentationMap map;
  for (int k = 0; k <= n; ++k) map.objects[std::to_string(k)] = std::to_string(k) + "+";
  InjCatalogue cat(n);
  for (const Inj& m : cat.mors) {
    std::string nums = std::to_string(m.a) + "_" + std::to_string(m.b) + suffix_vals(m.v);
    bool ident = is_identity_seq(m.a, m.b, m.v);
    std::string fid = ident ? "id_" + std::to_string(m.a) : "inj_" + nums;
    std::string based_id = ident ? "id_" + std::to_string(m.a) + "+" : "";
    // an injection acting in the e-family corresponds to the based injection;
    // acting in the m-family it corresponds to the collapse onto it
    map.e_morphisms[fid] = ident ? based_id : "binj_" + nums;
    map.m_morphisms[fid] = ident ? based_id : "bcol_" + nums;
  }
  return map;
}

}  // namespace cgw
