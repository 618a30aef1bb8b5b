#include "cgw/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace cgw {

bool ValidationReport::only_boundary() const {
  if (violations.empty()) return false;
  for (const auto& v : violations)
    if (!v.boundary) return false;
  return true;
}

void ValidationReport::add(std::string code, std::string detail, bool boundary) {
  violations.push_back({std::move(code), std::move(detail), boundary});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

SizeCaps SizeCaps::from_env() {
  SizeCaps caps;
  if (const char* env = std::getenv("CGW_SIZE_CAP")) {
    std::string s(env);
    auto comma = s.find(',');
    try {
      if (comma == std::string::npos) {
        caps.objects = std::stoi(s);
        caps.morphisms = std::max(caps.morphisms, caps.objects * caps.objects);
      } else {
        caps.objects = std::stoi(s.substr(0, comma));
        caps.morphisms = std::stoi(s.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw InputError("CGW_SIZE_CAP must be an integer or 'objects,morphisms'");
    }
  }
  return caps;
}

FiniteDoubleCategory FiniteDoubleCategory::build(const RawCategory& raw, const SizeCaps& caps) {
  FiniteDoubleCategory cat;
  if (!caps.force) {
    if (static_cast<int>(raw.objects.size()) > caps.objects)
      throw InputError("size cap exceeded: " + std::to_string(raw.objects.size()) + " objects > " +
                       std::to_string(caps.objects) + " (set CGW_SIZE_CAP or pass --force)");
    for (const auto* ms : {&raw.e_morphisms, &raw.m_morphisms})
      if (static_cast<int>(ms->size()) > caps.morphisms)
        throw InputError("size cap exceeded: " + std::to_string(ms->size()) + " morphisms > " +
                         std::to_string(caps.morphisms) + " (set CGW_SIZE_CAP or pass --force)");
  }
  for (const auto& o : raw.objects) {
    if (cat.object_index_.count(o)) throw InputError("duplicate object id: " + o);
    cat.object_index_[o] = static_cast<int>(cat.objects_.size());
    cat.objects_.push_back(o);
  }
  const int n_obj = cat.n_objects();
  for (Family f : {Family::E, Family::M}) {
    const auto& raw_ms = (f == Family::E) ? raw.e_morphisms : raw.m_morphisms;
    auto& ms = cat.mors_[fam_i(f)];
    auto& idx = cat.mor_index_[fam_i(f)];
    for (const auto& rm : raw_ms) {
      if (idx.count(rm.id))
        throw InputError("duplicate " + std::string(family_name(f)) + "-morphism id: " + rm.id);
      auto s = cat.object_index_.find(rm.src);
      auto d = cat.object_index_.find(rm.dst);
      if (s == cat.object_index_.end() || d == cat.object_index_.end())
        throw InputError("morphism " + rm.id + " references undeclared object");
      idx[rm.id] = static_cast<int>(ms.size());
      ms.push_back({rm.id, s->second, d->second});
    }
    const int n = static_cast<int>(ms.size());
    cat.comp_[fam_i(f)].assign(static_cast<size_t>(n) * n, -1);
    const auto& raw_comp = (f == Family::E) ? raw.e_compose : raw.m_compose;
    for (const auto& rc : raw_comp) {
      auto a = idx.find(rc.first);
      auto b = idx.find(rc.second);
      auto c = idx.find(rc.result);
      if (a == idx.end() || b == idx.end() || c == idx.end())
        throw InputError("compose entry (" + rc.first + "," + rc.second + "," + rc.result +
                         ") references undeclared morphism");
      int& slot = cat.comp_[fam_i(f)][static_cast<size_t>(a->second) * n + b->second];
      if (slot != -1 && slot != c->second)
        throw InputError("conflicting compose entries for (" + rc.first + "," + rc.second + ")");
      slot = c->second;
    }
    cat.identity_[fam_i(f)].assign(n_obj, -1);
    for (int o = 0; o < n_obj; ++o) {
      auto it = idx.find("id_" + cat.objects_[o]);
      if (it != idx.end()) cat.identity_[fam_i(f)][o] = it->second;
    }
  }
  for (const auto& rs : raw.squares) {
    Square s;
    if (rs.kind == "distinguished")
      s.kind = SquareKind::Distinguished;
    else if (rs.kind == "commutative")
      s.kind = SquareKind::Commutative;
    else
      throw InputError("square kind must be 'distinguished' or 'commutative', got '" + rs.kind + "'");
    s.top = cat.mor_index_checked(Family::M, rs.top);
    s.bottom = cat.mor_index_checked(Family::M, rs.bottom);
    s.left = cat.mor_index_checked(Family::E, rs.left);
    s.right = cat.mor_index_checked(Family::E, rs.right);
    cat.squares_.push_back(s);
  }
  cat.index();
  return cat;
}

void FiniteDoubleCategory::index() {
  const int n_obj = n_objects();
  for (Family f : {Family::E, Family::M}) {
    auto& hom = hom_[fam_i(f)];
    hom.assign(static_cast<size_t>(n_obj) * std::max(n_obj, 1), {});
    const auto& ms = mors_[fam_i(f)];
    for (int i = 0; i < static_cast<int>(ms.size()); ++i)
      hom[static_cast<size_t>(ms[i].src) * n_obj + ms[i].dst].push_back(i);
    // two-sided inverses
    auto& inv = inverse_[fam_i(f)];
    inv.assign(ms.size(), -1);
    for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
      const auto& m = ms[i];
      int id_src = identity_[fam_i(f)][m.src];
      int id_dst = identity_[fam_i(f)][m.dst];
      if (id_src < 0 || id_dst < 0) continue;
      for (int g : hom[static_cast<size_t>(m.dst) * n_obj + m.src]) {
        if (compose(f, i, g) == id_src && compose(f, g, i) == id_dst) {
          inv[i] = g;
          break;
        }
      }
    }
  }
  square_map_.clear();
  by_top_.assign(mors_[fam_i(Family::M)].size(), {});
  by_bottom_.assign(mors_[fam_i(Family::M)].size(), {});
  by_left_.assign(mors_[fam_i(Family::E)].size(), {});
  by_right_.assign(mors_[fam_i(Family::E)].size(), {});
  for (int i = 0; i < static_cast<int>(squares_.size()); ++i) {
    const Square& s = squares_[i];
    auto [it, inserted] = square_map_.try_emplace(square_key(s), s.kind);
    if (!inserted && static_cast<int>(s.kind) > static_cast<int>(it->second)) it->second = s.kind;
    by_top_[s.top].push_back(i);
    by_bottom_[s.bottom].push_back(i);
    by_left_[s.left].push_back(i);
    by_right_[s.right].push_back(i);
  }
}

int FiniteDoubleCategory::object_index(const std::string& id) const {
  auto it = object_index_.find(id);
  return it == object_index_.end() ? -1 : it->second;
}

int FiniteDoubleCategory::object_index_checked(const std::string& id) const {
  int i = object_index(id);
  if (i < 0) throw InputError("undeclared object: " + id);
  return i;
}

int FiniteDoubleCategory::mor_index(Family f, const std::string& id) const {
  auto it = mor_index_[fam_i(f)].find(id);
  return it == mor_index_[fam_i(f)].end() ? -1 : it->second;
}

int FiniteDoubleCategory::mor_index_checked(Family f, const std::string& id) const {
  int i = mor_index(f, id);
  if (i < 0) throw InputError("undeclared " + std::string(family_name(f)) + "-morphism: " + id);
  return i;
}

int FiniteDoubleCategory::compose(Family f, int first, int second) const {
  const int n = n_mors(f);
  return comp_[fam_i(f)][static_cast<size_t>(first) * n + second];
}

int FiniteDoubleCategory::compose_checked(Family f, int first, int second) const {
  if (mor(f, first).dst != mor(f, second).src)
    throw ContractError("compose: morphisms not composable: " + mor(f, first).id + " then " +
                        mor(f, second).id);
  int r = compose(f, first, second);
  if (r < 0)
    throw ContractError("compose: missing table entry for (" + mor(f, first).id + "," +
                        mor(f, second).id + ")");
  return r;
}

bool FiniteDoubleCategory::has_square(SquareKind at_least, int top, int bottom, int left,
                                      int right) const {
  auto it = square_map_.find({top, bottom, left, right});
  if (it == square_map_.end()) return false;
  return static_cast<int>(it->second) >= static_cast<int>(at_least);
}

std::optional<SquareKind> FiniteDoubleCategory::square_kind(int top, int bottom, int left,
                                                            int right) const {
  auto it = square_map_.find({top, bottom, left, right});
  if (it == square_map_.end()) return std::nullopt;
  return it->second;
}

const std::vector<int>& FiniteDoubleCategory::hom(Family f, int src, int dst) const {
  return hom_[fam_i(f)][static_cast<size_t>(src) * n_objects() + dst];
}

bool FiniteDoubleCategory::is_monic(Family f, int m) const {
  const Morphism& mo = mor(f, m);
  for (int x = 0; x < n_objects(); ++x) {
    const auto& par = hom(f, x, mo.src);
    for (size_t i = 0; i < par.size(); ++i)
      for (size_t j = i + 1; j < par.size(); ++j)
        if (compose(f, par[i], m) >= 0 && compose(f, par[i], m) == compose(f, par[j], m)) return false;
  }
  return true;
}

int FiniteDoubleCategory::inverse(Family f, int m) const { return inverse_[fam_i(f)][m]; }

std::vector<int> FiniteDoubleCategory::isomorphisms(Family f) const {
  std::vector<int> out;
  for (int i = 0; i < n_mors(f); ++i)
    if (inverse(f, i) >= 0) out.push_back(i);
  return out;
}

std::string FiniteDoubleCategory::describe_square(const Square& s) const {
  std::ostringstream os;
  os << (s.kind == SquareKind::Distinguished ? "dist" : "comm") << "[top=" << mor(Family::M, s.top).id
     << " bottom=" << mor(Family::M, s.bottom).id << " left=" << mor(Family::E, s.left).id
     << " right=" << mor(Family::E, s.right).id << "]";
  return os.str();
}

RawCategory FiniteDoubleCategory::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (Family f : {Family::E, Family::M}) {
    auto& ms = (f == Family::E) ? raw.e_morphisms : raw.m_morphisms;
    auto& cs = (f == Family::E) ? raw.e_compose : raw.m_compose;
    const int n = n_mors(f);
    for (const auto& m : mors_[fam_i(f)]) ms.push_back({m.id, objects_[m.src], objects_[m.dst]});
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int r = compose(f, a, b);
        if (r >= 0) cs.push_back({mor(f, a).id, mor(f, b).id, mor(f, r).id});
      }
  }
  for (const auto& s : squares_)
    raw.squares.push_back({s.kind == SquareKind::Distinguished ? "distinguished" : "commutative",
                           mor(Family::M, s.top).id, mor(Family::M, s.bottom).id,
                           mor(Family::E, s.left).id, mor(Family::E, s.right).id});
  return raw;
}

ValidationReport validate_category(const FiniteDoubleCategory& cat, Family f) {
  ValidationReport rep;
  const int n = cat.n_mors(f);
  for (int o = 0; o < cat.n_objects(); ++o) {
    int id = cat.identity(f, o);
    if (id < 0) {
      rep.add("missing-identity", std::string(family_name(f)) + "-identity id_" + cat.object(o) +
                                      " not declared");
      continue;
    }
    const Morphism& m = cat.mor(f, id);
    if (m.src != o || m.dst != o)
      rep.add("bad-identity", "morphism " + m.id + " must have src=dst=" + cat.object(o));
  }
  for (int a = 0; a < n; ++a) {
    const Morphism& ma = cat.mor(f, a);
    int id_src = cat.identity(f, ma.src), id_dst = cat.identity(f, ma.dst);
    if (id_src >= 0 && cat.compose(f, id_src, a) != a)
      rep.add("unit-law", "id_" + cat.object(ma.src) + " then " + ma.id + " != " + ma.id);
    if (id_dst >= 0 && cat.compose(f, a, id_dst) != a)
      rep.add("unit-law", ma.id + " then id_" + cat.object(ma.dst) + " != " + ma.id);
    for (int b = 0; b < n; ++b) {
      const Morphism& mb = cat.mor(f, b);
      int ab = cat.compose(f, a, b);
      if (ma.dst == mb.src) {
        if (ab < 0) {
          rep.add("missing-composite", "no entry for (" + ma.id + "," + mb.id + ")");
          continue;
        }
        const Morphism& mab = cat.mor(f, ab);
        if (mab.src != ma.src || mab.dst != mb.dst)
          rep.add("ill-typed-composite",
                  "(" + ma.id + "," + mb.id + ") -> " + mab.id + " has wrong endpoints");
      } else if (ab >= 0) {
        rep.add("spurious-composite", "entry for non-composable (" + ma.id + "," + mb.id + ")");
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (cat.mor(f, a).dst != cat.mor(f, b).src) continue;
      int ab = cat.compose(f, a, b);
      if (ab < 0) continue;
      for (int c = 0; c < n; ++c) {
        if (cat.mor(f, b).dst != cat.mor(f, c).src) continue;
        int bc = cat.compose(f, b, c);
        if (bc < 0) continue;
        int left = cat.compose(f, ab, c), right = cat.compose(f, a, bc);
        if (left != right || left < 0)
          rep.add("associativity", "(" + cat.mor(f, a).id + "," + cat.mor(f, b).id + "," +
                                       cat.mor(f, c).id + ") associates inconsistently");
      }
    }
  return rep;
}

ValidationReport validate_double_category(const FiniteDoubleCategory& cat) {
  ValidationReport rep = validate_category(cat, Family::E);
  rep.merge(validate_category(cat, Family::M));
  for (const auto& s : cat.squares()) {
    const Morphism& t = cat.mor(Family::M, s.top);
    const Morphism& b = cat.mor(Family::M, s.bottom);
    const Morphism& l = cat.mor(Family::E, s.left);
    const Morphism& r = cat.mor(Family::E, s.right);
    if (t.src != l.src || t.dst != r.src || b.src != l.dst || b.dst != r.dst)
      rep.add("square-corners", cat.describe_square(s) + " has inconsistent corners");
  }
  if (rep.ok()) {
    rep.merge(check_pasting_closure(cat));
    rep.merge(check_iso_inversion(cat));
  }
  return rep;
}

ValidationReport check_pasting_closure(const FiniteDoubleCategory& cat) {
  ValidationReport rep;
  const auto& squares = cat.squares();
  for (const auto& s1 : squares) {
    for (int j : cat.squares_with_left(s1.right)) {
      const Square& s2 = squares[j];
      auto glued = try_paste(cat, s1, s2, /*horizontal=*/true);
      if (!glued) continue;
      if (!cat.has_square(glued->kind, glued->top, glued->bottom, glued->left, glued->right))
        rep.add("pasting-closure", "horizontal paste of " + cat.describe_square(s1) + " and " +
                                       cat.describe_square(s2) + " missing: " +
                                       cat.describe_square(*glued));
    }
    for (int j : cat.squares_with_top(s1.bottom)) {
      const Square& s2 = squares[j];
      auto glued = try_paste(cat, s1, s2, /*horizontal=*/false);
      if (!glued) continue;
      if (!cat.has_square(glued->kind, glued->top, glued->bottom, glued->left, glued->right))
        rep.add("pasting-closure", "vertical paste of " + cat.describe_square(s1) + " and " +
                                       cat.describe_square(s2) + " missing: " +
                                       cat.describe_square(*glued));
    }
  }
  return rep;
}

ValidationReport check_iso_inversion(const FiniteDoubleCategory& cat) {
  ValidationReport rep;
  for (const auto& s : cat.squares()) {
    int ti = cat.inverse(Family::M, s.top), bi = cat.inverse(Family::M, s.bottom);
    if (ti < 0 || bi < 0) continue;
    if (!cat.has_square(s.kind, ti, bi, s.right, s.left))
      rep.add("iso-inversion", "reflection of " + cat.describe_square(s) + " absent");
  }
  return rep;
}

std::optional<Square> try_paste(const FiniteDoubleCategory& cat, const Square& s1, const Square& s2,
                                bool horizontal) {
  Square out;
  out.kind = (s1.kind == SquareKind::Distinguished && s2.kind == SquareKind::Distinguished)
                 ? SquareKind::Distinguished
                 : SquareKind::Commutative;
  if (horizontal) {
    if (s1.right != s2.left) return std::nullopt;
    int top = cat.compose(Family::M, s1.top, s2.top);
    int bottom = cat.compose(Family::M, s1.bottom, s2.bottom);
    if (top < 0 || bottom < 0) return std::nullopt;
    out.top = top;
    out.bottom = bottom;
    out.left = s1.left;
    out.right = s2.right;
  } else {
    if (s1.bottom != s2.top) return std::nullopt;
    int left = cat.compose(Family::E, s1.left, s2.left);
    int right = cat.compose(Family::E, s1.right, s2.right);
    if (left < 0 || right < 0) return std::nullopt;
    out.top = s1.top;
    out.bottom = s2.bottom;
    out.left = left;
    out.right = right;
  }
  return out;
}

Square paste_squares(const FiniteDoubleCategory& cat, const Square& s1, const Square& s2,
                     bool horizontal) {
  auto r = try_paste(cat, s1, s2, horizontal);
  if (!r)
    throw ContractError(std::string("paste_squares: ") + (horizontal ? "horizontal" : "vertical") +
                        " edges do not match");
  return *r;
}

FiniteDoubleCategory saturate(const FiniteDoubleCategory& cat) {
  RawCategory raw = cat.to_raw();
  std::map<SquareKey, SquareKind> known;
  for (const auto& s : cat.squares()) {
    auto [it, inserted] = known.try_emplace(square_key(s), s.kind);
    if (!inserted && static_cast<int>(s.kind) > static_cast<int>(it->second)) it->second = s.kind;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Square> items;
    items.reserve(known.size());
    for (const auto& [key, kind] : known) items.push_back({kind, key[0], key[1], key[2], key[3]});
    for (const Square& s1 : items)
      for (const Square& s2 : items)
        for (bool horizontal : {true, false}) {
          auto glued = try_paste(cat, s1, s2, horizontal);
          if (!glued) continue;
          auto [it, inserted] = known.try_emplace(square_key(*glued), glued->kind);
          if (inserted) {
            changed = true;
          } else if (static_cast<int>(glued->kind) > static_cast<int>(it->second)) {
            it->second = glued->kind;
            changed = true;
          }
        }
  }
  raw.squares.clear();
  for (const auto& [key, kind] : known)
    raw.squares.push_back({kind == SquareKind::Distinguished ? "distinguished" : "commutative",
                           cat.mor(Family::M, key[0]).id, cat.mor(Family::M, key[1]).id,
                           cat.mor(Family::E, key[2]).id, cat.mor(Family::E, key[3]).id});
  SizeCaps caps;
  caps.force = true;
  return FiniteDoubleCategory::build(raw, caps);
}

namespace {

LimitSearch limit_search(const FiniteDoubleCategory& cat, Family fam, int f, int g, bool is_pullback) {
  const Morphism& mf = cat.mor(fam, f);
  const Morphism& mg = cat.mor(fam, g);
  if (is_pullback ? (mf.dst != mg.dst) : (mf.src != mg.src))
    throw ContractError(std::string(is_pullback ? "pullback" : "pushout") + ": not a " +
                        (is_pullback ? "cospan" : "span"));
  const int A = mf.src, B = mg.src;           // pullback: legs end here
  const int A2 = mf.dst, B2 = mg.dst;         // pushout: legs start at dst
  // all cones: (Q, u, v) with u;f == v;g (pullback) or f;u == g;v (pushout)
  struct Cone {
    int obj, u, v;
  };
  std::vector<Cone> cones;
  for (int q = 0; q < cat.n_objects(); ++q) {
    const auto& us = is_pullback ? cat.hom(fam, q, A) : cat.hom(fam, A2, q);
    const auto& vs = is_pullback ? cat.hom(fam, q, B) : cat.hom(fam, B2, q);
    for (int u : us)
      for (int v : vs) {
        int lhs = is_pullback ? cat.compose(fam, u, f) : cat.compose(fam, f, u);
        int rhs = is_pullback ? cat.compose(fam, v, g) : cat.compose(fam, g, v);
        if (lhs >= 0 && lhs == rhs) cones.push_back({q, u, v});
      }
  }
  LimitSearch out;
  for (const Cone& cand : cones) {
    bool universal = true;
    for (const Cone& c : cones) {
      int count = 0;
      const auto& ws = is_pullback ? cat.hom(fam, c.obj, cand.obj) : cat.hom(fam, cand.obj, c.obj);
      for (int w : ws) {
        int wu = is_pullback ? cat.compose(fam, w, cand.u) : cat.compose(fam, cand.u, w);
        int wv = is_pullback ? cat.compose(fam, w, cand.v) : cat.compose(fam, cand.v, w);
        if (wu == c.u && wv == c.v) ++count;
      }
      if (count != 1) {
        universal = false;
        break;
      }
    }
    if (universal) {
      out.all_universal.push_back({cand.obj, cand.u, cand.v});
      if (!out.result) out.result = out.all_universal.back();
    }
  }
  return out;
}

}  // namespace

LimitSearch pullback(const FiniteDoubleCategory& cat, Family fam, int f, int g) {
  return limit_search(cat, fam, f, g, true);
}

LimitSearch pushout(const FiniteDoubleCategory& cat, Family fam, int f, int g) {
  return limit_search(cat, fam, f, g, false);
}

bool is_pullback_cone(const FiniteDoubleCategory& cat, Family fam, int f, int g, int leg1, int leg2) {
  const Morphism& mf = cat.mor(fam, f);
  const Morphism& mg = cat.mor(fam, g);
  const Morphism& l1 = cat.mor(fam, leg1);
  const Morphism& l2 = cat.mor(fam, leg2);
  if (mf.dst != mg.dst || l1.dst != mf.src || l2.dst != mg.src || l1.src != l2.src) return false;
  int diag = cat.compose(fam, leg1, f);
  if (diag < 0 || diag != cat.compose(fam, leg2, g)) return false;
  const int apex = l1.src;
  for (int q = 0; q < cat.n_objects(); ++q) {
    for (int u : cat.hom(fam, q, mf.src))
      for (int v : cat.hom(fam, q, mg.src)) {
        int lhs = cat.compose(fam, u, f), rhs = cat.compose(fam, v, g);
        if (lhs < 0 || lhs != rhs) continue;
        int count = 0;
        for (int w : cat.hom(fam, q, apex))
          if (cat.compose(fam, w, leg1) == u && cat.compose(fam, w, leg2) == v) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

bool is_pushout_cocone(const FiniteDoubleCategory& cat, Family fam, int f, int g, int leg1, int leg2) {
  const Morphism& mf = cat.mor(fam, f);
  const Morphism& mg = cat.mor(fam, g);
  const Morphism& l1 = cat.mor(fam, leg1);
  const Morphism& l2 = cat.mor(fam, leg2);
  if (mf.src != mg.src || l1.src != mf.dst || l2.src != mg.dst || l1.dst != l2.dst) return false;
  int diag = cat.compose(fam, f, leg1);
  if (diag < 0 || diag != cat.compose(fam, g, leg2)) return false;
  const int apex = l1.dst;
  for (int q = 0; q < cat.n_objects(); ++q) {
    for (int u : cat.hom(fam, mf.dst, q))
      for (int v : cat.hom(fam, mg.dst, q)) {
        int lhs = cat.compose(fam, f, u), rhs = cat.compose(fam, g, v);
        if (lhs < 0 || lhs != rhs) continue;
        int count = 0;
        for (int w : cat.hom(fam, apex, q))
          if (cat.compose(fam, leg1, w) == u && cat.compose(fam, leg2, w) == v) ++count;
        if (count != 1) return false;
      }
  }
  return true;
}

FiniteDoubleCategory product_category(const FiniteDoubleCategory& c1, const FiniteDoubleCategory& c2,
                                      const std::string& sep) {
  RawCategory raw;
  auto obj_id = [&](int a, int b) { return c1.object(a) + sep + c2.object(b); };
  for (int a = 0; a < c1.n_objects(); ++a)
    for (int b = 0; b < c2.n_objects(); ++b) raw.objects.push_back(obj_id(a, b));
  auto mor_id = [&](Family f, int a, int b) {
    const Morphism& ma = c1.mor(f, a);
    const Morphism& mb = c2.mor(f, b);
    if (ma.src == ma.dst && mb.src == mb.dst && c1.identity(f, ma.src) == a &&
        c2.identity(f, mb.src) == b)
      return "id_" + obj_id(ma.src, mb.src);
    return ma.id + sep + mb.id;
  };
  for (Family f : {Family::E, Family::M}) {
    auto& ms = (f == Family::E) ? raw.e_morphisms : raw.m_morphisms;
    auto& cs = (f == Family::E) ? raw.e_compose : raw.m_compose;
    for (int a = 0; a < c1.n_mors(f); ++a)
      for (int b = 0; b < c2.n_mors(f); ++b)
        ms.push_back({mor_id(f, a, b), obj_id(c1.mor(f, a).src, c2.mor(f, b).src),
                      obj_id(c1.mor(f, a).dst, c2.mor(f, b).dst)});
    for (int a1 = 0; a1 < c1.n_mors(f); ++a1)
      for (int b1 = 0; b1 < c2.n_mors(f); ++b1)
        for (int a2 = 0; a2 < c1.n_mors(f); ++a2) {
          int ra = c1.compose(f, a1, a2);
          if (ra < 0) continue;
          for (int b2 = 0; b2 < c2.n_mors(f); ++b2) {
            int rb = c2.compose(f, b1, b2);
            if (rb < 0) continue;
            cs.push_back({mor_id(f, a1, b1), mor_id(f, a2, b2), mor_id(f, ra, rb)});
          }
        }
  }
  for (const auto& s1 : c1.squares())
    for (const auto& s2 : c2.squares()) {
      bool dist = s1.kind == SquareKind::Distinguished && s2.kind == SquareKind::Distinguished;
      raw.squares.push_back({dist ? "distinguished" : "commutative",
                             mor_id(Family::M, s1.top, s2.top), mor_id(Family::M, s1.bottom, s2.bottom),
                             mor_id(Family::E, s1.left, s2.left),
                             mor_id(Family::E, s1.right, s2.right)});
    }
  SizeCaps caps = SizeCaps::from_env();
  caps.force = true;  // callers validate sizes on their own inputs
  return FiniteDoubleCategory::build(raw, caps);
}

RawCategory full_subcategory_raw(const FiniteDoubleCategory& cat,
                                 const std::vector<std::string>& object_ids) {
  std::set<int> keep;
  for (const auto& id : object_ids) keep.insert(cat.object_index_checked(id));
  RawCategory raw;
  for (int o : keep) raw.objects.push_back(cat.object(o));
  for (Family f : {Family::E, Family::M}) {
    auto& ms = (f == Family::E) ? raw.e_morphisms : raw.m_morphisms;
    auto& cs = (f == Family::E) ? raw.e_compose : raw.m_compose;
    std::set<int> kept_mors;
    for (int i = 0; i < cat.n_mors(f); ++i) {
      const Morphism& m = cat.mor(f, i);
      if (keep.count(m.src) && keep.count(m.dst)) {
        kept_mors.insert(i);
        ms.push_back({m.id, cat.object(m.src), cat.object(m.dst)});
      }
    }
    for (int a : kept_mors)
      for (int b : kept_mors) {
        int r = cat.compose(f, a, b);
        if (r >= 0) cs.push_back({cat.mor(f, a).id, cat.mor(f, b).id, cat.mor(f, r).id});
      }
  }
  for (const auto& s : cat.squares()) {
    if (keep.count(cat.square_tl(s)) && keep.count(cat.square_tr(s)) && keep.count(cat.square_bl(s)) &&
        keep.count(cat.square_br(s)))
      raw.squares.push_back({s.kind == SquareKind::Distinguished ? "distinguished" : "commutative",
                             cat.mor(Family::M, s.top).id, cat.mor(Family::M, s.bottom).id,
                             cat.mor(Family::E, s.left).id, cat.mor(Family::E, s.right).id});
  }
  return raw;
}

}  // namespace cgw
