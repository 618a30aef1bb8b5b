#include "cgw/qcat.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace cgw {

namespace {

constexpr Family E = Family::E;
constexpr Family M = Family::M;

std::string quo(const std::string& s) { return "'" + s + "'"; }

void finalize(AxiomResult& r) {
  if (r.status == CheckStatus::Skipped) return;
  r.status = r.witnesses.empty() ? CheckStatus::Pass : CheckStatus::Fail;
}

int span_middle(const CgwPresentation& p, const SpanDiagram& s) {
  return p.cat.mor(E, s.e_leg).dst;
}

void require_span(const CgwPresentation& p, const SpanDiagram& s) {
  if (s.e_leg < 0 || s.e_leg >= p.cat.n_mors(E) || s.m_leg < 0 || s.m_leg >= p.cat.n_mors(M))
    throw ContractError("span: leg index out of range");
  if (p.cat.mor(E, s.e_leg).dst != p.cat.mor(M, s.m_leg).src)
    throw ContractError("span: legs do not share a middle object");
}

std::string span_name(const CgwPresentation& p, const SpanDiagram& s) {
  return p.cat.mor(E, s.e_leg).id + ";" + p.cat.mor(M, s.m_leg).id;
}

std::tuple<std::string, std::string, std::string> span_key(const CgwPresentation& p,
                                                           const SpanDiagram& s) {
  return {p.cat.object(span_middle(p, s)), p.cat.mor(E, s.e_leg).id, p.cat.mor(M, s.m_leg).id};
}

// Composite of representative spans through the distinguished-square
// completion; nullopt (with notes) when no unique completion exists.
std::optional<SpanDiagram> compose_spans(const CgwPresentation& p, const SpanDiagram& u,
                                         const SpanDiagram& v, ValidationReport* notes) {
  MixedCompletion comp = complete_me(p, u.m_leg, v.e_leg);
  if (!comp.found || !comp.report.ok()) {
    if (notes) notes->merge(comp.report);
    return std::nullopt;
  }
  int ce = p.cat.compose(E, u.e_leg, comp.square.left);
  int cm = p.cat.compose(M, comp.square.bottom, v.m_leg);
  if (ce < 0 || cm < 0) {
    if (notes)
      notes->add("q-compose", "leg composite undefined after completing " + span_name(p, u) +
                                  " against " + span_name(p, v));
    return std::nullopt;
  }
  return SpanDiagram{ce, cm};
}

}  // namespace

int QCategory::class_of(const SpanDiagram& s) const {
  for (int i = 0; i < static_cast<int>(morphisms.size()); ++i)
    for (const SpanDiagram& r : morphisms[i].representatives)
      if (r == s) return i;
  return -1;
}

bool spans_equivalent(const CgwPresentation& p, const SpanDiagram& s1, const SpanDiagram& s2) {
  require_span(p, s1);
  require_span(p, s2);
  const auto& cat = p.cat;
  if (cat.mor(E, s1.e_leg).src != cat.mor(E, s2.e_leg).src) return false;
  if (cat.mor(M, s1.m_leg).dst != cat.mor(M, s2.m_leg).dst) return false;
  for (const IsoPair& ip : iso_pairs_between(p, span_middle(p, s1), span_middle(p, s2)))
    if (cat.compose(E, s1.e_leg, ip.e) == s2.e_leg &&
        cat.compose(M, ip.m, s2.m_leg) == s1.m_leg)
      return true;
  return false;
}

QMorphism q_class_of(const CgwPresentation& p, const SpanDiagram& s) {
  require_span(p, s);
  const auto& cat = p.cat;
  QMorphism out;
  out.src = cat.mor(E, s.e_leg).src;
  out.dst = cat.mor(M, s.m_leg).dst;
  const int mid = span_middle(p, s);
  std::vector<std::pair<std::tuple<std::string, std::string, std::string>, SpanDiagram>> orbit;
  for (int y = 0; y < cat.n_objects(); ++y)
    for (const IsoPair& ip : iso_pairs_between(p, mid, y)) {
      int inv_m = cat.inverse(M, ip.m);
      int te = cat.compose(E, s.e_leg, ip.e);
      int tm = inv_m < 0 ? -1 : cat.compose(M, inv_m, s.m_leg);
      if (te < 0 || tm < 0)
        throw ContractError("q-class: composition table incomplete under iso transport of " +
                            span_name(p, s));
      orbit.push_back({span_key(p, {te, tm}), {te, tm}});
    }
  std::sort(orbit.begin(), orbit.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, sp] : orbit)
    if (out.representatives.empty() || !(out.representatives.back() == sp))
      out.representatives.push_back(sp);
  out.canonical_rep = out.representatives.front();
  return out;
}

QMorphism q_identity(const CgwPresentation& p, int obj) {
  int e = p.cat.identity(E, obj), m = p.cat.identity(M, obj);
  if (e < 0 || m < 0)
    throw ContractError("q-identity: object " + quo(p.cat.object(obj)) + " lacks identities");
  return q_class_of(p, SpanDiagram{e, m});
}

QMorphism q_compose(const CgwPresentation& p, const QMorphism& u, const QMorphism& v) {
  if (u.dst != v.src) throw ContractError("q-compose: endpoints do not match");
  ValidationReport notes;
  auto s = compose_spans(p, u.canonical_rep, v.canonical_rep, &notes);
  if (!s) {
    std::string why = notes.violations.empty() ? "" : ": " + notes.violations.front().detail;
    throw ContractError("q-compose: no unique distinguished-square completion" + why);
  }
  return q_class_of(p, *s);
}

QCategory build_q_category(const CgwPresentation& p, const QOptions& opts) {
  const auto& cat = p.cat;
  if (!opts.assume_completion) {
    AxiomReport axioms = check_cgw(p);
    if (!axioms.pass()) {
      std::string failed;
      for (const AxiomResult& r : axioms.results)
        if (r.status == CheckStatus::Fail && !r.only_boundary())
          failed += (failed.empty() ? "" : ", ") + r.axiom;
      throw InputError("q-construction requires the category axioms; failing: " + failed);
    }
  }

  QCategory qc;
  const int n = cat.n_objects();
  qc.n_objects = n;
  qc.hom.assign(static_cast<size_t>(n) * std::max(n, 1), {});
  qc.identity_class.assign(n, -1);
  std::map<std::pair<int, int>, int> class_index;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& slot = qc.hom[static_cast<size_t>(a) * n + b];
      for (int x = 0; x < n; ++x)
        for (int e : cat.hom(E, a, x))
          for (int m : cat.hom(M, x, b)) {
            if (class_index.count({e, m})) continue;
            QMorphism qm = q_class_of(p, {e, m});
            int idx = static_cast<int>(qc.morphisms.size());
            for (const SpanDiagram& r : qm.representatives) class_index[{r.e_leg, r.m_leg}] = idx;
            slot.push_back(idx);
            qc.morphisms.push_back(std::move(qm));
          }
    }

  for (int a = 0; a < n; ++a) {
    int e = cat.identity(E, a), m = cat.identity(M, a);
    if (e < 0 || m < 0) {
      qc.report.add("q-identity", "object " + quo(cat.object(a)) + " lacks identity morphisms");
      continue;
    }
    qc.identity_class[a] = class_index.at({e, m});
  }

  const int nm = static_cast<int>(qc.morphisms.size());
  qc.compose_table.assign(static_cast<size_t>(nm) * std::max(nm, 1), -1);
  for (int u = 0; u < nm; ++u)
    for (int v = 0; v < nm; ++v) {
      if (qc.morphisms[u].dst != qc.morphisms[v].src) continue;
      auto s = compose_spans(p, qc.morphisms[u].canonical_rep, qc.morphisms[v].canonical_rep,
                             &qc.report);
      if (!s) continue;
      auto it = class_index.find({s->e_leg, s->m_leg});
      if (it == class_index.end()) {
        qc.report.add("q-compose", "composite span " + span_name(p, *s) +
                                       " is missing from the enumerated classes");
        continue;
      }
      qc.compose_table[static_cast<size_t>(u) * nm + v] = it->second;
    }

  RawCategory raw;
  for (int i = 0; i < n; ++i) raw.objects.push_back(cat.object(i));
  std::vector<std::string> qid(nm);
  for (int u = 0; u < nm; ++u) {
    const QMorphism& qm = qc.morphisms[u];
    bool identity = qm.src == qm.dst && qc.identity_class[qm.src] == u;
    qid[u] = identity ? "id_" + cat.object(qm.src) : span_name(p, qm.canonical_rep);
    raw.m_morphisms.push_back({qid[u], cat.object(qm.src), cat.object(qm.dst)});
  }
  for (int i = 0; i < n; ++i) {
    std::string id = "id_" + cat.object(i);
    raw.e_morphisms.push_back({id, cat.object(i), cat.object(i)});
    raw.e_compose.push_back({id, id, id});
  }
  for (int u = 0; u < nm; ++u)
    for (int v = 0; v < nm; ++v) {
      int w = qc.compose_table[static_cast<size_t>(u) * nm + v];
      if (w >= 0) raw.m_compose.push_back({qid[u], qid[v], qid[w]});
    }
  qc.cat = FiniteDoubleCategory::build(raw, opts.caps);
  qc.report.merge(validate_category(qc.cat, M));
  return qc;
}

bool q_is_iso(const CgwPresentation& p, const QMorphism& u) {
  const auto& cat = p.cat;
  bool legs = cat.is_iso(E, u.canonical_rep.e_leg) && cat.is_iso(M, u.canonical_rep.m_leg);

  int ide = cat.identity(E, u.src), idm = cat.identity(M, u.src);
  int jde = cat.identity(E, u.dst), jdm = cat.identity(M, u.dst);
  if (ide < 0 || idm < 0 || jde < 0 || jdm < 0)
    throw ContractError("q-iso: endpoint objects lack identities");
  SpanDiagram id_src{ide, idm}, id_dst{jde, jdm};

  bool invertible = false;
  for (int x = 0; x < cat.n_objects() && !invertible; ++x)
    for (int e : cat.hom(E, u.dst, x)) {
      if (invertible) break;
      for (int m : cat.hom(M, x, u.src)) {
        SpanDiagram v{e, m};
        auto uv = compose_spans(p, u.canonical_rep, v, nullptr);
        if (!uv || !spans_equivalent(p, *uv, id_src)) continue;
        auto vu = compose_spans(p, v, u.canonical_rep, nullptr);
        if (!vu || !spans_equivalent(p, *vu, id_dst)) continue;
        invertible = true;
        break;
      }
    }

  if (legs != invertible)
    throw ContractError("q-iso: leg characterization (" + std::string(legs ? "iso" : "non-iso") +
                        ") disagrees with the inverse search for " +
                        span_name(p, u.canonical_rep));
  return legs;
}

AxiomReport slice_preorder_check(const CgwPresentation& p, int B) {
  const auto& cat = p.cat;
  if (B < 0 || B >= cat.n_objects()) throw ContractError("slice: object index out of range");
  QCategory qc = build_q_category(p);
  AxiomReport rep;

  std::vector<int> objs;  // slice objects: every class into B
  for (int a = 0; a < cat.n_objects(); ++a)
    for (int u : qc.hom_classes(a, B)) objs.push_back(u);

  auto slice_hom_count = [&](int u, int u2) {
    int count = 0;
    for (int w : qc.hom_classes(qc.morphisms[u].src, qc.morphisms[u2].src))
      if (qc.compose(w, u2) == u) ++count;
    return count;
  };

  auto q_name = [&](int u) { return quo(span_name(p, qc.morphisms[u].canonical_rep)); };

  AxiomResult pre{"preorder"};
  for (int u : objs)
    for (int u2 : objs) {
      int c = slice_hom_count(u, u2);
      if (c > 1)
        pre.witness(std::to_string(c) + " slice morphisms from " + q_name(u) + " to " + q_name(u2));
    }
  finalize(pre);
  rep.add(pre);

  // filtration category: chains K >-> X >-> B
  struct Chain {
    int a = -1, f = -1;
  };
  std::vector<Chain> chains;
  for (int x = 0; x < cat.n_objects(); ++x)
    for (int f : cat.hom(M, x, B))
      for (int k = 0; k < cat.n_objects(); ++k)
        for (int a : cat.hom(M, k, x)) chains.push_back({a, f});

  auto chain_name = [&](const Chain& c) {
    return quo(cat.mor(M, c.a).id + ";" + cat.mor(M, c.f).id);
  };
  auto lb_hom_count = [&](const Chain& c1, const Chain& c2) {
    int count = 0;
    for (int v : cat.hom(M, cat.mor(M, c2.a).src, cat.mor(M, c1.a).src))
      for (int w : cat.hom(M, cat.mor(M, c1.a).dst, cat.mor(M, c2.a).dst)) {
        if (cat.compose(M, w, c2.f) != c1.f) continue;
        int va = cat.compose(M, v, c1.a);
        if (va < 0 || cat.compose(M, va, w) != c2.a) continue;
        ++count;
      }
    return count;
  };

  AxiomResult lpre{"filtration-preorder"};
  for (const Chain& c1 : chains)
    for (const Chain& c2 : chains) {
      int c = lb_hom_count(c1, c2);
      if (c > 1)
        lpre.witness(std::to_string(c) + " chain morphisms from " + chain_name(c1) + " to " +
                     chain_name(c2));
    }
  finalize(lpre);
  rep.add(lpre);

  // comparison functor: kernel of the e-leg, then the m-leg
  auto kappa = [&](int u) {
    const SpanDiagram& r = qc.morphisms[u].canonical_rep;
    return Chain{p.k_of(r.e_leg).mor, r.m_leg};
  };

  AxiomResult ff{"kappa-fully-faithful"};
  for (int u : objs)
    for (int u2 : objs) {
      int sc = slice_hom_count(u, u2);
      int lc = lb_hom_count(kappa(u), kappa(u2));
      if (sc != lc)
        ff.witness("hom sizes differ between " + q_name(u) + " and " + q_name(u2) + ": " +
                   std::to_string(sc) + " in the slice vs " + std::to_string(lc) +
                   " between chains");
    }
  finalize(ff);
  rep.add(ff);

  AxiomResult eso{"kappa-essentially-surjective"};
  for (const Chain& c : chains) {
    bool hit = false;
    for (int u : objs) {
      Chain ku = kappa(u);
      if (lb_hom_count(ku, c) >= 1 && lb_hom_count(c, ku) >= 1) {
        hit = true;
        break;
      }
    }
    if (!hit) eso.witness("no slice object hits the chain " + chain_name(c));
  }
  finalize(eso);
  rep.add(eso);

  return rep;
}

}  // namespace cgw
