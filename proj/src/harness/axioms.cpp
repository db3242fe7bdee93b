#include "coarsehh/harness/axioms.hpp"

#include "coarsehh/error.hpp"
#include "coarsehh/harness/oracles.hpp"
#include "coarsehh/io.hpp"
#include "coarsehh/trace.hpp"

#include <algorithm>
#include <sstream>

namespace coarsehh {

namespace {

std::string list_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::vector<long long> as_ll(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

std::size_t dim_at(const ChainComplex& c, int n) { return n < 0 || n > c.top() ? 0 : c.dims[n]; }

/// Per-degree chain map between two complexes.
using ChainMap = std::vector<Matrix>;

/// Cone_n = B_n ⊕ A_{n-1}, d(b, a) = (∂b + F a, -∂a).
ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const ChainMap& f) {
  ChainComplex out;
  out.coeffs = b.coeffs;
  const int top = b.top();
  for (int n = 0; n <= top; ++n) out.dims.push_back(dim_at(b, n) + dim_at(a, n - 1));
  for (int n = 0; n <= top; ++n) {
    Matrix d(n == 0 ? 0 : out.dims[n - 1], out.dims[n]);
    if (n >= 1) {
      d.add_block(b.d[n], 0, 0);
      d.add_block(f[n - 1], 0, dim_at(b, n));
      if (n >= 2) d.add_block(a.d[n - 1].scaled(-1), dim_at(b, n - 1), dim_at(b, n));
    }
    out.d.push_back(d.reduced(out.coeffs));
  }
  return out;
}

/// T_n = D_n ⊕ B_{n-1} ⊕ C_{n-1} ⊕ A_{n-2} for the square A -> B, C -> D.
ChainComplex square_cone(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c, const ChainComplex& d,
                         const ChainMap& i, const ChainMap& j, const ChainMap& k, const ChainMap& l) {
  ChainComplex out;
  out.coeffs = d.coeffs;
  const int top = d.top();
  struct Offsets {
    std::size_t dd, bb, cc, aa, total;
  };
  auto offsets = [&](int n) {
    Offsets o{};
    o.dd = 0;
    o.bb = dim_at(d, n);
    o.cc = o.bb + dim_at(b, n - 1);
    o.aa = o.cc + dim_at(c, n - 1);
    o.total = o.aa + dim_at(a, n - 2);
    return o;
  };
  for (int n = 0; n <= top; ++n) out.dims.push_back(offsets(n).total);
  for (int n = 0; n <= top; ++n) {
    Matrix m(n == 0 ? 0 : out.dims[n - 1], out.dims[n]);
    if (n >= 1) {
      const Offsets col = offsets(n), row = offsets(n - 1);
      m.add_block(d.d[n], row.dd, col.dd);
      m.add_block(k[n - 1], row.dd, col.bb);
      m.add_block(l[n - 1], row.dd, col.cc);
      if (n >= 2) {
        m.add_block(b.d[n - 1].scaled(-1), row.bb, col.bb);
        m.add_block(c.d[n - 1].scaled(-1), row.cc, col.cc);
        m.add_block(i[n - 2], row.bb, col.aa);
        m.add_block(j[n - 2].scaled(-1), row.cc, col.aa);
      }
      if (n >= 3) m.add_block(a.d[n - 2], row.aa, col.aa);
    }
    out.d.push_back(m.reduced(out.coeffs));
  }
  return out;
}

/// Checks d^2 = 0 and vanishing homology in degrees < top.
void require_acyclic(AxiomReport& r, const std::string& what, const ChainComplex& c, int top) {
  const std::string bad = c.verify();
  r.check(what + " is a complex", bad.empty(), bad);
  if (!bad.empty()) return;
  std::vector<std::size_t> betti;
  for (int n = 0; n < top; ++n) betti.push_back(c.homology(n).betti);
  r.add_data(what + " betti", as_ll(betti));
  for (int n = 0; n < top; ++n) {
    std::string detail;
    if (betti[n] != 0) {
      const std::size_t rk_out = n == 0 ? 0 : rank(c.d[n], c.coeffs);
      const std::size_t rk_in = rank(c.d[n + 1], c.coeffs);
      detail = "degree " + std::to_string(n) + ": dim " + std::to_string(c.dims[n]) + ", rank out " +
               std::to_string(rk_out) + ", rank in " + std::to_string(rk_in) + ", betti " + std::to_string(betti[n]);
    }
    r.check(what + " acyclic in degree " + std::to_string(n), betti[n] == 0, detail);
  }
}

ChainComplex nerve_complex(const ControlledNerve& nerve, Theory theory) {
  return theory == Theory::hochschild ? hochschild_complex(nerve.mixed) : tot_B(nerve.mixed);
}

/// Chain map on the theory complex induced by a map of nerves given
/// degreewise on CN.
ChainMap nerve_theory_map(const ControlledNerve& src, const ControlledNerve& tgt, const SpaceMap& f, Theory theory,
                          int top) {
  const auto object_map = inclusion_object_map(src, tgt, f);
  std::vector<Matrix> cn;
  for (int n = 0; n <= top; ++n) cn.push_back(nerve_map_matrix(src, tgt, f, object_map, n));
  if (theory == Theory::hochschild) return cn;
  ChainMap out;
  for (int n = 0; n <= top; ++n) {
    std::size_t rows = 0, cols = 0;
    for (int k = 0; 2 * k <= n; ++k) {
      rows += tgt.mixed.dims[n - 2 * k];
      cols += src.mixed.dims[n - 2 * k];
    }
    Matrix m(rows, cols);
    for (int k = 0; 2 * k <= n; ++k)
      m.add_block(cn[n - 2 * k], tot_component_offset(tgt.mixed, n, k), tot_component_offset(src.mixed, n, k));
    out.push_back(std::move(m));
  }
  return out;
}

struct TheoryData {
  ChainComplex complex;
  std::optional<CoarseChainComplex> chains;
  std::optional<ControlledNerve> nerve;
};

TheoryData theory_data(const SpacePtr& x, Theory theory, const HarnessConfig& cfg, bool invariant) {
  TheoryData t;
  if (theory == Theory::ordinary) {
    t.chains = coarse_chain_complex(x, cfg.max_degree, cfg.coeffs, invariant, cfg.cap);
    t.complex = t.chains->complex;
  } else {
    t.nerve = controlled_nerve(x, cfg.coeffs, cfg.max_degree, cfg.cap);
    t.complex = nerve_complex(*t.nerve, theory);
  }
  return t;
}

ChainMap theory_map(const TheoryData& src, const TheoryData& tgt, const SpaceMap& f, Theory theory,
                    const HarnessConfig& cfg) {
  if (theory == Theory::ordinary) {
    ChainMap out;
    for (int n = 0; n <= cfg.max_degree; ++n)
      out.push_back(chain_map_matrix(f, src.chains->bases[n], tgt.chains->bases[n], cfg.coeffs));
    return out;
  }
  return nerve_theory_map(*src.nerve, *tgt.nerve, f, theory, cfg.max_degree);
}

std::vector<std::string> labels_of(const GBornCoarseSpace& x, const PointSet& s) {
  std::vector<std::string> out;
  for (auto p : s) out.push_back(x.points()[p]);
  return out;
}

SpaceMap subset_map(const SpacePtr& small, const PointSet& small_set, const SpacePtr& big, const PointSet& big_set) {
  SpaceMap f{small, big, {}};
  const std::vector<PointIndex> big_points(big_set.begin(), big_set.end());
  for (auto p : small_set) {
    const auto it = std::lower_bound(big_points.begin(), big_points.end(), p);
    f.assignment.push_back(static_cast<PointIndex>(it - big_points.begin()));
  }
  return f;
}

bool same_matrix(const Matrix& a, const Matrix& b, const Coefficients& k) { return a.reduced(k) == b.reduced(k); }

}  // namespace

// --- coarse invariance ------------------------------------------------------

AxiomReport check_coarse_invariance(const SpaceMap& f, Theory theory, const HarnessConfig& cfg) {
  const auto morphism = is_morphism(f);
  if (!morphism.ok) throw InvalidInput("not a morphism: " + morphism.violations.front());
  if (!is_coarse_equivalence(f, cfg.search_bound)) throw InvalidInput("map is not a coarse equivalence");
  AxiomReport r;
  r.axiom = "coarse invariance (" + to_string(theory) + ")";
  r.inputs = std::to_string(f.source->size()) + " -> " + std::to_string(f.target->size()) + " points, |G| = " +
             std::to_string(f.source->group().order());
  r.replay = {{"source", space_to_json(*f.source)}, {"target", space_to_json(*f.target)}, {"map", f.assignment}};
  const TheoryData src = theory_data(f.source, theory, cfg, true);
  const TheoryData tgt = theory_data(f.target, theory, cfg, true);
  std::vector<std::size_t> bs, bt;
  for (int n = 0; n < cfg.max_degree; ++n) {
    bs.push_back(src.complex.homology(n).betti);
    bt.push_back(tgt.complex.homology(n).betti);
  }
  r.add_data("source betti", as_ll(bs));
  r.add_data("target betti", as_ll(bt));
  for (int n = 0; n < cfg.max_degree; ++n)
    r.check("betti agree in degree " + std::to_string(n), bs[n] == bt[n],
            "source " + std::to_string(bs[n]) + ", target " + std::to_string(bt[n]));
  if (theory == Theory::ordinary)
    require_acyclic(r, "mapping cone", mapping_cone(src.complex, tgt.complex, theory_map(src, tgt, f, theory, cfg)),
                    cfg.max_degree);
  return r;
}

// --- excision ---------------------------------------------------------------

AxiomReport check_excision(const SpacePtr& x, const PointSet& z, const std::vector<PointSet>& ys, Theory theory,
                           const HarnessConfig& cfg) {
  if (!x->is_invariant(z)) throw InvalidInput("Z is not invariant");
  for (const auto& y : ys)
    if (!x->is_invariant(y)) throw InvalidInput("big family member is not invariant");
  if (!is_complementary_pair(*x, z, ys)) throw InvalidInput("not a complementary pair");
  const PointSet y = ys.empty() ? PointSet{} : ys.back();
  PointSet a;
  std::set_intersection(z.begin(), z.end(), y.begin(), y.end(), std::inserter(a, a.end()));

  AxiomReport r;
  r.axiom = "excision (" + to_string(theory) + ")";
  r.inputs = "|X| = " + std::to_string(x->size()) + ", |Z| = " + std::to_string(z.size()) + ", |Y| = " +
             std::to_string(y.size()) + ", |Z∩Y| = " + std::to_string(a.size());
  nlohmann::ordered_json ys_json = nlohmann::ordered_json::array();
  for (const auto& s : ys) ys_json.push_back(labels_of(*x, s));
  r.replay = {{"space", space_to_json(*x)}, {"z", labels_of(*x, z)}, {"ys", ys_json}};

  const SpacePtr sa = subspace(*x, a), sb = subspace(*x, z), sc = subspace(*x, y);
  const SpaceMap i = subset_map(sa, a, sb, z), j = subset_map(sa, a, sc, y);
  const SpaceMap k = subspace_inclusion(x, z), l = subspace_inclusion(x, y);
  const SpaceMap kk{sb, x, k.assignment}, ll{sc, x, l.assignment};

  const TheoryData ta = theory_data(sa, theory, cfg, true), tb = theory_data(sb, theory, cfg, true),
                   tc = theory_data(sc, theory, cfg, true), td = theory_data(x, theory, cfg, true);
  const ChainComplex t = square_cone(ta.complex, tb.complex, tc.complex, td.complex, theory_map(ta, tb, i, theory, cfg),
                                     theory_map(ta, tc, j, theory, cfg), theory_map(tb, td, kk, theory, cfg),
                                     theory_map(tc, td, ll, theory, cfg));
  require_acyclic(r, "square cone", t, cfg.max_degree);
  return r;
}

// --- u-continuity -----------------------------------------------------------

AxiomReport check_u_continuity(const SpacePtr& x, Theory theory, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "u-continuity (" + to_string(theory) + ")";
  r.replay = {{"space", space_to_json(*x)}};
  const auto full = bettis(theory_homology(x, theory, cfg.coeffs, cfg.max_degree, true, cfg.cap));
  r.add_data("full structure betti", as_ll(full));

  PairSet u;
  SpacePtr stage = restrict_entourage(*x, u);
  std::vector<std::vector<std::size_t>> values{bettis(theory_homology(stage, theory, cfg.coeffs, cfg.max_degree, true,
                                                                      cfg.cap))};
  r.add_data("stage 0 betti", as_ll(values.back()));
  for (const auto& [p, q] : x->entourage_generators()) {
    if (stage->related(p, q)) continue;  // the space would not change
    for (GroupElement g = 0; g < x->group().order(); ++g) u.insert({x->act(g, p), x->act(g, q)});
    stage = restrict_entourage(*x, u);
    values.push_back(bettis(theory_homology(stage, theory, cfg.coeffs, cfg.max_degree, true, cfg.cap)));
    r.add_data("stage " + std::to_string(values.size() - 1) + " betti", as_ll(values.back()));
  }
  r.inputs = "|X| = " + std::to_string(x->size()) + ", " + std::to_string(values.size()) + " stages";
  r.check("entourage chain reaches the maximal entourage", stage->u_star() == x->u_star());
  r.check("stable value equals the full structure", values.back() == full,
          "stable " + list_text(values.back()) + ", full " + list_text(full));
  return r;
}

// --- group algebras ---------------------------------------------------------

std::vector<std::vector<std::uint32_t>> subgroup_table(const FiniteGroup& g, const std::vector<GroupElement>& h) {
  std::vector<std::vector<std::uint32_t>> table(h.size(), std::vector<std::uint32_t>(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = 0; b < h.size(); ++b) {
      const auto prod = g.multiply(h[a], h[b]);
      const auto it = std::find(h.begin(), h.end(), prod);
      if (it == h.end()) throw InvalidInput("subset is not closed under multiplication");
      table[a][b] = static_cast<std::uint32_t>(it - h.begin());
    }
  return table;
}

std::vector<std::size_t> oracle_hh_group_algebra(const FiniteGroup& g, int top, const Coefficients& field) {
  return oracle::hh_group_algebra(g.table(), top, field);
}

AxiomReport check_group_algebra_agreement(const GroupPtr& g, const std::vector<std::string>& subgroups,
                                          const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "group algebra agreement";
  r.inputs = "|G| = " + std::to_string(g->order()) + ", field " + cfg.coeffs.to_string();
  const int top = cfg.max_degree;

  const SpacePtr x = g_can_min(g);
  const auto hh_x = bettis(theory_homology(x, Theory::hochschild, cfg.coeffs, top, true, cfg.cap));
  const auto hc_x = bettis(theory_homology(x, Theory::cyclic, cfg.coeffs, top, true, cfg.cap));
  const auto hh_o = oracle::hh_group_algebra(g->table(), top, cfg.coeffs);
  const auto hc_o = oracle::hc_group_algebra(g->table(), top, cfg.coeffs);
  r.add_data("XHH(G_can,min)", as_ll(hh_x));
  r.add_data("HH(k[G]) oracle", as_ll(hh_o));
  r.add_data("XHC(G_can,min)", as_ll(hc_x));
  r.add_data("HC(k[G]) oracle", as_ll(hc_o));
  r.check("XHH of G_can,min matches the oracle", hh_x == hh_o, list_text(hh_x) + " vs " + list_text(hh_o));
  r.check("XHC of G_can,min matches the oracle", hc_x == hc_o, list_text(hc_x) + " vs " + list_text(hc_o));
  const std::size_t classes = g->conjugacy_class_count();
  if (!hh_x.empty())
    r.check("HH_0 equals the number of conjugacy classes", hh_x[0] == classes,
            std::to_string(hh_x[0]) + " vs " + std::to_string(classes));

  for (const auto& name : subgroups) {
    const auto h = g->subgroup_by_name(name);
    const SpacePtr y = tensor(*min_max_space(g, coset_space(*g, h)), *g_can_min(g));
    const auto table = subgroup_table(*g, h);
    const auto hh_y = bettis(theory_homology(y, Theory::hochschild, cfg.coeffs, top, true, cfg.cap));
    const auto hc_y = bettis(theory_homology(y, Theory::cyclic, cfg.coeffs, top, true, cfg.cap));
    const auto hh_h = oracle::hh_group_algebra(table, top, cfg.coeffs);
    const auto hc_h = oracle::hc_group_algebra(table, top, cfg.coeffs);
    const std::string tag = "(G/" + name + ")_min,max ⊗ G_can,min";
    r.add_data("XHH" + tag, as_ll(hh_y));
    r.add_data("HH(k[" + name + "]) oracle", as_ll(hh_h));
    r.add_data("XHC" + tag, as_ll(hc_y));
    r.add_data("HC(k[" + name + "]) oracle", as_ll(hc_h));
    r.check("XHH of " + tag + " matches the oracle for " + name, hh_y == hh_h,
            list_text(hh_y) + " vs " + list_text(hh_h));
    r.check("XHC of " + tag + " matches the oracle for " + name, hc_y == hc_h,
            list_text(hc_y) + " vs " + list_text(hc_h));
  }
  return r;
}

// --- Morita, mixed identities -----------------------------------------------

AxiomReport check_morita(const SpacePtr& x, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "Morita";
  r.replay = {{"space", space_to_json(*x)}};
  require_good_characteristic(*x, cfg.coeffs);
  const auto multi = mixed_homology(controlled_nerve(x, cfg.coeffs, cfg.max_degree, cfg.cap).mixed,
                                    Theory::hochschild, cfg.max_degree);
  const FiniteAlgebra e = endomorphism_algebra(generator(x, cfg.coeffs));
  r.inputs = "|X| = " + std::to_string(x->size()) + ", dim End(generator) = " + std::to_string(e.dim);
  const auto single = mixed_homology(to_mixed(CyclicModule::from_algebra(e, cfg.max_degree, cfg.cap)),
                                     Theory::hochschild, cfg.max_degree);
  const auto bm = bettis(multi), bs = bettis(single);
  r.add_data("multi-object nerve betti", as_ll(bm));
  r.add_data("End(generator) betti", as_ll(bs));
  for (int n = 0; n < cfg.max_degree; ++n)
    r.check("HH agree in degree " + std::to_string(n), bm[n] == bs[n],
            std::to_string(bm[n]) + " vs " + std::to_string(bs[n]));
  const std::size_t hh0 = oracle::commutator_hh0(e);
  r.check("HH_0 matches the commutator oracle", bs.empty() || bs[0] == hh0,
          std::to_string(bs.empty() ? 0 : bs[0]) + " vs " + std::to_string(hh0));
  return r;
}

AxiomReport check_mixed_identities(const SpacePtr& x, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "mixed complex identities";
  r.replay = {{"space", space_to_json(*x)}};
  require_good_characteristic(*x, cfg.coeffs);
  auto run = [&](const std::string& what, const LinearCategory& cat) {
    const CyclicModule m = CyclicModule::from_category(cat, cfg.max_degree, cfg.cap);
    const std::string cyc = m.verify();
    r.check(what + ": cyclic identities", cyc.empty(), cyc);
    std::string mixed;
    try {
      (void)to_mixed(m);
    } catch (const IdentityViolation& e) {
      mixed = e.what();
    }
    r.check(what + ": b^2 = 0, B^2 = 0, bB + Bb = 0", mixed.empty(), mixed);
    std::vector<long long> dims;
    for (int n = 0; n <= cfg.max_degree; ++n) dims.push_back(static_cast<long long>(m.dim(n)));
    r.add_data(what + " dims", dims);
  };
  const ControlledCategory cat = build_category(generating_objects(x, cfg.coeffs));
  run("generating-object nerve", cat.linear);
  const FiniteAlgebra e = endomorphism_algebra(generator(x, cfg.coeffs));
  std::size_t size = 1;
  for (int n = 0; n <= cfg.max_degree && size <= cfg.cap; ++n) size *= std::max<std::size_t>(e.dim, 1);
  if (size <= cfg.cap) run("End(generator) nerve", e.as_category());
  r.inputs = "|X| = " + std::to_string(x->size()) + ", " + std::to_string(cat.objects.size()) + " objects";
  return r;
}

// --- traces -----------------------------------------------------------------

AxiomReport check_trace(const SpacePtr& x, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "trace";
  r.replay = {{"space", space_to_json(*x)}};
  const Coefficients& k = cfg.coeffs;
  const int top = cfg.max_degree;
  const TraceContext ctx = TraceContext::generating(x, k, top, cfg.cap);
  r.inputs = "|X| = " + std::to_string(x->size()) + ", " + std::to_string(ctx.objects().size()) + " objects";
  const auto& mixed = ctx.nerve().mixed;
  const auto& d = ctx.chains().complex.d;
  std::vector<Matrix> phi;
  for (int n = 0; n <= top; ++n) phi.push_back(ctx.phi_matrix(n));

  for (int n = 1; n <= top; ++n) {
    const bool ok = same_matrix(phi[n - 1] * mixed.b[n], d[n] * phi[n], k);
    r.check("phi b = ∂ phi in degree " + std::to_string(n), ok);
  }
  for (int n = 0; n < top; ++n) {
    const Matrix pb = (phi[n + 1] * mixed.B[n]).reduced(k);
    std::string detail;
    if (!pb.is_zero())
      detail = "phi B has rank " + std::to_string(rank(pb, k)) + " on CN_" + std::to_string(n) + " (dim " +
               std::to_string(mixed.dims[n]) + ")";
    r.check("phi B = 0 in degree " + std::to_string(n), pb.is_zero(), detail);
    if (n + 2 <= top) {
      // phi B is not a cycle in general; on b-cycles it is, and there it
      // lands in the boundaries.
      const KernelBasis cycles = kernel_basis(mixed.b[n], k);
      Matrix z(mixed.dims[n], cycles.vectors.size());
      for (std::size_t c = 0; c < cycles.vectors.size(); ++c) {
        std::vector<Entry> col;
        for (Index i = 0; i < cycles.vectors[c].size(); ++i)
          if (cycles.vectors[c][i] != 0) col.push_back({i, cycles.vectors[c][i]});
        z.set_column(c, std::move(col));
      }
      const Matrix image = (pb * z).reduced(k);
      Matrix both(d[n + 2].rows(), d[n + 2].cols() + image.cols());
      both.add_block(d[n + 2], 0, 0);
      both.add_block(image, 0, d[n + 2].cols());
      r.check("phi B sends b-cycles to boundaries in degree " + std::to_string(n), rank(both, k) == rank(d[n + 2], k));
    }
  }
  bool invariant = true;
  std::string where;
  for (int n = 0; n <= top && invariant; ++n)
    for (Index c = 0; c < ctx.nerve().module.dim(n) && invariant; ++c)
      if (!ctx.phi_cell(n, c).is_invariant()) {
        invariant = false;
        where = "nerve cell " + std::to_string(c) + " in degree " + std::to_string(n);
      }
  r.check("phi images are G-invariant", invariant, where);

  const ChainComplex tot_nerve = tot_B(mixed);
  const ChainComplex tot_chains = ctx.chain_tot();
  for (int n = 1; n <= top; ++n) {
    const bool ok = same_matrix(ctx.tot_phi_matrix(n - 1) * tot_nerve.d[n], tot_chains.d[n] * ctx.tot_phi_matrix(n), k);
    r.check("degreewise Tot trace is a chain map in degree " + std::to_string(n), ok);
  }
  return r;
}

AxiomReport check_trace_naturality(const SpaceMap& f, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "trace naturality";
  r.replay = {{"source", space_to_json(*f.source)}, {"target", space_to_json(*f.target)}, {"map", f.assignment}};
  const auto m = is_morphism(f);
  if (!m.ok) throw InvalidInput("not a morphism: " + m.violations.front());
  const Coefficients& k = cfg.coeffs;
  const TraceContext src = TraceContext::generating(f.source, k, cfg.max_degree, cfg.cap);
  std::vector<ObjectPtr> pushed;
  for (const auto& o : src.objects()) pushed.push_back(pushforward(f, o));
  const TraceContext tgt(f.target, pushed, k, cfg.max_degree, cfg.cap);
  std::vector<std::size_t> object_map(pushed.size());
  for (std::size_t i = 0; i < object_map.size(); ++i) object_map[i] = i;
  r.inputs = std::to_string(f.source->size()) + " -> " + std::to_string(f.target->size()) + " points";
  for (int n = 0; n <= cfg.max_degree; ++n) {
    const Matrix chains = chain_map_matrix(f, src.chains().bases[n], tgt.chains().bases[n], k);
    const Matrix nerve = nerve_map_matrix(src, tgt, f, object_map, n);
    r.check("f_* phi = phi CN(f_*) in degree " + std::to_string(n),
            same_matrix(chains * src.phi_matrix(n), tgt.phi_matrix(n) * nerve, k));
  }
  return r;
}

AxiomReport check_point_section(const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "point section";
  const SpacePtr pt = point_space();
  const TraceContext ctx = TraceContext::generating(pt, cfg.coeffs, cfg.max_degree, cfg.cap);
  r.inputs = "degrees 0.." + std::to_string(cfg.max_degree);
  const std::vector<Scalar> samples{Scalar(1), Scalar(5), Scalar(-3, 2)};
  for (int n = 0; n <= cfg.max_degree; ++n) {
    bool ok = true;
    for (const auto& c : samples) {
      const ControlledChain image = ctx.phi(n, iota(ctx, n, c));
      const Scalar expect = cfg.coeffs.normalize(c);
      const Tuple diag(n + 1, 0);
      const bool match = expect == 0 ? image.terms.empty()
                                     : image.terms.size() == 1 && image.terms.begin()->first == diag &&
                                           image.terms.begin()->second == expect;
      ok = ok && match;
    }
    r.check("phi iota = id in degree " + std::to_string(n), ok);
  }
  return r;
}

// --- flasqueness ------------------------------------------------------------

std::size_t exhaustive_flasque_count(const GBornCoarseSpace& x) {
  const std::size_t n = x.size();
  if (n > 3) throw GuardExceeded("exhaustive flasqueness search is limited to 3 points");
  if (n == 0) return 1;  // the empty map satisfies every condition vacuously
  std::size_t maps = 1;
  for (std::size_t i = 0; i < n; ++i) maps *= n;
  const PairSet u = x.u_star();
  const std::size_t horizon = maps + 1;  // iterates of a self-map are periodic within this bound
  std::size_t count = 0;
  std::vector<PointIndex> f(n, 0);
  for (std::size_t code = 0; code < maps; ++code) {
    std::size_t rest = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<PointIndex>(rest % n);
      rest /= n;
    }
    // Equivariant and controlled.
    bool ok = true;
    for (GroupElement g = 0; g < x.group().order() && ok; ++g)
      for (PointIndex p = 0; p < n && ok; ++p) ok = f[x.act(g, p)] == x.act(g, f[p]);
    for (const auto& [a, b] : u)
      if (ok) ok = x.related(f[a], f[b]);
    // (i) close to the identity.
    for (PointIndex p = 0; p < n && ok; ++p) ok = x.related(p, f[p]);
    // (ii) the union of (f^k x f^k)(U) over k stays controlled.
    std::vector<PointIndex> fk(n);
    for (PointIndex p = 0; p < n; ++p) fk[p] = p;
    std::vector<std::vector<PointIndex>> iterates;
    for (std::size_t k = 0; k <= horizon && ok; ++k) {
      iterates.push_back(fk);
      for (const auto& [a, b] : u)
        if (ok) ok = x.related(fk[a], fk[b]);
      for (PointIndex p = 0; p < n; ++p) fk[p] = f[fk[p]];
    }
    // (iii) every bounded B is eventually avoided by f^k(X), up to G.
    for (std::size_t mask = 1; mask < (std::size_t{1} << n) && ok; ++mask) {
      PointSet gb;
      for (PointIndex p = 0; p < n; ++p)
        if (mask & (std::size_t{1} << p))
          for (GroupElement g = 0; g < x.group().order(); ++g) gb.insert(x.act(g, p));
      bool avoided = false;
      for (const auto& it : iterates) {
        bool disjoint = true;
        for (PointIndex p = 0; p < n && disjoint; ++p) disjoint = !gb.contains(it[p]);
        if (disjoint) {
          avoided = true;
          break;
        }
      }
      ok = avoided;
    }
    if (ok) ++count;
  }
  return count;
}

AxiomReport check_flasque(const SpacePtr& x, const HarnessConfig& cfg) {
  (void)cfg;
  AxiomReport r;
  r.axiom = "flasqueness predicate";
  r.inputs = "|X| = " + std::to_string(x->size());
  r.replay = {{"space", space_to_json(*x)}};
  const bool predicate = is_flasque(*x);
  r.check("predicate is true exactly for the empty space", predicate == (x->size() == 0));
  if (x->size() <= 3) {
    const std::size_t count = exhaustive_flasque_count(*x);
    r.add_data("flasque self-maps found", {static_cast<long long>(count)});
    r.check("exhaustive self-map search agrees", (count > 0) == predicate,
            std::to_string(count) + " witnesses among all self-maps");
  }
  return r;
}

// --- chain oracle -----------------------------------------------------------

AxiomReport check_chain_oracle(const SpacePtr& x, const HarnessConfig& cfg) {
  AxiomReport r;
  r.axiom = "coarse chains oracle";
  r.replay = {{"space", space_to_json(*x)}};
  const int top = cfg.max_degree;
  const auto comps = x->components();
  std::set<PointSet> comp_orbits;
  for (const auto& c : comps) {
    PointSet orbit;
    for (GroupElement g = 0; g < x->group().order(); ++g)
      for (auto p : c) orbit.insert(x->act(g, p));
    comp_orbits.insert(orbit);
  }
  r.inputs = "|X| = " + std::to_string(x->size()) + ", " + std::to_string(comps.size()) + " components";
  const auto plain = bettis(theory_homology(x, Theory::ordinary, cfg.coeffs, top, false, cfg.cap));
  const auto inv = bettis(theory_homology(x, Theory::ordinary, cfg.coeffs, top, true, cfg.cap));
  r.add_data("plain XH betti", as_ll(plain));
  r.add_data("invariant XH betti", as_ll(inv));
  r.check("XH_0 equals the number of components", plain[0] == comps.size(),
          std::to_string(plain[0]) + " vs " + std::to_string(comps.size()));
  r.check("invariant XH_0 equals the number of component orbits", inv[0] == comp_orbits.size(),
          std::to_string(inv[0]) + " vs " + std::to_string(comp_orbits.size()));
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].size() > 4) continue;
    const SpacePtr alone = component_space({comps[c].size()});
    const auto lib = bettis(theory_homology(alone, Theory::ordinary, cfg.coeffs, top, false, cfg.cap));
    const auto orc = oracle::contractible_simplex(comps[c].size(), top, cfg.coeffs);
    const std::string tag = "component " + std::to_string(c) + " (" + std::to_string(comps[c].size()) + " points)";
    r.check(tag + ": cone homotopy holds", orc.homotopy_holds);
    r.check(tag + ": XH matches the homotopy oracle", lib == orc.betti,
            list_text(lib) + " vs " + list_text(orc.betti));
  }
  return r;
}

}  // namespace coarsehh
