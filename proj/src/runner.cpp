#include "coarsehh/runner.hpp"

#include "coarsehh/error.hpp"
#include "coarsehh/harness/fuzz.hpp"
#include "coarsehh/io.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace coarsehh {

namespace {

const std::set<std::string> kSelectors{"ordinary", "hochschild", "cyclic", "trace", "axioms", "all"};

bool wants(const RunConfig& cfg, const std::string& what) { return cfg.theory == what || cfg.theory == "all"; }

HarnessConfig harness_config(const RunConfig& cfg) {
  HarnessConfig h;
  h.coeffs = cfg.coeffs;
  h.max_degree = cfg.max_degree;
  h.cap = cfg.cap;
  return h;
}

std::string plural(std::size_t n, const std::string& word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string space_summary(const GBornCoarseSpace& x) {
  return plural(x.size(), "point") + ", " + plural(x.components().size(), "component") + ", " +
         plural(x.orbits().size(), "orbit") + ", |G| = " + std::to_string(x.group().order());
}

void guarded(std::vector<AxiomReport>& out, const std::string& what, const std::function<AxiomReport()>& f) {
  try {
    out.push_back(f());
  } catch (const GuardExceeded& e) {
    AxiomReport r;
    r.axiom = what;
    r.inputs = std::string("skipped: ") + e.what();
    out.push_back(r);
  }
}

/// Drops orbits while the inclusion stays a coarse equivalence.
PointSet reduced_subset(const SpacePtr& x) {
  PointSet keep;
  for (PointIndex p = 0; p < x->size(); ++p) keep.insert(p);
  for (const auto& orbit : x->orbits()) {
    PointSet trial;
    std::set_difference(keep.begin(), keep.end(), orbit.begin(), orbit.end(), std::inserter(trial, trial.end()));
    if (trial.empty()) continue;
    if (is_coarse_equivalence(subspace_inclusion(x, trial))) keep = trial;
  }
  return keep;
}

std::vector<AxiomReport> input_axioms(const SpacePtr& x, const HarnessConfig& h) {
  std::vector<AxiomReport> out;
  guarded(out, "mixed complex identities", [&] { return check_mixed_identities(x, h); });
  guarded(out, "Morita", [&] { return check_morita(x, h); });
  guarded(out, "flasqueness predicate", [&] { return check_flasque(x, h); });
  guarded(out, "coarse chains oracle", [&] { return check_chain_oracle(x, h); });

  const PointSet small = reduced_subset(x);
  const SpaceMap inc = subspace_inclusion(x, small);
  // first component orbit against the rest
  PointSet y, z;
  if (x->size() > 0) {
    const PointSet first = x->components().front();
    for (GroupElement g = 0; g < x->group().order(); ++g)
      for (auto p : first) y.insert(x->act(g, p));
    for (PointIndex p = 0; p < x->size(); ++p)
      if (!y.contains(p)) z.insert(p);
  }
  const std::vector<PointSet> ys{PointSet{}, y};
  for (Theory t : {Theory::ordinary, Theory::hochschild, Theory::cyclic}) {
    if (t != Theory::ordinary && !h.coeffs.is_field()) continue;
    const std::string name = to_string(t);
    guarded(out, "coarse invariance (" + name + ")", [&] { return check_coarse_invariance(inc, t, h); });
    guarded(out, "excision (" + name + ")", [&] { return check_excision(x, z, ys, t, h); });
    guarded(out, "u-continuity (" + name + ")", [&] { return check_u_continuity(x, t, h); });
  }
  return out;
}

nlohmann::ordered_json torsion_json(const std::vector<mpz_class>& torsion) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& t : torsion) {
    if (t.fits_slong_p()) out.push_back(t.get_si());
    else out.push_back(t.get_str());
  }
  return out;
}

std::string betti_text(const std::vector<HomologyResult>& hs) {
  std::string s = "(";
  for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? "," : "") + std::to_string(hs[i].betti);
  return s + ")";
}

/// Verdict of all checks of `r` whose name starts with `prefix`.
std::optional<bool> verdict(const std::vector<AxiomReport>& reports, const std::string& axiom,
                            const std::string& prefix) {
  std::optional<bool> out;
  for (const auto& r : reports) {
    if (r.axiom != axiom) continue;
    for (const auto& c : r.checks)
      if (c.name.rfind(prefix, 0) == 0) out = out.value_or(true) && c.pass;
  }
  return out;
}

std::string verdict_word(bool pass) { return pass ? "pass" : "FAIL"; }

}  // namespace

void validate(const RunConfig& cfg) {
  if (!kSelectors.contains(cfg.theory))
    throw InvalidInput("unknown theory '" + cfg.theory + "' (ordinary, hochschild, cyclic, trace, axioms or all)");
  if (cfg.max_degree < 1) throw InvalidInput("max degree must be at least 1");
  if (!cfg.coeffs.is_field() && cfg.theory != "ordinary")
    throw InvalidInput("integer coefficients are only available for ordinary coarse homology");
  if (cfg.inputs.empty() && !(cfg.budget > 0 && wants(cfg, "axioms"))) throw InvalidInput("no input space given");
}

bool InputReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomReport& r) { return r.passed(); });
}

bool RunOutcome::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const InputReport& r) { return r.passed(); });
}

RunOutcome run(const RunConfig& cfg) {
  validate(cfg);
  RunOutcome out;
  out.config = cfg;
  const HarnessConfig h = harness_config(cfg);
  for (const auto& input : cfg.inputs) {
    const SpacePtr x = load_space(input);
    InputReport rep;
    rep.input = input;
    rep.summary = space_summary(*x);
    for (const auto& [name, theory] : {std::pair{"ordinary", Theory::ordinary}, std::pair{"hochschild", Theory::hochschild},
                                       std::pair{"cyclic", Theory::cyclic}})
      if (wants(cfg, name))
        rep.results.push_back({theory, theory_homology(x, theory, cfg.coeffs, cfg.max_degree, cfg.invariant, cfg.cap)});
    if (wants(cfg, "trace")) {
      rep.axioms.push_back(check_trace(x, h));
      rep.axioms.push_back(check_point_section(h));
    }
    if (wants(cfg, "axioms")) {
      auto more = input_axioms(x, h);
      rep.axioms.insert(rep.axioms.end(), more.begin(), more.end());
    }
    out.reports.push_back(std::move(rep));
  }
  if (cfg.budget > 0 && wants(cfg, "axioms")) {
    InputReport rep;
    rep.input = "fuzz(seed " + std::to_string(cfg.seed) + ", budget " + std::to_string(cfg.budget) + ")";
    rep.summary = plural(cfg.budget, "random case");
    rep.axioms = fuzz(cfg.seed, cfg.budget, h);
    out.reports.push_back(std::move(rep));
  }
  return out;
}

std::string render_text(const RunOutcome& outcome) {
  std::ostringstream os;
  const auto& cfg = outcome.config;
  for (const auto& rep : outcome.reports) {
    os << "== " << rep.input << "\n";
    os << "   " << rep.summary << "\n";
    for (const auto& res : rep.results) {
      std::string name = to_string(res.theory);
      name.resize(4, ' ');
      os << "   " << name << " " << betti_text(res.homology);
      if (res.theory == Theory::ordinary) os << (cfg.invariant ? "  invariant" : "  all chains");
      os << "  over " << cfg.coeffs.to_string() << "\n";
      for (const auto& hr : res.homology)
        if (!hr.torsion.empty()) {
          os << "        torsion in degree " << hr.degree << ":";
          for (const auto& t : hr.torsion) os << " Z/" << t.get_str();
          os << "\n";
        }
    }
    const auto chain = verdict(rep.axioms, "trace", "phi b = ∂ phi");
    const auto mixed = verdict(rep.axioms, "trace", "phi B = 0");
    const auto section = verdict(rep.axioms, "point section", "phi iota = id");
    if (chain) os << "   trace chain map (phi b = ∂ phi)       " << verdict_word(*chain) << "\n";
    if (mixed) os << "   trace mixed extension (phi B = 0)     " << verdict_word(*mixed) << "\n";
    if (section) os << "   trace section (phi iota = id)         " << verdict_word(*section) << "\n";
    for (const auto& r : rep.axioms) {
      std::istringstream lines(to_text(r));
      for (std::string line; std::getline(lines, line);) os << "   " << line << "\n";
    }
  }
  std::size_t failed = 0, total = 0;
  for (const auto& rep : outcome.reports)
    for (const auto& r : rep.axioms) {
      ++total;
      if (!r.passed()) ++failed;
    }
  os << "status: " << (outcome.passed() ? "pass" : "fail");
  if (total > 0) os << " (" << failed << " of " << total << " reports failed)";
  os << "\n";
  return os.str();
}

nlohmann::ordered_json render_json(const RunOutcome& outcome) {
  const auto& cfg = outcome.config;
  nlohmann::ordered_json config = {{"theory", cfg.theory},         {"coeff", cfg.coeffs.to_string()},
                                   {"max_degree", cfg.max_degree}, {"invariant", cfg.invariant},
                                   {"seed", cfg.seed},             {"budget", cfg.budget}};
  auto docs = nlohmann::ordered_json::array();
  for (const auto& rep : outcome.reports) {
    nlohmann::ordered_json doc;
    doc["input"] = rep.input;
    doc["summary"] = rep.summary;
    doc["config"] = config;
    auto results = nlohmann::ordered_json::array();
    for (const auto& res : rep.results)
      for (const auto& hr : res.homology) {
        nlohmann::ordered_json row = {{"theory", to_string(res.theory)}, {"degree", hr.degree}, {"betti", hr.betti}};
        if (!cfg.coeffs.is_field()) row["torsion"] = torsion_json(hr.torsion);
        results.push_back(row);
      }
    doc["results"] = results;
    auto axioms = nlohmann::ordered_json::array();
    for (const auto& r : rep.axioms) axioms.push_back(to_json(r));
    doc["axioms"] = axioms;
    doc["status"] = rep.passed() ? "pass" : "fail";
    docs.push_back(doc);
  }
  return docs.size() == 1 ? docs.front() : docs;
}

std::string render(const RunOutcome& outcome, OutputFormat format) {
  return format == OutputFormat::json ? render_json(outcome).dump(2) + "\n" : render_text(outcome);
}

nlohmann::ordered_json describe_json(const GBornCoarseSpace& x, const std::string& input) {
  auto sets = [&](const std::vector<PointSet>& ss) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& s : ss) {
      auto labels = nlohmann::ordered_json::array();
      for (auto p : s) labels.push_back(x.points()[p]);
      out.push_back(labels);
    }
    return out;
  };
  return {{"input", input},
          {"points", x.points()},
          {"group_order", x.group().order()},
          {"components", sets(x.components())},
          {"orbits", sets(x.orbits())},
          {"maximal_entourage_size", x.u_star().size()},
          {"bornology_generators", x.bornology_generators().size()}};
}

std::string describe_text(const GBornCoarseSpace& x, const std::string& input) {
  std::ostringstream os;
  auto show = [&](const char* title, const std::vector<PointSet>& ss) {
    os << title << " (" << ss.size() << "):";
    for (const auto& s : ss) {
      os << " {";
      bool first = true;
      for (auto p : s) {
        os << (first ? "" : ", ") << x.points()[p];
        first = false;
      }
      os << "}";
    }
    os << "\n";
  };
  os << "space: " << input << "\n";
  os << "points: " << x.size() << "\n";
  os << "group order: " << x.group().order() << "\n";
  show("components", x.components());
  show("orbits", x.orbits());
  os << "maximal entourage: " << x.u_star().size() << " pairs\n";
  os << "bornology generators: " << x.bornology_generators().size() << "\n";
  return os.str();
}

std::string describe(const std::string& source, OutputFormat format) {
  const SpacePtr x = load_space(source);
  return format == OutputFormat::json ? describe_json(*x, source).dump(2) + "\n" : describe_text(*x, source);
}

}  // namespace coarsehh
