#include "gsv/report.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <stdexcept>

#include "gsv/homology.hpp"
#include "gsv/pipeline.hpp"

namespace gsv {

const std::vector<std::string> kAllSuites = {"axioms",   "nerves",      "homology",
                                             "generators", "basis",     "pairing",
                                             "arrangement", "enumerate", "equivalence"};

namespace {

using nlohmann::json;

json order_json(const LinearOrder& o) { return json(o.ranking()); }

json profile_json(const Profile& p) {
  json arr = json::array();
  for (const auto& o : p.orders) arr.push_back(order_json(o));
  return arr;
}

bool revalidate_mono_cex(const SocialChoiceFunction& f, const MonotonicityCounterexample& cex) {
  const Alternative a = f.choose(cex.before);
  for (int l = 0; l < f.voters(); ++l)
    if (!cex.before.orders[l].is_improvement_for(cex.after.orders[l], a)) return false;
  return f.choose(cex.after) != a;
}

bool revalidate_manipulation(const SocialChoiceFunction& f, const ManipulationWitness& w) {
  const Alternative honest = f.choose(w.profile);
  Profile lied = w.profile;
  lied.orders[w.voter] = w.misreport;
  const Alternative outcome = f.choose(lied);
  return outcome != honest && w.profile.orders[w.voter].prefers(outcome, honest);
}

// Axiom results plus witness revalidation for one rule.
json axioms_for(const SocialChoiceFunction& f) {
  json r;
  bool witnesses_ok = true;

  const auto mono = check_monotonic(f);
  r["monotonic"] = !mono.has_value();
  if (mono) {
    r["monotonicity_counterexample"] = {{"before", profile_json(mono->before)},
                                        {"after", profile_json(mono->after)}};
    witnesses_ok = witnesses_ok && revalidate_mono_cex(f, *mono);
  }

  const auto unan = check_unanimous(f);
  r["unanimous"] = !unan.has_value();
  if (unan) {
    r["unanimity_witness"] = profile_json(*unan);
    const Alternative t = unan->orders.front().top();
    bool all_top = true;
    for (const auto& o : unan->orders) all_top = all_top && o.top() == t;
    witnesses_ok = witnesses_ok && all_top && f.choose(*unan) != t;
  }

  const auto manip = check_strategy_proof(f);
  r["strategy_proof"] = !manip.has_value();
  if (manip) {
    r["manipulation_witness"] = {{"profile", profile_json(manip->profile)},
                                 {"voter", manip->voter},
                                 {"misreport", order_json(manip->misreport)}};
    witnesses_ok = witnesses_ok && revalidate_manipulation(f, *manip);
  }

  r["surjective"] = check_surjective(f);
  const auto dict = dictator_of(f);
  if (dict)
    r["dictator"] = *dict;
  else
    r["dictator"] = nullptr;
  r["axiom_equivalence"] = check_axiom_equivalence(f);
  r["witnesses_revalidate"] = witnesses_ok;
  return r;
}

std::vector<SocialChoiceFunction> fixture_rules(int n, int N) {
  std::vector<SocialChoiceFunction> rules;
  for (int l = 0; l < N; ++l) rules.push_back(SocialChoiceFunction::dictatorship(n, N, l));
  rules.push_back(SocialChoiceFunction::constant(n, N, 0));
  rules.push_back(SocialChoiceFunction::plurality_lex(n, N));
  rules.push_back(SocialChoiceFunction::borda_lex(n, N));
  return rules;
}

json suite_axioms(const SuiteConfig& cfg) {
  json out;
  bool pass = true;
  for (const auto& f : fixture_rules(cfg.n, cfg.N)) {
    json r = axioms_for(f);
    bool ok = r["witnesses_revalidate"].get<bool>() && r["axiom_equivalence"].get<bool>();
    if (f.kind() == ScfKind::kDictatorship) {
      ok = ok && r["monotonic"].get<bool>() && r["unanimous"].get<bool>() &&
           r["strategy_proof"].get<bool>() && r["surjective"].get<bool>() && !r["dictator"].is_null();
    }
    if (f.kind() == ScfKind::kConstant) {
      ok = ok && r["monotonic"].get<bool>() && !r["unanimous"].get<bool>() &&
           r["strategy_proof"].get<bool>() && !r["surjective"].get<bool>() && r["dictator"].is_null();
    }
    r["pass"] = ok;
    pass = pass && ok;
    out["rules"][f.name()] = std::move(r);
  }
  out["pass"] = pass;
  return out;
}

json suite_nerves(const SuiteConfig& cfg) {
  const SimplicialComplex by_witness = nerve_NProfiles(cfg.n, cfg.N);
  const SimplicialComplex by_cones = nerve_NM(cfg.n, cfg.N);
  json out;
  out["face_count"] = by_witness.face_count();
  json counts = json::array();
  for (int k = 0; k <= by_witness.dim(); ++k) counts.push_back(by_witness.num_faces(k));
  out["faces_by_dim"] = counts;
  out["identical"] = by_witness == by_cones;
  out["pass"] = out["identical"].get<bool>();
  return out;
}

json suite_homology(const SuiteConfig& cfg) {
  const int n = cfg.n, N = cfg.N;
  const SimplicialComplex np = nerve_NProfiles(n, N);
  const int dim = np.dim();
  // One SNF per boundary matrix, shared across degrees.
  std::vector<int> rank(dim + 2, 0);
  std::vector<std::vector<Int>> torsion(dim + 2);
  bool dd_zero = true;
  for (int k = 1; k <= dim; ++k) {
    const SparseIntMatrix b = boundary_matrix(np, k);
    if (k >= 2) dd_zero = dd_zero && (boundary_matrix(np, k - 1) * b).nnz() == 0;
    const SnfResult snf = smith_normal_form(b);
    rank[k] = snf.rank;
    for (const auto& f : snf.diagonal)
      if (f > 1) torsion[k].push_back(f);
  }
  auto betti = [&](int k) {
    return static_cast<long long>(np.num_faces(k)) - rank[k] - rank[k + 1];
  };
  json out;
  bool pass = true;
  json degrees;
  for (int k = 0; k <= n - 2; ++k) {
    json deg;
    deg["betti"] = betti(k);
    json tors = json::array();
    for (const auto& t : torsion[k + 1]) tors.push_back(t.str());
    deg["torsion"] = tors;
    if (k > 0 && k < n - 2) {
      deg["expected_betti"] = 0;
      pass = pass && betti(k) == 0 && torsion[k + 1].empty();
    }
    if (k == n - 2) {
      deg["expected_betti"] = N;
      pass = pass && betti(k) == N && torsion[k + 1].empty();
    }
    degrees[std::to_string(k)] = std::move(deg);
  }
  out["profile_nerve"] = std::move(degrees);
  out["boundary_squared_zero"] = dd_zero;
  long long betti_sum = 0;
  for (int k = 0; k <= dim; ++k) betti_sum += (k % 2 == 0 ? 1 : -1) * betti(k);
  out["euler_matches_betti"] = betti_sum == np.euler_characteristic();
  pass = pass && dd_zero && out["euler_matches_betti"].get<bool>();
  out["pass"] = pass;
  return out;
}

json suite_generators(const SuiteConfig& cfg) {
  const int n = cfg.n;
  const ProfileNerveIndex idx(n, 1);
  const SimplicialComplex np = nerve_NP(n);
  const HomologySolver solver(np, n - 2);
  json out;
  bool pass = solver.descriptor().betti == 1;
  int cyclic_count = 0;
  json orientations = json::array();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const Orientation g = Orientation::from_mask(n, mask);
    const std::vector<Int> coeff = coefficients_in_homology(solver, h_chain(idx, {g}));
    const Int c = coeff.empty() ? Int(0) : coeff[0];
    const bool cyclic = g.is_cyclic();
    if (cyclic) ++cyclic_count;
    const bool ok = cyclic ? (c == 1 || c == -1) : (c == 0);
    pass = pass && ok;
    orientations.push_back({{"mask", mask}, {"cyclic", cyclic}, {"coefficient", c.str()}});
  }
  pass = pass && cyclic_count == 2;
  out["cyclic_orientations"] = cyclic_count;
  out["orientations"] = std::move(orientations);
  out["pass"] = pass;
  return out;
}

json suite_basis(const SuiteConfig& cfg) {
  const int n = cfg.n, N = cfg.N;
  const ProfileNerveIndex idx(n, N);
  const SimplicialComplex np = nerve_NProfiles(n, N);
  const HomologySolver solver(np, n - 2);
  json out;
  bool pass = solver.descriptor().betti == N && solver.descriptor().torsion.empty();

  const auto basis = standard_basis(idx);
  SparseIntMatrix coeff(static_cast<int>(solver.descriptor().betti), N);
  for (int l = 0; l < N; ++l) {
    const std::vector<Int> c = coefficients_in_homology(solver, basis[l]);
    for (size_t i = 0; i < c.size(); ++i) coeff.set(static_cast<int>(i), l, c[i]);
  }
  json mat = json::array();
  for (int i = 0; i < coeff.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < coeff.cols; ++j) row.push_back(coeff.get(i, j).str());
    mat.push_back(std::move(row));
  }
  out["coefficient_matrix"] = std::move(mat);
  const Int det = coeff.rows == coeff.cols ? coeff.determinant() : Int(0);
  out["determinant"] = det.str();
  pass = pass && (det == 1 || det == -1);

  // Duality against the N=1 generator: the pairing of p_l(h_k) with the
  // class of h(g_hat) must be the identity matrix.
  const ProfileNerveIndex idx1(n, 1);
  const HomologySolver solver1(nerve_NP(n), n - 2);
  const Chain c_hat = h_chain(idx1, {Orientation::cyclic_hat(n)});
  const std::vector<Int> eps_v = coefficients_in_homology(solver1, c_hat);
  pass = pass && eps_v.size() == 1 && (eps_v[0] == 1 || eps_v[0] == -1);
  const Int eps = eps_v.empty() ? Int(1) : eps_v[0];
  bool identity = true;
  json dual = json::array();
  for (int l = 0; l < N; ++l) {
    const SimplicialMap pl = projection_map(idx, l);
    json row = json::array();
    for (int k = 0; k < N; ++k) {
      const std::vector<Int> c = coefficients_in_homology(solver1, chain_image(pl, basis[k]));
      const Int pairing = (c.empty() ? Int(0) : c[0]) / eps;
      row.push_back(pairing.str());
      identity = identity && pairing == (k == l ? 1 : 0);
    }
    dual.push_back(std::move(row));
  }
  out["dual_pairing_matrix"] = std::move(dual);
  out["dual_pairing_is_identity"] = identity;
  out["pass"] = pass && identity;
  return out;
}

json suite_pairing(const SuiteConfig& cfg) {
  const int n = cfg.n, N = cfg.N;
  const bool exhaustive = cfg.exhaustive_validation || profile_count(n, N) <= 300;
  json out;
  bool pass = true;
  for (int l = 0; l < N; ++l) {
    const auto f = SocialChoiceFunction::dictatorship(n, N, l);
    const PairingResult pr = pairing_vector(f, exhaustive);
    json vec = json::array();
    for (const auto& e : pr.vector) vec.push_back(e.str());
    const bool ok = pr.dictator && *pr.dictator == l;
    pass = pass && ok;
    out["rules"][f.name()] = {{"pairing_vector", std::move(vec)},
                              {"dictator", pr.dictator ? json(*pr.dictator) : json(nullptr)},
                              {"pass", ok}};
  }
  out["exhaustive_validation"] = exhaustive;
  out["pass"] = pass;
  return out;
}

json suite_arrangement(const SuiteConfig& cfg) {
  const ArrangementSurvey s = arrangement_survey(cfg.n, cfg.N);
  json out;
  out["formulas_agree"] = s.formulas_agree;
  out["max_dimension"] = s.max_dimension;
  out["expected_max_dimension"] = (cfg.N - 1) * (cfg.n - 1);
  out["maximizer_count"] = s.maximizer_count;
  out["maximizers_are_constant"] = s.maximizers_are_constant;
  out["pass"] = s.formulas_agree && s.max_dimension == (cfg.N - 1) * (cfg.n - 1) &&
                s.maximizers_are_constant;
  return out;
}

json suite_enumerate(const SuiteConfig& cfg) {
  const EnumerationResult res = enumerate_monotonic_unanimous(cfg.n, cfg.N);
  json out;
  out["count"] = res.tables.size();
  out["nodes"] = res.nodes;
  out["budget_exceeded"] = res.budget_exceeded;
  bool pass = !res.budget_exceeded && static_cast<int>(res.tables.size()) == cfg.N;
  std::set<int> dictators;
  for (const auto& t : res.tables) {
    const auto f = SocialChoiceFunction::from_table(cfg.n, cfg.N, t);
    const auto d = dictator_of(f);
    pass = pass && d.has_value() && !check_monotonic(f) && !check_unanimous(f);
    if (d) dictators.insert(*d);
  }
  pass = pass && static_cast<int>(dictators.size()) == static_cast<int>(res.tables.size());
  out["all_dictatorial"] = pass;
  out["pass"] = pass;
  return out;
}

json suite_equivalence(const SuiteConfig& cfg) {
  json out;
  bool pass = true;
  for (const auto& f : fixture_rules(cfg.n, cfg.N)) pass = pass && check_axiom_equivalence(f);
  long long violations = 0;
  for (long long s = 0; s < cfg.samples; ++s) {
    const auto f = SocialChoiceFunction::random_table(cfg.n, cfg.N, cfg.seed + s);
    if (!check_axiom_equivalence(f)) ++violations;
  }
  out["samples"] = cfg.samples;
  out["seed"] = cfg.seed;
  out["violations"] = violations;
  out["pass"] = pass && violations == 0;
  return out;
}

json config_echo(const SuiteConfig& cfg) {
  json c;
  c["n"] = cfg.n;
  c["N"] = cfg.N;
  c["suites"] = cfg.suites.empty() ? kAllSuites : cfg.suites;
  c["seed"] = cfg.seed;
  c["samples"] = cfg.samples;
  c["exhaustive_validation"] = cfg.exhaustive_validation;
  return c;
}

json report_shell(const SuiteConfig& cfg) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["config"] = config_echo(cfg);
  doc["results"] = json::object();
  doc["timing"] = json::object();
  return doc;
}

}  // namespace

void require_supported(const std::string& suite, int n, int N) {
  if (n < 3 || N < 1)
    throw std::invalid_argument("unsupported instance: need n >= 3 and N >= 1");
  const long long profiles = profile_count(n, N);
  auto reject = [&](long long limit) {
    if (profiles > limit)
      throw std::invalid_argument("unsupported instance for suite '" + suite + "': (n!)^N = " +
                                  std::to_string(profiles) + " exceeds the desk-scale limit " +
                                  std::to_string(limit));
  };
  if (suite == "axioms" || suite == "equivalence" || suite == "analyze") {
    reject(2000);
  } else if (suite == "nerves" || suite == "homology" || suite == "basis" ||
             suite == "pairing") {
    if (n > 4) throw std::invalid_argument("unsupported instance for suite '" + suite +
                                           "': n > 4 is beyond the desk-scale envelope");
    reject(600);
  } else if (suite == "generators") {
    if (n > 5)
      throw std::invalid_argument("unsupported instance for suite 'generators': n > 5");
  } else if (suite == "arrangement") {
    long long colorings = 1;
    for (int k = 0; k < n * (n - 1) / 2; ++k) {
      colorings *= N;
      if (colorings > 100000)
        throw std::invalid_argument("unsupported instance for suite 'arrangement': "
                                    "too many colorings");
    }
  } else if (suite == "enumerate") {
    if (!(n == 3 && N == 2))
      throw std::invalid_argument("suite 'enumerate' supports (n, N) = (3, 2) only");
  } else if (suite == "homology_na") {
    if (n > 8) throw std::invalid_argument("homology of N_A supported for n <= 8");
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
}

nlohmann::json run_suite(const std::string& suite, const SuiteConfig& cfg) {
  require_supported(suite, cfg.n, cfg.N);
  if (suite == "axioms") return suite_axioms(cfg);
  if (suite == "nerves") return suite_nerves(cfg);
  if (suite == "homology") return suite_homology(cfg);
  if (suite == "generators") return suite_generators(cfg);
  if (suite == "basis") return suite_basis(cfg);
  if (suite == "pairing") return suite_pairing(cfg);
  if (suite == "arrangement") return suite_arrangement(cfg);
  if (suite == "enumerate") return suite_enumerate(cfg);
  if (suite == "equivalence") return suite_equivalence(cfg);
  throw std::invalid_argument("unknown suite: " + suite);
}

nlohmann::json cmd_verify(const SuiteConfig& cfg) {
  json doc = report_shell(cfg);
  const auto& suites = cfg.suites.empty() ? kAllSuites : cfg.suites;
  for (const auto& s : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    doc["results"][s] = run_suite(s, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    doc["timing"][s] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  }
  return doc;
}

nlohmann::json cmd_analyze(const SocialChoiceFunction& f, const SuiteConfig& cfg) {
  require_supported("analyze", f.n(), f.voters());
  SuiteConfig echo = cfg;
  echo.n = f.n();
  echo.N = f.voters();
  json doc = report_shell(echo);
  doc["config"]["rule"] = f.name();
  const auto t0 = std::chrono::steady_clock::now();

  json axioms = axioms_for(f);
  const bool mono_unan = axioms["monotonic"].get<bool>() && axioms["unanimous"].get<bool>();
  doc["results"]["axioms"] = axioms;
  doc["results"]["pipeline_run"] = mono_unan;
  if (mono_unan) {
    require_supported("pairing", f.n(), f.voters());
    const ProfileNerveIndex idx(f.n(), f.voters());
    const SimplicialComplex np = nerve_NProfiles(f.n(), f.voters());
    const SimplicialComplex na = nerve_NA(f.n());
    const bool exhaustive =
        cfg.exhaustive_validation || profile_count(f.n(), f.voters()) <= 300;
    const SimplicialMap fs = induced_scf_map(f, idx, np, na, exhaustive);
    json vmap;
    for (int v = 0; v < idx.vertex_count(); ++v) vmap[idx.label(v)] = fs.vertex_map[v];
    doc["results"]["induced_vertex_map"] = std::move(vmap);

    const PairingResult pr = pairing_vector(f, exhaustive);
    json vec = json::array();
    for (const auto& e : pr.vector) vec.push_back(e.str());
    doc["results"]["pairing_vector"] = std::move(vec);
    doc["results"]["dictator"] = pr.dictator ? json(*pr.dictator) : json(nullptr);

    json hom;
    const HomologyDescriptor na_top = homology_ranks(na, f.n() - 2);
    hom["NA"] = {{"degree", f.n() - 2}, {"betti", na_top.betti}};
    const HomologyDescriptor np_top = homology_ranks(np, f.n() - 2);
    json tors = json::array();
    for (const auto& t : np_top.torsion) tors.push_back(t.str());
    hom["NProfiles"] = {{"degree", f.n() - 2}, {"betti", np_top.betti}, {"torsion", tors}};
    doc["results"]["homology"] = std::move(hom);
    doc["results"]["pass"] = pr.dictator.has_value();
  } else {
    doc["results"]["pass"] = true;  // analysis of a non-dictatorial rule is a valid outcome
  }
  const auto t1 = std::chrono::steady_clock::now();
  doc["timing"]["analyze"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return doc;
}

nlohmann::json complex_dump(int n, int N, const std::string& target) {
  SimplicialComplex cx;
  if (target == "NA")
    cx = nerve_NA(n);
  else if (target == "NP")
    cx = nerve_NP(n);
  else if (target == "NProfiles")
    cx = nerve_NProfiles(n, N);
  else
    throw std::invalid_argument("unknown complex target: " + target);
  json dump;
  dump["vertex_count"] = cx.vertex_count();
  json by_dim = json::array();
  for (int k = 0; k <= cx.dim(); ++k) {
    json level = json::array();
    for (const auto& f : cx.faces(k)) level.push_back(f);
    by_dim.push_back(std::move(level));
  }
  dump["faces_by_dim"] = std::move(by_dim);
  return dump;
}

nlohmann::json cmd_homology(const std::string& target, int n, int N,
                            std::optional<int> degree, const std::string& dump_path) {
  if (target == "NA")
    require_supported("homology_na", n, 1);
  else if (target == "NP")
    require_supported("generators", n, 1);
  else
    require_supported("homology", n, N);
  SuiteConfig cfg;
  cfg.n = n;
  cfg.N = N;
  json doc = report_shell(cfg);
  doc["config"]["target"] = target;
  const auto t0 = std::chrono::steady_clock::now();
  SimplicialComplex cx;
  if (target == "NA")
    cx = nerve_NA(n);
  else if (target == "NP")
    cx = nerve_NP(n);
  else if (target == "NProfiles")
    cx = nerve_NProfiles(n, N);
  else
    throw std::invalid_argument("unknown complex target: " + target);
  if (degree && (*degree < 0 || *degree > cx.dim()))
    throw std::invalid_argument("degree out of range for " + target);
  json degrees;
  const int lo = degree ? *degree : 0;
  const int hi = degree ? *degree : std::min(cx.dim(), n - 2);
  for (int k = lo; k <= hi; ++k) {
    const HomologyDescriptor d = homology_ranks(cx, k);
    json tors = json::array();
    for (const auto& t : d.torsion) tors.push_back(t.str());
    degrees[std::to_string(k)] = {{"betti", d.betti}, {"torsion", tors}};
  }
  doc["results"]["target"] = target;
  doc["results"]["faces"] = cx.face_count();
  doc["results"]["homology"] = std::move(degrees);
  doc["results"]["pass"] = true;
  if (!dump_path.empty()) {
    doc["results"]["complex_dump_path"] = dump_path;
  }
  const auto t1 = std::chrono::steady_clock::now();
  doc["timing"]["homology"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return doc;
}

nlohmann::json cmd_enumerate(const SuiteConfig& cfg) {
  json doc = report_shell(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  doc["results"]["enumerate"] = run_suite("enumerate", cfg);
  const auto t1 = std::chrono::steady_clock::now();
  doc["timing"]["enumerate"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return doc;
}

nlohmann::json cmd_arrangement(const SuiteConfig& cfg) {
  json doc = report_shell(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  doc["results"]["arrangement"] = run_suite("arrangement", cfg);
  const auto t1 = std::chrono::steady_clock::now();
  doc["timing"]["arrangement"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return doc;
}

bool report_passes(const nlohmann::json& report) {
  bool pass = true;
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& node) {
    if (node.is_object()) {
      for (auto it = node.begin(); it != node.end(); ++it) {
        if (it.key() == "pass" && it.value().is_boolean() && !it.value().get<bool>()) pass = false;
        walk(it.value());
      }
    } else if (node.is_array()) {
      for (const auto& v : node) walk(v);
    }
  };
  walk(report);
  return pass;
}

}  // namespace gsv
