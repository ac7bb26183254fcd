// cposet_cli: scenario runner over the cposet library.
//
// Every verification the library supports is exposed as a subcommand that
// emits a machine-readable report (JSON by default, CSV with --format csv).
// Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage error
// or a guard/hypothesis violation (reported as a skipped check).

#include "CLI11.hpp"
#include "json.hpp"

#include "cposet/cposet.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

using namespace cposet;
using ordered_json = nlohmann::ordered_json;

namespace {

// ---------- reports ----------

struct CheckResult {
  std::string name;
  std::string status;  // pass | fail | skipped | unknown
  std::string expected;
  std::string actual;
};

struct Report {
  std::string scenario;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;
};

void add_check(Report& rep, const std::string& name, bool ok, const std::string& expected,
               const std::string& actual) {
  rep.checks.push_back({name, ok ? "pass" : "fail", expected, actual});
}

void add_skip(Report& rep, const std::string& name, const std::string& reason) {
  rep.checks.push_back({name, "skipped", "", reason});
}

ordered_json report_to_json(const Report& rep) {
  ordered_json j;
  j["scenario"] = rep.scenario;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = params;
  j["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.status;
    jc["expected"] = c.expected;
    jc["actual"] = c.actual;
    j["checks"].push_back(jc);
  }
  j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string reports_to_csv(const std::vector<Report>& reports) {
  std::ostringstream out;
  out << "scenario,check,status,expected,actual,elapsed_ms\n";
  for (const auto& rep : reports)
    for (const auto& c : rep.checks)
      out << csv_escape(rep.scenario) << "," << csv_escape(c.name) << "," << c.status << ","
          << csv_escape(c.expected) << "," << csv_escape(c.actual) << "," << rep.elapsed_ms
          << "\n";
  return out.str();
}

int report_exit_code(const std::vector<Report>& reports) {
  bool any_fail = false, any_skip = false;
  for (const auto& rep : reports)
    for (const auto& c : rep.checks) {
      if (c.status == "fail") any_fail = true;
      if (c.status == "skipped") any_skip = true;
    }
  if (any_fail) return 1;
  if (any_skip) return 2;
  return 0;
}

// ---------- shared helpers ----------

long long betti_at(const HomologyResult& h, size_t k) {
  return k < h.betti.size() ? h.betti[k] : 0;
}

bool torsion_free(const HomologyResult& h) {
  for (const auto& t : h.torsion)
    if (!t.empty()) return false;
  return true;
}

std::string betti_string(const HomologyResult& h) {
  size_t n = h.betti.size();
  while (n > 1 && h.betti[n - 1] == 0) --n;
  std::ostringstream out;
  out << "[";
  for (size_t k = 0; k < n; ++k) out << (k ? "," : "") << h.betti[k];
  out << "]";
  bool tors = !torsion_free(h);
  if (tors) {
    out << " torsion ";
    for (size_t k = 0; k < h.torsion.size(); ++k)
      for (const auto& t : h.torsion[k]) out << "H" << k << ":Z/" << t << " ";
  }
  return out.str();
}

bool same_homology(const HomologyResult& a, const HomologyResult& b) {
  size_t n = std::max(a.betti.size(), b.betti.size());
  for (size_t k = 0; k < n; ++k)
    if (betti_at(a, k) != betti_at(b, k)) return false;
  size_t m = std::max(a.torsion.size(), b.torsion.size());
  for (size_t k = 0; k < m; ++k) {
    auto ta = k < a.torsion.size() ? a.torsion[k] : std::vector<BigInt>{};
    auto tb = k < b.torsion.size() ? b.torsion[k] : std::vector<BigInt>{};
    if (ta != tb) return false;
  }
  return true;
}

SymplecticSpace frattini_space(const GroupModel& e, unsigned r) {
  auto f = commutator_form(e);
  std::vector<std::string> labels;
  for (unsigned i = 1; i <= r; ++i) labels.push_back("x" + std::to_string(i));
  for (unsigned i = 1; i <= r; ++i) labels.push_back("xbar" + std::to_string(i));
  return SymplecticSpace{FieldSpec(e.p), r, 0, f, std::move(labels)};
}

struct GroupChoice {
  GroupModel model;
  SymplecticSpace space;
  std::string label;
};

// Build the group named by --group; throws std::invalid_argument on bad
// parameter combinations.
GroupChoice build_group(const std::string& name, unsigned p, unsigned r) {
  if (name == "Q8") {
    auto e = extraspecial(2, 1, ExtraspecialVariant::minus);
    return {e, frattini_space(e, 1), "Q8"};
  }
  if (name == "D8") {
    auto e = extraspecial(2, 1, ExtraspecialVariant::plus);
    return {e, frattini_space(e, 1), "D8"};
  }
  if (name == "plus" || name == "minus") {
    auto e = extraspecial(2, r, name == "plus" ? ExtraspecialVariant::plus
                                               : ExtraspecialVariant::minus);
    return {e, frattini_space(e, r),
            "E" + std::string(name == "plus" ? "+" : "-") + "(2^" + std::to_string(2 * r + 1) +
                ")"};
  }
  if (name == "exponent-p") {
    auto e = extraspecial(p, r, ExtraspecialVariant::exponent_p);
    return {e, frattini_space(e, r), "E(exp p, p=" + std::to_string(p) + ")"};
  }
  if (name == "heisenberg") {
    auto e = heisenberg(standard_space(p, r));
    return {e, frattini_space(e, r), "H(F_" + std::to_string(p * p) + "^" + std::to_string(r) + ")"};
  }
  throw std::invalid_argument("unknown group: " + name);
}

// ---------- scenarios ----------

struct Options {
  unsigned p = 2;
  unsigned r = 1;
  unsigned dim = 2;
  std::string group = "Q8";
  std::string collection = "subspaces";
  bool long_run = false;
};

Report run_formulas(const Options& o) {
  Report rep;
  rep.scenario = "formulas";
  rep.params = {{"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  try {
    auto w = wedge_count(o.p, o.r);  // both Euler-identity forms cross-checked inside
    add_check(rep, "euler-identity-forms-agree", true, "closed form == alternating sum",
              "d=" + w.d.str() + " chi=" + w.euler.str());
    for (unsigned j = 0; j <= o.r; ++j) {
      BigInt n = n_isotropic(o.p, o.r, j);
      bool small = (o.p <= 3 && o.r <= 2) || (o.p == 5 && o.r <= 2);
      if (small) {
        size_t count = enumerate_isotropic(standard_space(o.p, o.r), j).size();
        add_check(rep, "count-j" + std::to_string(j), BigInt(count) == n, n.str(),
                  std::to_string(count));
      } else {
        add_check(rep, "count-j" + std::to_string(j), true, n.str(), n.str() + " (formula)");
      }
    }
  } catch (const std::exception& e) {
    add_check(rep, "euler-identity-forms-agree", false, "no exception", e.what());
  }
  return rep;
}

Report run_sphericity(const Options& o) {
  Report rep;
  rep.scenario = "sphericity";
  rep.params = {{"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  bool small = (o.r == 1 && o.p <= 5) || (o.p == 2 && o.r == 2);
  bool gated = (o.p == 3 && o.r == 2);
  if (!small && !(gated && o.long_run)) {
    add_skip(rep, "homology", gated ? "(3,2) homology requires --long"
                                    : "desk-scale guard: p <= 5 with r = 1, or (2,2); (3,2) with --long");
    return rep;
  }
  auto w = wedge_count(o.p, o.r);
  auto space = standard_space(o.p, o.r);
  auto cover = coset_poset_HV_IV(space);
  auto complex = order_complex(cover.poset);
  long long chi = complex.euler_characteristic();
  add_check(rep, "euler", BigInt(chi) == w.euler, w.euler.str(), std::to_string(chi));
  auto h = homology(chain_complex(complex));
  add_check(rep, "betti-profile", h.is_wedge_of_spheres(static_cast<int>(o.r), w.d),
            "wedge of " + w.d.str() + " " + std::to_string(o.r) + "-spheres", betti_string(h));
  add_check(rep, "torsion-free", torsion_free(h), "no torsion", betti_string(h));
  // fundamental group certificate where the presentation reduces
  if (cover.poset.size() <= 600) {
    auto pi1 = pi1_report(complex);
    std::string expected = o.r == 1 ? "free of rank " + w.d.str() : "trivial";
    if (pi1.conclusive)
      add_check(rep, "pi1", pi1.connected && pi1.description == expected, expected,
                pi1.description);
    else
      rep.checks.push_back({"pi1", "unknown", expected, "presentation did not reduce in budget"});
  }
  return rep;
}

Report run_reduction(const Options& o) {
  Report rep;
  rep.scenario = "reduction";
  rep.params = {{"group", o.group}, {"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  GroupChoice g = build_group(o.group, o.p, o.r);
  size_t guard = o.long_run ? 729 : 128;
  if (g.model.order > guard) {
    add_skip(rep, "homology-equal",
             "group order " + std::to_string(g.model.order) + " exceeds guard " +
                 std::to_string(guard) + (o.long_run ? "" : " (use --long)"));
    return rep;
  }
  rep.params.push_back({"order", std::to_string(g.model.order)});
  auto src = make_group_coset_poset(g.model, abelian_subgroups(g.model));
  auto dst = coset_poset_V_IV(g.space);
  auto nu = reduction_map(src, dst);
  size_t bad_fibers = 0;
  for (size_t y = 0; y < dst.poset.size(); ++y)
    if (!has_terminal(fiber(nu, y, FiberSide::under))) ++bad_fibers;
  add_check(rep, "fibers-terminal", bad_fibers == 0, "every fiber has a terminal object",
            std::to_string(bad_fibers) + " bad fibers of " + std::to_string(dst.poset.size()));
  auto hs = homology_of_poset(src.poset);
  auto hd = homology_of_poset(dst.poset);
  add_check(rep, "homology-equal", same_homology(hs, hd), betti_string(hd), betti_string(hs));
  return rep;
}

Report run_split_seq(const Options& o) {
  Report rep;
  rep.scenario = "split-seq";
  rep.params = {{"p", std::to_string(o.p)},
                {"collection", o.collection},
                {"dim", std::to_string(o.collection == "isotropic" ? 2 * o.r : o.dim)}};
  unsigned n;
  std::vector<Subspace> coll;
  if (o.collection == "isotropic") {
    if (!(o.p == 2 && o.r == 2)) {
      add_skip(rep, "rank-identity", "isotropic mode supports (p,r) = (2,2)");
      return rep;
    }
    n = 4;
    coll = enumerate_isotropic_all(standard_space(2, 2));
  } else if (o.collection == "subspaces") {
    n = o.dim;
    if (n < 2 || n > 4 || o.p > 3 || (o.p == 3 && n == 4 && !o.long_run)) {
      add_skip(rep, "rank-identity", "guard: p <= 3, 2 <= dim <= 4; (3,4) needs --long");
      return rep;
    }
    coll = proper_subspaces(full_space(o.p, n));
  } else {
    add_skip(rep, "rank-identity", "unknown collection kind: " + o.collection);
    return rep;
  }
  auto universe = full_space(o.p, n);
  std::vector<FpVector> rows;
  for (unsigned i = 0; i + 1 < n; ++i) {
    FpVector e(n, 0);
    e[i] = 1;
    rows.push_back(e);
  }
  auto w = canonicalize(o.p, n, std::move(rows));
  FpVector v(n, 0);
  v[n - 1] = 1;
  // hypotheses of the splitting theorem: the collection contains the trivial
  // subgroup and a member not contained in the index-p subgroup W
  bool has_zero = false, has_outside = false;
  for (const auto& a : coll) {
    if (a.dim() == 0) has_zero = true;
    if (!contains(w, a)) has_outside = true;
  }
  if (!has_zero || !has_outside) {
    add_skip(rep, "hypotheses",
             "collection must contain 0 and a member not contained in W; refusing");
    return rep;
  }
  add_check(rep, "hypotheses", true, "0 in F and some A not within W", "verified");
  auto h_full = homology_of_poset(make_vector_coset_poset(universe, coll).poset);
  auto h_vee =
      homology_of_poset(make_vector_coset_poset(universe, collection_vee(coll, w, universe)).poset);
  std::vector<HomologyResult> rel;
  for (unsigned k = 0; k < o.p; ++k)
    rel.push_back(homology_of_poset(
        make_vector_coset_poset(universe, coll, VectorRestriction{vec_scale(v, k, o.p), w})
            .poset));
  bool ok = true;
  std::ostringstream actual;
  for (unsigned i = 1; i <= n; ++i) {
    long long lhs = betti_at(h_full, i);
    long long mid = betti_at(h_vee, i - 1);
    long long right = 0;
    for (const auto& r : rel) right += betti_at(r, i - 1);
    bool here = (static_cast<long long>(o.p) - 1) * mid == lhs + right;
    ok &= here;
    actual << "deg" << i << ":(" << (o.p - 1) << ")*" << mid << "==" << lhs << "+" << right
           << " ";
  }
  add_check(rep, "rank-identity", ok, "(p-1) rank H_{i-1}(vee) == rank H_i + sum rank H_{i-1}(rel)",
            actual.str());
  return rep;
}

Report run_maps(const Options& o) {
  Report rep;
  rep.scenario = "maps";
  rep.params = {{"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  if (o.p > 3 || o.r > 2) {
    add_skip(rep, "comparabilities", "guard: p <= 3, r <= 2");
    return rep;
  }
  const unsigned n = 2 * o.r;
  auto universe = full_space(o.p, n);
  auto all = proper_subspaces(universe);
  size_t checks = 0, failures = 0;
  for (const auto& w : all) {
    if (w.dim() + 1 != n) continue;
    auto tv_vee = make_subspace_poset(collection_vee(all, w, universe));
    auto cw = make_vector_coset_poset(w, proper_subspaces(w));
    for (const auto& v : enumerate_ambient(o.p, n)) {
      if (vec_is_zero(v) || member(v, w)) continue;
      auto theta = map_theta_v(tv_vee, cw, w, v);
      auto s = map_s_v(cw, tv_vee, v);
      for (size_t c = 0; c < cw.poset.size(); ++c, ++checks)
        if (!cw.poset.leq(c, theta.image[s.image[c]])) ++failures;
      for (size_t b = 0; b < tv_vee.poset.size(); ++b, ++checks)
        if (!tv_vee.poset.leq(s.image[theta.image[b]], b)) ++failures;
    }
  }
  add_check(rep, "comparabilities", failures == 0, "0 failures",
            std::to_string(failures) + " of " + std::to_string(checks));
  if (o.r == 2) {
    auto space = standard_space(o.p, 2);
    auto h = make_hyperbolic_split(space);
    auto vee = make_subspace_poset(isotropic_vee_collection(h));
    auto q = quotient_heis_poset(h);
    auto tb = map_thetabar(h, vee, q);
    auto sb = map_sbar(h, q, vee);
    size_t inv_fail = 0;
    for (size_t i = 0; i < vee.poset.size(); ++i)
      if (sb.image[tb.image[i]] != i) ++inv_fail;
    for (size_t i = 0; i < q.poset.size(); ++i)
      if (tb.image[sb.image[i]] != i) ++inv_fail;
    add_check(rep, "sbar-thetabar-inverse", inv_fail == 0, "two-sided inverse",
              std::to_string(inv_fail) + " failures on " +
                  std::to_string(vee.poset.size() + q.poset.size()) + " elements");
  }
  return rep;
}

Report run_tau(const Options& o) {
  Report rep;
  rep.scenario = "tau";
  rep.params = {{"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  bool small = (o.r == 1 && o.p <= 3) || (o.p == 2 && o.r == 2);
  bool gated = (o.p == 3 && o.r == 2);
  if (!small && !(gated && o.long_run)) {
    add_skip(rep, "non-boundary", gated ? "(3,2) requires --long" : "guard: p <= 3, r <= 2");
    return rep;
  }
  auto space = standard_space(o.p, o.r);
  auto sphere = sphere_J(space);
  auto sd = barycentric(sphere.poset);
  auto target = coset_poset_HV_IV(space);
  try {
    auto tau = map_tau_tilde(space, sphere, sd, target);
    add_check(rep, "order-preserving", true, "tau-tilde is a poset map", "verified");
    auto sdc = order_complex(sd);
    auto cc = chain_complex(sdc);
    auto z = fundamental_cycle_sdJ(sphere.poset, sd, sdc, cc);
    auto tc = order_complex(target.poset);
    auto tcc = chain_complex(tc);
    auto img = pushforward(z, sdc, tc, tau.image);
    add_check(rep, "cycle", !img.coeff.empty() && is_cycle(tcc, img), "nonzero cycle",
              std::to_string(img.coeff.size()) + " simplices in support");
    add_check(rep, "non-boundary", !is_rational_boundary(tcc, img),
              "class survives rationally", is_rational_boundary(tcc, img) ? "boundary" : "non-boundary");
  } catch (const std::exception& e) {
    add_check(rep, "order-preserving", false, "tau-tilde is a poset map", e.what());
  }
  return rep;
}

Report run_pi_phi(const Options& o) {
  Report rep;
  rep.scenario = "pi-phi";
  rep.params = {{"group", o.group}, {"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  GroupChoice g = build_group(o.group, o.p, o.r);
  if (g.model.order > 128 && !o.long_run) {
    add_skip(rep, "homomorphism", "group order exceeds guard (use --long)");
    return rep;
  }
  rep.params.push_back({"order", std::to_string(g.model.order)});
  auto pi = make_pi(g.model);
  try {
    auto phi = phi_map(pi, g.model, heisenberg(g.space));  // hom + surjectivity verified
    add_check(rep, "homomorphism", true, "phi is a surjective homomorphism onto H(V)",
              "verified on all " + std::to_string(pi.model.order * pi.model.order) + " pairs");
    bool kernel_ok = phi.kernel.size() == g.model.p;
    for (uint16_t k : phi.kernel) {
      auto [a, b] = pi.pairs[k];
      kernel_ok &= g.model.mul[a][b] == g.model.identity;
      bool central = false;
      for (uint16_t z : g.model.center) central |= (z == a);
      kernel_ok &= central;
    }
    add_check(rep, "kernel", kernel_ok, "{(a, a^-1) : a central}, order " + std::to_string(g.model.p),
              "order " + std::to_string(phi.kernel.size()));
  } catch (const std::exception& e) {
    add_check(rep, "homomorphism", false, "phi is a surjective homomorphism onto H(V)", e.what());
  }
  return rep;
}

Report run_almost(const Options& o) {
  Report rep;
  rep.scenario = "almost";
  rep.params = {{"p", std::to_string(o.p)}, {"r", std::to_string(o.r)}};
  if (!((o.p == 2 || o.p == 3) && o.r == 1)) {
    add_skip(rep, "homology-equal", "guard: p <= 3, r = 1 for the almost extraspecial geometry");
    return rep;
  }
  // V' of dimension 2r+1 with a 1-dimensional radical; q-hat projects away
  // the radical
  auto degenerate = standard_space(o.p, o.r, 1);
  auto nondegenerate = standard_space(o.p, o.r);
  auto src = make_vector_coset_poset(full_space(o.p, 2 * o.r + 1),
                                     enumerate_isotropic_all(degenerate));
  auto dst = coset_poset_V_IV(nondegenerate);
  QuotientMap q = quotient_coords(degenerate.form.radical);
  auto qh = radical_projection_map(src, dst, q);
  size_t bad_fibers = 0;
  for (size_t y = 0; y < dst.poset.size(); ++y)
    if (!has_terminal(fiber(qh, y, FiberSide::under))) ++bad_fibers;
  add_check(rep, "fibers-terminal", bad_fibers == 0, "every fiber has a terminal object",
            std::to_string(bad_fibers) + " bad fibers of " + std::to_string(dst.poset.size()));
  auto hs = homology_of_poset(src.poset);
  auto hd = homology_of_poset(dst.poset);
  add_check(rep, "homology-equal", same_homology(hs, hd), betti_string(hd), betti_string(hs));
  return rep;
}

// ---------- the `all` driver ----------

std::vector<std::pair<std::string, std::function<Report()>>> all_scenarios(bool long_run) {
  auto opt = [long_run](unsigned p, unsigned r) {
    Options o;
    o.p = p;
    o.r = r;
    o.long_run = long_run;
    return o;
  };
  std::vector<std::pair<std::string, std::function<Report()>>> out;
  for (auto [p, r] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}})
    out.push_back({"formulas", [o = opt(p, r)] { return run_formulas(o); }});
  {
    std::vector<std::pair<unsigned, unsigned>> ps = {{2, 1}, {3, 1}, {5, 1}, {2, 2}};
    if (long_run) ps.push_back({3, 2});
    for (auto [p, r] : ps)
      out.push_back({"sphericity", [o = opt(p, r)] { return run_sphericity(o); }});
  }
  for (std::string g : {"Q8", "D8", "plus", "minus", "heisenberg"}) {
    Options o = opt(g == "heisenberg" ? 3 : 2, g == "plus" || g == "minus" ? 2u : 1u);
    o.group = g;
    out.push_back({"reduction", [o] { return run_reduction(o); }});
    out.push_back({"pi-phi", [o] { return run_pi_phi(o); }});
  }
  for (unsigned p : {2u, 3u})
    for (unsigned n : {2u, 3u}) {
      Options o = opt(p, 1);
      o.dim = n;
      out.push_back({"split-seq", [o] { return run_split_seq(o); }});
    }
  {
    Options o = opt(2, 2);
    o.collection = "isotropic";
    out.push_back({"split-seq", [o] { return run_split_seq(o); }});
  }
  for (auto [p, r] : {std::pair<unsigned, unsigned>{2, 1}, {3, 1}, {2, 2}, {3, 2}})
    out.push_back({"maps", [o = opt(p, r)] { return run_maps(o); }});
  {
    std::vector<std::pair<unsigned, unsigned>> ps = {{2, 1}, {3, 1}, {2, 2}};
    if (long_run) ps.push_back({3, 2});
    for (auto [p, r] : ps) out.push_back({"tau", [o = opt(p, r)] { return run_tau(o); }});
  }
  for (unsigned p : {2u, 3u})
    out.push_back({"almost", [o = opt(p, 1)] { return run_almost(o); }});
  return out;
}

Report timed(const std::function<Report()>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  try {
    rep = f();
  } catch (const std::exception& e) {
    rep.scenario = "error";
    rep.checks.push_back({"exception", "fail", "no exception", e.what()});
  }
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

void emit(const std::vector<Report>& reports, const std::string& out_file,
          const std::string& format, bool array) {
  std::string text;
  if (format == "csv") {
    text = reports_to_csv(reports);
  } else if (array) {
    ordered_json j = ordered_json::array();
    for (const auto& rep : reports) j.push_back(report_to_json(rep));
    text = j.dump(2) + "\n";
  } else {
    text = report_to_json(reports.front()).dump(2) + "\n";
  }
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_file);
    f << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coset poset verification scenarios"};
  app.require_subcommand(1);

  Options o;
  std::string out_file, format = "json";
  unsigned jobs = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "field characteristic (prime)");
    cmd->add_option("--r", o.r, "symplectic rank");
    cmd->add_flag("--long", o.long_run, "unlock larger computations");
    cmd->add_option("--out", out_file, "write the report to a file instead of stdout");
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* c_sph = app.add_subcommand("sphericity", "wedge-of-spheres homology of the cover");
  add_common(c_sph);
  auto* c_red = app.add_subcommand("reduction", "coset poset of abelian subgroups vs the base");
  add_common(c_red);
  c_red->add_option("--group", o.group, "group variant")
      ->check(CLI::IsMember({"heisenberg", "plus", "minus", "exponent-p", "Q8", "D8"}));
  auto* c_split = app.add_subcommand("split-seq", "split exact sequence rank identity");
  add_common(c_split);
  c_split->add_option("--dim", o.dim, "ambient dimension for the subspace collection");
  c_split->add_option("--collection", o.collection, "collection kind")
      ->check(CLI::IsMember({"subspaces", "isotropic"}));
  auto* c_maps = app.add_subcommand("maps", "theta/s comparabilities and sbar/thetabar inverses");
  add_common(c_maps);
  auto* c_tau = app.add_subcommand("tau", "non-trivial spherical class via tau-tilde");
  add_common(c_tau);
  auto* c_formulas = app.add_subcommand("formulas", "Euler identity and isotropic counts");
  add_common(c_formulas);
  auto* c_phi = app.add_subcommand("pi-phi", "the homomorphism phi: pi -> H(V)");
  add_common(c_phi);
  c_phi->add_option("--group", o.group, "group variant")
      ->check(CLI::IsMember({"heisenberg", "plus", "minus", "exponent-p", "Q8", "D8"}));
  auto* c_almost = app.add_subcommand("almost", "radical projection for almost extraspecial groups");
  add_common(c_almost);
  auto* c_all = app.add_subcommand("all", "run the full default scenario battery");
  add_common(c_all);
  c_all->add_option("--jobs", jobs, "run scenarios on N threads")->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<Report> reports;
  bool array = false;
  try {
    if (c_all->parsed()) {
      array = true;
      auto scenarios = all_scenarios(o.long_run);
      reports.resize(scenarios.size());
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= scenarios.size()) break;
          reports[i] = timed(scenarios[i].second);
        }
      };
      if (jobs <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
    } else if (c_sph->parsed()) {
      reports.push_back(timed([&] { return run_sphericity(o); }));
    } else if (c_red->parsed()) {
      reports.push_back(timed([&] { return run_reduction(o); }));
    } else if (c_split->parsed()) {
      reports.push_back(timed([&] { return run_split_seq(o); }));
    } else if (c_maps->parsed()) {
      reports.push_back(timed([&] { return run_maps(o); }));
    } else if (c_tau->parsed()) {
      reports.push_back(timed([&] { return run_tau(o); }));
    } else if (c_formulas->parsed()) {
      reports.push_back(timed([&] { return run_formulas(o); }));
    } else if (c_phi->parsed()) {
      reports.push_back(timed([&] { return run_pi_phi(o); }));
    } else if (c_almost->parsed()) {
      reports.push_back(timed([&] { return run_almost(o); }));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  emit(reports, out_file, format, array);
  return report_exit_code(reports);
}
