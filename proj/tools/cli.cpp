#include "cli.hpp"

#include "ybfk/error.hpp"
#include "ybfk/flow.hpp"
#include "ybfk/json_io.hpp"
#include "ybfk/moment.hpp"
#include "ybfk/parallel.hpp"
#include "ybfk/poisson.hpp"
#include "ybfk/sampling.hpp"
#include "ybfk/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>

namespace ybfk::cli {

namespace {

struct Options {
  std::string builtin;
  std::string file;
  std::string point;
  std::string hamiltonian = "T12";
  std::string t = "s";
  std::string out;
  std::string trajectory;
  std::vector<std::string> check;
  std::size_t n = 2;
  std::size_t samples = 1000;
  std::size_t steps = 10000;
  std::size_t record_every = 0;
  std::uint64_t seed = 0;
  double dt = 1e-3;
  double float_tol = 1e-6;
  bool no_renormalize = false;
};

// Errors that mean the request itself was unusable.
bool is_input_error(const std::exception& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const MembershipError*>(&e) ||
         dynamic_cast<const DimensionMismatch*>(&e) || dynamic_cast<const NotInAlgebra*>(&e) ||
         dynamic_cast<const ParentMismatch*>(&e);
}

class Report {
public:
  Report(std::string command, const std::vector<std::string>& args, const Options& o) {
    j_["command"] = command;
    j_["args"] = args;
    Json config;
    config["seed"] = o.seed;
    config["samples"] = o.samples;
    config["dt"] = o.dt;
    config["steps"] = o.steps;
    config["float_tol"] = o.float_tol;
    config["conventions"] = {
        {"wedge", "x^y = x(x)y - y(x)x"},
        {"sl_basis", "E_ij (i != j, row-major) then H_k = E_kk - E_k+1,k+1; sl(2): E, F, H"},
        {"coadjoint", "<Ad*_g xi, y> = <xi, Ad_g^-1 y>"},
        {"ambient_index", "matrix entries (i, j) in row-major order"},
        {"rationals", "strings p/q"},
    };
    j_["config"] = std::move(config);
    j_["checks"] = Json::array();
  }

  Json& operator[](const std::string& key) { return j_[key]; }

  void check(const std::string& name, Json expected, Json got, bool pass) {
    j_["checks"].push_back({{"name", name}, {"expected", std::move(expected)}, {"got", std::move(got)}, {"pass", pass}});
    if (!pass)
      failed_.push_back(name);
  }

  bool pass() const { return failed_.empty(); }

  Json finish() {
    j_["pass"] = pass();
    return j_;
  }

  void summarize(std::ostream& err, const std::string& command) const {
    const std::size_t total = j_["checks"].size();
    err << command << ": " << (pass() ? "PASS" : "FAIL") << " (" << total - failed_.size() << "/" << total
        << " checks)\n";
    for (const auto& f : failed_)
      err << "  failed: " << f << "\n";
  }

private:
  Json j_;
  std::vector<std::string> failed_;
};

Bivector load_r(const Options& o, const std::optional<std::string>& fallback = std::nullopt) {
  if (!o.builtin.empty() && !o.file.empty())
    throw ParseError("--builtin and --file are mutually exclusive");
  if (!o.builtin.empty())
    return builtin_bivector(o.builtin);
  if (!o.file.empty())
    return load_bivector(o.file);
  if (fallback)
    return builtin_bivector(*fallback);
  throw ParseError("one of --builtin or --file is required");
}

std::string default_r(std::size_t n) { return n == 2 ? "sl2-jordanian" : "jordanian-" + std::to_string(n); }

void require_size(const Bivector& r, std::size_t n) {
  if (!r.parent()->realized() || r.parent()->matrix_size() != n)
    throw DimensionMismatch("the r-matrix does not live on sl(" + std::to_string(n) + ")");
}

std::string coset_name(const GroupElement& g) {
  const bool id = coset_classify(g) == CosetLabel::Identity;
  if (g.size() == 2)
    return id ? "B" : "BsB";
  return id ? "P" : "PsP";
}

// The standard Jordanian functional −n Σ E*_{i,i+1}, when r is carried by the parabolic.
std::optional<DualVector> standard_functional(const Bivector& r) {
  const AlgebraPtr& a = r.parent();
  if (!a->realized())
    return std::nullopt;
  const std::size_t n = a->matrix_size();
  try {
    if (!(carrier(r) == jordanian_parabolic(a)))
      return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  QMatrix f(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    f(i, i + 1) = -static_cast<long>(n);
  return functional_from_matrix(*a, f);
}

int verify_r(const Options& o, Report& rep) {
  const Bivector r = load_r(o);
  const LieAlgebra& a = *r.parent();
  rep["r"] = bivector_to_json(r);

  const ThreeTensor cybe = cybe_defect(r);
  rep["cybe_defect_nnz"] = cybe.nnz();
  rep.check("cybe_defect_zero", 0, cybe.nnz(), cybe.is_zero());

  const Subspace p = carrier(r);
  const SubalgebraCheck sub = is_subalgebra(a, p);
  rep["carrier_dim"] = p.dim();
  rep.check("carrier_is_subalgebra", true, sub.ok, sub.ok);

  Json beta = nullptr;
  try {
    const BetaForm b = beta_form(r);
    const Json defect = b.cocycle_defect ? to_json(*b.cocycle_defect) : Json();
    beta = {{"matrix", to_json(b.form.matrix)}, {"cocycle_defect", defect}};
    const bool zero = b.cocycle_defect && sgn(*b.cocycle_defect) == 0;
    rep.check("beta_cocycle_defect_zero", "0", defect, zero);
  } catch (const DegenerateOnCarrier& e) {
    beta = {{"degenerate", e.what()}};
  }
  rep["beta_form"] = std::move(beta);

  rep["frobenius_scalar"] = nullptr;
  if (const auto xi = standard_functional(r)) {
    rep["frobenius_functional"] = to_json(a, xi->values());
    try {
      rep["frobenius_scalar"] = to_json(calibrate_frobenius(r, *xi));
    } catch (const Error& e) {
      rep["frobenius_error"] = e.what();
    }
  }
  return 0;
}

int jordanian(const Options& o, Report& rep) {
  if (o.n < 2 || o.n > 9)
    throw ParseError("--n must be between 2 and 9");
  const JordanianR j = jordanian_r(o.n);
  const LieAlgebra& a = *j.r.parent();
  rep["n"] = o.n;
  rep["r"] = bivector_to_json(j.r);
  rep["xi"] = to_json(a, j.xi.values());
  const std::size_t nnz = cybe_defect(j.r).nnz();
  rep["cybe_defect_nnz"] = nnz;
  rep.check("cybe_defect_zero", 0, nnz, nnz == 0);
  const Subspace p = carrier(j.r);
  rep["carrier_dim"] = p.dim();
  rep.check("carrier_dim", o.n * o.n - o.n, p.dim(), p.dim() == o.n * o.n - o.n);
  rep.check("carrier_is_parabolic", true, p == j.parabolic, p == j.parabolic);
  const Rational c = calibrate_frobenius(j.r, j.xi);
  rep.check("xi_calibrated", "1", to_json(c), c == 1);
  // The closed-form comparison is informational only.
  rep["cross_check"] = {{"proportional", j.cross_check.proportional},
                        {"scalar", j.cross_check.scalar ? to_json(*j.cross_check.scalar) : Json()},
                        {"closed_form", bivector_to_json(j.cross_check.closed_form)["entries"]}};
  return 0;
}

int leaf(const Options& o, Report& rep) {
  if (o.point.empty())
    throw ParseError("--point is required");
  const GroupElement g = parse_point(o.point);
  if (g.size() != o.n)
    throw DimensionMismatch("--point is not " + std::to_string(o.n) + "x" + std::to_string(o.n));
  const Bivector r = load_r(o, default_r(o.n));
  require_size(r, o.n);

  const std::size_t rank = leaf_rank(r, g);
  const std::size_t tangency = tangency_defect(r, g);
  rep["point"] = to_json(g);
  rep["coset"] = coset_name(g);
  rep["rank"] = rank;
  rep["tangency_defect"] = tangency;
  rep.check("rank_even", true, rank % 2 == 0, rank % 2 == 0);
  rep.check("tangent_to_double_coset", 0, tangency, tangency == 0);
  if (o.n == 2) {
    const LeafId id = sl2_leaf_id(g);
    rep["leaf"] = id.to_string();
    if (id.kind == LeafId::Kind::Ratio)
      rep["leaf_ratio"] = {to_json(id.lambda), to_json(id.mu)};
    const bool zpoint = id.kind == LeafId::Kind::ZPoint;
    rep.check("rank_zero_iff_zpoint", zpoint ? 0 : 2, rank, (rank == 0) == zpoint);
  }
  return 0;
}

int sample_ranks(const Options& o, Report& rep) {
  const Bivector r = load_r(o, default_r(o.n));
  require_size(r, o.n);
  struct Row {
    std::size_t rank = 0;
    bool identity = false;
    std::size_t tangency = 0;
    bool law = true;
  };
  const auto rows = parallel_map(o.samples, thread_budget(), [&](std::size_t i) {
    const GroupElement g = Sampler(sample_seed(o.seed, i)).group(o.n);
    Row row;
    row.rank = leaf_rank(r, g);
    row.identity = coset_classify(g) == CosetLabel::Identity;
    row.tangency = tangency_defect(r, g);
    if (o.n == 2)
      row.law = (row.rank == 0) == (sl2_leaf_id(g).kind == LeafId::Kind::ZPoint);
    return row;
  });
  std::map<std::size_t, std::size_t> hist;
  std::size_t identity = 0, odd = 0, not_tangent = 0, law_failures = 0;
  std::vector<std::size_t> failures;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    ++hist[row.rank];
    identity += row.identity;
    const bool bad_odd = row.rank % 2 != 0;
    odd += bad_odd;
    not_tangent += row.tangency != 0;
    law_failures += !row.law;
    if ((bad_odd || row.tangency != 0 || !row.law) && failures.size() < 10)
      failures.push_back(i);
  }
  Json h = Json::object();
  for (const auto& [rank, count] : hist)
    h[std::to_string(rank)] = count;
  rep["n"] = o.n;
  rep["samples"] = o.samples;
  rep["rank_histogram"] = std::move(h);
  rep["coset_counts"] = {{o.n == 2 ? "B" : "P", identity}, {o.n == 2 ? "BsB" : "PsP", o.samples - identity}};
  rep["failures"] = failures;
  rep.check("ranks_even", 0, odd, odd == 0);
  rep.check("tangent_to_double_cosets", 0, not_tangent, not_tangent == 0);
  if (o.n == 2)
    rep.check("rank_zero_iff_zpoint", 0, law_failures, law_failures == 0);
  return 0;
}

int flow(const Options& o, Report& rep) {
  const Bivector r = load_r(o, default_r(o.n));
  require_size(r, o.n);
  const GroupElement g0 = o.point.empty() ? weyl_representative(o.n) : parse_point(o.point);
  if (g0.size() != o.n)
    throw DimensionMismatch("--point does not match --n");
  const Polynomial h = Polynomial::parse(o.hamiltonian, o.n);
  if (!(o.float_tol > 0))
    throw ParseError("--float-tol must be positive");

  FlowOptions opt;
  opt.dt = o.dt;
  opt.steps = o.steps;
  opt.renormalize = !o.no_renormalize;
  opt.record_every = o.record_every;
  const FlowReport f = hamiltonian_flow(r, h, to_double(g0.matrix()), opt);

  rep["hamiltonian"] = h.to_string();
  rep["start"] = to_json(g0);
  rep["final"] = f.final_point.flat();
  rep["renormalized"] = f.renormalized;
  rep["det_drift"] = f.max_det_drift;
  rep["classifier_drift"] = f.classifier_drift ? Json(*f.classifier_drift) : Json();
  rep["energy_drift"] = f.energy_drift;
  rep.check("det_drift", "< float_tol", f.max_det_drift, f.max_det_drift < o.float_tol);
  if (f.classifier_drift)
    rep.check("classifier_drift", "< float_tol", *f.classifier_drift, *f.classifier_drift < o.float_tol);
  rep.check("energy_drift", "< float_tol", f.energy_drift, f.energy_drift < o.float_tol);

  if (!o.trajectory.empty()) {
    std::ofstream t(o.trajectory);
    if (!t)
      throw ParseError("cannot write " + o.trajectory);
    write_trajectory_jsonl(t, f);
    rep["trajectory_records"] = f.trajectory.size();
  }
  return 0;
}

int reduce(const Options& o, Report& rep) {
  if (o.n != 2)
    throw ParseError("reduce is specialized to SL(2); use --n 2");
  const Bivector r = builtin_bivector("sl2-jordanian");
  DualVector minus_e(3);
  minus_e[0] = -1;
  const CocycleData cd = CocycleData::calibrated(r, minus_e);
  const GroupElement t = o.t == "s" ? weyl_representative(2) : GroupElement::identity(2);
  const GroupElement t_inv = t.inverse();

  struct Row {
    Rational residual = 0;
    std::vector<std::string> failed;
  };
  const auto rows = parallel_map(o.samples, thread_budget(), [&](std::size_t i) {
    Sampler smp(sample_seed(o.seed, i));
    const GroupElement p1 = smp.parabolic(2);
    const GroupElement p2 = smp.parabolic(2);
    // q ∈ P ∩ tPt⁻¹: all of B for t = e, the torus for t = s.
    GroupElement q = smp.parabolic(2);
    if (o.t == "s") {
      const Rational a = smp.nonzero_rational();
      q = GroupElement::from_rows({{a, 0}, {0, Rational(1 / a)}});
    }
    const GroupElement q_t = t_inv * q * t;

    Row row;
    auto note = [&](const std::string& name, const Rational& v) {
      if (sgn(v) != 0) {
        row.failed.push_back(name);
        row.residual = std::max(row.residual, abs_value(v));
      }
    };
    const GroupElement nu = nu_t(p1, p2, t);
    note("nu_fiber", nu == nu_t(q * p1, q_t * p2, t) ? 0 : 1);
    note("coset_label", coset_classify(nu) == coset_classify(t) ? 0 : 1);

    const DualCoset j = moment_J_t(cd, p1, p2, t);
    const DualCoset shifted = moment_J_t(cd, q * p1, q_t * p2, t);
    const DualVector rhs = coadjoint(cd.algebra(), q, j.representative()) +
                           moment_J_t(cd, q, q_t, t).representative();
    const DualCoset expected(rhs, j.quotient());
    const auto diff = expected.quotient().reduce((shifted.representative() - expected.representative()).values());
    note("J_equivariance", max_abs(std::span<const Rational>(diff)));

    if (o.t == "s") {
      note("reduction_identity", reduction_residual(p1, p2));
      note("J_closed_form", j.representative()[2] - sl2_I_s(p1, p2).calibrated);
    }
    return row;
  });

  Rational worst = 0;
  Json failures = Json::array();
  std::size_t failure_count = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    worst = std::max(worst, rows[i].residual);
    if (!rows[i].failed.empty()) {
      ++failure_count;
      if (failures.size() < 10)
        failures.push_back({{"sample", i}, {"checks", rows[i].failed}});
    }
  }
  rep["t"] = o.t;
  rep["samples"] = o.samples;
  rep["max_residual"] = to_json(worst);
  rep["failures"] = std::move(failures);
  rep.check("all_residuals_zero", 0, failure_count, failure_count == 0);
  return 0;
}

int cocycle(const Options& o, Report& rep) {
  const Bivector r = o.n == 2 ? builtin_bivector("sl2-jordanian") : jordanian_r(o.n).r;
  DualVector xi = o.n == 2 ? DualVector(3) : jordanian_r(o.n).xi;
  if (o.n == 2)
    xi[0] = -1;
  const CocycleData cd = CocycleData::calibrated(r, xi);
  const LieAlgebra& a = cd.algebra();
  rep["n"] = o.n;
  rep["xi_calibrated"] = to_json(a, cd.xi.values());
  rep["calibration"] = to_json(cd.scale);

  if (!o.check.empty()) {
    if (o.check.size() != 2)
      throw ParseError("--check takes two points");
    const GroupElement g = parse_point(o.check[0]);
    const GroupElement h = parse_point(o.check[1]);
    rep["B(g)"] = to_json(a, cocycle_B(cd, g).values());
    rep["B(h)"] = to_json(a, cocycle_B(cd, h).values());
    rep["B(gh)"] = to_json(a, cocycle_B(cd, g * h).values());
    const Rational d = cocycle_defect(cd, g, h);
    rep["defect"] = to_json(d);
    rep.check("cocycle_defect_zero", "0", to_json(d), sgn(d) == 0);
    return 0;
  }

  const auto rows = parallel_map(o.samples, thread_budget(), [&](std::size_t i) {
    Sampler smp(sample_seed(o.seed, i));
    const GroupElement g = smp.parabolic(o.n);
    const GroupElement h = smp.parabolic(o.n);
    DualVector zeta(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k)
      zeta[k] = smp.rational();
    const auto lhs = twisted_action(cd, g, twisted_action(cd, h, zeta));
    const auto rhs = twisted_action(cd, g * h, zeta);
    const auto diff = (lhs - rhs).values();
    return std::make_pair(cocycle_defect(cd, g, h), max_abs(std::span<const Rational>(diff)));
  });
  Rational worst_cocycle = 0, worst_action = 0;
  for (const auto& [c, act] : rows) {
    worst_cocycle = std::max(worst_cocycle, c);
    worst_action = std::max(worst_action, act);
  }
  Rational worst_derivative = 0;
  for (std::size_t k = 0; k < cd.p.dim(); ++k)
    worst_derivative = std::max(worst_derivative, cocycle_derivative_defect(cd, cd.p.basis_vector(k)));

  rep["samples"] = o.samples;
  rep.check("cocycle_defect_zero", "0", to_json(worst_cocycle), sgn(worst_cocycle) == 0);
  rep.check("twisted_action_is_action", "0", to_json(worst_action), sgn(worst_action) == 0);
  rep.check("derivative_is_r_check_inverse", "0", to_json(worst_derivative), sgn(worst_derivative) == 0);
  return 0;
}

int paper_suite(const Options& o, Report& rep) {
  SuiteConfig cfg;
  cfg.seed = o.seed;
  Json criteria = Json::array();
  for (const auto& c : run_suite(cfg)) {
    criteria.push_back(to_json(c));
    rep.check(std::to_string(c.id) + ":" + c.name, true, c.pass, c.pass);
  }
  rep["criteria"] = std::move(criteria);
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Triangular Poisson-Lie structures on SL(n): exact checks and experiments", "ybfk"};
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write the JSON report here instead of stdout");
    sub->add_option("--seed", o.seed, "Base seed for sampling")->capture_default_str();
  };
  auto r_source = [&](CLI::App* sub) {
    sub->add_option("--builtin", o.builtin, "sl2-jordanian, sl2-nonsolution or jordanian-<n>");
    sub->add_option("--file", o.file, "r-matrix JSON file");
  };
  auto size = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Matrix size")->capture_default_str()->check(CLI::Range(2, 9));
  };
  auto samples = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "Number of samples")->capture_default_str();
  };

  using Handler = std::function<int(const Options&, Report&)>;
  std::vector<std::pair<CLI::App*, Handler>> subs;

  auto* v = app.add_subcommand("verify-r", "CYBE, carrier and Frobenius report for an r-matrix");
  common(v);
  r_source(v);
  subs.emplace_back(v, verify_r);

  auto* j = app.add_subcommand("jordanian", "Construct and certify the Jordanian r-matrix on sl(n)");
  common(j);
  size(j);
  subs.emplace_back(j, jordanian);

  auto* l = app.add_subcommand("leaf", "Leaf rank, coset and leaf label at a point");
  common(l);
  r_source(l);
  size(l);
  l->add_option("--point", o.point, "Rows separated by ';', entries by ','");
  subs.emplace_back(l, leaf);

  auto* s = app.add_subcommand("sample-ranks", "Leaf-rank statistics over random points");
  common(s);
  r_source(s);
  size(s);
  samples(s);
  subs.emplace_back(s, sample_ranks);

  auto* f = app.add_subcommand("flow", "RK4 Hamiltonian flow with drift report");
  common(f);
  r_source(f);
  size(f);
  f->add_option("--point", o.point, "Start point (default: the Weyl representative s)");
  f->add_option("--hamiltonian", o.hamiltonian, "Polynomial in T11 ... Tnn")->capture_default_str();
  f->add_option("--dt", o.dt, "Step size")->capture_default_str();
  f->add_option("--steps", o.steps, "Number of steps")->capture_default_str();
  f->add_option("--float-tol", o.float_tol, "Tolerance for the drift checks")->capture_default_str();
  f->add_option("--trajectory", o.trajectory, "Write the trajectory as JSON lines");
  f->add_option("--record-every", o.record_every, "Trajectory sampling stride (0: endpoints)");
  f->add_flag("--no-renormalize", o.no_renormalize, "Skip the det(g)^{-1/n} rescaling");
  subs.emplace_back(f, flow);

  auto* red = app.add_subcommand("reduce", "Moment map, nu_t fibers and the SL(2) reduction identity");
  common(red);
  samples(red);
  size(red);
  red->add_option("--t", o.t, "Double-coset representative")->check(CLI::IsMember({"e", "s"}))->capture_default_str();
  subs.emplace_back(red, reduce);

  auto* c = app.add_subcommand("cocycle", "Cocycle identities on the Jordanian parabolic");
  common(c);
  samples(c);
  size(c);
  c->add_option("--check", o.check, "Two points g h for a single defect report")->expected(2);
  subs.emplace_back(c, cocycle);

  auto* ps = app.add_subcommand("paper-suite", "Run every acceptance criterion");
  common(ps);
  subs.emplace_back(ps, paper_suite);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    if (e.get_exit_code() != 0)
      err << app.help();
    return kBadInput;
  }

  for (const auto& [sub, handler] : subs) {
    if (!sub->parsed())
      continue;
    const std::string name = sub->get_name();
    Report rep(name, args, o);
    try {
      handler(o, rep);
    } catch (const std::exception& e) {
      if (is_input_error(e)) {
        err << name << ": invalid input: " << e.what() << "\n";
        return kBadInput;
      }
      rep["error"] = e.what();
      rep.check("completed", true, false, false);
    }
    const std::string text = rep.finish().dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) {
        err << name << ": cannot write " << o.out << "\n";
        return kBadInput;
      }
      file << text;
    }
    rep.summarize(err, name);
    return rep.pass() ? kPass : kCheckFailed;
  }
  return kBadInput;
}

} // namespace ybfk::cli
