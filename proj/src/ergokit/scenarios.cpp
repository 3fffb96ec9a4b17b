#include "ergokit/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "ergokit/charging.hpp"
#include "ergokit/decay.hpp"
#include "ergokit/fock.hpp"
#include "ergokit/gaussian_dynamics.hpp"
#include "ergokit/spectral.hpp"
#include "ergokit/tls_dynamics.hpp"
#include "ergokit/verify.hpp"
#include "ergokit/xstate.hpp"

namespace ergokit {

namespace {

using nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;

// Strict parameter access: every key must be consumed, every value must
// have the expected type, and anything left over is a config error.
class Params {
public:
  explicit Params(const ordered_json& object) : object_(object) {
    if (!object_.is_object()) throw BadConfig("params must be a JSON object");
  }

  double number(const std::string& key, double fallback) {
    consumed_.insert(key);
    if (!object_.contains(key)) {
      resolved_[key] = fallback;
      return fallback;
    }
    const ordered_json& v = object_.at(key);
    if (!v.is_number())
      throw BadConfig("parameter '" + key + "' must be a number");
    const double out = v.get<double>();
    resolved_[key] = out;
    return out;
  }

  int integer(const std::string& key, int fallback) {
    consumed_.insert(key);
    if (!object_.contains(key)) {
      resolved_[key] = fallback;
      return fallback;
    }
    const ordered_json& v = object_.at(key);
    if (!v.is_number_integer())
      throw BadConfig("parameter '" + key + "' must be an integer");
    const int out = v.get<int>();
    resolved_[key] = out;
    return out;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    consumed_.insert(key);
    if (!object_.contains(key)) {
      resolved_[key] = fallback;
      return fallback;
    }
    const ordered_json& v = object_.at(key);
    if (!v.is_string())
      throw BadConfig("parameter '" + key + "' must be a string");
    const std::string out = v.get<std::string>();
    resolved_[key] = out;
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : object_.items())
      if (!consumed_.contains(key))
        throw BadConfig("unknown parameter '" + key + "'");
  }

  ordered_json resolved() const { return resolved_; }

private:
  const ordered_json& object_;
  ordered_json resolved_ = ordered_json::object();
  std::set<std::string> consumed_;
};

// Cross-platform deterministic uniform variates (the raw mt19937_64 stream
// is pinned by the standard; distribution adapters are not).
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double uniform() { return double(gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

TlsState random_tls(Rng& rng, double omega) {
  const double p = rng.uniform();
  const double cap = std::sqrt(std::max(0.0, 4.0 * p * (1.0 - p)));
  return {p, cap * rng.uniform(), rng.uniform(0.0, 4.0 * kPi), omega};
}

int positive(int v, const char* what) {
  if (v < 1) throw BadConfig(std::string(what) + " must be >= 1");
  return v;
}

Dataset tls_family_scenario(Params& p) {
  const double pbar = p.number("pbar", 0.8);
  const double omega = p.number("omega", 1.0);
  const double theta = p.number("theta", 0.0);
  const int points = positive(p.integer("points", 201), "points");
  p.finish();

  const IsoFamilyTls family(pbar, omega);
  const std::vector<double> ps =
      uniform_grid(family.floor_population(), pbar, std::max(2, points));
  Dataset d("tls-family", p.resolved());
  std::vector<double> c, c2, r, rinc, rcoh, energy, entropy, ratio, q;
  for (double pop : ps) {
    const TlsState s = family_member(family, pop, theta);
    const ErgotropyBreakdown b = tls_breakdown(s);
    c.push_back(s.coherence);
    c2.push_back(s.coherence * s.coherence);
    r.push_back(b.total);
    rinc.push_back(b.component("incoherent"));
    rcoh.push_back(b.component("coherent"));
    energy.push_back(internal_energy(s));
    entropy.push_back(entropy_on_family(family, pop));
    ratio.push_back(charge_energy_ratio(family, pop));
    q.push_back(heat(pbar, pop, omega));
  }
  d.add_column("p", ps);
  d.add_column("C", c);
  d.add_column("C2", c2);
  d.add_column("R", r);
  d.add_column("R_inc", rinc);
  d.add_column("R_coh", rcoh);
  d.add_column("energy", energy);
  d.add_column("S_vN", entropy);
  d.add_column("charge_energy_ratio", ratio);
  d.add_column("heat_from_reference", q);
  d.note("isoergotropic family sweep; charge stays at omega (2 pbar - 1)");
  return d;
}

Dataset tls_channel_scenario(Params& p) {
  const double pbar = p.number("pbar", 0.7);
  const double omega = p.number("omega", 1.0);
  const IsoFamilyTls family(pbar, omega);
  const double p_from = p.number("p_from", pbar);
  const double theta_from = p.number("theta_from", 0.0);
  const double p_to = p.number("p_to", family.floor_population());
  const double theta_to = p.number("theta_to", 0.0);
  const int steps = positive(p.integer("steps", 50), "steps");
  p.finish();

  Dataset d("tls-channel", p.resolved());
  std::vector<double> step, ps, thetas, c, r, rinc, rcoh, compl_res, swap_dist,
      qmax, pur;
  TlsState state = family_member(family, p_from, theta_from);
  for (int k = 0; k <= steps; ++k) {
    const double f = double(k) / steps;
    const double pk = p_from + f * (p_to - p_from);
    const double tk = theta_from + f * (theta_to - theta_from);
    const TlsState target = family_member(family, pk, tk);
    const KrausSet kraus = gadc_kraus(family, pk, tk);
    const DensityOperator via_kraus = apply_channel(kraus, state.to_density());
    const TlsState via_swap = swap_realization(state, target);
    const ErgotropyBreakdown b = tls_breakdown(target);
    step.push_back(k);
    ps.push_back(pk);
    thetas.push_back(tk);
    c.push_back(target.coherence);
    r.push_back(b.total);
    rinc.push_back(b.component("incoherent"));
    rcoh.push_back(b.component("coherent"));
    compl_res.push_back(kraus.completeness_residual());
    swap_dist.push_back(trace_distance(via_kraus, via_swap.to_density()));
    qmax.push_back(pbar < 1.0 ? general_measurement_qmax(family, pk, tk).q_max
                              : 1.0);
    pur.push_back(purity(target.to_density()));
    state = TlsState::from_density(via_kraus, omega);
  }
  d.add_column("step", step);
  d.add_column("p", ps);
  d.add_column("theta", thetas);
  d.add_column("C", c);
  d.add_column("R", r);
  d.add_column("R_inc", rinc);
  d.add_column("R_coh", rcoh);
  d.add_column("kraus_completeness", compl_res);
  d.add_column("swap_distance", swap_dist);
  d.add_column("q_max", qmax);
  d.add_column("purity", pur);
  d.note("channel walk along the family; each row replaces the state by the"
         " target via the four-operator Kraus set");
  return d;
}

Dataset tls_dynamics_scenario(Params& p) {
  const double pbar = p.number("pbar", 0.8);
  const double omega = p.number("omega", 1.0);
  const double eta = p.number("eta", 1.0);
  const double theta = p.number("theta", 0.0);
  const double phi = p.number("phi", 0.0);
  const int samples = positive(p.integer("samples", 200), "samples");
  const double periods = p.number("periods", 1.0);
  p.finish();

  const TwoTlsConfig cfg(omega, eta, IsoFamilyTls(pbar, omega), theta, phi);
  const std::vector<double> times =
      uniform_grid(0.0, periods * kPi / eta, std::max(2, samples));
  const std::vector<TwoTlsMetrics> traj = trajectory_metrics(cfg, times);
  Dataset d("tls-dynamics", p.resolved());
  const auto col = [&](auto field) {
    std::vector<double> v;
    v.reserve(traj.size());
    for (const TwoTlsMetrics& m : traj) v.push_back(field(m));
    return v;
  };
  d.add_column("t", col([](const TwoTlsMetrics& m) { return m.t; }));
  d.add_column("p_B", col([](const TwoTlsMetrics& m) { return m.p_B; }));
  d.add_column("R_B", col([](const TwoTlsMetrics& m) { return m.R_B; }));
  d.add_column("R_B_inc", col([](const TwoTlsMetrics& m) { return m.R_B_inc; }));
  d.add_column("R_B_coh", col([](const TwoTlsMetrics& m) { return m.R_B_coh; }));
  d.add_column("R_A", col([](const TwoTlsMetrics& m) { return m.R_A; }));
  d.add_column("R_A_inc", col([](const TwoTlsMetrics& m) { return m.R_A_inc; }));
  d.add_column("R_A_coh", col([](const TwoTlsMetrics& m) { return m.R_A_coh; }));
  d.add_column("R_total", col([](const TwoTlsMetrics& m) { return m.R_total; }));
  d.add_column("S_B", col([](const TwoTlsMetrics& m) { return m.S_B; }));
  d.add_column("S_A", col([](const TwoTlsMetrics& m) { return m.S_A; }));
  d.add_column("S_BA", col([](const TwoTlsMetrics& m) { return m.S_BA; }));
  d.add_column("I",
               col([](const TwoTlsMetrics& m) { return m.mutual_information; }));
  return d;
}

Dataset x_state_scenario(Params& p) {
  const double omega = p.number("omega", 1.0);
  const int points = positive(p.integer("points", 101), "points");
  p.finish();

  Dataset d("x-state", p.resolved());
  const std::vector<double> qs = uniform_grid(0.0, 1.0, std::max(2, points));
  std::vector<double> r, rinc, rcoh, conc, r1, r2, deficit, p1, p2, energy, svn,
      map_dist, heat_aux, heat_cell1;
  const HamiltonianSpec h = x_hamiltonian(omega);
  for (double q : qs) {
    const XErgotropy e = x_ergotropy(q, omega);
    const LocalErgotropyReport rep = x_local_report(q, omega);
    const DensityOperator rho = x_state(q);
    const XIsoThermo thermo = x_iso_map_thermo(q, omega);
    r.push_back(e.total);
    rinc.push_back(e.incoherent);
    rcoh.push_back(e.coherent);
    conc.push_back(x_concurrence(q));
    r1.push_back(rep.R_1);
    r2.push_back(rep.R_2);
    deficit.push_back(rep.deficit);
    p1.push_back(rep.p_1);
    p2.push_back(rep.p_2);
    energy.push_back(std::real((rho.matrix() * h.to_matrix()).trace()));
    svn.push_back(von_neumann_entropy(rho));
    map_dist.push_back(trace_distance(x_iso_map(q, omega), x_state(1.0 - q)));
    heat_aux.push_back(thermo.Q);
    heat_cell1.push_back(thermo.Q_1);
  }
  d.add_column("q", qs);
  d.add_column("R", r);
  d.add_column("R_inc", rinc);
  d.add_column("R_coh", rcoh);
  d.add_column("concurrence", conc);
  d.add_column("R_1", r1);
  d.add_column("R_2", r2);
  d.add_column("deficit", deficit);
  d.add_column("p_1", p1);
  d.add_column("p_2", p2);
  d.add_column("energy", energy);
  d.add_column("S_vN", svn);
  d.add_column("iso_map_distance", map_dist);
  d.add_column("Q", heat_aux);
  d.add_column("Q_1", heat_cell1);
  d.note("sudden-death point q* = " + format_17g(x_sudden_death_point()));
  return d;
}

Dataset gaussian_family_scenario(Params& p) {
  const double mubar_sq = p.number("mubar_sq", 5.0);
  const double occupation = p.number("occupation", 0.5);
  const double omega = p.number("omega", 1.0);
  const double phi = p.number("phi", kPi);
  const double theta = p.number("theta", 0.0);
  const int points = positive(p.integer("points", 201), "points");
  p.finish();

  const IsoFamilyGaussian family(mubar_sq, omega);
  const double xi_max = family_boundary_xi(family, occupation);
  Dataset d("gaussian-family", p.resolved());
  const std::vector<double> xis = uniform_grid(0.0, xi_max, std::max(2, points));
  std::vector<double> mu_abs, r, rd, rs, energy, s2, ratio, budget;
  for (double xi : xis) {
    const GaussianState s =
        gaussian_family_member(family, xi, phi, occupation, theta);
    const ErgotropyBreakdown b = gaussian_breakdown(s);
    mu_abs.push_back(std::abs(s.mu));
    r.push_back(b.total);
    rd.push_back(b.component("displacement"));
    rs.push_back(b.component("squeezing"));
    energy.push_back(gaussian_internal_energy(s));
    s2.push_back(gaussian_renyi2(s));
    ratio.push_back(gaussian_charge_energy_ratio(family, occupation));
    budget.push_back(family_budget(family, xi, occupation));
  }
  d.add_column("xi", xis);
  d.add_column("mu_abs", mu_abs);
  d.add_column("R", r);
  d.add_column("R_d", rd);
  d.add_column("R_s", rs);
  d.add_column("energy", energy);
  d.add_column("S2", s2);
  d.add_column("charge_energy_ratio", ratio);
  d.add_column("f", budget);
  d.note("boundary |xi| (f = 0): " + format_17g(xi_max));
  const double equal_split =
      0.5 * std::acosh(1.0 + 0.5 * mubar_sq / (occupation + 0.5));
  d.note("equal-split |xi| (R_d = R_s): " + format_17g(equal_split));
  return d;
}

Dataset gaussian_dynamics_scenario(Params& p) {
  const double mubar_sq = p.number("mubar_sq", 5.0);
  const double n_b0 = p.number("N_B0", 0.8);
  const double n_a0 = p.number("N_A0", 0.0);
  const double xi = p.number("xi", 1.0);
  const double phi = p.number("phi", kPi);
  const double theta_b = p.number("theta_B", 0.0);
  const double omega = p.number("omega", 1.0);
  const double eta = p.number("eta", 1.0);
  const int samples = positive(p.integer("samples", 200), "samples");
  const double periods = p.number("periods", 1.0);
  const std::string observable = p.text("observable", "trajectory");
  const int frames = positive(p.integer("frames", 3), "frames");
  const double extent = p.number("wigner_extent", 4.0);
  const int wigner_points = positive(p.integer("wigner_points", 41),
                                     "wigner_points");
  p.finish();

  const TwoModeConfig cfg(omega, eta, IsoFamilyGaussian(mubar_sq, omega), xi,
                          phi, n_b0, n_a0, theta_b);
  if (observable == "wigner") {
    // Phase-space snapshots of the battery mode at t = k pi / (4 eta);
    // the three defaults land on the start, equal-split and swap instants.
    Dataset d("gaussian-dynamics", p.resolved());
    std::vector<double> t_col, a_re, a_im, w;
    for (int k = 0; k < frames; ++k) {
      const double t = 0.25 * kPi * k / eta;
      const TwoModeSample sample = mode_trajectory(cfg, {t}).front();
      for (int i = 0; i < wigner_points; ++i)
        for (int j = 0; j < wigner_points; ++j) {
          const double re = -extent + 2.0 * extent * i / (wigner_points - 1);
          const double im = -extent + 2.0 * extent * j / (wigner_points - 1);
          t_col.push_back(t);
          a_re.push_back(re);
          a_im.push_back(im);
          w.push_back(wigner(sample.battery, cplx(re, im)));
        }
    }
    d.add_column("t", t_col);
    d.add_column("alpha_re", a_re);
    d.add_column("alpha_im", a_im);
    d.add_column("W", w);
    return d;
  }
  if (observable != "trajectory")
    throw BadConfig("gaussian-dynamics observable must be trajectory or wigner");
  const std::vector<double> times =
      uniform_grid(0.0, periods * kPi / eta, std::max(2, samples));
  const std::vector<TwoModeSample> traj = mode_trajectory(cfg, times);
  Dataset d("gaussian-dynamics", p.resolved());
  const auto col = [&](auto field) {
    std::vector<double> v;
    v.reserve(traj.size());
    for (const TwoModeSample& s : traj) v.push_back(field(s));
    return v;
  };
  d.add_column("t", col([](const TwoModeSample& s) { return s.t; }));
  d.add_column("mu_B_re",
               col([](const TwoModeSample& s) { return s.battery.mu.real(); }));
  d.add_column("mu_B_im",
               col([](const TwoModeSample& s) { return s.battery.mu.imag(); }));
  d.add_column("xi_B",
               col([](const TwoModeSample& s) { return s.battery.xi_mag; }));
  d.add_column("N_B",
               col([](const TwoModeSample& s) { return s.battery.occupation; }));
  d.add_column("R_B", col([](const TwoModeSample& s) { return s.R_B; }));
  d.add_column("R_B_d", col([](const TwoModeSample& s) { return s.R_B_d; }));
  d.add_column("R_B_s", col([](const TwoModeSample& s) { return s.R_B_s; }));
  d.add_column("mu_A_re", col([](const TwoModeSample& s) {
                 return s.auxiliary.mu.real();
               }));
  d.add_column("mu_A_im", col([](const TwoModeSample& s) {
                 return s.auxiliary.mu.imag();
               }));
  d.add_column("xi_A",
               col([](const TwoModeSample& s) { return s.auxiliary.xi_mag; }));
  d.add_column("N_A", col([](const TwoModeSample& s) {
                 return s.auxiliary.occupation;
               }));
  d.add_column("R_A", col([](const TwoModeSample& s) { return s.R_A; }));
  d.add_column("R_A_d", col([](const TwoModeSample& s) { return s.R_A_d; }));
  d.add_column("R_A_s", col([](const TwoModeSample& s) { return s.R_A_s; }));
  d.add_column("S2_B", col([](const TwoModeSample& s) { return s.S2_B; }));
  d.add_column("S2_A", col([](const TwoModeSample& s) { return s.S2_A; }));
  d.add_column("S2_BA", col([](const TwoModeSample& s) { return s.S2_BA; }));
  d.add_column("I2", col([](const TwoModeSample& s) {
                 return s.mutual_information_2;
               }));
  return d;
}

Dataset decay_scenario(Params& p) {
  const std::string type = p.text("type", "tls");
  const std::string observable = p.text("observable", "trajectory");
  if (type != "tls" && type != "gaussian")
    throw BadConfig("decay type must be 'tls' or 'gaussian'");
  if (observable != "trajectory" && observable != "halflife")
    throw BadConfig("decay observable must be 'trajectory' or 'halflife'");
  const double gamma = p.number("gamma", 1.0);
  const double omega = p.number("omega", 1.0);
  const int samples = positive(p.integer("grid", 200), "grid");
  const double horizon = p.number("horizon", 5.0);
  const int jobs = positive(p.integer("jobs", 1), "jobs");

  if (type == "tls") {
    const double pbar = p.number("pbar", 0.8);
    const double nbar = p.number("nbar", 0.2);
    const int members = positive(
        p.integer("members", observable == "halflife" ? 11 : 5), "members");
    p.finish();
    const IsoFamilyTls family(pbar, omega);
    const BathSpec bath(gamma, nbar);
    const std::vector<double> grid = uniform_grid(
        family.floor_population(), pbar, std::max(2, members));
    const std::vector<double> times =
        uniform_grid(0.0, horizon / gamma, std::max(2, samples));
    const DecaySweep sweep = tls_decay_sweep(family, bath, grid, times, jobs);
    Dataset d("decay", p.resolved());
    if (observable == "halflife") {
      std::vector<double> t_half;
      for (const DecayMemberSeries& m : sweep.members)
        t_half.push_back(m.half_life);
      d.add_column("p", grid);
      d.add_column("T_half", t_half);
      return d;
    }
    d.add_column("t", times);
    for (size_t k = 0; k < sweep.members.size(); ++k) {
      const DecayMemberSeries& m = sweep.members[k];
      std::vector<double> total, inc, coh, pop, coherence;
      for (const DecayRecord& rec : m.series) {
        total.push_back(rec.charge.total);
        inc.push_back(rec.charge.component("incoherent"));
        coh.push_back(rec.charge.component("coherent"));
        pop.push_back(rec.p);
        coherence.push_back(rec.coherence);
      }
      const std::string tag = "_m" + std::to_string(k);
      d.add_column("R" + tag, total);
      d.add_column("R_inc" + tag, inc);
      d.add_column("R_coh" + tag, coh);
      d.add_column("p" + tag, pop);
      d.add_column("C" + tag, coherence);
      d.note("member " + std::to_string(k) + ": p = " + format_17g(m.label) +
             ", T_half = " + format_17g(m.half_life));
    }
    return d;
  }

  const double mubar_sq = p.number("mubar_sq", 5.0);
  const double occupation = p.number("occupation", 0.5);
  const double nbar = p.number("nbar", 0.3);
  const int members = positive(
      p.integer("members", observable == "halflife" ? 6 : 5), "members");
  p.finish();
  const IsoFamilyGaussian family(mubar_sq, omega);
  const BathSpec bath(gamma, nbar);
  const std::vector<double> grid = uniform_grid(
      0.0, family_boundary_xi(family, occupation), std::max(2, members));
  const std::vector<double> times =
      uniform_grid(0.0, horizon / gamma, std::max(2, samples));
  const DecaySweep sweep =
      gaussian_decay_sweep(family, occupation, bath, grid, times, jobs);
  Dataset d("decay", p.resolved());
  if (observable == "halflife") {
    std::vector<double> t_half;
    for (const DecayMemberSeries& m : sweep.members)
      t_half.push_back(m.half_life);
    d.add_column("xi", grid);
    d.add_column("T_half", t_half);
    return d;
  }
  d.add_column("t", times);
  for (size_t k = 0; k < sweep.members.size(); ++k) {
    const DecayMemberSeries& m = sweep.members[k];
    std::vector<double> total, disp, sq, mu_abs, xis, ns;
    for (const DecayRecord& rec : m.series) {
      total.push_back(rec.charge.total);
      disp.push_back(rec.charge.component("displacement"));
      sq.push_back(rec.charge.component("squeezing"));
      mu_abs.push_back(rec.mu_abs);
      xis.push_back(rec.xi_mag);
      ns.push_back(rec.occupation);
    }
    const std::string tag = "_m" + std::to_string(k);
    d.add_column("R" + tag, total);
    d.add_column("R_d" + tag, disp);
    d.add_column("R_s" + tag, sq);
    d.add_column("mu" + tag, mu_abs);
    d.add_column("xi" + tag, xis);
    d.add_column("N" + tag, ns);
    d.note("member " + std::to_string(k) + ": xi = " + format_17g(m.label) +
           ", T_half = " + format_17g(m.half_life));
  }
  return d;
}

Dataset charging_scenario(Params& p) {
  const double s0 = p.number("s0", 1.0);
  const double epsilon = p.number("epsilon", 1.0);
  const double omega = p.number("omega", 1.0);
  const std::string observable = p.text("observable", "summary");
  const int samples = positive(p.integer("samples", 200), "samples");
  p.finish();

  const ChargingConfig cfg(epsilon, s0, 0.0, omega);
  Dataset d("charging", p.resolved());
  if (observable == "summary") {
    const double alpha = solve_alpha_T();
    const ConeIntersection cone = cone_intersection(s0);
    const IsoFamilyTls family(cone.p_bar, omega);
    d.add_column("alpha_T", {alpha});
    d.add_column("alpha_T_over_pi", {alpha / kPi});
    d.add_column("T_opt", {alpha / epsilon});
    d.add_column("p_bar", {cone.p_bar});
    d.add_column("p", {cone.p});
    d.add_column("s_bar", {cone.s_bar});
    d.add_column("C", {iso_coherence(family, cone.p)});
    d.add_column("R_family", {family.charge()});
    d.add_column("max_avg_power", {avg_power(cfg, alpha / epsilon)});
    return d;
  }
  if (observable == "trajectory") {
    const std::vector<double> times =
        uniform_grid(0.0, 2.0 * kPi / epsilon, std::max(2, samples));
    const std::vector<BlochSample> traj = driven_trajectory(cfg, times);
    std::vector<double> t, sx, sy, sz, pop, charge;
    for (const BlochSample& b : traj) {
      t.push_back(b.t);
      sx.push_back(b.s[0]);
      sy.push_back(b.s[1]);
      sz.push_back(b.s[2]);
      pop.push_back(0.5 * (1.0 - b.s[2]));
      charge.push_back(0.5 * omega * s0 *
                       (1.0 - std::cos(epsilon * b.t)));
    }
    d.add_column("t", t);
    d.add_column("s_x", sx);
    d.add_column("s_y", sy);
    d.add_column("s_z", sz);
    d.add_column("p", pop);
    d.add_column("R", charge);
    return d;
  }
  if (observable != "power")
    throw BadConfig("charging observable must be summary, trajectory or power");
  std::vector<double> t_col, power;
  for (int k = 1; k <= samples; ++k) {
    const double T = 4.0 * kPi / epsilon * double(k) / samples;
    t_col.push_back(T);
    power.push_back(avg_power(cfg, T));
  }
  d.add_column("T", t_col);
  d.add_column("avg_power", power);
  return d;
}

}  // namespace

ScenarioRequest parse_request(const std::string& config_json) {
  ordered_json root;
  try {
    root = ordered_json::parse(config_json);
  } catch (const nlohmann::json::exception& e) {
    throw BadConfig(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) throw BadConfig("config must be a JSON object");
  ScenarioRequest req;
  for (const auto& [key, value] : root.items()) {
    if (key == "scenario") {
      if (!value.is_string()) throw BadConfig("scenario must be a string");
      req.scenario = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) throw BadConfig("format must be a string");
      req.format = value.get<std::string>();
    } else if (key == "params") {
      if (!value.is_object()) throw BadConfig("params must be an object");
      req.params = value;
    } else {
      throw BadConfig("unknown config key '" + key + "'");
    }
  }
  if (req.scenario.empty()) throw BadConfig("config is missing 'scenario'");
  if (req.format != "csv" && req.format != "json")
    throw BadConfig("format must be 'csv' or 'json'");
  return req;
}

std::vector<std::string> scenario_names() {
  return {"tls-family",      "tls-channel",      "tls-dynamics", "x-state",
          "gaussian-family", "gaussian-dynamics", "decay",        "charging"};
}

Dataset run_scenario(const ScenarioRequest& req) {
  Params p(req.params);
  if (req.scenario == "tls-family") return tls_family_scenario(p);
  if (req.scenario == "tls-channel") return tls_channel_scenario(p);
  if (req.scenario == "tls-dynamics") return tls_dynamics_scenario(p);
  if (req.scenario == "x-state") return x_state_scenario(p);
  if (req.scenario == "gaussian-family") return gaussian_family_scenario(p);
  if (req.scenario == "gaussian-dynamics") return gaussian_dynamics_scenario(p);
  if (req.scenario == "decay") return decay_scenario(p);
  if (req.scenario == "charging") return charging_scenario(p);
  throw BadConfig("unknown scenario '" + req.scenario + "'");
}

std::string run_scenario_bytes(const std::string& config_json) {
  const ScenarioRequest req = parse_request(config_json);
  const Dataset d = run_scenario(req);
  return req.format == "csv" ? d.to_csv() : d.to_json();
}

bool SelftestResult::all_passed() const {
  for (const Entry& e : entries)
    if (!e.passed) return false;
  return true;
}

std::string SelftestResult::report() const {
  std::string out;
  for (const Entry& e : entries) {
    out += e.passed ? "[pass] " : "[FAIL] ";
    out += e.name;
    out += ": ";
    out += e.detail;
    out += '\n';
  }
  out += all_passed() ? "selftest: all suites passed\n"
                      : "selftest: FAILURE\n";
  return out;
}

SelftestResult run_selftest(const std::string& mutate, uint64_t seed) {
  SelftestResult result;
  const auto add = [&](const std::string& name, double deviation, double tol,
                       const std::string& what) {
    const double skew = (mutate == name) ? 10.0 * tol : 0.0;
    const double worst = deviation + skew;
    result.entries.push_back(
        {name, worst <= tol,
         what + "; max deviation " + format_17g(worst) + " (tol " +
             format_17g(tol) + ")"});
  };

  {  // Closed-form TLS split against the spectral definition.
    Rng rng(seed);
    const HamiltonianSpec h = tls_hamiltonian(1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const TlsState s = random_tls(rng, 1.0);
      const double split = tls_breakdown(s).total;
      const double brute = ergotropy(s.to_density(), h);
      worst = std::max(worst, std::abs(split - brute));
    }
    add("tls-split", worst, 1e-10, "1000 random states, split vs spectral");
  }

  {  // Gaussian closed form against the truncated-Fock assembly.
    FockOracleConfig cfg;
    cfg.truncation = 64;
    double worst = 0.0;
    for (const double mu : {0.0, 1.0})
      for (const double xi : {0.0, 0.6})
        for (const double n : {0.0, 0.5}) {
          const GaussianState s(mu, xi, 0.0, n, 1.0);
          const double closed = gaussian_breakdown(s).total;
          // The adaptive cutoff may come back larger than requested; size
          // the Hamiltonian to the state that was actually assembled.
          const DensityOperator rho = fock_gaussian(mu, xi, n, cfg);
          const double brute =
              ergotropy(rho, harmonic_hamiltonian(rho.dim(), 1.0));
          const double scale = std::max(1.0, std::abs(closed));
          worst = std::max(worst, std::abs(closed - brute) / scale);
        }
    add("fock-gaussian", worst, 1e-4,
        "8-point grid, closed form vs Fock assembly from cutoff 64");
  }

  {  // TLS thermal decay against RK4.
    const IsoFamilyTls family(0.8, 1.0);
    const BathSpec bath(1.0, 0.2);
    const TlsState s0 = family_member(family, 0.65, 0.7);
    double worst = 0.0;
    for (const double t : {0.3, 1.0, 3.0}) {
      const TlsState closed = tls_decay(s0, bath, t);
      const DensityOperator rk4 = rk4_tls_thermal(s0, bath, t, 1e-3);
      worst = std::max(worst,
                       trace_distance(closed.to_density(), rk4));
    }
    add("tls-decay-rk4", worst, 1e-8, "closed form vs RK4 at dt = 1e-3");
  }

  {  // Gaussian thermal decay against the exact moment flow.
    const IsoFamilyGaussian family(5.0, 1.0);
    const GaussianState s0 = gaussian_family_member(family, 1.0, kPi, 0.5, 0.0);
    const BathSpec bath(1.0, 0.3);
    double worst = 0.0;
    for (const double t : {0.2, 0.7, 2.0}) {
      const GaussianState closed = gaussian_decay(s0, bath, t);
      const GaussianState flowed =
          from_moments(moment_flow_decay(s0, bath, t), s0.omega);
      worst = std::max(worst, std::abs(closed.occupation - flowed.occupation));
      worst = std::max(worst, std::abs(closed.xi_mag - flowed.xi_mag));
      worst = std::max(worst,
                       std::abs(std::abs(closed.mu) - std::abs(flowed.mu)));
    }
    add("gaussian-decay-flow", worst, 1e-8, "closed form vs moment flow");
  }

  {  // Closed-form two-TLS propagator against the generic exponential.
    const TwoTlsConfig cfg(1.0, 0.7, IsoFamilyTls(0.8, 1.0), 0.3, 0.1);
    const Matrix h = two_tls_free_hamiltonian(cfg.omega) +
                     two_tls_interaction(cfg.eta);
    double worst = 0.0;
    for (const double t : {0.4, 1.3, 2.9}) {
      const Matrix direct = matrix_exponential(h * cplx(0.0, -t));
      worst = std::max(worst, (propagator(cfg, t) - direct).max_abs());
      worst = std::max(worst,
                       std::abs(closed_form_battery_population(cfg, t) -
                                std::real(evolve(cfg, t).reduced_B.matrix()(1, 1))));
    }
    add("tls-propagator", worst, 1e-10,
        "closed form vs exp(-iHt) and the population formula");
  }

  {  // Beam-splitter propagator against exp(Wt).
    const TwoModeConfig cfg(1.0, 1.0, IsoFamilyGaussian(5.0, 1.0), 1.0, kPi,
                            0.8, 0.0, 0.0);
    double worst = 0.0;
    for (const double t : {0.3, 0.9, 2.1}) {
      const Matrix direct =
          matrix_exponential(drift_matrix(cfg.omega, cfg.eta) * cplx(t));
      worst = std::max(
          worst,
          (beam_splitter_propagator(cfg.omega, cfg.eta, t) - direct).max_abs());
    }
    add("gaussian-propagator", worst, 1e-10, "closed form vs exp(Wt)");
  }

  return result;
}

}  // namespace ergokit
