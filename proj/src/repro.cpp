#include "oqs/repro.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "oqs/atomfield.hpp"
#include "oqs/channels.hpp"
#include "oqs/entanglement.hpp"
#include "oqs/io.hpp"
#include "oqs/markov.hpp"

namespace oqs::repro {

namespace {

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

std::string fmt(double x) { return io::format_double(x); }

// 1. Transposition map: Choi spectrum {-1/2, 1/2, 1/2, 1/2}; not CP; no
// negative product witness.
CriterionResult transposition_criterion() {
  CriterionResult r;
  r.id = 1;
  r.name = "transposition-choi-spectrum";
  r.tolerance = 1e-12;
  auto ch = transposition_channel(2);
  Eigen::SelfAdjointEigenSolver<Mat> es(choi_of(ch));
  Eigen::Vector4d want(-0.5, 0.5, 0.5, 0.5);
  double dev = 0.0;
  for (int i = 0; i < 4; ++i)
    dev = std::max(dev, std::abs(es.eigenvalues()[i] - want[i]));
  const auto cp = is_completely_positive(ch);
  const auto pos = is_positive_map(ch, 32);
  r.measured = dev;
  r.pass = dev <= r.tolerance && !cp.cp && pos.positive;
  std::ostringstream d;
  d << "cp=" << cp.cp << " min_choi_eig=" << fmt(cp.min_choi_eigenvalue)
    << " worst_product=" << fmt(pos.worst_product_value);
  r.detail = d.str();
  return r;
}

// 2. Two-qubit Werner family on a 41-point flip-expectation grid.
CriterionResult werner_criterion() {
  CriterionResult r;
  r.id = 2;
  r.name = "werner-concurrence-and-pt-spectrum";
  r.tolerance = 1e-10;
  double worst = 0.0;
  for (double F : linspace(-1.0, 1.0, 41)) {
    auto w = werner_state(2, F);
    worst = std::max(worst,
                     std::abs(concurrence(w) - std::max(-F, 0.0)));
    Eigen::SelfAdjointEigenSolver<Mat> es(partial_transpose(w.m, 2, 2, 'B'));
    std::array<double, 4> want{F / 2.0, (2.0 - F) / 6.0, (2.0 - F) / 6.0,
                               (2.0 - F) / 6.0};
    std::sort(want.begin(), want.end());
    for (int i = 0; i < 4; ++i)
      worst = std::max(worst, std::abs(es.eigenvalues()[i] - want[i]));
    const auto v = ppt_verdict(w, 2, 2);
    worst = std::max(
        worst, std::abs(v.min_pt_eigenvalue -
                        std::min(F / 2.0, (2.0 - F) / 6.0)));
  }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "flip eigenvalue F/2 is the minimum on the F <= 1/2 branch";
  return r;
}

// 3. Two-parameter diagonal qubit dissipator diag(r/2, r/2, p): CP iff
// r >= p on the nonnegative grid, positivity iff r, p >= 0.
CriterionResult diagonal_family_criterion() {
  CriterionResult r;
  r.id = 3;
  r.name = "diagonal-dissipator-cp-vs-positivity";
  r.tolerance = 0.5;  // measured = number of grid mismatches
  int mism = 0;
  for (double rr : linspace(0.0, 2.0, 20))
    for (double pp : linspace(0.0, 2.0, 20)) {
      auto d = BlochAffine::from_parts(
          Vec3::Zero(), Vec3(rr / 2.0, rr / 2.0, pp).asDiagonal());
      if (cp_ledger(d).cp_ok() != (rr >= pp - 1e-12)) ++mism;
    }
  for (double rr : linspace(-1.0, 1.0, 20))
    for (double pp : linspace(-1.0, 1.0, 20)) {
      auto d = BlochAffine::from_parts(
          Vec3::Zero(), Vec3(rr / 2.0, rr / 2.0, pp).asDiagonal());
      if (cp_ledger(d).positivity_ok() != (rr >= -1e-12 && pp >= -1e-12))
        ++mism;
    }
  r.measured = mism;
  r.pass = mism == 0;
  r.detail = "800 grid points checked";
  return r;
}

// 4. Redfield generator at Omega = 1, beta = 1, eps = 0.1: KMS balance,
// determinant-derivative witness value, and an actual positivity violation
// along the evolution.
CriterionResult redfield_criterion() {
  CriterionResult r;
  r.id = 4;
  r.name = "redfield-kms-and-positivity-witness";
  r.tolerance = 1e-8;
  auto bath = BathCorrelation::thermal(1.0, 0.1);
  auto c = markov_coeffs(1.0, bath);
  const double kms =
      std::abs(c.alpha - c.d - std::exp(-1.0) * (c.alpha + c.d));
  auto gen = redfield_generator(1.0, bath);
  auto w = positivity_witness(gen);
  const double want_ddet =
      -c.alpha * (4.0 * c.b * c.b + c.d * c.d) /
      (4.0 * (c.alpha * c.alpha + c.b * c.b));
  const double dev = w ? std::abs(w->ddet - want_ddet) : 1.0;
  double min_eig = 0.0;
  if (w)
    for (double t : linspace(0.01, 3.0, 60))
      min_eig = std::min(min_eig,
                         (1.0 - evolve_bloch(gen, w->n, t).norm()) / 2.0);
  r.measured = dev;
  r.expected = 0.0;
  r.pass = w.has_value() && kms <= 1e-6 && dev <= r.tolerance &&
           min_eig < -1e-6;
  std::ostringstream d;
  d << "kms_resid=" << fmt(kms) << " ddet=" << fmt(w ? w->ddet : 0.0)
    << " min_evolved_eig=" << fmt(min_eig);
  r.detail = d.str();
  return r;
}

// 5. Weak-coupling generator: CP ledger passes and the stationary state is
// the Gibbs state of H = (Omega/2) sigma_3.
CriterionResult weak_coupling_criterion() {
  CriterionResult r;
  r.id = 5;
  r.name = "weak-coupling-cp-and-gibbs";
  r.tolerance = 1e-8;
  auto bath = BathCorrelation::thermal(1.0, 0.1);
  auto d = weak_coupling_generator(1.0, bath);
  const bool cp = cp_ledger(d).cp_ok();
  auto sts = stationary_states(from_bloch_affine(d));
  const double z = std::exp(-0.5) + std::exp(0.5);
  Mat gibbs = Mat::Zero(2, 2);
  gibbs(0, 0) = std::exp(-0.5) / z;
  gibbs(1, 1) = std::exp(0.5) / z;
  double dev = 1.0;
  if (sts.size() == 1) dev = (sts[0].m - gibbs).cwiseAbs().maxCoeff();
  r.measured = dev;
  r.pass = cp && dev <= r.tolerance;
  std::ostringstream dd;
  dd << "cp_ledger=" << cp << " n_stationary=" << sts.size();
  r.detail = dd.str();
  return r;
}

// 6. Dephasing: closed form vs direct quadrature, long-time slope
// 2 lambda^2/beta, and the Markov-limit decay rate.
CriterionResult dephasing_criterion() {
  CriterionResult r;
  r.id = 6;
  r.name = "dephasing-closed-form-vs-quadrature";
  r.tolerance = 1e-6;  // relative
  double worst_rel = 0.0, worst_slope = 0.0, worst_rate = 0.0;
  for (double lam : {0.5, 1.0})
    for (double eps : {0.1, 0.5})
      for (double beta : {1.0, 2.0}) {
        SpinBosonDephasing m{lam, eps, beta, 1.0};
        for (double t : {0.1, 1.0, 5.0, 20.0}) {
          const double g1 = dephasing_gamma(t, m);
          const double g2 = dephasing_gamma_quadrature(t, m);
          worst_rel = std::max(worst_rel, std::abs(g1 - g2) / std::abs(g1));
        }
        const double slope = (dephasing_gamma(80.0 * beta, m) -
                              dephasing_gamma(40.0 * beta, m)) /
                             (40.0 * beta);
        const double want = 2.0 * lam * lam / beta;
        worst_slope = std::max(worst_slope, std::abs(slope - want) / want);
        const double rate =
            2.0 * to_bloch_affine(dephasing_markov_generator(m)).a();
        worst_rate = std::max(worst_rate, std::abs(rate - want));
      }
  r.measured = worst_rel;
  r.pass = worst_rel <= r.tolerance && worst_slope <= 0.01 &&
           worst_rate <= 1e-8;
  std::ostringstream d;
  d << "slope_rel_dev=" << fmt(worst_slope)
    << " markov_rate_dev=" << fmt(worst_rate);
  r.detail = d.str();
  return r;
}

// 7. Stochastic magnetic fields: single-axis exponential Kossakowski matrix
// in closed form (not CP, witness fires) and PSD white noise (CP).
CriterionResult stochastic_criterion() {
  CriterionResult r;
  r.id = 7;
  r.name = "stochastic-field-kossakowski";
  r.tolerance = 1e-10;
  const double Omega = 1.0, B2 = 0.7, lam = 0.9;
  StochasticCovariance cov;
  cov.kind = StochasticCovariance::Kind::exponential_single_axis;
  cov.B2 = B2;
  cov.lambda_decay = lam;
  auto res = stochastic_field_generator(Omega, cov);
  Mat3 want = Mat3::Zero();
  const double pref = B2 / (lam * lam + Omega * Omega);
  want(0, 0) = 2.0 * lam * pref;
  want(0, 1) = want(1, 0) = Omega * pref;
  const double dev = (res.C - want).cwiseAbs().maxCoeff();
  const bool cp = cp_ledger(res.generator).cp_ok();
  auto w = positivity_witness(res.generator);
  StochasticCovariance wn;
  wn.kind = StochasticCovariance::Kind::white_noise;
  Mat3 g;
  g << 0.5, 0.1, 0.0, 0.1, 0.4, 0.05, 0.0, 0.05, 0.3;
  wn.G = g;
  const bool cp_wn =
      cp_ledger(stochastic_field_generator(Omega, wn).generator).cp_ok();
  r.measured = dev;
  r.pass = dev <= r.tolerance && !cp && w.has_value() && cp_wn;
  std::ostringstream d;
  d << "single_axis_cp=" << cp << " witness_fired=" << w.has_value()
    << " white_noise_cp=" << cp_wn;
  r.detail = d.str();
  return r;
}

// 8. Single atom in a thermal scalar field at beta = 2, omega = 1, n = z.
CriterionResult single_atom_criterion() {
  CriterionResult r;
  r.id = 8;
  r.name = "single-atom-equilibrium-and-transition";
  r.tolerance = 1e-9;
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0;
  p.n = Vec3(0, 0, 1);
  auto cc = single_atom_coeffs(p);
  const double R_want = (1.0 - std::exp(-2.0)) / (1.0 + std::exp(-2.0));
  auto g = single_atom_generator(p);
  auto sts = stationary_states(g);
  double st_dev = 1.0;
  if (sts.size() == 1)
    st_dev = (density_to_bloch(sts[0]) - Vec3(0, 0, -R_want)).norm();
  // Dissipative Bloch block spectrum {2A, 2A+C, 2A+C}.
  Eigen::SelfAdjointEigenSolver<Mat3> es(to_bloch_affine(g).D3());
  std::array<double, 3> want_eigs{2.0 * cc.A, 2.0 * cc.A + cc.C,
                                  2.0 * cc.A + cc.C};
  std::sort(want_eigs.begin(), want_eigs.end());
  double eig_dev = 0.0;
  for (int i = 0; i < 3; ++i)
    eig_dev = std::max(eig_dev,
                       std::abs(es.eigenvalues()[i] - want_eigs[i]));
  // Spontaneous excitation probability vs the full semigroup evolution.
  double tp_dev = 0.0;
  auto rho_f = bloch_to_density(p.n);
  for (double t : linspace(0.0, 5.0 / cc.A, 50)) {
    const double closed = (1.0 - std::exp(-4.0 * cc.A * t)) /
                          (1.0 + std::exp(p.beta * p.omega));
    const double direct =
        (rho_f.m * evolve(g, bloch_to_density(-p.n), t).m).trace().real();
    tp_dev = std::max(tp_dev, std::abs(closed - direct));
    tp_dev = std::max(
        tp_dev, std::abs(transition_probability(p, -p.n, p.n, t) - closed));
  }
  // Initial excitation rate via a five-point one-sided derivative.
  const double h = 1e-3;
  auto f = [&](double t) { return transition_probability(p, -p.n, p.n, t); };
  const double rate = (-25.0 * f(0.0) + 48.0 * f(h) - 36.0 * f(2 * h) +
                       16.0 * f(3 * h) - 3.0 * f(4 * h)) /
                      (12.0 * h);
  const double rate_want =
      p.omega / M_PI / (std::exp(p.beta * p.omega) - 1.0);
  const double rate_dev = std::abs(rate - rate_want);
  r.measured = std::max(st_dev, tp_dev);
  r.pass = st_dev <= 1e-9 && eig_dev <= 1e-10 && tp_dev <= 1e-9 &&
           rate_dev <= 1e-8;
  std::ostringstream d;
  d << "eig_dev=" << fmt(eig_dev) << " rate=" << fmt(rate)
    << " rate_dev=" << fmt(rate_dev);
  r.detail = d.str();
  return r;
}

// 9. Two atoms: conserved trace of the correlation matrix, approach to the
// closed-form asymptotic family, asymptotic concurrence, and the
// entanglement gain of the isotropic mixture family.
CriterionResult two_atom_criterion() {
  CriterionResult r;
  r.id = 9;
  r.name = "two-atom-asymptotics-and-entanglement";
  r.tolerance = 1e-6;
  AtomParams p;
  p.omega = 1.0;
  p.beta = 2.0;
  p.n = Vec3(0, 0, 1);
  auto cc = single_atom_coeffs(p);
  // Antiparallel product initial state.
  TwoAtomState anti;
  anti.v1 = -p.n;
  anti.v2 = p.n;
  anti.M = -p.n * p.n.transpose();
  auto grid = linspace(0.0, 50.0 / cc.A, 26);
  auto traj = evolve_two_atom(p, anti, grid);
  double tau_drift = 0.0;
  for (const auto& s : traj)
    tau_drift = std::max(tau_drift, std::abs(s.tau() - anti.tau()));
  auto want = asymptotic_state(anti.tau(), cc.R, p.n);
  const auto& fin = traj.back();
  const double end_dev =
      std::max({(fin.v1 - want.v1).norm(), (fin.v2 - want.v2).norm(),
                (fin.M - want.M).cwiseAbs().maxCoeff()});
  const double conc =
      concurrence(make_density(reconstruct_two_atom(fin), true));
  const double conc_want = 2.0 * cc.R * cc.R / (3.0 + cc.R * cc.R);
  const double conc_dev = std::abs(conc - conc_want);
  // Zero temperature limit of the antiparallel asymptote.
  const double conc_inf_dev =
      std::abs(asymptotic_concurrence(-1.0, 1.0) - 0.5);
  // The singlet is exactly stationary.
  TwoAtomState singlet;
  singlet.M = -Mat3::Identity();
  auto ds = two_atom_rhs(p, singlet);
  const double singlet_rhs = std::max(
      {ds.v1.norm(), ds.v2.norm(), ds.M.cwiseAbs().maxCoeff()});
  // Isotropic singlet mixtures: concurrence gain 3 R^2 eps / (3 + R^2).
  double gain_dev = 0.0;
  for (double eps : {0.1, 0.3, 0.6}) {
    TwoAtomState s0;
    s0.M = -(1.0 - eps) * Mat3::Identity();
    const double c0 =
        concurrence(make_density(reconstruct_two_atom(s0), true));
    auto tr = evolve_two_atom(p, s0, {0.0, 50.0 / cc.A});
    const double c1 =
        concurrence(make_density(reconstruct_two_atom(tr.back()), true));
    const double want_gain =
        3.0 * cc.R * cc.R * eps / (3.0 + cc.R * cc.R);
    gain_dev = std::max(gain_dev, std::abs((c1 - c0) - want_gain));
  }
  r.measured = end_dev;
  r.pass = tau_drift < 1e-9 && end_dev <= 1e-6 && conc_dev <= 1e-7 &&
           conc_inf_dev <= 1e-12 && singlet_rhs < 1e-12 && gain_dev <= 1e-7;
  std::ostringstream d;
  d << "tau_drift=" << fmt(tau_drift) << " conc_dev=" << fmt(conc_dev)
    << " singlet_rhs=" << fmt(singlet_rhs) << " gain_dev=" << fmt(gain_dev);
  r.detail = d.str();
  return r;
}

// 10. Entanglement-generation statistic for phi = |->, psi = |+> equals
// (B n_3)^2 across a parameter grid.
CriterionResult entangle_test_criterion() {
  CriterionResult r;
  r.id = 10;
  r.name = "entanglement-generation-statistic";
  r.tolerance = 1e-10;
  Eigen::Vector2cd minus(0, 1), plus(1, 0);
  double worst = 0.0;
  std::vector<Vec3> axes{Vec3(0, 0, 1), Vec3(0.6, 0, 0.8),
                         Vec3(1, 2, 2) / 3.0, Vec3(0, 1, 0)};
  for (double omega : {0.5, 1.0, 2.0})
    for (double beta : {0.5, 2.0, 5.0})
      for (const Vec3& n : axes) {
        AtomParams p;
        p.omega = omega;
        p.beta = beta;
        p.n = n;
        auto cc = single_atom_coeffs(p);
        auto et = entanglement_generation_test(p, minus, plus);
        const double want = cc.B * n[2] * cc.B * n[2];
        worst = std::max(worst, std::abs((et.rhs - et.lhs) - want));
      }
  r.measured = worst;
  r.pass = worst <= r.tolerance;
  r.detail = "36 parameter combinations";
  return r;
}

// 11. Property suites: trace/hermiticity preservation, the semigroup law,
// CP ledger vs Kossakowski PSD, and positive-but-not-CP detection through
// the doubled map on the maximally entangled projector.
CriterionResult property_criterion() {
  CriterionResult r;
  r.id = 11;
  r.name = "property-suites";
  r.tolerance = 1e-9;
  std::mt19937_64 rng(20240811);
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  auto rand_mat = [&](int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = cplx(nd(rng), nd(rng));
    return m;
  };
  auto rand_cp_generator = [&]() {
    Mat h = rand_mat(2);
    Mat m = rand_mat(3);
    Mat3c c = (m * m.adjoint()).topLeftCorner<3, 3>();
    return LindbladGenerator::qubit((h + h.adjoint()) / 2.0, c);
  };
  auto rand_state = [&]() {
    Mat a = rand_mat(2);
    Mat m = a * a.adjoint();
    return make_density(m / m.trace().real());
  };
  // Trace and hermiticity preservation.
  double worst_defect = 0.0;
  for (int k = 0; k < 1000; ++k) {
    auto g = rand_cp_generator();
    Mat out = evolve(g, rand_state(), 0.3).m;
    worst_defect = std::max(worst_defect, std::abs(out.trace().real() - 1.0));
    worst_defect = std::max(worst_defect, hermiticity_defect(out));
  }
  // Semigroup law.
  double worst_sg = 0.0;
  for (int k = 0; k < 200; ++k) {
    auto g = rand_cp_generator();
    auto rho = rand_state();
    Mat two = evolve(g, evolve(g, rho, 0.4), 0.7).m;
    Mat one = evolve(g, rho, 1.1).m;
    worst_sg = std::max(worst_sg, (two - one).cwiseAbs().maxCoeff());
  }
  // CP ledger <=> Kossakowski PSD on random symmetric dissipative blocks.
  int mism = 0;
  for (int k = 0; k < 1000; ++k) {
    Mat3 d3;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) d3(i, j) = d3(j, i) = ud(rng);
    auto d = BlochAffine::from_parts(Vec3::Zero(), d3);
    const bool ledger = cp_ledger(d).cp_ok();
    const bool psd = is_cp_generator(from_bloch_affine(d)).cp;
    if (ledger != psd) ++mism;
  }
  // Positive-but-not-CP map: the doubled semigroup develops a negative
  // eigenvalue on the maximally entangled projector; CP samples never do.
  auto doubled_min_eig = [&](const LindbladGenerator& g, double t) {
    Mat em = (superoperator(g) * t).exp();
    Mat out = Mat::Zero(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Mat e = Mat::Zero(2, 2);
        e(i, j) = 1.0;
        Mat ge = unvectorize(Mat(em * vectorize(e)), 2);
        out += 0.5 * kron(ge, ge);
      }
    Eigen::SelfAdjointEigenSolver<Mat> es(out);
    return es.eigenvalues().minCoeff();
  };
  auto pnc = BlochAffine::from_parts(Vec3::Zero(),
                                     Vec3(0.5, 0.5, 1.5).asDiagonal());
  const bool pnc_positive = cp_ledger(pnc).positivity_ok();
  const bool pnc_cp = cp_ledger(pnc).cp_ok();
  double pnc_min = 0.0;
  for (double t : {0.05, 0.1, 0.2})
    pnc_min = std::min(pnc_min, doubled_min_eig(from_bloch_affine(pnc), t));
  double cp_min = 0.0;
  for (int k = 0; k < 20; ++k) {
    auto g = rand_cp_generator();
    for (double t : {0.1, 0.5})
      cp_min = std::min(cp_min, doubled_min_eig(g, t));
  }
  r.measured = worst_defect;
  r.pass = worst_defect <= 1e-9 && worst_sg <= 1e-8 && mism == 0 &&
           pnc_positive && !pnc_cp && pnc_min < -1e-8 && cp_min >= -1e-8;
  std::ostringstream d;
  d << "semigroup_dev=" << fmt(worst_sg) << " ledger_mismatches=" << mism
    << " positive_not_cp_min_eig=" << fmt(pnc_min)
    << " cp_min_eig=" << fmt(cp_min);
  r.detail = d.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> acceptance_suite() {
  return {transposition_criterion(), werner_criterion(),
          diagonal_family_criterion(), redfield_criterion(),
          weak_coupling_criterion(), dephasing_criterion(),
          stochastic_criterion(), single_atom_criterion(),
          two_atom_criterion(), entangle_test_criterion(),
          property_criterion()};
}

nlohmann::json criteria_report(const std::vector<CriterionResult>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : rows) {
    nlohmann::json j;
    j["id"] = c.id;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["measured"] = c.measured;
    j["expected"] = c.expected;
    j["tolerance"] = c.tolerance;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::vector<std::string> case_names() {
  return {"werner-concurrence", "two-atom-asymptotic"};
}

CaseOutput run_case(const std::string& name, double beta) {
  CaseOutput out;
  if (name == "werner-concurrence") {
    out.columns = {"F", "concurrence", "min_pt_eig"};
    double worst = 0.0;
    for (double F : linspace(-1.0, 1.0, 41)) {
      auto w = werner_state(2, F);
      const double c = concurrence(w);
      const double m = ppt_verdict(w, 2, 2).min_pt_eigenvalue;
      out.rows.push_back({fmt(F), fmt(c), fmt(m)});
      worst = std::max(worst, std::abs(c - std::max(-F, 0.0)));
    }
    out.summary["max_concurrence_dev"] = worst;
    return out;
  }
  if (name == "two-atom-asymptotic") {
    AtomParams p;
    p.omega = 1.0;
    p.beta = beta;
    p.n = Vec3(0, 0, 1);
    p.validate();
    auto cc = single_atom_coeffs(p);
    auto st = asymptotic_state(-1.0, cc.R, p.n);
    auto rho = make_density(reconstruct_two_atom(st), true);
    Eigen::SelfAdjointEigenSolver<Mat> es(rho.m);
    out.summary["beta"] = std::isinf(beta) ? "inf" : fmt(beta);
    out.summary["R"] = cc.R;
    out.summary["tau"] = -1.0;
    out.summary["concurrence"] = concurrence(rho);
    out.summary["concurrence_formula"] = asymptotic_concurrence(-1.0, cc.R);
    out.summary["min_eigenvalue"] = es.eigenvalues().minCoeff();
    return out;
  }
  throw ValidationError("UnknownCase", 0.0);
}

}  // namespace oqs::repro
