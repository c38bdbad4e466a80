// Command-line front end: entanglement detection, channel analysis,
// semigroup evolution, Markov-approximation comparison, atom-field models,
// and reproduction scenarios. All outputs embed the tool version, the
// config echo, and the seed in effect.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oqs/atomfield.hpp"
#include "oqs/channels.hpp"
#include "oqs/entanglement.hpp"
#include "oqs/io.hpp"
#include "oqs/markov.hpp"
#include "oqs/repro.hpp"

namespace {

using namespace oqs;

std::string fmt(double x) { return io::format_double(x); }

double parse_beta(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "Inf")
    return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("MalformedBeta", 0.0);
}

Vec3 parse_vec3(const std::string& s) {
  Vec3 v;
  std::istringstream in(s);
  std::string tok;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, tok, ',')) throw ValidationError("MalformedVector", i);
    try {
      v[i] = std::stod(tok);
    } catch (const std::exception&) {
      throw ValidationError("MalformedVector", i);
    }
  }
  if (std::getline(in, tok, ',')) throw ValidationError("MalformedVector", 4);
  return v;
}

Eigen::Vector2cd parse_amplitudes(const std::string& s) {
  std::vector<double> xs;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      xs.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ValidationError("MalformedAmplitudes", xs.size());
    }
  }
  if (xs.size() != 4)
    throw ValidationError("MalformedAmplitudes", xs.size());
  return Eigen::Vector2cd(cplx(xs[0], xs[1]), cplx(xs[2], xs[3]));
}

void emit_json(const std::optional<std::string>& out, const io::OutputMeta& m,
               const nlohmann::json& payload) {
  if (out) {
    io::write_json(*out, m, payload);
  } else {
    nlohmann::json j;
    j["tool_version"] = io::kToolVersion;
    j["config"] = m.config_echo;
    j["seed"] = m.seed;
    j["result"] = payload;
    std::cout << j.dump(2) << "\n";
  }
}

void emit_csv(const std::string& out, const io::OutputMeta& m,
              const std::vector<std::string>& columns,
              const std::vector<std::vector<std::string>>& rows,
              bool gnuplot) {
  io::write_csv(out, m, columns, rows);
  if (gnuplot) io::write_gnuplot(out, columns);
}

int run(int argc, char** argv) {
  CLI::App app{"Open quantum system semigroups: detection, channels, "
               "Markovian generators, and atom-field models"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand name

  std::uint64_t config_seed = 20240811;
  app.add_option("--seed", config_seed, "Base seed (LINDBLAD_SEED overrides)");
  bool gnuplot = false;
  app.add_flag("--gnuplot", gnuplot, "Write a companion gnuplot script");

  std::ostringstream echo;
  for (int i = 1; i < argc; ++i) echo << (i > 1 ? " " : "") << argv[i];

  // detect
  auto* detect = app.add_subcommand("detect", "Entanglement detection");
  std::string det_state;
  std::string det_out;
  detect->add_option("--state", det_state, "State JSON file")->required();
  detect->add_option("--out", det_out, "Output JSON file");

  // channel
  auto* channel = app.add_subcommand("channel", "Channel CP/positivity");
  std::string ch_in, ch_apply, ch_out;
  channel->add_option("--in", ch_in, "Channel JSON file")->required();
  channel->add_option("--apply", ch_apply, "State JSON to push through");
  channel->add_option("--out", ch_out, "Output JSON file");

  // evolve
  auto* evolve_cmd = app.add_subcommand("evolve", "Semigroup evolution");
  std::string ev_gen, ev_state, ev_out;
  double ev_t = 1.0;
  int ev_grid = 100;
  evolve_cmd->add_option("--gen", ev_gen, "Generator JSON file")->required();
  evolve_cmd->add_option("--state", ev_state, "State JSON file")->required();
  evolve_cmd->add_option("--t", ev_t, "Final time")->required();
  evolve_cmd->add_option("--grid", ev_grid, "Number of sample points");
  evolve_cmd->add_option("--out", ev_out, "Output CSV file")->required();

  // markov-compare
  auto* mc = app.add_subcommand("markov-compare",
                                "Compare Markov-approximation generators");
  std::string mc_model = "ex34", mc_out;
  double mc_beta = 1.0, mc_omega = 1.0, mc_eps = 0.1, mc_lambda = 1.0;
  mc->add_option("--model", mc_model, "Model name (ex34)");
  mc->add_option("--beta", mc_beta, "Inverse temperature");
  mc->add_option("--omega", mc_omega, "Level splitting");
  mc->add_option("--eps", mc_eps, "Frequency-domain cutoff");
  mc->add_option("--lambda", mc_lambda, "Coupling");
  mc->add_option("--out", mc_out, "Output CSV file")->required();

  // atomfield
  auto* af = app.add_subcommand("atomfield", "Atoms in a thermal scalar field");
  af->require_subcommand(1);
  auto* af1 = af->add_subcommand("single", "Single-atom coefficients");
  double af_omega = 1.0;
  std::string af_beta = "1.0", af_n = "0,0,1", af1_out;
  af1->add_option("--omega", af_omega, "Level splitting");
  af1->add_option("--beta", af_beta, "Inverse temperature (inf allowed)");
  af1->add_option("--n", af_n, "Hamiltonian axis, comma separated");
  af1->add_option("--out", af1_out, "Output JSON file");

  auto* af2 = af->add_subcommand("two", "Two-atom trajectory");
  std::string af2_init = "antiparallel", af2_out;
  double af2_tmax = 50.0, af2_eps = 0.25;
  int af2_grid = 200;
  af2->add_option("--init", af2_init,
                  "Initial state: antiparallel | singlet | isotropic");
  af2->add_option("--eps", af2_eps, "Mixing weight for isotropic init");
  af2->add_option("--omega", af_omega, "Level splitting");
  af2->add_option("--beta", af_beta, "Inverse temperature");
  af2->add_option("--n", af_n, "Hamiltonian axis");
  af2->add_option("--tmax", af2_tmax, "Final time");
  af2->add_option("--grid", af2_grid, "Number of sample points");
  af2->add_option("--out", af2_out, "Output CSV file")->required();

  auto* af3 = af->add_subcommand("entangle-test",
                                 "Entanglement-generation test");
  std::string af3_phi = "0,0,1,0", af3_psi = "1,0,0,0", af3_out;
  af3->add_option("--omega", af_omega, "Level splitting");
  af3->add_option("--beta", af_beta, "Inverse temperature");
  af3->add_option("--n", af_n, "Hamiltonian axis");
  af3->add_option("--phi", af3_phi, "First amplitude pair re,im,re,im");
  af3->add_option("--psi", af3_psi, "Second amplitude pair re,im,re,im");
  af3->add_option("--out", af3_out, "Output JSON file");

  // repro
  auto* rp = app.add_subcommand("repro", "Reproduction scenarios");
  std::string rp_case, rp_out, rp_beta = "2.0";
  bool rp_suite = false;
  rp->add_option("--case", rp_case, "Named case");
  rp->add_flag("--suite", rp_suite, "Run the full acceptance suite");
  rp->add_option("--beta", rp_beta, "Inverse temperature (inf allowed)");
  rp->add_option("--out", rp_out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  io::OutputMeta meta;
  meta.config_echo = echo.str();
  meta.seed = io::resolve_seed(config_seed);

  if (*detect) {
    auto rho = io::state_from_json(io::load_json_file(det_state));
    int nA = 0, nB = 0;
    if (rho.dim == 4) nA = nB = 2;
    else if (rho.dim == 6) { nA = 2; nB = 3; }
    else if (rho.dim == 9) nA = nB = 3;
    else throw ValidationError("UnsupportedDimension", rho.dim);
    auto v = ppt_verdict(rho, nA, nB);
    nlohmann::json j;
    j["min_pt_eig"] = v.min_pt_eigenvalue;
    j["conclusive"] = v.conclusive;
    j["verdict"] = v.result == PptVerdict::Result::separable ? "separable"
                   : v.result == PptVerdict::Result::entangled
                       ? "entangled"
                       : "inconclusive";
    if (rho.dim == 4) j["concurrence"] = concurrence(rho);
    emit_json(det_out.empty() ? std::nullopt
                              : std::optional<std::string>(det_out),
              meta, j);
    return 0;
  }

  if (*channel) {
    auto ch = io::channel_from_json(io::load_json_file(ch_in));
    auto cp = is_completely_positive(ch);
    auto pos = is_positive_map(ch, 32, meta.seed);
    nlohmann::json j;
    j["dim"] = ch.dim;
    j["cp"] = cp.cp;
    j["min_choi_eigenvalue"] = cp.min_choi_eigenvalue;
    j["positive"] = pos.positive;
    j["worst_product_value"] = pos.worst_product_value;
    if (!ch_apply.empty()) {
      auto rho = io::state_from_json(io::load_json_file(ch_apply));
      j["output_state"] = io::matrix_to_json(oqs::apply(ch, rho.m));
    }
    emit_json(ch_out.empty() ? std::nullopt
                             : std::optional<std::string>(ch_out),
              meta, j);
    return 0;
  }

  if (*evolve_cmd) {
    auto g = io::generator_from_json(io::load_json_file(ev_gen));
    auto rho0 = io::state_from_json(io::load_json_file(ev_state));
    if (rho0.dim != g.dim) throw ValidationError("DimensionMismatch",
                                                 rho0.dim - g.dim);
    if (ev_grid < 2) throw ValidationError("GridTooSmall", ev_grid);
    if (ev_t < 0.0) throw ValidationError("NegativeTime", ev_t);
    std::vector<double> ts(ev_grid);
    for (int i = 0; i < ev_grid; ++i) ts[i] = ev_t * i / (ev_grid - 1);
    auto traj = trajectory(g, rho0, ts);
    std::vector<std::string> cols{"t"};
    for (int r = 0; r < g.dim; ++r)
      for (int c = 0; c < g.dim; ++c) {
        cols.push_back("re_" + std::to_string(r) + std::to_string(c));
        cols.push_back("im_" + std::to_string(r) + std::to_string(c));
      }
    cols.push_back("min_eigenvalue");
    cols.push_back("entropy");
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < ev_grid; ++i) {
      std::vector<std::string> row{fmt(ts[i])};
      const Mat& m = traj[i].m;
      for (int r = 0; r < g.dim; ++r)
        for (int c = 0; c < g.dim; ++c) {
          row.push_back(fmt(m(r, c).real()));
          row.push_back(fmt(m(r, c).imag()));
        }
      Eigen::SelfAdjointEigenSolver<Mat> es(m);
      row.push_back(fmt(es.eigenvalues().minCoeff()));
      row.push_back(fmt(von_neumann_entropy(traj[i])));
      rows.push_back(std::move(row));
    }
    emit_csv(ev_out, meta, cols, rows, gnuplot);
    return 0;
  }

  if (*mc) {
    if (mc_model != "ex34") throw ValidationError("UnknownModel", 0.0);
    auto bath = BathCorrelation::thermal(mc_beta, mc_eps);
    auto c = markov_coeffs(mc_omega, bath, mc_lambda);
    auto c0 = markov_coeffs(0.0, bath, mc_lambda);
    struct Row {
      const char* name;
      BlochAffine gen;
      double alpha, b, d;
    };
    std::vector<Row> models{
        {"redfield", redfield_generator(mc_omega, bath, mc_lambda), c.alpha,
         c.b, c.d},
        {"weak_coupling", weak_coupling_generator(mc_omega, bath, mc_lambda),
         c.alpha, c.b, c.d},
        {"singular_coupling",
         singular_coupling_generator(mc_omega, bath, mc_lambda), c0.alpha,
         0.0, 0.0},
        {"convolutionless",
         convolutionless_generator(mc_omega, bath, mc_lambda), c.alpha, -c.b,
         c.d}};
    std::vector<std::string> cols{"name", "alpha",    "b",
                                  "d",    "cp",       "positive",
                                  "witness_ddet"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : models) {
      auto ledger = cp_ledger(m.gen);
      auto w = positivity_witness(m.gen);
      const bool positive = ledger.positivity_ok() && !w.has_value();
      rows.push_back({m.name, fmt(m.alpha), fmt(m.b), fmt(m.d),
                      ledger.cp_ok() ? "1" : "0", positive ? "1" : "0",
                      fmt(w ? w->ddet : 0.0)});
    }
    io::write_csv(mc_out, meta, cols, rows);
    return 0;
  }

  if (*af) {
    AtomParams p;
    p.omega = af_omega;
    p.beta = parse_beta(af_beta);
    p.n = parse_vec3(af_n);
    p.validate();
    if (*af1) {
      auto cc = single_atom_coeffs(p);
      nlohmann::json j;
      j["A"] = cc.A;
      j["B"] = cc.B;
      j["C"] = cc.C;
      j["R"] = cc.R;
      j["kossakowski"] = io::matrix_to_json(Mat(single_atom_kossakowski(p)));
      Vec3 st = -cc.R * p.n.normalized();
      j["stationary_bloch"] = {st[0], st[1], st[2]};
      emit_json(af1_out.empty() ? std::nullopt
                                : std::optional<std::string>(af1_out),
                meta, j);
      return 0;
    }
    if (*af2) {
      if (af2_tmax < 0.0) throw ValidationError("NegativeTime", af2_tmax);
      if (af2_grid < 2) throw ValidationError("GridTooSmall", af2_grid);
      Vec3 n = p.n.normalized();
      TwoAtomState s0;
      if (af2_init == "antiparallel") {
        s0.v1 = -n;
        s0.v2 = n;
        s0.M = -n * n.transpose();
      } else if (af2_init == "singlet") {
        s0.M = -Mat3::Identity();
      } else if (af2_init == "isotropic") {
        if (af2_eps < 0.0 || af2_eps > 1.0)
          throw ValidationError("MixingWeightOutOfRange", af2_eps);
        s0.M = -(1.0 - af2_eps) * Mat3::Identity();
      } else {
        throw ValidationError("UnknownInitialState", 0.0);
      }
      std::vector<double> ts(af2_grid);
      for (int i = 0; i < af2_grid; ++i)
        ts[i] = af2_tmax * i / (af2_grid - 1);
      auto traj = evolve_two_atom(p, s0, ts);
      std::vector<std::string> cols{"t", "tau", "concurrence",
                                    "min_eigenvalue"};
      const char* axes = "xyz";
      for (int i = 0; i < 3; ++i)
        cols.push_back(std::string("v1") + axes[i]);
      for (int i = 0; i < 3; ++i)
        cols.push_back(std::string("v2") + axes[i]);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
          cols.push_back(std::string("m") + axes[i] + axes[k]);
      std::vector<std::vector<std::string>> rows;
      for (int i = 0; i < af2_grid; ++i) {
        const auto& s = traj[i];
        auto rho = make_density(reconstruct_two_atom(s), true);
        Eigen::SelfAdjointEigenSolver<Mat> es(rho.m);
        std::vector<std::string> row{fmt(ts[i]), fmt(s.tau()),
                                     fmt(concurrence(rho)),
                                     fmt(es.eigenvalues().minCoeff())};
        for (int k = 0; k < 3; ++k) row.push_back(fmt(s.v1[k]));
        for (int k = 0; k < 3; ++k) row.push_back(fmt(s.v2[k]));
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) row.push_back(fmt(s.M(a, b)));
        rows.push_back(std::move(row));
      }
      emit_csv(af2_out, meta, cols, rows, gnuplot);
      return 0;
    }
    // entangle-test
    auto res = entanglement_generation_test(p, parse_amplitudes(af3_phi),
                                            parse_amplitudes(af3_psi));
    nlohmann::json j;
    j["fires"] = res.fires;
    j["lhs"] = res.lhs;
    j["rhs"] = res.rhs;
    emit_json(af3_out.empty() ? std::nullopt
                              : std::optional<std::string>(af3_out),
              meta, j);
    return 0;
  }

  if (*rp) {
    if (rp_suite) {
      auto rows = repro::acceptance_suite();
      bool all = true;
      for (const auto& c : rows) {
        all = all && c.pass;
        std::printf("%s  %-42s measured=%.12g expected=%.12g tol=%g\n",
                    c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured,
                    c.expected, c.tolerance);
      }
      if (!rp_out.empty())
        io::write_json(rp_out, meta, repro::criteria_report(rows));
      return all ? 0 : 1;
    }
    if (rp_case.empty()) throw ValidationError("MissingCase", 0.0);
    auto out = repro::run_case(rp_case, parse_beta(rp_beta));
    if (!out.columns.empty()) {
      if (rp_out.empty()) throw ValidationError("MissingOutputPath", 0.0);
      emit_csv(rp_out, meta, out.columns, out.rows, gnuplot);
    } else {
      emit_json(rp_out.empty() ? std::nullopt
                               : std::optional<std::string>(rp_out),
                meta, out.summary);
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const oqs::ValidationError& e) {
    std::cerr << "validation error: " << e.invariant()
              << " (magnitude " << e.magnitude() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
