// gausspr: phase retrieval in Gaussian shift-invariant spaces.
//
// Subcommands: synthesize, sample, reconstruct, counterexample, zeros.
// Exit codes: 2 bad input, 3 ill-conditioned, 4 odd multiplicity,
// 5 not self-adjoint, 6 other domain errors.

#include <CLI11.hpp>
#include <iostream>
#include <random>
#include <sstream>

#include "gausspr/log.hpp"
#include "gausspr/serialization.hpp"
#include "gausspr/space.hpp"

using namespace gausspr;

namespace {

void emit(const std::string& out, const std::string& content) {
  if (out.empty() || out == "-")
    std::cout << content;
  else
    write_file(out, content);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

SIFunction load_function(const std::string& path) {
  return sifunction_from_json(Json::parse(read_file(path)));
}

int run_synthesize(double gamma, double beta, const std::string& coeffs_json,
                   int offset, unsigned seed, int support, bool complex_coeffs,
                   const std::string& out) {
  SIFunction f;
  f.params = SpaceParams(gamma, beta);
  if (!coeffs_json.empty()) {
    Json arr = Json::parse(coeffs_json);
    VectorXcd v(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
      if (arr[i].is_array())
        v[static_cast<int>(i)] =
            Complex(arr[i].at(0).get<double>(), arr[i].at(1).get<double>());
      else
        v[static_cast<int>(i)] = Complex(arr[i].get<double>(), 0.0);
    }
    f.coeffs = CoeffSeq(offset, v, Role::c);
  } else {
    if (support < 1) throw Error("synthesize: need --coeffs or --support");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    VectorXcd v(support);
    for (int i = 0; i < support; ++i)
      v[i] = Complex(uni(rng), complex_coeffs ? uni(rng) : 0.0);
    f.coeffs = CoeffSeq(-(support / 2), v, Role::c);
  }
  emit(out, json_text(to_json(f)));
  return 0;
}

SampleSet sampleset_from_spec(const std::string& points_file, double step,
                              const std::vector<double>& window) {
  if (!points_file.empty()) {
    const std::string text = read_file(points_file);
    if (!text.empty() && text[0] == '{')
      return sampleset_from_json(Json::parse(text));
    return sampleset_from_csv(text);
  }
  if (step > 0.0 && window.size() == 2)
    return arithmetic_sample_set(step, window[0], window[1]);
  throw Error("sample set spec: give --points or --step with --window a b");
}

int run_sample(const std::string& function_file, const std::string& points_file,
               double step, const std::vector<double>& window,
               double noise, unsigned seed, const std::string& out) {
  const SIFunction f = load_function(function_file);
  const SampleSet s = sampleset_from_spec(points_file, step, window);
  emit(out, phaseless_to_csv(take_phaseless_samples(f, s, noise, seed)));
  return 0;
}

int run_reconstruct(const std::string& samples_file, double gamma, double beta,
                    const std::string& mode, int max_solutions,
                    double cluster_tol, int guard,
                    const std::vector<int>& n_window, const std::string& out,
                    const std::string& plot) {
  const PhaselessSamples m = phaseless_from_csv(read_file(samples_file));
  const SpaceParams p(gamma, beta);
  PipelineOptions opts;
  opts.max_solutions = max_solutions;
  opts.cluster_tol = cluster_tol;
  opts.recovery.guard_halfsteps = guard;
  if (n_window.size() == 2) opts.n_window = IntRange{n_window[0], n_window[1]};

  RetrievalReport rep;
  if (mode == "real")
    rep = reconstruct_real(m, p, opts);
  else if (mode == "all")
    rep = reconstruct_all(m, p, opts);
  else if (mode == "even_real")
    rep = reconstruct_even_real(m, p, opts);
  else
    throw Error("reconstruct: mode must be real, all, or even_real");
  emit(out, json_text(to_json(rep)));

  if (!plot.empty() && !rep.recovered.empty()) {
    std::ostringstream os;
    os << "lambda,measured";
    for (size_t k = 0; k < rep.recovered.size(); ++k) os << ",abs_f" << k;
    os << "\n";
    for (int i = 0; i < m.size(); ++i) {
      os << format_double(m.lambdas[i]) << "," << format_double(m.magnitudes[i]);
      for (const auto& f : rep.recovered)
        os << "," << format_double(std::abs(evaluate(f, m.lambdas[i])));
      os << "\n";
    }
    write_file(plot, os.str());
  }
  return 0;
}

int run_counterexample(double step, const std::vector<double>& window,
                       double gamma, double beta, double guard,
                       const std::string& out_prefix) {
  const SpaceParams p(gamma, beta);
  CounterexampleOptions opts;
  opts.window_lo = window[0];
  opts.window_hi = window[1];
  opts.guard = guard;
  const SampleSet s = arithmetic_sample_set(step, window[0], window[1]);
  const double radius = (window[1] - window[0]) / 4.0;
  const double density = lower_density_estimate(s, radius);
  CounterexamplePair pair;
  try {
    pair = build_counterexample(s, p, opts);
  } catch (const NoNullSpace&) {
    std::cerr << "counterexample: sample density " << density
              << " is not below the threshold 2/beta = " << 2.0 / beta
              << "; no ambiguity exists (phase retrieval is unique here)\n";
    return 6;
  }
  write_file(out_prefix + "_plus.json", json_text(to_json(pair.plus)));
  write_file(out_prefix + "_minus.json", json_text(to_json(pair.minus)));
  std::ostringstream os;
  os << "lambda,abs_F,abs_G\n";
  for (int i = 0; i < s.size(); ++i) {
    const double lam = s.points[i];
    os << format_double(lam) << ","
       << format_double(std::abs(evaluate(pair.plus, lam))) << ","
       << format_double(std::abs(evaluate(pair.minus, lam))) << "\n";
  }
  write_file(out_prefix + "_evidence.csv", os.str());
  Json meta{{"density", density},
            {"threshold", 2.0 / beta},
            {"magnitude_agreement", pair.magnitude_agreement},
            {"gram_det", pair.gram_det}};
  write_file(out_prefix + "_meta.json", json_text(meta));
  return 0;
}

int run_zeros(const std::string& function_file, double cluster_tol,
              const std::string& out, const std::string& plot) {
  const SIFunction f = load_function(function_file);
  LaurentSeries L;
  if (f.half_step) {
    // r_tilde coefficients of |f|^2: R has coefficients r_n = r~_n e^{-g n^2/2}
    const double g = f.params.gamma / 2.0;
    VectorXcd r(f.coeffs.size());
    for (int j = 0; j < f.coeffs.size(); ++j) {
      const double n = f.coeffs.offset + j;
      r[j] = f.coeffs.values[j] * std::exp(-g * n * n / 2.0);
    }
    L = LaurentSeries(f.coeffs.offset, r, g / 2.0);
  } else {
    const CoeffSeq d = decay_weights(f.coeffs, f.params.gamma);
    L = from_coeff_seq(d, f.params.gamma);
  }
  const ZeroSet z = strip_zeros(L, cluster_tol);
  emit(out, json_text(to_json(z)));
  if (!plot.empty()) {
    std::ostringstream os;
    os << "re,im,mult\n";
    for (const auto& w : z.zeros)
      os << format_double(w.location.real()) << ","
         << format_double(w.location.imag()) << "," << w.multiplicity << "\n";
    write_file(plot, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase retrieval in the Gaussian shift-invariant space"};
  app.require_subcommand(1);

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "write an SIFunction JSON file");
  double s_gamma = 1.0, s_beta = 1.0;
  std::string s_coeffs, s_out;
  int s_offset = 0, s_support = 0;
  unsigned s_seed = 0;
  bool s_complex = false;
  syn->add_option("--gamma", s_gamma)->required();
  syn->add_option("--beta", s_beta);
  syn->add_option("--coeffs", s_coeffs, "JSON array, e.g. [1,-2] or [[1,0],[0,1]]");
  syn->add_option("--offset", s_offset);
  syn->add_option("--seed", s_seed);
  syn->add_option("--support", s_support, "random coefficients of this support");
  syn->add_flag("--complex", s_complex);
  syn->add_option("--out", s_out);

  // sample
  auto* smp = app.add_subcommand("sample", "phaseless samples CSV");
  std::string m_function, m_points, m_out;
  double m_step = 0.0, m_noise = 0.0;
  unsigned m_seed = 0;
  std::vector<double> m_window;
  smp->add_option("--function", m_function)->required();
  smp->add_option("--points", m_points, "explicit sample locations (CSV or JSON)");
  smp->add_option("--step", m_step, "arithmetic progression step");
  smp->add_option("--window", m_window)->expected(2);
  smp->add_option("--noise", m_noise);
  smp->add_option("--seed", m_seed);
  smp->add_option("--out", m_out);

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "recover functions from samples");
  std::string r_samples, r_mode = "real", r_out, r_plot;
  double r_gamma = 1.0, r_beta = 1.0, r_tol = 1e-5;
  int r_max = 8, r_guard = 4;
  std::vector<int> r_window;
  rec->add_option("--samples", r_samples)->required();
  rec->add_option("--gamma", r_gamma)->required();
  rec->add_option("--beta", r_beta);
  rec->add_option("--mode", r_mode, "real | all | even_real");
  rec->add_option("--max-solutions", r_max);
  rec->add_option("--tol-cluster", r_tol);
  rec->add_option("--guard", r_guard);
  rec->add_option("--window", r_window, "coefficient index window")->expected(2);
  rec->add_option("--out", r_out);
  rec->add_option("--plot", r_plot);

  // counterexample
  auto* ctr = app.add_subcommand("counterexample", "sharpness pair below 2/beta");
  double c_step = 0.0, c_gamma = 1.0, c_beta = 1.0, c_guard = 4.0;
  std::vector<double> c_window{-10.0, 10.0};
  std::string c_out = "counterexample";
  ctr->add_option("--step", c_step)->required();
  ctr->add_option("--window", c_window)->expected(2);
  ctr->add_option("--gamma", c_gamma)->required();
  ctr->add_option("--beta", c_beta);
  ctr->add_option("--guard", c_guard);
  ctr->add_option("--out", c_out, "output file prefix");

  // zeros
  auto* zer = app.add_subcommand("zeros", "strip zeros of D (or R for |f|^2)");
  std::string z_function, z_out, z_plot;
  double z_tol = 1e-6;
  zer->add_option("--function", z_function)->required();
  zer->add_option("--tol-cluster", z_tol);
  zer->add_option("--out", z_out);
  zer->add_option("--plot", z_plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (syn->parsed())
      return run_synthesize(s_gamma, s_beta, s_coeffs, s_offset, s_seed,
                            s_support, s_complex, s_out);
    if (smp->parsed())
      return run_sample(m_function, m_points, m_step, m_window, m_noise, m_seed,
                        m_out);
    if (rec->parsed())
      return run_reconstruct(r_samples, r_gamma, r_beta, r_mode, r_max, r_tol,
                             r_guard, r_window, r_out, r_plot);
    if (ctr->parsed())
      return run_counterexample(c_step, c_window, c_gamma, c_beta, c_guard, c_out);
    if (zer->parsed())
      return run_zeros(z_function, z_tol, z_out, z_plot);
  } catch (const IllConditioned& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const OddMultiplicity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NotSelfAdjoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const NoNullSpace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const NegativeSpectrum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 6;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
