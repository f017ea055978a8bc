#include "gausspr/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace gausspr {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json to_json(const SIFunction& f) {
  Json coeffs = Json::array();
  for (int j = 0; j < f.coeffs.size(); ++j)
    coeffs.push_back({f.coeffs.values[j].real(), f.coeffs.values[j].imag()});
  return Json{{"gamma", f.params.gamma},
              {"beta", f.params.beta},
              {"offset", f.coeffs.offset},
              {"coeffs", coeffs},
              {"half_step", f.half_step}};
}

SIFunction sifunction_from_json(const Json& j) {
  SIFunction f;
  f.params = SpaceParams(j.at("gamma").get<double>(), j.at("beta").get<double>());
  f.half_step = j.value("half_step", false);
  const auto& coeffs = j.at("coeffs");
  if (coeffs.empty()) throw Error("SIFunction JSON: empty coeffs");
  VectorXcd v(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i)
    v[static_cast<int>(i)] =
        Complex(coeffs[i].at(0).get<double>(), coeffs[i].at(1).get<double>());
  f.coeffs = CoeffSeq(j.at("offset").get<int>(), v,
                      f.half_step ? Role::r_tilde : Role::c);
  return f;
}

Json to_json(const ZeroSet& z) {
  Json zeros = Json::array();
  for (const auto& w : z.zeros) {
    const char* region = w.region == StripRegion::S_plus    ? "S_plus"
                         : w.region == StripRegion::S_zero ? "S_zero"
                                                           : "JS_plus";
    zeros.push_back({{"re", w.location.real()},
                     {"im", w.location.imag()},
                     {"mult", w.multiplicity},
                     {"region", region}});
  }
  return Json{{"zeros", zeros}, {"m0", z.m0}, {"shift", z.laurent_shift}};
}

Json to_json(const FrameBounds& fb) {
  Json j{{"lower", fb.lower}, {"upper", fb.upper}};
  if (std::isfinite(fb.condition))
    j["condition"] = fb.condition;
  else
    j["condition"] = "inf";
  return j;
}

Json to_json(const FactorSpec& spec) {
  Json v = Json::array();
  for (const auto& [idx, copies] : spec.selection) v.push_back({idx, copies});
  return Json{{"V", v},
              {"m", spec.m},
              {"r", spec.r_shift},
              {"C", {spec.constant_C.real(), spec.constant_C.imag()}}};
}

Json to_json(const RetrievalReport& rep) {
  const char* mode = rep.mode == RetrievalMode::real          ? "real"
                     : rep.mode == RetrievalMode::complex_all ? "all"
                                                              : "even_real";
  Json solutions = Json::array();
  for (const auto& f : rep.recovered) solutions.push_back(to_json(f));
  return Json{{"mode", mode},
              {"family_size", rep.family_size},
              {"solutions", solutions},
              {"residuals", rep.residuals},
              {"fit_residual", rep.fit_residual},
              {"conditioning", to_json(rep.conditioning)},
              {"free_phase_note",
               "solutions are representatives; any unimodular multiple (sign, "
               "for real mode) reproduces the same phaseless samples"}};
}

Json to_json(const SampleSet& s) {
  Json pts = Json::array();
  for (int i = 0; i < s.size(); ++i) pts.push_back(s.points[i]);
  return Json{{"points", pts}};
}

SampleSet sampleset_from_json(const Json& j) {
  const auto& pts = j.at("points");
  VectorXd v(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    v[static_cast<int>(i)] = pts[i].get<double>();
  return SampleSet(v);
}

std::string phaseless_to_csv(const PhaselessSamples& m) {
  std::ostringstream os;
  os << "lambda,magnitude\n";
  for (int i = 0; i < m.size(); ++i)
    os << format_double(m.lambdas[i]) << "," << format_double(m.magnitudes[i])
       << "\n";
  return os.str();
}

PhaselessSamples phaseless_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<double> ls, ms;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first && line.find("lambda") != std::string::npos) {
      first = false;
      continue;
    }
    first = false;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw Error("phaseless CSV: expected 'lambda,magnitude' rows");
    size_t used = 0;
    const double lam = std::stod(line.substr(0, comma), &used);
    const double mag = std::stod(line.substr(comma + 1), &used);
    if (mag < 0.0) throw Error("phaseless CSV: negative magnitude");
    ls.push_back(lam);
    ms.push_back(mag);
  }
  if (ls.empty()) throw Error("phaseless CSV: no rows");
  PhaselessSamples out;
  out.lambdas = Eigen::Map<VectorXd>(ls.data(), ls.size());
  out.magnitudes = Eigen::Map<VectorXd>(ms.data(), ms.size());
  return out;
}

std::string sampleset_to_csv(const SampleSet& s) {
  std::ostringstream os;
  for (int i = 0; i < s.size(); ++i) os << format_double(s.points[i]) << "\n";
  return os.str();
}

SampleSet sampleset_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<double> pts;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    pts.push_back(std::stod(line));
  }
  if (pts.empty()) throw Error("sample set CSV: no rows");
  return SampleSet(Eigen::Map<VectorXd>(pts.data(), pts.size()));
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open for writing: " + path);
  os << content;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace gausspr
