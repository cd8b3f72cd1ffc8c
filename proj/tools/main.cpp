#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpqmf/analysis.hpp"
#include "lpqmf/cascade.hpp"
#include "lpqmf/design.hpp"
#include "lpqmf/errors.hpp"
#include "lpqmf/io.hpp"
#include "lpqmf/synthesis.hpp"

namespace {

using lpqmf::Complex;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lpqmf::ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lpqmf::ValidationError("cannot write '" + path + "'");
  out << text;
}

int parse_sign(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw lpqmf::ValidationError("sign must be +1 or -1, got '" + text + "'");
}

// Angles accept a trailing "pi" multiplier, e.g. "0.6pi"; otherwise radians.
double parse_angle(const std::string& text) {
  std::string body = text;
  double mult = 1.0;
  if (body.size() > 2 && body.substr(body.size() - 2) == "pi") {
    body = body.substr(0, body.size() - 2);
    mult = std::numbers::pi;
  }
  size_t pos = 0;
  double value = std::stod(body, &pos);
  if (pos != body.size()) throw lpqmf::ValidationError("bad angle '" + text + "'");
  return value * mult;
}

// Lambdas accept "re,im" or "circ:t" meaning e^{i pi t}.
Complex parse_lambda(const std::string& text) {
  if (text.rfind("circ:", 0) == 0) {
    double t = std::stod(text.substr(5));
    return std::polar(1.0, std::numbers::pi * t);
  }
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw lpqmf::ValidationError("lambda must be 're,im' or 'circ:t', got '" + text + "'");
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

void emit_filter(const lpqmf::RationalFilter& h, const lpqmf::PreimageSpec& spec,
                 const std::string& provenance, const std::string& out_path) {
  lpqmf::FilterDocument doc = lpqmf::make_filter_document(h, spec, provenance);
  write_file(out_path, lpqmf::to_json(doc));
}

lpqmf::RationalFilter load_filter(const std::string& path) {
  return lpqmf::filter_from_document(lpqmf::filter_document_from_json(read_file(path)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"design, verification and FIR deployment of linear-phase IIR quadrature mirror filters"};
  app.require_subcommand(1);

  // maxflat
  auto* cmd_maxflat = app.add_subcommand("maxflat", "maximally flat filter of order 4n");
  int mf_n = 1, mf_delta = 0;
  std::string mf_out = "filter.json";
  cmd_maxflat->add_option("--n", mf_n, "half the number of zeros at -1")->required();
  cmd_maxflat->add_option("--delta", mf_delta, "0 or 1, fixes the sign at i");
  cmd_maxflat->add_option("--out", mf_out, "output document path");

  // design
  auto* cmd_design = app.add_subcommand("design", "filter from preimages of one");
  int d_m = 1;
  std::string d_sign = "+1", d_out = "filter.json";
  std::vector<std::string> d_lambdas;
  cmd_design->add_option("--m", d_m, "half the multiplicity of the zero at -1")->required();
  cmd_design->add_option("--sign", d_sign, "sign of H at i (+1 or -1)");
  cmd_design->add_option("--lambda", d_lambdas, "preimage of one ('re,im' or 'circ:t')");
  cmd_design->add_option("--out", d_out, "output document path");

  // stopband
  auto* cmd_stopband = app.add_subcommand("stopband", "filter with prescribed stopband zeros");
  int s_m = 1;
  std::string s_sign = "+1", s_out = "filter.json";
  std::vector<std::string> s_thetas, s_lambdas;
  cmd_stopband->add_option("--m", s_m, "half the multiplicity of the zero at -1")->required();
  cmd_stopband->add_option("--sign", s_sign, "sign of H at i (+1 or -1)");
  cmd_stopband->add_option("--theta", s_thetas, "stopband zero angle in (pi/2, pi), e.g. 0.6pi");
  cmd_stopband->add_option("--lambda", s_lambdas, "extra preimage in the right half plane");
  cmd_stopband->add_option("--out", s_out, "output document path");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "verification report for a filter document");
  std::string v_path;
  int v_grid = 4096, v_max_cycle = 16;
  cmd_verify->add_option("filter", v_path, "filter document path")->required();
  cmd_verify->add_option("--grid", v_grid, "evaluation grid size");
  cmd_verify->add_option("--cohen-max-cycle", v_max_cycle, "max doubling-cycle length searched");

  // fir
  auto* cmd_fir = app.add_subcommand("fir", "FIR cascade approximation of a filter");
  std::string f_path, f_out = "cascade.json";
  double f_eps = 1e-8;
  cmd_fir->add_option("filter", f_path, "filter document path")->required();
  cmd_fir->add_option("--eps", f_eps, "relative accuracy on the unit circle");
  cmd_fir->add_option("--out", f_out, "output document path");

  // sample
  auto* cmd_sample = app.add_subcommand("sample", "scaling/wavelet samples from a cascade");
  std::string smp_path, smp_function = "scaling", smp_out = "samples.csv";
  int smp_levels = 8;
  cmd_sample->add_option("cascade", smp_path, "cascade document path")->required();
  cmd_sample->add_option("--function", smp_function, "'scaling' or 'wavelet'");
  cmd_sample->add_option("--levels", smp_levels, "dyadic refinement levels");
  cmd_sample->add_option("--out", smp_out, "output CSV path");

  // freq
  auto* cmd_freq = app.add_subcommand("freq", "frequency response grid");
  std::string q_path, q_out = "freq.csv";
  int q_points = 1024;
  cmd_freq->add_option("filter", q_path, "filter document path")->required();
  cmd_freq->add_option("--points", q_points, "number of grid points");
  cmd_freq->add_option("--out", q_out, "output CSV path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_maxflat) {
      lpqmf::MaxflatId id{mf_n, mf_delta};
      lpqmf::RationalFilter h = lpqmf::maxflat(id);
      lpqmf::PreimageSpec spec{mf_n, mf_delta % 2 == 0 ? 1 : -1, {}};
      std::ostringstream prov;
      prov << "maxflat --n " << mf_n << " --delta " << mf_delta;
      emit_filter(h, spec, prov.str(), mf_out);
    } else if (*cmd_design) {
      lpqmf::PreimageSpec spec;
      spec.m = d_m;
      spec.sign_at_i = parse_sign(d_sign);
      for (const auto& text : d_lambdas) spec.lambdas.push_back(parse_lambda(text));
      lpqmf::RationalFilter h = lpqmf::build_from_preimages(spec);
      std::ostringstream prov;
      prov << "design --m " << d_m << " --sign " << d_sign;
      for (const auto& text : d_lambdas) prov << " --lambda " << text;
      emit_filter(h, lpqmf::canonicalized(spec), prov.str(), d_out);
    } else if (*cmd_stopband) {
      std::vector<double> thetas;
      for (const auto& text : s_thetas) thetas.push_back(parse_angle(text));
      std::vector<Complex> extra;
      for (const auto& text : s_lambdas) extra.push_back(parse_lambda(text));
      int sign = parse_sign(s_sign);
      lpqmf::PreimageSpec spec = lpqmf::stopband_spec(s_m, sign, thetas, extra);
      lpqmf::RationalFilter h = lpqmf::build_from_preimages(spec);
      std::ostringstream prov;
      prov << "stopband --m " << s_m << " --sign " << s_sign;
      for (const auto& text : s_thetas) prov << " --theta " << text;
      for (const auto& text : s_lambdas) prov << " --lambda " << text;
      emit_filter(h, lpqmf::canonicalized(spec), prov.str(), s_out);
    } else if (*cmd_verify) {
      lpqmf::RationalFilter h = load_filter(v_path);
      lpqmf::FilterReport report = lpqmf::analyze(h, v_grid, v_max_cycle);
      std::cout << lpqmf::to_json(report);
      return report.passes() ? 0 : 2;
    } else if (*cmd_fir) {
      lpqmf::RationalFilter h = load_filter(f_path);
      lpqmf::FirCascade cascade = lpqmf::fir_approximate(h, f_eps);
      write_file(f_out, lpqmf::to_json(lpqmf::make_cascade_document(cascade)));
    } else if (*cmd_sample) {
      lpqmf::FirCascade cascade =
          lpqmf::cascade_from_document(lpqmf::cascade_document_from_json(read_file(smp_path)));
      lpqmf::SampledGrid grid;
      if (smp_function == "scaling")
        grid = lpqmf::scaling_samples(cascade, smp_levels);
      else if (smp_function == "wavelet")
        grid = lpqmf::wavelet_samples(cascade, smp_levels);
      else
        throw lpqmf::ValidationError("--function must be 'scaling' or 'wavelet'");
      std::ofstream out(smp_out, std::ios::binary);
      if (!out) throw lpqmf::ValidationError("cannot write '" + smp_out + "'");
      lpqmf::write_csv(grid, out);
    } else if (*cmd_freq) {
      lpqmf::RationalFilter h = load_filter(q_path);
      lpqmf::SampledGrid grid = lpqmf::freq_response(h, q_points);
      std::ofstream out(q_out, std::ios::binary);
      if (!out) throw lpqmf::ValidationError("cannot write '" + q_out + "'");
      lpqmf::write_csv(grid, out);
    }
  } catch (const lpqmf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
