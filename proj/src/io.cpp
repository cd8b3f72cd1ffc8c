#include "lpqmf/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "lpqmf/errors.hpp"

namespace lpqmf {

namespace {

using nlohmann::json;

json parsed(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ValidationError("document: malformed JSON");
  return j;
}

template <typename T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw ValidationError(std::string("document: missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("document: field '") + name + "' has the wrong type");
  }
}

}  // namespace

FilterDocument make_filter_document(const RationalFilter& h, const PreimageSpec& spec,
                                    std::string provenance) {
  FilterDocument doc;
  doc.m = spec.m;
  doc.sign_at_i = spec.sign_at_i;
  for (const Complex& l : spec.lambdas) doc.lambdas.push_back({l.real(), l.imag()});
  doc.numerator = h.num().coeffs();
  doc.denominator = h.den().coeffs();
  doc.provenance = std::move(provenance);
  return doc;
}

RationalFilter filter_from_document(const FilterDocument& doc) {
  if (doc.kind != "0-sym") throw ValidationError("document: unknown kind '" + doc.kind + "'");
  if (doc.numerator.empty() || doc.denominator.empty())
    throw ValidationError("document: empty coefficient array");
  RationalFilter h{RealPoly(doc.numerator), RealPoly(doc.denominator)};
  validate_filter(h);
  if (std::abs(h.eval(1.0) - 1.0) > 1e-12)
    throw ValidationError("document: filter is not normalized at z = 1");
  return h;
}

std::string to_json(const FilterDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["kind"] = doc.kind;
  j["m"] = doc.m;
  j["sign_at_i"] = doc.sign_at_i;
  json ls = json::array();
  for (const auto& l : doc.lambdas) ls.push_back({l[0], l[1]});
  j["lambdas"] = ls;
  j["numerator"] = doc.numerator;
  j["denominator"] = doc.denominator;
  j["provenance"] = doc.provenance;
  return j.dump(2) + "\n";
}

FilterDocument filter_document_from_json(const std::string& text) {
  json j = parsed(text);
  FilterDocument doc;
  doc.version = field<int>(j, "version");
  doc.kind = field<std::string>(j, "kind");
  doc.m = field<int>(j, "m");
  doc.sign_at_i = field<int>(j, "sign_at_i");
  for (const auto& l : field<std::vector<std::vector<double>>>(j, "lambdas")) {
    if (l.size() != 2) throw ValidationError("document: lambda entries must be [re, im]");
    doc.lambdas.push_back({l[0], l[1]});
  }
  doc.numerator = field<std::vector<double>>(j, "numerator");
  doc.denominator = field<std::vector<double>>(j, "denominator");
  doc.provenance = field<std::string>(j, "provenance");
  return doc;
}

CascadeDocument make_cascade_document(const FirCascade& f) {
  CascadeDocument doc;
  doc.epsilon = f.epsilon;
  doc.achieved = f.achieved;
  doc.shift_n = f.shift_n;
  doc.prefactor = f.prefactor.coeffs();
  for (const auto& factor : f.factors) doc.factors.push_back({factor.level, factor.f.coeffs()});
  return doc;
}

FirCascade cascade_from_document(const CascadeDocument& doc) {
  FirCascade f;
  f.epsilon = doc.epsilon;
  f.achieved = doc.achieved;
  f.shift_n = doc.shift_n;
  if (doc.prefactor.empty()) throw ValidationError("document: empty cascade prefactor");
  f.prefactor = RealPoly::raw(doc.prefactor);
  for (const auto& factor : doc.factors) {
    if (factor.level < 1) throw ValidationError("document: cascade factor level must be >= 1");
    if (factor.coeffs.empty()) throw ValidationError("document: empty cascade factor");
    RealPoly p = RealPoly::raw(factor.coeffs);
    if (!is_palindromic(p, 1e-10))
      throw ValidationError("document: cascade factor is not palindromic");
    f.factors.push_back({factor.level, std::move(p)});
  }
  if (!(f.achieved <= f.epsilon))
    throw ValidationError("document: cascade accuracy certificate violated (achieved > epsilon)");
  return f;
}

std::string to_json(const CascadeDocument& doc) {
  json j;
  j["version"] = doc.version;
  j["epsilon"] = doc.epsilon;
  j["achieved"] = doc.achieved;
  j["shift_N"] = doc.shift_n;
  j["P"] = doc.prefactor;
  json fs = json::array();
  for (const auto& f : doc.factors) fs.push_back({{"level", f.level}, {"coeffs", f.coeffs}});
  j["factors"] = fs;
  return j.dump(2) + "\n";
}

CascadeDocument cascade_document_from_json(const std::string& text) {
  json j = parsed(text);
  CascadeDocument doc;
  doc.version = field<int>(j, "version");
  doc.epsilon = field<double>(j, "epsilon");
  doc.achieved = field<double>(j, "achieved");
  doc.shift_n = field<int>(j, "shift_N");
  doc.prefactor = field<std::vector<double>>(j, "P");
  if (!j.contains("factors") || !j.at("factors").is_array())
    throw ValidationError("document: missing field 'factors'");
  for (const auto& fj : j.at("factors")) {
    CascadeDocument::Factor f;
    f.level = field<int>(fj, "level");
    f.coeffs = field<std::vector<double>>(fj, "coeffs");
    doc.factors.push_back(std::move(f));
  }
  return doc;
}

std::string to_json(const FilterReport& report) {
  json j;
  j["qmf_residual"] = report.qmf_residual;
  j["sym_residual"] = report.sym_residual;
  j["wavelet_moments"] = report.wavelet_moments;
  j["scaling_moments"] = report.scaling_moments;
  j["cohen"] = {{"pass", report.cohen.pass}};
  if (!report.cohen.pass) j["cohen"]["witness"] = report.cohen.witness;
  j["min_response"] = report.min_response;
  j["poles_imaginary"] = report.poles_imaginary;
  j["stopband_zeros"] = report.stopband_zeros;
  j["passes"] = report.passes();
  return j.dump(2) + "\n";
}

void write_csv(const SampledGrid& grid, std::ostream& out) {
  out << "x,value\n";
  char buf[64];
  for (size_t i = 0; i < grid.values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", grid.x_at(static_cast<int>(i)), grid.values[i]);
    out << buf;
  }
}

std::vector<double> read_signal_csv(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      size_t pos = 0;
      double v = std::stod(line, &pos);
      samples.push_back(v);
    } catch (const std::exception&) {
      if (!first) throw ValidationError("signal csv: non-numeric row");
    }
    first = false;
  }
  if (samples.empty()) throw ValidationError("signal csv: no samples");
  return samples;
}

}  // namespace lpqmf
