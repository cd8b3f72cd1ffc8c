#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpqmf/analysis.hpp"
#include "lpqmf/cascade.hpp"
#include "lpqmf/design.hpp"
#include "lpqmf/rational.hpp"
#include "lpqmf/synthesis.hpp"

namespace lpqmf {

/// On-disk form of a designed filter.  Round trips bit-for-bit; the
/// coefficient arrays are re-validated against the filter invariants on
/// load.
struct FilterDocument {
  int version = 1;
  std::string kind = "0-sym";
  int m = 1;
  int sign_at_i = 1;
  std::vector<std::array<double, 2>> lambdas;
  std::vector<double> numerator;
  std::vector<double> denominator;
  std::string provenance;
};

/// On-disk form of a FIR cascade, factor table included.
struct CascadeDocument {
  int version = 1;
  double epsilon = 0.0;
  double achieved = 0.0;
  int shift_n = 0;
  std::vector<double> prefactor;
  struct Factor {
    int level = 1;
    std::vector<double> coeffs;
  };
  std::vector<Factor> factors;
};

FilterDocument make_filter_document(const RationalFilter& h, const PreimageSpec& spec,
                                    std::string provenance);
/// Validates and rebuilds the filter; throws ValidationError on malformed or
/// invariant-violating documents.
RationalFilter filter_from_document(const FilterDocument& doc);

std::string to_json(const FilterDocument& doc);
FilterDocument filter_document_from_json(const std::string& text);

CascadeDocument make_cascade_document(const FirCascade& f);
FirCascade cascade_from_document(const CascadeDocument& doc);
std::string to_json(const CascadeDocument& doc);
CascadeDocument cascade_document_from_json(const std::string& text);

std::string to_json(const FilterReport& report);

/// Two-column CSV with header "x,value", 17 significant digits, one row per
/// sample, newline-terminated.
void write_csv(const SampledGrid& grid, std::ostream& out);

/// Single-column CSV of samples; a non-numeric first line is skipped.
std::vector<double> read_signal_csv(std::istream& in);

}  // namespace lpqmf
