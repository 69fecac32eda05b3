#pragma once

#include <string>
#include <vector>

#include "extbar/predict.hpp"

namespace extbar {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  long checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
  long p = 2;
  int n = 1;
  int m = 1;
  int max_weight = 4;
  int max_s = 2;
  int max_t = 2;
};

const std::vector<std::string>& suite_names();

// Computed F_p bar homology of B^n(Gamma(F_p^m[2])) against the word prediction.
SuiteResult verify_cartan_field(long p, int n, int m, int max_weight);
// Integral bar homology against the Koszul / De Rham assembly.
SuiteResult verify_cartan_integral(int n, int m, int max_weight);
// SNF homology of single-generator Koszul and De Rham algebras against the closed forms.
SuiteResult verify_koszul(const std::vector<long>& hs, int max_weight);
// Closed twisted answers against twist_shift followed by parametrize_by_Es,
// for all nine pairs; the weight cap is min(3 p^(s+t), cap).
SuiteResult verify_twist_consistency(long p, int max_s, int max_t, int cap = 27);
// Rank-2 data against the convolution of rank-1 data.
SuiteResult verify_exponential(long p, int max_weight);
// Weight-4 tables of the bar constructions and the two integral Ext tables.
SuiteResult verify_tables();
// Differential, Leibniz, shuffle, divided power, regrading and universal
// coefficient checks on bounded boxes.
SuiteResult verify_structure(int max_weight);

SuiteResult run_suite(const std::string& name, const VerifyOptions& options);

PoincareTable convolve(const PoincareTable& a, const PoincareTable& b, int max_weight);

}  // namespace extbar
