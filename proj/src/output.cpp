// Copyright 2026 The vqelab Authors.
// Licensed under the Apache License, Version 2.0. See LICENSE in the project
// root for license information.

#include <filesystem>
#include <iomanip>
#include <ios>

#include "vqelab/experiments.hpp"

namespace vqelab {

namespace {

// Restores the stream's formatting on scope exit.
class CsvFormat {
 public:
  explicit CsvFormat(std::ostream& os)
      : os_(os), flags_(os.flags()), precision_(os.precision()) {
    os_.unsetf(std::ios::floatfield);
    os_ << std::setprecision(17);
  }
  ~CsvFormat() {
    os_.flags(flags_);
    os_.precision(precision_);
  }
  CsvFormat(const CsvFormat&) = delete;
  CsvFormat& operator=(const CsvFormat&) = delete;

 private:
  std::ostream& os_;
  std::ios::fmtflags flags_;
  std::streamsize precision_;
};

}  // namespace

void write_convergence_csv(std::ostream& os,
                           const std::vector<ConvergenceRecord>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,e_vqe,e_exact,abs_error,infidelity,iterations\n";
  for (const auto& r : rows) {
    os << r.n_qubits << ',' << r.layers << ',' << r.e_vqe << ',' << r.e_exact
       << ',' << r.abs_error << ',' << r.infidelity << ',' << r.iterations
       << '\n';
  }
}

void write_correlation_csv(std::ostream& os,
                           const std::vector<CorrelationRecord>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,m,c_vqe,c_exact\n";
  for (const auto& r : rows) {
    os << r.n_qubits << ',' << r.layers << ',' << r.m << ',' << r.c_vqe << ','
       << r.c_exact << '\n';
  }
}

void write_correlation_summary_csv(std::ostream& os,
                                   const std::vector<CorrelationSummary>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,rel_error\n";
  for (const auto& r : rows) {
    os << r.n_qubits << ',' << r.layers << ',' << r.rel_error << '\n';
  }
}

void write_plateau_raw_csv(std::ostream& os,
                           const std::vector<PlateauSample>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,sample,param_index,grad\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.gradient.size(); ++k) {
      os << r.n_qubits << ',' << r.layers << ',' << r.sample << ',' << k << ','
         << r.gradient[k] << '\n';
    }
  }
}

void write_plateau_aggregate_csv(std::ostream& os,
                                 const std::vector<PlateauAggregate>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,variance,samples_used\n";
  for (const auto& r : rows) {
    os << r.n_qubits << ',' << r.layers << ',' << r.variance << ','
       << r.samples_used << '\n';
  }
}

void write_plateau_components_csv(std::ostream& os,
                                  const std::vector<PlateauAggregate>& rows) {
  CsvFormat fmt(os);
  os << "n,layers,param_index,variance\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.component_variance.size(); ++k) {
      os << r.n_qubits << ',' << r.layers << ',' << k << ','
         << r.component_variance[k] << '\n';
    }
  }
}

std::string sibling_path(const std::string& path, const std::string& suffix,
                         const std::string& extension) {
  std::filesystem::path p(path);
  const auto stem = p.stem().string();
  return (p.parent_path() / (stem + suffix + extension)).string();
}

}  // namespace vqelab
