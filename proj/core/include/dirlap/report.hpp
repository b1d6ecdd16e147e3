#pragma once

#include "dirlap/cheeger.hpp"
#include "dirlap/spectra.hpp"
#include "dirlap/validate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dirlap {

// 17 significant digits: enough to round-trip any double, so re-runs are
// byte-identical.
std::string format_double(double v);

std::string validation_json(const Graph& g, const ValidationReport& r);
std::string sector_json(const SectorReport& s, int subset_size);
std::string cheeger_json(const Graph& g, int omega_size, const CheegerResult& ch,
                         const SupRatio& sup, const CheegerInequality& ineq);
std::string essgap_json(const std::string& generator, const EssSpectrumEstimate& est,
                        const AbsReport* abs);

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string repro_summary_json(const std::string& family, int radius,
                               const std::vector<CheckItem>& checks);

// CSV columns are fixed: downstream notebooks key on the headers.
void write_range_csv(std::ostream& out, const RangeSweep& sweep);            // theta,re,im
void write_essgap_csv(std::ostream& out, const EssSpectrumEstimate& est);    // n,k,lambda1
void write_trend_csv(std::ostream& out, const TrendReport& trend);  // n,h,h_tilde,M,c_n,testset_ratio
void write_lambda1_csv(std::ostream& out, const std::vector<int>& ns,
                       const std::vector<double>& lambda1,
                       const std::vector<double>& bound);                    // n,lambda1,bound

}  // namespace dirlap
