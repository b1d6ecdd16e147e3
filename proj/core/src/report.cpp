#include "dirlap/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>

namespace dirlap {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json id_list(const Graph& g, const std::vector<int>& subset) {
  ordered_json arr = ordered_json::array();
  for (int v : subset) arr.push_back(g.vertex(v).id.display());
  return arr;
}

}  // namespace

std::string validation_json(const Graph& g, const ValidationReport& r) {
  ordered_json j;
  j["schema"] = "validation";
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["has_window_boundary"] = g.has_window_boundary();
  j["beta_max_deviation"] = r.beta_max_deviation;
  j["beta_max_deviation_exact"] = format_rational(r.beta_max_deviation_exact);
  j["beta_ok"] = r.beta_ok;
  j["gamma_constant"] = r.gamma_constant;
  j["gamma_constant_exact"] = format_rational(r.gamma_constant_exact);
  j["degree_bound"] = r.degree_bound;
  j["connectivity_class"] = to_string(r.connectivity_class);
  j["outgoing_condition"] = r.outgoing_condition;
  j["self_loop_free"] = r.self_loop_free;
  j["tolerance"] = r.tolerance;
  return dump(j);
}

std::string sector_json(const SectorReport& s, int subset_size) {
  ordered_json j;
  j["schema"] = "sector";
  j["subset_size"] = subset_size;
  j["vertex"] = s.vertex;
  j["half_angle"] = s.half_angle;
  j["nu"] = s.nu;
  j["im_bound"] = s.im_bound;
  j["gamma"] = s.gamma;
  j["sectorial"] = s.sectorial;
  return dump(j);
}

std::string cheeger_json(const Graph& g, int omega_size, const CheegerResult& ch,
                         const SupRatio& sup, const CheegerInequality& ineq) {
  ordered_json j;
  j["schema"] = "cheeger";
  j["omega_size"] = omega_size;
  j["exact"] = ch.exact;
  j["h"] = ch.h_d;
  j["h_exact"] = format_rational(ch.h);
  j["witness"] = id_list(g, ch.witness);
  j["h_tilde"] = ch.h_tilde_d;
  j["h_tilde_exact"] = format_rational(ch.h_tilde);
  j["witness_tilde"] = id_list(g, ch.witness_tilde);
  j["rim_contact"] = ch.rim_contact;
  j["m_sup"] = sup.value_d;
  j["m_sup_exact"] = format_rational(sup.value);
  ordered_json q;
  q["nu"] = ineq.nu;
  q["lower"] = ineq.lower;
  q["product"] = ineq.product;
  q["upper"] = ineq.upper;
  q["exact_h"] = ineq.exact_h;
  q["lower_certified"] = ineq.lower_certified;
  q["holds"] = ineq.holds;
  j["inequality"] = q;
  return dump(j);
}

std::string essgap_json(const std::string& generator, const EssSpectrumEstimate& est,
                        const AbsReport* abs) {
  ordered_json j;
  j["schema"] = "essgap";
  j["generator"] = generator;
  j["ns"] = est.ns;
  j["inner_limits"] = est.inner_limits;
  j["k_monotone"] = est.k_monotone;
  j["k_converged"] = est.k_converged;
  j["window_saturated"] = est.window_saturated;
  j["limit_estimate"] = est.limit_estimate;
  j["verdict"] = est.verdict;
  if (abs) {
    ordered_json a;
    a["c_n"] = abs->c_n;
    a["margin"] = abs->margin;
    a["window_saturated"] = abs->window_saturated;
    a["verdict"] = abs->verdict;
    j["abs_condition"] = a;
  } else {
    j["abs_condition"] = nullptr;
  }
  return dump(j);
}

std::string repro_summary_json(const std::string& family, int radius,
                               const std::vector<CheckItem>& checks) {
  ordered_json j;
  j["schema"] = "repro-summary";
  j["family"] = family;
  j["radius"] = radius;
  ordered_json arr = ordered_json::array();
  bool all = true;
  for (const CheckItem& c : checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["detail"] = c.detail;
    arr.push_back(item);
    all = all && c.pass;
  }
  j["checks"] = arr;
  j["all_pass"] = all;
  return dump(j);
}

void write_range_csv(std::ostream& out, const RangeSweep& sweep) {
  out << "theta,re,im\n";
  for (std::size_t j = 0; j < sweep.thetas.size(); ++j)
    out << format_double(sweep.thetas[j]) << ',' << format_double(sweep.points[j].real()) << ','
        << format_double(sweep.points[j].imag()) << '\n';
}

void write_essgap_csv(std::ostream& out, const EssSpectrumEstimate& est) {
  out << "n,k,lambda1\n";
  for (std::size_t i = 0; i < est.ns.size(); ++i)
    for (std::size_t c = 0; c < est.k_schedule[i].size(); ++c)
      out << est.ns[i] << ',' << est.k_schedule[i][c] << ','
          << format_double(est.lambda1[i][c]) << '\n';
}

void write_trend_csv(std::ostream& out, const TrendReport& trend) {
  out << "n,h,h_tilde,M,c_n,testset_ratio\n";
  for (std::size_t i = 0; i < trend.ns.size(); ++i)
    out << trend.ns[i] << ',' << format_double(trend.h[i]) << ','
        << format_double(trend.h_tilde[i]) << ',' << format_double(trend.m_sups[i]) << ','
        << format_double(trend.c_n[i]) << ',' << format_double(trend.testset_ratio[i]) << '\n';
}

void write_lambda1_csv(std::ostream& out, const std::vector<int>& ns,
                       const std::vector<double>& lambda1, const std::vector<double>& bound) {
  out << "n,lambda1,bound\n";
  for (std::size_t i = 0; i < ns.size(); ++i)
    out << ns[i] << ',' << format_double(lambda1[i]) << ',' << format_double(bound[i]) << '\n';
}

}  // namespace dirlap
