#include "dz/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace dz::io {

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json number_json(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(number(x));
}

void write_grid_csv(std::ostream& os, const std::vector<GridValue>& values) {
  os << kCsvVersion << "\nre_s,im_s,re_f,im_f,est_err\n";
  for (const auto& v : values)
    os << number(v.s.real()) << ',' << number(v.s.imag()) << ',' << number(v.f.value.real()) << ','
       << number(v.f.value.imag()) << ',' << number(v.f.error_estimate) << '\n';
}

void write_residual_csv(std::ostream& os, const ResidualSweep& sweep) {
  os << kCsvVersion << "\nre_s,im_s,residual\n";
  for (const auto& p : sweep.points)
    os << number(p.s.real()) << ',' << number(p.s.imag()) << ',' << number(p.residual) << '\n';
}

void write_hardy_csv(std::ostream& os, const std::vector<HardySample>& samples) {
  os << kCsvVersion << "\nt,Z,est_err\n";
  for (const auto& z : samples) os << number(z.t) << ',' << number(z.z) << ',' << number(z.error_estimate) << '\n';
}

void write_zero_csv(std::ostream& os, const std::vector<ZeroRecord>& zeros) {
  os << kCsvVersion << "\nt,sigma,kind,residual\n";
  for (const auto& z : zeros)
    os << number(z.t) << ',' << number(z.sigma) << ',' << to_string(z.kind) << ',' << number(z.residual) << '\n';
}

void write_trajectory_csv(std::ostream& os, const std::vector<Trajectory>& trajectories) {
  os << kCsvVersion << "\ntrajectory_id,tau,t,abs_phi\n";
  for (std::size_t id = 0; id < trajectories.size(); ++id)
    for (const auto& s : trajectories[id].samples)
      os << id << ',' << number(s.tau) << ',' << number(s.t) << ',' << number(s.abs_phi) << '\n';
}

json to_json(const Rect& r) {
  return json::array({number_json(r.sigma_lo), number_json(r.sigma_hi), number_json(r.t_lo), number_json(r.t_hi)});
}

json to_json(const BoxCountReport& report) {
  json j;
  j["rect"] = to_json(report.rect);
  j["winding"] = report.winding_count;
  j["line_count"] = report.line_count < 0 ? json(nullptr) : json(report.line_count);
  j["boundary_min_modulus"] = number_json(report.boundary_min_modulus);
  j["perturbations"] = report.perturbations;
  if (report.line_count >= 0) j["verdict"] = report.winding_count == report.line_count ? "PASS" : "FAIL";
  return j;
}

json to_json(const LineVerification& v) {
  json j = to_json(v.report);
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  j["discrepancy"] = v.discrepancy ? to_json(*v.discrepancy) : json(nullptr);
  return j;
}

json to_json(const ZeroRecord& z) {
  return {{"t", number_json(z.t)},
          {"sigma", number_json(z.sigma)},
          {"kind", to_string(z.kind)},
          {"residual", number_json(z.residual)}};
}

json to_json(const Trajectory& tr) {
  json j;
  j["start_t"] = number_json(tr.start_zero.t);
  j["start_kind"] = to_string(tr.start_zero.kind);
  j["end_t"] = tr.end_zero ? number_json(tr.end_zero->t) : json(nullptr);
  j["end_residual"] = tr.end_zero ? number_json(tr.end_zero->residual) : json(nullptr);
  j["status"] = to_string(tr.status);
  j["last_tau"] = number_json(tr.samples.back().tau);
  j["last_t"] = number_json(tr.samples.back().t);
  j["reversals"] = tr.reversals;
  j["halvings"] = tr.halvings;
  j["max_step"] = number_json(tr.max_step);
  return j;
}

json to_json(const PairingReport& p) {
  json j;
  j["interval"] = json::array({number_json(p.interval.lo), number_json(p.interval.hi)});
  j["extended"] = json::array({number_json(p.extended.lo), number_json(p.extended.hi)});
  j["n0"] = p.n0;
  j["n1"] = p.n1;
  j["merged"] = p.merged;
  j["lost"] = p.lost;
  json pairs = json::array();
  for (const auto& [a, b] : p.pairs) pairs.push_back(json::array({number_json(a.t), number_json(b.t)}));
  j["pairs"] = pairs;
  json unmatched = json::array();
  for (const auto& z : p.unmatched_f1) unmatched.push_back(number_json(z.t));
  j["unmatched_f1"] = unmatched;
  j["verdict"] = p.counts_within_one() ? "PASS" : "FAIL";
  return j;
}

json catalog_json(const std::vector<CatalogEntry>& entries) {
  json out = json::array();
  for (const auto& e : entries) {
    out.push_back({{"q", e.q},
                   {"label", e.character.label()},
                   {"parity", e.classification.parity},
                   {"conductor", e.classification.conductor},
                   {"primitive", e.classification.is_primitive},
                   {"epsilon_re", number_json(e.root.epsilon.real())},
                   {"epsilon_im", number_json(e.root.epsilon.imag())}});
  }
  return out;
}

void write_catalog_table(std::ostream& os, const std::vector<CatalogEntry>& entries) {
  char line[128];
  std::snprintf(line, sizeof line, "%5s %6s %7s %10s %10s %14s %14s\n", "q", "label", "parity", "conductor",
                "primitive", "epsilon_re", "epsilon_im");
  os << line;
  for (const auto& e : entries) {
    std::snprintf(line, sizeof line, "%5d %6d %7s %10d %10s %14s %14s\n", e.q, e.character.label(),
                  e.classification.parity == 0 ? "even" : "odd", e.classification.conductor,
                  e.classification.is_primitive ? "yes" : "no", number(e.root.epsilon.real()).c_str(),
                  number(e.root.epsilon.imag()).c_str());
    os << line;
  }
}

}  // namespace dz::io
