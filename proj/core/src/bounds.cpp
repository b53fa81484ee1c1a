#include "energylab/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "energylab/spectral.hpp"

namespace energylab {

double km_bound(std::size_t n, std::size_t k) {
  if (k < 1 || k >= n) throw BoundDomainError("km_bound: need 1 <= k < n");
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  return kd + std::sqrt(kd * (nd - kd) * (nd - 1.0));
}

bool dhk_applicable(std::size_t n, std::size_t k) { return k >= 2 && n >= k * k - k + 1; }

double dhk_bound(std::size_t n, std::size_t k) {
  if (!dhk_applicable(n, k)) throw BoundDomainError("dhk_bound: need k >= 2 and n >= k^2 - k + 1");
  const auto kd = static_cast<double>(k);
  const double root = std::sqrt(kd - 1.0);
  return (root + 1.0 / (kd + root)) * static_cast<double>(n);
}

ComplementGap complement_gap_bounds(const Graph& g) {
  const Graph c = complement(g);
  ComplementGap out;
  const auto sg = graph_spectrum(g);
  const auto sc = graph_spectrum(c);
  out.energy = sg.sum_abs();
  out.complement_energy = sc.sum_abs();
  out.gap = out.energy - out.complement_energy;
  out.bound_2n2 = 2.0 * static_cast<double>(g.order()) - 2.0;
  out.bound_weyl_fwd = 2.0 * sg.largest();
  out.bound_weyl_rev = 2.0 * sc.largest();
  out.holds = std::abs(out.gap) <= out.bound_2n2 + bound_slack(out.bound_2n2) &&
              out.gap <= out.bound_weyl_fwd + bound_slack(out.bound_weyl_fwd) &&
              -out.gap <= out.bound_weyl_rev + bound_slack(out.bound_weyl_rev);
  out.attains_2n2 = std::abs(std::abs(out.gap) - out.bound_2n2) <= 1e-8;
  return out;
}

ConjectureTargets conjecture_targets(std::size_t n, std::optional<std::size_t> k, double c) {
  ConjectureTargets t;
  const auto nd = static_cast<double>(n);
  if (k && *k >= 2 && *k < n) {
    const auto kd = static_cast<double>(*k);
    t.sqrt_k_n = std::sqrt(kd) * nd;
    if (kd > std::sqrt(nd)) t.dense_regular = std::sqrt(kd * (nd - kd) * nd);
  }
  if (c > 0.0 && c <= 0.5) t.density = std::sqrt(c * (1.0 - c)) * std::pow(nd, 1.5);
  return t;
}

RandomRegularExpectation random_regular_expectations(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n) throw BoundDomainError("random_regular_expectations: need 2 <= k < n");
  const auto nd = static_cast<double>(n);
  const auto kd = static_cast<double>(k);
  RandomRegularExpectation e;
  e.fixed_k = nd * mckay_energy_const(static_cast<int>(k));
  e.growing_k = 8.0 / (3.0 * std::numbers::pi) * std::sqrt(kd * (nd - kd) * nd);
  e.ratio_to_km = e.growing_k / km_bound(n, k);
  return e;
}

EnergyReport energy_report(const Graph& g) {
  EnergyReport r;
  r.n = g.order();
  r.m = g.size();
  const auto spec = graph_spectrum(g);
  r.energy = spec.sum_abs();
  r.lambda1 = spec.largest();
  r.degree_deviation = degree_deviation(g);
  const auto nd = static_cast<double>(r.n);
  r.density = static_cast<double>(r.m) / (nd * nd / 2.0);
  const long kd = g.regular_degree();
  if (kd >= 0) r.k = static_cast<std::size_t>(kd);
  if (r.k && *r.k >= 1 && *r.k < r.n) {
    r.km_bound = km_bound(r.n, *r.k);
    r.km_ratio = r.energy / *r.km_bound;
    if (dhk_applicable(r.n, *r.k)) {
      r.dhk_bound = dhk_bound(r.n, *r.k);
      r.dhk_ratio = r.energy / *r.dhk_bound;
    }
    if (*r.k >= 2) {
      const auto e = random_regular_expectations(r.n, *r.k);
      r.mckay_expected = e.fixed_k;
      r.mckay_ratio = r.energy / e.fixed_k;
      r.semicircle_expected = e.growing_k;
      r.semicircle_ratio = r.energy / e.growing_k;
    }
  }
  r.conjectures = conjecture_targets(r.n, r.k, r.density);
  return r;
}

namespace {

nlohmann::ordered_json report_json(const EnergyReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = r.n;
  j["m"] = r.m;
  j["regular"] = r.k.has_value();
  if (r.k) j["k"] = *r.k;
  j["energy"] = r.energy;
  j["lambda1"] = r.lambda1;
  j["degree_deviation"] = r.degree_deviation.str();
  j["density"] = r.density;
  auto put = [&j](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  put("km_bound", r.km_bound);
  put("km_ratio", r.km_ratio);
  put("dhk_bound", r.dhk_bound);
  put("dhk_ratio", r.dhk_ratio);
  put("mckay_expected", r.mckay_expected);
  put("mckay_ratio", r.mckay_ratio);
  put("semicircle_expected", r.semicircle_expected);
  put("semicircle_ratio", r.semicircle_ratio);
  nlohmann::ordered_json conj = nlohmann::ordered_json::object();
  auto target = [&](const char* key, const std::optional<double>& v) {
    if (v) conj[key] = {{"target", *v}, {"ratio", r.energy / *v}};
  };
  target("sqrt_k_n", r.conjectures.sqrt_k_n);
  target("dense_regular", r.conjectures.dense_regular);
  target("density", r.conjectures.density);
  j["conjecture_targets"] = conj;
  return j;
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os.precision(17);
  os << *v;
  return os.str();
}

}  // namespace

std::string to_json(const EnergyReport& r, int indent) { return report_json(r).dump(indent); }

std::string energy_report_csv_header() {
  return "n,m,k,energy,lambda1,degree_deviation,density,km_bound,km_ratio,dhk_bound,dhk_ratio,"
         "mckay_expected,semicircle_expected";
}

std::string to_csv_row(const EnergyReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << r.n << ',' << r.m << ',';
  if (r.k) os << *r.k;
  os << ',' << r.energy << ',' << r.lambda1 << ',' << r.degree_deviation.str() << ',' << r.density << ','
     << cell(r.km_bound) << ',' << cell(r.km_ratio) << ',' << cell(r.dhk_bound) << ',' << cell(r.dhk_ratio) << ','
     << cell(r.mckay_expected) << ',' << cell(r.semicircle_expected);
  return os.str();
}

}  // namespace energylab
