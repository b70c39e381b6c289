#include "tables.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "common.hpp"
#include "lrcdec/descriptor.hpp"
#include "lrcdec/errors.hpp"
#include "lrcdec/listdec.hpp"

namespace lrcdec::tools {

namespace {

std::vector<std::int64_t> split_ints(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const long long v = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(v);
  }
  return out;
}

std::string opt_int(const std::optional<BigInt>& v) { return v ? to_string(*v) : std::string(); }

json exact(const Rational& r) { return {{"exact", to_string(r)}, {"value", to_double(r)}}; }

}  // namespace

ShapeArg parse_shape(const std::string& text) {
  ShapeArg a{text, std::nullopt, ""};
  std::vector<std::int64_t> v;
  try {
    v = split_ints(text);
  } catch (const std::exception&) {
    a.error = "shape '" + text + "' is not a comma-separated integer list";
    return a;
  }
  if (v.size() != 4 && v.size() != 5) {
    a.error = "shape '" + text + "' needs n,k,r,rho[,q]";
    return a;
  }
  try {
    auto s = radii::CodeShape::lrc(v[0], v[1], v[2], v[3], v.size() == 5 ? v[4] : 0);
    radii::validate(s);
    a.shape = s;
  } catch (const std::exception& e) {
    a.error = "shape '" + text + "': " + e.what();
  }
  return a;
}

Emitted radii_rows(const std::vector<ShapeArg>& shapes, std::int64_t ell) {
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  Emitted out;
  out.csv =
      "n,k,r,rho,q,d,ell,tau_J_l,tau_J,t_J,t_l,sigma,tau_g,t_g,bar_t_g,L_J,L_g,L_g_improved,tau_irs,tau_g_l,t_g_l,"
      "error\n";
  out.data = json::array();
  for (const ShapeArg& a : shapes) {
    std::string err = a.error;
    if (a.shape) {
      const auto& s = *a.shape;
      try {
        const auto rep = radii::report(s, ell);
        std::ostringstream row;
        row << s.n << ',' << s.k << ',' << s.r << ',' << s.rho << ',' << s.q << ',' << s.d << ',' << ell << ','
            << num(rep.tau_J_local) << ',' << num(rep.tau_J) << ',' << rep.t_J << ',' << rep.t_l << ','
            << num(to_double(rep.sigma)) << ',' << num(rep.tau_g) << ',' << rep.t_g << ',' << rep.bar_t_g << ','
            << opt_int(rep.L_johnson) << ',' << opt_int(rep.bounds.basic) << ',' << opt_int(rep.bounds.improved)
            << ',' << num(rep.tau_irs) << ',' << num(rep.tau_g_interleaved) << ',' << rep.t_g_interleaved << ",\n";
        out.csv += row.str();
        out.data.push_back(io::to_json(rep));
        continue;
      } catch (const ConfigError& e) {
        err = "shape '" + a.text + "': " + e.what();
      } catch (const DomainError& e) {
        err = "shape '" + a.text + "': " + e.what();
      }
    }
    out.warnings.push_back(err);
    std::string cell = err;
    std::replace(cell.begin(), cell.end(), '"', '\'');
    out.csv += std::string(21, ',') + '"' + cell + "\"\n";
    out.data.push_back({{"input", a.text}, {"error", err}});
  }
  return out;
}

Emitted radius_table() {
  const std::int64_t shapes[][4] = {{15, 6, 3, 3},  {30, 16, 4, 3}, {30, 15, 3, 3},
                                    {63, 16, 8, 14}, {63, 40, 5, 3}, {500, 99, 33, 68}};
  Emitted out;
  out.csv = "n,k,r,rho,tau_J_l,tau_J,tau_g,bar_t_g,tau_J_l2,tau_g_l2\n";
  out.data = json::array();
  for (const auto& v : shapes) {
    const auto s = radii::CodeShape::lrc(v[0], v[1], v[2], v[3]);
    const double tjl = radii::johnson_radius(s.n_l(), s.rho, 0);
    const double tj = radii::johnson_radius(s.n, s.d, 0);
    const double tg = radii::tau_g(s);
    const auto bar = radii::bar_t_g(s, radii::t_local(s));
    const double irs = radii::irs_radius(static_cast<double>(s.n), static_cast<double>(s.d), 2);
    const double tg2 = radii::tau_g_l2(s);
    std::ostringstream row;
    row << s.n << ',' << s.k << ',' << s.r << ',' << s.rho << ',' << num(tjl) << ',' << num(tj) << ',' << num(tg) << ','
        << bar << ',' << num(irs) << ',' << num(tg2) << '\n';
    out.csv += row.str();
    out.data.push_back({{"shape", io::to_json(s)},
                        {"tau_J_l", tjl},
                        {"tau_J", tj},
                        {"tau_g", tg},
                        {"bar_t_g", bar},
                        {"tau_J_l2", irs},
                        {"tau_g_l2", tg2}});
  }
  return out;
}

Emitted success_table() {
  const std::int64_t rows[][5] = {
      {1023, 99, 3, 9, 1024},   {1023, 99, 3, 9, 4096},    {1023, 99, 3, 9, 8192},   {1023, 120, 4, 8, 1024},
      {1023, 120, 4, 8, 4096},  {1023, 120, 4, 8, 8192},   {1023, 220, 5, 7, 1024},  {1023, 220, 5, 7, 4096},
      {1023, 220, 5, 7, 8196},  {500, 99, 33, 68, 512},    {500, 99, 33, 68, 1024},  {500, 99, 33, 68, 2048},
      {63, 16, 8, 14, 64},      {63, 16, 8, 14, 128},      {63, 16, 8, 14, 256},
  };
  Emitted out;
  out.csv = "n,k,r,rho,q,t_l,bar_t_g,pr,log10_failure\n";
  out.data = json::array();
  for (const auto& v : rows) {
    const auto s = radii::CodeShape::lrc(v[0], v[1], v[2], v[3]);
    const auto tl = radii::t_local(s);
    const auto bar = radii::bar_t_g(s, tl);
    const Rational p = listdec::success_prob_grs(s, v[4], tl, bar);
    const double lg = log10_of(1 - p);
    std::ostringstream row;
    row << s.n << ',' << s.k << ',' << s.r << ',' << s.rho << ',' << v[4] << ',' << tl << ',' << bar << ','
        << num(to_double(p)) << ',' << num(lg) << '\n';
    out.csv += row.str();
    out.data.push_back({{"shape", io::to_json(s)},
                        {"q", v[4]},
                        {"t_l", tl},
                        {"bar_t_g", bar},
                        {"pr", exact(p)},
                        {"log10_failure", lg}});
  }
  return out;
}

Emitted pmds_table() {
  struct Set {
    pmds::PmdsShape shape;
    std::int64_t t_lo, t_hi;
  };
  const Set sets[] = {{{45, 16, 8, 8}, 21, 29}, {{70, 24, 8, 3}, 41, 46}, {{196, 156, 26, 3}, 29, 40}};
  Emitted out;
  out.csv = "n,k,r,rho,t,failure,failure_exact,union_bound\n";
  out.data = json::array();
  for (const Set& set : sets) {
    const auto& s = set.shape;
    const Rational ub = pmds::union_bound_failure(s);
    json entries = json::array();
    for (std::int64_t t = set.t_lo; t <= set.t_hi; ++t) {
      const Rational f = pmds::failure_prob_exact(s, t);
      const bool at_bound = t == s.n - s.k - 1;
      std::ostringstream row;
      row << s.n << ',' << s.k << ',' << s.r << ',' << s.rho << ',' << t << ',' << num(to_double(f)) << ','
          << to_string(f) << ',' << (at_bound ? num(to_double(ub)) : "") << '\n';
      out.csv += row.str();
      entries.push_back({{"t", t}, {"failure", exact(f)}});
    }
    out.data.push_back({{"shape", {{"n", s.n}, {"k", s.k}, {"r", s.r}, {"rho", s.rho}}},
                        {"entries", entries},
                        {"union_bound", {{"t", s.n - s.k - 1}, {"failure", exact(ub)}}}});
  }
  return out;
}

Emitted pmds_prob(const PmdsProbRequest& req) {
  const auto& s = req.shape;
  pmds::validate(s);
  if (req.t_lo < 0 || req.t_lo > req.t_hi || req.t_hi > s.n) throw ConfigError("t range must satisfy 0 <= lo <= hi <= n");
  const bool with_mk = req.ell > 0 || req.q > 0;
  if (with_mk && (req.ell < 1 || req.q < 2)) throw ConfigError("MK success probability needs --ell >= 1 and --q >= 2");
  Emitted out;
  out.csv = "t";
  if (req.exact) out.csv += ",failure,failure_exact,success_exact";
  if (req.exact && with_mk) out.csv += ",mk_success,mk_success_exact";
  if (req.bound) out.csv += ",union_bound,union_bound_exact,sk1_bound";
  out.csv += '\n';
  const std::int64_t t_bound = s.n - s.k - 1;
  std::optional<Rational> ub;
  double sk1 = 0;
  if (req.bound) {
    ub = pmds::union_bound_failure(s);
    sk1 = pmds::sk1_bound(s);
    if (t_bound < req.t_lo || t_bound > req.t_hi)
      out.warnings.push_back("the bounds apply at t = n - k - 1 = " + std::to_string(t_bound) + ", outside the t range");
  }
  json rows = json::array();
  for (std::int64_t t = req.t_lo; t <= req.t_hi; ++t) {
    std::ostringstream row;
    json entry = {{"t", t}};
    row << t;
    if (req.exact) {
      const Rational f = pmds::failure_prob_exact(s, t);
      row << ',' << num(to_double(f)) << ',' << to_string(f) << ',' << to_string(1 - f);
      entry["failure"] = exact(f);
      entry["success"] = exact(1 - f);
      if (with_mk) {
        const Rational p = (1 - f) * pmds::rank_full_fraction(req.q, req.ell, t);
        row << ',' << num(to_double(p)) << ',' << to_string(p);
        entry["mk_success"] = exact(p);
      }
    }
    if (req.bound) {
      if (t == t_bound) {
        row << ',' << num(to_double(*ub)) << ',' << to_string(*ub) << ',' << num(sk1);
      } else {
        row << ",,,";
      }
    }
    out.csv += row.str() + '\n';
    rows.push_back(entry);
  }
  out.data = {{"shape", {{"n", s.n}, {"k", s.k}, {"r", s.r}, {"rho", s.rho}}}, {"rows", rows}};
  if (req.bound) out.data["bounds"] = {{"t", t_bound}, {"union_bound", exact(*ub)}, {"sk1_bound", sk1}};
  if (with_mk) out.data["rank_factor"] = {{"ell", req.ell}, {"q", req.q}};
  return out;
}

Emitted curves(const std::vector<double>& betas, double theta, std::size_t steps) {
  if (betas.empty()) throw ConfigError("at least one beta is required");
  for (double b : betas)
    if (!(b >= 1.0)) throw ConfigError("beta must be at least 1");
  if (!(theta > 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in (0, 1]");
  if (steps < 1) throw ConfigError("the grid needs at least one step");
  std::vector<double> grid;
  for (std::size_t i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(steps));
  for (double b : betas) grid.push_back(theta / b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             grid.end());

  Emitted out;
  out.csv = "delta";
  for (double b : betas) out.csv += ",beta_" + num(b);
  out.csv += '\n';
  out.data = {{"theta", theta}, {"betas", betas}, {"points", json::array()}};
  for (double delta : grid) {
    out.csv += num(delta);
    json point = {{"delta", delta}, {"tau", json::array()}};
    for (double b : betas) {
      const double edge = theta / b;
      if (delta <= edge + 1e-12) {
        const double v = radii::normalized_radius(b, std::min(delta, edge), theta);
        out.csv += ',' + num(v);
        point["tau"].push_back(v);
      } else {
        out.csv += ',';
        point["tau"].push_back(nullptr);
      }
    }
    out.csv += '\n';
    out.data["points"].push_back(point);
  }
  return out;
}

}  // namespace lrcdec::tools
