// magnion: binding energies and stability of one-electron homonuclear
// diatomic ions in strong magnetic fields.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "magnion/energy_surface.hpp"
#include "magnion/oracle_fd.hpp"
#include "magnion/perturbation.hpp"
#include "magnion/scaling.hpp"

using namespace magnion;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

// fixed output precision: 4 significant digits for energies, 3 for distances
std::string fmt_e(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}
std::string fmt_r(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}
std::string fmt_b(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

int default_jobs() {
  if (const char* env = std::getenv("MAGNION_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

// index-ordered fan-out; output is identical for any job count
template <typename Fn>
void parallel_rows(int n, int jobs, Fn&& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// partial files are never left behind: write to temp, rename on success
void write_atomically(const std::filesystem::path& path,
                      const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

json tols_json(const QuadTols& t) {
  return {{"abs_tol", t.abs_tol},
          {"rel_tol", t.rel_tol},
          {"max_subdivisions", t.max_subdivisions}};
}

void write_sidecar(const std::filesystem::path& csv_path, json config,
                   const std::vector<std::string>& columns, int rows) {
  config["version"] = kVersion;
  config["columns"] = columns;
  config["rows"] = rows;
  auto path = csv_path;
  path.replace_extension(".json");
  write_atomically(path, config.dump(2) + "\n");
}

PerturbOptions scan_opts() {
  PerturbOptions o;
  o.tols = {1e-7, 1e-6, 2000};
  return o;
}

// ---------------------------------------------------------------------------

struct RefRow {
  double b;
  double r_ref;     // NaN when the source did not report one
  double bind_ref;  // -E2 of the comparison work
};

const std::vector<RefRow>& table_rows(const std::string& which) {
  static const std::vector<RefRow> melo = {
      {1e10, 1.232, 1.42}, {5e10, 0.736, 2.77},  {1e11, 0.604, 3.64},
      {5e11, 0.351, 6.59}, {1e12, 0.285, 8.38},  {5e12, 0.179, 14.08},
      {1e13, 0.149, 17.32}, {5e13, 0.104, 26.90}, {1e14, 0.085, 31.86}};
  static const std::vector<RefRow> guillou = {
      {1.175e10, 1.358, 1.54}, {2.35e10, 1.038, 2.06}, {3.525e10, 0.893, 2.43},
      {4.7e10, 0.803, 2.73},   {5.875e10, 0.740, 2.98}, {1.175e11, 0.578, 3.91},
      {2.35e11, 0.455, 5.08},  {4.7e11, 0.362, 6.54},  {7.05e11, 0.318, 7.55},
      {1.175e12, 0.271, 9.01}, {2.35e12, 0.221, 11.35}, {4.7e12, 0.181, 14.17}};
  static const std::vector<RefRow> lai = {
      {1e11, 0.61, 3.67},  {5e11, 0.35, 6.69},  {1e12, 0.280, 8.53},
      {2e12, 0.230, 10.78}, {5e12, 0.180, 14.46}, {8e12, 0.15, 16.71},
      {1e13, 0.15, 17.88}, {1e14, 0.085, 33.83}, {5e14, 0.060, 50.07}};
  static const double nan = std::nan("");
  static const std::vector<RefRow> heyl = {
      {9.4e12, nan, 17.52}, {2.35e13, nan, 22.89}, {4.7e13, nan, 27.69},
      {9.4e13, nan, 33.28}, {2.35e14, nan, 41.73}, {4.7e14, nan, 49.14}};
  if (which == "melo") return melo;
  if (which == "guillou") return guillou;
  if (which == "lai") return lai;
  return heyl;
}

// (B, Z) pairs of the charge study
const std::vector<std::pair<double, double>>& zstudy_rows() {
  static const std::vector<std::pair<double, double>> rows = [] {
    std::vector<std::pair<double, double>> r;
    for (double z : {1.0, 1.2}) r.emplace_back(1e10, z);
    for (double z : {1.0, 1.2, 1.4}) r.emplace_back(1e11, z);
    for (double z : {1.0, 1.2, 1.4, 1.6, 1.8}) r.emplace_back(1e12, z);
    for (double z : {1.0, 1.2, 1.4, 1.6, 1.8, 2.0}) r.emplace_back(1e13, z);
    for (double z : {1.0, 1.2, 1.4, 1.6, 1.8, 2.0, 2.2, 2.4})
      r.emplace_back(1e14, z);
    return r;
  }();
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_energy(double b, double r, double z, bool force_quadrature) {
  PerturbOptions opts;
  opts.quadrature_potential = force_quadrature;
  auto pt = evaluate_energy(b, r, z, opts);
  std::printf("field:          %s G  (b = %s, L = %.6g)\n", fmt_b(b).c_str(),
              fmt_b(pt.model.b_au).c_str(), pt.model.scale);
  std::printf("distance:       %s a.u.  (a = %.6g)\n", fmt_r(r).c_str(),
              pt.model.half_sep);
  std::printf("charge:         %s\n", fmt_r(z).c_str());
  const auto& bd = pt.breakdown;
  std::printf("e0:             %s\n", fmt_e(bd.e0).c_str());
  std::printf("first order:    %s\n", fmt_e(bd.first_order).c_str());
  std::printf("second order:   %s\n", fmt_e(bd.second_order).c_str());
  std::printf("  delta-delta:  %s\n", fmt_e(bd.so_delta_delta).c_str());
  std::printf("  cross:        %s\n", fmt_e(bd.so_cross).c_str());
  std::printf("  double:       %s\n", fmt_e(bd.so_double).c_str());
  std::printf("e2 (scaled):    %s   quadrature error %.1e\n",
              fmt_e(bd.e2).c_str(), bd.quadrature_error);
  std::printf("E2:             %s Hartree\n", fmt_e(pt.energy).c_str());
  return 0;
}

int cmd_minimize(double b, double z) {
  auto eq = minimize_over_r(b, z);
  std::printf("R_eq:           %s a.u.\n", fmt_r(eq.r_eq).c_str());
  std::printf("E2 at minimum:  %s Hartree  (binding %s)\n",
              fmt_e(eq.e_min).c_str(), fmt_e(-eq.e_min).c_str());
  std::printf("bracket:        [%s, %s]  (%d refinement steps)\n",
              fmt_r(eq.bracket_lo).c_str(), fmt_r(eq.bracket_hi).c_str(),
              eq.iterations);
  return 0;
}

int cmd_stability(double b, double z, bool skip_critical) {
  auto rep = classify_stability(b, z, {}, scan_opts());
  std::printf("field:          %s G, charge %s\n", fmt_b(b).c_str(),
              fmt_r(z).c_str());
  std::printf("classification: %s\n", to_string(rep.classification));
  if (rep.minimum) {
    std::printf("R_eq:           %s a.u.\n", fmt_r(rep.minimum->r_eq).c_str());
    std::printf("E2 at minimum:  %s Hartree\n",
                fmt_e(rep.minimum->e_min).c_str());
  }
  if (rep.classification != Stability::unbound)
    std::printf("dissociation:   %s Hartree\n", fmt_e(rep.e_dissoc).c_str());
  if (!skip_critical) {
    auto cc = critical_charges(b, {}, scan_opts());
    std::printf("Z_c_bs:         %s  (bound below, resonance above)\n",
                fmt_r(cc.z_bound).c_str());
    std::printf("Z_cr:           %s  (no minimum above)\n",
                fmt_r(cc.z_critical).c_str());
  }
  return 0;
}

int cmd_table(const std::string& which, std::filesystem::path out, int jobs) {
  if (out.empty()) out = which + ".csv";
  std::string csv;
  std::vector<std::string> columns;
  int n_rows = 0;

  if (which == "zstudy") {
    const auto& rows = zstudy_rows();
    n_rows = static_cast<int>(rows.size());
    std::vector<EquilibriumResult> res(rows.size());
    parallel_rows(n_rows, jobs, [&](int i) {
      res[i] = minimize_over_r(rows[i].first, rows[i].second);
    });
    columns = {"B_gauss", "Z", "R_eq_au", "E2_hartree"};
    csv = "B_gauss,Z,R_eq_au,E2_hartree\n";
    for (int i = 0; i < n_rows; ++i) {
      csv += fmt_b(rows[i].first) + "," + fmt_r(rows[i].second) + "," +
             fmt_r(res[i].r_eq) + "," + fmt_e(res[i].e_min) + "\n";
    }
  } else if (which == "critical") {
    const RefRow bounds[] = {{1e10, 1.32, 1.58},
                             {1e11, 1.55, 2.05},
                             {1e12, 1.80, 2.60},
                             {1e13, 2.10, 3.10},
                             {1e14, 2.43, 3.50}};
    n_rows = 5;
    std::vector<CriticalCharges> res(n_rows);
    parallel_rows(n_rows, jobs, [&](int i) {
      res[i] = critical_charges(bounds[i].b, {}, scan_opts());
    });
    columns = {"B_gauss", "Z_c_bs", "Z_cr", "Z_c_bs_bound_ref",
               "Z_cr_bound_ref"};
    csv = "B_gauss,Z_c_bs,Z_cr,Z_c_bs_bound_ref,Z_cr_bound_ref\n";
    for (int i = 0; i < n_rows; ++i) {
      csv += fmt_b(bounds[i].b) + "," + fmt_r(res[i].z_bound) + "," +
             fmt_r(res[i].z_critical) + "," + fmt_r(bounds[i].r_ref) + "," +
             fmt_r(bounds[i].bind_ref) + "\n";
    }
  } else {
    const auto& rows = table_rows(which);
    n_rows = static_cast<int>(rows.size());
    std::vector<EquilibriumResult> res(rows.size());
    parallel_rows(n_rows, jobs,
                  [&](int i) { res[i] = minimize_over_r(rows[i].b); });
    // reference columns are external fixtures, displayed but never asserted
    columns = {"B_gauss", "R_eq_au", "E2_hartree", "R_eq_ref_au",
               "E2_ref_hartree"};
    csv = "B_gauss,R_eq_au,E2_hartree,R_eq_ref_au,E2_ref_hartree\n";
    for (int i = 0; i < n_rows; ++i) {
      csv += fmt_b(rows[i].b) + "," + fmt_r(res[i].r_eq) + "," +
             fmt_e(res[i].e_min) + ",";
      csv += std::isnan(rows[i].r_ref) ? "" : fmt_r(rows[i].r_ref);
      csv += "," + fmt_e(-rows[i].bind_ref) + "\n";
    }
  }

  write_atomically(out, csv);
  json config = {{"command", "table"}, {"which", which}, {"jobs", jobs}};
  config["tolerances"] =
      tols_json(which == "zstudy" || which == "critical" ? scan_opts().tols
                                                         : QuadTols{});
  write_sidecar(out, config, columns, n_rows);
  std::printf("wrote %s (%d rows)\n", out.string().c_str(), n_rows);
  return 0;
}

int cmd_figures(std::filesystem::path dir, int jobs) {
  if (dir.empty()) dir = "figures";
  std::filesystem::create_directories(dir);

  // default field list: half-decade steps over the paper's range
  const std::vector<double> fields = {1e10, 5e10, 1e11, 5e11, 1e12,
                                      5e12, 1e13, 5e13, 1e14, 5e14};
  const int n = static_cast<int>(fields.size());
  const int n_detail = 5;  // fig2 is a detail of fig1: the weak-field half

  std::vector<EquilibriumResult> eq(n);
  parallel_rows(n, jobs, [&](int i) {
    eq[i] = minimize_over_r(fields[i], 1.0, {}, scan_opts());
  });

  // fig1: binding energy against L^2; fig2: detail of fig1
  std::string f1 = "B_gauss,L_squared,binding_hartree\n";
  std::string f2 = "B_gauss,L_squared,binding_hartree\n";
  // fig3: equilibrium distance against L; fig4: their product against B
  std::string f3 = "B_gauss,L,R_eq_au\n";
  std::string f4 = "B_gauss,R_eq_L\n";
  for (int i = 0; i < n; ++i) {
    double l = build_scaled_model({fields[i], eq[i].r_eq}).scale;
    std::string row = fmt_b(fields[i]) + "," + fmt_e(l * l) + "," +
                      fmt_e(-eq[i].e_min) + "\n";
    f1 += row;
    if (i < n_detail) f2 += row;
    f3 += fmt_b(fields[i]) + "," + fmt_e(l) + "," + fmt_r(eq[i].r_eq) + "\n";
    f4 += fmt_b(fields[i]) + "," + fmt_e(eq[i].r_eq * l) + "\n";
  }
  struct Fig {
    const char* name;
    const std::string* body;
    int rows;
    std::vector<std::string> cols;
  };
  const Fig figs[] = {
      {"fig1.csv", &f1, n, {"B_gauss", "L_squared", "binding_hartree"}},
      {"fig2.csv", &f2, n_detail, {"B_gauss", "L_squared", "binding_hartree"}},
      {"fig3.csv", &f3, n, {"B_gauss", "L", "R_eq_au"}},
      {"fig4.csv", &f4, n, {"B_gauss", "R_eq_L"}},
  };
  for (const auto& fig : figs) {
    auto path = dir / fig.name;
    write_atomically(path, *fig.body);
    json config = {
        {"command", "figures"}, {"figure", fig.name}, {"jobs", jobs}};
    config["tolerances"] = tols_json(scan_opts().tols);
    write_sidecar(path, config, fig.cols, fig.rows);
  }
  std::printf("wrote fig1.csv fig2.csv fig3.csv fig4.csv in %s\n",
              dir.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-electron diatomic ions in strong magnetic fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  int jobs = default_jobs();

  double b = 0.0, r = 0.0, z = 1.0;
  bool force_quadrature = false, skip_critical = false;
  std::string which;
  std::filesystem::path out;

  auto* energy = app.add_subcommand("energy", "energy at one (B, R, Z) point");
  energy->add_option("--field-gauss", b, "magnetic field in gauss")->required();
  energy->add_option("--distance", r, "internuclear distance, Bohr radii")
      ->required();
  energy->add_option("--charge", z, "nuclear charge Z");
  energy->add_flag("--force-quadrature", force_quadrature,
                   "use the slow reference path for the averaged potential");

  auto* minimize =
      app.add_subcommand("minimize", "equilibrium distance and binding energy");
  minimize->add_option("--field-gauss", b, "magnetic field in gauss")
      ->required();
  minimize->add_option("--charge", z, "nuclear charge Z");

  auto* stability =
      app.add_subcommand("stability", "bound/resonance/unbound classification");
  stability->add_option("--field-gauss", b, "magnetic field in gauss")
      ->required();
  stability->add_option("--charge", z, "nuclear charge Z");
  stability->add_flag("--skip-critical", skip_critical,
                      "skip the critical-charge bisection");

  auto* table = app.add_subcommand("table", "reproduce a comparison table");
  table->add_option("--which", which, "melo|guillou|lai|heyl|zstudy|critical")
      ->required()
      ->check(CLI::IsMember({"melo", "guillou", "lai", "heyl", "zstudy",
                             "critical"}));
  table->add_option("--out", out, "output CSV path (default <which>.csv)");
  table->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* figures = app.add_subcommand("figures", "emit figure data as CSV");
  figures->add_option("--out", out, "output directory (default figures/)");
  figures->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (energy->parsed()) return cmd_energy(b, r, z, force_quadrature);
    if (minimize->parsed()) return cmd_minimize(b, z);
    if (stability->parsed()) return cmd_stability(b, z, skip_critical);
    if (table->parsed()) return cmd_table(which, out, jobs);
    if (figures->parsed()) return cmd_figures(out, jobs);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
