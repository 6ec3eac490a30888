#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "covox/covox.hpp"
#include "covox/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

std::string cell_text(const json& cell) {
  if (cell.is_number_float())
    return covox::format_double(cell.get<double>());
  return cell.dump();
}

void emit(const Table& t, covox::OutputFormat fmt, std::ostream& os) {
  if (fmt == covox::OutputFormat::csv) {
    for (size_t c = 0; c < t.columns.size(); ++c)
      os << (c ? "," : "") << t.columns[c];
    os << '\n';
    for (const auto& row : t.rows) {
      for (size_t c = 0; c < row.size(); ++c)
        os << (c ? "," : "") << cell_text(row[c]);
      os << '\n';
    }
  } else {
    json j{{"columns", t.columns}, {"rows", t.rows}};
    os << j.dump(2) << '\n';
  }
}

//! Relative paths land under COVOX_OUTPUT_DIR when that is set.
fs::path resolve_output(const std::string& name) {
  fs::path p(name);
  const char* root = std::getenv("COVOX_OUTPUT_DIR");
  if (root && *root && p.is_relative())
    p = fs::path(root) / p;
  return p;
}

std::ofstream open_output(const fs::path& p) {
  std::ofstream os(p, std::ios::binary);
  if (!os)
    throw std::runtime_error("cannot open output file '" + p.string() + "'");
  return os;
}

//! Emits a table to the resolved output path, or stdout when none is set.
void deliver(const Table& t, const covox::RunConfig& rc) {
  if (rc.output_path.empty()) {
    emit(t, rc.output_format, std::cout);
    return;
  }
  fs::path p = resolve_output(rc.output_path);
  std::ofstream os = open_output(p);
  emit(t, rc.output_format, os);
  if (!os.flush())
    throw std::runtime_error("write failed for '" + p.string() + "'");
}

int run_wavefunction(int n, double eta_value, const covox::RunConfig& rc) {
  covox::Rapidity eta(eta_value);
  double extent = rc.grid_extent.value_or(covox::default_extent(eta.value()));
  covox::WaveGrid g = covox::sample_boosted(n, eta, extent, rc.grid_count);

  std::string name = rc.output_path.empty() ? "wavefunction.csv" : rc.output_path;
  fs::path csv_path = resolve_output(name);
  {
    std::ofstream os = open_output(csv_path);
    covox::write_csv(g, os);
    if (!os.flush())
      throw std::runtime_error("write failed for '" + csv_path.string() + "'");
  }

  covox::detail::KahanSum norm2, mz, mt;
  for (int i = 0; i < g.count; ++i) {
    double z = g.coord(i);
    for (int j = 0; j < g.count; ++j) {
      double t = g.coord(j);
      double w2 = g.at(i, j) * g.at(i, j);
      norm2.add(w2);
      mz.add(z * z * w2);
      mt.add(t * t * w2);
    }
  }
  json sidecar{{"n", n},
               {"eta", eta.value()},
               {"extent", g.extent},
               {"count", g.count},
               {"norm", g.spacing() * std::sqrt(norm2.value())},
               {"var_z", mz.value() / norm2.value()},
               {"var_t", mt.value() / norm2.value()}};

  fs::path sidecar_path = csv_path;
  sidecar_path.replace_extension(".json");
  std::ofstream os = open_output(sidecar_path);
  os << sidecar.dump(2) << '\n';
  if (!os.flush())
    throw std::runtime_error("write failed for '" + sidecar_path.string() + "'");
  std::cout << csv_path.string() << '\n' << sidecar_path.string() << '\n';
  return 0;
}

int run_expansion(int n, double eta_value, const covox::RunConfig& rc) {
  covox::ExpansionSpectrum s = covox::expansion_for_tolerance(
      n, covox::Rapidity(eta_value), rc.truncation_tol);
  Table t;
  t.columns = {"k", "C_k", "p_k", "cumulative"};
  covox::detail::KahanSum cum;
  for (size_t k = 0; k < s.coefficients.size(); ++k) {
    double c = s.coefficients[k];
    cum.add(c * c);
    t.rows.push_back(
        {json(static_cast<long long>(k)), json(c), json(c * c), json(cum.value())});
  }
  deliver(t, rc);
  return 0;
}

int run_entropy(int n, const std::string& sweep, const covox::RunConfig& rc) {
  Table t;
  t.columns = {"eta", "entropy"};
  for (double eta : covox::parse_sweep(sweep)) {
    double s = covox::entropy(n, covox::Rapidity(eta), rc.truncation_tol);
    t.rows.push_back({json(eta), json(s)});
  }
  deliver(t, rc);
  return 0;
}

int run_formfactor(const std::string& sweep, const covox::RunConfig& rc) {
  Table t;
  t.columns = {"eta", "q_squared", "F", "static_F"};
  for (double eta : covox::parse_sweep(sweep)) {
    covox::FormFactorPoint p = covox::coherent_form_factor(covox::Rapidity(eta));
    double q = 2.0 * std::sinh(std::abs(eta));
    t.rows.push_back(
        {json(eta), json(p.q_squared), json(p.F), json(covox::static_form_factor(q))});
  }
  deliver(t, rc);
  return 0;
}

int run_spectrum(int lambda_max, double m0sq, const covox::RunConfig& rc) {
  Table t;
  t.columns = {"lambda", "mass_squared", "degeneracy"};
  for (const covox::MassSpectrumEntry& e : covox::mass_spectrum(lambda_max, m0sq)) {
    t.rows.push_back(
        {json(e.lambda), json(e.mass_squared), json(e.degeneracy)});
  }
  deliver(t, rc);
  return 0;
}

int run_classify(const std::string& matrix_text, double tol) {
  covox::Unimodular2 m = covox::matrix_from_json_text(matrix_text);
  covox::LittleGroupKind kind = covox::classify(m, tol);
  json out{{"input", m}, {"kind", covox::to_string(kind)}, {"trace", m.trace()}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_equidiag(const std::string& matrix_text) {
  covox::Unimodular2 m = covox::matrix_from_json_text(matrix_text);
  covox::EquiDiagonalForm f = covox::equi_diagonalize(m);
  json out{{"alpha", f.alpha}, {"input", m}, {"matrix", f.matrix}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int run_contract(double gamma, double eta) {
  covox::Unimodular2 m = covox::contraction_sequence(gamma, eta);
  double theta = std::asin(gamma * std::exp(-eta));
  json out{{"eta", eta}, {"gamma", gamma}, {"matrix", m}, {"theta", theta}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "covox: covariant oscillator toolkit (boosted wave functions, "
      "little-group matrices, entropies, form factors, spectra)"};
  app.require_subcommand(1);

  std::string config_path, out_flag, format_flag;
  double extent_flag = 0.0, tol_flag = 0.0;
  int count_flag = 0;
  app.add_option("--config", config_path,
                 "key = value settings file (grid_extent, grid_count, "
                 "truncation_tol, output_format, output_path)");
  CLI::Option* out_opt =
      app.add_option("--out", out_flag, "output file (default: stdout for "
                                        "tables; wavefunction.csv for grids)");
  CLI::Option* fmt_opt = app.add_option("--format", format_flag,
                                        "table format: csv or json")
                             ->check(CLI::IsMember({"csv", "json"}));
  CLI::Option* ext_opt = app.add_option(
      "--grid-extent", extent_flag, "half-width of the sample grid");
  CLI::Option* cnt_opt = app.add_option(
      "--grid-count", count_flag, "odd number of samples per axis");
  CLI::Option* tol_opt = app.add_option(
      "--tol", tol_flag, "series truncation tolerance in (0, 1)");

  int wf_n = 0, ex_n = 0, en_n = 0, sp_lambda = 0;
  double wf_eta = 0.0, ex_eta = 0.0, lg_tol = 1e-9, lg_gamma = 0.0,
         lg_eta = 0.0, sp_m0sq = 0.0;
  std::string en_eta, ff_eta, lg_matrix;

  CLI::App* wf = app.add_subcommand(
      "wavefunction", "sample a boosted wave function to CSV plus a JSON "
                      "sidecar with norm and widths");
  wf->fallthrough();
  wf->add_option("--n", wf_n, "excitation index")->required();
  wf->add_option("--eta", wf_eta, "rapidity")->required();

  CLI::App* ex = app.add_subcommand(
      "expansion", "rest-frame expansion coefficients of a boosted state");
  ex->fallthrough();
  ex->add_option("--n", ex_n, "excitation index")->required();
  ex->add_option("--eta", ex_eta, "rapidity")->required();

  CLI::App* en = app.add_subcommand(
      "entropy", "excitation entropy (nats) over a rapidity sweep");
  en->fallthrough();
  en->add_option("--n", en_n, "excitation index")->required();
  en->add_option("--eta", en_eta, "rapidity value or start:stop:step")
      ->required();

  CLI::App* ff = app.add_subcommand(
      "formfactor", "coherent (squeezed-overlap) and static form factors "
                    "over a rapidity sweep");
  ff->fallthrough();
  ff->add_option("--eta", ff_eta, "rapidity value or start:stop:step")
      ->required();

  CLI::App* lg = app.add_subcommand(
      "littlegroup", "unimodular 2x2 matrix operations (JSON output)");
  lg->require_subcommand(1);
  CLI::App* lg_classify = lg->add_subcommand(
      "classify", "classify by |trace| against 2 +- tol");
  lg_classify->fallthrough();
  lg_classify
      ->add_option("--matrix", lg_matrix,
                   "matrix as '{\"a\":..,\"b\":..,\"c\":..,\"d\":..}'")
      ->required();
  lg_classify->add_option("--classify-tol", lg_tol, "trace band half-width");
  CLI::App* lg_equidiag = lg->add_subcommand(
      "equidiag", "rotate to the equal-diagonal canonical form");
  lg_equidiag->fallthrough();
  lg_equidiag
      ->add_option("--matrix", lg_matrix,
                   "matrix as '{\"a\":..,\"b\":..,\"c\":..,\"d\":..}'")
      ->required();
  CLI::App* lg_contract = lg->add_subcommand(
      "contract", "boosted rotation with theta = arcsin(gamma e^-eta)");
  lg_contract->fallthrough();
  lg_contract->add_option("--gamma", lg_gamma, "target lower-left entry")
      ->required();
  lg_contract->add_option("--eta", lg_eta, "boost parameter")->required();

  CLI::App* sp = app.add_subcommand(
      "spectrum", "mass-squared tower with enumerated degeneracies");
  sp->fallthrough();
  sp->add_option("--lambda-max", sp_lambda, "largest excitation")->required();
  sp->add_option("--m0sq", sp_m0sq, "mass-squared offset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    covox::RunConfig rc;
    if (!config_path.empty())
      rc = covox::load_run_config(config_path);
    if (ext_opt->count() > 0)
      rc.grid_extent = extent_flag;
    if (cnt_opt->count() > 0)
      rc.grid_count = count_flag;
    if (tol_opt->count() > 0)
      rc.truncation_tol = tol_flag;
    if (fmt_opt->count() > 0)
      rc.output_format = covox::output_format_from_string(format_flag);
    if (out_opt->count() > 0)
      rc.output_path = out_flag;
    covox::validate(rc);

    if (*wf)
      return run_wavefunction(wf_n, wf_eta, rc);
    if (*ex)
      return run_expansion(ex_n, ex_eta, rc);
    if (*en)
      return run_entropy(en_n, en_eta, rc);
    if (*ff)
      return run_formfactor(ff_eta, rc);
    if (*sp)
      return run_spectrum(sp_lambda, sp_m0sq, rc);
    if (*lg_classify)
      return run_classify(lg_matrix, lg_tol);
    if (*lg_equidiag)
      return run_equidiag(lg_matrix);
    if (*lg_contract)
      return run_contract(lg_gamma, lg_eta);
    std::cerr << "usage error: no subcommand selected\n";
    return 2;
  } catch (const covox::tolerance_error& e) {
    std::cerr << "numerical tolerance failure: " << e.what()
              << "\noffending value: "
              << covox::format_double(e.offending_value()) << '\n';
    return 3;
  } catch (const covox::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
