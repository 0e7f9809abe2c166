#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "rhofourier/json_io.hpp"
#include "rhofourier/verify.hpp"

namespace rf = rhofourier;

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

rf::UnramWDRep parse_blocks(const std::string& spec) {
  rf::UnramWDRep rep;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw rf::ParseError("blocks: expected x:a in '" + item + "'");
    int a = std::stoi(item.substr(colon + 1));
    rep.blocks.push_back({rf::ExactScalar::parse(item.substr(0, colon)), a});
  }
  if (rep.blocks.empty()) throw rf::ParseError("blocks: empty list");
  return rep;
}

std::vector<double> parse_q_list(const std::string& spec) {
  std::vector<double> qs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) qs.push_back(std::stod(item));
  if (qs.empty()) throw rf::ParseError("q: empty list");
  for (double q : qs)
    if (q < 2.0) throw rf::ParseError("q must be at least 2");
  return qs;
}

std::vector<int> parse_mu(const std::string& spec) {
  std::vector<int> mu;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) mu.push_back(std::stoi(item));
  if (mu.empty() || mu.size() > 2) throw rf::ParseError("mu: expected one or two integers");
  return mu;
}

rf::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rf::ParseError("cannot open " + path);
  return rf::json::parse(in);
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream os(out);
    if (!os) throw rf::ParseError("cannot write " + out);
    os << text << '\n';
  }
}

std::string cells_tsv(const rf::SphericalFunction& f) {
  std::ostringstream os;
  for (const auto& [mu, c] : f.cells) {
    for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
    os << '\t' << c.to_string() << '\n';
  }
  return os.str();
}

rf::json int_vec_json(const std::vector<rf::cpp_int>& v) {
  rf::json a = rf::json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

int run_verify(const std::string& suite, const rf::VerifyConfig& cfg, const std::string& rho_json,
               const std::string& out) {
  std::vector<rf::VerifyTask> tasks = rf::make_suite(suite, cfg);
  if (!rho_json.empty()) {
    rf::AlgebraicRep rho = rf::algebraic_rep_from_json(rf::json::parse(rho_json));
    tasks.push_back([rho] {
      rf::VerifyEntry e{"convergence cone of " + rho.name(), false, 0.0};
      e.pass = rf::cone_check(rho.line_exponents()).strongly_convex;
      return e;
    });
  }

  std::vector<rf::VerifyEntry> results(tasks.size());
  size_t nthreads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RHO_FOURIER_THREADS"))
    nthreads = std::max<size_t>(1, std::stoul(env));
  nthreads = std::min(nthreads, tasks.size());
  std::vector<std::thread> pool;
  for (size_t t = 0; t < nthreads; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < tasks.size(); i += nthreads) results[i] = tasks[i]();
    });
  for (auto& th : pool) th.join();

  bool all_pass = true;
  rf::json entries = rf::json::array();
  for (const auto& e : results) {
    all_pass = all_pass && e.pass;
    entries.push_back(
        {{"name", e.name}, {"pass", e.pass}, {"residual", fmt12(e.residual)}});
  }
  rf::json report = {{"schema", rf::kSchema},
                     {"suite", suite},
                     {"seed", cfg.seed},
                     {"pass", all_pass},
                     {"entries", entries}};
  if (!rho_json.empty())
    report["strongly_convex"] = results.back().pass;
  write_output(out, report.dump(2));
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spherical Fourier transforms, local factors, and bound grids"};
  app.require_subcommand(1);

  std::string blocks, group = "GL2", rho_name = "std", mu_spec, in_path, out_path, suite = "all";
  std::string rho_json, rho_file, q_spec = "3", backend = "exact";
  int trunc = 6, window = 8, d = 1, ncor = 0;
  unsigned long seed = 1;
  double precision = 1e-9, qmax = 5.0, im_max = 10.0;
  bool at_half = false;

  auto* cmd_gamma = app.add_subcommand("gamma", "gamma factor of an unramified parameter");
  cmd_gamma->add_option("--blocks", blocks, "comma list x:a of block parameters")->required();
  cmd_gamma->add_option("--q", q_spec, "residue cardinality");
  cmd_gamma->add_flag("--at-half", at_half, "evaluate at the center of the strip");

  auto* cmd_lfactor = app.add_subcommand("lfactor", "L-factor of an unramified parameter");
  cmd_lfactor->add_option("--blocks", blocks)->required();
  cmd_lfactor->add_option("--q", q_spec);

  auto* cmd_basic = app.add_subcommand("basic-fn", "basic function coefficients");
  cmd_basic->add_option("--group", group, "GL1 or GL2");
  cmd_basic->add_option("--rho", rho_name, "representation name (std, det, sym2, sym2det, ...)");
  cmd_basic->add_option("--q", q_spec);
  cmd_basic->add_option("--trunc", trunc, "truncation grade");
  cmd_basic->add_option("--out", out_path, "write JSON here instead of TSV on stdout");

  auto* cmd_satake = app.add_subcommand("satake", "Satake transform of a Cartan indicator");
  cmd_satake->add_option("--mu", mu_spec, "dominant cocharacter, e.g. 1,0")->required();
  cmd_satake->add_option("--q", q_spec);

  auto* cmd_fourier = app.add_subcommand("fourier", "spectral Fourier transform of a function");
  cmd_fourier->add_option("--in", in_path, "input spherical function JSON")->required();
  cmd_fourier->add_option("--rho", rho_name);
  cmd_fourier->add_option("--trunc", trunc);
  cmd_fourier->add_option("--out", out_path);

  auto* cmd_arch = app.add_subcommand("arch-bounds", "Gamma-ratio bound grid as TSV");
  cmd_arch->add_option("--d", d, "component type: 1 real, 2 complex")->check(CLI::Range(1, 2));
  cmd_arch->add_option("--qmax", qmax, "largest analytic conductor parameter");
  cmd_arch->add_option("--im-max", im_max, "largest imaginary part");
  cmd_arch->add_option("--n", ncor, "strip half-width for the polynomial-ratio bound");

  auto* cmd_cone = app.add_subcommand("cone-check", "strong convexity of a weight cone");
  cmd_cone->add_option("--rho", rho_json, "representation as inline JSON");
  cmd_cone->add_option("--rho-file", rho_file, "representation JSON file");
  cmd_cone->add_option("--out", out_path);

  auto* cmd_gl1 = app.add_subcommand("oracle-gl1", "additive-character oracle comparison");
  cmd_gl1->add_option("--q", q_spec);
  cmd_gl1->add_option("--window", window, "grade window for the comparison");
  cmd_gl1->add_option("--f", in_path, "input spherical function JSON")->required();
  cmd_gl1->add_option("--precision", precision);

  auto* cmd_verify = app.add_subcommand("verify", "run an identity suite");
  cmd_verify->add_option("--suite", suite, "all|gamma|fourier|zeta|arch|cone");
  cmd_verify->add_option("--q", q_spec, "comma list of residue cardinalities");
  cmd_verify->add_option("--seed", seed);
  cmd_verify->add_option("--precision", precision);
  cmd_verify->add_option("--backend", backend, "exact|numeric (numeric checks are always run)");
  cmd_verify->add_option("--rho", rho_json, "also check the cone of this representation");
  cmd_verify->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<double> qs = parse_q_list(q_spec);
    double q = qs.front();
    if (trunc < 0) throw rf::ParseError("trunc must be nonnegative");

    if (cmd_gamma->parsed()) {
      rf::UnramWDRep rep = parse_blocks(blocks);
      if (at_half) {
        rf::ExactScalar g = rf::gamma_at_half(rep);
        std::cout << g.to_string() << '\t' << fmt12(g.eval(std::sqrt(q))) << '\n';
      } else {
        std::cout << rf::gamma_factor(rep).to_string() << '\n';
      }
      return 0;
    }

    if (cmd_lfactor->parsed()) {
      std::cout << rf::l_factor(parse_blocks(blocks)).to_string() << '\n';
      return 0;
    }

    if (cmd_basic->parsed()) {
      rf::AlgebraicRep rho = rf::named_rep(group, rho_name);
      rf::SphericalFunction b = rf::basic_function(rho, trunc);
      if (!out_path.empty())
        write_output(out_path, rf::to_json(b).dump(2));
      else
        std::cout << cells_tsv(b);
      return 0;
    }

    if (cmd_satake->parsed()) {
      std::vector<int> mu = parse_mu(mu_spec);
      rf::SymLaurent S = mu.size() == 1 ? rf::SymLaurent::monomial(1, {mu[0]}, rf::ExactScalar(1))
                                        : rf::satake_basis(mu[0], mu[1]);
      std::ostringstream os;
      for (const auto& [e, c] : S.terms()) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
        os << '\t' << c.to_string() << '\n';
      }
      std::cout << os.str();
      return 0;
    }

    if (cmd_fourier->parsed()) {
      rf::SphericalFunction f = rf::spherical_from_json(load_json_file(in_path));
      std::string gname = f.group == rf::Group::GL1 ? "GL1" : "GL2";
      rf::AlgebraicRep rho = rf::named_rep(gname, rho_name);
      rf::SphericalFunction Ff = rf::function_of_section(
          rf::fourier_section(rf::section_of_function(f), rho), f.group, trunc);
      if (!out_path.empty())
        write_output(out_path, rf::to_json(Ff).dump(2));
      else
        std::cout << cells_tsv(Ff);
      return 0;
    }

    if (cmd_arch->parsed()) {
      std::cout << "Q\tre_s\tim_s\tlhs\trhs\tslack\n";
      for (double Q = 0.0; Q <= qmax + 1e-9; Q += 0.5)
        for (double re = -0.5; re <= 0.5 + 1e-9; re += 0.25)
          for (double im = -im_max; im <= im_max + 1e-9; im += 1.0) {
            rf::cplx s(re, im);
            double lhs, rhs;
            if (ncor > 0) {
              lhs = rf::corollary_ratio(d, Q, ncor, s);
              rhs = 1.0;
            } else {
              std::tie(lhs, rhs) = rf::moreno_values(d, Q, s);
            }
            if (std::isnan(lhs) || std::isinf(lhs)) continue;
            std::cout << fmt12(Q) << '\t' << fmt12(re) << '\t' << fmt12(im) << '\t' << fmt12(lhs)
                      << '\t' << fmt12(rhs) << '\t' << fmt12(rhs - lhs) << '\n';
          }
      return 0;
    }

    if (cmd_cone->parsed()) {
      if (rho_json.empty() == rho_file.empty())
        throw rf::ParseError("cone-check: give exactly one of --rho, --rho-file");
      rf::json j = rho_json.empty() ? load_json_file(rho_file) : rf::json::parse(rho_json);
      rf::AlgebraicRep rho = rf::algebraic_rep_from_json(j);
      rf::ConeReport rep = rf::cone_check(rho.line_exponents());
      rf::json out = {{"schema", rf::kSchema}, {"strongly_convex", rep.strongly_convex}};
      if (rep.strongly_convex)
        out["certificate"] = {{"type", "functional"}, {"vector", int_vec_json(rep.functional)}};
      else
        out["certificate"] = {{"type", "witness"}, {"vector", int_vec_json(rep.witness)}};
      write_output(out_path, out.dump(2));
      return 0;
    }

    if (cmd_gl1->parsed()) {
      rf::SphericalFunction f = rf::spherical_from_json(load_json_file(in_path));
      if (f.group != rf::Group::GL1) throw rf::ParseError("oracle-gl1: function must be on GL1");
      double dev = rf::compare_spectral_direct(f, window, q);
      double worst_cell = 0.0;
      for (const auto& [mu, c] : f.cells)
        for (int jj = -window; jj <= window; ++jj) {
          double closed = rf::additive_fourier_cell(mu[0], jj).eval(std::sqrt(q));
          std::complex<double> oracle =
              rf::additive_fourier_oracle(mu[0], jj, static_cast<int>(q));
          worst_cell = std::max(worst_cell, std::abs(closed - oracle));
        }
      bool pass = dev <= precision && worst_cell <= precision;
      rf::json out = {{"schema", rf::kSchema},
                      {"q", fmt12(q)},
                      {"window", window},
                      {"spectral_vs_direct", fmt12(dev)},
                      {"cell_vs_character_sum", fmt12(worst_cell)},
                      {"pass", pass}};
      write_output(out_path, out.dump(2));
      return pass ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      rf::VerifyConfig cfg;
      cfg.qs = qs;
      cfg.seed = seed;
      cfg.precision = precision;
      return run_verify(suite, cfg, rho_json, out_path);
    }
  } catch (const rf::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
