#include "bplab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bplab/classgroup.hpp"
#include "bplab/gl2.hpp"
#include "bplab/lfun.hpp"
#include "bplab/lowlying.hpp"
#include "bplab/measures.hpp"
#include "bplab/rmt.hpp"
#include "bplab/sugano.hpp"
#include "bplab/util.hpp"

namespace bplab::cli {
namespace {

constexpr const char* kVersion = "1.0.0";

using json = nlohmann::ordered_json;

/* %.17g round-trips doubles and keeps CSV cells byte-stable. */
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += c;
  }
  q += '"';
  return q;
}

struct Report {
  std::string command;
  json params = json::object();
  json result = json::object();
  json diagnostics = json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> warnings;
  int exit_code = 0;
};

std::pair<classgroup::ClassGroup, classgroup::Character> group_char(long d, int char_index) {
  classgroup::ClassGroup G(d);
  auto chars = classgroup::characters(G);
  if (char_index < 0 || char_index >= static_cast<int>(chars.size()))
    throw std::invalid_argument("char-index must lie in [0, h) = [0, " +
                                std::to_string(chars.size()) + ")");
  return {G, chars[char_index]};
}

/* ---------------------------------------------------------------- sugano */

void setup_sugano(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("sugano", "Bessel-model spherical function expansions");
  group->require_subcommand(1);
  auto* cmd = group->add_subcommand(
      "expand", "expansion coefficient U^{l,m} of the spherical generating function");

  struct Opts {
    long d = 0, p = 0;
    int char_index = 0, l = 0, m = 0;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--d", opts->d, "positive fundamental discriminant magnitude")->required();
  cmd->add_option("--p", opts->p, "prime")->required();
  cmd->add_option("--char-index", opts->char_index, "class-group character index")
      ->capture_default_str();
  cmd->add_option("--l", opts->l, "Y-degree")->capture_default_str();
  cmd->add_option("--m", opts->m, "X-degree")->capture_default_str();

  cmd->callback([opts, &rep] {
    rep.command = "sugano expand";
    rep.params = {{"d", opts->d},
                  {"p", opts->p},
                  {"char_index", opts->char_index},
                  {"l", opts->l},
                  {"m", opts->m}};
    auto [G, chi] = group_char(opts->d, opts->char_index);
    auto datum = measures::make_datum(G, chi, opts->p);
    auto U = sugano::expand_U(datum, opts->l, opts->m);
    rep.result = {{"l", opts->l},
                  {"m", opts->m},
                  {"eps", datum.eps},
                  {"lambda", datum.lambda.to_complex().real()},
                  {"exact_mode", datum.lambda.is_exact()},
                  {"polynomial", U.str()}};
    rep.diagnostics = {{"character_is_real", chi.is_real()}};
    rep.csv_header = {"l", "m", "eps", "lambda", "polynomial"};
    rep.csv_rows = {{std::to_string(opts->l), std::to_string(opts->m),
                     std::to_string(datum.eps), fmt(datum.lambda.to_complex().real()),
                     U.str()}};
  });
}

/* ------------------------------------------------------------ classgroup */

void setup_classgroup(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("classgroup", "imaginary quadratic class groups");
  group->require_subcommand(1);
  auto* cmd = group->add_subcommand("info", "group table, characters, class-number formula");

  struct Opts {
    long d = 0;
    long terms = 2000000;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--d", opts->d, "positive fundamental discriminant magnitude")->required();

  cmd->callback([opts, &rep] {
    rep.command = "classgroup info";
    rep.params = {{"d", opts->d}};
    classgroup::ClassGroup G(opts->d);
    auto chars = classgroup::characters(G);

    json forms = json::array();
    for (int i = 0; i < G.h(); ++i) {
      const auto& f = G.classes()[i];
      forms.push_back({{"index", i},
                       {"a", f.a},
                       {"b", f.b},
                       {"c", f.c},
                       {"order", G.order(i)},
                       {"two_torsion", G.is_two_torsion(i)},
                       {"aut_count", G.aut_count(i)}});
      rep.csv_rows.push_back({std::to_string(i), std::to_string(f.a), std::to_string(f.b),
                              std::to_string(f.c), std::to_string(G.order(i))});
    }
    json characters = json::array();
    for (int i = 0; i < static_cast<int>(chars.size()); ++i)
      characters.push_back({{"index", i},
                            {"is_real", chars[i].is_real()},
                            {"d_lambda", chars[i].d_lambda()}});

    auto L1 = lfun::dirichlet_L_minus_d(opts->d, std::complex<double>(1.0, 0.0), opts->terms);
    double residual = classgroup::class_number_formula_residual(G, L1.value.real());

    rep.result = {{"d", opts->d},
                  {"h", G.h()},
                  {"w", G.w()},
                  {"identity", G.identity()},
                  {"forms", forms},
                  {"characters", characters},
                  {"class_number_formula",
                   {{"L1", L1.value.real()},
                    {"residual", residual},
                    {"series_tail_bound", L1.tail_bound}}}};
    rep.diagnostics = {{"L_series_terms", opts->terms}};
    rep.csv_header = {"index", "a", "b", "c", "order"};
  });
}

/* --------------------------------------------------------------- measure */

void setup_measure(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("measure", "local Plancherel measures");
  group->require_subcommand(1);
  auto* cmd = group->add_subcommand(
      "check", "integrate the U basis against the local measure: delta(l+m,0) expected");

  struct Opts {
    long d = 0, p = 0;
    int char_index = 0, max_degree = 4;
    double tol = 1e-8;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--d", opts->d, "positive fundamental discriminant magnitude")->required();
  cmd->add_option("--p", opts->p, "prime")->required();
  cmd->add_option("--char-index", opts->char_index, "class-group character index")
      ->capture_default_str();
  cmd->add_option("--max-degree", opts->max_degree, "check all (l, m) with l + 2m <= this")
      ->capture_default_str();
  cmd->add_option("--tol", opts->tol, "pass threshold for |integral - delta|")
      ->capture_default_str();

  cmd->callback([opts, &rep] {
    rep.command = "measure check";
    rep.params = {{"d", opts->d},
                  {"p", opts->p},
                  {"char_index", opts->char_index},
                  {"max_degree", opts->max_degree},
                  {"tol", opts->tol}};
    if (opts->max_degree < 0 || opts->max_degree > 12)
      throw std::invalid_argument("max-degree must lie in [0, 12]");
    auto [G, chi] = group_char(opts->d, opts->char_index);
    auto datum = measures::make_datum(G, chi, opts->p);
    auto mu = measures::SpectralMeasure::plancherel(datum);

    bool pass = true;
    json entries = json::array();
    rep.csv_header = {"l", "m", "delta", "converged"};
    for (int degree = 0; degree <= opts->max_degree; ++degree)
      for (int m = 0; 2 * m <= degree; ++m) {
        int l = degree - 2 * m;
        auto U = sugano::expand_U(datum, l, m);
        auto I = measures::integrate(measures::poly_evaluator(U), mu);
        double expected = (l == 0 && m == 0) ? 1.0 : 0.0;
        double delta = std::abs(I.value - std::complex<double>(expected, 0.0));
        bool ok = delta <= opts->tol && I.converged;
        pass = pass && ok;
        entries.push_back({{"l", l},
                           {"m", m},
                           {"integral_re", I.value.real()},
                           {"integral_im", I.value.imag()},
                           {"delta", delta},
                           {"converged", I.converged}});
        rep.csv_rows.push_back({std::to_string(l), std::to_string(m), fmt(delta),
                                I.converged ? "1" : "0"});
      }

    rep.result = {{"pass", pass}, {"entries", entries}};
    rep.diagnostics = {{"prefactor_statistic", mu.prefactor_statistic()},
                       {"printed_constant_mass", mu.printed_constant_mass()},
                       {"normalizer", mu.normalizer()}};
    rep.exit_code = pass ? 0 : 1;
  });
}

/* ------------------------------------------------------------------ lfun */

void setup_lfun(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("lfun", "local L-function averages");
  group->require_subcommand(1);
  auto* cmd = group->add_subcommand(
      "average", "spin local factor averaged against the measure vs the closed form");

  struct Opts {
    long d = 0, p = 0;
    int char_index = 0;
    double s = 1.0, tol = 1e-8;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--d", opts->d, "positive fundamental discriminant magnitude")->required();
  cmd->add_option("--p", opts->p, "prime")->required();
  cmd->add_option("--char-index", opts->char_index, "class-group character index")
      ->capture_default_str();
  cmd->add_option("--s", opts->s, "real evaluation point, s > 1/2")->capture_default_str();
  cmd->add_option("--tol", opts->tol, "pass threshold for |numeric - closed form|")
      ->capture_default_str();

  cmd->callback([opts, &rep] {
    rep.command = "lfun average";
    rep.params = {{"d", opts->d},
                  {"p", opts->p},
                  {"char_index", opts->char_index},
                  {"s", opts->s},
                  {"tol", opts->tol}};
    auto [G, chi] = group_char(opts->d, opts->char_index);
    auto avg = lfun::average_local_factor(G, chi, opts->p, std::complex<double>(opts->s, 0.0));
    double diff = std::abs(avg.numeric - avg.closed_form);
    bool pass = diff <= opts->tol;
    rep.result = {{"numeric_re", avg.numeric.real()},
                  {"numeric_im", avg.numeric.imag()},
                  {"closed_form_re", avg.closed_form.real()},
                  {"closed_form_im", avg.closed_form.imag()},
                  {"abs_diff", diff},
                  {"pass", pass}};
    rep.diagnostics = {{"quadrature_err_estimate", avg.err_estimate}};
    rep.csv_header = {"numeric_re", "numeric_im", "closed_form_re", "closed_form_im",
                      "abs_diff"};
    rep.csv_rows = {{fmt(avg.numeric.real()), fmt(avg.numeric.imag()),
                     fmt(avg.closed_form.real()), fmt(avg.closed_form.imag()), fmt(diff)}};
    rep.exit_code = pass ? 0 : 1;
  });
}

/* -------------------------------------------------------------- lowlying */

void setup_lowlying(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("lowlying", "low-lying zero statistics");
  group->require_subcommand(1);
  auto* cmd = group->add_subcommand(
      "density", "Monte Carlo one-level density of a synthetic local family");

  struct Opts {
    long d = 4;
    int char_index = 0;
    double k = 10000.0, alpha = 0.25;
    long prime_cutoff = 1000, samples = 10000;
    std::uint64_t seed = 1;
  };
  auto opts = std::make_shared<Opts>();
  cmd->add_option("--d", opts->d, "positive fundamental discriminant magnitude")
      ->capture_default_str();
  cmd->add_option("--char-index", opts->char_index, "class-group character index")
      ->capture_default_str();
  cmd->add_option("--k", opts->k, "weight parameter (analytic conductor k^2)")
      ->capture_default_str();
  cmd->add_option("--alpha", opts->alpha, "Fejer test-function support")->capture_default_str();
  cmd->add_option("--prime-cutoff", opts->prime_cutoff, "largest prime in the sum")
      ->capture_default_str();
  cmd->add_option("--samples", opts->samples, "Monte Carlo sample count")->capture_default_str();
  cmd->add_option("--seed", opts->seed, "RNG seed")->capture_default_str();

  cmd->callback([opts, &rep] {
    rep.command = "lowlying density";
    rep.params = {{"d", opts->d},           {"char_index", opts->char_index},
                  {"k", opts->k},           {"alpha", opts->alpha},
                  {"prime_cutoff", opts->prime_cutoff}, {"samples", opts->samples},
                  {"seed", opts->seed}};
    auto [G, chi] = group_char(opts->d, opts->char_index);
    auto phi = lowlying::fejer_test_function(opts->alpha);
    if (opts->alpha >= lowlying::kAlphaTheoremLimit)
      rep.warnings.push_back("alpha >= 4/15: outside the proven support range, "
                             "density statement is conjectural there");
    auto est = lowlying::synthetic_family_density(opts->k, G, chi, phi, opts->prime_cutoff,
                                                  opts->samples, opts->seed);
    double expectation =
        lowlying::synthetic_family_expectation(opts->k, G, chi, phi, opts->prime_cutoff);
    double z = (est.estimate - expectation) / (est.std_error > 0 ? est.std_error : 1.0);
    rep.result = {{"estimate", est.estimate},
                  {"std_error", est.std_error},
                  {"n_samples", est.n_samples},
                  {"prime_cutoff", est.prime_cutoff},
                  {"expectation", expectation},
                  {"target_sp", est.target_sp},
                  {"target_o", est.target_o}};
    rep.diagnostics = {{"z_score_vs_expectation", z},
                       {"alpha_theorem_limit", lowlying::kAlphaTheoremLimit}};
    rep.csv_header = {"estimate", "std_error", "expectation", "target_sp", "target_o"};
    rep.csv_rows = {{fmt(est.estimate), fmt(est.std_error), fmt(expectation),
                     fmt(est.target_sp), fmt(est.target_o)}};
  });
}

/* ------------------------------------------------------------------- rmt */

void setup_rmt(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("rmt", "compact-group eigenangle ensembles");
  group->require_subcommand(1);

  {
    auto* cmd = group->add_subcommand("cn", "1 / E[det(1 - g)] over SO(2n), target 1/2");
    struct Opts {
      int n = 2;
      long samples = 100000;
      std::uint64_t seed = 1;
    };
    auto opts = std::make_shared<Opts>();
    cmd->add_option("--n", opts->n, "half-rank, 1 <= n <= 4")->capture_default_str();
    cmd->add_option("--samples", opts->samples, "Monte Carlo sample count (>= 10000)")
        ->capture_default_str();
    cmd->add_option("--seed", opts->seed, "RNG seed")->capture_default_str();

    cmd->callback([opts, &rep] {
      rep.command = "rmt cn";
      rep.params = {{"n", opts->n}, {"samples", opts->samples}, {"seed", opts->seed}};
      auto est = rmt::estimate_cn(opts->n, opts->samples, opts->seed);
      rep.result = {{"n", opts->n},
                    {"estimate", est.value},
                    {"std_error", est.std_error},
                    {"target", 0.5},
                    {"deviation", est.value - 0.5}};
      rep.diagnostics = {{"n_samples", est.n_samples}};
      rep.csv_header = {"n", "estimate", "std_error", "deviation"};
      rep.csv_rows = {{std::to_string(opts->n), fmt(est.value), fmt(est.std_error),
                       fmt(est.value - 0.5)}};
    });
  }

  {
    auto* cmd = group->add_subcommand(
        "density", "Monte Carlo one-level density of scaled eigenangles");
    struct Opts {
      std::string ensemble = "usp";
      int n = 4;
      double alpha = 0.25;
      long samples = 100000;
      std::uint64_t seed = 1;
      bool weighted = false;
    };
    auto opts = std::make_shared<Opts>();
    cmd->add_option("--ensemble", opts->ensemble, "usp or so")
        ->check(CLI::IsMember({"usp", "so"}))
        ->capture_default_str();
    cmd->add_option("--n", opts->n, "half-rank, 1 <= n <= 6")->capture_default_str();
    cmd->add_option("--alpha", opts->alpha, "Fejer test-function support")
        ->capture_default_str();
    cmd->add_option("--samples", opts->samples, "Monte Carlo sample count")
        ->capture_default_str();
    cmd->add_option("--seed", opts->seed, "RNG seed")->capture_default_str();
    cmd->add_flag("--weighted", opts->weighted,
                  "weight SO(2n) samples by det(1 - g) (self-normalized ratio)");

    cmd->callback([opts, &rep] {
      rep.command = "rmt density";
      rep.params = {{"ensemble", opts->ensemble}, {"n", opts->n},
                    {"alpha", opts->alpha},       {"samples", opts->samples},
                    {"seed", opts->seed},         {"weighted", opts->weighted}};
      auto e = opts->ensemble == "usp" ? rmt::Ensemble::USp : rmt::Ensemble::SOeven;
      auto phi = lowlying::fejer_test_function(opts->alpha);
      auto est = rmt::one_level_density(e, opts->n, phi, opts->samples, opts->seed,
                                        opts->weighted);
      /* unweighted targets; the det-weighted SO average shifts toward Sp */
      double target = e == rmt::Ensemble::USp
                          ? lowlying::sigma_integral(phi, lowlying::SymmetryType::Sp)
                          : lowlying::sigma_integral(phi, lowlying::SymmetryType::O);
      rep.result = {{"ensemble", opts->ensemble},
                    {"n", opts->n},
                    {"weighted", opts->weighted},
                    {"estimate", est.value},
                    {"std_error", est.std_error},
                    {"target_large_n", target},
                    {"deviation", est.value - target}};
      rep.diagnostics = {
          {"sigma_sp", lowlying::sigma_integral(phi, lowlying::SymmetryType::Sp)},
          {"sigma_o", lowlying::sigma_integral(phi, lowlying::SymmetryType::O)}};
      rep.csv_header = {"ensemble", "n", "estimate", "std_error", "target_large_n"};
      rep.csv_rows = {{opts->ensemble, std::to_string(opts->n), fmt(est.value),
                       fmt(est.std_error), fmt(target)}};
    });
  }
}

/* ------------------------------------------------------------------- gl2 */

void setup_gl2(CLI::App& app, Report& rep) {
  auto* group = app.add_subcommand("gl2", "elliptic modular analogues");
  group->require_subcommand(1);

  {
    auto* cmd = group->add_subcommand(
        "petersson", "Kloosterman side of the Petersson formula at (L, 1)");
    struct Opts {
      int k = 14;
      long L = 1, c_max = 10000;
      double tol = -1.0;
    };
    auto opts = std::make_shared<Opts>();
    cmd->add_option("--k", opts->k, "even weight >= 6")->capture_default_str();
    cmd->add_option("--L", opts->L, "Hecke eigenvalue index")->capture_default_str();
    cmd->add_option("--c-max", opts->c_max, "modulus cutoff")->capture_default_str();
    cmd->add_option("--tol", opts->tol,
                    "if set, require |value - delta(L,1)| <= tol (dimension-zero weights)");

    cmd->callback([opts, &rep] {
      rep.command = "gl2 petersson";
      rep.params = {{"k", opts->k}, {"L", opts->L}, {"c_max", opts->c_max}};
      auto side = gl2::petersson_kloosterman_side(opts->k, opts->L, opts->c_max);
      double delta = opts->L == 1 ? 1.0 : 0.0;
      double dev = std::abs(side.value - delta);
      rep.result = {{"value", side.value},
                    {"delta_target", delta},
                    {"deviation_from_delta", dev},
                    {"tail_bound", side.tail_bound}};
      rep.diagnostics = {{"insufficient_cutoff", side.insufficient_cutoff}};
      if (side.insufficient_cutoff)
        rep.warnings.push_back("tail bound above 1e-8; raise --c-max for a sharper value");
      if (opts->tol >= 0.0) {
        bool pass = dev <= opts->tol;
        rep.result["pass"] = pass;
        rep.params["tol"] = opts->tol;
        rep.exit_code = pass ? 0 : 1;
      }
      rep.csv_header = {"k", "L", "value", "deviation_from_delta", "tail_bound"};
      rep.csv_rows = {{std::to_string(opts->k), std::to_string(opts->L), fmt(side.value),
                       fmt(dev), fmt(side.tail_bound)}};
    });
  }

  {
    auto* cmd = group->add_subcommand(
        "bessel-bounds", "fitted constants for three J-Bessel envelope bounds (< 1 passes)");
    cmd->callback([&rep] {
      rep.command = "gl2 bessel-bounds";
      std::vector<int> k_range;
      for (int k = 1; k <= 100; k += 3) k_range.push_back(k);
      k_range.push_back(150);
      k_range.push_back(200);
      std::vector<double> x_grid;
      for (double x = 0.25; x <= 400.0; x *= 1.3) x_grid.push_back(x);
      rep.params = {{"k_min", 1},
                    {"k_max", 200},
                    {"x_min", x_grid.front()},
                    {"x_max", x_grid.back()}};
      auto fits = gl2::verify_bessel_bounds(k_range, x_grid);
      bool pass = true;
      json rows = json::array();
      rep.csv_header = {"bound_id", "max_ratio", "points_checked"};
      for (const auto& f : fits) {
        pass = pass && std::isfinite(f.max_ratio) && f.max_ratio < 1.0;
        rows.push_back({{"bound_id", f.bound_id},
                        {"max_ratio", f.max_ratio},
                        {"points_checked", f.points_checked}});
        rep.csv_rows.push_back({std::to_string(f.bound_id), fmt(f.max_ratio),
                                std::to_string(f.points_checked)});
      }
      rep.result = {{"pass", pass}, {"bounds", rows}};
      rep.diagnostics = {{"bound_1", "x^k / Gamma(k+1), for 0 < x <= sqrt(k+1)"},
                         {"bound_2", "min(1, x/k) k^{-1/3}, for x >= 1"},
                         {"bound_3", "2^k / sqrt(x)"}};
      rep.exit_code = pass ? 0 : 1;
    });
  }

  {
    auto* cmd = group->add_subcommand(
        "tau", "exact tau(1..n) with Hecke multiplicativity checks");
    struct Opts {
      int n = 30;
    };
    auto opts = std::make_shared<Opts>();
    cmd->add_option("--n", opts->n, "expansion length, 1 <= n <= 10000")->capture_default_str();

    cmd->callback([opts, &rep] {
      rep.command = "gl2 tau";
      rep.params = {{"n", opts->n}};
      auto qexp = gl2::delta_q_expansion(opts->n);
      const auto& tau = qexp.tau;

      long pairs = 0, triples = 0, violations = 0;
      for (long a = 2; a * a <= opts->n; ++a)
        for (long b = a + 1; a * b <= opts->n; ++b) {
          if (std::gcd(a, b) != 1) continue;
          ++pairs;
          if (tau[a * b - 1] != tau[a - 1] * tau[b - 1]) ++violations;
        }
      /* tau(p^{e+1}) = tau(p) tau(p^e) - p^11 tau(p^{e-1}) */
      for (long p = 2; p * p <= opts->n; ++p) {
        if (!bplab::is_prime(p)) continue;
        mpz_class p11;
        mpz_ui_pow_ui(p11.get_mpz_t(), static_cast<unsigned long>(p), 11);
        for (long q = p * p; q <= opts->n; q *= p) {
          ++triples;
          if (tau[q - 1] != tau[p - 1] * tau[q / p - 1] - p11 * tau[q / (p * p) - 1])
            ++violations;
          if (q > opts->n / p) break;
        }
      }
      bool pass = violations == 0;

      json taus = json::array();
      rep.csv_header = {"n", "tau"};
      for (int i = 0; i < opts->n; ++i) {
        taus.push_back(tau[i].get_str());
        rep.csv_rows.push_back({std::to_string(i + 1), tau[i].get_str()});
      }
      rep.result = {{"tau", taus},
                    {"multiplicative_pairs_checked", pairs},
                    {"hecke_power_triples_checked", triples},
                    {"violations", violations},
                    {"pass", pass}};
      rep.diagnostics = {{"coefficient_type", "exact integer"}};
      rep.exit_code = pass ? 0 : 1;
    });
  }
}

void render(const Report& rep, const std::string& format, std::ostream& out,
            std::ostream& err) {
  for (const auto& w : rep.warnings) err << "warning: " << w << "\n";
  if (format == "csv") {
    std::string line;
    for (std::size_t i = 0; i < rep.csv_header.size(); ++i)
      line += (i ? "," : "") + csv_escape(rep.csv_header[i]);
    out << line << "\n";
    for (const auto& row : rep.csv_rows) {
      line.clear();
      for (std::size_t i = 0; i < row.size(); ++i)
        line += (i ? "," : "") + csv_escape(row[i]);
      out << line << "\n";
    }
    for (const auto& [key, value] : rep.diagnostics.items())
      err << "# " << key << "=" << value.dump() << "\n";
    return;
  }
  json env;
  env["version"] = kVersion;
  env["command"] = rep.command;
  env["params"] = rep.params;
  env["result"] = rep.result;
  json diag = rep.diagnostics;
  if (!rep.warnings.empty()) diag["warnings"] = rep.warnings;
  env["diagnostics"] = diag;
  out << env.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"bplab: local spectral toolkit for Bessel periods on GSp(4)"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.set_version_flag("--version", kVersion);

  Report rep;
  setup_sugano(app, rep);
  setup_classgroup(app, rep);
  setup_measure(app, rep);
  setup_lfun(app, rep);
  setup_lowlying(app, rep);
  setup_rmt(app, rep);
  setup_gl2(app, rep);

  /* --format may appear after the subcommand */
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: computation failed: " << e.what() << "\n";
    return 1;
  }

  render(rep, format, out, err);
  return rep.exit_code;
}

int run_cli(const std::vector<std::string>& args) {
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace bplab::cli
