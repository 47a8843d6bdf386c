#include "parafock/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "parafock/algebra.hpp"
#include "parafock/coherent.hpp"
#include "parafock/fockspace.hpp"
#include "parafock/resolution.hpp"
#include "parafock/specfun.hpp"
#include "parafock/suite.hpp"
#include "parafock/zeromodes.hpp"

namespace parafock::cli {

namespace {

using Cell = std::variant<long long, double, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
  bool verification_failed = false;

  void add_summary(std::string key, Cell v) { summary.emplace_back(std::move(key), std::move(v)); }
};

// Thrown for bad option values found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_real(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::string>) return v;
        else return std::to_string(v);
      },
      c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw UsageError(flag + " expects RE,IM (got '" + text + "')");
  auto parse = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
      throw UsageError(flag + " expects RE,IM (got '" + text + "')");
    return v;
  };
  const std::string_view sv(text);
  return {parse(sv.substr(0, comma)), parse(sv.substr(comma + 1))};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

// ---------------------------------------------------------------- options

struct Options {
  double p = 2.5;
  int cutoff = 8;
  int j = 0, k = 0, l = 0, n = 0;
  std::string alpha = "0,0", alpha_prime = "0,0", beta = "0,0";
  std::optional<int> nmax;
  int kmax = 12;
  double tol = 0.0;
  std::string gen = "b1+";
  std::string kind = "I";
  std::string mode = "offdiag";
  std::string cat;
  bool normalized = false;
  bool matrix = false;
  double nu = 0.0, x = 1.0;
  int ncheck = 10;
};

// ---------------------------------------------------------------- commands

Table cmd_basis(const Options& o) {
  const FockBasis basis(o.p, o.cutoff);
  Table t;
  t.columns = {"m12", "m22", "m11", "w1", "w2", "index"};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& m = basis[i];
    const auto w = weight_of(m, o.p);
    t.rows.push_back({Cell(static_cast<long long>(m.m12)), Cell(static_cast<long long>(m.m22)),
                      Cell(static_cast<long long>(m.m11)), w.w1, w.w2, static_cast<long long>(i)});
  }
  t.add_summary("size", static_cast<long long>(basis.size()));
  return t;
}

Table cmd_op_matrix(const Options& o) {
  const auto g = parse_generator(o.gen);
  require(g.has_value(), "--gen must be one of b1+, b1-, b2+, b2-, h1, h2");
  const FockBasis basis(o.p, o.cutoff);
  const auto op = build_generator(*g, basis);
  Table t;
  t.columns = {"row", "col", "re", "im"};
  // Row-major order reads more naturally than the internal column order.
  std::vector<MatrixEntry> entries(op.entries().begin(), op.entries().end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (const auto& e : entries)
    t.rows.push_back({static_cast<long long>(e.row), static_cast<long long>(e.col), e.value.real(),
                      e.value.imag()});
  t.add_summary("dim", static_cast<long long>(op.dim()));
  t.add_summary("nnz", static_cast<long long>(op.nnz()));
  t.add_summary("boundary_columns", static_cast<long long>(op.boundary_rows().size()));
  return t;
}

Table cmd_verify_triple(const Options& o) {
  const double tol = o.tol > 0 ? o.tol : 1e-12;
  const FockBasis basis(o.p, o.cutoff);
  const auto rep = verify_triple_relations(basis, tol);
  Table t;
  t.columns = {"relation", "max_deviation", "passed"};
  for (const auto& r : rep.relations) t.rows.push_back({r.label(), r.max_deviation, r.passed});
  t.add_summary("interior_columns", static_cast<long long>(rep.interior_columns));
  t.add_summary("max_deviation", rep.max_deviation());
  t.add_summary("all_passed", rep.all_passed());
  t.verification_failed = !rep.all_passed();
  return t;
}

Table cmd_zeromodes(const Options& o) {
  const auto c = zero_mode_coeffs(o.j, o.k, o.p);
  const FockBasis basis(o.p, std::max(o.cutoff, o.j + o.k));
  const auto z = zero_mode_vector(basis, o.j, o.k);
  const double residual = build_generator(Generator::B1Minus, basis).apply(z).norm();
  const auto ko = kernel_oracle(basis, o.j, o.k);
  double alignment = 0.0;
  if (ko.dimension == 1)
    for (std::size_t i = 0; i < ko.block.size(); ++i)
      alignment += ko.vectors[0][i] * z[ko.block[i]].real();
  double sum = 0.0;
  Table t;
  t.columns = {"i", "c_i"};
  for (std::size_t i = 0; i < c.size(); ++i) {
    t.rows.push_back({static_cast<long long>(i), c[i]});
    sum += c[i] * c[i];
  }
  const double misalignment = 1.0 - std::abs(alignment);
  t.add_summary("sum_squares", sum);
  t.add_summary("annihilation_residual", residual);
  t.add_summary("kernel_dimension", static_cast<long long>(ko.dimension));
  t.add_summary("kernel_misalignment", misalignment);
  t.verification_failed = std::abs(sum - 1.0) > 1e-12 || residual > 1e-12 || ko.dimension != 1 ||
                          misalignment > 1e-12;
  return t;
}

Table cmd_coherent(const Options& o) {
  const Complex a = parse_complex(o.alpha, "--alpha");
  auto s = build_coherent(o.p, o.j, o.k, a, o.nmax, o.normalized && o.cat.empty());
  Table t;
  if (!o.cat.empty()) {
    require(o.cat == "+" || o.cat == "-", "--cat must be + or -");
    s = cat_state(s, o.cat == "+" ? CatSign::Plus : CatSign::Minus);
  }
  t.columns = {"n", "re", "im"};
  for (int n = 0; n <= s.nmax(); ++n) {
    const auto& c = s.coeffs[static_cast<std::size_t>(n)];
    t.rows.push_back({static_cast<long long>(n), c.real(), c.imag()});
  }
  t.add_summary("nmax", static_cast<long long>(s.nmax()));
  t.add_summary("norm_squared", s.norm_squared());
  t.add_summary("closed_form_norm", coherent_norm(o.p, o.j, a));
  t.add_summary("tail_bound", s.tail_bound);
  if (o.cat.empty()) {
    const double res = eigen_residual(s);
    t.add_summary("eigen_residual", res);
    t.add_summary("expected_residual", std::abs(a) * std::abs(s.coeffs.back()));
  }
  return t;
}

Table cmd_b2_elements(const Options& o) {
  const Complex a = parse_complex(o.alpha, "--alpha");
  const Complex ap = parse_complex(o.alpha_prime, "--alpha-prime");
  require(o.k >= 1, "--k must be at least 1");
  const int nmax = o.nmax.value_or(30);
  const FockBasis basis(o.p, o.j + 1 + o.k + nmax);
  Table t;
  t.columns = {"jp", "closed_re", "closed_im", "oracle_re", "oracle_im", "deviation", "budget"};
  double worst = 0.0;
  for (int jp = o.j - 1; jp <= o.j + 1; ++jp) {
    if (jp < 0) continue;
    const Complex c = b2_element(o.p, jp, ap, o.j, o.k, a);
    const auto orc = b2_element_oracle(basis, jp, ap, o.j, o.k, a, nmax);
    const double dev = std::abs(c - orc.value);
    worst = std::max(worst, dev - orc.error_budget);
    t.rows.push_back({static_cast<long long>(jp), c.real(), c.imag(), orc.value.real(),
                      orc.value.imag(), dev, orc.error_budget});
  }
  t.add_summary("max_excess_deviation", worst);
  t.verification_failed = worst > 1e-8;
  return t;
}

Table cmd_bicoherent(const Options& o) {
  const Complex a = parse_complex(o.alpha, "--alpha");
  const Complex b = parse_complex(o.beta, "--beta");
  const auto s = bicoherent(o.p, o.j, o.l, a, b, o.kmax, o.nmax);
  Table t;
  t.columns = {"k", "re", "im"};
  for (int k = 0; k <= s.kmax; ++k) {
    const auto& c = s.prefactors[static_cast<std::size_t>(k)];
    t.rows.push_back({static_cast<long long>(k), c.real(), c.imag()});
  }
  t.add_summary("norm", s.norm);
  t.add_summary("b1_residual", s.b1_residual);
  t.add_summary("b1_bound", s.b1_bound);
  t.add_summary("b2sq_residual", s.b2sq_residual);
  t.add_summary("b2sq_bound", s.b2sq_bound);
  // Residuals below the double-rounding floor cannot be compared with a tinier bound.
  const double allowance = 1e-13;
  bool ok = s.b1_residual <= s.b1_bound * (1 + 1e-10) + allowance &&
            s.b2sq_residual <= s.b2sq_bound * (1 + 1e-10) + allowance;
  if (o.matrix) {
    const FockBasis basis(o.p, s.j + 2 * s.kmax + s.l + s.ladder.nmax());
    const auto m = bicoherent_matrix_residuals(s, basis);
    t.add_summary("b1_residual_matrix", m.b1);
    t.add_summary("b2sq_residual_matrix", m.b2sq);
    ok = ok && m.b1 <= s.b1_bound * (1 + 1e-10) + allowance &&
         m.b2sq <= s.b2sq_bound * (1 + 1e-10) + allowance;
  }
  t.verification_failed = !ok;
  return t;
}

Table cmd_bessel(const Options& o) {
  require(o.kind == "i" || o.kind == "k", "--kind must be i or k");
  const auto r = o.kind == "i" ? bessel_i(o.nu, o.x) : bessel_k(o.nu, o.x);
  Table t;
  t.columns = {"value", "terms_used", "tail_bound"};
  t.rows.push_back({r.value, static_cast<long long>(r.terms_used), r.tail_bound});
  return t;
}

Table cmd_moments(const Options& o) {
  require(o.kind == "I" || o.kind == "II", "--kind must be I or II");
  const int nmax = o.nmax.value_or(5);
  require(nmax >= 0 && nmax <= 8, "--nmax must lie in 0..8");
  const double tol = o.tol > 0 ? o.tol : 1e-8;
  const auto kind = o.kind == "I" ? MeasureKind::I : MeasureKind::II;
  Table t;
  t.columns = {"n", "quadrature", "closed_form", "rel_err"};
  double worst = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    const auto m = stieltjes_moment_check(kind, o.p, o.j, n);
    worst = std::max(worst, m.rel_err);
    t.rows.push_back({static_cast<long long>(n), m.quadrature, m.closed_form, m.rel_err});
  }
  t.add_summary("max_rel_err", worst);
  t.verification_failed = !(worst <= tol);
  return t;
}

Table cmd_resolution(const Options& o) {
  require(o.mode == "offdiag" || o.mode == "cat", "--mode must be offdiag or cat");
  const double tol = o.tol > 0 ? o.tol : 1e-6;
  const auto r = resolution_identity_check(
      o.p, o.j, o.ncheck, o.mode == "cat" ? ResolutionMode::Cat : ResolutionMode::OffDiagonal);
  Table t;
  t.columns = {"m", "n", "value", "deviation"};
  for (std::size_t m = 0; m < r.entries.size(); ++m)
    for (std::size_t n = 0; n < r.entries.size(); ++n)
      t.rows.push_back({static_cast<long long>(m), static_cast<long long>(n), r.entries[m][n],
                        r.entries[m][n] - (m == n ? 1.0 : 0.0)});
  t.add_summary("max_abs_deviation", r.max_abs_deviation);
  t.add_summary("min_measure", r.min_measure);
  t.add_summary("nodes", static_cast<long long>(r.nodes));
  t.verification_failed = !(r.max_abs_deviation <= tol) || !(r.min_measure > 0.0);
  return t;
}

Table cmd_verify_all(const Options& o, bool p_given) {
  SuiteOptions opt;
  if (p_given) opt.extra_p = o.p;
  opt.cutoff = o.cutoff;
  const auto results = run_acceptance_suite(opt);
  Table t;
  t.columns = {"id", "name", "passed", "measured", "threshold", "seconds", "detail"};
  bool all = true;
  double total = 0.0;
  for (const auto& r : results) {
    t.rows.push_back({static_cast<long long>(r.id), r.name, r.passed, r.measured, r.threshold,
                      r.seconds, r.detail});
    all = all && r.passed;
    total += r.seconds;
  }
  t.add_summary("all_passed", all);
  t.add_summary("seconds", total);
  t.verification_failed = !all;
  return t;
}

// ---------------------------------------------------------------- output

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
  for (const auto& [k, v] : t.summary) os << "# " << k << '=' << cell_text(v) << '\n';
}

void write_json(std::ostream& os, const Table& t, const nlohmann::ordered_json& meta) {
  nlohmann::ordered_json doc;
  doc["meta"] = meta;
  auto data = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    data.push_back(std::move(obj));
  }
  doc["data"] = std::move(data);
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.summary) summary[k] = cell_json(v);
  doc["summary"] = std::move(summary);
  os << doc.dump(2) << '\n';
}

nlohmann::ordered_json echo_config(const CLI::App& sub) {
  nlohmann::ordered_json meta;
  meta["program"] = "parafock";
  meta["subcommand"] = sub.get_name();
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    if (opt->get_lnames()[0] == "help" || opt->get_lnames()[0] == "help-all") continue;
    const auto& name = opt->get_lnames()[0];
    if (opt->get_expected_max() == 0) {
      cfg[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      cfg[name] = opt->results().size() == 1 ? nlohmann::ordered_json(opt->results()[0])
                                             : nlohmann::ordered_json(opt->results());
    } else if (!opt->get_default_str().empty()) {
      cfg[name] = opt->get_default_str();
    } else {
      cfg[name] = nullptr;
    }
  }
  meta["config"] = std::move(cfg);
  return meta;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Paraboson Fock space, coherent states and resolution of identity for osp(1|4)",
               "parafock"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  std::string format = "csv";
  std::string output;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write results to this file instead of standard output");

  Options o;
  auto* sub_basis = app.add_subcommand("basis", "Enumerate the truncated Gelfand-Zetlin basis");
  auto* sub_op = app.add_subcommand("op-matrix", "Sparse matrix of one generator");
  auto* sub_triple = app.add_subcommand("verify-triple", "Check all 64 triple relations on interior patterns");
  auto* sub_zero = app.add_subcommand("zeromodes", "Zero-mode coefficients with annihilation and kernel checks");
  auto* sub_coh = app.add_subcommand("coherent", "Coherent-state coefficients on the ladder basis");
  auto* sub_b2 = app.add_subcommand("b2-elements", "Closed-form b2- matrix elements against the matrix engine");
  auto* sub_bic = app.add_subcommand("bicoherent", "Bicoherent state prefactors and eigen-residuals");
  auto* sub_bes = app.add_subcommand("bessel", "Modified Bessel functions I and K");
  auto* sub_mom = app.add_subcommand("moments", "Stieltjes moments of the radial measures");
  auto* sub_res = app.add_subcommand("resolution", "Resolution-of-identity matrix by radial quadrature");
  auto* sub_all = app.add_subcommand("verify-all", "Run the full acceptance suite");

  // Every --format/--output placement works: also accept them after the subcommand.
  for (auto* s : app.get_subcommands({})) {
    s->fallthrough();
  }

  auto add_p = [&](CLI::App* s) {
    return s->add_option("--p", o.p, "Order of statistics p > 1")->capture_default_str();
  };
  auto add_cutoff = [&](CLI::App* s, int def) {
    o.cutoff = def;
    return s->add_option("--cutoff", o.cutoff, "Largest m12 kept in the basis")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };

  add_p(sub_basis);
  sub_basis->add_option("--cutoff", o.cutoff, "Largest m12 kept in the basis")->capture_default_str();

  add_p(sub_op);
  sub_op->add_option("--cutoff", o.cutoff, "Largest m12 kept in the basis")->capture_default_str();
  sub_op->add_option("--gen", o.gen, "Generator: b1+, b1-, b2+, b2-, h1, h2")->capture_default_str();

  add_p(sub_triple);
  sub_triple->add_option("--cutoff", o.cutoff, "Largest m12 kept in the basis")->capture_default_str();
  sub_triple->add_option("--tol", o.tol, "Tolerance (default 1e-12)");

  add_p(sub_zero);
  sub_zero->add_option("--j", o.j, "Zero-mode label j")->capture_default_str();
  sub_zero->add_option("--k", o.k, "Zero-mode label k")->capture_default_str();
  sub_zero->add_option("--cutoff", o.cutoff, "Basis cutoff (raised to j+k if smaller)")->capture_default_str();

  add_p(sub_coh);
  sub_coh->add_option("--j", o.j, "Label j")->capture_default_str();
  sub_coh->add_option("--k", o.k, "Label k")->capture_default_str();
  sub_coh->add_option("--alpha", o.alpha, "Eigenvalue as RE,IM")->capture_default_str();
  sub_coh->add_option("--nmax", o.nmax, "Ladder truncation (default: automatic)");
  sub_coh->add_flag("--normalized", o.normalized, "Divide by the closed-form norm");
  sub_coh->add_option("--cat", o.cat, "Cat state sign, + or -");

  add_p(sub_b2);
  sub_b2->add_option("--j", o.j, "Ket label j")->capture_default_str();
  sub_b2->add_option("--k", o.k, "Ket label k (bra has k-1)")->capture_default_str();
  sub_b2->add_option("--alpha", o.alpha, "Ket eigenvalue as RE,IM")->capture_default_str();
  sub_b2->add_option("--alpha-prime", o.alpha_prime, "Bra eigenvalue as RE,IM")->capture_default_str();
  sub_b2->add_option("--nmax", o.nmax, "Ladder truncation of the oracle (default 30)");

  add_p(sub_bic);
  sub_bic->add_option("--j", o.j, "Label j")->capture_default_str();
  sub_bic->add_option("--l", o.l, "Label l, j or j+1")->capture_default_str();
  sub_bic->add_option("--alpha", o.alpha, "b1- eigenvalue as RE,IM")->capture_default_str();
  sub_bic->add_option("--beta", o.beta, "(b2-)^2 eigenvalue as RE,IM")->capture_default_str();
  sub_bic->add_option("--kmax", o.kmax, "Number of components minus one")->capture_default_str();
  sub_bic->add_option("--nmax", o.nmax, "Ladder truncation (default: automatic)");
  sub_bic->add_flag("--matrix", o.matrix, "Also assemble the state and check with the matrix engine");

  sub_bes->add_option("--kind", o.kind, "i or k")->required();
  sub_bes->add_option("--nu", o.nu, "Order")->required();
  sub_bes->add_option("--x", o.x, "Argument")->required();

  add_p(sub_mom);
  sub_mom->add_option("--j", o.j, "Label j")->capture_default_str();
  sub_mom->add_option("--kind", o.kind, "I or II")->capture_default_str();
  sub_mom->add_option("--nmax", o.nmax, "Largest moment index (default 5)");
  sub_mom->add_option("--tol", o.tol, "Relative tolerance (default 1e-8)");

  add_p(sub_res);
  sub_res->add_option("--j", o.j, "Label j")->capture_default_str();
  sub_res->add_option("--ncheck", o.ncheck, "Largest ladder index checked")->capture_default_str();
  sub_res->add_option("--mode", o.mode, "offdiag or cat")->capture_default_str();
  sub_res->add_option("--tol", o.tol, "Tolerance on the deviation (default 1e-6)");

  auto* all_p = add_p(sub_all);
  add_cutoff(sub_all, 8);
  o.cutoff = 8;

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    Table t;
    if (sub == sub_basis) t = cmd_basis(o);
    else if (sub == sub_op) t = cmd_op_matrix(o);
    else if (sub == sub_triple) t = cmd_verify_triple(o);
    else if (sub == sub_zero) t = cmd_zeromodes(o);
    else if (sub == sub_coh) t = cmd_coherent(o);
    else if (sub == sub_b2) t = cmd_b2_elements(o);
    else if (sub == sub_bic) t = cmd_bicoherent(o);
    else if (sub == sub_bes) t = cmd_bessel(o);
    else if (sub == sub_mom) t = cmd_moments(o);
    else if (sub == sub_res) t = cmd_resolution(o);
    else t = cmd_verify_all(o, all_p->count() > 0);

    std::ofstream file;
    if (!output.empty()) {
      file.open(output);
      if (!file) {
        err << "error: cannot open " << output << " for writing\n";
        return kExitUsage;
      }
    }
    std::ostream& os = output.empty() ? out : file;
    if (format == "json") {
      auto meta = echo_config(*sub);
      meta["format"] = format;
      meta["output"] = output.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(output);
      write_json(os, t, meta);
    } else {
      write_csv(os, t);
    }
    return t.verification_failed ? kExitVerificationFailed : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace parafock::cli
