#include "diskwalk_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diskwalk/dimension_walks.hpp"
#include "diskwalk/errors.hpp"
#include "diskwalk/families.hpp"
#include "diskwalk/hermitian.hpp"
#include "diskwalk/json_io.hpp"
#include "diskwalk/positivity.hpp"
#include "diskwalk/quadrature.hpp"

namespace diskwalk::cli {

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

struct Globals {
  int q = 2;
  bool q_given = false;
  double tol = 1e-10;
  std::int64_t n_max = default_n_max;
  std::uint64_t seed = 42;
};

struct Source {
  std::string in;
  std::string family;
  std::string builtin;
};

std::string read_text(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw format_error("cannot read " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw format_error("cannot write " + path);
  file << text << '\n';
  if (!file) throw format_error("failed writing " + path);
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text << '\n';
  } else {
    write_text(path, text);
  }
}

bool is_integer_literal(const std::string& s) {
  long long v;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool is_number_literal(const std::string& s) {
  double v;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size() && std::isfinite(v);
}

// "name,key=value,..." → FamilySpec JSON text.
std::string builtin_to_json(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.empty() || parts[0].empty()) throw format_error("empty --builtin");
  std::string json = "{\"family\":\"";
  for (char c : parts[0]) {
    if (!std::isalnum(static_cast<unsigned char>(c))) throw format_error("bad family name in --builtin");
    json += c;
  }
  json += "\",\"params\":{";
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string::npos) throw format_error("--builtin parameters take the form key=value");
    const std::string key = parts[i].substr(0, eq);
    std::string value = parts[i].substr(eq + 1);
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        })) {
      throw format_error("bad parameter name in --builtin");
    }
    if (!is_integer_literal(value)) {
      if (!is_number_literal(value)) throw format_error("parameter " + key + " is not a number");
      value = shortest(std::stod(value));
    }
    if (i > 1) json += ',';
    json += "\"" + key + "\":" + value;
  }
  return json + "}}";
}

FamilySpec load_family(const Source& src, const Globals& g) {
  if (!src.family.empty() && !src.builtin.empty()) throw format_error("--family and --builtin are exclusive");
  std::string text;
  if (!src.builtin.empty()) {
    text = builtin_to_json(src.builtin);
  } else {
    const auto first = src.family.find_first_not_of(" \t\r\n");
    text = (first != std::string::npos && src.family[first] == '{') ? src.family : read_text(src.family);
  }
  FamilySpec spec = family_from_json(text);
  if (g.q_given) spec.q = g.q;
  spec.validate();
  return spec;
}

int table_q(const CoefficientTable& table, const Globals& g) {
  const double q = table.alpha() + 2.0;
  if (g.q_given) {
    if (std::abs(q - g.q) > 1e-12) throw domain_error("table alpha does not match --q (alpha must be q - 2)");
    return g.q;
  }
  if (q != std::floor(q)) throw domain_error("table alpha is not an integer; cannot infer q");
  return static_cast<int>(q);
}

struct Kernel {
  DiskFunction f;
  int q;
};

Kernel load_kernel(const Source& src, const Globals& g) {
  const bool has_table = !src.in.empty();
  const bool has_family = !src.family.empty() || !src.builtin.empty();
  if (has_table == has_family) throw format_error("give exactly one of --in or --family/--builtin");
  if (has_table) {
    auto table = std::make_shared<CoefficientTable>(any_table_from_json(read_text(src.in)));
    const int q = table_q(*table, g);
    return {[table](complex z) { return synthesize(*table, DiskPoint(z)); }, q};
  }
  const FamilySpec spec = load_family(src, g);
  return {[spec](complex z) { return eval_family(spec, DiskPoint(z)); }, spec.q};
}

void add_source_options(CLI::App* cmd, Source& src, bool allow_table) {
  if (allow_table) cmd->add_option("--in", src.in, "Coefficient table JSON file");
  cmd->add_option("--family", src.family, "Family spec: inline JSON or a JSON file");
  cmd->add_option("--builtin", src.builtin, "Family shorthand name[,key=value...], e.g. poisson,r=0.5");
}

// ---------------------------------------------------------------------------

struct ExpandArgs {
  Source src;
  int m_max = 8;
  int n_max = 8;
  std::string out;
};

int cmd_expand(const ExpandArgs& a, const Globals& g, std::ostream& out) {
  if (a.m_max < 0 || a.n_max < 0) throw domain_error("--mmax and --nmax must be nonnegative");
  const FamilySpec spec = load_family(a.src, g);
  const auto expansion = family_coefficients(spec, a.m_max, a.n_max);
  emit(a.out, to_json(expansion.table), out);

  double max_imag = 0.0;
  double real_sum = 0.0;
  for (const auto& [key, value] : expansion.table.entries()) {
    max_imag = std::max(max_imag, std::abs(value.imag()));
    real_sum += value.real();
  }
  try {
    out << "coefficient_sum " << shortest(coefficient_sum(expansion.table)) << '\n';
  } catch (const domain_error&) {
    out << "coefficient_sum " << shortest(real_sum) << " (table has negative or complex entries)\n";
  }
  out << "max_abs_imag " << shortest(max_imag) << '\n';
  return ok;
}

struct WalkArgs {
  std::string op;
  std::string in;
  std::string out;
};

int cmd_walk(const WalkArgs& a, std::ostream& out) {
  const CoefficientTable table = any_table_from_json(read_text(a.in));
  if (a.op == "dz" || a.op == "dzbar" || a.op == "dx") {
    const auto result = a.op == "dz"      ? descente_z(table)
                        : a.op == "dzbar" ? descente_zbar(table)
                                          : descente_x(table);
    emit(a.out, to_json(result), out);
    return ok;
  }
  const MonteeResult result = a.op == "iz" ? montee_z(table) : montee_zbar(table);
  emit(a.out, to_json(result), out);
  if (!a.out.empty()) {
    out << "constant " << shortest(result.constant.real());
    if (result.constant.imag() != 0.0) out << " + " << shortest(result.constant.imag()) << "i";
    out << '\n';
  }
  return ok;
}

struct CheckArgs {
  std::string in;
  std::string set;
  double threshold = 0.0;
};

std::string describe_violations(const std::vector<IndexPair>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size() && k < 10; ++k) {
    s += " (" + std::to_string(v[k].first) + "," + std::to_string(v[k].second) + ")";
  }
  if (v.size() > 10) s += " ...";
  return s;
}

int cmd_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
  if (a.in.empty() == a.set.empty()) throw format_error("give exactly one of --in or --set");
  if (!a.set.empty()) {
    const auto first = a.set.find_first_not_of(" \t\r\n");
    const std::string text = (first != std::string::npos && a.set[first] == '{') ? a.set : read_text(a.set);
    const SpdVerdict v = spd_verdict(index_set_from_json(text), g.n_max);
    out << "spd " << describe(v) << '\n' << to_json(v) << '\n';
    return ok;
  }
  const CoefficientTable table = any_table_from_json(read_text(a.in));
  const int q = table_q(table, g);
  const PdReport pd = is_pd(table, g.tol);
  out << "pd " << (pd.positive_definite ? "yes" : "no");
  if (!pd.positive_definite) out << ", violations:" << describe_violations(pd.violations);
  out << '\n' << to_json(pd) << '\n';
  if (!pd.positive_definite) {
    out << "spd no (not positive definite)\n";
    return ok;
  }
  const SpdVerdict v = is_spd(table, q, g.n_max, a.threshold);
  out << "spd " << describe(v) << '\n' << to_json(v) << '\n';
  return ok;
}

struct GramArgs {
  Source src;
  int points = 40;
  bool all = false;
};

int cmd_gram(const GramArgs& a, const Globals& g, std::ostream& out) {
  if (a.points < 1) throw domain_error("--points must be at least 1");
  const Kernel kernel = load_kernel(a.src, g);
  const auto sample = sample_sphere(kernel.q, a.points, g.seed);
  const auto eig = hermitian_eigenvalues(gram_matrix(kernel.f, sample));
  const auto [lo, hi] = std::minmax_element(eig.begin(), eig.end());
  out << "min_eigenvalue " << shortest(*lo) << '\n';
  out << "max_eigenvalue " << shortest(*hi) << '\n';
  if (a.all) {
    out << "eigenvalues";
    for (double e : eig) out << ' ' << shortest(e);
    out << '\n';
  }
  out << (*lo >= -gram_psd_tol ? "PASS" : "FAIL") << '\n';
  return ok;
}

struct CounterexampleArgs {
  std::string name;
  int truncation = 40;
  std::string out;
};

int cmd_counterexample(const CounterexampleArgs& a, const Globals& g, std::ostream& out) {
  const CounterexampleCase c = parse_counterexample_case(a.name);
  if (a.truncation < 1) throw domain_error("--truncation must be at least 1");
  if (!a.out.empty()) write_text(a.out, to_json(counterexample_table(c, g.q, a.truncation).table));

  const WalkVerdicts verdicts = counterexample_verdicts(c, g.q, a.truncation, g.n_max);
  const WalkSpd expected = expected_conclusions(c);
  const WalkSpd got = verdicts.conclusions();

  struct Row {
    const char* label;
    const SpdVerdict& verdict;
    bool expected;
    bool got;
  };
  const Row rows[] = {
      {"f", verdicts.f, expected.f, got.f},
      {"D_z f", verdicts.dz, expected.dz, got.dz},
      {"D_zbar f", verdicts.dzbar, expected.dzbar, got.dzbar},
      {"D_x f", verdicts.dx, expected.dx, got.dx},
  };
  out << "case " << to_string(c) << ", q = " << g.q << ", truncation " << a.truncation << '\n';
  out << std::left << std::setw(10) << "function" << std::setw(38) << "verdict" << std::setw(10) << "expected"
      << "match\n";
  for (const auto& r : rows) {
    out << std::setw(10) << r.label << std::setw(38) << describe(r.verdict) << std::setw(10)
        << (r.expected ? "SPD" : "not SPD") << (r.expected == r.got ? "yes" : "NO") << '\n';
  }
  const bool match = expected == got;
  out << (match ? "all four conclusions reproduced" : "MISMATCH") << '\n';
  return match ? ok : counterexample_mismatch;
}

struct PlotArgs {
  Source src;
  int grid = 64;
  std::string out;
};

int cmd_plot_data(const PlotArgs& a, const Globals& g, std::ostream& out) {
  if (a.grid < 2) throw domain_error("--grid must be at least 2");
  const Kernel kernel = load_kernel(a.src, g);
  std::string csv = "x,y,re,im\n";
  for (int iy = 0; iy < a.grid; ++iy) {
    const double y = -1.0 + 2.0 * iy / (a.grid - 1);
    for (int ix = 0; ix < a.grid; ++ix) {
      const double x = -1.0 + 2.0 * ix / (a.grid - 1);
      csv += shortest(x) + ',' + shortest(y) + ',';
      if (std::hypot(x, y) <= 1.0) {
        const complex v = kernel.f({x, y});
        csv += shortest(v.real()) + ',' + shortest(v.imag());
      } else {
        csv += ',';
      }
      csv += '\n';
    }
  }
  csv.pop_back();
  emit(a.out, csv, out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disc-polynomial expansions, dimension walks and positive definiteness on complex spheres",
               "diskwalk"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  auto* q_opt = app.add_option("--q", g.q, "Complex sphere dimension q >= 2")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for positive definiteness of coefficients")->capture_default_str();
  app.add_option("--nmax", g.n_max, "Largest modulus examined by bounded SPD checks")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for random sphere points")->capture_default_str();

  ExpandArgs expand;
  auto* expand_cmd = app.add_subcommand("expand", "Expand a family in disc polynomials");
  add_source_options(expand_cmd, expand.src, false);
  expand_cmd->add_option("--mmax", expand.m_max, "Largest m")->capture_default_str();
  expand_cmd->add_option("--nmax", expand.n_max, "Largest n")->capture_default_str();
  expand_cmd->add_option("--out", expand.out, "Output table JSON (default: stdout)");

  WalkArgs walk;
  auto* walk_cmd = app.add_subcommand("walk", "Apply a Descente or Montee operator to a table");
  walk_cmd->add_option("--op", walk.op, "dz, dzbar, dx, iz or izbar")
      ->required()
      ->check(CLI::IsMember({"dz", "dzbar", "dx", "iz", "izbar"}));
  walk_cmd->add_option("--in", walk.in, "Input table JSON")->required();
  walk_cmd->add_option("--out", walk.out, "Output JSON (default: stdout)");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Positive definiteness verdicts for a table or index set");
  check_cmd->add_option("--in", check.in, "Coefficient table JSON file");
  check_cmd->add_option("--set", check.set, "Index set: inline JSON or a JSON file");
  check_cmd->add_option("--threshold", check.threshold, "Entries above this count as positive")
      ->capture_default_str();

  GramArgs gram;
  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix eigenvalues on random sphere points");
  add_source_options(gram_cmd, gram.src, true);
  gram_cmd->add_option("--points", gram.points, "Number of points")->capture_default_str();
  gram_cmd->add_flag("--eigenvalues", gram.all, "Print the full spectrum");

  CounterexampleArgs counter;
  auto* counter_cmd = app.add_subcommand("counterexample", "Reproduce the walk counterexamples");
  counter_cmd->add_option("--case", counter.name, "i, ii or iii")->required();
  counter_cmd->add_option("--truncation", counter.truncation, "Largest index kept in the table")
      ->capture_default_str();
  counter_cmd->add_option("--out", counter.out, "Write the base table JSON here");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot-data", "Sample a kernel on a Cartesian grid as CSV");
  add_source_options(plot_cmd, plot.src, true);
  plot_cmd->add_option("--grid", plot.grid, "Grid points per axis")->capture_default_str();
  plot_cmd->add_option("--out", plot.out, "Output CSV (default: stdout)");

  std::vector<std::string> argv_storage{"diskwalk"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }
  g.q_given = q_opt->count() > 0;

  try {
    if (g.q < 2) throw domain_error("--q must be at least 2");
    if (g.n_max < 1) throw domain_error("--nmax must be at least 1");
    if (!(g.tol >= 0.0)) throw domain_error("--tol must be nonnegative");
    if (*expand_cmd) return cmd_expand(expand, g, out);
    if (*walk_cmd) return cmd_walk(walk, out);
    if (*check_cmd) return cmd_check(check, g, out);
    if (*gram_cmd) return cmd_gram(gram, g, out);
    if (*counter_cmd) return cmd_counterexample(counter, g, out);
    if (*plot_cmd) return cmd_plot_data(plot, g, out);
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return capacity_failure;
  } catch (const convergence_error& e) {
    err << "error: " << e.what() << '\n';
    return capacity_failure;
  } catch (const divergence_error& e) {
    err << "error: " << e.what() << '\n';
    return capacity_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace diskwalk::cli
