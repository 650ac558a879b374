#include "ramlab/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramlab/even_function.hpp"
#include "ramlab/kernels.hpp"
#include "ramlab/ramanujan.hpp"
#include "ramlab/verification.hpp"

namespace ramlab::cli {
namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ojson float_json(double v) { return std::stod(format_float(v)); }

ojson exact_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return static_cast<i64>(q.get_num().get_si());
  return to_string(q);
}

// One output row: ordered (key, value) pairs. `csv_key` differs from the JSON
// key only where the CSV header is fixed independently.
struct Field {
  std::string key;
  ojson value;
  std::string csv_key;
};
using Record = std::vector<Field>;

Field field(std::string key, ojson value, std::string csv_key = {}) {
  if (csv_key.empty()) csv_key = key;
  return {std::move(key), std::move(value), std::move(csv_key)};
}

std::string text_of(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_float(v.get<double>());
  return v.dump();
}

Record report_fields(const PartialSumReport& rep) {
  return {field("x", rep.x),
          field("exact_sum", exact_json(rep.exact_sum)),
          field("main_term", exact_json(rep.main_term)),
          field("residual", exact_json(rep.residual)),
          field("certified_bound", exact_json(rep.certified_bound), "bound"),
          field("pass", rep.pass)};
}

Record report_fields(const OrthogonalityReport& rep) {
  return {field("system", rep.system),
          field("r", rep.r),
          field("s", rep.s),
          field("exact_mean", rep.exact_mean),
          field("empirical_mean", exact_json(rep.empirical_mean)),
          field("verdict", std::string(to_string(rep.verdict)))};
}

Record with_context(Record context, const Record& rest) {
  context.insert(context.end(), rest.begin(), rest.end());
  return context;
}

class Emitter {
 public:
  Emitter(Format format, std::ostream& os) : format_(format), os_(os) {}

  Format format() const { return format_; }
  std::ostream& stream() { return os_; }

  /// Rows sharing one set of keys. JSON: one object per line. CSV: header
  /// then rows. Plain: aligned columns.
  void block(const std::vector<Record>& rows) {
    if (rows.empty()) return;
    switch (format_) {
      case Format::Json:
        for (const auto& row : rows) {
          ojson j = ojson::object();
          for (const auto& f : row) j[f.key] = f.value;
          os_ << j.dump() << '\n';
        }
        break;
      case Format::Csv: {
        if (blocks_++ > 0) os_ << '\n';
        for (std::size_t i = 0; i < rows[0].size(); ++i) os_ << (i ? "," : "") << rows[0][i].csv_key;
        os_ << '\n';
        for (const auto& row : rows) {
          for (std::size_t i = 0; i < row.size(); ++i) os_ << (i ? "," : "") << text_of(row[i].value);
          os_ << '\n';
        }
        break;
      }
      case Format::Plain: {
        if (blocks_++ > 0) os_ << '\n';
        std::vector<std::size_t> width(rows[0].size());
        for (std::size_t i = 0; i < width.size(); ++i) width[i] = rows[0][i].key.size();
        for (const auto& row : rows)
          for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], text_of(row[i].value).size());
        auto line = [&](auto cell) {
          for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string s = cell(i);
            os_ << (i ? "  " : "") << std::string(width[i] - s.size(), ' ') << s;
          }
          os_ << '\n';
        };
        line([&](std::size_t i) { return rows[0][i].key; });
        for (const auto& row : rows) line([&](std::size_t i) { return text_of(row[i].value); });
        break;
      }
    }
  }

  void single(const Record& row) { block({row}); }

 private:
  Format format_;
  std::ostream& os_;
  int blocks_ = 0;
};

// ---------------------------------------------------------------- c

int cmd_c(Emitter& out, const RegularSystem& system, i64 n, i64 r, const std::string& route) {
  if (n < 1 || r < 1) throw UsageError("n and r must be >= 1");
  const bool all = route == "all";
  Record row{field("n", n), field("r", r), field("system", system.name())};
  bool match = true;
  std::optional<i64> divisor, core;
  std::optional<Complex> oracle;
  if (all || route == "divisor") divisor = c_A_divisor(system, n, r);
  if (all || route == "core") core = c_A_core(system, n, r);
  if (all || route == "oracle") oracle = c_A_oracle(system, n, r);
  if (divisor) row.push_back(field("divisor", *divisor));
  if (core) row.push_back(field("core", *core));
  if (oracle) {
    row.push_back(field("oracle_re", float_json(oracle->real())));
    row.push_back(field("oracle_im", float_json(oracle->imag())));
  }
  if (all) {
    const double re = oracle->real();
    const double rounded = std::round(re);
    match = *divisor == *core && static_cast<i64>(rounded) == *divisor && std::abs(re - rounded) <= 1e-6 &&
            std::abs(oracle->imag()) <= 1e-6;
    row.push_back(field("match", match));
  }
  out.single(row);
  return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- table

int cmd_table(Emitter& out, const RegularSystem& system, const std::string& what, i64 r_max, i64 n_max) {
  if (r_max < 1) throw UsageError("--rmax must be >= 1");
  if (what == "cA") {
    if (n_max < 1) throw UsageError("--nmax must be >= 1");
    const auto by_divisor = kernels::ca_table_parallel(system, n_max, r_max, CaRoute::Divisor);
    const auto by_core = kernels::ca_table_parallel(system, n_max, r_max, CaRoute::Core);
    if (by_divisor.values != by_core.values)
      throw CrossCheckError("divisor and core routes disagree in the c_A table");
    if (out.format() == Format::Json) {
      ojson j{{"what", what}, {"system", system.name()}, {"nmax", n_max}, {"rmax", r_max}};
      ojson rows = ojson::array();
      for (i64 n = 1; n <= n_max; ++n) {
        ojson row = ojson::array();
        for (i64 r = 1; r <= r_max; ++r) row.push_back(by_divisor.at(n, r));
        rows.push_back(row);
      }
      j["values"] = rows;
      out.stream() << j.dump() << '\n';
      return kExitOk;
    }
    std::vector<Record> rows;
    for (i64 n = 1; n <= n_max; ++n) {
      Record row{field("n", n)};
      for (i64 r = 1; r <= r_max; ++r) row.push_back(field("r=" + std::to_string(r), by_divisor.at(n, r)));
      rows.push_back(std::move(row));
    }
    out.block(rows);
    return kExitOk;
  }

  std::function<i64(i64)> fn;
  if (what == "phiA")
    fn = [&](i64 r) { return phi_A(system, r); };
  else if (what == "psiA")
    fn = [&](i64 r) { return psi_A(system, r); };
  else if (what == "gammaA")
    fn = [&](i64 r) { return gamma_A(system, r); };
  else if (what == "muA")
    fn = [&](i64 r) { return static_cast<i64>(mu_A(system, r)); };
  else
    throw UsageError("unknown table '" + what + "' (expected cA, phiA, psiA, gammaA or muA)");

  if (out.format() == Format::Json) {
    ojson values = ojson::array();
    for (i64 r = 1; r <= r_max; ++r) values.push_back(fn(r));
    out.stream() << ojson{{"what", what}, {"system", system.name()}, {"rmax", r_max}, {"values", values}}.dump()
                 << '\n';
    return kExitOk;
  }
  std::vector<Record> rows;
  for (i64 r = 1; r <= r_max; ++r) rows.push_back({field("r", r), field(what, fn(r))});
  out.block(rows);
  return kExitOk;
}

// ---------------------------------------------------------------- verify

std::vector<i64> decade_points(i64 x_max) {
  std::vector<i64> xs;
  for (i64 x = 1; x < x_max; x *= 10) xs.push_back(x);
  xs.push_back(x_max);
  return xs;
}

bool verify_prop1(Emitter& out, const RegularSystem& system, i64 r_max, i64 x_max) {
  const auto xs = decade_points(x_max);
  std::vector<Record> rows;
  bool pass = true;
  for (i64 r = 1; r <= r_max; ++r) {
    const auto ca = EvenFunction<Rational>::tabulate(r, [&](i64 d) { return make_rational(c_A_divisor(system, d, r)); })
                        .with_system(system);
    const auto maxsein = maxsein_even_function(1, r);
    for (const auto& [label, f] : {std::pair{"cA", &ca}, std::pair{"maxsein", &maxsein}}) {
      for (const auto& rep : prop1_check(*f, xs)) {
        pass = pass && rep.pass;
        rows.push_back(with_context({field("check", "prop1"), field("system", system.name()), field("r", r),
                                     field("function", label)},
                                    report_fields(rep)));
      }
    }
  }
  out.block(rows);
  return pass;
}

bool verify_prop2(Emitter& out, const RegularSystem& system, i64 r_max, i64 x_max) {
  std::vector<i64> xs(static_cast<std::size_t>(x_max));
  for (i64 x = 1; x <= x_max; ++x) xs[x - 1] = x;
  const auto grid = prop2_check(system, r_max, xs);
  std::vector<Record> rows;
  bool pass = true;
  for (i64 r = 1; r <= r_max; ++r) {
    const auto& reports = grid[r - 1];
    // Report the tightest x per modulus; every x is checked.
    const PartialSumReport* worst = &reports.front();
    for (const auto& rep : reports) {
      pass = pass && rep.pass;
      if (rational_abs(rep.residual) * worst->certified_bound > rational_abs(worst->residual) * rep.certified_bound)
        worst = &rep;
    }
    rows.push_back(with_context({field("check", "prop2"), field("system", system.name()), field("r", r)},
                                report_fields(*worst)));
  }
  out.block(rows);
  return pass;
}

bool verify_prop3(Emitter& out, const RegularSystem& system, i64 r_max) {
  std::vector<Record> failures;
  i64 pairs = 0;
  for (i64 r = 1; r <= r_max; ++r) {
    for (i64 s = r; s <= r_max; ++s) {
      const auto rep = orthogonality_report(system, r, s);  // exact vs period average
      ++pairs;
      bool ok = true;
      if (r == s) ok = rep.exact_mean == phi_A(system, r);
      if (r != s && gcd(r, s) == 1) ok = ok && rep.exact_mean == 0;
      if (system.is_dirichlet()) ok = ok && rep.exact_mean == (r == s ? euler_phi(r) : 0);
      if (!ok) failures.push_back(with_context({field("check", "prop3")}, report_fields(rep)));
    }
  }
  out.block(failures);

  const auto violation = find_orthogonality_violation(system, r_max);
  const bool expect_violation = !system.is_dirichlet();
  if (violation) {
    const auto rep = orthogonality_report(system, violation->r, violation->s, 3);
    out.single(with_context({field("check", "prop3")}, report_fields(rep)));
  }
  const bool pass = failures.empty() && violation.has_value() == expect_violation;
  out.single({field("check", "prop3"), field("system", system.name()), field("pairs", pairs),
              field("violation_found", violation.has_value()), field("pass", pass)});
  return pass;
}

bool verify_prop4(Emitter& out, const RegularSystem& system, i64 r_max) {
  const auto w = prop4_witness(system, r_max);
  if (!w) {
    out.single({field("check", "prop4"), field("system", system.name()), field("applicable", false),
                field("pass", true)});
    return true;
  }
  const bool pass = w->certified();
  out.single({field("check", "prop4"), field("system", system.name()), field("applicable", true),
              field("p", w->prime), field("a", w->exponent), field("t", w->type), field("f_even", w->f_even),
              field("g_even", w->g_even), field("r_max", w->r_max),
              field("failing_r", static_cast<i64>(w->failures.size())),
              field("p_outside_A_pt", w->p_outside_A_of_pt), field("pass", pass)});
  return pass;
}

int cmd_verify(Emitter& out, const RegularSystem& system, const std::string& which, i64 r_max, i64 x_max) {
  if (r_max < 1 || x_max < 1) throw UsageError("--rmax and --xmax must be >= 1");
  bool pass = true;
  const bool all = which == "all";
  if (!all && which != "prop1" && which != "prop2" && which != "prop3" && which != "prop4")
    throw UsageError("unknown check '" + which + "' (expected prop1, prop2, prop3, prop4 or all)");
  if (all || which == "prop1") pass = verify_prop1(out, system, r_max, x_max) && pass;
  if (all || which == "prop2") pass = verify_prop2(out, system, r_max, x_max) && pass;
  if (all || which == "prop3") pass = verify_prop3(out, system, r_max) && pass;
  if (all || which == "prop4") pass = verify_prop4(out, system, r_max) && pass;
  return pass ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- expansion

int cmd_expansion(Emitter& out, i64 n, i64 terms) {
  if (n < 1 || terms < 1) throw UsageError("n and --terms must be >= 1");
  const auto e = expansion_demo(n, terms);
  out.single({field("n", e.n), field("terms", e.terms), field("truncated", float_json(e.truncated)),
              field("target", float_json(e.target)), field("abs_error", float_json(e.abs_error))});
  return kExitOk;
}

// ---------------------------------------------------------------- even

int cmd_even(Emitter& out, const std::string& literal, const std::vector<i64>& xs,
             const std::optional<RegularSystem>& system) {
  auto f = parse_even_function(literal);
  if (system) f = f.with_system(*system);
  for (i64 x : xs)
    if (x < 1) throw UsageError("--x values must be >= 1");
  const auto coeffs = fourier_coeffs(f);
  const auto reports = prop1_check(f, xs);

  if (out.format() == Format::Plain) {
    auto& os = out.stream();
    os << "function     " << to_literal(f) << '\n';
    os << "mean         " << to_string(mean_value(f)) << '\n';
    os << "K_f          " << to_string(sup_norm(f)) << '\n';
    os << "bound        " << to_string(certified_bound(f)) << '\n';
    os << "coefficients";
    for (std::size_t i = 0; i < coeffs.divisors.size(); ++i)
      os << (i ? ", " : " ") << "h(" << coeffs.divisors[i] << ")=" << to_string(coeffs.h[i]);
    os << "\n\n";
  } else if (out.format() == Format::Json) {
    ojson h = ojson::object();
    for (std::size_t i = 0; i < coeffs.divisors.size(); ++i)
      h[std::to_string(coeffs.divisors[i])] = exact_json(coeffs.h[i]);
    out.stream() << ojson{{"r", f.modulus()},
                          {"mean", exact_json(mean_value(f))},
                          {"K_f", exact_json(sup_norm(f))},
                          {"certified_bound", exact_json(certified_bound(f))},
                          {"coefficients", h}}
                        .dump()
                 << '\n';
  }
  if (out.format() == Format::Json) {
    for (const auto& rep : reports) out.stream() << to_json(rep) << '\n';
  } else {
    std::vector<Record> rows;
    for (const auto& rep : reports) rows.push_back(report_fields(rep));
    out.block(rows);
  }
  bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  return pass ? kExitOk : kExitMismatch;
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "plain") return Format::Plain;
  throw std::invalid_argument("unknown output format '" + text + "' (expected json, csv or plain)");
}

RegularSystem resolve_system(const std::string& name_or_path) {
  if (name_or_path == "D") return RegularSystem::dirichlet();
  if (name_or_path == "U") return RegularSystem::unitary();
  if (name_or_path == "MIX") return RegularSystem::mix();
  return load_system_spec(name_or_path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_format) {
  CLI::App app{"Generalized Ramanujan sums, regular divisor systems and r-even functions", "ramlab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_flag;
  std::string output_path;
  app.add_option("--format", format_flag, "Output format: json, csv or plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  app.add_option("-o,--output", output_path, "Write output to this file instead of stdout");

  std::string system_name = "D";
  i64 n = 0, r = 0;
  std::string route = "divisor";
  auto* c = app.add_subcommand("c", "Evaluate c_A(n, r)");
  c->add_option("n", n)->required();
  c->add_option("r", r)->required();
  c->add_option("--system", system_name, "D, U, MIX or a JSON spec file");
  c->add_option("--route", route)->check(CLI::IsMember({"divisor", "core", "oracle", "all"}));

  std::string what;
  i64 r_max = 0, n_max = 0;
  auto* table = app.add_subcommand("table", "Tabulate c_A or a multiplicative A-function");
  table->add_option("--what", what)->required()->check(CLI::IsMember({"cA", "phiA", "psiA", "gammaA", "muA"}));
  table->add_option("--system", system_name);
  table->add_option("--rmax", r_max)->required();
  table->add_option("--nmax", n_max, "Rows for --what cA (default: rmax)");

  std::string which;
  i64 v_rmax = 50, v_xmax = 1000;
  auto* verify = app.add_subcommand("verify", "Run the mean-value and orthogonality checks");
  verify->add_option("check", which)->required()->check(CLI::IsMember({"prop1", "prop2", "prop3", "prop4", "all"}));
  verify->add_option("--system", system_name);
  verify->add_option("--rmax", v_rmax);
  verify->add_option("--xmax", v_xmax);

  i64 e_n = 0, terms = 0;
  auto* expansion = app.add_subcommand("expansion", "Truncated Ramanujan expansion of sigma(n)/n");
  expansion->add_option("n", e_n)->required();
  expansion->add_option("--terms", terms)->required();

  std::string literal;
  std::vector<i64> xs{1000, 10000};
  std::string even_system;
  auto* even = app.add_subcommand("even", "Mean value, Fourier coefficients and partial sums of an r-even function");
  even->add_option("function", literal, "e.g. \"r=12; 1:1, 2:-1, 3:0, 4:2, 6:0, 12:5\"")->required();
  even->add_option("--x", xs, "Partial-sum limits")->delimiter(',');
  even->add_option("--system", even_system, "Also require A-evenness for this system");

  std::vector<std::string> argv_store{"ramlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    OutputSpec spec;
    if (env_format && !env_format->empty()) spec.format = parse_format(*env_format);
    if (!format_flag.empty()) spec.format = parse_format(format_flag);
    if (!output_path.empty()) spec.destination = output_path;

    std::ofstream file;
    if (spec.destination) {
      file.open(*spec.destination);
      if (!file) throw std::invalid_argument("cannot open output file '" + *spec.destination + "'");
    }
    Emitter emitter(spec.format, spec.destination ? static_cast<std::ostream&>(file) : out);

    if (*c) return cmd_c(emitter, resolve_system(system_name), n, r, route);
    if (*table) return cmd_table(emitter, resolve_system(system_name), what, r_max, n_max > 0 ? n_max : r_max);
    if (*verify) return cmd_verify(emitter, resolve_system(system_name), which, v_rmax, v_xmax);
    if (*expansion) return cmd_expansion(emitter, e_n, terms);
    if (*even)
      return cmd_even(emitter, literal, xs,
                      even_system.empty() ? std::nullopt : std::optional<RegularSystem>(resolve_system(even_system)));
  } catch (const InvalidSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CrossCheckError& e) {
    err << "cross-check mismatch: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::logic_error& e) {
    // std::invalid_argument and std::out_of_range derive from logic_error but
    // describe bad input; anything else here is an internal inconsistency.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
    err << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramlab::cli
