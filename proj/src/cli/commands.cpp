#include "adicergo/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include "adicergo/cylinder_io.hpp"
#include "adicergo/ergodic.hpp"
#include "adicergo/errors.hpp"
#include "adicergo/multipliers.hpp"
#include "adicergo/torus.hpp"
#include "adicergo/weyl.hpp"

namespace adicergo::cli {

namespace {

struct Context {
  const ExperimentConfig& c;
  Basis basis;
  int r;
  AdicPoly rho;
  std::vector<Character> chars;
  std::ostream& notices;

  Context(const ExperimentConfig& config, std::ostream& n)
      : c(config),
        basis(Basis::parse(config.basis)),
        r(working_precision(config)),
        rho(AdicPoly::parse(config.rho, basis, r)),
        notices(n) {
    for (const auto& s : c.characters) chars.push_back(Character::parse(s, basis));
  }

  void degree_notice(const AdicPoly& p) const {
    if (c.source == Source::primes && p.degree() < 2)
      notices << "notice: rho has degree " << p.degree()
              << " < 2; kind=prime is reported, but the prime averages only converge to the "
                 "multiplier limit on Z_a for degree >= 2\n";
  }
};

Report make_report(const ExperimentConfig& c, std::vector<std::string> header) {
  Report rep;
  rep.name = c.out.value_or(c.command);
  rep.header = std::move(header);
  rep.summary["config"] = to_json(c);
  rep.summary["command"] = c.command;
  return rep;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(',', start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

CylinderFunction input_function(const Context& ctx) {
  if (ctx.c.f) {
    auto f = read_cylinder(*ctx.c.f);
    if (f.basis != ctx.basis)
      throw ConfigError("f: function basis " + f.basis.to_string() + " differs from --basis " +
                        ctx.basis.to_string());
    return f;
  }
  if (ctx.chars.empty())
    throw ConfigError("f: " + ctx.c.command + " needs --f <file> or a --char to average");
  return CylinderFunction::character(ctx.chars.front(), ctx.r);
}

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

Report run_gauss(const Context& ctx) {
  const auto& c = ctx.c;
  std::vector<BigInt> psi;
  for (const auto& part : split_list(c.psi)) psi.push_back(parse_bigint(part));
  const auto value = complete_exp_sum(psi, c.q, c.budgets, c.threads);
  auto rep = make_report(c, {"q", "re", "im", "abs"});
  rep.rows.push_back({u64(c.q), format_double(value.real()), format_double(value.imag()),
                      format_double(std::abs(value))});
  rep.summary["value"] = complex_json(value);
  rep.text.push_back("S(psi|" + u64(c.q) + ") = " + format_complex(value) +
                     "  |S| = " + format_double(std::abs(value)));
  return rep;
}

Report run_multiplier(const Context& ctx) {
  const auto& c = ctx.c;
  ctx.degree_notice(ctx.rho);
  std::vector<Character> chars = ctx.chars;
  if (chars.empty()) chars.push_back(Character::trivial(ctx.basis));
  auto rep = make_report(c, {"character", "D", "re", "im", "abs"});
  rep.summary["kind"] = std::string(to_string(c.source));
  rep.summary["multipliers"] = nlohmann::json::array();
  for (const auto& chi : chars) {
    const auto phase = reduce_phase(chi, ctx.rho);
    const auto m = multiplier(phase, c.source, c.budgets, c.threads);
    const auto D = phase.modulus().str();
    rep.rows.push_back({chi.to_string(), D, format_double(m.value.real()),
                        format_double(m.value.imag()), format_double(std::abs(m.value))});
    auto entry = complex_json(m.value);
    entry["character"] = chi.to_string();
    entry["D"] = D;
    rep.summary["multipliers"].push_back(entry);
    rep.text.push_back(format_complex(m.value));
  }
  return rep;
}

Report run_weyl(const Context& ctx) {
  const auto& c = ctx.c;
  if (ctx.chars.empty()) throw ConfigError("char: weyl needs at least one --char");
  ctx.degree_notice(ctx.rho);
  auto rep = make_report(c, {"character", "N", "re", "im", "abs_err"});
  rep.summary["results"] = nlohmann::json::array();
  const auto hists = orbit_histograms(ctx.rho, ctx.r, c.N, c.source, c.budgets, c.threads);
  for (const auto& chi : ctx.chars) {
    const auto m = multiplier(reduce_phase(chi, ctx.rho), c.source, c.budgets, c.threads);
    nlohmann::json entry{{"character", chi.to_string()},
                         {"multiplier", complex_json(m.value)},
                         {"D", m.modulus.str()},
                         {"values", nlohmann::json::array()}};
    for (const auto& h : hists) {
      if (h.total == 0) throw ConfigError("N: no " + std::string(to_string(c.source)) + " up to " + u64(h.N));
      const auto s = weyl_sum(h, chi, c.threads);
      const double err = std::abs(s - m.value);
      rep.rows.push_back({chi.to_string(), u64(h.N), format_double(s.real()),
                          format_double(s.imag()), format_double(err)});
      auto v = complex_json(s);
      v["N"] = h.N;
      v["abs_err"] = err;
      entry["values"].push_back(v);
      rep.text.push_back(chi.to_string() + "  N=" + u64(h.N) + "  " + format_complex(s) +
                         "  |S-m| = " + format_double(err));
    }
    rep.summary["results"].push_back(entry);
  }
  return rep;
}

Report run_average(const Context& ctx) {
  const auto& c = ctx.c;
  const auto f = input_function(ctx);
  const auto rho = AdicPoly::parse(c.rho, f.basis, f.precision);
  ctx.degree_notice(rho);
  const auto table = multiplier_table(rho, f.precision, c.source, c.budgets, c.threads);
  const auto limit = predicted_limit(f, table, c.budgets);
  const auto hists = orbit_histograms(rho, f.precision, c.N, c.source, c.budgets, c.threads);
  auto rep = make_report(c, {"N", "x", "re", "im", "abs_err"});
  rep.summary["averages"] = nlohmann::json::array();
  for (const auto& h : hists) {
    if (h.total == 0) throw ConfigError("N: no " + std::string(to_string(c.source)) + " up to " + u64(h.N));
    const auto avg = empirical_average(f, h, c.threads);
    double sup = 0.0;
    nlohmann::json values = nlohmann::json::array();
    for (std::size_t x = 0; x < avg.values.size(); ++x) {
      const double err = std::abs(avg.values[x] - limit.values[x]);
      sup = std::max(sup, err);
      rep.rows.push_back({u64(h.N), u64(x), format_double(avg.values[x].real()),
                          format_double(avg.values[x].imag()), format_double(err)});
      values.push_back({avg.values[x].real(), avg.values[x].imag()});
    }
    rep.summary["averages"].push_back({{"N", h.N}, {"values", values}, {"sup_norm", sup}});
    rep.text.push_back("N=" + u64(h.N) + "  sup_x |A_N f - limit| = " + format_double(sup));
  }
  return rep;
}

Report run_limit(const Context& ctx) {
  const auto& c = ctx.c;
  const auto f = input_function(ctx);
  const auto rho = AdicPoly::parse(c.rho, f.basis, f.precision);
  ctx.degree_notice(rho);
  const auto table = multiplier_table(rho, f.precision, c.source, c.budgets, c.threads);
  const auto limit = predicted_limit(f, table, c.budgets);
  auto rep = make_report(c, {"x", "re", "im"});
  rep.summary["kind"] = std::string(to_string(c.source));
  rep.summary["multipliers"] = nlohmann::json::array();
  for (std::size_t l = 0; l < table.size(); ++l) {
    auto m = complex_json(table[l].value);
    m["l"] = l;
    m["D"] = table[l].modulus.str();
    rep.summary["multipliers"].push_back(m);
  }
  rep.summary["limit"] = to_json(limit);
  for (std::size_t x = 0; x < limit.values.size(); ++x) {
    rep.rows.push_back({u64(x), format_double(limit.values[x].real()),
                        format_double(limit.values[x].imag())});
    rep.text.push_back(u64(x) + "  " + format_complex(limit.values[x]));
  }
  return rep;
}

Report run_compare(const Context& ctx) {
  const auto& c = ctx.c;
  const auto f = input_function(ctx);
  const auto rho = AdicPoly::parse(c.rho, f.basis, f.precision);
  ctx.degree_notice(rho);
  const auto report = compare(f, rho, c.N, c.source, c.budgets, c.threads);
  auto rep = make_report(c, {"N", "sup_norm", "l2_norm"});
  for (std::size_t i = 0; i < report.N.size(); ++i) {
    rep.rows.push_back({u64(report.N[i]), format_double(report.sup_norm[i]),
                        format_double(report.l2_norm[i])});
    rep.text.push_back("N=" + u64(report.N[i]) + "  sup " + format_double(report.sup_norm[i]) +
                       "  L2 " + format_double(report.l2_norm[i]));
  }
  rep.summary["N"] = report.N;
  rep.summary["sup_norm"] = report.sup_norm;
  rep.summary["l2_norm"] = report.l2_norm;
  rep.summary["sup_non_increasing"] = report.sup_non_increasing;
  rep.summary["l2_non_increasing"] = report.l2_non_increasing;
  rep.summary["multipliers"] = nlohmann::json::array();
  for (std::size_t l = 0; l < report.multipliers.size(); ++l) {
    auto m = complex_json(report.multipliers[l].value);
    m["l"] = l;
    m["D"] = report.multipliers[l].modulus.str();
    rep.summary["multipliers"].push_back(m);
  }
  rep.text.push_back(std::string("sup non-increasing: ") + (report.sup_non_increasing ? "yes" : "no") +
                     ", L2 non-increasing: " + (report.l2_non_increasing ? "yes" : "no"));
  return rep;
}

Report run_torus(const Context& ctx) {
  const auto& c = ctx.c;
  std::vector<std::vector<double>> components;
  for (const auto& b : c.beta) components.push_back(parse_reals(b));
  if (components.empty()) components.push_back(parse_reals("0,0,sqrt(2)"));
  const std::size_t d = components.size();

  std::vector<TrigTerm> terms;
  for (const auto& t : c.terms) {
    const auto colon = t.find(':');
    TrigTerm term;
    for (const auto& m : split_list(std::string_view(t).substr(0, colon)))
      term.frequency.push_back(parse_bigint(m).convert_to<std::int64_t>());
    if (term.frequency.size() != d)
      throw ConfigError("term: '" + t + "' needs " + std::to_string(d) + " frequencies");
    const auto coef = parse_reals(std::string_view(t).substr(colon + 1));
    term.coefficient = {coef[0], coef[1]};
    terms.push_back(std::move(term));
  }
  if (terms.empty())
    for (std::size_t i = 0; i < d; ++i) {
      TrigTerm term{std::vector<std::int64_t>(d, 0), {1.0, 0.0}};
      term.frequency[i] = 1;
      terms.push_back(std::move(term));
    }
  const auto x = c.x.empty() ? std::vector<double>(d, 0.0) : parse_reals(c.x);
  if (x.size() != d) throw ConfigError("x: needs " + std::to_string(d) + " components");

  std::complex<double> mean{0.0, 0.0};
  for (const auto& t : terms)
    if (std::all_of(t.frequency.begin(), t.frequency.end(), [](auto m) { return m == 0; }))
      mean += t.coefficient;

  auto rep = make_report(c, {"N", "re", "im", "abs_err"});
  rep.summary["integral"] = complex_json(mean);
  rep.summary["values"] = nlohmann::json::array();
  std::vector<double> errors;
  for (auto N : c.N) {
    const auto v = torus_average(terms, components, x, N, c.source, c.budgets, c.threads);
    const double err = std::abs(v - mean);
    errors.push_back(err);
    rep.rows.push_back({u64(N), format_double(v.real()), format_double(v.imag()), format_double(err)});
    auto j = complex_json(v);
    j["N"] = N;
    j["abs_err"] = err;
    rep.summary["values"].push_back(j);
    rep.text.push_back("N=" + u64(N) + "  " + format_complex(v) + "  |avg - integral| = " +
                       format_double(err));
  }
  rep.summary["abs_err_non_increasing"] = non_increasing(errors);
  return rep;
}

Report run_wiener(const Context& ctx) {
  const auto& c = ctx.c;
  const auto rho = AdicPoly::parse(c.rho, ctx.basis, c.r_max);
  ctx.degree_notice(rho);
  const auto points = wiener_energy(rho, c.r_max, c.source, c.budgets, c.threads);
  auto rep = make_report(c, {"r", "A_r", "W_r"});
  rep.summary["kind"] = std::string(to_string(c.source));
  rep.summary["points"] = nlohmann::json::array();
  bool strict = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    rep.rows.push_back({std::to_string(p.r), p.modulus.str(), format_double(p.energy)});
    rep.summary["points"].push_back({{"r", p.r}, {"A_r", p.modulus.str()}, {"W_r", p.energy}});
    rep.text.push_back("r=" + std::to_string(p.r) + "  A=" + p.modulus.str() + "  W=" +
                       format_double(p.energy));
    if (i > 0 && p.r >= 2 && !(p.energy < points[i - 1].energy)) strict = false;
  }
  rep.summary["strictly_decreasing_from_r1"] = strict;
  return rep;
}

}  // namespace

Report run_command(const ExperimentConfig& config, std::ostream& notices) {
  validate(config);
  const Context ctx(config, notices);
  const auto& cmd = config.command;
  if (cmd == "gauss") return run_gauss(ctx);
  if (cmd == "multiplier") return run_multiplier(ctx);
  if (cmd == "weyl") return run_weyl(ctx);
  if (cmd == "average") return run_average(ctx);
  if (cmd == "limit") return run_limit(ctx);
  if (cmd == "compare") return run_compare(ctx);
  if (cmd == "torus") return run_torus(ctx);
  return run_wiener(ctx);
}

std::optional<ExperimentConfig> parse_config(const std::vector<std::string>& args,
                                             std::optional<std::string> env_max_n,
                                             std::ostream& out) {
  CLI::App app{"Ergodic averages of polynomials in primes on a-adic integers"};
  app.set_version_flag("--version", "adicergo 1.0");

  std::string command, config_path, basis, rho, source, psi, out_name, out_dir, f, x;
  int r = 0, r_max = 0;
  unsigned threads = 1;
  std::uint64_t q = 0, max_n = 0, max_modulus = 0, wiener_evals = 0;
  std::vector<std::string> chars, counts, beta, terms;

  app.add_option("command", command, "gauss | multiplier | weyl | average | limit | compare | torus | wiener")
      ->check(CLI::IsMember(subcommands()));
  app.add_option("--config", config_path, "JSON config (same layout as the summary's config echo)");
  app.add_option("--basis", basis, "const:<a> | cycle:<a1,...> | list:<a0,...> [@offset:<k>]");
  app.add_option("--rho", rho, "polynomial coefficients, constant term first");
  app.add_option("--r", r, "precision level");
  app.add_option("--char", chars, "character l/A or l@level:r (repeatable)");
  app.add_option("--N", counts, "summation lengths, e.g. 1e4,1e5 (repeatable)");
  app.add_option("--source", source, "primes | naturals");
  app.add_option("--kind", source, "prime | natural (alias of --source)");
  app.add_option("--threads", threads, "worker threads");
  app.add_option("--max-n", max_n, "budget for sieve and sum lengths");
  app.add_option("--max-modulus", max_modulus, "budget for A(r)");
  app.add_option("--wiener-evals", wiener_evals, "budget for characters per Wiener level");
  app.add_option("--out", out_name, "write <out>.csv and <out>.json");
  app.add_option("--out-dir", out_dir, "directory for output files");
  app.add_option("--q", q, "modulus of the complete exponential sum");
  app.add_option("--psi", psi, "exponential-sum polynomial a_1,a_2,... (linear term first)");
  app.add_option("--r-max", r_max, "highest Wiener level");
  app.add_option("--f", f, "cylinder function JSON file");
  app.add_option("--beta", beta, "torus polynomial coefficients, one flag per component");
  app.add_option("--term", terms, "torus trig term m1,...,md:re,im (repeatable)");
  app.add_option("--x", x, "torus shift x1,...,xd");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << "adicergo 1.0\n";
    return std::nullopt;
  }

  const auto given = [&](const char* name) { return app.count(name) > 0; };
  ExperimentConfig c;
  if (given("--config")) c = read_config(config_path);
  if (env_max_n) {
    try {
      c.budgets.max_n = parse_count(*env_max_n);
    } catch (const std::exception& e) {
      throw ConfigError(std::string("ADICERGO_MAX_N: ") + e.what());
    }
  }
  if (given("command")) c.command = command;
  if (given("--basis")) c.basis = basis;
  if (given("--rho")) c.rho = rho;
  if (given("--r")) c.r = r;
  if (given("--char")) c.characters = chars;
  if (given("--N")) {
    c.N.clear();
    for (const auto& s : counts) {
      try {
        for (auto n : parse_counts(s)) c.N.push_back(n);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("N: ") + e.what());
      }
    }
  }
  if (given("--source") || given("--kind")) {
    try {
      c.source = parse_source(source);
    } catch (const std::exception& e) {
      throw ConfigError(std::string(given("--kind") ? "kind: " : "source: ") + e.what());
    }
  }
  if (given("--threads")) c.threads = threads;
  if (given("--max-n")) c.budgets.max_n = max_n;
  if (given("--max-modulus")) c.budgets.max_modulus = max_modulus;
  if (given("--wiener-evals")) c.budgets.wiener_evals = wiener_evals;
  if (given("--out")) c.out = out_name;
  if (given("--out-dir")) {
    c.out_dir = out_dir;
    if (!c.out) c.out = c.command;
  }
  if (given("--q")) c.q = q;
  if (given("--psi")) c.psi = psi;
  if (given("--r-max")) c.r_max = r_max;
  if (given("--f")) c.f = f;
  if (given("--beta")) c.beta = beta;
  if (given("--term")) c.terms = terms;
  if (given("--x")) c.x = x;
  if (c.command.empty()) throw CLI::RequiredError("command");
  validate(c);
  return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<std::string> env;
  if (const char* v = std::getenv("ADICERGO_MAX_N")) env = v;
  try {
    const auto config = parse_config(args, env, out);
    if (!config) return 0;
    const auto report = run_command(*config, err);
    for (const auto& line : report.text) out << line << '\n';
    if (config->out) emit_report(report, config->out_dir);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace adicergo::cli
