#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "akchar/errors.hpp"
#include "akchar/json_io.hpp"
#include "akchar/parallel.hpp"
#include "akchar/regev.hpp"
#include "akchar/superrep.hpp"
#include "akchar/tableaux.hpp"
#include "akchar/verify.hpp"

namespace akchar::cli {

namespace {

using nlohmann::json;

struct Options {
  int m = 0;
  std::string k;
  std::string l;
  int n = 0;
  std::string mu;
  std::string spec = "generic";
  std::string format = "json";
  std::string out;
  std::string suite = "all";
  int max_n = 0;
  unsigned jobs = 1;
};

/// Input errors that map to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size() || value < 0) {
      throw InputError(std::string(flag) + ": expected comma-separated nonnegative integers, got '" + text + "'");
    }
    out.push_back(value);
  }
  if (out.empty() || text.back() == ',') {
    throw InputError(std::string(flag) + ": expected comma-separated nonnegative integers, got '" + text + "'");
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_cell(cells[i]);
  }
  return line + '\n';
}

/// Resolved colour data shared by the commands.
struct Colors {
  std::size_t m;
  std::vector<int> k;
  std::vector<int> l;
};

Colors resolve_colors(const CLI::App& app, const Options& o, std::size_t mu_arity) {
  std::optional<std::vector<int>> k;
  std::optional<std::vector<int>> l;
  if (app.count("--k")) k = parse_int_list(o.k, "--k");
  if (app.count("--l")) l = parse_int_list(o.l, "--l");
  std::size_t m = 0;
  if (app.count("--m")) {
    if (o.m < 1) throw InputError("--m must be positive");
    m = static_cast<std::size_t>(o.m);
  } else if (k) {
    m = k->size();
  } else if (l) {
    m = l->size();
  } else if (mu_arity) {
    m = mu_arity;
  } else {
    m = 1;
  }
  if (!k) k = ones(m);
  if (!l) l = ones(m);
  if (k->size() != m || l->size() != m) {
    throw InputError("--k and --l must both have m = " + std::to_string(m) + " entries");
  }
  if (mu_arity && mu_arity != m) {
    throw InputError("--mu has " + std::to_string(mu_arity) + " components but m = " + std::to_string(m));
  }
  return {m, *k, *l};
}

json config_json(const std::string& command, const Colors& c) {
  return {{"command", command}, {"m", c.m}, {"k", c.k}, {"l", c.l}};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw InputError("cannot open --out file '" + o.out + "'");
  file << text;
}

std::optional<MultiPartition> parse_mu(const CLI::App& app, const Options& o) {
  if (!app.count("--mu")) return std::nullopt;
  try {
    return MultiPartition::parse(o.mu);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--mu: ") + e.what());
  }
}

int run_chars(const CLI::App& app, const Options& o, std::ostream& out) {
  const auto mu = parse_mu(app, o);
  const Colors c = resolve_colors(app, o, mu ? mu->num_components() : 0);
  const Specialization spec = Specialization::parse(o.spec);
  const CharSpec cs(c.k, c.l, spec);
  int n = 0;
  if (mu) {
    n = mu->size();
    if (app.count("--n") && o.n != n) throw InputError("--mu has size " + std::to_string(n) + " but --n is " + std::to_string(o.n));
    if (n < 1) throw InputError("--mu must have positive size");
  } else {
    if (!app.count("--n")) throw InputError("chars needs --n or --mu");
    n = o.n;
    if (n < 1) throw InputError("--n must be positive");
  }
  const std::vector<MultiPartition> mus = mu ? std::vector<MultiPartition>{*mu} : list_multipartitions(c.m, n);
  const auto values = parallel_map(mus.size(), o.jobs, [&](std::size_t i) { return evaluate_character(mus[i], cs); });

  if (o.format == "csv") {
    std::string text = csv_row({"mu", "value"});
    for (std::size_t i = 0; i < mus.size(); ++i) text += csv_row({mus[i].to_string(), to_string(values[i])});
    emit(o, out, text);
    return kOk;
  }
  json cfg = config_json("chars", c);
  cfg["n"] = n;
  cfg["spec"] = spec.to_string();
  json rows = json::array();
  for (std::size_t i = 0; i < mus.size(); ++i) rows.push_back({{"mu", to_json(mus[i])}, {"value", to_json(values[i])}});
  emit(o, out, json{{"config", cfg}, {"rows", rows}}.dump(2) + "\n");
  return kOk;
}

int run_hooks(const CLI::App& app, const Options& o, std::ostream& out) {
  const Colors c = resolve_colors(app, o, 0);
  if (!app.count("--n")) throw InputError("hooks needs --n");
  if (o.n < 0) throw InputError("--n must be nonnegative");
  int dim = 0;
  for (std::size_t i = 0; i < c.m; ++i) dim += c.k[i] + c.l[i];
  if (dim == 0) throw InputError("k + l must be positive");
  const auto hooks = list_hook_multipartitions(o.n, c.k, c.l);
  struct Row {
    Integer s;
    Integer f;
  };
  const auto rows = parallel_map(hooks.size(), o.jobs, [&](std::size_t i) {
    return Row{count_semistandard(hooks[i], c.k, c.l), count_standard_multitableaux(hooks[i])};
  });
  Integer sum = 0;
  for (const auto& r : rows) sum += r.s * r.f;
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(dim), static_cast<unsigned long>(o.n));
  const bool holds = sum == expected;

  if (o.format == "csv") {
    std::string text = csv_row({"lambda", "s", "f"});
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      text += csv_row({hooks[i].to_string(), rows[i].s.get_str(), rows[i].f.get_str()});
    }
    text += csv_row({"sum", sum.get_str(), expected.get_str()});
    emit(o, out, text);
  } else {
    json cfg = config_json("hooks", c);
    cfg["n"] = o.n;
    json jrows = json::array();
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      jrows.push_back({{"lambda", to_json(hooks[i])}, {"s", integer_to_json(rows[i].s)}, {"f", integer_to_json(rows[i].f)}});
    }
    json footer = {{"sum", integer_to_json(sum)}, {"expected", integer_to_json(expected)}, {"holds", holds}};
    emit(o, out, json{{"config", cfg}, {"rows", jrows}, {"footer", footer}}.dump(2) + "\n");
  }
  return holds ? kOk : kVerificationFailed;
}

int run_verify(const CLI::App& app, const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else if (is_suite(o.suite)) {
    suites = {o.suite};
  } else {
    throw InputError("unknown suite '" + o.suite + "'");
  }
  VerifyOptions vo;
  vo.jobs = o.jobs;
  if (app.count("--m")) {
    if (o.m < 1) throw InputError("--m must be positive");
    vo.m = static_cast<std::size_t>(o.m);
  }
  if (app.count("--n")) {
    if (o.n < 1) throw InputError("--n must be positive");
    vo.n = o.n;
  }
  if (app.count("--max-n")) {
    if (o.max_n < 1) throw InputError("--max-n must be positive");
    vo.max_n = o.max_n;
  }
  std::vector<SuiteReport> reports;
  for (const auto& s : suites) reports.push_back(run_suite(s, vo));
  bool all_ok = true;
  for (const auto& r : reports) all_ok = all_ok && r.ok();

  if (o.format == "csv") {
    std::string text = csv_row({"suite", "passed", "total", "status", "counterexample"});
    for (const auto& r : reports) {
      text += csv_row({r.suite, std::to_string(r.passed), std::to_string(r.total), r.ok() ? "pass" : "fail",
                       r.counterexample ? r.counterexample->dump() : ""});
    }
    emit(o, out, text);
  } else {
    json cfg = {{"command", "verify"}, {"suite", o.suite}};
    if (vo.m) cfg["m"] = *vo.m;
    if (vo.n) cfg["n"] = *vo.n;
    if (vo.max_n) cfg["max_n"] = *vo.max_n;
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(r.to_json());
    emit(o, out, json{{"config", cfg}, {"rows", rows}, {"status", all_ok ? "pass" : "fail"}}.dump(2) + "\n");
  }
  return all_ok ? kOk : kVerificationFailed;
}

int run_compare_pair_regev(const CLI::App& app, const Options& o, std::ostream& out) {
  const Specialization spec = Specialization::parse(o.spec);
  const std::size_t order = spec.kind == SpecKind::kTAdic ? spec.order : TruncSeries::kDefaultOrder;
  int lo = 1;
  int hi = app.count("--max-n") ? o.max_n : 4;
  if (app.count("--n")) lo = hi = o.n;
  if (lo < 1 || hi < lo) throw InputError("compare-pair-regev needs positive sizes");
  std::vector<MultiPartition> mus;
  for (int n = lo; n <= hi; ++n) {
    for (auto& mu : list_multipartitions(2, n)) mus.push_back(std::move(mu));
  }
  const std::vector<int> k = ones(2);
  struct Row {
    TruncSeries oracle;
    TruncSeries hook_sum;
    PairRegevValue pair;
    Integer group_oracle;
  };
  auto at_u1_one = [&](const TruncSeries& s) {
    std::vector<MultiPoly> coeffs;
    for (const auto& c : s.coeffs()) coeffs.push_back(c.substitute_u(1, 1));
    return TruncSeries(s.order(), std::move(coeffs));
  };
  const auto rows = parallel_map(mus.size(), o.jobs, [&](std::size_t i) {
    const MultiPoly oracle = char_value_oracle(mus[i], k, k);
    const CycloElem group = specialize_to_group(oracle, 2);
    return Row{expand_at_q1(oracle.substitute_u(1, 1), order), at_u1_one(hook_sum_rhs(mus[i], order)),
               pair_regev_rhs(mus[i], order), group.to_integer()};
  });

  if (o.format == "csv") {
    std::string text = csv_row({"mu", "oracle", "pair_rhs", "hook_sum_rhs", "series_match", "group_oracle",
                                "pair_group", "group_match"});
    for (std::size_t i = 0; i < mus.size(); ++i) {
      const auto& r = rows[i];
      text += csv_row({mus[i].to_string(), r.oracle.to_string(), r.pair.series.to_string(), r.hook_sum.to_string(),
                       r.oracle == r.pair.series ? "true" : "false", r.group_oracle.get_str(),
                       r.pair.group_value.get_str(), r.group_oracle == r.pair.group_value ? "true" : "false"});
    }
    emit(o, out, text);
    return kOk;
  }
  json cfg = {{"command", "compare-pair-regev"}, {"m", 2}, {"k", k}, {"l", k}, {"order", order}, {"u1", 1}};
  json jrows = json::array();
  std::size_t series_matches = 0;
  std::size_t group_matches = 0;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const auto& r = rows[i];
    const bool sm = r.oracle == r.pair.series;
    const bool gm = r.group_oracle == r.pair.group_value;
    series_matches += sm;
    group_matches += gm;
    jrows.push_back({{"mu", to_json(mus[i])},
                     {"oracle", r.oracle.to_string()},
                     {"pair_rhs", r.pair.series.to_string()},
                     {"hook_sum_rhs", r.hook_sum.to_string()},
                     {"series_match", sm},
                     {"hook_sum_match", r.oracle == r.hook_sum},
                     {"group_oracle", integer_to_json(r.group_oracle)},
                     {"pair_group", integer_to_json(r.pair.group_value)},
                     {"group_match", gm}});
  }
  json summary = {{"cases", mus.size()}, {"series_matches", series_matches}, {"group_matches", group_matches}};
  emit(o, out, json{{"config", cfg}, {"rows", jrows}, {"summary", summary}}.dump(2) + "\n");
  return kOk;
}

void add_color_options(CLI::App* sub, Options& o) {
  sub->add_option("--m", o.m, "Number of colours m");
  sub->add_option("--k", o.k, "Even dimensions k_1,...,k_m (default all 1)");
  sub->add_option("--l", o.l, "Odd dimensions l_1,...,l_m (default all 1)");
}

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "Write the document to this file instead of stdout");
  sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Character values of the permutation super representation of Ariki-Koike algebras", "akchar"};
  app.require_subcommand(1);

  auto* chars = app.add_subcommand("chars", "Character table on the standard elements g_mu");
  add_color_options(chars, o);
  chars->add_option("--n", o.n, "Size n");
  chars->add_option("--mu", o.mu, "Single multipartition, e.g. [[2,1],[]]");
  chars->add_option("--spec", o.spec, "generic | group | t2:D");
  add_output_options(chars, o);

  auto* hooks = app.add_subcommand("hooks", "Hook multipartitions with s_{k|l} and f counts");
  add_color_options(hooks, o);
  hooks->add_option("--n", o.n, "Size n");
  add_output_options(hooks, o);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "Suite name or all");
  verify->add_option("--m", o.m, "Restrict to this m");
  verify->add_option("--n", o.n, "Restrict to this n");
  verify->add_option("--max-n", o.max_n, "Largest n in the sweep");
  add_output_options(verify, o);

  auto* compare = app.add_subcommand("compare-pair-regev", "Type B pair formula versus the oracle (report only)");
  compare->add_option("--n", o.n, "Restrict to this n");
  compare->add_option("--max-n", o.max_n, "Largest n (default 4)");
  compare->add_option("--spec", o.spec, "t2:D sets the truncation order");
  add_output_options(compare, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*chars) return run_chars(*chars, o, out);
    if (*hooks) return run_hooks(*hooks, o, out);
    if (*verify) return run_verify(*verify, o, out);
    if (*compare) return run_compare_pair_regev(*compare, o, out);
  } catch (const std::invalid_argument& e) {
    err << "akchar: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace akchar::cli
