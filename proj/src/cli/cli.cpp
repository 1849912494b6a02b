#include "vdw/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "vdw/core/error.hpp"
#include "vdw/counting/bounds.hpp"
#include "vdw/counting/enumerate.hpp"
#include "vdw/fourier/fourier.hpp"
#include "vdw/permgroup/catalogue.hpp"
#include "vdw/verify/suites.hpp"

namespace vdw::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Output {
  std::vector<Json> lines;    // JSON-lines body
  std::vector<Json> records;  // rows mirrored to CSV
  int exit_code = kExitOk;
};

Json header(const std::string& command, Json config) {
  Json j;
  j["format_version"] = counting::kFormatVersion;
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& cells) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, cells);
  } else if (j.is_string()) {
    cells.emplace_back(prefix, j.get<std::string>());
  } else {
    cells.emplace_back(prefix, j.dump());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string to_csv(const std::vector<Json>& records) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& record : records) {
    rows.emplace_back();
    flatten(record, "", rows.back());
    for (const auto& [key, value] : rows.back()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_escape(columns[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = std::find_if(row.begin(), row.end(), [&](const auto& c) { return c.first == columns[i]; });
      os << (i ? "," : "") << (it == row.end() ? "" : csv_escape(it->second));
    }
    os << '\n';
  }
  return os.str();
}

// Leaves an identical file untouched; returns false in that case.
bool write_if_changed(const std::string& path, const std::string& content) {
  {
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::ostringstream existing;
      existing << in.rdbuf();
      if (existing.str() == content) return false;
    }
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(file), ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  file << content;
  return true;
}

std::string trend(const std::vector<double>& v) {
  bool up = false, down = false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[i - 1] + 1e-12) up = true;
    if (v[i] < v[i - 1] - 1e-12) down = true;
  }
  if (!up) return "non-increasing";
  return down ? "mixed" : "increasing";
}

struct CountArgs {
  unsigned n = 0;
  std::vector<std::uint64_t> H;
  std::string mode = "exact";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget = counting::kDefaultBudget;
  std::string delta, Y;
  std::string checkpoint;
};

Output cmd_count(const CountArgs& a, std::ostream& err) {
  const auto mode = counting::parse_mode(a.mode);
  require(a.threads >= 1, ErrorCode::kInvalidArgument, "--threads must be at least 1");
  counting::EnumerateOptions options;
  options.mode = mode;
  options.threads = a.threads;
  options.budget = a.budget;
  Json config = {{"n", a.n}, {"mode", counting::to_string(mode)}, {"budget", a.budget}};
  if (!a.delta.empty() || !a.Y.empty()) {
    auto sieve = counting::SieveParams::defaults(a.n);
    if (!a.delta.empty()) sieve.delta = parse_rational(a.delta);
    if (!a.Y.empty()) sieve.Y = parse_rational(a.Y);
    sieve.validate(a.n);
    options.sieve = sieve;
    config["delta"] = sieve.delta.get_str();
    config["Y"] = sieve.Y.get_str();
  }
  if (!a.checkpoint.empty()) options.checkpoint_dir = a.checkpoint;
  // validate the whole ladder before any work
  for (auto h : a.H) {
    const double size = std::pow(2.0 * static_cast<double>(h) + 1, a.n);
    require(size <= static_cast<double>(a.budget), ErrorCode::kBudgetExceeded,
            "box (2H+1)^n for H=" + std::to_string(h) + " exceeds the budget");
  }
  Output o;
  std::vector<std::pair<double, double>> lower_points, upper_points;
  bool recomputed = false;
  for (auto h : a.H) {
    const auto result = counting::enumerate_box(a.n, h, options);
    result.ledger.check_invariants();
    recomputed = recomputed || result.computed > 0;
    Json c = config;
    c["H"] = h;
    Json line = header("count", c);
    line["ledger"] = Json::parse(counting::to_json(result.ledger));
    o.lines.push_back(line);
    Json rec = {{"n", a.n}, {"H", h}, {"mode", counting::to_string(mode)}};
    for (const auto& [key, value] : line["ledger"].items()) {
      if (key == "E" && value.is_array()) {
        rec["E_lower"] = value[0];
        rec["E_upper"] = value[1];
      } else if (key != "n" && key != "H" && key != "mode" && key != "format_version") {
        rec[key] = value;
      }
    }
    o.records.push_back(rec);
    if (h > 0) {
      lower_points.emplace_back(static_cast<double>(h), static_cast<double>(result.ledger.e_lower()));
      upper_points.emplace_back(static_cast<double>(h), static_cast<double>(result.ledger.e_upper()));
    }
  }
  if (lower_points.size() >= 3) {
    Json c = config;
    c["H"] = a.H;
    Json line = header("count", c);
    auto fit_json = [](const std::vector<std::pair<double, double>>& pts) -> Json {
      const auto fit = counting::exponent_fit(pts);
      return {{"slope", fit.slope}, {"intercept", fit.intercept}, {"residual", fit.residual}};
    };
    const bool positive = std::all_of(lower_points.begin(), lower_points.end(), [](auto& p) { return p.second > 0; });
    if (mode == counting::Mode::kExact) {
      line["fit"] = fit_json(upper_points);
    } else {
      if (positive) line["fitLower"] = fit_json(lower_points);
      line["fitUpper"] = fit_json(upper_points);
    }
    o.lines.push_back(line);
  }
  if (options.checkpoint_dir && !recomputed) err << "up to date: every sub-box loaded from " << a.checkpoint << '\n';
  return o;
}

struct FourierArgs {
  std::vector<std::uint64_t> p;
  unsigned n = 0;
  std::vector<std::string> sigma;
  std::string space = "monic";
  std::string method = "axis";
};

Output cmd_fourier(const FourierArgs& a) {
  const auto kind = fourier::parse_space_kind(a.space);
  require(a.method == "axis" || a.method == "direct", ErrorCode::kInvalidArgument,
          "--method must be axis or direct");
  const auto method = a.method == "axis" ? fourier::DftMethod::kAxis : fourier::DftMethod::kDirect;
  std::vector<poly::SplittingType> sigmas;
  for (const auto& s : a.sigma) sigmas.push_back(poly::SplittingType::parse(s));
  for (auto p : a.p) require(is_prime(p), ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  Output o;
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    std::vector<double> mains, maxes;
    for (auto p : a.p) {
      const auto table = fourier::fourier_table({kind, p, a.n}, sigmas[i], method);
      const auto report = fourier::verify_decay(table);
      Json line = header("fourier", {{"p", p}, {"n", a.n}, {"sigma", sigmas[i].to_string()},
                                     {"space", fourier::to_string(kind)}, {"method", a.method}});
      line["report"] = Json::parse(report.to_json());
      line["errorBudget"] = table.error_budget();
      o.records.push_back(line["report"]);
      o.lines.push_back(line);
      mains.push_back(report.main_term_error);
      maxes.push_back(report.max_nonzero_scaled);
    }
    if (a.p.size() >= 2) {
      Json line = header("fourier", {{"p", a.p}, {"n", a.n}, {"sigma", sigmas[i].to_string()},
                                     {"space", fourier::to_string(kind)}, {"method", a.method}});
      line["trend"] = {{"mainTermError", trend(mains)}, {"maxNonzeroScaled", trend(maxes)}};
      o.lines.push_back(line);
    }
  }
  return o;
}

struct GroupArgs {
  std::string name, wreath;
  std::size_t cap = perm::kDefaultClosureCap;
};

Output cmd_group(const GroupArgs& a) {
  require(a.name.empty() != a.wreath.empty(), ErrorCode::kInvalidArgument, "give exactly one of --name, --wreath");
  std::string name = a.name;
  if (!a.wreath.empty()) {
    std::map<std::string, unsigned> kv;
    std::stringstream ss(a.wreath);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto eq = item.find('=');
      require(eq != std::string::npos, ErrorCode::kInvalidArgument, "--wreath expects m=..,k=..,r=..");
      try {
        kv[item.substr(0, eq)] = static_cast<unsigned>(std::stoul(item.substr(eq + 1)));
      } catch (const std::logic_error&) {
        fail(ErrorCode::kInvalidArgument, "malformed --wreath entry '" + item + "'");
      }
    }
    require(kv.size() == 3 && kv.count("m") && kv.count("k") && kv.count("r"), ErrorCode::kInvalidArgument,
            "--wreath expects m=..,k=..,r=..");
    name = "PA(" + std::to_string(kv["m"]) + "," + std::to_string(kv["k"]) + "," + std::to_string(kv["r"]) + ")";
  }
  const auto entry = perm::group_by_name(name);
  Output o;
  Json line = header("group", {{"name", name}, {"cap", a.cap}});
  line["group"] = Json::parse(perm::to_json_line(perm::summarize(entry.name, entry.group, a.cap)));
  o.records.push_back(line["group"]);
  o.lines.push_back(line);
  return o;
}

Output cmd_verify(const std::string& suite, std::uint64_t seed) {
  std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  if (suite != "all") verify::run_suite(suite, seed).name;  // rejects unknown names first
  Output o;
  for (const auto& name : names) {
    const auto result = verify::run_suite(name, seed);
    Json line = header("verify", {{"suite", name}, {"seed", seed}});
    line["result"] = Json::parse(result.to_json());
    o.records.push_back({{"suite", name}, {"passed", result.passed}, {"checked", result.checked},
                         {"violations", result.violations}});
    o.lines.push_back(line);
    if (!result.passed) o.exit_code = kExitInvariant;
  }
  return o;
}

struct BoundArgs {
  unsigned n = 0, ind = 1;
  std::string a, u = "0";
  int digits = 3;
  bool headline = false;
};

Output cmd_bound(const BoundArgs& b) {
  require(b.digits >= 0 && b.digits <= 60, ErrorCode::kInvalidArgument, "--digits must be in [0, 60]");
  Output o;
  if (b.headline) {
    const auto h = counting::headline_comparison(b.n);
    Json line = header("bound", {{"n", b.n}, {"headline", true}, {"digits", b.digits}});
    line["comparison"] = {{"term2Exp", to_decimal(h.term2, b.digits)}, {"term2Exact", h.term2.get_str()},
                          {"chosenExp", to_decimal(h.chosen, b.digits)}, {"chosenExact", h.chosen.get_str()},
                          {"headlineExp", to_decimal(h.headline, b.digits)}};
    o.records.push_back(line["comparison"]);
    o.lines.push_back(line);
    return o;
  }
  require(!b.a.empty(), ErrorCode::kInvalidArgument, "--a is required");
  const counting::BoundInputs in{b.n, b.ind, parse_rational(b.a), parse_rational(b.u)};
  const auto report = counting::bound_calculator(in);
  Json line = header("bound", {{"n", b.n}, {"ind", b.ind}, {"a", in.a.get_str()}, {"u", in.u.get_str()},
                               {"digits", b.digits}});
  line["report"] = Json::parse(report.to_json(b.digits));
  o.records.push_back(line["report"]);
  o.lines.push_back(line);
  return o;
}

struct HeightArgs {
  unsigned n1 = 0, n2 = 0;
  std::uint64_t H = 0;
  std::optional<std::uint64_t> factor_cap;
  std::uint64_t budget = counting::kDefaultBudget;
};

Output cmd_heights(const HeightArgs& h) {
  const auto report = counting::intransitive_height_report(h.n1, h.n2, h.H, h.factor_cap, h.budget);
  Json config = {{"n1", h.n1}, {"n2", h.n2}, {"H", h.H}, {"budget", h.budget}};
  if (h.factor_cap) config["factorCap"] = *h.factor_cap;
  Output o;
  Json line = header("heights", config);
  line["report"] = Json::parse(report.to_json());
  if (report.violations > 0) o.exit_code = kExitInvariant;
  o.lines.push_back(line);
  Json rec = line["report"];
  rec.erase("table");
  o.records.push_back(rec);
  return o;
}

int exit_code_for(ErrorCode code) {
  if (code == ErrorCode::kInvariantViolation) return kExitInvariant;
  return is_resource_error(code) ? kExitResource : kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois group counting experiments", "vdw"};
  app.require_subcommand(1);
  std::string out_path, csv_path;
  app.add_option("--out", out_path, "Write JSON lines to this file instead of stdout");
  app.add_option("--csv", csv_path, "Mirror result records to this CSV file");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Exact or interval counts E_n(H) over [-H, H]^n");
  c->add_option("--n", count.n, "Degree")->required();
  c->add_option("--H", count.H, "Height ladder, comma separated")->required()->delimiter(',');
  c->add_option("--mode", count.mode, "exact or interval");
  c->add_option("--threads", count.threads, "Worker threads");
  c->add_option("--budget", count.budget, "Maximum box size");
  c->add_option("--delta", count.delta, "Case-partition delta as p/q");
  c->add_option("--Y", count.Y, "Case-partition Y as p/q");
  c->add_option("--checkpoint", count.checkpoint, "Checkpoint directory");

  FourierArgs four;
  auto* f = app.add_subcommand("fourier", "Fourier tables of splitting-type weights and decay reports");
  f->add_option("--p", four.p, "Primes, comma separated")->required()->delimiter(',');
  f->add_option("--n", four.n, "Degree")->required();
  f->add_option("--sigma", four.sigma, "Splitting types, comma separated or repeated")->required()->delimiter(',');
  f->add_option("--space", four.space, "monic or binary");
  f->add_option("--method", four.method, "axis or direct");

  GroupArgs group;
  auto* g = app.add_subcommand("group", "Order, ind, primitivity and minimal degree of a group");
  g->add_option("--name", group.name, "Catalogue name: Sn, An, Cn, Dn, AGLp, M11, PA(m,k,r), Wr(m,r)");
  g->add_option("--wreath", group.wreath, "Product action m=..,k=..,r=..");
  g->add_option("--cap", group.cap, "Closure size cap");

  std::string suite;
  std::uint64_t seed = 1;
  auto* v = app.add_subcommand("verify", "Run a property suite, or all");
  v->add_option("suite", suite, "Suite name or 'all'")->required();
  v->add_option("--seed", seed, "Seed for sampled suites");

  BoundArgs bound;
  auto* b = app.add_subcommand("bound", "Exponent min{max(term1, term2), term3}");
  b->add_option("--n", bound.n, "Degree")->required();
  b->add_option("--ind", bound.ind, "ind(G)");
  b->add_option("--a", bound.a, "a(G) as p/q or decimal");
  b->add_option("--u", bound.u, "0, or 1/(n(n-1)) for primitive G");
  b->add_option("--digits", bound.digits, "Decimal digits in the report");
  b->add_flag("--headline", bound.headline, "Compare a = 3/8, k = n/2, u = 0 with 3n/11 + 1.164");

  HeightArgs heights;
  auto* h = app.add_subcommand("heights", "Height ratios of products f1 f2");
  h->add_option("--n1", heights.n1)->required();
  h->add_option("--n2", heights.n2)->required();
  h->add_option("--H", heights.H)->required();
  h->add_option("--factor-cap", heights.factor_cap, "Bound the factor heights instead of the product height");
  h->add_option("--budget", heights.budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
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
    Output o;
    if (c->parsed()) o = cmd_count(count, err);
    if (f->parsed()) o = cmd_fourier(four);
    if (g->parsed()) o = cmd_group(group);
    if (v->parsed()) o = cmd_verify(suite, seed);
    if (b->parsed()) o = cmd_bound(bound);
    if (h->parsed()) o = cmd_heights(heights);

    std::string body;
    for (const auto& line : o.lines) body += line.dump() + "\n";
    if (out_path.empty()) {
      out << body;
    } else if (!write_if_changed(out_path, body)) {
      err << "up to date: " << out_path << " unchanged\n";
    }
    if (!csv_path.empty()) write_if_changed(csv_path, to_csv(o.records));
    return o.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace vdw::cli
