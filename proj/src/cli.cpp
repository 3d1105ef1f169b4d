#include "qwallach/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qwallach/flagmodel.hpp"
#include "qwallach/hecke.hpp"
#include "qwallach/spectral.hpp"

namespace qwallach::cli {

namespace {

const std::vector<std::string> kFlagCommands = {"lemma3", "factorization", "span",
                                                "structure-constants"};
const std::vector<std::string> kCommands = {"hecke-identity", "group-identity", "lemma3",
                                            "factorization",  "span",           "structure-constants",
                                            "multiplicities", "all"};

bool is_flag_command(const std::string& c) {
  return std::find(kFlagCommands.begin(), kFlagCommands.end(), c) != kFlagCommands.end();
}

std::vector<std::int64_t> default_qs(const std::string& command) {
  if (command == "multiplicities") return {1, 2, 3};
  return {2, 3};
}

void append(std::vector<Check>& into, std::vector<Check> more) {
  for (auto& c : more) into.push_back(std::move(c));
}

std::vector<Check> hecke_identity(int n) {
  std::vector<Check> checks;
  Check c;
  c.name = "hecke-identity";
  c.params = {{"n", n}};
  const HeckeElt product = wallach_product(n);
  c.pass = product.is_zero();
  if (!c.pass) c.details = "product has " + std::to_string(product.terms().size()) + " terms";
  checks.push_back(std::move(c));
  if (n <= 5) {
    for (unsigned k : wallach_factor_ks(n)) {
      Check m;
      m.name = "hecke-minimality";
      m.params = {{"n", n}, {"omitted_k", k}};
      m.pass = !wallach_product(n, k).is_zero();
      if (!m.pass) m.details = "product vanishes without this factor";
      checks.push_back(std::move(m));
    }
  }
  return checks;
}

std::vector<Check> group_identity(int n) {
  std::vector<Check> checks;
  Check c;
  c.name = "group-identity";
  c.params = {{"n", n}};
  const GroupElt product = wallach_group_product(n);
  c.pass = product.empty();
  if (!c.pass) c.details = "product has " + std::to_string(product.size()) + " terms";
  checks.push_back(std::move(c));
  if (n <= 5) {
    for (unsigned k : wallach_factor_ks(n)) {
      Check m;
      m.name = "group-minimality";
      m.params = {{"n", n}, {"omitted_k", k}};
      m.pass = !wallach_group_product(n, k).empty();
      if (!m.pass) m.details = "product vanishes without this factor";
      checks.push_back(std::move(m));
    }
  }
  return checks;
}

std::vector<Check> flag_checks(const std::string& command, int n, std::uint32_t q,
                               const RunConfig& config) {
  FlagModelOptions options;
  options.budget = config.budget;
  options.debug_orbit_checks = config.debug_orbit_checks;
  const FlagModel model(n, q, options);
  if (command == "lemma3") {
    if (config.t_range) return verify_lemma3(model, config.t_range->first, config.t_range->second);
    return verify_lemma3(model);
  }
  if (command == "factorization") {
    if (config.t_range) {
      return verify_factorization(model, config.t_range->first, config.t_range->second);
    }
    return verify_factorization(model);
  }
  if (command == "span") return verify_span_commutativity(model);
  return compare_structure_constants(model);
}

std::vector<Check> run_single(const std::string& command, int n, const std::vector<std::int64_t>& qs,
                              const RunConfig& config) {
  if (command == "hecke-identity") return hecke_identity(n);
  if (command == "group-identity") return group_identity(n);
  if (command == "multiplicities") {
    std::vector<BigInt> sample;
    for (auto q : qs) sample.emplace_back(static_cast<long>(q));
    MultiplicityOptions options;
    options.allow_large = config.allow_large;
    return verify_multiplicities(n, sample, options);
  }
  std::vector<Check> checks;
  for (auto q : qs) append(checks, flag_checks(command, n, static_cast<std::uint32_t>(q), config));
  return checks;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("bad t range: " + text);
    return v;
  };
  std::pair<int, int> range;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    range = {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  } else if (auto dash = text.find('-', 1); dash != std::string::npos) {
    range = {to_int(text.substr(0, dash)), to_int(text.substr(dash + 1))};
  } else {
    range = {to_int(text), to_int(text)};
  }
  if (range.first < 0 || range.first > range.second) throw std::invalid_argument("bad t range: " + text);
  return range;
}

void validate(const RunConfig& config) {
  if (std::find(kCommands.begin(), kCommands.end(), config.command) == kCommands.end()) {
    throw std::invalid_argument("unknown command: " + config.command);
  }
  if (config.n && *config.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (config.n && *config.n > 8) throw std::invalid_argument("--n above 8 is out of reach");
  if (config.budget == 0) throw std::invalid_argument("--budget must be positive");
  const auto qs = config.qs.empty() ? default_qs(config.command) : config.qs;
  for (auto q : qs) {
    if (config.command == "multiplicities") {
      if (q < 1) throw std::invalid_argument("multiplicities: q values must be at least 1");
    } else if (q < 2 || q >= (1 << 16) || !is_prime(static_cast<std::uint64_t>(q))) {
      throw std::invalid_argument("--q values must be primes, got " + std::to_string(q));
    }
  }
}

Report run(const RunConfig& config) {
  validate(config);
  Report report{config, {}};
  const auto qs = config.qs.empty() ? default_qs(config.command) : config.qs;
  if (config.command != "all") {
    report.checks = run_single(config.command, config.n.value_or(4), qs, config);
    return report;
  }
  const int top = config.n.value_or(4);
  for (int n = 2; n <= top; ++n) {
    append(report.checks, hecke_identity(n));
    append(report.checks, group_identity(n));
    for (const auto& command : kFlagCommands) append(report.checks, run_single(command, n, qs, config));
    append(report.checks, run_single("multiplicities", n, {1, 2, 3}, config));
  }
  return report;
}

nlohmann::json to_json(const Report& report) {
  using nlohmann::json;
  const auto& c = report.config;
  json config = {
      {"command", c.command},
      {"n", c.n ? json(*c.n) : json(nullptr)},
      {"q", c.qs.empty() ? default_qs(c.command) : c.qs},
      {"t", c.t_range ? json::array({c.t_range->first, c.t_range->second}) : json(nullptr)},
      {"budget", c.budget},
      {"format", c.format == Format::json ? "json" : "text"},
      {"debug_orbit_checks", c.debug_orbit_checks},
      {"allow_large", c.allow_large},
  };
  json checks = json::array();
  for (const auto& check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"params", check.params},
                      {"pass", check.pass},
                      {"details", check.details}});
  }
  return {{"schema", kJsonSchema},
          {"tool", kToolName},
          {"version", kToolVersion},
          {"config", std::move(config)},
          {"checks", std::move(checks)},
          {"overall", report.overall_pass() ? "pass" : "fail"}};
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& check : report.checks) {
    out << (check.pass ? "PASS " : "FAIL ") << check.name;
    for (const auto& [key, value] : check.params) out << ' ' << key << '=' << value;
    if (!check.details.empty()) out << "  [" << check.details << ']';
    out << '\n';
  }
  out << "overall: " << (report.overall_pass() ? "pass" : "fail") << " (" << report.checks.size()
      << " checks)\n";
  return out.str();
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the q-analogue of Wallach's identity", kToolName};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string t_text;
  std::vector<std::int64_t> qs;
  std::size_t budget = kDefaultFlagBudget;

  auto add_options = [&](CLI::App* sub) {
    sub->add_option("--n", config.n, "Rank: permutations of [1,n]");
    sub->add_option("--q", qs, "Comma-separated field sizes (primes) or specializations")
        ->delimiter(',');
    sub->add_option("--t", t_text, "Range of t, e.g. 1..3");
    sub->add_option("--budget", budget, "Maximum number of flags to enumerate");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--debug-orbit-checks", config.debug_orbit_checks,
                  "Re-evaluate on a translated representative of each orbit");
    sub->add_flag("--allow-large", config.allow_large,
                  "Allow n above the exact-elimination ceiling for multiplicities");
  };

  auto* verify = app.add_subcommand("verify", "Run one verification");
  verify->require_subcommand(1);
  for (const char* name : {"hecke-identity", "group-identity", "lemma3", "factorization", "span",
                           "structure-constants"}) {
    auto* sub = verify->add_subcommand(name);
    add_options(sub);
    sub->callback([&config, name] { config.command = name; });
  }
  auto* mult = app.add_subcommand("multiplicities", "Eigenvalue multiplicities of tau");
  add_options(mult);
  mult->callback([&config] { config.command = "multiplicities"; });
  auto* all = app.add_subcommand("all", "Full suite at default sizes");
  add_options(all);
  all->callback([&config] { config.command = "all"; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  config.qs = qs;
  config.budget = budget;
  config.format = format == "json" ? Format::json : Format::text;
  Report report;
  try {
    if (!t_text.empty()) config.t_range = parse_range(t_text);
    report = run(config);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  if (config.format == Format::json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    out << to_text(report);
  }
  return report.overall_pass() ? kPass : kVerificationFailed;
}

}  // namespace qwallach::cli
