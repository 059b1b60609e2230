#include "cli.hpp"

#include "tau/cache_io.hpp"
#include "tau/denominators.hpp"
#include "tau/identities.hpp"
#include "tau/monotonicity.hpp"
#include "tau/npoint.hpp"
#include "tau/reduction.hpp"
#include "tau/report.hpp"
#include "tau/tau_engine.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace tau::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("not an integer list: '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct Settings {
  std::string cache_path;
  bool verify_cache = false;
  int jobs = 0;
  bool no_timing = false;
};

struct VerifyArgs {
  std::string id;
  int gmin = -1;
  int gmax = -1;
  int nmax = -1;
  int k_span = -1;
  int r_max = 2;
  int m_max = 3;
  bool deep = false;
};

struct Defaults {
  int gmax;
  int nmax;
};

const std::map<std::string, Defaults>& verify_defaults() {
  static const std::map<std::string, Defaults> table{
      {"eq3", {6, 4}},  {"eq4", {6, 4}},    {"eq5", {6, 4}},    {"eq6", {5, 4}},    {"eq7", {4, 3}},
      {"eq8", {6, 4}},  {"c32", {4, 3}},    {"c33", {4, 3}},    {"c34", {4, 3}},    {"c35", {4, 3}},
      {"decomp", {6, 4}}, {"n1sums", {10, 1}}, {"c41", {3, 0}},  {"c42", {4, 0}},    {"c43", {4, 0}},
      {"ds", {4, 0}},   {"c51", {6, 4}},    {"c52", {3, 2}},    {"c53", {3, 2}},    {"c54", {6, 4}},
  };
  return table;
}

std::vector<IdentityId> identity_group(const std::string& id) {
  if (auto single = parse_identity(id)) return {*single};
  if (id == "c32") return {IdentityId::c32a, IdentityId::c32b};
  if (id == "c33") return {IdentityId::c33a, IdentityId::c33b};
  if (id == "c34") return {IdentityId::c34a, IdentityId::c34b};
  if (id == "c35") return {IdentityId::c35a, IdentityId::c35b};
  return {};
}

std::string base_id(const std::string& id) {
  if (id.size() == 4 && id[0] == 'c' && (id.back() == 'a' || id.back() == 'b')) return id.substr(0, 3);
  return id;
}

class Session {
 public:
  Session(const Settings& settings, std::ostream& out, std::ostream& err)
      : settings_(settings), out_(out), err_(err) {
    auto table = std::make_shared<BracketTable>();
    if (!settings.cache_path.empty() && std::filesystem::exists(settings.cache_path)) {
      *table = load_cache(std::filesystem::path(settings.cache_path), CacheLoadOptions{settings.verify_cache});
    }
    engine_ = std::make_unique<TauEngine>(EngineOptions{}, table);
  }

  void persist() {
    if (!settings_.cache_path.empty()) save_cache(engine_->table(), std::filesystem::path(settings_.cache_path));
  }

  const TauEngine& engine() const { return *engine_; }
  BracketTable& table() { return engine_->table(); }

  int emit(const std::vector<Report>& reports) {
    out_ << render_sweep(reports, !settings_.no_timing);
    return count_passed(reports) == reports.size() ? kOk : kVerificationFailed;
  }

  int verify(const VerifyArgs& a);
  int monotone(const std::string& lambda, int n, int gmax, int gmin);

 private:
  std::vector<Report> identity_sweep(const std::vector<IdentityId>& ids, const SweepBounds& bounds, bool deep);

  Settings settings_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<TauEngine> engine_;
};

std::vector<Report> Session::identity_sweep(const std::vector<IdentityId>& ids, const SweepBounds& bounds, bool deep) {
  SweepBounds b = bounds;
  if (deep) {
    // Brackets with at most three points, read off the n-point functions.
    NPointEngine npoint(b.gmax);
    const std::size_t seeded = seed_table(npoint, 3, table());
    err_ << "seeded " << seeded << " coefficients from the 1-, 2- and 3-point functions through genus " << b.gmax
         << '\n';
    b.nmax = std::min(b.nmax, 2);
  }
  std::vector<Report> all;
  for (IdentityId id : ids) {
    std::vector<SkippedCase> skipped;
    auto reports = verify_sweep(*engine_, id, b, settings_.jobs, &skipped);
    for (const auto& s : skipped) {
      nlohmann::json params = to_json(s.params);
      params.erase("d");
      params.erase("n");
      err_ << "skipped " << identity_name(id) << ' ' << params.dump() << " (all n): " << s.reason << '\n';
    }
    all.insert(all.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
  }
  return all;
}

int Session::verify(const VerifyArgs& a) {
  const auto& defaults = verify_defaults();
  const auto it = defaults.find(base_id(a.id));
  if (it == defaults.end()) throw UsageError("unknown identity id '" + a.id + "'");
  const int gmax = a.gmax >= 0 ? a.gmax : it->second.gmax;
  const int nmax = a.nmax >= 0 ? a.nmax : it->second.nmax;
  const int jobs = settings_.jobs;

  if (auto group = identity_group(a.id); !group.empty()) {
    SweepBounds b;
    b.gmin = std::max(a.gmin, 0);
    b.gmax = gmax;
    b.nmax = nmax;
    b.k_span = a.k_span;
    b.r_max = a.r_max;
    b.m_max = a.m_max;
    return emit(identity_sweep(group, b, a.deep));
  }

  std::vector<Report> reports;
  if (a.id == "decomp") {
    std::vector<std::pair<int, std::vector<int>>> cases;
    for (int g = std::max(a.gmin, 2); g <= gmax; ++g) {
      for (const auto& p : sweep_params(IdentityId::eq3, SweepBounds{g, g, 1, nmax, -1, 0, 0}).cases) {
        cases.emplace_back(g, p.d);
      }
    }
    reports = run_parallel(cases.size(), jobs,
                           [&](std::size_t i) { return decomposition_check(*engine_, cases[i].first, cases[i].second); });
  } else if (a.id == "n1sums") {
    for (int g = std::max(a.gmin, 1); g <= gmax; ++g) {
      auto r = n1_reports(*engine_, g);
      reports.insert(reports.end(), r.begin(), r.end());
    }
  } else if (a.id == "c41" || a.id == "c42" || a.id == "ds") {
    DenominatorStats stats(*engine_, jobs);
    for (int g = std::max(a.gmin, 2); g <= gmax; ++g) {
      if (a.id == "c41") reports.push_back(stats.prime_order_check(g));
      if (a.id == "c42") reports.push_back(stats.threshold_check(g));
      if (a.id == "ds") reports.push_back(stats.compare_D_S(g));
    }
  } else if (a.id == "c43") {
    DenominatorStats stats(*engine_, jobs);
    for (int total = std::max(a.gmin, 0); total <= gmax; ++total) {
      for (int g = 0; g <= total; ++g) reports.push_back(stats.divisibility_check(g, total - g));
    }
  } else if (a.id == "c51") {
    if (a.deep) return monotone("none", 2, gmax, std::max(a.gmin, 1));
    std::vector<std::pair<int, int>> cases;
    for (int g = std::max(a.gmin, 0); g <= gmax; ++g) {
      for (int n = 1; n <= nmax; ++n) {
        if (2 * g - 2 + n > 0) cases.emplace_back(g, n);
      }
    }
    reports = run_parallel(cases.size(), jobs,
                           [&](std::size_t i) { return psi_swap_check(*engine_, cases[i].first, cases[i].second); });
    for (const auto& [g, n] : cases) {
      if (g >= 1) reports.push_back(lambda_g_swap_check(g, n));
    }
  } else if (a.id == "c52" || a.id == "c53" || a.id == "c54") {
    std::vector<std::pair<int, int>> cases;
    const int gfloor = a.id == "c52" ? 0 : 1;
    for (int g = std::max(a.gmin, gfloor); g <= gmax; ++g) {
      for (int n = 0; n <= nmax; ++n) {
        if (2 * g - 2 + n > 0 && (a.id != "c54" || n >= 1)) cases.emplace_back(g, n);
      }
    }
    reports = run_parallel(cases.size(), jobs, [&](std::size_t i) {
      const auto [g, n] = cases[i];
      if (a.id == "c52") return kappa_swap_check(*engine_, g, n, a.m_max);
      if (a.id == "c53") return kappa_bounds_check(*engine_, g, n);
      return psi_lower_bound_check(*engine_, g, n);
    });
  }
  return emit(reports);
}

int Session::monotone(const std::string& lambda, int n, int gmax, int gmin) {
  std::vector<Report> reports;
  if (lambda == "lambda_g") {
    for (int g = std::max(gmin, 1); g <= gmax; ++g) reports.push_back(lambda_g_swap_check(g, n));
  } else if (n == 2) {
    NPointEngine npoint(gmax);
    reports = two_point_swap_sweep(npoint, gmax, [&](const Report& r) {
      err_ << "g=" << r.params["g"].get<int>() << " comparisons=" << r.detail["comparisons"].get<long>()
           << (r.pass ? " ok" : " VIOLATION") << '\n';
      err_.flush();
    });
    reports.erase(reports.begin(), reports.begin() + std::min<std::ptrdiff_t>(std::max(gmin, 1) - 1, reports.size()));
  } else {
    std::vector<int> genera;
    for (int g = std::max(gmin, 0); g <= gmax; ++g) {
      if (2 * g - 2 + n > 0) genera.push_back(g);
    }
    reports = run_parallel(genera.size(), settings_.jobs,
                           [&](std::size_t i) { return psi_swap_check(*engine_, genera[i], n); });
  }
  return emit(reports);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact psi/kappa/lambda intersection numbers and identity verification", "tau"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--cache", settings.cache_path, "Bracket cache file, loaded at start and saved at exit");
  app.add_flag("--verify-cache", settings.verify_cache, "Recompute every loaded cache entry");
  app.add_option("--jobs", settings.jobs, "Worker threads (default: hardware concurrency)")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-timing", settings.no_timing, "Report ms = 0 for byte-comparable output");

  int genus = 0;
  int points = -1;
  std::string d_text;
  std::string a_text;

  auto* compute = app.add_subcommand("compute", "Evaluate <tau_d>_g");
  compute->add_option("--g", genus, "Genus")->required();
  compute->add_option("--d", d_text, "Comma-separated exponents")->required();

  auto* compute_kappa = app.add_subcommand("compute-kappa", "Evaluate <tau_d kappa_a>_{g,n}");
  compute_kappa->add_option("--g", genus, "Genus")->required();
  compute_kappa->add_option("--n", points, "Marked points");
  compute_kappa->add_option("--a", a_text, "Comma-separated kappa indices")->required();
  compute_kappa->add_option("--d", d_text, "Comma-separated psi exponents (default: n zeros)");

  int gmax = -1;
  bool special = false;
  bool show_f = false;
  auto* npoint = app.add_subcommand("npoint", "Print the normalized n-point function G");
  npoint->add_option("--n", points, "Number of variables")->required();
  npoint->add_option("--gmax", gmax, "Top genus")->required();
  npoint->add_flag("--special", special, "Print G(y, -y, x_1..x_n) with y first");
  npoint->add_flag("--f", show_f, "Print F instead of G");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("id", verify_args.id,
                     "eq3|eq4|eq5|eq6|eq7|eq8|c32[a|b]|c33[a|b]|c34[a|b]|c35[a|b]|decomp|n1sums|c41|c42|c43|ds|c51|c52|c53|c54")
      ->required();
  verify->add_option("--gmin", verify_args.gmin, "Lowest genus");
  verify->add_option("--gmax", verify_args.gmax, "Highest genus");
  verify->add_option("--nmax", verify_args.nmax, "Most marked points");
  verify->add_option("--kspan", verify_args.k_span, "Cap K at its threshold plus this span");
  verify->add_option("--rmax", verify_args.r_max, "Largest r, s, r_p, s_p");
  verify->add_option("--mmax", verify_args.m_max, "Largest m, l (kappa count for c52)");
  verify->add_flag("--deep", verify_args.deep, "eq5/eq8: n <= 2 from n-point seeds; c51: two-point sweep");

  std::optional<int> denom_n;
  auto* denom = app.add_subcommand("denom", "Denominator lcm of psi (with --n) or kappa brackets");
  denom->add_option("--g", genus, "Genus")->required();
  denom->add_option("--n", denom_n, "Marked points");
  bool denom_json = false;
  denom->add_flag("--json", denom_json, "Print the JSON profile");

  std::string lambda = "none";
  int gmin = 0;
  auto* monotone = app.add_subcommand("monotone", "Swap monotonicity sweep at fixed n (n = 2 uses the two-point function)");
  monotone->add_option("--lambda", lambda, "none|lambda_g")->check(CLI::IsMember({"none", "lambda_g"}));
  monotone->add_option("--n", points, "Marked points")->required()->check(CLI::PositiveNumber);
  monotone->add_option("--gmax", gmax, "Highest genus")->required();
  monotone->add_option("--gmin", gmin, "Lowest genus");

  std::string export_path;
  std::string import_path;
  auto* cache = app.add_subcommand("cache", "Export or import bracket tables");
  auto* export_opt = cache->add_option("--export", export_path, "Write the current table");
  auto* import_opt = cache->add_option("--import", import_path, "Merge a table file");
  export_opt->excludes(import_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (cache->parsed() && export_path.empty() && import_path.empty()) {
      throw CLI::ValidationError("cache", "one of --export or --import is required");
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    Session session(settings, out, err);
    int code = kOk;
    if (compute->parsed()) {
      out << to_string(session.engine().bracket(genus, parse_int_list(d_text))) << '\n';
    } else if (compute_kappa->parsed()) {
      std::vector<int> d = parse_int_list(d_text);
      if (d_text.empty()) {
        d.assign(static_cast<std::size_t>(std::max(points, 0)), 0);
      } else if (points >= 0 && static_cast<int>(d.size()) != points) {
        throw UsageError("compute-kappa: --d has " + std::to_string(d.size()) + " entries but --n is " +
                         std::to_string(points));
      }
      out << to_string(kappa_to_psi(session.engine(), MixedKey{genus, d, parse_int_list(a_text)})) << '\n';
    } else if (npoint->parsed()) {
      if (gmax < 0) throw UsageError("npoint: --gmax must be >= 0");
      NPointEngine engine(gmax);
      if (special) {
        const MergedSeries merged = merged_series(engine, points);
        for (int g = 0; g <= gmax; ++g) out << merged.component(g).dump();
      } else {
        if (points < 2) throw UsageError("npoint: --n must be >= 2");
        const NPointFunction& fn = engine.function(points);
        for (int g = 0; g <= gmax; ++g) {
          if (2 * g - 2 + points <= 0) continue;
          out << (show_f ? fn.f_component(g) : fn.g_component(g)).dump();
        }
      }
    } else if (verify->parsed()) {
      code = session.verify(verify_args);
    } else if (denom->parsed()) {
      DenominatorStats stats(session.engine(), settings.jobs);
      DenominatorProfile profile;
      if (denom_n) {
        profile = stats.psi_lcm(genus, *denom_n);
      } else if (genus < 2) {
        profile = make_profile(genus, std::nullopt, stats.kappa_lcm_extended(genus));
      } else {
        profile = stats.kappa_lcm(genus);
      }
      if (denom_json) {
        out << to_json(profile).dump() << '\n';
      } else {
        out << profile.value.get_str() << " = " << render_factorization(profile.factors) << '\n';
      }
    } else if (monotone->parsed()) {
      code = session.monotone(lambda, points, gmax, gmin);
    } else if (cache->parsed()) {
      if (!export_path.empty()) {
        save_cache(session.table(), std::filesystem::path(export_path));
        out << "exported " << session.table().size() << " entries\n";
      } else {
        const BracketTable imported =
            load_cache(std::filesystem::path(import_path), CacheLoadOptions{settings.verify_cache});
        for (const auto& [key, value] : imported.entries()) session.table().insert(key, value);
        out << "imported " << imported.size() << " entries\n";
      }
    }
    session.persist();
    return code;
  } catch (const CacheFormatError& e) {
    err << "cache error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace tau::cli
