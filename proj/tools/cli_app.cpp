#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "depolar/frames.hpp"
#include "depolar/horn.hpp"
#include "depolar/lr.hpp"
#include "depolar/permutations.hpp"
#include "depolar/spectral.hpp"
#include "depolar/table_io.hpp"
#include "depolar/verify.hpp"

namespace depolar::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  int d = 2;
  std::string format = "auto";
  std::string out_path;
  int cap_n = 12;
  bool exact = false;
};

std::vector<ExactScalar> parse_grid(const std::string& text) {
  std::vector<ExactScalar> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(parse_probability(item));
  if (grid.empty()) throw UsageError("the q grid is empty");
  return grid;
}

YoungFrame parse_frame_arg(const std::string& text, std::optional<int> d = std::nullopt) {
  try {
    return d ? YoungFrame::parse(text, *d) : YoungFrame::parse(text);
  } catch (const FrameError& e) {
    throw UsageError("frame '" + text + "': " + e.what());
  }
}

void check_local_dimension(int d) {
  if (d < 1 || d > kMaxLocalDimension) {
    throw UsageError("--d must lie in [1," + std::to_string(kMaxLocalDimension) + "]");
  }
}

void check_cap(int n, const Globals& g) {
  if (g.cap_n > kMaxBoxes) throw UsageError("--cap-n cannot exceed " + std::to_string(kMaxBoxes));
  if (n > g.cap_n) {
    throw UsageError("n=" + std::to_string(n) + " exceeds --cap-n=" + std::to_string(g.cap_n) +
                     "; pass --cap-n " + std::to_string(n) + " to allow it");
  }
}

std::string tableau_text(const LRTableau& t) {
  std::string out;
  for (int i = 0; i < t.skew.outer.d(); ++i) {
    if (t.skew.outer[i] == 0) break;
    for (int j = 0; j < t.skew.inner[i]; ++j) out += ". ";
    for (int v : t.filling[static_cast<std::size_t>(i)]) out += std::to_string(v) + " ";
    out.back() = '\n';
  }
  return out;
}

}  // namespace

ExactScalar parse_probability(const std::string& raw) {
  std::string text = raw;
  text.erase(0, text.find_first_not_of(" \t"));
  text.erase(text.find_last_not_of(" \t") + 1);
  ExactScalar value;
  bool ok = !text.empty();
  if (ok && text.find('.') != std::string::npos) {
    const auto dot = text.find('.');
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    ok = !(whole.empty() && frac.empty()) && whole.find_first_not_of("0123456789") == std::string::npos &&
         frac.find_first_not_of("0123456789") == std::string::npos;
    if (ok) {
      mpz_class num(whole.empty() ? "0" : whole);
      mpz_class scale = 1;
      for (char c : frac) {
        num = num * 10 + (c - '0');
        scale *= 10;
      }
      value = ExactScalar(num, scale);
    }
  } else if (ok) {
    ok = text.find_first_not_of("0123456789/") == std::string::npos && value.set_str(text, 10) == 0 &&
         value.get_den() != 0;
  }
  if (!ok) throw UsageError("cannot parse probability '" + raw + "'");
  value.canonicalize();
  if (value < 0 || value > 1) throw UsageError("probability '" + raw + "' outside [0,1]");
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depolarising channel on isotypical states: exact spectra, LR branching and verification"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--d", g.d, "local Hilbert dimension")->capture_default_str();
  app.add_option("--format", g.format, "text, csv or json (default depends on the command)")
      ->check(CLI::IsMember({"auto", "text", "csv", "json"}));
  app.add_option("--out", g.out_path, "write results to this file instead of stdout");
  app.add_option("--cap-n", g.cap_n, "largest n accepted (verify: largest n for d=2)")->capture_default_str();
  app.add_flag("--exact", g.exact, "exact rationals in sweep cells");
  app.fallthrough();

  std::string frame_text;
  auto* dims = app.add_subcommand("dims", "dim F_lambda, dim U^d_lambda and tr P_lambda");
  dims->add_option("frame", frame_text, "frame, e.g. 2,1")->required();

  std::string lambda_text, mu_text, nu_text;
  bool witness = false;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu nu}");
  lr->add_option("lambda", lambda_text)->required();
  lr->add_option("mu", mu_text)->required();
  lr->add_option("nu", nu_text)->required();
  lr->add_flag("--witness", witness, "print the LR tableaux");

  std::string class_text;
  auto* chr = app.add_subcommand("char", "irreducible character chi_lambda on a cycle type");
  chr->add_option("frame", frame_text)->required();
  chr->add_option("class", class_text, "cycle type, e.g. 3,1")->required();

  bool basic_only = false;
  bool feasible_only = false;
  auto* horn = app.add_subcommand("horn", "basic Horn inequalities and LR feasibility");
  horn->add_option("lambda", lambda_text)->required();
  horn->add_option("mu", mu_text)->required();
  horn->add_option("nu", nu_text)->required();
  auto* basic_flag = horn->add_flag("--basic", basic_only, "only the m = i+j-1 family");
  horn->add_flag("--feasible", feasible_only, "only LR feasibility")->excludes(basic_flag);

  std::string q_text;
  int k_value = -1;
  auto* spectrum = app.add_subcommand("spectrum", "output spectrum over isotypical blocks");
  spectrum->add_option("frame", frame_text)->required();
  auto* q_opt = spectrum->add_option("--q", q_text, "depolarising weight (channel output)");
  auto* k_opt = spectrum->add_option("--k", k_value, "trace k sites and twirl instead");
  q_opt->excludes(k_opt);

  std::string grid_text;
  auto* sweep = app.add_subcommand("sweep", "channel output for a grid of q values");
  sweep->add_option("frame", frame_text)->required();
  sweep->add_option("--grid", grid_text, "comma-separated q values, e.g. 1/10,1/2,0.9")->required();

  std::string target_text;
  int l_value = -1;
  auto* xy = app.add_subcommand("xy", "extremal dimension products X and Y");
  xy->add_option("lambda", lambda_text)->required();
  xy->add_option("lambda_prime", target_text)->required();
  xy->add_option("--l", l_value, "kept sites")->required();
  xy->add_option("--k", k_value, "traced sites")->required();

  std::string suite;
  VerifyConfig verify_config;
  auto* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  verify->add_option("suite", suite, "thm1, thm2, lemma, saturation, oracle or all")->required();
  verify->add_option("--cap-n-d3", verify_config.cap_n_d3, "largest n for d=3")->capture_default_str();
  verify->add_option("--seed", verify_config.seed, "seed for sampled checks")->capture_default_str();
  verify->add_option("--grid", grid_text, "q grid for thm2 (default 1/10..9/10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsageError;
  }

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path);
    if (!file) {
      err << "error: cannot open " << g.out_path << " for writing\n";
      return kUsageError;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;
  auto fmt = [&](const std::string& fallback) { return g.format == "auto" ? fallback : g.format; };

  try {
    if (*dims) {
      check_local_dimension(g.d);
      const auto frame = parse_frame_arg(frame_text, g.d);
      check_cap(frame.n(), g);
      const auto f = dim_sym(frame);
      const auto u = dim_unitary(frame, g.d);
      if (fmt("text") == "json") {
        sink << nlohmann::ordered_json{{"frame", frame.to_string()}, {"d", g.d}, {"dim_sym", f}, {"dim_unitary", u},
                                       {"trace", f * u}}
                    .dump()
             << '\n';
      } else {
        sink << "frame=" << frame.to_string() << " dimF=" << f << " dimU=" << u << " trace=" << f * u << '\n';
      }
      return kOk;
    }
    if (*lr) {
      const auto lambda = parse_frame_arg(lambda_text);
      const auto mu = parse_frame_arg(mu_text);
      const auto nu = parse_frame_arg(nu_text);
      check_cap(lambda.n(), g);
      const bool sizes_match = lambda.n() == mu.n() + nu.n();
      const auto c = lr_coefficient(lambda, mu, nu);
      std::optional<std::uint64_t> oracle;
      if (lambda.n() <= kDefaultGroupCap) oracle = lr_via_characters(lambda, mu, nu);
      const bool agree = !oracle || *oracle == c;
      const auto tableaux = witness ? lr_tableaux(lambda, mu, nu) : std::vector<LRTableau>{};
      if (fmt("text") == "json") {
        nlohmann::ordered_json j{{"lambda", lambda.to_string()}, {"mu", mu.to_string()}, {"nu", nu.to_string()},
                                 {"coefficient", c}};
        j["oracle"] = oracle ? nlohmann::ordered_json(*oracle) : nlohmann::ordered_json(nullptr);
        j["agree"] = agree;
        if (!sizes_match) j["note"] = "size mismatch";
        if (witness) {
          nlohmann::ordered_json w = nlohmann::ordered_json::array();
          for (const auto& t : tableaux) w.push_back(t.filling);
          j["witnesses"] = w;
        }
        sink << j.dump() << '\n';
      } else {
        sink << "c=" << c << " oracle=" << (oracle ? std::to_string(*oracle) : "n/a") << " agree="
             << (agree ? "yes" : "no");
        if (!sizes_match) sink << " (size mismatch: |lambda| != |mu| + |nu|)";
        sink << '\n';
        for (const auto& t : tableaux) sink << '\n' << tableau_text(t);
      }
      return agree ? kOk : kVerificationFailed;
    }
    if (*chr) {
      const auto frame = parse_frame_arg(frame_text);
      const auto cls = parse_frame_arg(class_text);
      if (frame.n() != cls.n()) throw UsageError("frame and class have different sizes");
      check_cap(frame.n(), g);
      const auto value = character(frame, cls);
      if (fmt("text") == "json") {
        sink << nlohmann::ordered_json{{"frame", frame.to_string()}, {"class", cls.to_string()}, {"character", value}}
                    .dump()
             << '\n';
      } else {
        sink << "chi=" << value << '\n';
      }
      return kOk;
    }
    if (*horn) {
      const HornTriple triple(parse_frame_arg(lambda_text), parse_frame_arg(mu_text), parse_frame_arg(nu_text));
      check_cap(triple.lambda.n(), g);
      const bool basic = basic_horn_holds(triple);
      const bool feasible = horn_feasible(triple);
      if (fmt("text") == "json") {
        nlohmann::ordered_json j{{"lambda", triple.lambda.to_string()}, {"mu", triple.mu.to_string()},
                                 {"nu", triple.nu.to_string()}};
        if (!feasible_only) j["basic"] = basic;
        if (!basic_only) j["feasible"] = feasible;
        sink << j.dump() << '\n';
      } else {
        if (!feasible_only) sink << "basic=" << (basic ? "true" : "false") << '\n';
        if (!basic_only) sink << "feasible=" << (feasible ? "true" : "false") << '\n';
      }
      return kOk;
    }
    if (*spectrum) {
      check_local_dimension(g.d);
      const auto frame = parse_frame_arg(frame_text, g.d);
      check_cap(frame.n(), g);
      if (q_text.empty() == (k_value < 0)) throw UsageError("spectrum needs exactly one of --q or --k");
      SpectralTable table;
      if (!q_text.empty()) {
        table = channel_output_spectrum(frame, parse_probability(q_text), g.d);
      } else {
        if (k_value > frame.n()) throw UsageError("--k exceeds the number of sites");
        table = twirl_spectrum(frame, k_value, g.d, true);
      }
      if (fmt("csv") == "json") {
        sink << to_json(table).dump() << '\n';
      } else {
        write_csv(sink, table);
      }
      return kOk;
    }
    if (*sweep) {
      check_local_dimension(g.d);
      const auto frame = parse_frame_arg(frame_text, g.d);
      check_cap(frame.n(), g);
      const auto grid = parse_grid(grid_text);
      std::vector<SpectralTable> columns;
      for (const auto& q : grid) columns.push_back(channel_output_spectrum(frame, q, g.d));
      if (fmt("csv") == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
          auto column = to_json(columns[i]);
          column["q"] = rational_string(grid[i]);
          j.push_back(column);
        }
        sink << j.dump() << '\n';
      } else {
        write_sweep_csv(sink, grid, columns, g.exact);
      }
      return kOk;
    }
    if (*xy) {
      check_local_dimension(g.d);
      const auto lambda = parse_frame_arg(lambda_text, g.d);
      const auto target = parse_frame_arg(target_text, g.d);
      check_cap(lambda.n(), g);
      if (lambda.n() != target.n() || l_value < 0 || k_value < 0 || l_value + k_value != lambda.n()) {
        throw UsageError("xy needs |lambda| = |lambda'| = l + k");
      }
      const auto r = xy_optimize(lambda, target, l_value, k_value, g.d);
      auto triple_json = [](const std::optional<FrameTriple>& t) {
        if (!t) return nlohmann::ordered_json(nullptr);
        return nlohmann::ordered_json{{"mu", t->mu.to_string()}, {"nu", t->nu.to_string()},
                                      {"gamma", t->gamma.to_string()}};
      };
      if (fmt("text") == "json") {
        sink << nlohmann::ordered_json{{"X", r.x}, {"Y", r.y}, {"feasible_triples", r.feasible},
                                       {"argmax", triple_json(r.argmax)}, {"argmin", triple_json(r.argmin)}}
                    .dump()
             << '\n';
      } else {
        sink << "X=" << r.x << " Y=" << r.y << " feasible_triples=" << r.feasible << '\n';
        if (r.argmax) {
          sink << "argmax mu=" << r.argmax->mu.to_string() << " nu=" << r.argmax->nu.to_string()
               << " gamma=" << r.argmax->gamma.to_string() << '\n';
          sink << "argmin mu=" << r.argmin->mu.to_string() << " nu=" << r.argmin->nu.to_string()
               << " gamma=" << r.argmin->gamma.to_string() << '\n';
        }
      }
      return kOk;
    }
    if (*verify) {
      const auto& names = verify_suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw UsageError("unknown suite '" + suite + "' (expected thm1, thm2, lemma, saturation, oracle or all)");
      }
      verify_config.suite = suite;
      verify_config.cap_n = app.get_option("--cap-n")->count() ? g.cap_n : VerifyConfig{}.cap_n;
      if (!grid_text.empty()) verify_config.q_grid = parse_grid(grid_text);
      nlohmann::ordered_json report;
      try {
        report = run_verify(verify_config);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      sink << report.dump(2) << '\n';
      return report["passed"].get<bool>() ? kOk : kVerificationFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace depolar::cli
