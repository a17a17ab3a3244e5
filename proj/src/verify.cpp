#include "depolar/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

#include "depolar/frames.hpp"
#include "depolar/horn.hpp"
#include "depolar/lr.hpp"
#include "depolar/spectral.hpp"
#include "depolar/table_io.hpp"

namespace depolar {

void CheckReport::expect(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  ++failures;
  if (first_failures.size() < kKeptFailures) first_failures.push_back(describe());
}

void CheckReport::merge(const CheckReport& other) {
  checks += other.checks;
  failures += other.failures;
  for (const auto& f : other.first_failures) {
    if (first_failures.size() < kKeptFailures) first_failures.push_back(f);
  }
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json out{{"name", name},
                             {"checks", checks},
                             {"failures", failures},
                             {"passed", passed()},
                             {"first_failures", first_failures}};
  if (!notes.empty()) out["notes"] = notes;
  return out;
}

std::vector<ExactScalar> default_q_grid() {
  std::vector<ExactScalar> grid;
  for (int j = 1; j <= 9; ++j) grid.emplace_back(j, 10);
  for (auto& q : grid) q.canonicalize();
  return grid;
}

namespace {

std::string frame_label(const YoungFrame& f) { return "(" + f.to_string() + ")"; }

OracleLimits limits_for(int n) {
  OracleLimits limits;
  limits.max_group_degree = std::max(limits.max_group_degree, n);
  return limits;
}

struct DenseFrames {
  std::vector<YoungFrame> frames;
  std::vector<TensorOperator> projectors;

  const TensorOperator& projector(const YoungFrame& f) const {
    for (std::size_t i = 0; i < frames.size(); ++i) {
      if (frames[i] == f) return projectors[i];
    }
    throw std::out_of_range("no projector for " + frame_label(f));
  }
};

DenseFrames dense_frames(int d, int n) {
  DenseFrames out;
  out.frames = enumerate_frames(d, n);
  for (const auto& f : out.frames) out.projectors.push_back(isotypical_projector(f, d, limits_for(n)));
  return out;
}

std::vector<int> range_sites(int from, int to) {
  std::vector<int> sites;
  for (int i = from; i < to; ++i) sites.push_back(i);
  return sites;
}

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

ExactScalar weight_of(std::uint64_t v) { return ExactScalar(mpz_class(std::to_string(v))); }

ExactScalar bernoulli_weight(int n, int k, const ExactScalar& q) {
  ExactScalar w = weight_of(binomial(n, k));
  for (int i = 0; i < k; ++i) w *= q;
  for (int i = k; i < n; ++i) w *= 1 - q;
  return w;
}

// Triples (lambda, mu, nu) with at most max_d rows, |lambda| = n.
template <typename Fn>
void for_each_triple(int max_d, int max_n, Fn&& fn) {
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_frames(max_d, n)) {
      for (int l = 0; l <= n; ++l) {
        const auto nus = enumerate_frames(max_d, n - l);
        for (const auto& mu : enumerate_frames(max_d, l)) {
          for (const auto& nu : nus) fn(lambda, mu, nu);
        }
      }
    }
  }
}

}  // namespace

CheckReport check_schur_weyl(int d, int max_n) {
  CheckReport report{"schur_weyl_d" + std::to_string(d)};
  for (int n = 0; n <= max_n; ++n) {
    std::uint64_t total = 0;
    for (const auto& f : enumerate_frames(d, n)) total += dim_sym(f) * dim_unitary(f, d);
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(d);
    report.expect(total == expected, [&] {
      return "d=" + std::to_string(d) + " n=" + std::to_string(n) + ": sum " + std::to_string(total) +
             " != " + std::to_string(expected);
    });
  }
  return report;
}

CheckReport check_lr_cross_validation(int max_d, int max_n) {
  CheckReport report{"lr_cross_validation"};
  for_each_triple(max_d, max_n, [&](const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu) {
    const auto c = lr_coefficient(lambda, mu, nu);
    const auto oracle = lr_via_characters(lambda, mu, nu, std::max(max_n, kDefaultGroupCap));
    report.expect(c == oracle, [&] {
      return "c^" + frame_label(lambda) + "_" + frame_label(mu) + frame_label(nu) + ": tableaux " +
             std::to_string(c) + " vs characters " + std::to_string(oracle);
    });
    report.expect(c == lr_coefficient(lambda, nu, mu), [&] {
      return "symmetry fails for " + frame_label(lambda) + frame_label(mu) + frame_label(nu);
    });
  });
  for (int n = 0; n <= max_n; ++n) {
    for (const auto& lambda : enumerate_frames(max_d, n)) {
      for (int l = 0; l <= n; ++l) {
        std::uint64_t total = 0;
        for (const auto& mu : enumerate_frames(max_d, l)) {
          for (const auto& nu : enumerate_frames(max_d, n - l)) {
            total += lr_coefficient(lambda, mu, nu) * dim_sym(mu) * dim_sym(nu);
          }
        }
        report.expect(total == dim_sym(lambda), [&] {
          return "restriction of " + frame_label(lambda) + " to S_" + std::to_string(l) + " x S_" +
                 std::to_string(n - l) + " has dimension " + std::to_string(total);
        });
      }
    }
  }
  return report;
}

CheckReport check_theorem1_combinatorial(int d, int max_n) {
  CheckReport report{"theorem1_combinatorial_d" + std::to_string(d)};
  std::uint64_t outside = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto frames = enumerate_frames(d, n);
    for (const auto& lambda : frames) {
      for (int k = 0; k <= n; ++k) {
        const auto window = support_window(lambda, d, k);
        const auto spectrum = twirl_spectrum(lambda, k, d, false);
        for (const auto& target : frames) {
          if (window(target)) continue;
          ++outside;
          report.expect(theorem1_chain_check(lambda, target, n - k, k, d), [&] {
            return "common branching for " + frame_label(lambda) + " -> " + frame_label(target) +
                   " k=" + std::to_string(k);
          });
          report.expect(spectrum[target] == 0, [&] {
            return "twirl_spectrum nonzero outside the window: " + frame_label(lambda) + " -> " +
                   frame_label(target) + " k=" + std::to_string(k);
          });
        }
      }
    }
  }
  report.notes["pairs_outside_window"] = outside;
  return report;
}

CheckReport check_theorem1_dense(int d, int max_n, bool all_subsets) {
  CheckReport report{"theorem1_dense_d" + std::to_string(d)};
  std::uint64_t nonzero_inside = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto dense = dense_frames(d, n);
    for (const auto& lambda : dense.frames) {
      const auto& p = dense.projector(lambda);
      for (int k = 0; k <= n; ++k) {
        const auto window = support_window(lambda, d, k);
        const auto sets = all_subsets ? subsets_of_size(n, k) : std::vector<std::vector<int>>{range_sites(n - k, n)};
        for (const auto& traced : sets) {
          const auto reduced = trace_and_replace(p, traced, false);
          for (std::size_t i = 0; i < dense.frames.size(); ++i) {
            const auto& target = dense.frames[i];
            const auto value = trace_product(dense.projectors[i], reduced);
            if (window(target)) {
              if (value != 0) ++nonzero_inside;
              continue;
            }
            report.expect(value == 0, [&] {
              return "overlap " + rational_string(value) + " for " + frame_label(lambda) + " -> " +
                     frame_label(target) + " |B|=" + std::to_string(k);
            });
          }
        }
      }
    }
  }
  report.notes["nonzero_overlaps_inside_window"] = nonzero_inside;
  return report;
}

CheckReport check_fast_vs_oracle(int d, int max_n, const std::vector<ExactScalar>& qs) {
  CheckReport report{"fast_vs_oracle_d" + std::to_string(d)};
  std::map<int, DenseFrames> by_size;
  auto frames_of = [&](int n) -> const DenseFrames& {
    auto it = by_size.find(n);
    if (it == by_size.end()) it = by_size.emplace(n, dense_frames(d, n)).first;
    return it->second;
  };
  for (int n = 1; n <= max_n; ++n) {
    const auto& dense = frames_of(n);
    for (const auto& lambda : dense.frames) {
      const auto& p = dense.projector(lambda);
      const ExactScalar trace = weight_of(dim_sym(lambda)) * weight_of(dim_unitary(lambda, d));
      for (int k = 0; k <= n; ++k) {
        const auto reduced = partial_trace(p, range_sites(0, k));
        // Branching formula against the dense partial trace.
        const auto table = partial_trace_decomposition(lambda, k);
        const auto& smaller = frames_of(n - k);
        TensorOperator assembled(d, n - k);
        for (std::size_t i = 0; i < smaller.frames.size(); ++i) {
          const auto coeff = table.coefficient_of(smaller.frames[i]);
          if (coeff != 0) assembled = assembled + smaller.projectors[i].scaled(coeff);
        }
        report.expect(assembled == reduced, [&] {
          return "branching of " + frame_label(lambda) + " with k=" + std::to_string(k) + " differs from tr_[k]";
        });
        // Twirled spectrum.
        const auto twirled = twirl(tensor_with_maximally_mixed(reduced, k));
        const auto fast = twirl_spectrum(lambda, k, d, true);
        for (std::size_t i = 0; i < dense.frames.size(); ++i) {
          const ExactScalar oracle = trace_product(dense.projectors[i], twirled) / trace;
          const auto& engine = fast[dense.frames[i]];
          report.expect(oracle == engine, [&] {
            return "twirl_spectrum " + frame_label(lambda) + " k=" + std::to_string(k) + " at " +
                   frame_label(dense.frames[i]) + ": engine " + rational_string(engine) + " vs dense " +
                   rational_string(oracle);
          });
        }
      }
      // Channel output.
      const auto state = p.scaled(1 / trace);
      for (const auto& q : qs) {
        const auto output = depolarise_n(state, q);
        const auto fast = channel_output_spectrum(lambda, q, d);
        for (std::size_t i = 0; i < dense.frames.size(); ++i) {
          const auto oracle = trace_product(dense.projectors[i], output);
          const auto& engine = fast[dense.frames[i]];
          report.expect(oracle == engine, [&] {
            return "channel " + frame_label(lambda) + " q=" + rational_string(q) + " at " +
                   frame_label(dense.frames[i]) + ": engine " + rational_string(engine) + " vs dense " +
                   rational_string(oracle);
          });
        }
      }
    }
  }
  return report;
}

CheckReport check_theorem2(const std::vector<int>& ns, const std::vector<ExactScalar>& qs) {
  CheckReport report{"theorem2_bound"};
  std::uint64_t in_regime = 0;
  double tightest = -std::numeric_limits<double>::infinity();
  for (int n : ns) {
    const auto frames = enumerate_frames(2, n);
    for (const auto& lambda : frames) {
      for (const auto& q : qs) {
        const auto spectrum = channel_output_spectrum(lambda, q, 2);
        for (const auto& target : frames) {
          const ExactScalar gap(std::abs(lambda[0] - target[0]), n);
          if (!(gap > q)) continue;
          ++in_regime;
          const auto& prob = spectrum[target];
          const auto bound = theorem2_bound(lambda, target, q.get_d(), n);
          const double log_prob = prob == 0 ? -std::numeric_limits<double>::infinity() : std::log2(prob.get_d());
          tightest = std::max(tightest, log_prob - bound.log2_value);
          report.expect(log_prob <= bound.log2_value + 1e-12, [&] {
            return "n=" + std::to_string(n) + " q=" + rational_string(q) + " " + frame_label(lambda) + " -> " +
                   frame_label(target) + ": log2 prob " + float_string(log_prob) + " > bound " +
                   float_string(bound.log2_value);
          });
        }
      }
    }
  }
  report.notes["pairs_in_regime"] = in_regime;
  report.notes["max_log2_prob_minus_log2_bound"] = tightest;
  return report;
}

CheckReport check_horn_saturation(int max_d, int max_n) {
  CheckReport report{"horn_saturation"};
  for_each_triple(max_d, max_n, [&](const YoungFrame& lambda, const YoungFrame& mu, const YoungFrame& nu) {
    const HornTriple triple(lambda, mu, nu);
    const bool positive = lr_coefficient(lambda, mu, nu) > 0;
    const bool basic = basic_horn_holds(triple);
    const bool feasible = horn_feasible(triple);
    auto label = [&] { return frame_label(lambda) + " = " + frame_label(mu) + " + " + frame_label(nu); };
    report.expect(!positive || basic, [&] { return "lr > 0 but a basic Horn inequality fails: " + label(); });
    report.expect(feasible == positive, [&] { return "feasibility disagrees with lr positivity: " + label(); });
    report.expect(basic || !feasible, [&] { return "basic Horn fails yet feasible: " + label(); });
  });
  return report;
}

CheckReport check_lemma(int max_n) {
  CheckReport report{"lemma_single_row"};
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& target : enumerate_frames(2, n)) {
      for (int k = 0; k <= n; ++k) {
        const auto result = lemma_bound_check(target, k);
        report.expect(result.holds, [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " + frame_label(target) + ": X=" +
                 std::to_string(result.x) + " bound " + float_string(result.bound);
        });
        if (target[1] > k) {
          report.expect(result.x == 0, [&] { return "X != 0 with lambda'_2 > k for " + frame_label(target); });
        }
      }
    }
  }
  return report;
}

CheckReport check_positivity(int max_n) {
  CheckReport report{"branching_positivity"};
  constexpr int d = 2;
  std::map<int, DenseFrames> by_size;
  auto frames_of = [&](int n) -> const DenseFrames& {
    auto it = by_size.find(n);
    if (it == by_size.end()) it = by_size.emplace(n, dense_frames(d, n)).first;
    return it->second;
  };
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& lambda : frames_of(n).frames) {
      for (int l = 0; l <= n; ++l) {
        TensorOperator cover(d, n);
        for (const auto& [mu, nu] : lr_nonzero_pairs(lambda, l, n - l)) {
          cover = cover + kron(frames_of(l).projector(mu), frames_of(n - l).projector(nu));
        }
        const auto difference = cover - frames_of(n).projector(lambda);
        report.expect(is_positive_semidefinite(difference), [&] {
          return "cover minus P" + frame_label(lambda) + " not PSD for l=" + std::to_string(l);
        });
      }
    }
  }
  return report;
}

CheckReport check_channel_properties(int d, int max_n, const std::vector<ExactScalar>& qs, unsigned seed) {
  CheckReport report{"channel_properties_d" + std::to_string(d)};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int n = 1; n <= max_n; ++n) {
    TensorOperator shape(d, n);
    const std::size_t dim = shape.dim();
    std::vector<mpz_class> g(dim * dim);
    std::vector<mpz_class> gt(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const int v = entry(rng);
        g[i * dim + j] = v;
        gt[j * dim + i] = v;
      }
    }
    const auto a = TensorOperator::from_integers(d, n, g, 1) * TensorOperator::from_integers(d, n, gt, 1);
    const auto invariant = twirl(a);
    for (const auto& q : qs) {
      const auto out = depolarise_n(a, q);
      report.expect(out.trace() == a.trace(), [&] { return "trace changed, n=" + std::to_string(n); });
      report.expect(is_positive_semidefinite(out), [&] { return "output not PSD, n=" + std::to_string(n); });
      TensorOperator mixture(d, n);
      for (int k = 0; k <= n; ++k) {
        const auto w = bernoulli_weight(n, k, q);
        if (w == 0) continue;
        mixture = mixture + twirl(tensor_with_maximally_mixed(partial_trace(invariant, range_sites(0, k)), k)).scaled(w);
      }
      report.expect(depolarise_n(invariant, q) == mixture, [&] {
        return "binomial twirl mixture differs from the channel, n=" + std::to_string(n) + " q=" + rational_string(q);
      });
    }
  }
  return report;
}

CheckReport concentration_report(int n, const std::vector<ExactScalar>& qs) {
  CheckReport report{"concentration_n" + std::to_string(n)};
  constexpr int d = 2;
  const YoungFrame lambda({n}, d);
  const auto frames = enumerate_frames(d, n);
  const auto limits = limits_for(n);
  const auto p = isotypical_projector(lambda, d, limits);
  const auto state = p.scaled(1 / p.trace());
  std::vector<TensorOperator> targets;
  for (const auto& f : frames) targets.push_back(isotypical_projector(f, d, limits));
  // overlaps[s][i] = tr{P_i * layer_s}; the channel is sum_s q^s (1-q)^{n-s} layer_s.
  std::vector<std::vector<ExactScalar>> overlaps;
  for (int s = 0; s <= n; ++s) {
    const auto layer = depolarising_layer(state, s);
    std::vector<ExactScalar> row;
    for (const auto& t : targets) row.push_back(trace_product(t, layer));
    overlaps.push_back(std::move(row));
  }
  auto argmax = [&](const std::vector<ExactScalar>& weights) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < weights.size(); ++i) {
      if (weights[i] > weights[best]) best = i;
    }
    return frames[best][0];
  };
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& q : qs) {
    std::vector<ExactScalar> dense(frames.size(), 0);
    for (int s = 0; s <= n; ++s) {
      ExactScalar w = 1;
      for (int i = 0; i < s; ++i) w *= q;
      for (int i = s; i < n; ++i) w *= 1 - q;
      for (std::size_t i = 0; i < frames.size(); ++i) dense[i] += w * overlaps[static_cast<std::size_t>(s)][i];
    }
    const auto fast_table = channel_output_spectrum(lambda, q, d);
    std::vector<ExactScalar> fast;
    for (const auto& entry : fast_table.entries) fast.push_back(entry.second);
    report.expect(fast == dense, [&] { return "engine and dense output differ at q=" + rational_string(q); });
    const int mode_fast = argmax(fast);
    const int mode_dense = argmax(dense);
    report.expect(mode_fast == mode_dense, [&] {
      return "argmax lambda'_1 differs at q=" + rational_string(q) + ": engine " + std::to_string(mode_fast) +
             " vs dense " + std::to_string(mode_dense);
    });
    const ExactScalar half_nq = ExactScalar(n) * q / 2;
    rows.push_back({{"q", rational_string(q)},
                    {"argmax_lambda1", mode_dense},
                    {"n_q_over_2", rational_string(half_nq)},
                    {"n_one_minus_q_over_2", rational_string(ExactScalar(n) - half_nq)}});
  }
  report.notes["modes"] = rows;
  return report;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"thm1", "thm2", "lemma", "saturation", "oracle", "all"};
  return names;
}

nlohmann::ordered_json run_verify(const VerifyConfig& config) {
  const auto& names = verify_suite_names();
  if (std::find(names.begin(), names.end(), config.suite) == names.end()) {
    throw std::invalid_argument("unknown verification suite '" + config.suite + "'");
  }
  if (config.cap_n < 1 || config.cap_n > 10 || config.cap_n_d3 < 1 || config.cap_n_d3 > 7) {
    throw std::invalid_argument("verification caps must satisfy 1 <= cap-n <= 10 and 1 <= cap-n-d3 <= 7");
  }
  const auto grid = config.q_grid.empty() ? default_q_grid() : config.q_grid;
  const std::vector<ExactScalar> exact_grid{ExactScalar(0), ExactScalar(1, 4), ExactScalar(1, 2), ExactScalar(3, 4),
                                            ExactScalar(1)};
  const int dense_d2 = std::min(config.cap_n, 8);
  const int dense_d3 = std::min(config.cap_n_d3, 6);

  std::vector<std::pair<std::string, std::vector<CheckReport>>> suites;
  auto wants = [&](const std::string& name) { return config.suite == "all" || config.suite == name; };
  if (wants("thm1")) {
    suites.push_back({"thm1",
                      {check_theorem1_combinatorial(2, config.cap_n), check_theorem1_combinatorial(3, config.cap_n_d3),
                       check_theorem1_dense(2, dense_d2, dense_d2 <= 6), check_theorem1_dense(3, dense_d3, false)}});
  }
  if (wants("thm2")) {
    std::vector<int> ns;
    for (int n = 1; n <= config.cap_n; ++n) ns.push_back(n);
    suites.push_back({"thm2", {check_theorem2(ns, grid)}});
  }
  if (wants("lemma")) suites.push_back({"lemma", {check_lemma(config.cap_n)}});
  if (wants("saturation")) {
    suites.push_back({"saturation",
                      {check_lr_cross_validation(3, std::min(config.cap_n, 8)),
                       check_horn_saturation(3, std::min(config.cap_n, 8))}});
  }
  if (wants("oracle")) {
    suites.push_back({"oracle",
                      {check_schur_weyl(2, config.cap_n), check_schur_weyl(3, config.cap_n_d3),
                       check_fast_vs_oracle(2, dense_d2, exact_grid), check_fast_vs_oracle(3, dense_d3, exact_grid),
                       check_positivity(std::min(config.cap_n, 6)),
                       check_channel_properties(2, std::min(config.cap_n, 3), exact_grid, config.seed)}});
  }

  nlohmann::ordered_json grid_json = nlohmann::ordered_json::array();
  for (const auto& q : grid) grid_json.push_back(rational_string(q));
  nlohmann::ordered_json report{
      {"config",
       {{"suite", config.suite}, {"cap_n", config.cap_n}, {"cap_n_d3", config.cap_n_d3}, {"q_grid", grid_json},
        {"seed", config.seed}}}};
  bool all_passed = true;
  nlohmann::ordered_json suite_json = nlohmann::ordered_json::array();
  for (const auto& [name, checks] : suites) {
    bool passed = true;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      passed = passed && c.passed();
      items.push_back(c.to_json());
    }
    all_passed = all_passed && passed;
    suite_json.push_back({{"suite", name}, {"passed", passed}, {"checks", items}});
  }
  report["suites"] = suite_json;
  report["passed"] = all_passed;
  return report;
}

}  // namespace depolar
