#include "paintbucket/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "paintbucket/ae.hpp"
#include "paintbucket/errors.hpp"
#include "paintbucket/generators.hpp"
#include "paintbucket/grid.hpp"
#include "paintbucket/reduction.hpp"

namespace paintbucket {

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

namespace {

constexpr std::array<std::string_view, 8> kSuites = {
    "claw", "neighbors", "complete", "shenanigans", "simulation", "proposition", "normalization",
    "representation"};

int pick(int value, int fallback) { return value >= 0 ? value : fallback; }

std::string describe(const AePosition& ae) {
  std::string out = "C={";
  for (std::size_t i = 0; i < ae.cells().size(); ++i) out += (i ? "," : "") + ae.cells()[i];
  out += "} A=[";
  for (std::size_t j = 0; j < ae.sets().size(); ++j) {
    out += j ? ",{" : "{";
    for (std::size_t i = 0; i < ae.sets()[j].size(); ++i) out += (i ? "," : "") + ae.sets()[j][i];
    out += "}";
  }
  return out + "]";
}

// Runs `body`, turning solver budget exhaustion into a failed case.
template <typename Body>
void run_case(SuiteReport& report, std::string label, Body&& body) {
  try {
    auto [passed, detail] = body();
    report.cases.push_back({std::move(label), passed, std::move(detail)});
  } catch (const Error& e) {
    report.cases.push_back({std::move(label), false, e.what()});
  }
}

template <typename Fn>
SuiteReport timed(std::string name, Fn&& fill) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report{std::move(name), {}, {}};
  fill(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

Color winner(const BipartitePosition& p, Color to_move, const SolveOptions& opts) {
  return solve(p, to_move, opts).winner;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

SuiteReport run_suite(std::string_view suite, const VerifyOptions& opts) {
  if (suite == "complete") return verify_complete_suite(opts);
  if (suite == "claw") return verify_claw_suite(opts);
  if (suite == "neighbors") return verify_neighbors_suite(opts);
  if (suite == "shenanigans") return verify_shenanigans_suite(opts);
  if (suite == "simulation") return verify_simulation_suite(opts);
  if (suite == "proposition") return verify_proposition_suite(opts);
  if (suite == "normalization") return verify_normalization_suite(opts);
  if (suite == "representation") return verify_representation_suite(opts);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

SuiteReport verify_complete_suite(const VerifyOptions& opts) {
  const int max = pick(opts.max, 4);
  return timed("complete", [&](SuiteReport& report) {
    for (int m = 1; m <= max; ++m) {
      for (int n = 1; n <= max; ++n) {
        run_case(report, "K_{" + std::to_string(m) + "," + std::to_string(n) + "}", [&] {
          const BipartitePosition k = complete_bipartite(m, n);
          std::string detail;
          bool ok = true;
          for (Color first : {Color::Black, Color::White}) {
            Color expected;
            if (m > 1 && n > 1) expected = opposite(first);  // second-player win
            else if (m > 1) expected = Color::Black;         // n == 1
            else if (n > 1) expected = Color::White;         // m == 1
            else expected = first;                           // K_{1,1}
            const Color got = winner(k, first, opts.solve);
            if (got != expected) {
              ok = false;
              detail += std::string(to_string(first)) + " to move: expected " +
                        std::string(to_string(expected)) + ", solver says " + std::string(to_string(got)) + "; ";
            }
          }
          return std::pair{ok, detail};
        });
      }
    }
  });
}

SuiteReport verify_claw_suite(const VerifyOptions& opts) {
  const int count = pick(opts.count, 200);
  const int max = pick(opts.max, 10);
  return timed("claw", [&](SuiteReport& report) {
    Rng rng(opts.seed);
    for (int c = 0; c < count; ++c) {
      const ClawInstance claw = random_claw(rng, max, 6);
      const std::string label = "claw #" + std::to_string(c) + " (m=" + std::to_string(claw.white_count) +
                                ", k=" + std::to_string(claw.leaves) + ", |V|=" +
                                std::to_string(claw.position.size()) + ")";
      run_case(report, label, [&] {
        std::string detail;
        if (winner(claw.position, Color::Black, opts.solve) != Color::Black) {
          detail += "Black moving first does not win; ";
        }
        if (claw.white_count < claw.leaves &&
            winner(claw.position, Color::White, opts.solve) != Color::Black) {
          detail += "Black moving second does not win; ";
        }
        return std::pair{detail.empty(), detail};
      });
    }
  });
}

SuiteReport verify_neighbors_suite(const VerifyOptions& opts) {
  const int count = pick(opts.count, 200);
  const int max = pick(opts.max, 8);
  return timed("neighbors", [&](SuiteReport& report) {
    Rng rng(opts.seed);
    for (int c = 0; c < count; ++c) {
      const TwinInstance inst = random_twins(rng, max, 4);
      run_case(report, "twins #" + std::to_string(c) + " (n=" + std::to_string(inst.twins.size()) + ")", [&] {
        const VertexId played = inst.twins.front();
        const Color mover = opposite(inst.position.color(played));
        const BipartitePosition after = apply_move(inst.position, {mover, played});
        std::string detail;
        for (std::size_t t = 1; t < inst.twins.size(); ++t) {
          const VertexId twin = inst.twins[t];
          if (!after.contains(twin)) {
            detail += "twin " + std::to_string(twin) + " vanished; ";
            continue;
          }
          const auto nb = after.neighbors(twin);
          if (nb.size() != 1 || nb.front() != played) {
            detail += "twin " + std::to_string(twin) + " has " + std::to_string(nb.size()) +
                      " neighbors instead of the single vertex " + std::to_string(played) + "; ";
          }
        }
        return std::pair{detail.empty(), detail};
      });
    }
  });
}

SuiteReport verify_shenanigans_suite(const VerifyOptions& opts) {
  const int cells = pick(opts.cells, 2);
  const int sets = pick(opts.sets, 2);
  return timed("shenanigans", [&](SuiteReport& report) {
    for (int size = 0; size <= cells; ++size) {
      for (const AePosition& ae : enumerate_ae(size, sets, AePlayer::Avoider)) {
        const ReductionInstance ri = build_reduction(ae, default_K(ae));
        for (Color player : {Color::White, Color::Black}) {
          if (player == Color::Black && ae.sets().empty()) continue;
          run_case(report, describe(ae) + " " + std::string(to_string(player)), [&] {
            const bool ok = verify_shenanigans(ri, player, opts.solve);
            return std::pair{ok, std::string(ok ? "" : "an off-type move does not lose")};
          });
        }
      }
    }
  });
}

SuiteReport verify_simulation_suite(const VerifyOptions& opts) {
  const int cells = pick(opts.cells, 3);
  const int sets = pick(opts.sets, 2);
  return timed("simulation", [&](SuiteReport& report) {
    for (int size = 0; size <= cells; ++size) {
      for (const AePosition& ae : enumerate_ae(size, sets, AePlayer::Avoider)) {
        const ReductionInstance ri = build_reduction(ae, default_K(ae));
        run_case(report, describe(ae) + " audit", [&] {
          std::string detail;
          for (const auto& problem : audit_instance(ri)) detail += problem + "; ";
          return std::pair{detail.empty(), detail};
        });
        for (const auto& cell : ae.cells()) {
          for (Color player : {Color::Black, Color::White}) {
            run_case(report, describe(ae) + " " + std::string(to_string(player)) + " at " + cell, [&] {
              const bool ok = verify_simulation_step(ri, cell, player);
              return std::pair{ok, std::string(ok ? "" : "result is not isomorphic to the simulated instance")};
            });
          }
        }
      }
    }
  });
}

SuiteReport verify_proposition_suite(const VerifyOptions& opts) {
  const int cells = pick(opts.cells, 2);
  const int sets = pick(opts.sets, 2);
  return timed("proposition", [&](SuiteReport& report) {
    for (int size = 0; size <= cells; ++size) {
      for (const AePosition& ae : enumerate_ae(size, sets, AePlayer::Avoider)) {
        run_case(report, describe(ae), [&] {
          const bool ok = verify_proposition(ae, default_K(ae), opts.solve);
          return std::pair{ok, std::string(ok ? "" : "winners disagree")};
        });
      }
    }
  });
}

SuiteReport verify_normalization_suite(const VerifyOptions& opts) {
  const int cells = pick(opts.cells, 4);
  const int sets = pick(opts.sets, 3);
  return timed("normalization", [&](SuiteReport& report) {
    for (int size = 0; size <= cells; ++size) {
      for (AePlayer first : {AePlayer::Avoider, AePlayer::Enforcer}) {
        for (const AePosition& ae : enumerate_ae(size, sets, first)) {
          if (first == AePlayer::Avoider && size % 2 == 0) continue;
          run_case(report, describe(ae) + " " + std::string(to_string(first)), [&] {
            const AePosition normalized =
                first == AePlayer::Enforcer ? normalize_avoider_first(ae) : normalize_even(ae);
            const AePlayer before = ae_solve(ae).winner;
            const AePlayer after = ae_solve(normalized).winner;
            return std::pair{before == after, before == after ? std::string()
                                                              : "winner changed from " + std::string(to_string(before)) +
                                                                    " to " + std::string(to_string(after))};
          });
        }
      }
    }
  });
}

SuiteReport verify_representation_suite(const VerifyOptions& opts) {
  const int max = pick(opts.max, 3);
  return timed("representation", [&](SuiteReport& report) {
    for (int cols = 2; cols <= max; ++cols) {
      const int pixels = 2 * cols;
      for (int mask = 0; mask < (1 << pixels); ++mask) {
        std::vector<Color> colors;
        for (int p = 0; p < pixels; ++p) colors.push_back(mask & (1 << p) ? Color::Black : Color::White);
        const GridPosition grid(2, static_cast<std::size_t>(cols), colors);
        std::string label = format_grid(grid);
        std::replace(label.begin(), label.end(), '\n', '/');
        run_case(report, label, [&] {
          const ColoredGraph graph = grid_to_colored_graph(grid);
          const BipartitePosition contracted = contract(graph);
          std::string detail;
          for (Color first : {Color::Black, Color::White}) {
            const Color direct = solve_colored_graph(graph, first);
            const Color via_contraction = winner(contracted, first, opts.solve);
            if (direct != via_contraction) {
              detail += std::string(to_string(first)) + " to move: graph game says " +
                        std::string(to_string(direct)) + ", contracted says " +
                        std::string(to_string(via_contraction)) + "; ";
            }
          }
          return std::pair{detail.empty(), detail};
        });
      }
    }
  });
}

}  // namespace paintbucket
