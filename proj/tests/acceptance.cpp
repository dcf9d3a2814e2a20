// Acceptance gate: one PASS/FAIL line per criterion. Each criterion pins
// its instance family, its expected outcome and a wall-clock limit. The
// process exits nonzero if any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "paintbucket/generators.hpp"
#include "paintbucket/grid.hpp"
#include "paintbucket/reduction.hpp"
#include "paintbucket/solver.hpp"
#include "paintbucket/verify.hpp"

using namespace paintbucket;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(const char* name, std::chrono::milliseconds limit, bool gating,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  const bool in_time = ms <= limit;
  const bool pass = out.ok && in_time;
  if (!in_time) out.detail += " (over the " + std::to_string(limit.count()) + " ms limit)";
  std::printf("%s  %-50s %8lld ms  %s%s\n", pass ? "PASS" : "FAIL", name, static_cast<long long>(ms.count()),
              out.detail.c_str(), gating ? "" : " [non-gating]");
  std::fflush(stdout);
  if (!pass && gating) ++failures;
}

Outcome from_report(const SuiteReport& r, std::size_t min_cases) {
  std::string detail = std::to_string(r.cases.size() - r.failures()) + "/" + std::to_string(r.cases.size()) +
                       " cases";
  for (const auto& c : r.cases) {
    if (!c.passed) {
      detail += "; first failure: " + c.label + " " + c.detail;
      break;
    }
  }
  if (r.cases.size() < min_cases) detail += "; expected at least " + std::to_string(min_cases) + " cases";
  return {r.passed() && r.cases.size() >= min_cases, detail};
}

using std::chrono::milliseconds;
using std::chrono::minutes;
using std::chrono::seconds;

}  // namespace

int main() {
  VerifyOptions base;  // isomorphism-reduced memoization, seed 1

  criterion("complete bipartite table, 1<=m,n<=4", seconds(1), true, [&] {
    VerifyOptions o = base;
    o.max = 4;
    o.solve.memo = MemoMode::Labeled;
    const SuiteReport r = verify_complete_suite(o);
    Outcome out = from_report(r, 16);
    out.detail += " (32 solves)";
    return out;
  });

  criterion("claw graphs are Black wins, 200 instances", minutes(1), true, [&] {
    VerifyOptions o = base;
    o.count = 200;
    o.max = 10;
    return from_report(verify_claw_suite(o), 200);
  });

  criterion("a played twin leaves the others as leaves, 200 cases", seconds(10), true, [&] {
    VerifyOptions o = base;
    o.count = 200;
    return from_report(verify_neighbors_suite(o), 200);
  });

  criterion("off-type moves lose, |C|<=2, <=2 sets", minutes(5), true, [&] {
    VerifyOptions o = base;
    o.cells = 2;
    o.sets = 2;
    return from_report(verify_shenanigans_suite(o), 1);
  });

  criterion("u/v moves simulate cell moves, |C|<=3, <=2 sets", minutes(2), true, [&] {
    VerifyOptions o = base;
    o.cells = 3;
    o.sets = 2;
    return from_report(verify_simulation_suite(o), 1);
  });

  criterion("winner correspondence, |C|<=2, <=2 sets", minutes(10), true, [&] {
    VerifyOptions o = base;
    o.cells = 2;
    o.sets = 2;
    return from_report(verify_proposition_suite(o), 31);
  });

  criterion("winner correspondence, random |C|=3", minutes(10), false, [&] {
    std::mt19937_64 rng(3);
    auto family = enumerate_ae(3, 2, AePlayer::Avoider);
    std::shuffle(family.begin(), family.end(), rng);
    family.erase(family.begin() + static_cast<long>(std::min<std::size_t>(family.size(), 20)), family.end());
    std::size_t ok = 0;
    for (const AePosition& ae : family) {
      SolveOptions opts = isomorphism_options();
      opts.time_budget = minutes(10);
      ok += verify_proposition(ae, default_K(ae), opts) ? 1 : 0;
    }
    return Outcome{ok == family.size(), std::to_string(ok) + "/" + std::to_string(family.size()) + " instances"};
  });

  criterion("normalizations keep the winner, |C|<=4, <=3 sets", minutes(1), true, [&] {
    VerifyOptions o = base;
    o.cells = 4;
    o.sets = 3;
    return from_report(verify_normalization_suite(o), 1);
  });

  criterion("representation equivalence, 2x2 and 2x3", minutes(2), true, [&] {
    VerifyOptions o = base;
    o.max = 3;
    return from_report(verify_representation_suite(o), 16 + 64);
  });

  criterion("sample game replay, three representations", seconds(1), true, [&] {
    std::string detail;
    GridPosition grid = fixtures::x_pattern();
    ColoredGraph graph = grid_to_colored_graph(grid);
    for (const auto& click : fixtures::sample_game_clicks()) {
      if (grid.at(click.row, click.col) == click.player) detail += "grid click on own color; ";
      grid = flip_group(grid, click.row, click.col);
      graph = flip_group(graph, grid.pixel_id(click.row, click.col));
    }
    const bool grid_ok = grid == parse_grid("WWW\nWWW\nWWW");
    const bool graph_ok = groups(graph).size() == 1 && graph.count(Color::White) == graph.size();
    const auto moves = fixtures::sample_game_moves();
    const BipartitePosition end =
        replay(contract(grid_to_colored_graph(fixtures::x_pattern())), moves, Color::Black);
    const bool contracted_ok = is_terminal(end) && winner_if_terminal(end) == Color::White;
    const bool white_last = moves.back().player == Color::White && moves.size() == 4;
    if (!grid_ok) detail += "grid not all white; ";
    if (!graph_ok) detail += "colored graph not all white; ";
    if (!contracted_ok) detail += "contracted game does not end on a white vertex; ";
    if (!white_last) detail += "White is not the last mover; ";
    return Outcome{detail.empty(), detail.empty() ? "all white, White moved last" : detail};
  });

  criterion("memoized vs plain solver, 500 positions", minutes(5), true, [&] {
    std::mt19937_64 rng(500);
    std::size_t disagreements = 0;
    std::size_t solves = 0;
    for (int i = 0; i < 500; ++i) {
      const int n = 1 + static_cast<int>(rng() % 12);
      const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
      const BipartitePosition pos = random_connected_bipartite(rng, n, p);
      for (Color c : {Color::Black, Color::White}) {
        const Color expected = oracle::plain_winner(pos, c);
        for (MemoMode mode : {MemoMode::Labeled, MemoMode::Isomorphism}) {
          SolveOptions opts;
          opts.memo = mode;
          disagreements += solve(pos, c, opts).winner != expected ? 1 : 0;
          ++solves;
        }
      }
    }
    return Outcome{disagreements == 0,
                   std::to_string(solves) + " memoized solves, " + std::to_string(disagreements) + " disagreements"};
  });

  std::printf("%s: %d gating criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
