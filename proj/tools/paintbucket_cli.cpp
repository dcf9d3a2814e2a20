// Command-line front end: solve, reduce, verify, convert, serve.

#include <csignal>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "paintbucket/ae.hpp"
#include "paintbucket/errors.hpp"
#include "paintbucket/grid.hpp"
#include "paintbucket/io.hpp"
#include "paintbucket/reduction.hpp"
#include "paintbucket/service.hpp"
#include "paintbucket/solver.hpp"
#include "paintbucket/verify.hpp"

namespace pb = paintbucket;

namespace {

constexpr int kExitFirst = 0;   // Black / avoider wins
constexpr int kExitSecond = 1;  // White / enforcer wins
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

struct SolverFlags {
  std::string memo = "labeled";
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;

  pb::SolveOptions options() const {
    pb::SolveOptions o;
    o.memo = memo == "iso" ? pb::MemoMode::Isomorphism : pb::MemoMode::Labeled;
    o.node_budget = budget;
    o.threads = threads;
    return o;
  }
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--memo", flags.memo, "Transposition keys: labeled or iso (isomorphism classes)")
      ->check(CLI::IsMember({"labeled", "iso"}));
  cmd->add_option("--budget", flags.budget, "Node budget (expansions)");
  cmd->add_option("--threads", flags.threads, "Worker threads for the root moves")->check(CLI::Range(1u, 256u));
}

std::string detect_format(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') return "grid";
  const auto doc = pb::io::parse_json(text);
  return doc.contains("cells") ? "ae" : "graph";
}

std::string describe_pv(const std::vector<pb::Move>& pv) {
  std::string out;
  for (const auto& m : pv) {
    if (!out.empty()) out += ' ';
    out += std::string(pb::to_string(m.player)) + "@" + std::to_string(m.target);
  }
  return out.empty() ? "(empty)" : out;
}

std::string capitalized(std::string_view word) {
  std::string out(word);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

int cmd_solve(const std::string& path, std::string format, const std::string& to_move, const SolverFlags& flags) {
  const std::string text = pb::io::read_file(path);
  if (format == "auto") format = detect_format(text);

  if (format == "ae") {
    pb::AePosition ae = pb::io::ae_from_json(pb::io::parse_json(text));
    if (!to_move.empty()) {
      const auto player = pb::parse_ae_player(to_move);
      if (!player) throw pb::ParseError("--to-move for avoider-enforcer input must be avoider or enforcer");
      ae = pb::AePosition(ae.cells(), ae.sets(), *player);
    }
    const pb::AeOutcome outcome = pb::ae_solve(ae);
    std::cout << "format: ae (" << ae.cells().size() << " cells, " << ae.sets().size() << " avoider sets)\n"
              << "to move: " << pb::to_string(ae.to_move()) << "\n"
              << "winner: " << capitalized(pb::to_string(outcome.winner)) << " wins\n"
              << "pv:";
    for (const auto& [player, cell] : outcome.pv) std::cout << ' ' << pb::to_string(player) << '@' << cell;
    std::cout << "\n";
    return outcome.winner == pb::AePlayer::Avoider ? kExitFirst : kExitSecond;
  }

  std::optional<pb::BipartitePosition> position;
  std::string summary;
  if (format == "grid") {
    const pb::GridPosition grid = pb::parse_grid(text);
    position = pb::contract(pb::grid_to_colored_graph(grid));
    summary = "grid " + std::to_string(grid.rows()) + "x" + std::to_string(grid.cols());
  } else if (format == "graph") {
    position = pb::contract(pb::io::colored_graph_from_json(pb::io::parse_json(text)));
    summary = "graph";
  } else if (format == "bipartite") {
    position = pb::io::bipartite_from_json(pb::io::parse_json(text));
    summary = "bipartite";
  } else {
    throw pb::ParseError("unknown format '" + format + "'");
  }
  pb::Color mover = pb::Color::Black;
  if (!to_move.empty()) {
    const auto c = pb::parse_color(to_move);
    if (!c) throw pb::ParseError("--to-move for Paintbucket input must be black or white");
    mover = *c;
  }

  const pb::SolveResult result = pb::solve(*position, mover, flags.options());
  std::cout << "format: " << summary << " (" << position->count(pb::Color::Black) << " black + "
            << position->count(pb::Color::White) << " white vertices, " << position->edge_count()
            << " edges after contraction)\n"
            << "to move: " << pb::to_string(mover) << "\n"
            << "winner: " << capitalized(pb::to_string(result.winner)) << " wins\n"
            << "pv: " << describe_pv(result.pv) << "\n"
            << "nodes expanded: " << result.nodes_expanded << "\n"
            << "table hits: " << result.table_hits << "\n";
  std::cerr << "elapsed: " << std::chrono::duration<double, std::milli>(result.elapsed).count() << " ms\n";
  return result.winner == pb::Color::Black ? kExitFirst : kExitSecond;
}

std::filesystem::path sidecar_path(const std::filesystem::path& out) {
  std::filesystem::path side = out;
  side.replace_extension();
  side += ".roles.json";
  return side;
}

int cmd_reduce(const std::string& path, const std::string& k_flag, const std::string& out) {
  const pb::AePosition ae = pb::io::ae_from_json(pb::io::parse_json(pb::io::read_file(path)));
  std::optional<pb::ReductionInstance> instance;
  if (k_flag == "auto") {
    pb::DecisionInstance decision = pb::reduce_decision(ae);
    if (decision.steps.empty()) std::cout << "normalization: none\n";
    for (const auto& step : decision.steps) std::cout << "normalization: " << step << "\n";
    instance = std::move(decision.instance);
  } else {
    int K = 0;
    try {
      std::size_t used = 0;
      K = std::stoi(k_flag, &used);
      if (used != k_flag.size()) throw std::invalid_argument(k_flag);
    } catch (const std::exception&) {
      throw pb::ParseError("--K must be 'auto' or a positive integer");
    }
    if (K < 1) throw pb::ParseError("--K must be positive");
    if (K < pb::default_K(ae)) {
      std::cerr << "warning: K = " << K << " is below |C|+2 = " << pb::default_K(ae)
                << "; the winner correspondence needs K >= |C|+2\n";
    }
    std::cout << "normalization: none (explicit K)\n";
    instance = pb::build_reduction(ae, K);
  }
  const auto& g = instance->graph;
  pb::io::write_file(out, pb::io::to_json(g).dump(2) + "\n");
  const auto side = sidecar_path(out);
  pb::io::write_file(side, pb::io::roles_to_json(*instance).dump(2) + "\n");
  std::cout << "K: " << instance->K << "\n"
            << "cells: " << instance->ae.cells().size() << ", avoider sets: " << instance->ae.sets().size() << "\n"
            << "vertices: " << g.size() << " (" << g.count(pb::Color::Black) << " black, "
            << g.count(pb::Color::White) << " white)\n"
            << "edges: " << g.edge_count() << "\n"
            << "to move: black\n"
            << "wrote " << out << " and " << side.string() << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const pb::VerifyOptions& opts, bool quiet) {
  const pb::SuiteReport report = pb::run_suite(suite, opts);
  for (const auto& c : report.cases) {
    if (c.passed && quiet) continue;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.label;
    if (!c.passed) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  std::cout << report.suite << ": " << report.cases.size() - report.failures() << "/" << report.cases.size()
            << " cases passed\n";
  std::cerr << "elapsed: " << report.elapsed.count() << " ms\n";
  return report.passed() ? 0 : 1;
}

int cmd_convert(const std::string& path, std::string format, const std::string& to, const std::string& out) {
  const std::string text = pb::io::read_file(path);
  if (format == "auto") format = detect_format(text);
  std::string rendered;
  if (format == "ae") {
    if (to != "ae") throw pb::ParseError("avoider-enforcer input converts only to ae (see `reduce`)");
    rendered = pb::io::to_json(pb::io::ae_from_json(pb::io::parse_json(text))).dump(2) + "\n";
  } else if (format == "grid" && to == "grid") {
    rendered = pb::format_grid(pb::parse_grid(text));
  } else {
    pb::ColoredGraph graph;
    if (format == "grid") graph = pb::grid_to_colored_graph(pb::parse_grid(text));
    else if (format == "graph") graph = pb::io::colored_graph_from_json(pb::io::parse_json(text));
    else if (format == "bipartite") graph = pb::io::bipartite_from_json(pb::io::parse_json(text)).graph();
    else throw pb::ParseError("unknown format '" + format + "'");
    if (to == "graph") rendered = pb::io::to_json(graph).dump(2) + "\n";
    else if (to == "bipartite") rendered = pb::io::to_json(pb::contract(graph)).dump(2) + "\n";
    else throw pb::ParseError("cannot convert " + format + " to " + to);
  }
  if (out.empty()) std::cout << rendered;
  else pb::io::write_file(out, rendered);
  return 0;
}

pb::HttpServer* active_server = nullptr;

int cmd_serve(const std::string& host, int port, std::uint64_t budget) {
  pb::ServiceOptions opts;
  opts.solve.node_budget = budget;
  pb::GameService service(opts);
  pb::HttpServer server(service);
  const int bound = server.bind(host, port);
  if (bound < 0) {
    std::cerr << "error: cannot bind " << host << ":" << port << "\n";
    return kExitError;
  }
  std::cout << "serving on http://" << host << ":" << bound << std::endl;
  active_server = &server;
  std::signal(SIGINT, [](int) { if (active_server) active_server->stop(); });
  std::signal(SIGTERM, [](int) { if (active_server) active_server->stop(); });
  server.listen();
  active_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paintbucket and avoider-enforcer workbench"};
  app.require_subcommand(1);

  std::string input;
  std::string format = "auto";
  std::string to_move;
  std::uint64_t seed = 1;
  SolverFlags solver_flags;
  const std::vector<std::string> formats{"auto", "grid", "graph", "bipartite", "ae"};

  auto* solve_cmd = app.add_subcommand("solve", "Solve a position under perfect play");
  solve_cmd->add_option("input", input, "Input file")->required();
  solve_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
  solve_cmd->add_option("--to-move", to_move, "black|white, or avoider|enforcer for ae input")
      ->check(CLI::IsMember({"black", "white", "avoider", "enforcer"}));
  solve_cmd->add_option("--seed", seed, "Accepted for uniformity; solving is deterministic");
  add_solver_flags(solve_cmd, solver_flags);

  std::string k_flag = "auto";
  std::string output;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the Paintbucket graph for an avoider-enforcer instance");
  reduce_cmd->add_option("input", input, "Avoider-enforcer JSON file")->required();
  reduce_cmd->add_option("--K", k_flag, "Cluster size: auto (normalize, K=|C|+2) or an integer");
  reduce_cmd->add_option("-o,--output", output, "Output graph file (roles go to <stem>.roles.json)")->required();

  std::string suite;
  pb::VerifyOptions verify_opts;
  bool quiet = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_option("--max", verify_opts.max, "Size bound (suite specific)");
  verify_cmd->add_option("--cells", verify_opts.cells, "Maximum number of cells");
  verify_cmd->add_option("--sets", verify_opts.sets, "Maximum number of avoider sets");
  verify_cmd->add_option("--count", verify_opts.count, "Number of random instances");
  verify_cmd->add_option("--seed", verify_opts.seed, "Random seed");
  verify_cmd->add_flag("--quiet", quiet, "Print failures and the summary only");
  SolverFlags verify_solver{"iso"};
  add_solver_flags(verify_cmd, verify_solver);

  std::string to = "bipartite";
  auto* convert_cmd = app.add_subcommand("convert", "Convert between interchange formats");
  convert_cmd->add_option("input", input, "Input file")->required();
  convert_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember(formats));
  convert_cmd->add_option("--to", to, "Output format")->check(CLI::IsMember({"grid", "graph", "bipartite", "ae"}));
  convert_cmd->add_option("-o,--output", output, "Output file (stdout when omitted)");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::uint64_t serve_budget = pb::ServiceOptions{}.solve.node_budget;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP/JSON game service");
  serve_cmd->add_option("--host", host, "Interface to bind");
  serve_cmd->add_option("--port", port, "Port (0 picks a free one)");
  serve_cmd->add_option("--budget", serve_budget, "Node budget per engine move or hint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve_cmd) return cmd_solve(input, format, to_move, solver_flags);
    if (*reduce_cmd) return cmd_reduce(input, k_flag, output);
    if (*verify_cmd) {
      const auto names = pb::suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "error: unknown suite '" << suite << "'; choose one of:";
        for (auto n : names) std::cerr << ' ' << n;
        std::cerr << "\n";
        return kExitError;
      }
      verify_opts.solve = verify_solver.options();
      return cmd_verify(suite, verify_opts, quiet);
    }
    if (*convert_cmd) return cmd_convert(input, format, to, output);
    if (*serve_cmd) return cmd_serve(host, port, serve_budget);
  } catch (const pb::BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
