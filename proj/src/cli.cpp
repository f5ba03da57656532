#include "graphoid/cli.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <variant>

#include <CLI11.hpp>

#include "graphoid/axioms.hpp"
#include "graphoid/checks.hpp"
#include "graphoid/io.hpp"
#include "graphoid/protocol.hpp"
#include "graphoid/separation.hpp"

namespace graphoid::cli {

namespace {

ClosureMode parse_mode(const std::string& text) {
  std::optional<ClosureMode> mode = mode_from_string(text);
  if (!mode) throw ValidationError("unknown mode '" + text + "' (semigraphoid or graphoid)");
  return *mode;
}

// Rewrites a triplet into a universe that contains the same names,
// possibly at different indices.
Triplet remap(const Triplet& t, const UniversePtr& to) {
  auto convert = [&](VarSet s) {
    VarSet out;
    for (int v : s) out |= to->var(t.universe()->name(v));
    return out;
  };
  return Triplet(to, convert(t.x()), convert(t.z()), convert(t.y()));
}

int separation_verdict(bool separated, std::ostream& out) {
  out << (separated ? "SEPARATED" : "NOT SEPARATED") << "\n";
  return separated ? kAffirmative : kNegative;
}

struct CheckSpec {
  std::string name;
  int n = 4;
  int trials = 50;
  std::uint64_t seed = 0;
};

int run_check(const CheckSpec& spec, int limit, std::ostream& out) {
  TrialCallback report = [&](int index, bool pass, const std::string& repro) {
    out << "trial " << index << "/" << spec.trials << ": " << (pass ? "PASS" : "FAIL") << "\n";
    if (!pass) out << repro;
  };

  CheckOutcome outcome;
  if (spec.name == "corollary1") {
    outcome = check_corollary1(spec.n, spec.trials, spec.seed, limit, report);
  } else if (spec.name == "theorem1") {
    outcome = check_theorem1(spec.n, spec.trials, spec.seed, limit, report);
  } else if (spec.name == "theorem2") {
    outcome = check_theorem2(spec.n, spec.trials, spec.seed, limit, report);
  } else if (spec.name == "theorem3") {
    outcome = check_theorem3(spec.n, spec.trials, spec.seed, limit, report);
  } else if (spec.name == "oracle-eq") {
    outcome = check_oracle_eq(spec.n, spec.trials, spec.seed, limit, report);
  } else {
    outcome = check_usep_axioms(spec.n, spec.trials, spec.seed, limit, report);
  }

  out << outcome.name << ": " << (outcome.trials - outcome.failures) << "/" << outcome.trials
      << " PASS (n=" << spec.n << ", trials=" << spec.trials << ", seed=" << spec.seed << ")\n";
  return outcome.passed() ? kAffirmative : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream&, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"independence reasoning over dependency models, DAGs, and undirected graphs"};
  app.require_subcommand(1);

  int exit_code = kAffirmative;
  int limit = 0;  // 0 keeps each operation's default guard

  std::string model_file, graph_file, protocol_file, query, target;
  std::string closure_mode = "semigraphoid";
  std::string derive_mode = "semigraphoid";
  std::string imap_mode = "graphoid";
  std::string witness_mode = "semigraphoid";
  std::string verify_mode = "exact";
  std::string flavor = "auto";
  CheckSpec spec;

  auto add_limit = [&](CLI::App* cmd) {
    cmd->add_option("--limit", limit, "override the size guard for expensive operations");
  };

  // closure
  {
    CLI::App* cmd = app.add_subcommand("closure", "closure of a model under the axioms");
    cmd->add_option("--model", model_file, "model file")->required();
    cmd->add_option("--mode", closure_mode, "semigraphoid (default) or graphoid");
    add_limit(cmd);
    cmd->callback([&] {
      DependencyModel m = parse_model(read_file(model_file), model_file);
      DependencyModel closed =
          closure(m, parse_mode(closure_mode), limit > 0 ? limit : kDefaultClosureLimit);
      out << to_text(closed);
      exit_code = kAffirmative;
    });
  }

  // derive
  {
    CLI::App* cmd = app.add_subcommand("derive", "derive a triplet from a model, with a trace");
    cmd->add_option("--model", model_file, "model file")->required();
    cmd->add_option("--target", target, "triplet literal 'x | z | y'")->required();
    cmd->add_option("--mode", derive_mode, "semigraphoid (default) or graphoid");
    add_limit(cmd);
    cmd->callback([&] {
      DependencyModel m = parse_model(read_file(model_file), model_file);
      Triplet goal = parse_triplet(target, m.universe());
      std::optional<DerivationTrace> trace =
          derive(m, goal, parse_mode(derive_mode), limit > 0 ? limit : kDefaultClosureLimit);
      if (!trace) {
        out << "NOT DERIVABLE\n";
        exit_code = kNegative;
        return;
      }
      for (size_t i = 0; i < trace->steps.size(); ++i) {
        const DerivationStep& step = trace->steps[i];
        out << (i + 1) << ". " << to_string(step.axiom) << ": ";
        for (size_t j = 0; j < step.premises.size(); ++j) {
          if (j > 0) out << " & ";
          out << step.premises[j].to_literal();
        }
        out << " => " << step.result.to_literal() << "\n";
      }
      out << "DERIVED: " << trace->conclusion.to_literal() << " (" << trace->steps.size()
          << (trace->steps.size() == 1 ? " step" : " steps") << ")\n";
      exit_code = kAffirmative;
    });
  }

  // separation queries
  auto add_separation = [&](const std::string& name, const std::string& help, auto query_fn) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("--graph", graph_file, "graph file")->required();
    cmd->add_option("--query", query, "triplet literal 'x | z | y'")->required();
    add_limit(cmd);
    cmd->callback([&, query_fn] { exit_code = query_fn(); });
  };
  add_separation("dsep", "d-separation query on a DAG", [&] {
    Dag g = parse_dag(read_file(graph_file), graph_file);
    return separation_verdict(dsep(g, parse_triplet(query, g.universe())), out);
  });
  add_separation("idsep", "ID-separation query on a DAG with deterministic nodes", [&] {
    Dag g = parse_dag(read_file(graph_file), graph_file);
    return separation_verdict(idsep(g, parse_triplet(query, g.universe())), out);
  });
  add_separation("usep", "separation query on an undirected graph", [&] {
    UndirectedGraph g = parse_undirected(read_file(graph_file), graph_file);
    return separation_verdict(usep(g, parse_triplet(query, g.universe())), out);
  });

  // compile
  {
    CLI::App* cmd = app.add_subcommand("compile", "compile a stratified protocol to a DAG");
    cmd->add_option("--protocol", protocol_file, "protocol file")->required();
    cmd->callback([&] {
      out << to_text(compile(parse_protocol(read_file(protocol_file), protocol_file)));
      exit_code = kAffirmative;
    });
  }

  // extract
  {
    CLI::App* cmd = app.add_subcommand("extract", "extract the stratified protocol of a DAG");
    cmd->add_option("--graph", graph_file, "graph file")->required();
    cmd->callback([&] {
      out << to_text(extract(parse_dag(read_file(graph_file), graph_file)));
      exit_code = kAffirmative;
    });
  }

  // triplets
  {
    CLI::App* cmd = app.add_subcommand("triplets", "the ordered triplet list of a protocol");
    cmd->add_option("--protocol", protocol_file, "protocol file")->required();
    cmd->callback([&] {
      StratifiedProtocol p = parse_protocol(read_file(protocol_file), protocol_file);
      out << "var";
      for (const std::string& name : p.universe->names()) out << " " << name;
      out << "\n";
      for (const Triplet& t : protocol_triplets(p)) out << "indep " << t.to_literal() << "\n";
      exit_code = kAffirmative;
    });
  }

  // oracle selection shared by minimal-imap and witness
  auto make_oracle = [&](const std::string& mode_text) {
    bool have_graph = !graph_file.empty(), have_model = !model_file.empty();
    if (have_graph == have_model) {
      throw ValidationError("provide exactly one of --graph or --model");
    }
    if (have_graph) return dsep_oracle(parse_dag(read_file(graph_file), graph_file));
    return closure_oracle(parse_model(read_file(model_file), model_file), parse_mode(mode_text),
                          limit > 0 ? limit : kDefaultClosureLimit);
  };

  // minimal-imap
  {
    CLI::App* cmd = app.add_subcommand(
        "minimal-imap", "edge-minimal undirected I-map of a graphoid oracle");
    cmd->add_option("--graph", graph_file, "DAG file; the oracle is d-separation over it");
    cmd->add_option("--model", model_file, "model file; the oracle is its closure");
    cmd->add_option("--mode", imap_mode, "closure mode for --model (default graphoid)");
    add_limit(cmd);
    cmd->callback([&] {
      out << to_text(undirected_minimal_imap(make_oracle(imap_mode)));
      exit_code = kAffirmative;
    });
  }

  // witness
  {
    CLI::App* cmd = app.add_subcommand(
        "witness", "protocol whose DAG d-separates a given affirmed triplet");
    cmd->add_option("--graph", graph_file, "DAG file; the oracle is d-separation over it");
    cmd->add_option("--model", model_file, "model file; the oracle is its closure");
    cmd->add_option("--target", target, "triplet literal 'x | z | y'")->required();
    cmd->add_option("--mode", witness_mode, "closure mode for --model (default semigraphoid)");
    add_limit(cmd);
    cmd->callback([&] {
      IndependenceOracle oracle = make_oracle(witness_mode);
      Triplet goal = parse_triplet(target, oracle.universe());
      std::optional<StratifiedProtocol> w = witness_protocol(oracle, goal);
      if (!w) {
        err << "the oracle does not affirm '" << goal.to_literal()
            << "'; no witness protocol exists\n";
        exit_code = kNegative;
        return;
      }
      out << to_text(*w);
      exit_code = kAffirmative;
    });
  }

  // verify-imap
  {
    CLI::App* cmd = app.add_subcommand(
        "verify-imap", "is the graph's separation model an I-map of the model?");
    cmd->add_option("--graph", graph_file, "candidate graph file (DAG or undirected)")
        ->required();
    cmd->add_option("--model", model_file, "reference model file")->required();
    cmd->add_option("--mode", verify_mode,
                    "exact (default), semigraphoid, or graphoid membership");
    add_limit(cmd);
    cmd->callback([&] {
      int enum_limit = limit > 0 ? limit : kDefaultModelEnumLimit;
      auto parsed = parse_graph_auto(read_file(graph_file), graph_file);
      DependencyModel candidate = std::holds_alternative<Dag>(parsed)
                                      ? dsep_model(std::get<Dag>(parsed), enum_limit)
                                      : usep_model(std::get<UndirectedGraph>(parsed), enum_limit);
      DependencyModel m = parse_model(read_file(model_file), model_file);
      IndependenceOracle oracle =
          verify_mode == "exact"
              ? model_oracle(m)
              : closure_oracle(m, parse_mode(verify_mode),
                               limit > 0 ? limit : kDefaultClosureLimit);
      DependencyModel rebased(m.universe());
      for (const Triplet& t : candidate.triplets()) rebased.insert(remap(t, m.universe()));
      if (std::optional<Triplet> bad = is_imap(rebased, oracle)) {
        out << "NOT AN I-MAP: " << bad->to_literal() << "\n";
        exit_code = kNegative;
      } else {
        out << "I-MAP\n";
        exit_code = kAffirmative;
      }
    });
  }

  // check
  {
    CLI::App* cmd = app.add_subcommand("check", "run a seeded property suite");
    static const std::vector<std::string> names = {"corollary1", "theorem1",  "theorem2",
                                                   "theorem3",   "oracle-eq", "usep-axioms"};
    cmd->add_option("name", spec.name,
                    "one of: corollary1 theorem1 theorem2 theorem3 oracle-eq usep-axioms")
        ->required()
        ->check(CLI::IsMember(names));
    cmd->add_option("--n", spec.n, "maximum universe size (sizes cycle up to it)");
    cmd->add_option("--trials", spec.trials, "number of seeded trials");
    cmd->add_option("--seed", spec.seed, "random seed (printed in the summary)");
    add_limit(cmd);
    cmd->callback([&] { exit_code = run_check(spec, limit, out); });
  }

  // export-dot
  {
    CLI::App* cmd = app.add_subcommand("export-dot", "emit a graph file as DOT");
    cmd->add_option("--graph", graph_file, "graph file")->required();
    cmd->add_option("--flavor", flavor, "dag, undirected, or auto (default)");
    cmd->callback([&] {
      std::string text = read_file(graph_file);
      if (flavor == "dag") {
        out << to_dot(parse_dag(text, graph_file));
      } else if (flavor == "undirected") {
        out << to_dot(parse_undirected(text, graph_file));
      } else if (flavor == "auto") {
        auto parsed = parse_graph_auto(text, graph_file);
        out << (std::holds_alternative<Dag>(parsed)
                    ? to_dot(std::get<Dag>(parsed))
                    : to_dot(std::get<UndirectedGraph>(parsed)));
      } else {
        throw ValidationError("unknown flavor '" + flavor + "' (dag, undirected, or auto)");
      }
      exit_code = kAffirmative;
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  } catch (const LimitError& e) {
    err << e.what() << "\n";
    return kLimitRefusal;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kUsageError;
  }
  return exit_code;
}

}  // namespace graphoid::cli
