#ifndef SUSHKEVICH_CLI_HPP_
#define SUSHKEVICH_CLI_HPP_

// Command-line front end. Kept out of sushkevich.hpp so that library users do
// not pull in CLI11.
//
// Exit statuses: 0 analysis completed (a collision is a finding, not a
// failure), 2 input error, 3 budget exhausted (the partial report is still
// written).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sushkevich.hpp"

namespace sushkevich::cli {

  inline constexpr int exit_ok               = 0;
  inline constexpr int exit_input_error      = 2;
  inline constexpr int exit_budget_exhausted = 3;

  inline constexpr char const* version = "0.1.0";

  struct Command {
    std::string              verb;
    std::vector<std::string> inputs;
    std::string              output;
    std::size_t              max_rules    = 500;
    std::size_t              max_rule_len = 50;
    std::size_t              max_len      = 4;
    std::size_t              budget       = 100'000;
    std::size_t              order        = 0;
    std::size_t              n            = 2;
    std::uint64_t            p            = 2;
    std::size_t              max_listed   = 100;
    bool                     with_table   = false;
  };

  struct Outcome {
    int         status = exit_ok;
    json::Json  report;
    std::string summary;
  };

  inline std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline Presentation load_presentation(std::string const& path) {
    try {
      return parse_presentation(read_file(path));
    } catch (ParseError const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  inline CayleyTable load_table(std::string const& path) {
    try {
      return json::parse_table(read_file(path));
    } catch (Error const& e) {
      throw Error(path + ": " + e.what());
    }
  }

  inline CompletionBudget completion_budget(Command const& c) {
    return {c.max_rules, c.max_rule_len};
  }

  inline Outcome run_laws(Command const& c) {
    auto    t    = load_table(c.inputs.at(0));
    auto    laws = check_laws(t);
    Outcome o;
    o.report = json::Json{{"associative", true},
                          {"is_group", is_group(t)},
                          {"laws", json::encode(laws)}};
    if (laws.right_solvable && laws.right_unique) {
      o.report["right_group"] = json::encode(decompose_right_group(t));
    }
    std::ostringstream s;
    s << "order " << t.size() << ": xa=ya=>x=y " << laws.left_unique
      << ", ax=ay=>x=y " << laws.right_unique << ", Xa=b solvable "
      << laws.left_solvable << ", aX=b solvable " << laws.right_solvable
      << ", group " << is_group(t);
    o.summary = s.str();
    return o;
  }

  inline Outcome run_build_gm(Command const& c) {
    auto    p  = load_presentation(c.inputs.at(0));
    auto    gm = build_gm(p);
    Outcome o;
    o.report  = json::Json{{"relation_count", gm.relations().size()},
                           {"group_completion", is_group_completion(gm)},
                           {"presentation", format_presentation(gm)}};
    o.summary = "G(M) has " + std::to_string(gm.alphabet().size())
                + " letters and " + std::to_string(gm.relations().size())
                + " relations";
    return o;
  }

  inline Outcome run_kb(Command const& c) {
    auto    p  = load_presentation(c.inputs.at(0));
    auto    rs = kb_complete(p, completion_budget(c));
    Outcome o;
    o.report  = json::encode(rs);
    o.summary = std::string(json::to_string(rs.status())) + " with "
                + std::to_string(rs.rules().size()) + " rules";
    if (!rs.confluent()) {
      o.status = exit_budget_exhausted;
    }
    return o;
  }

  inline Outcome run_probe(Command const& c) {
    auto         p = load_presentation(c.inputs.at(0));
    ProbeOptions opts;
    opts.max_len       = c.max_len;
    opts.budget        = c.budget;
    opts.completion    = completion_budget(c);
    opts.max_witnesses = c.max_listed;
    Outcome o;
    try {
      auto report = probe_embedding(p, opts);
      o.report    = json::encode(report);
      o.summary   = std::string(json::to_string(report.status)) + ": "
                  + std::to_string(report.pairs_checked) + " pairs, "
                  + std::to_string(report.collisions) + " collisions, "
                  + std::to_string(report.inconclusive) + " inconclusive";
      if (!report.witnesses.empty()
          && report.status == EmbeddingStatus::collision) {
        auto const& w = report.witnesses.front();
        o.summary += "; first witness (" + p.to_string(w.u) + ", "
                     + p.to_string(w.v) + ")";
      }
      if (report.status == EmbeddingStatus::inconclusive) {
        o.status = exit_budget_exhausted;
      }
    } catch (NotConfluent const& e) {
      auto rs   = kb_complete(p, opts.completion);
      o.status  = exit_budget_exhausted;
      o.report  = json::Json{{"status", "budget-exhausted"},
                             {"probe_length", c.max_len},
                             {"reason", e.what()},
                             {"m_system", json::encode(rs)}};
      o.summary = e.what();
    }
    return o;
  }

  inline Outcome run_malcev(Command const& c) {
    auto    t = load_table(c.inputs.at(0));
    auto    r = check_malcev_condition(t, c.max_listed);
    Outcome o;
    o.report  = json::encode(r);
    o.summary = std::to_string(r.systems_checked) + " systems, "
                + std::to_string(r.violation_count) + " violations";
    return o;
  }

  inline Outcome run_rank1(Command const& c) {
    auto    u = rank1_universe(c.n, c.p);
    Outcome o;
    o.report  = json::encode(u, c.with_table);
    o.summary = std::to_string(u.nonzero) + " nonzero rank-1 matrices, "
                + std::to_string(u.idempotents) + " idempotents, "
                + std::to_string(u.subgroups.size()) + " maximal subgroups";
    return o;
  }

  inline Outcome run_enumerate(Command const& c) {
    Outcome o;
    if (!c.inputs.empty()) {
      auto p  = load_presentation(c.inputs.at(0));
      auto rs = kb_complete(p, completion_budget(c));
      if (!rs.confluent()) {
        o.status  = exit_budget_exhausted;
        o.report  = json::Json{{"status", "budget-exhausted"},
                               {"system", json::encode(rs)}};
        o.summary = "completion did not reach confluence";
        return o;
      }
      json::Json words = json::Json::array();
      auto       elements = enumerate_elements(rs, c.max_len);
      for (auto const& w : elements) {
        words.push_back(p.to_string(w));
      }
      o.report  = json::Json{{"max_len", c.max_len},
                             {"count", elements.size()},
                             {"elements", std::move(words)}};
      o.summary = std::to_string(elements.size()) + " elements of length <= "
                  + std::to_string(c.max_len);
      return o;
    }
    if (c.order == 0) {
      throw Error("enumerate needs a presentation file or --order");
    }
    json::Json tables = json::Json::array();
    std::size_t count = 0;
    for_each_semigroup(c.order, [&](CayleyTable const& t) {
      ++count;
      if (c.with_table) {
        tables.push_back(json::encode(t));
      }
    });
    o.report = json::Json{{"order", c.order}, {"count", count}};
    if (c.with_table) {
      o.report["tables"] = std::move(tables);
    }
    o.summary = std::to_string(count) + " associative tables of order "
                + std::to_string(c.order);
    return o;
  }

  inline Outcome dispatch(Command const& c) {
    if (c.verb == "laws") {
      return run_laws(c);
    }
    if (c.verb == "build-gm") {
      return run_build_gm(c);
    }
    if (c.verb == "kb") {
      return run_kb(c);
    }
    if (c.verb == "probe") {
      return run_probe(c);
    }
    if (c.verb == "malcev") {
      return run_malcev(c);
    }
    if (c.verb == "rank1") {
      return run_rank1(c);
    }
    if (c.verb == "enumerate") {
      return run_enumerate(c);
    }
    throw Error("unknown command '" + c.verb + "'");
  }

  // Runs one command. The JSON envelope {"meta": ..., "report": ...} goes to
  // --output when given (with a one-line summary on `out`), otherwise to
  // `out`. Only "meta" carries run-dependent data.
  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    Command  c;
    CLI::App app{"Semigroup workbench: reversibility laws, G(M), rank-1 matrices",
                 "sushkevich"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    auto add_output = [&c](CLI::App* sub) {
      sub->add_option("-o,--output", c.output, "Write the JSON report to this file");
    };
    auto add_completion = [&c](CLI::App* sub) {
      sub->add_option("--max-rules", c.max_rules, "Rule budget for completion")
          ->check(CLI::PositiveNumber);
      sub->add_option("--max-rule-len", c.max_rule_len,
                      "Maximum rule side length for completion")
          ->check(CLI::PositiveNumber);
    };

    auto* laws = app.add_subcommand("laws", "Reversibility laws of a Cayley table");
    laws->add_option("table", c.inputs, "Table JSON file")->required()->expected(1);
    add_output(laws);

    auto* gm = app.add_subcommand("build-gm", "Build the G(M) presentation");
    gm->add_option("presentation", c.inputs, "Presentation file")->required()->expected(1);
    add_output(gm);

    auto* kb = app.add_subcommand("kb", "Knuth-Bendix completion");
    kb->add_option("presentation", c.inputs, "Presentation file")->required()->expected(1);
    add_completion(kb);
    add_output(kb);

    auto* probe = app.add_subcommand("probe", "Probe injectivity of M -> G(M)");
    probe->add_option("presentation", c.inputs, "Presentation file")->required()->expected(1);
    probe->add_option("--max-len", c.max_len, "Longest M normal form examined");
    probe->add_option("--budget", c.budget, "Visited-word budget per G(M) query")
        ->check(CLI::PositiveNumber);
    probe->add_option("--max-witnesses", c.max_listed, "Witnesses listed in the report");
    add_completion(probe);
    add_output(probe);

    auto* malcev = app.add_subcommand("malcev", "Scan the Mal'cev quadruple condition");
    malcev->add_option("table", c.inputs, "Table JSON file")->required()->expected(1);
    malcev->add_option("--max-listed", c.max_listed, "Violations listed in the report");
    add_output(malcev);

    auto* rank1 = app.add_subcommand("rank1", "Semigroup of rank <= 1 matrices over F_p");
    rank1->add_option("--n", c.n, "Dimension")->check(CLI::PositiveNumber);
    rank1->add_option("--p", c.p, "Prime")->required();
    rank1->add_flag("--table", c.with_table, "Include matrices and Cayley table");
    add_output(rank1);

    auto* enumerate = app.add_subcommand(
        "enumerate", "Normal forms of a presentation, or semigroups of a given order");
    enumerate->add_option("presentation", c.inputs, "Presentation file")->expected(0, 1);
    enumerate->add_option("--max-len", c.max_len, "Longest normal form");
    enumerate->add_option("--order", c.order, "Enumerate associative tables of this order");
    enumerate->add_flag("--tables", c.with_table, "Include every table in the report");
    add_completion(enumerate);
    add_output(enumerate);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_ok;
    } catch (CLI::CallForVersion const&) {
      out << version << '\n';
      return exit_ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_input_error;
    }
    c.verb = app.get_subcommands().front()->get_name();

    Outcome outcome;
    auto    start = std::chrono::steady_clock::now();
    try {
      outcome = dispatch(c);
    } catch (Error const& e) {
      err << "error: " << c.verb << ": " << e.what() << '\n';
      return exit_input_error;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    json::Json envelope{{"meta",
                         {{"tool", "sushkevich"},
                          {"version", version},
                          {"command", c.verb},
                          {"exit_status", outcome.status},
                          {"elapsed_ms", elapsed}}},
                        {"report", std::move(outcome.report)}};
    if (c.output.empty()) {
      out << envelope.dump(2) << '\n';
    } else {
      std::ofstream file(c.output, std::ios::binary);
      if (!file) {
        err << "error: --output: cannot write '" << c.output << "'\n";
        return exit_input_error;
      }
      file << envelope.dump(2) << '\n';
      out << outcome.summary << '\n';
    }
    return outcome.status;
  }

}  // namespace sushkevich::cli

#endif  // SUSHKEVICH_CLI_HPP_
