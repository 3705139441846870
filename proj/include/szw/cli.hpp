#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "szw/checks.hpp"
#include "szw/enumeration.hpp"
#include "szw/families.hpp"
#include "szw/graph6.hpp"
#include "szw/invariants.hpp"
#include "szw/report.hpp"
#include "szw/scan.hpp"

namespace szw {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Holds either a caller-supplied stream ("-") or an opened file.
class InputHandle {
 public:
  InputHandle(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw UsageError("cannot open '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

inline std::vector<Graph> read_graphs(std::istream& in, const std::string& format) {
  if (format == "edgelist") {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return {parse_edge_list(text)};
  }
  Graph6LineSource source(in);
  return read_all(source);
}

inline CheckId require_check(const std::string& name) {
  if (auto id = parse_check_id(name)) return *id;
  std::string known;
  for (CheckId id : kAllChecks) known += " " + std::string(check_name(id));
  throw UsageError("unknown check '" + name + "'; known:" + known);
}

struct Prediction {
  std::optional<std::int64_t> eta;
  std::optional<std::int64_t> eta_star_q4;
};

// Closed forms available for a family member.
inline Prediction predict(const FamilySpec& spec) {
  Prediction p;
  if (std::holds_alternative<family::Complete>(spec)) {
    p.eta = 0;
  } else if (auto* s = std::get_if<family::Knt>(&spec)) {
    if (s->n >= 4 && (s->t == 2 || s->t == s->n - 2)) p.eta = eta_knt_special(s->n, s->t);
  } else {
    std::vector<int> sizes;
    int k = 0;
    if (auto* c = std::get_if<family::Cycle>(&spec)) {
      k = c->k;
      sizes.assign(k, 1);
    } else {
      const auto& ct = std::get<family::CycleWithTrees>(spec);
      k = ct.k;
      sizes = ct.sizes;
    }
    if (k == 3) {
      p.eta = 0;
      p.eta_star_q4 = eta_star_c3_trees_q4(sizes);
    } else if (k == 4) {
      p.eta = eta_c4_trees(sizes);
    } else if (k == 5) {
      p.eta = eta_c5_trees(sizes);
    }
  }
  return p;
}

}  // namespace detail

// Entry point of the `szw` tool. Exit codes: 0 all checks passed, 1 at least
// one counterexample, 2 usage or input error.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Szeged-Wiener difference engine and theorem scanner", "szw"};
  app.require_subcommand(1);

  std::string format = "graph6";
  std::string input = "-";
  std::string out_format = "json";

  auto* compute = app.add_subcommand("compute", "Print every index of each input graph");
  compute->add_option("--format", format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  compute->add_option("--in", input, "Input file, '-' for stdin");
  compute->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  std::string spec_text;
  bool predict = false;
  auto* fam = app.add_subcommand("family", "Build a named family member");
  fam->add_option("spec", spec_text, "complete:n | cycle:k | knt:n,t | ctrees:k:s1,...,sk")->required();
  fam->add_flag("--predict", predict, "Compare closed forms with direct computation");

  std::string check_text;
  std::optional<int> order;
  std::string filter_text;
  unsigned workers = 1;
  std::optional<std::uint64_t> expected_count;
  bool lenient = false;
  std::size_t limit = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Run a check over a graph stream");
  auto* n_opt = scan_cmd->add_option("--n", order, "Enumerate all graphs of this order (1..8)");
  auto* in_opt = scan_cmd->add_option("--in", input, "graph6 stream, '-' for stdin");
  n_opt->excludes(in_opt);
  scan_cmd->add_option("--check", check_text, "Check id")->required();
  scan_cmd->add_option("--filter", filter_text, "connected,2connected,bipartite,noncomplete,girth:K");
  scan_cmd->add_option("--workers", workers, "Worker threads (0 = all cores)");
  scan_cmd->add_option("--expected-count", expected_count, "Required number of graphs in the stream");
  scan_cmd->add_flag("--lenient", lenient, "Skip malformed lines instead of aborting");
  scan_cmd->add_option("--limit", limit, "Keep at most this many counterexamples (0 = all)");
  scan_cmd->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run a check on each input graph");
  verify->add_option("--check", check_text, "Check id")->required();
  verify->add_option("--in", input, "Input file, '-' for stdin");
  verify->add_option("--format", format, "Input format")->check(CLI::IsMember({"graph6", "edgelist"}));
  verify->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto* list = app.add_subcommand("checks", "List check ids");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*list) {
      for (CheckId id : kAllChecks) out << check_name(id) << '\n';
      return kExitOk;
    }

    if (*compute) {
      detail::InputHandle handle(input, in);
      const auto graphs = detail::read_graphs(handle.get(), format);
      if (out_format == "csv") out << "graph6,n,m,wiener,szeged,szeged_star_q4,eta,eta_star_q4\n";
      for (const auto& g : graphs) {
        const auto r = full_report(g);
        const auto g6 = encode_graph6(g);
        if (out_format == "csv") {
          out << g6 << ',' << r.n << ',' << r.m << ',' << r.wiener << ',' << r.szeged << ','
              << r.szeged_star_q4 << ',' << r.eta << ',' << r.eta_star_q4 << '\n';
        } else {
          out << to_json(r, g6).dump() << '\n';
        }
      }
      return kExitOk;
    }

    if (*fam) {
      const auto spec = parse_family_spec(spec_text);
      const Graph g = build(spec);
      out << encode_graph6(g) << '\n';
      Json j;
      j["spec"] = to_string(spec);
      j["graph6"] = encode_graph6(g);
      j["n"] = g.order();
      bool match = true;
      if (predict) {
        const auto measured_eta = eta(g);
        const auto measured_q4 = eta_star_q4(g);
        j["measured"] = {{"eta", measured_eta}, {"eta_star_q4", measured_q4}};
        const auto p = detail::predict(spec);
        Json pj = Json::object();
        if (p.eta) {
          pj["eta"] = *p.eta;
          match = match && *p.eta == measured_eta;
        }
        if (p.eta_star_q4) {
          pj["eta_star_q4"] = *p.eta_star_q4;
          match = match && *p.eta_star_q4 == measured_q4;
        }
        j["predicted"] = pj;
        j["match"] = match;
      }
      out << j.dump() << '\n';
      return match ? kExitOk : kExitCounterexample;
    }

    const CheckId check = detail::require_check(check_text);

    if (*scan_cmd) {
      ScanOptions options;
      options.filter = parse_filter(filter_text);
      options.workers = workers;
      options.counterexample_limit = limit;
      ScanReport report;
      if (order) {
        report = scan(builtin_enumerate(*order), check, options);
      } else {
        detail::InputHandle handle(input, in);
        Graph6LineSource source(handle.get(), lenient);
        report = scan(source, check, options);
      }
      if (out_format == "csv") {
        out << csv_header() << '\n';
        for (const auto& ce : report.counterexamples) out << csv_row(ce.outcome, check, ce.graph6) << '\n';
      } else {
        out << to_json(report).dump(2) << '\n';
      }
      if (expected_count && report.stream_count != *expected_count) {
        err << "error: stream contained " << report.stream_count << " graphs, expected "
            << *expected_count << '\n';
        return kExitUsage;
      }
      return report.failed == 0 ? kExitOk : kExitCounterexample;
    }

    // verify
    detail::InputHandle handle(input, in);
    const auto graphs = detail::read_graphs(handle.get(), format);
    bool any_fail = false;
    if (out_format == "csv") out << csv_header() << '\n';
    for (const auto& g : graphs) {
      const auto outcome = evaluate(check, g);
      any_fail = any_fail || outcome.status == CheckStatus::fail;
      const auto g6 = encode_graph6(g);
      if (out_format == "csv") {
        out << csv_row(outcome, check, g6) << '\n';
      } else {
        out << to_json(outcome, check, g6).dump() << '\n';
      }
    }
    return any_fail ? kExitCounterexample : kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cin, std::cout, std::cerr);
}

}  // namespace szw
