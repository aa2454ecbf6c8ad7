// bruhat: command-line front end for the bruhat library.
//
// Matrices are read in the text format (one row of 0/1 per line, blank line
// ends a matrix) from files, or from stdin when the path is "-". Exit status
// is 2 for usage errors, 1 for domain errors and 0 otherwise.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bruhat/bruhat.hpp"

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool timing = false;
  unsigned threads = 1;
};

/// Output of one subcommand: text for the terminal and a JSON result.
struct Output {
  std::string text;
  json result;
};

class Inputs {
 public:
  bruhat::BinaryMatrix matrix(const std::string& path) {
    if (path == "-") {
      auto m = bruhat::read_matrix_text(std::cin);
      if (!m) throw bruhat::ParseError("stdin: no matrix");
      return *m;
    }
    std::ifstream in(path);
    if (!in) throw bruhat::ParseError("cannot open '" + path + "'");
    auto m = bruhat::read_matrix_text(in);
    if (!m) throw bruhat::ParseError(path + ": no matrix");
    return *m;
  }

  std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
      buf << std::cin.rdbuf();
    } else {
      std::ifstream in(path);
      if (!in) throw bruhat::ParseError("cannot open '" + path + "'");
      buf << in.rdbuf();
    }
    return buf.str();
  }
};

struct ClassArgs {
  std::string margins;
  std::size_t n = 0;
  std::size_t k = 2;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--margins", margins, "class margins R/S, e.g. 2,2,1/2,2,1");
    cmd->add_option("--n", n, "square class A(n,k)");
    cmd->add_option("--k", k, "row and column sum for --n (default 2)");
  }

  [[nodiscard]] bruhat::MarginPair resolve() const {
    if (!margins.empty() && n != 0) throw UsageError("give either --margins or --n, not both");
    if (!margins.empty()) return bruhat::parse_margins(margins);
    if (n == 0) throw UsageError("a class is required: --margins R/S or --n N [--k K]");
    return bruhat::MarginPair::uniform(n, k);
  }
};

bool is_An2(const bruhat::MarginPair& mp) {
  return mp.row_sums.size() == mp.col_sums.size() && mp == bruhat::MarginPair::uniform(mp.row_sums.size(), 2);
}

struct PosetArgs {
  ClassArgs cls;
  bool long_run = false;
  std::string strategy = "auto";

  void add_to(CLI::App* cmd) {
    cls.add_to(cmd);
    cmd->add_flag("--long", long_run, "allow classes above 30000 members (up to 100000); reports progress on stderr");
    cmd->add_option("--strategy", strategy, "cover strategy: auto, all-pairs or interchange")
        ->check(CLI::IsMember({"auto", "all-pairs", "interchange"}));
  }

  [[nodiscard]] bruhat::ClassPoset build(const Globals& g) const {
    const auto mp = cls.resolve();
    bruhat::PosetOptions opt;
    opt.threads = g.threads;
    opt.max_members = long_run ? 100'000 : 30'000;
    if (strategy == "interchange" || (strategy == "auto" && long_run && is_An2(mp))) {
      opt.strategy = bruhat::CoverStrategy::InterchangeGraph;
    }
    if (long_run) opt.progress = [](std::string_view m) { std::cerr << "[bruhat] " << m << std::endl; };
    try {
      return bruhat::build_poset(mp, opt);
    } catch (const bruhat::ClassTooLarge& e) {
      throw bruhat::ClassTooLarge(std::string(e.what()) + (long_run ? "" : " (pass --long to allow larger classes)"));
    }
  }
};

json matrix_rows(const bruhat::BinaryMatrix& a) { return bruhat::to_json(a).at("rows"); }

std::string bool_word(bool b) { return b ? "true" : "false"; }

std::string chain_text(const bruhat::Chain& c) {
  std::ostringstream out;
  bruhat::write_chain_text(out, c);
  return out.str();
}

json report_json(const bruhat::ChainReport& r) {
  json j = {{"length", r.length},
            {"valid", r.valid},
            {"tight", r.tight},
            {"nu_start", r.nu_profile.front()},
            {"nu_end", r.nu_profile.back()}};
  if (r.failing_step) {
    j["failing_step"] = *r.failing_step;
    j["failure"] = r.failure;
  }
  return j;
}

std::string report_text(const bruhat::ChainReport& r) {
  std::ostringstream out;
  out << "length " << r.length << "\nvalid " << bool_word(r.valid) << "\ntight " << bool_word(r.tight) << "\nnu "
      << r.nu_profile.front() << " -> " << r.nu_profile.back() << '\n';
  if (r.failing_step) out << "failing_step " << *r.failing_step << "\nfailure " << r.failure << '\n';
  return out.str();
}

std::string join_set(const std::set<std::size_t>& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruhat order on classes of (0,1)-matrices with fixed row and column sums"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "emit a JSON envelope {command, result, elapsed_ms}");
  app.add_flag("--timing", g.timing, "fill elapsed_ms (otherwise 0, so output is reproducible)");
  app.add_option("--parallel", g.threads, "worker threads for poset, longest and spectrum")->check(CLI::Range(1U, 256U));

  Inputs inputs;
  std::string command;
  std::function<Output()> action;
  auto bind = [&](CLI::App* cmd, std::string name, std::function<Output()> fn) {
    cmd->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  // inv
  std::string inv_path;
  auto* inv = app.add_subcommand("inv", "number of inversions of a matrix");
  inv->add_option("matrix", inv_path, "matrix file or -")->required();
  bind(inv, "inv", [&] {
    const auto nu = bruhat::inversion_count(inputs.matrix(inv_path));
    return Output{std::to_string(nu) + "\n", nu};
  });

  // sigma
  std::string sigma_path;
  auto* sigma = app.add_subcommand("sigma", "cumulative sum table of a matrix");
  sigma->add_option("matrix", sigma_path, "matrix file or -")->required();
  bind(sigma, "sigma", [&] {
    const auto t = bruhat::cumulative_sums(inputs.matrix(sigma_path));
    std::ostringstream out;
    bruhat::write_table_text(out, t);
    return Output{out.str(), bruhat::to_json(t)};
  });

  // compare
  std::string cmp_a, cmp_c;
  std::size_t cmp_budget = 1'000'000;
  auto* compare = app.add_subcommand("compare", "Bruhat and secondary Bruhat verdicts for two matrices");
  compare->add_option("a", cmp_a, "first matrix file or -")->required();
  compare->add_option("c", cmp_c, "second matrix file or -")->required();
  compare->add_option("--budget", cmp_budget, "node budget for the secondary order search");
  bind(compare, "compare", [&] {
    const auto a = inputs.matrix(cmp_a);
    const auto c = inputs.matrix(cmp_c);
    const auto v = bruhat::bruhat_compare(a, c);
    const bruhat::SearchLimits lim{cmp_budget};
    const bool s_leq = bruhat::secondary_bruhat_leq(a, c, lim);
    const bool s_geq = bruhat::secondary_bruhat_leq(c, a, lim);
    std::ostringstream out;
    out << "bruhat_leq " << bool_word(v.leq) << "\nbruhat_geq " << bool_word(v.geq) << "\ncomparable "
        << bool_word(v.comparable()) << "\nsecondary_leq " << bool_word(s_leq) << "\nsecondary_geq "
        << bool_word(s_geq) << "\nnu " << bruhat::inversion_count(a) << ' ' << bruhat::inversion_count(c) << '\n';
    return Output{out.str(),
                  {{"bruhat_leq", v.leq},
                   {"bruhat_geq", v.geq},
                   {"comparable", v.comparable()},
                   {"secondary_leq", s_leq},
                   {"secondary_geq", s_geq},
                   {"nu", {bruhat::inversion_count(a), bruhat::inversion_count(c)}}}};
  });

  // enumerate
  ClassArgs enum_cls;
  bool enum_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "list every member of a class");
  enum_cls.add_to(enumerate);
  enumerate->add_flag("--count", enum_count, "print only the number of members");
  bind(enumerate, "enumerate", [&] {
    const auto mp = enum_cls.resolve();
    std::ostringstream out;
    json list = json::array();
    const auto count = bruhat::for_each_member(mp, [&](const bruhat::BinaryMatrix& a) {
      if (enum_count) return;
      if (out.tellp() > 0) out << '\n';
      bruhat::write_matrix_text(out, a);
      list.push_back(matrix_rows(a));
    });
    if (enum_count) return Output{std::to_string(count) + "\n", count};
    return Output{out.str(), {{"count", count}, {"members", list}}};
  });

  // poset
  PosetArgs poset_args;
  std::string dot_path, jsonl_path;
  auto* poset = app.add_subcommand("poset", "build the Bruhat poset of a class");
  poset_args.add_to(poset);
  poset->add_option("--dot", dot_path, "write the Hasse diagram as DOT");
  poset->add_option("--jsonl", jsonl_path, "write one JSON line per member");
  bind(poset, "poset", [&] {
    const auto p = poset_args.build(g);
    if (!dot_path.empty()) {
      std::ofstream out(dot_path);
      if (!out) throw bruhat::ParseError("cannot write '" + dot_path + "'");
      bruhat::write_dot(out, p);
    }
    if (!jsonl_path.empty()) {
      std::ofstream out(jsonl_path);
      if (!out) throw bruhat::ParseError("cannot write '" + jsonl_path + "'");
      bruhat::write_json_lines(out, p);
    }
    const auto ex = bruhat::extremes(p);
    json r = {{"margins", bruhat::format_margins(p.margins)},
              {"members", p.size()},
              {"covers", p.cover_count()},
              {"minimal", ex.minimal.size()},
              {"maximal", ex.maximal.size()}};
    std::ostringstream out;
    out << "margins " << bruhat::format_margins(p.margins) << "\nmembers " << p.size() << '\n';
    if (p.has_comparability()) {
      r["arcs"] = p.arc_count();
      out << "arcs " << p.arc_count() << '\n';
    }
    out << "covers " << p.cover_count() << "\nminimal " << ex.minimal.size() << "\nmaximal " << ex.maximal.size()
        << '\n';
    return Output{out.str(), r};
  });

  // extremes
  PosetArgs ext_args;
  auto* ext = app.add_subcommand("extremes", "minimal and maximal members of a class");
  ext_args.add_to(ext);
  bind(ext, "extremes", [&] {
    const auto p = ext_args.build(g);
    const auto ex = bruhat::extremes(p);
    std::ostringstream out;
    json r = {{"minimal", json::array()}, {"maximal", json::array()}};
    for (const auto& [label, list] : {std::pair{"minimal", &ex.minimal}, std::pair{"maximal", &ex.maximal}}) {
      for (auto idx : *list) {
        out << label << " nu=" << p.nu[idx] << '\n';
        bruhat::write_matrix_text(out, p.members[idx]);
        out << '\n';
        r[label].push_back({{"rows", matrix_rows(p.members[idx])}, {"nu", p.nu[idx]}});
      }
    }
    return Output{out.str(), r};
  });

  // chain build / chain verify
  auto* chain = app.add_subcommand("chain", "build or verify chains");
  chain->require_subcommand(1);
  std::size_t build_n = 0;
  auto* chain_build = chain->add_subcommand("build", "maximum chain from P_n to Q_n in A(n,2)");
  chain_build->add_option("--n", build_n, "order n >= 4")->required();
  bind(chain_build, "chain build", [&] {
    const auto c = bruhat::max_chain(build_n);
    return Output{chain_text(c), bruhat::to_json(c)};
  });
  std::string verify_path;
  bool verify_extremes = false;
  auto* chain_verify = chain->add_subcommand("verify", "replay and check a chain (text, JSON or a JSON envelope)");
  chain_verify->add_option("chain", verify_path, "chain file or -")->required();
  chain_verify->add_flag("--extremes", verify_extremes, "also require the endpoints P_n and Q_n");
  bind(chain_verify, "chain verify", [&] {
    const auto c = bruhat::parse_chain(inputs.slurp(verify_path));
    std::optional<std::pair<bruhat::BinaryMatrix, bruhat::BinaryMatrix>> ends;
    if (verify_extremes) {
      const auto e = bruhat::build_extremes(c.start.rows());
      ends = std::make_pair(e.minimal, e.maximal);
    }
    const auto r = bruhat::verify_chain(c, ends);
    auto j = report_json(r);
    std::string text = report_text(r);
    if (verify_extremes) {
      j["endpoints_ok"] = r.endpoints_ok;
      text += "endpoints_ok " + bool_word(r.endpoints_ok) + "\n";
    }
    return Output{text, j};
  });

  // longest
  PosetArgs longest_args;
  bool longest_witness = false;
  auto* longest = app.add_subcommand("longest", "longest chain in a class");
  longest_args.add_to(longest);
  longest->add_flag("--witness", longest_witness, "also print a witness chain");
  bind(longest, "longest", [&] {
    const auto p = longest_args.build(g);
    const auto l = bruhat::longest_chain(p);
    json r = {{"length", l.length}};
    std::string text = "length " + std::to_string(l.length) + "\n";
    if (longest_witness) {
      r["witness"] = bruhat::to_json(l.witness);
      text += "\n" + chain_text(l.witness);
    }
    return Output{text, r};
  });

  // spectrum
  PosetArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "maximum chain length for every (minimal, maximal) pair");
  spectrum_args.add_to(spectrum);
  bind(spectrum, "spectrum", [&] {
    const auto p = spectrum_args.build(g);
    const auto pairs = bruhat::extreme_pair_lengths(p, g.threads);
    std::set<std::size_t> lengths;
    json per_pair = json::array();
    for (const auto& e : pairs) {
      lengths.insert(e.length);
      per_pair.push_back({{"minimal", bruhat::hex_key(p.keys[e.minimal])},
                          {"maximal", bruhat::hex_key(p.keys[e.maximal])},
                          {"length", e.length}});
    }
    return Output{"spectrum " + join_set(lengths) + "\npairs " + std::to_string(pairs.size()) + "\n",
                  {{"spectrum", lengths}, {"pairs", per_pair}}};
  });

  // tight
  std::string tight_from, tight_to;
  std::size_t tight_budget = 1'000'000;
  auto* tight = app.add_subcommand("tight", "search for a tight chain between two matrices");
  tight->add_option("from", tight_from, "start matrix file or -")->required();
  tight->add_option("to", tight_to, "end matrix file or -")->required();
  tight->add_option("--budget", tight_budget, "node budget");
  bind(tight, "tight", [&] {
    const auto a = inputs.matrix(tight_from);
    const auto c = inputs.matrix(tight_to);
    const auto out = bruhat::tight_chain_search(a, c, tight_budget);
    if (out.budget_hit) {
      throw bruhat::SearchBudgetExceeded("tight chain search stopped after " + std::to_string(out.explored) +
                                         " nodes");
    }
    json r = {{"found", out.found}, {"explored", out.explored}};
    std::string text = "found " + bool_word(out.found) + "\nexplored " + std::to_string(out.explored) + "\n";
    if (out.witness) {
      r["witness"] = bruhat::to_json(*out.witness);
      text += "length " + std::to_string(out.witness->length()) + "\n\n" + chain_text(*out.witness);
    }
    return Output{text, r};
  });

  // monotone
  PosetArgs mono_args;
  auto* mono = app.add_subcommand("monotone", "check that nu increases along every strict relation");
  mono_args.add_to(mono);
  bind(mono, "monotone", [&] {
    const auto p = mono_args.build(g);
    const auto report = bruhat::monotonicity_check(p);
    json certs = json::array();
    for (const auto& v : report.violations) certs.push_back(bruhat::to_json(v));
    std::string text = "pairs_checked " + std::to_string(report.pairs_checked) + "\nviolations " +
                       std::to_string(report.violations.size()) + "\n";
    for (const auto& cert : certs) text += cert.dump() + "\n";
    return Output{text, {{"pairs_checked", report.pairs_checked}, {"violations", certs}}};
  });

  // delta
  std::size_t delta_n = 0;
  auto* delta = app.add_subcommand("delta", "largest chain length in A(n,2)");
  delta->add_option("--n", delta_n, "order n >= 2")->required();
  bind(delta, "delta", [&] {
    const auto d = bruhat::delta(delta_n);
    return Output{std::to_string(d) + "\n", d};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Output out = action();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    if (g.json) {
      const json envelope = {{"command", command}, {"result", out.result}, {"elapsed_ms", g.timing ? ms.count() : 0}};
      std::cout << envelope.dump() << '\n';
    } else {
      std::cout << out.text;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const bruhat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
