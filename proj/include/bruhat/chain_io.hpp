#pragma once

// Chain serialization.
//
// JSON: {"mode": "interchange"|"bruhat", "start": <matrix JSON>,
//        "steps": [[i,i2,j,j2], ...],
//        "splices": [{"at": k, "matrix": <matrix JSON>}, ...]}
// "at" is the position of the splice in the full step sequence; "steps"
// lists the interchange steps in order with the splices removed.
//
// Text: the start matrix, a blank line, then one step per line, either
// "i i2 j j2" or "splice ROW,ROW,...". A leading "mode bruhat" line marks a
// bruhat-mode chain that has no splices.

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bruhat/chain.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/io.hpp"

namespace bruhat {

inline nlohmann::json to_json(const Chain& c) {
  nlohmann::json steps = nlohmann::json::array();
  nlohmann::json splices = nlohmann::json::array();
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    if (const auto* t = std::get_if<Interchange>(&c.steps[k])) {
      steps.push_back({t->i, t->i2, t->j, t->j2});
    } else {
      splices.push_back({{"at", k}, {"matrix", to_json(std::get<Splice>(c.steps[k]).matrix)}});
    }
  }
  return {{"mode", c.mode == ChainMode::Bruhat ? "bruhat" : "interchange"},
          {"start", to_json(c.start)},
          {"steps", steps},
          {"splices", splices}};
}

inline Chain chain_from_json(const nlohmann::json& j) {
  try {
    const auto mode_name = j.at("mode").get<std::string>();
    if (mode_name != "interchange" && mode_name != "bruhat") throw MalformedChain("unknown chain mode '" + mode_name + "'");
    Chain c{matrix_from_json(j.at("start")), {}, mode_name == "bruhat" ? ChainMode::Bruhat : ChainMode::Interchange};

    std::map<std::size_t, BinaryMatrix> splices;
    if (j.contains("splices")) {
      for (const auto& s : j.at("splices")) {
        const auto at = s.at("at").get<std::size_t>();
        if (!splices.emplace(at, matrix_from_json(s.at("matrix"))).second) {
          throw MalformedChain("two splices at step " + std::to_string(at));
        }
      }
    }
    const auto& steps = j.at("steps");
    const std::size_t total = steps.size() + splices.size();
    std::size_t next_interchange = 0;
    for (std::size_t k = 0; k < total; ++k) {
      if (auto it = splices.find(k); it != splices.end()) {
        c.steps.emplace_back(Splice{it->second});
        continue;
      }
      const auto q = steps.at(next_interchange++).get<std::vector<std::size_t>>();
      if (q.size() != 4) throw MalformedChain("interchange steps need four indices");
      c.steps.emplace_back(Interchange{q[0], q[1], q[2], q[3], Direction::ItoL});
    }
    if (!splices.empty() && splices.rbegin()->first >= total) throw MalformedChain("splice position past the chain end");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedChain(std::string("chain JSON: ") + e.what());
  }
}

inline void write_chain_text(std::ostream& out, const Chain& c) {
  write_matrix_text(out, c.start);
  out << '\n';
  const bool has_splice = std::any_of(c.steps.begin(), c.steps.end(),
                                      [](const ChainStep& s) { return std::holds_alternative<Splice>(s); });
  if (c.mode == ChainMode::Bruhat && !has_splice) out << "mode bruhat\n";
  for (const auto& step : c.steps) {
    if (const auto* t = std::get_if<Interchange>(&step)) {
      out << t->i << ' ' << t->i2 << ' ' << t->j << ' ' << t->j2 << '\n';
    } else {
      const auto& m = std::get<Splice>(step).matrix;
      out << "splice ";
      for (std::size_t i = 0; i < m.rows(); ++i) out << (i ? "," : "") << m.row_string(i);
      out << '\n';
    }
  }
}

inline Chain read_chain_text(std::istream& in) {
  auto start = read_matrix_text(in);
  if (!start) throw MalformedChain("chain text has no start matrix");
  Chain c{*start, {}, ChainMode::Interchange};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty()) continue;
    if (first && line.rfind("mode ", 0) == 0) {
      const auto mode = detail::trim(line.substr(5));
      if (mode == "bruhat") {
        c.mode = ChainMode::Bruhat;
      } else if (mode != "interchange") {
        throw MalformedChain("unknown chain mode '" + mode + "'");
      }
      first = false;
      continue;
    }
    first = false;
    if (line.rfind("splice ", 0) == 0) {
      std::vector<std::string> rows;
      std::stringstream ss(line.substr(7));
      std::string row;
      while (std::getline(ss, row, ',')) rows.push_back(detail::trim(row));
      c.steps.emplace_back(Splice{BinaryMatrix::from_rows(rows)});
      c.mode = ChainMode::Bruhat;
      continue;
    }
    std::istringstream ls(line);
    long long v[4];
    std::string extra;
    if (!(ls >> v[0] >> v[1] >> v[2] >> v[3]) || (ls >> extra) || v[0] < 0 || v[1] < 0 || v[2] < 0 || v[3] < 0) {
      throw MalformedChain("bad chain step line '" + line + "'");
    }
    c.steps.emplace_back(Interchange{static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]),
                                     static_cast<std::size_t>(v[2]), static_cast<std::size_t>(v[3]), Direction::ItoL});
  }
  return c;
}

/// Accepts chain text, chain JSON, or a CLI JSON envelope whose "result" is
/// a chain.
inline Chain parse_chain(const std::string& input) {
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw MalformedChain(std::string("chain JSON: ") + e.what());
    }
    if (j.contains("result") && j.at("result").is_object() && j.at("result").contains("start")) {
      return chain_from_json(j.at("result"));
    }
    return chain_from_json(j);
  }
  std::istringstream in(input);
  return read_chain_text(in);
}

}  // namespace bruhat
