#pragma once

#include <iosfwd>
#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>

#include "rectmatch/chain.hpp"
#include "rectmatch/concentration.hpp"
#include "rectmatch/counterexample.hpp"
#include "rectmatch/geometry.hpp"
#include "rectmatch/solvers.hpp"

namespace rectmatch {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& what, int line_no)
      : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
        line(line_no) {}
};

// Instance CSV: header "x,y,color", decimal coordinates with 17 significant
// digits, color R or B, rows in increasing x.
void write_instance_csv(const Instance& inst, std::ostream& out);
Instance read_instance_csv(std::istream& in);
Instance read_instance_file(const std::string& path);

// Chain-spec JSON: {"states":[...], "P":[[...]], "f":[...], "p1":[...]}
// with P in the column-stochastic convention.
ChainSpec load_chain_spec(const nlohmann::json& j);
ChainSpec load_chain_file(const std::string& path);

nlohmann::json matching_to_json(const Instance& inst, const SolveResult& result);
nlohmann::json lemma1_to_json(const Lemma1Report& r);
nlohmann::json counterexample_to_json(const CounterexampleReport& r);
nlohmann::json bounded_diff_to_json(const BoundedDiffReport& r);
nlohmann::json tail_to_json(const TailReport& r);
nlohmann::json fekete_to_json(const FeketeReport& r);
std::string fekete_to_csv(const FeketeReport& r);

}  // namespace rectmatch
