#include "rectmatch/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace rectmatch {

namespace {

std::string format_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string rational_string(const BigRational& r) {
  std::ostringstream out;
  out << r;
  return out.str();
}

nlohmann::json rational_to_json(const BigRational& r) {
  return {{"num", boost::multiprecision::numerator(r).str()},
          {"den", boost::multiprecision::denominator(r).str()},
          {"approx", static_cast<double>(r)}};
}

nlohmann::json estimate_to_json(const Estimate& e) {
  return {{"value", e.value},
          {"stderr", e.stderr_},
          {"trials", e.trials},
          {"hits", e.hits}};
}

}  // namespace

void write_instance_csv(const Instance& inst, std::ostream& out) {
  out << "x,y,color\n";
  for (const auto& p : inst.points()) {
    out << format_coord(p.x) << ',' << format_coord(p.y) << ','
        << (p.color == Color::Red ? 'R' : 'B') << '\n';
  }
}

Instance read_instance_csv(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line) || (line != "x,y,color" && line != "x,y,color\r")) {
    throw ParseError("expected header 'x,y,color'", line_no);
  }
  std::vector<ColoredPoint> pts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string xs, ys, cs;
    if (!std::getline(row, xs, ',') || !std::getline(row, ys, ',') ||
        !std::getline(row, cs)) {
      throw ParseError("expected 'x,y,color' row", line_no);
    }
    ColoredPoint p;
    std::size_t used = 0;
    try {
      p.x = std::stod(xs, &used);
      if (used != xs.size()) throw std::invalid_argument(xs);
      p.y = std::stod(ys, &used);
      if (used != ys.size()) throw std::invalid_argument(ys);
    } catch (const std::exception&) {
      throw ParseError("malformed coordinate", line_no);
    }
    if (cs == "R") {
      p.color = Color::Red;
    } else if (cs == "B") {
      p.color = Color::Blue;
    } else {
      throw ParseError("color must be R or B", line_no);
    }
    pts.push_back(p);
  }
  if (pts.empty()) throw ParseError("no points", line_no);
  try {
    return Instance(std::move(pts));
  } catch (const GeneralPositionViolation& e) {
    throw ParseError(e.what(), line_no);
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance_csv(in);
}

ChainSpec load_chain_spec(const nlohmann::json& j) {
  ChainSpec c;
  const auto& states = j.at("states");
  const int n = static_cast<int>(states.size());
  if (n == 0) throw MalformedMatrix("chain spec has no states");
  for (const auto& s : states) c.labels.push_back(s.get<std::string>());

  const auto& P = j.at("P");
  if (static_cast<int>(P.size()) != n) throw MalformedMatrix("P row count mismatch");
  c.P.resize(n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(P[i].size()) != n) throw MalformedMatrix("P column count mismatch");
    for (int jj = 0; jj < n; ++jj) c.P(i, jj) = P[i][jj].get<double>();
  }
  const auto& f = j.at("f");
  const auto& p1 = j.at("p1");
  if (static_cast<int>(f.size()) != n || static_cast<int>(p1.size()) != n) {
    throw MalformedMatrix("f/p1 length mismatch");
  }
  c.f.resize(n);
  c.p1.resize(n);
  for (int i = 0; i < n; ++i) {
    c.f(i) = f[i].get<double>();
    c.p1(i) = p1[i].get<double>();
  }
  return c;
}

ChainSpec load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open chain spec: " + path);
  nlohmann::json j;
  in >> j;
  return load_chain_spec(j);
}

nlohmann::json matching_to_json(const Instance& inst, const SolveResult& result) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [i, j] : result.matching.pairs) {
    pairs.push_back({i, j});
  }
  return {{"n", inst.n()},
          {"size", matched_count(result.matching)},
          {"pairs", pairs},
          {"optimal", result.optimal},
          {"nodes_explored", result.nodes_explored}};
}

nlohmann::json lemma1_to_json(const Lemma1Report& r) {
  return {{"alpha", r.alpha},   {"m", r.m},
          {"delta", r.delta},   {"n0", r.n0},
          {"lower", r.lower},   {"upper", r.upper},
          {"exact", r.exact},   {"n", r.n},
          {"epsilon", r.epsilon}, {"degenerate", r.degenerate}};
}

nlohmann::json counterexample_to_json(const CounterexampleReport& r) {
  nlohmann::json j{
      {"t", r.t},
      {"exact_joint", rational_to_json(r.exact_joint)},
      {"exact_conditional", rational_to_json(r.exact_conditional)},
      {"one_step", rational_to_json(r.reported_one_step)},
      {"gap", rational_to_json(r.gap)},
      {"gap_string", rational_string(r.gap)},
      {"conditional_below_one_step", r.conditional_below_one_step},
      {"trials", r.trials},
      {"seed", r.seed}};
  if (r.empirical_conditional.trials > 0) {
    j["empirical_conditional"] = estimate_to_json(r.empirical_conditional);
  }
  if (r.empirical_joint.trials > 0) {
    j["empirical_joint"] = estimate_to_json(r.empirical_joint);
  }
  return j;
}

nlohmann::json bounded_diff_to_json(const BoundedDiffReport& r) {
  auto histogram = [](const std::map<int, long>& h) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [delta, count] : h) out[std::to_string(delta)] = count;
    return out;
  };
  return {{"n", r.n},
          {"trials", r.trials},
          {"perturbations_per_trial", r.perturbations_per_trial},
          {"max_position_delta", r.max_position_delta},
          {"max_color_delta", r.max_color_delta},
          {"position_histogram", histogram(r.position_histogram)},
          {"color_histogram", histogram(r.color_histogram)}};
}

nlohmann::json tail_to_json(const TailReport& r) {
  return {{"n", r.n},
          {"epsilon", r.epsilon},
          {"trials", r.trials},
          {"pilot_mean", r.pilot_mean},
          {"pilot_trials", r.pilot_trials},
          {"frequency", r.frequency},
          {"frequency_stderr", r.frequency_stderr},
          {"bound", r.bound},
          {"vacuous", r.vacuous},
          {"pass", r.pass}};
}

nlohmann::json fekete_to_json(const FeketeReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"mean", row.mean},
                    {"stderr", row.stderr_},
                    {"sup_so_far", row.sup_so_far}});
  }
  nlohmann::json margins = nlohmann::json::array();
  for (const auto& m : r.margins) {
    margins.push_back({{"n", m.n},
                       {"m", m.m},
                       {"margin", m.margin},
                       {"combined_stderr", m.combined_stderr},
                       {"within_tolerance", m.within_tolerance}});
  }
  return {{"rows", rows}, {"margins", margins}};
}

std::string fekete_to_csv(const FeketeReport& r) {
  std::ostringstream out;
  out << "n,mean,stderr,sup_so_far\n";
  for (const auto& row : r.rows) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g\n", row.n, row.mean,
                  row.stderr_, row.sup_so_far);
    out << buf;
  }
  return out.str();
}

}  // namespace rectmatch
