#include "smhd/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "smhd/error.hpp"

namespace smhd {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class LineError {
 public:
  LineError(std::string source, int line) : source_(std::move(source)), line_(line) {}
  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError(source_ + ":" + std::to_string(line_) + ": " + msg);
  }

 private:
  std::string source_;
  int line_;
};

double to_double(const std::string& v, const LineError& where) {
  const std::string l = lower(v);
  if (l == "inf" || l == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) where.fail("trailing characters in number '" + v + "'");
    return d;
  } catch (const std::logic_error&) {
    where.fail("expected a number, got '" + v + "'");
  }
}

int to_int(const std::string& v, const LineError& where) {
  try {
    std::size_t pos = 0;
    const long long i = std::stoll(v, &pos);
    if (pos != v.size()) where.fail("trailing characters in integer '" + v + "'");
    if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) where.fail("integer out of range");
    return static_cast<int>(i);
  } catch (const std::logic_error&) {
    where.fail("expected an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& v, const LineError& where) {
  const std::string l = lower(v);
  if (l == "true" || l == "1" || l == "yes" || l == "on") return true;
  if (l == "false" || l == "0" || l == "no" || l == "off") return false;
  where.fail("expected a boolean, got '" + v + "'");
}

std::vector<int> to_int_list(const std::string& v, const LineError& where) {
  std::vector<int> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(trim(item), where));
  if (out.empty()) where.fail("empty list");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  auto fail = [](const std::string& m) { throw ConfigError("invalid configuration: " + m); };
  if (n < 1) fail("mesh.n must be at least 1");
  try {
    params.validate();
  } catch (const InvalidArgument& e) {
    fail(e.what());
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) fail("time.dt must be positive");
  if (steps < 0) fail("time.steps must be non-negative");
  if (!(solver.tol > 0.0)) fail("solver.tol must be positive");
  if (solver.max_iterations < 1) fail("solver.max_iterations must be at least 1");
  if (vtk_every < 0 || checkpoint_every < 0) fail("output intervals must be non-negative");
  if (levels.size() < 2) fail("convergence.levels needs at least two entries");
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1) fail("convergence.levels must be positive");
    if (i > 0 && levels[i] <= levels[i - 1]) fail("convergence.levels must be increasing");
  }
  if (operator_levels.size() < 2) fail("operators.levels needs at least two entries");
  for (std::size_t i = 0; i < operator_levels.size(); ++i) {
    if (operator_levels[i] < 1) fail("operators.levels must be positive");
    if (i > 0 && operator_levels[i] <= operator_levels[i - 1]) fail("operators.levels must be increasing");
  }
  if (!(final_time > 0.0) || !(dt_factor > 0.0)) fail("convergence.final_time and dt_factor must be positive");
  if (!(conserve_tol > 0.0)) fail("conserve.tol must be positive");
}

RunConfig parse_config(std::istream& is, const std::string& source) {
  RunConfig c;
  double re = 1.0, rm = 1.0;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(is, raw)) {
    ++line_no;
    const LineError where(source, line_no);
    std::string line = raw;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') where.fail("unterminated section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      static const std::vector<std::string> known{"mesh",   "physics", "time",        "case",    "solver",
                                                  "output", "convergence", "operators", "conserve", "debug"};
      if (std::find(known.begin(), known.end(), section) == known.end()) where.fail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) where.fail("expected key = value");
    const std::string key = lower(trim(line.substr(0, eq)));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) where.fail("missing value for '" + key + "'");
    const std::string k = section + "." + key;

    if (k == "mesh.n") c.n = to_int(value, where);
    else if (k == "physics.re") re = to_double(value, where);
    else if (k == "physics.rm") rm = to_double(value, where);
    else if (k == "physics.s") c.params.sc = to_double(value, where);
    else if (k == "physics.mu") c.params.mu = to_double(value, where);
    else if (k == "time.dt") c.dt = to_double(value, where);
    else if (k == "time.steps") c.steps = to_int(value, where);
    else if (k == "case.name") c.case_name = value;
    else if (k == "solver.tol") c.solver.tol = to_double(value, where);
    else if (k == "solver.max_iterations") c.solver.max_iterations = to_int(value, where);
    else if (k == "solver.newton_switch") c.solver.newton_switch = to_double(value, where);
    else if (k == "solver.scheme") {
      const std::string v = lower(value);
      if (v == "picard") c.solver.scheme = NonlinearScheme::Picard;
      else if (v == "newton") c.solver.scheme = NonlinearScheme::Newton;
      else if (v == "auto") c.solver.scheme = NonlinearScheme::PicardThenNewton;
      else where.fail("solver.scheme must be picard, newton or auto");
    } else if (k == "solver.exec") {
      const std::string v = lower(value);
      if (v == "serial") c.solver.exec = Exec::Serial;
      else if (v == "parallel") c.solver.exec = Exec::Parallel;
      else where.fail("solver.exec must be serial or parallel");
    }
    else if (k == "output.dir") c.out_dir = value;
    else if (k == "output.vtk_every") c.vtk_every = to_int(value, where);
    else if (k == "output.checkpoint_every") c.checkpoint_every = to_int(value, where);
    else if (k == "output.restart") c.restart = value;
    else if (k == "convergence.levels") c.levels = to_int_list(value, where);
    else if (k == "convergence.final_time") c.final_time = to_double(value, where);
    else if (k == "convergence.dt_factor") c.dt_factor = to_double(value, where);
    else if (k == "convergence.min_eoc") c.min_eoc = to_double(value, where);
    else if (k == "operators.levels") c.operator_levels = to_int_list(value, where);
    else if (k == "conserve.tol") c.conserve_tol = to_double(value, where);
    else if (k == "debug.mutate_incidence") c.mutate_incidence = to_bool(value, where);
    else if (section.empty()) where.fail("key '" + key + "' outside of any section");
    else where.fail("unknown key '" + key + "' in section [" + section + "]");
  }
  if (!(re > 0.0) || !(rm > 0.0)) throw ConfigError("invalid configuration: Re and Rm must be positive");
  c.params.inv_re = std::isinf(re) ? 0.0 : 1.0 / re;
  c.params.inv_rm = std::isinf(rm) ? 0.0 : 1.0 / rm;
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  return parse_config(in, path);
}

}  // namespace smhd
