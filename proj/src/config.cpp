#include "bpv/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bpv/csv.hpp"

namespace bpv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
bool parse_number(const std::string& s, T& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if constexpr (std::is_floating_point_v<T>) {
    if (!s.empty() && s[0] == '+') ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

struct Entry {
  std::string value;
  int line;
};

using Table = std::map<std::string, Entry>;  // "section.key" -> value

class Reader {
 public:
  explicit Reader(Table t) : table_(std::move(t)) {}

  template <class T>
  void get(const std::string& key, T& out, const char* type_name) {
    auto it = table_.find(key);
    if (it == table_.end()) return;
    used_.insert(key);
    if (!parse_number(it->second.value, out))
      errors_.push_back("line " + std::to_string(it->second.line) + ": " + key + " expects " + type_name +
                        ", got '" + it->second.value + "'");
  }

  void get_string(const std::string& key, std::string& out) {
    auto it = table_.find(key);
    if (it == table_.end()) return;
    used_.insert(key);
    out = it->second.value;
  }

  bool has(const std::string& key) const { return table_.count(key) != 0; }
  const Entry* find(const std::string& key) const {
    auto it = table_.find(key);
    return it == table_.end() ? nullptr : &it->second;
  }
  void mark(const std::string& key) { used_.insert(key); }
  void error(std::string msg) { errors_.push_back(std::move(msg)); }

  void report_unknown() {
    for (const auto& [key, e] : table_)
      if (!used_.count(key)) errors_.push_back("line " + std::to_string(e.line) + ": unknown key '" + key + "'");
  }
  std::vector<std::string>& errors() { return errors_; }

 private:
  Table table_;
  std::set<std::string> used_;
  std::vector<std::string> errors_;
};

[[noreturn]] void throw_all(const std::vector<std::string>& errors) {
  std::string msg = "invalid configuration:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw ConfigError(msg);
}

void read_dissipation(Reader& r, RunConfig& cfg) {
  std::string type = spec_name(cfg.dissipation);
  r.get_string("dissipation.type", type);
  DissipationSpec spec;
  try {
    spec = spec_from_name(type);
  } catch (const ConfigError& e) {
    r.error(e.what());
    for (const char* k : {"dissipation.n", "dissipation.nu", "dissipation.K"}) r.mark(k);
    return;
  }
  std::visit(
      [&](auto& s) {
        if constexpr (requires { s.n; }) r.get("dissipation.n", s.n, "an integer");
        if constexpr (requires { s.nu; }) r.get("dissipation.nu", s.nu, "a real");
        if constexpr (requires { s.K; }) r.get("dissipation.K", s.K, "a real");
      },
      spec);
  for (const char* k : {"dissipation.n", "dissipation.nu", "dissipation.K"})
    if (const Entry* e = r.find(k); e && !std::visit(
                                           [&](const auto& s) {
                                             const std::string key = k;
                                             if (key == "dissipation.n") return requires { s.n; };
                                             if (key == "dissipation.nu") return requires { s.nu; };
                                             return requires { s.K; };
                                           },
                                           spec)) {
      r.mark(k);
      r.error("line " + std::to_string(e->line) + ": " + k + " does not apply to dissipation type '" + type + "'");
    }
  cfg.dissipation = spec;
}

std::vector<std::string> range_errors(const RunConfig& c) {
  std::vector<std::string> e;
  if (c.grid.nx < 4 || c.grid.nx % 2) e.push_back("grid.nx must be even and >= 4");
  if (c.grid.ny < 4 || c.grid.ny % 2) e.push_back("grid.ny must be even and >= 4");
  if (!(c.grid.lx > 0) || !std::isfinite(c.grid.lx)) e.push_back("grid.lx must be positive");
  if (!(c.grid.ly > 0) || !std::isfinite(c.grid.ly)) e.push_back("grid.ly must be positive");
  if (!std::isfinite(c.beta)) e.push_back("model.beta must be finite");
  if (!std::isfinite(c.start_time)) e.push_back("run.start_time must be finite");
  if (!std::isfinite(c.background_u)) e.push_back("model.background_u must be finite");
  if (c.dt && !(*c.dt > 0.0)) e.push_back("run.dt must be positive or 'auto'");
  if (c.steps < 1) e.push_back("run.steps must be >= 1");
  if (!(c.raw_gamma >= 0.0 && c.raw_gamma < 1.0)) e.push_back("model.raw_gamma must lie in [0, 1)");
  if (!(c.raw_alpha > 0.0 && c.raw_alpha <= 1.0)) e.push_back("model.raw_alpha must lie in (0, 1]");
  if (c.ic.shape != "banded-gaussian") e.push_back("ic.shape must be 'banded-gaussian'");
  if (!(c.ic.amplitude > 0.0)) e.push_back("ic.amplitude must be positive");
  if (!(c.ic.k0 > 0.0)) e.push_back("ic.k0 must be positive");
  if (c.output.snapshot_every < 0) e.push_back("output.snapshot_every must be >= 0");
  if (c.output.spectrum_every < 0) e.push_back("output.spectrum_every must be >= 0");
  if (c.output.out_dir.empty()) e.push_back("output.out_dir must not be empty");
  try {
    validate(c.dissipation);
  } catch (const ConfigError& ex) {
    e.push_back(ex.what());
  }
  return e;
}

}  // namespace

void validate(const RunConfig& cfg) {
  const auto e = range_errors(cfg);
  if (!e.empty()) throw_all(e);
}

RunConfig parse_config_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw, section;
  Table table;
  std::vector<std::string> syntax;
  static const std::set<std::string> sections = {"run", "grid", "model", "dissipation", "ic", "output"};
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        syntax.push_back("line " + std::to_string(line_no) + ": malformed section header");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (!sections.count(section)) syntax.push_back("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      syntax.push_back("line " + std::to_string(line_no) + ": expected 'key = value'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) {
      syntax.push_back("line " + std::to_string(line_no) + ": empty key");
      continue;
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (table.count(full)) {
      syntax.push_back("line " + std::to_string(line_no) + ": duplicate key '" + full + "'");
      continue;
    }
    table[full] = {value, line_no};
  }

  RunConfig cfg;
  Reader r(std::move(table));
  r.errors() = syntax;
  r.get("grid.nx", cfg.grid.nx, "an integer");
  r.get("grid.ny", cfg.grid.ny, "an integer");
  r.get("grid.lx", cfg.grid.lx, "a real");
  r.get("grid.ly", cfg.grid.ly, "a real");
  r.get("model.beta", cfg.beta, "a real");
  r.get("model.raw_gamma", cfg.raw_gamma, "a real");
  r.get("model.raw_alpha", cfg.raw_alpha, "a real");
  r.get("model.background_u", cfg.background_u, "a real");
  r.get("run.seed", cfg.seed, "an unsigned integer");
  r.get("run.steps", cfg.steps, "an integer");
  r.get("run.start_time", cfg.start_time, "a real");
  if (const Entry* e = r.find("run.dt")) {
    r.mark("run.dt");
    double v = 0.0;
    if (e->value == "auto")
      cfg.dt.reset();
    else if (parse_number(e->value, v))
      cfg.dt = v;
    else
      r.error("line " + std::to_string(e->line) + ": run.dt expects a real or 'auto', got '" + e->value + "'");
  }
  read_dissipation(r, cfg);
  r.get_string("ic.shape", cfg.ic.shape);
  r.get("ic.k0", cfg.ic.k0, "a real");
  r.get("ic.p", cfg.ic.p, "a real");
  r.get("ic.q", cfg.ic.q, "a real");
  r.get("ic.amplitude", cfg.ic.amplitude, "a real");
  r.get("output.snapshot_every", cfg.output.snapshot_every, "an integer");
  r.get("output.spectrum_every", cfg.output.spectrum_every, "an integer");
  r.get_string("output.out_dir", cfg.output.out_dir);
  r.report_unknown();
  auto errors = r.errors();
  if (errors.empty())
    for (auto& e : range_errors(cfg)) errors.push_back(std::move(e));
  if (!errors.empty()) throw_all(errors);
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read configuration '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

std::string format_config(const RunConfig& c) {
  std::ostringstream os;
  os << "[run]\n"
     << "seed = " << c.seed << "\n"
     << "steps = " << c.steps << "\n"
     << "start_time = " << format_double(c.start_time) << "\n"
     << "dt = " << (c.dt ? format_double(*c.dt) : std::string("auto")) << "\n\n"
     << "[grid]\n"
     << "nx = " << c.grid.nx << "\nny = " << c.grid.ny << "\n"
     << "lx = " << format_double(c.grid.lx) << "\nly = " << format_double(c.grid.ly) << "\n\n"
     << "[model]\n"
     << "beta = " << format_double(c.beta) << "\n"
     << "raw_gamma = " << format_double(c.raw_gamma) << "\n"
     << "raw_alpha = " << format_double(c.raw_alpha) << "\n"
     << "background_u = " << format_double(c.background_u) << "\n\n"
     << "[dissipation]\n"
     << "type = " << spec_name(c.dissipation) << "\n";
  std::visit(
      [&](const auto& s) {
        if constexpr (requires { s.n; }) os << "n = " << s.n << "\n";
        if constexpr (requires { s.nu; }) os << "nu = " << format_double(s.nu) << "\n";
        if constexpr (requires { s.K; }) os << "K = " << format_double(s.K) << "\n";
      },
      c.dissipation);
  os << "\n[ic]\n"
     << "shape = " << c.ic.shape << "\n"
     << "k0 = " << format_double(c.ic.k0) << "\np = " << format_double(c.ic.p) << "\nq = " << format_double(c.ic.q)
     << "\namplitude = " << format_double(c.ic.amplitude) << "\n\n"
     << "[output]\n"
     << "snapshot_every = " << c.output.snapshot_every << "\n"
     << "spectrum_every = " << c.output.spectrum_every << "\n"
     << "out_dir = " << c.output.out_dir << "\n";
  return os.str();
}

}  // namespace bpv
