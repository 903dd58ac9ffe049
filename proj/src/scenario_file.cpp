#include "bfc/scenario_file.hpp"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/random.hpp"

namespace bfc {

namespace {

struct RawValue {
  enum class Kind { Number, Bool, String, Array };
  Kind kind = Kind::Number;
  double num = 0.0;
  bool boolean = false;
  std::string str;
  std::vector<RawValue> arr;
  int line = 0;
};

using Section = std::map<std::string, RawValue>;

[[noreturn]] void fail(const std::string& msg, int line, const std::string& field = {}) {
  std::string full = msg;
  if (!field.empty()) full += " (field " + field + ")";
  if (line > 0) full += " at line " + std::to_string(line);
  throw ScenarioParseError(full, line, field);
}

void skip_ws(const char*& p) {
  while (*p == ' ' || *p == '\t') ++p;
}

RawValue parse_value(const char*& p, int line) {
  skip_ws(p);
  RawValue v;
  v.line = line;
  if (*p == '[') {
    ++p;
    v.kind = RawValue::Kind::Array;
    skip_ws(p);
    if (*p == ']') {
      ++p;
      return v;
    }
    while (true) {
      v.arr.push_back(parse_value(p, line));
      skip_ws(p);
      if (*p == ',') {
        ++p;
        continue;
      }
      if (*p == ']') {
        ++p;
        return v;
      }
      fail("expected ',' or ']' in array", line);
    }
  }
  if (*p == '"') {
    ++p;
    v.kind = RawValue::Kind::String;
    while (*p && *p != '"') v.str.push_back(*p++);
    if (*p != '"') fail("unterminated string", line);
    ++p;
    return v;
  }
  if (std::isalpha(static_cast<unsigned char>(*p))) {
    std::string word;
    while (std::isalnum(static_cast<unsigned char>(*p)) || *p == '_') word.push_back(*p++);
    if (word == "true" || word == "false") {
      v.kind = RawValue::Kind::Bool;
      v.boolean = (word == "true");
      return v;
    }
    fail("unexpected token '" + word + "' (strings must be quoted)", line);
  }
  char* end = nullptr;
  v.num = std::strtod(p, &end);
  if (end == p) fail("expected a value", line);
  v.kind = RawValue::Kind::Number;
  p = end;
  return v;
}

// --- typed accessors -------------------------------------------------------

double as_number(const RawValue& v, const std::string& field) {
  if (v.kind != RawValue::Kind::Number) fail("expected a number", v.line, field);
  return v.num;
}

int as_int(const RawValue& v, const std::string& field) {
  const double d = as_number(v, field);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) fail("expected an integer", v.line, field);
  return i;
}

bool as_bool(const RawValue& v, const std::string& field) {
  if (v.kind != RawValue::Kind::Bool) fail("expected true or false", v.line, field);
  return v.boolean;
}

std::string as_string(const RawValue& v, const std::string& field) {
  if (v.kind != RawValue::Kind::String) fail("expected a quoted string", v.line, field);
  return v.str;
}

Eigen::VectorXd as_vector(const RawValue& v, const std::string& field) {
  if (v.kind != RawValue::Kind::Array) fail("expected an array of numbers", v.line, field);
  Eigen::VectorXd out(v.arr.size());
  for (std::size_t i = 0; i < v.arr.size(); ++i) out(i) = as_number(v.arr[i], field);
  return out;
}

// Array of equally sized numeric rows, stacked.
Eigen::VectorXd as_stacked_rows(const RawValue& v, const std::string& field, int& row_len) {
  if (v.kind != RawValue::Kind::Array || v.arr.empty())
    fail("expected a non-empty array of rows", v.line, field);
  row_len = -1;
  std::vector<double> flat;
  for (const RawValue& row : v.arr) {
    Eigen::VectorXd r = as_vector(row, field);
    if (row_len < 0) row_len = static_cast<int>(r.size());
    if (r.size() != row_len) fail("rows have inconsistent lengths", row.line, field);
    for (Eigen::Index i = 0; i < r.size(); ++i) flat.push_back(r(i));
  }
  return Eigen::Map<Eigen::VectorXd>(flat.data(), flat.size());
}

// --- section plumbing ------------------------------------------------------

struct Document {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;
};

Document tokenize(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    // strip comments, respecting quotes
    std::string line;
    bool in_quote = false;
    for (char c : raw) {
      if (c == '"') in_quote = !in_quote;
      if (c == '#' && !in_quote) break;
      line.push_back(c);
    }
    const char* p = line.c_str();
    skip_ws(p);
    if (*p == '\0' || *p == '\r') continue;
    if (*p == '[') {
      const char* close = std::strchr(p, ']');
      if (!close) fail("unterminated section header", line_no);
      std::string name(p + 1, close - p - 1);
      if (doc.sections.count(name)) fail("duplicate section [" + name + "]", line_no);
      doc.sections[name] = {};
      doc.section_lines[name] = line_no;
      current = name;
      p = close + 1;
      skip_ws(p);
      if (*p != '\0' && *p != '\r') fail("unexpected text after section header", line_no);
      continue;
    }
    if (current.empty()) fail("key outside any section", line_no);
    std::string key;
    while (std::isalnum(static_cast<unsigned char>(*p)) || *p == '_') key.push_back(*p++);
    skip_ws(p);
    if (key.empty() || *p != '=') fail("expected 'key = value'", line_no);
    ++p;
    RawValue v = parse_value(p, line_no);
    skip_ws(p);
    if (*p != '\0' && *p != '\r') fail("unexpected trailing text", line_no);
    if (doc.sections[current].count(key))
      fail("duplicate key '" + key + "' in [" + current + "]", line_no);
    doc.sections[current][key] = std::move(v);
  }
  return doc;
}

// Checked access to one section's keys; flags unknown keys when destroyed.
class SectionReader {
 public:
  SectionReader(const Document& doc, const std::string& name, bool required)
      : name_(name) {
    auto it = doc.sections.find(name);
    if (it == doc.sections.end()) {
      if (required) fail("missing required section [" + name + "]", 0, name);
      section_ = nullptr;
      return;
    }
    section_ = &it->second;
  }

  bool present() const { return section_ != nullptr; }

  const RawValue* find(const std::string& key) {
    used_.insert(key);
    if (!section_) return nullptr;
    auto it = section_->find(key);
    return it == section_->end() ? nullptr : &it->second;
  }

  const RawValue& require(const std::string& key) {
    const RawValue* v = find(key);
    if (!v) fail("missing required key '" + key + "' in [" + name_ + "]", 0,
                 name_ + "." + key);
    return *v;
  }

  void reject_unknown() const {
    if (!section_) return;
    for (const auto& [key, value] : *section_)
      if (!used_.count(key))
        fail("unknown key '" + key + "' in [" + name_ + "]", value.line,
             name_ + "." + key);
  }

  std::string field(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const Section* section_;
  std::set<std::string> used_;
};

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  Document doc = tokenize(text);
  static const std::set<std::string> known_sections = {"graph",   "motion", "initial",
                                                       "control", "run",    "output"};
  for (const auto& [sec, line] : doc.section_lines)
    if (!known_sections.count(sec)) fail("unknown section [" + sec + "]", line, sec);

  Scenario s;
  s.name = name;

  // [graph]
  SectionReader graph(doc, "graph", true);
  const int n = as_int(graph.require("n"), graph.field("n"));
  const RawValue& edges_v = graph.require("edges");
  if (edges_v.kind != RawValue::Kind::Array)
    fail("expected an array of [i, j] pairs", edges_v.line, graph.field("edges"));
  std::vector<std::pair<int, int>> pairs;
  for (const RawValue& e : edges_v.arr) {
    if (e.kind != RawValue::Kind::Array || e.arr.size() != 2)
      fail("each edge must be a pair [i, j]", e.line, graph.field("edges"));
    int a = as_int(e.arr[0], graph.field("edges"));
    int b = as_int(e.arr[1], graph.field("edges"));
    if (a < 1 || a > n || b < 1 || b > n)
      fail("edge vertex outside [1, " + std::to_string(n) + "]", e.line,
           graph.field("edges"));
    pairs.emplace_back(a - 1, b - 1);  // 1-based on disk, 0-based internally
  }
  graph.reject_unknown();
  try {
    s.graph = OrientedGraph::from_undirected(n, pairs);
  } catch (const InvalidGraph& e) {
    fail(e.what(), edges_v.line, graph.field("edges"));
  }

  // [motion]
  SectionReader motion(doc, "motion", true);
  std::string type = "similarity";
  if (const RawValue* t = motion.find("type")) type = as_string(*t, motion.field("type"));
  int d = 0;
  const RawValue& pstar_v = motion.require("p_star_0");
  Eigen::VectorXd p_star0 = as_stacked_rows(pstar_v, motion.field("p_star_0"), d);
  if (d < 2) fail("agent positions need dimension >= 2", pstar_v.line,
                  motion.field("p_star_0"));
  if (p_star0.size() != static_cast<Eigen::Index>(n) * d)
    fail("p_star_0 must list " + std::to_string(n) + " agents", pstar_v.line,
         motion.field("p_star_0"));
  s.motion.d = d;
  s.motion.p0 = p_star0;

  if (type == "similarity") {
    SimilarityPath path;
    path.drift = Eigen::VectorXd::Zero(d);
    path.center = Eigen::VectorXd::Zero(d);
    if (const RawValue* v = motion.find("omega"))
      path.rotation.omega = as_number(*v, motion.field("omega"));
    if (const RawValue* v = motion.find("rotation_plane")) {
      Eigen::VectorXd plane = as_vector(*v, motion.field("rotation_plane"));
      if (plane.size() != 2) fail("rotation_plane must be [a, b]", v->line,
                                  motion.field("rotation_plane"));
      int a = static_cast<int>(plane(0)), b = static_cast<int>(plane(1));
      if (a < 1 || a > d || b < 1 || b > d || a == b)
        fail("rotation_plane axes must be distinct and in [1, " + std::to_string(d) + "]",
             v->line, motion.field("rotation_plane"));
      path.rotation.axis_a = a - 1;
      path.rotation.axis_b = b - 1;
    }
    if (const RawValue* v = motion.find("scale")) {
      path.scale = as_number(*v, motion.field("scale"));
      if (path.scale <= 0) fail("scale must be positive", v->line, motion.field("scale"));
    }
    if (const RawValue* v = motion.find("drift")) {
      path.drift = as_vector(*v, motion.field("drift"));
      if (path.drift.size() != d)
        fail("drift must have dimension " + std::to_string(d), v->line,
             motion.field("drift"));
    }
    if (const RawValue* v = motion.find("center")) {
      if (v->kind == RawValue::Kind::Number) {
        int agent = as_int(*v, motion.field("center"));
        if (agent < 1 || agent > n)
          fail("center agent index outside [1, " + std::to_string(n) + "]", v->line,
               motion.field("center"));
        path.center = p_star0.segment((agent - 1) * d, d);
      } else {
        path.center = as_vector(*v, motion.field("center"));
        if (path.center.size() != d)
          fail("center point must have dimension " + std::to_string(d), v->line,
               motion.field("center"));
      }
    }
    s.motion.path = std::move(path);
  } else if (type == "ray") {
    RayPath path;
    const RawValue& agent_v = motion.require("ray_agent");
    int agent = as_int(agent_v, motion.field("ray_agent"));
    if (agent < 1 || agent > n)
      fail("ray_agent outside [1, " + std::to_string(n) + "]", agent_v.line,
           motion.field("ray_agent"));
    path.agent = agent - 1;
    path.origin = as_vector(motion.require("ray_origin"), motion.field("ray_origin"));
    path.direction =
        as_vector(motion.require("ray_direction"), motion.field("ray_direction"));
    if (path.origin.size() != d || path.direction.size() != d)
      fail("ray_origin/ray_direction must have dimension " + std::to_string(d),
           agent_v.line, motion.field("ray_origin"));
    if (path.direction.norm() < 1e-12)
      fail("ray_direction must be nonzero", agent_v.line, motion.field("ray_direction"));
    path.direction.normalize();
    path.base = as_number(motion.require("ray_base"), motion.field("ray_base"));
    if (const RawValue* v = motion.find("ray_amplitude"))
      path.amplitude = as_number(*v, motion.field("ray_amplitude"));
    if (const RawValue* v = motion.find("ray_omega"))
      path.omega = as_number(*v, motion.field("ray_omega"));
    s.motion.path = std::move(path);
  } else {
    fail("motion type must be \"similarity\" or \"ray\"", 0, motion.field("type"));
  }
  motion.reject_unknown();

  // [initial]
  SectionReader initial(doc, "initial", true);
  const RawValue* p0_v = initial.find("p0");
  const RawValue* seed_v = initial.find("seed");
  const RawValue* box_v = initial.find("box");
  if (const RawValue* v = initial.find("require_zero_centroid_error"))
    s.require_zero_centroid_error = as_bool(*v, initial.field("require_zero_centroid_error"));
  if (p0_v && seed_v)
    fail("give either p0 or seed, not both", seed_v->line, initial.field("seed"));
  if (p0_v) {
    int d0 = 0;
    s.p0 = as_stacked_rows(*p0_v, initial.field("p0"), d0);
    if (d0 != d || s.p0.size() != static_cast<Eigen::Index>(n) * d)
      fail("p0 must list " + std::to_string(n) + " agents of dimension " +
               std::to_string(d),
           p0_v->line, initial.field("p0"));
  } else if (seed_v) {
    s.seed = static_cast<std::uint64_t>(as_int(*seed_v, initial.field("seed")));
    double lo = -2.0, hi = 2.0;
    if (box_v) {
      Eigen::VectorXd box = as_vector(*box_v, initial.field("box"));
      if (box.size() != 2 || box(0) >= box(1))
        fail("box must be [lo, hi] with lo < hi", box_v->line, initial.field("box"));
      lo = box(0);
      hi = box(1);
    }
    s.p0 = Rng(s.seed).uniform_vector(n * d, lo, hi);
  } else {
    fail("missing required key 'p0' (or 'seed') in [initial]", 0, "initial.p0");
  }
  if (box_v && !seed_v)
    fail("box is only meaningful together with seed", box_v->line, initial.field("box"));
  initial.reject_unknown();

  // [control]
  SectionReader control(doc, "control", true);
  s.control.k_p = as_number(control.require("k_p"), control.field("k_p"));
  control.reject_unknown();

  // [run]
  SectionReader run(doc, "run", true);
  s.horizon = as_number(run.require("horizon"), run.field("horizon"));
  s.dt = as_number(run.require("dt"), run.field("dt"));
  if (const RawValue* v = run.find("T_window"))
    s.window_T = as_number(*v, run.field("T_window"));
  if (const RawValue* v = run.find("eps_min")) {
    s.eps_min = as_number(*v, run.field("eps_min"));
    if (s.eps_min <= 0) fail("eps_min must be positive", v->line, run.field("eps_min"));
  }
  if (const RawValue* v = run.find("seed")) {
    if (seed_v) fail("seed already given in [initial]", v->line, run.field("seed"));
    s.seed = static_cast<std::uint64_t>(as_int(*v, run.field("seed")));
  }
  run.reject_unknown();

  // [output]
  SectionReader output(doc, "output", false);
  if (const RawValue* v = output.find("csv")) s.csv_path = as_string(*v, "output.csv");
  if (const RawValue* v = output.find("svg")) s.svg_path = as_string(*v, "output.svg");
  output.reject_unknown();

  return s;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError("cannot open scenario file: " + path, 0, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), std::filesystem::path(path).stem().string());
}

std::string resolve_scenario_path(const std::string& path) {
  namespace fs = std::filesystem;
  if (fs::exists(path)) return path;
  if (fs::exists(path + ".scn")) return path + ".scn";
  return path;
}

}  // namespace bfc
