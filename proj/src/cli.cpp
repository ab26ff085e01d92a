#include "gcw/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gcw/battery.hpp"
#include "gcw/constructions.hpp"
#include "gcw/data.hpp"
#include "gcw/error.hpp"
#include "gcw/graph_algo.hpp"
#include "gcw/structure.hpp"
#include "gcw/symmetry.hpp"

namespace gcw {

namespace {

const std::vector<std::string> kCommands = {"analyze", "symmetry", "classify", "quotient",
                                            "elusive", "construct", "verify-paper"};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_prefix(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0 ? s.substr(prefix.size()) : std::string();
}

std::string big(BigInt v) { return to_string(v); }

// Runs f and stores its value, or "unavailable: <reason>" on budget exclusions.
template <class F>
void try_set(Report& r, const std::string& key, F f) {
  try {
    r[key] = f();
  } catch (const BudgetExceeded& e) {
    r[key] = std::string("unavailable: ") + e.what();
  }
}

Report input_echo(const JobSpec& job, const Code* c) {
  Report in;
  in["job"] = job.str();
  if (c) {
    in["code"] = job.code;
    in["code_name"] = c->name();
    in["graph"] = c->graph().spec();
    in["code_digest"] = data::digest(write_code_text(*c));
  }
  if (!job.group.empty()) in["group"] = job.group;
  Report files = Report::object();
  for (const auto& [name, bytes] : data::files()) files[std::string(name)] = data::digest(bytes);
  in["data"] = files;
  return in;
}

Report group_summary(const GraphGroup& g) {
  Report r;
  r["name"] = g.name();
  r["representation"] = to_string(g.kind());
  r["generators"] = g.generators().size();
  r["order"] = big(g.order());
  return r;
}

Report symmetry_json(const Code& c, const SymmetryReport& s) {
  Report r;
  r["s"] = s.s;
  r["partition_mode"] = to_string(s.mode);
  if (s.rho) r["rho"] = *s.rho;
  else r["rho"] = "unavailable: sphere-mode partition";
  r["level_sizes"] = s.level_sizes;
  r["orbit_counts"] = s.orbit_counts;
  r["s_nt"] = s.s_nt;
  r["completely_transitive"] = s.completely_transitive;
  if (s.witness) {
    const auto& w = *s.witness;
    r["witness"] = {{"level", w.level},
                    {"representative", c.graph().label(w.representative)},
                    {"unreached", c.graph().label(w.unreached)},
                    {"orbit_size", w.orbit_size},
                    {"level_size", w.level_size}};
  }
  return r;
}

GraphGroup checked_group(const JobSpec& job, const Code& c) {
  if (job.group.empty()) throw UsageError(job.command + " needs --group");
  GraphGroup g = load_group(job.group, c);
  require_preserves(c, g);
  return g;
}

}  // namespace

// ---------------------------------------------------------------- job specs

std::vector<std::string> JobSpec::format_args() const {
  const JobSpec d;
  std::vector<std::string> a{command};
  auto opt = [&](const char* flag, const std::string& v, const std::string& def) {
    if (v != def) {
      a.push_back(flag);
      a.push_back(v);
    }
  };
  opt("--code", code, d.code);
  opt("--graph", graph, d.graph);
  opt("--group", group, d.group);
  opt("--normal", normal, d.normal);
  opt("--alpha", alpha, d.alpha);
  opt("--s", std::to_string(s), std::to_string(d.s));
  opt("--only", only, d.only);
  opt("--format", format, d.format);
  opt("--out", output, d.output);
  opt("--budget", std::to_string(budget), std::to_string(d.budget));
  opt("--threads", std::to_string(threads), std::to_string(d.threads));
  return a;
}

std::string JobSpec::str() const {
  std::string out;
  for (const auto& x : format_args()) {
    if (!out.empty()) out += ' ';
    out += x;
  }
  return out;
}

JobSpec parse_job(const std::vector<std::string>& args) {
  JobSpec job;
  CLI::App app{"gcw"};
  app.require_subcommand(1);
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--code", job.code, "catalog:NAME | construction:EXPR | file:PATH");
    sub->add_option("--graph,--ambient", job.graph, "host graph spec");
    sub->add_option("--group", job.group, "builtin:NAME | file:PATH");
    sub->add_option("--normal", job.normal, "generators of N (quotient)");
    sub->add_option("--alpha", job.alpha, "base vertex label (quotient)");
    sub->add_option("--s", job.s, "level bound");
    sub->add_option("--only", job.only, "item filter (verify-paper)");
    sub->add_option("--format", job.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out,--json", job.output, "output file");
    sub->add_option("--budget", job.budget, "ambient elements for brute-force automorphism search");
    sub->add_option("--threads", job.threads, "worker cap")->check(CLI::PositiveNumber);
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  job.command = app.get_subcommands().front()->get_name();
  return job;
}

// ---------------------------------------------------------------- sources

Code load_code(const std::string& source, const std::string& graph) {
  if (source.empty()) throw UsageError("--code is required");
  Code c = [&]() -> Code {
    if (auto name = strip_prefix(source, "catalog:"); !name.empty()) return classical_code(name);
    if (auto expr = strip_prefix(source, "construction:"); !expr.empty()) return make_construction(expr);
    if (auto path = strip_prefix(source, "file:"); !path.empty()) {
      if (graph.empty()) throw UsageError("file codes need --graph");
      const std::string text = read_file(path);
      auto g = make_graph(graph);
      const bool json = path.size() > 5 && path.substr(path.size() - 5) == ".json";
      Code f = json ? read_code_json(g, text, path) : read_code_text(g, text, path);
      if (f.size() == 0) throw UsageError("trivial code: " + path + " contains no codewords");
      return f;
    }
    throw UsageError("code source must start with catalog:, construction: or file:");
  }();
  if (!graph.empty() && make_graph(graph)->spec() != c.graph().spec())
    throw UsageError("code lives in " + c.graph().spec() + ", not " + graph);
  return c;
}

GraphGroup load_group(const std::string& source, const Code& c) {
  if (auto name = strip_prefix(source, "builtin:"); !name.empty()) return builtin_group(name, c);
  if (auto path = strip_prefix(source, "file:"); !path.empty()) return read_group_json(c.graph_ptr(), read_file(path), path);
  throw UsageError("group source must start with builtin: or file:");
}

// ---------------------------------------------------------------- commands

Report cmd_analyze(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  Report r;
  r["input"] = input_echo(job, &c);
  Report p;
  const Graph& g = c.graph();
  p["graph_family"] = g.family();
  p["vertices"] = g.vertex_count();
  if (const auto* h = c.hamming()) {
    p["n"] = h->n();
    p["q"] = h->q();
  }
  p["size"] = c.size();
  if (c.linear()) p["dimension"] = c.linear()->generator.size();
  if (c.size() < 2) {
    p["delta"] = "unavailable: trivial code";
    r["parameters"] = p;
    return r;
  }
  const int delta = min_distance(c);
  const int e = error_capacity_from(delta);
  p["delta"] = delta;
  p["e"] = e;
  try {
    auto part = auto_partition(c);
    p["partition_mode"] = to_string(part.mode());
    p["rho"] = *part.rho();
    p["levels"] = part.sizes();
    try_set(p, "perfect", [&] { return is_perfect(c); });
    try_set(p, "completely_regular", [&] { return is_completely_regular(c, part); });
    if (c.hamming())
      p["summary"] = "(" + std::to_string(c.length()) + "," + std::to_string(c.size()) + "," + std::to_string(delta) +
                     ";" + std::to_string(*part.rho()) + ")";
  } catch (const BudgetExceeded& ex) {
    auto part = distance_partition(c, PartitionMode::spheres, e);
    p["partition_mode"] = to_string(part.mode());
    p["rho"] = std::string("unavailable: ") + ex.what();
    p["levels"] = part.sizes();
    try_set(p, "perfect", [&] { return is_perfect(c); });
  }
  if (const auto* h = c.hamming()) {
    if (h->n() <= 10) try_set(p, "cyclic", [&] { return is_cyclic(c); });
    else p["cyclic"] = "unavailable: exhaustive n-cycle scan needs n <= 10";
  }
  r["parameters"] = p;
  return r;
}

Report cmd_symmetry(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  GraphGroup g = checked_group(job, c);
  Report r;
  r["input"] = input_echo(job, &c);
  r["group"] = group_summary(g);
  SymmetryReport s = job.s < 0 ? is_completely_transitive(c, g) : is_s_nt(c, g, job.s);
  r["symmetry"] = symmetry_json(c, s);
  return r;
}

Report cmd_classify(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  GraphGroup g = checked_group(job, c);
  Report r;
  r["input"] = input_echo(job, &c);
  r["group"] = group_summary(g);
  Classification k = classify_pair(c, g);
  r["classification"] = {{"tag", to_string(k.tag)},
                         {"group_order", big(k.group_order)},
                         {"kernel_order", big(k.kernel_order)},
                         {"alphabet_order", big(k.alphabet_order)},
                         {"alphabet_2transitive", k.alphabet_2transitive},
                         {"hypotheses", k.hypotheses}};
  return r;
}

Report cmd_quotient(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  GraphGroup g = load_group(job.group.empty() ? std::string("builtin:tv_agl") : job.group, c);
  GraphGroup n = load_group(job.normal.empty() ? std::string("builtin:translations") : job.normal, c);
  const Vertex alpha = job.alpha.empty() ? 0 : c.graph().parse_label(job.alpha);
  const int s = job.s < 0 ? 1 : job.s;
  Report r;
  r["input"] = input_echo(job, &c);
  r["group"] = group_summary(g);
  r["normal"] = group_summary(n);
  QuotientProp q = verify_quotient_prop(g, n.generators(), alpha, s);
  Report out;
  out["s"] = s;
  out["alpha"] = c.graph().label(alpha);
  out["code_nt"] = q.code_nt;
  out["quotient_dt"] = q.quotient_dt;
  out["quotient_vertices"] = q.quotient_vertices;
  out["quotient_girth"] = q.quotient_girth;
  if (q.code_delta) out["code_delta"] = *q.code_delta;
  out["holds"] = q.holds();
  r["quotient"] = out;
  return r;
}

Report cmd_elusive(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  std::optional<GraphGroup> searchers;
  if (!job.group.empty()) searchers = load_group(job.group, c);
  Report r;
  r["input"] = input_echo(job, &c);
  ElusiveResult e = is_elusive(c, searchers ? &*searchers : nullptr, job.budget);
  Report out;
  out["verdict"] = to_string(e.verdict);
  out["scope"] = e.scope;
  if (!e.reason.empty()) out["reason"] = e.reason;
  if (e.witness) {
    out["witness"] = e.witness->cycles();
    std::vector<std::string> img;
    for (Vertex v : e.image) img.push_back(c.graph().label(v));
    out["image"] = img;
  }
  out["neighbour_set_size"] = neighbour_set(c).ids.size();
  r["elusive"] = out;
  return r;
}

Report cmd_construct(const JobSpec& job) {
  Code c = load_code(job.code, job.graph);
  Report r;
  r["input"] = input_echo(job, &c);
  r["size"] = c.size();
  if (!job.output.empty()) {
    std::ofstream f(job.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + job.output);
    const bool json = job.output.size() > 5 && job.output.substr(job.output.size() - 5) == ".json";
    f << (json ? write_code_json(c) : write_code_text(c));
    r["written"] = job.output;
  } else {
    std::vector<std::string> words;
    for (Vertex v : c.ids()) words.push_back(c.graph().label(v));
    r["codewords"] = words;
  }
  return r;
}

Report cmd_verify_paper(const JobSpec& job, std::ostream* log) {
  Report r;
  r["input"] = input_echo(job, nullptr);
  auto results = run_battery(job.only, log);
  Report items = Report::array();
  std::size_t passed = 0;
  for (const auto& x : results) {
    passed += x.pass;
    items.push_back({{"criterion", x.criterion},
                     {"name", x.name},
                     {"expected", x.expected},
                     {"computed", x.computed},
                     {"pass", x.pass}});
  }
  r["checks"] = results.size();
  r["passed"] = passed;
  r["items"] = items;
  return r;
}

// ---------------------------------------------------------------- rendering and dispatch

std::string render_text(const Report& r) {
  std::ostringstream os;
  auto leaf = [](const Report& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  std::function<void(const Report&, const std::string&)> walk = [&](const Report& v, const std::string& key) {
    if (v.is_object()) {
      for (auto it = v.begin(); it != v.end(); ++it) walk(it.value(), key.empty() ? it.key() : key + "." + it.key());
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t i = 0; i < v.size(); ++i) walk(v[i], key + "[" + std::to_string(i) + "]");
    } else if (v.is_array()) {
      os << key << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << leaf(v[i]);
      os << "\n";
    } else {
      os << key << ": " << leaf(v) << "\n";
    }
  };
  walk(r, "");
  return os.str();
}

int run_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  Report body;
  int code = 0;
  try {
    if (job.command == "analyze") body = cmd_analyze(job);
    else if (job.command == "symmetry") body = cmd_symmetry(job);
    else if (job.command == "classify") body = cmd_classify(job);
    else if (job.command == "quotient") body = cmd_quotient(job);
    else if (job.command == "elusive") body = cmd_elusive(job);
    else if (job.command == "construct") body = cmd_construct(job);
    else if (job.command == "verify-paper") {
      body = cmd_verify_paper(job, job.format == "text" ? &out : nullptr);
      const auto checks = body["checks"].get<std::size_t>();
      if (checks == 0) err << "warning: no battery item matches '" << job.only << "'\n";
      code = body["passed"].get<std::size_t>() == checks ? 0 : 1;
    } else {
      throw UsageError("unknown command " + job.command);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    if (!e.witness().empty()) err << "witness: " << e.witness() << "\n";
    return 3;
  } catch (const ImplementationContradiction& e) {
    err << "implementation contradiction: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Report r;
  r["schema"] = kReportSchema;
  r["tool"] = {{"name", "gcw"}, {"version", kToolVersion}};
  r["command"] = job.command;
  r["threads"] = 1;
  for (auto it = body.begin(); it != body.end(); ++it) r[it.key()] = it.value();
  r["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};

  if (job.command == "verify-paper" && job.format == "text") {
    out << r["passed"].get<std::size_t>() << "/" << r["checks"].get<std::size_t>() << " checks pass\n";
  } else if (job.format == "json") {
    out << r.dump(2) << "\n";
  } else {
    out << render_text(r);
  }
  if (!job.output.empty() && job.command != "construct") {
    std::ofstream f(job.output, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write " << job.output << "\n";
      return 2;
    }
    f << r.dump(2) << "\n";
  }
  return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  try {
    if (args.empty() || args.front() == "--help" || args.front() == "-h") {
      out << "usage: gcw <command> [options]\ncommands:";
      for (const auto& c : kCommands) out << " " << c;
      out << "\n";
      return args.empty() ? 2 : 0;
    }
    job = parse_job(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  return run_job(job, out, err);
}

}  // namespace gcw
