#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "primnorm/errors.hpp"
#include "primnorm/io.hpp"
#include "primnorm/large_norm.hpp"
#include "primnorm/oracle.hpp"
#include "primnorm/small_norm.hpp"
#include "primnorm/structure.hpp"

namespace primnorm::cli {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::json;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string params_text(const LargeParameters& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
}

std::string points_text(std::span<const Point> pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + std::to_string(pts[i] + 1);
  return s;
}

// Loads a file and checks a stated order against the generators.
GroupFile load(const std::string& path) {
  GroupFile f = read_group_file(path);
  if (f.order && *f.order != f.group().order())
    throw InvalidArgument(path + ": stated order " + f.order->str() + " but the generators give " +
                          f.group().order().str());
  return f;
}

std::uint64_t default_budget() {
  const char* env = std::getenv(kBudgetEnv);
  if (!env || !*env) return 0;
  char* end = nullptr;
  const auto v = std::strtoull(env, &end, 10);
  if (*end) throw InvalidArgument(std::string(kBudgetEnv) + " must be a non-negative integer, got '" + env + "'");
  return v;
}

struct NormaliseArgs {
  std::string file;
  std::string in_group;
  bool oracle = false;
  bool force_small = false;
  bool force_large = false;
  std::optional<std::uint64_t> budget;
  std::size_t threads = 1;
  std::string format = "text";
};

NormaliserOptions make_options(bool force_small, bool force_large, std::uint64_t budget, std::size_t threads) {
  NormaliserOptions opts;
  if (force_small) opts.force = NormaliserOptions::Force::small;
  if (force_large) opts.force = NormaliserOptions::Force::large;
  opts.backtrack.node_budget = budget;
  opts.backtrack.threads = threads;
  return opts;
}

int cmd_normalise(const NormaliseArgs& a, std::ostream& out, std::ostream& err) {
  const GroupFile f = load(a.file);
  const Group g = f.group();
  const auto opts = make_options(a.force_small, a.force_large, a.budget.value_or(default_budget()), a.threads);
  std::optional<Group> h;
  if (!a.in_group.empty()) {
    h = load(a.in_group).group();
    if (h->degree() != g.degree()) throw InvalidArgument("--in-group: degree mismatch");
  }

  const auto start = Clock::now();
  const NormaliserResult r = h ? normaliser_in_subgroup(g, *h, opts) : normaliser_in_sym(g, opts);
  const double ms = elapsed_ms(start);
  std::optional<OracleVerdict> verdict;
  if (a.oracle) verdict = oracle_compare(g, r.normaliser, h);

  std::vector<std::string> gens;
  for (const auto& x : r.normaliser.generators()) gens.push_back(format_cycles(x));
  if (a.format == "json") {
    json j;
    j["name"] = f.name;
    j["degree"] = g.degree();
    j["order"] = r.normaliser.order().str();
    j["branch"] = branch_name(r.branch);
    j["params"] = r.params ? json::array({r.params->m, r.params->k, r.params->l}) : json(nullptr);
    j["nodes"] = r.nodes;
    j["cosets"] = r.cosets;
    j["wall_ms"] = ms;
    if (verdict) j["oracle"] = verdict_name(*verdict);
    j["generators"] = gens;
    out << j.dump(2) << "\n";
  } else {
    if (!f.name.empty()) out << "name: " << f.name << "\n";
    out << "degree: " << g.degree() << "\n";
    out << "order: " << r.normaliser.order().str() << "\n";
    out << "branch: " << branch_name(r.branch) << "\n";
    if (r.params) out << "params: " << params_text(*r.params) << "\n";
    out << "nodes: " << r.nodes << "\n";
    out << "cosets: " << r.cosets << "\n";
    out << "wall_ms: " << std::fixed << std::setprecision(3) << ms << "\n";
    if (verdict) out << "oracle: " << verdict_name(*verdict) << "\n";
    for (const auto& s : gens) out << "gen: " << s << "\n";
  }
  if (verdict == OracleVerdict::mismatch) {
    err << "error: result disagrees with the brute-force oracle\n";
    return kOracleMismatch;
  }
  return kOk;
}

std::string classify_summary(const Classification& c) {
  std::vector<std::string> parts;
  if (c.large) parts.push_back("large " + params_text(*c.large));
  if (c.almost_simple) parts.push_back("almost simple");
  parts.push_back(c.small ? "small (" + c.order.str() + " < " + c.small_bound.str() + ")"
                          : "not small (" + c.order.str() + " ≥ " + c.small_bound.str() + ")");
  if (c.mathieu) parts.push_back("Mathieu 4-transitive");
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "; " : "") + parts[i];
  return s;
}

int cmd_classify(const std::string& file, const std::string& format, std::ostream& out) {
  const GroupFile f = load(file);
  const Classification c = classify(f.group());
  std::vector<std::string> cands;
  for (const auto& p : c.candidates) cands.push_back(params_text(p));
  if (format == "json") {
    json j;
    j["name"] = f.name;
    j["degree"] = f.degree;
    j["order"] = c.order.str();
    j["small_bound"] = c.small_bound.str();
    j["small"] = c.small;
    j["large"] = c.large ? json::array({c.large->m, c.large->k, c.large->l}) : json(nullptr);
    j["almost_simple"] = c.almost_simple;
    j["mathieu"] = c.mathieu;
    j["candidates"] = cands;
    j["summary"] = classify_summary(c);
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::string cand_text;
  for (std::size_t i = 0; i < cands.size(); ++i) cand_text += (i ? " " : "") + cands[i];
  if (!f.name.empty()) out << "name: " << f.name << "\n";
  out << "degree: " << f.degree << "\n";
  out << "order: " << c.order.str() << "\n";
  out << "small_bound: " << c.small_bound.str() << "\n";
  out << "small: " << (c.small ? "yes" : "no") << "\n";
  out << "large: " << (c.large ? params_text(*c.large) : "no") << "\n";
  out << "almost_simple: " << (c.almost_simple ? "yes" : "no") << "\n";
  out << "mathieu: " << (c.mathieu ? "yes" : "no") << "\n";
  out << "candidates: " << (cand_text.empty() ? "none" : cand_text) << "\n";
  out << "summary: " << classify_summary(c) << "\n";
  return kOk;
}

int cmd_socle(const std::string& file, std::ostream& out) {
  const GroupFile f = load(file);
  const Group g = f.group();
  require_primitive(g, "socle");
  const Group s = socle(g);
  const auto factors = simple_direct_factors(s);
  out << "degree: " << g.degree() << "\n";
  out << "order: " << s.order().str() << "\n";
  out << "abelian: " << (is_abelian(s) ? "yes" : "no") << "\n";
  out << "factors: " << factors.size() << "\n";
  out << "factor_order: " << (factors.empty() ? "1" : factors.front().order().str()) << "\n";
  for (const auto& x : s.generators()) out << "gen: " << format_cycles(x) << "\n";
  return kOk;
}

int cmd_base(const std::string& file, std::ostream& out) {
  const GroupFile f = load(file);
  const Group g = f.group();
  const auto greedy = greedy_base(g);
  const auto small = small_base(g);
  out << "degree: " << g.degree() << "\n";
  out << "bound: " << base_size_bound(g.degree()) << "\n";
  out << "greedy_size: " << greedy.size() << "\n";
  out << "greedy_base: " << points_text(greedy) << "\n";
  out << "small_size: " << small.size() << "\n";
  out << "small_base: " << points_text(small) << "\n";
  return kOk;
}

int cmd_oracle_check(const std::string& file, std::ostream& out, std::ostream& err) {
  const GroupFile f = load(file);
  const Group g = f.group();
  const OracleBudget budget;
  if (g.degree() > budget.max_symmetric_degree)
    throw BudgetExceeded("oracle-check: degree " + std::to_string(g.degree()) + " exceeds the oracle limit of " +
                         std::to_string(budget.max_symmetric_degree));
  const auto r = normaliser_in_sym(g);
  const Group o = brute_force_normaliser(g, g.degree(), budget);
  const bool agree = same_group(o, r.normaliser);
  out << "computed: " << r.normaliser.order().str() << "\n";
  out << "oracle: " << o.order().str() << "\n";
  out << "verdict: " << (agree ? "agree" : "mismatch") << "\n";
  if (!agree) {
    err << "error: result disagrees with the brute-force oracle\n";
    return kOracleMismatch;
  }
  return kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c == '\n' ? ' ' : c;
  }
  return q + "\"";
}

// Maps library exceptions to exit codes.
template <class F>
int guarded(F&& body, std::ostream& err) {
  try {
    return body();
  } catch (const ImprimitiveError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.blocks().empty()) {
      err << "blocks:";
      for (const auto& b : e.blocks()) {
        err << " {";
        for (std::size_t i = 0; i < b.size(); ++i) err << (i ? "," : "") << b[i] + 1;
        err << "}";
      }
      err << "\n";
    }
    return kPrecondition;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace

const char* verdict_name(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::agree: return "agree";
    case OracleVerdict::mismatch: return "mismatch";
    case OracleVerdict::skipped: return "skipped";
  }
  return "?";
}

OracleVerdict oracle_compare(const Group& g, const Group& n, const std::optional<Group>& h) {
  const OracleBudget budget;
  if (g.degree() > budget.max_symmetric_degree) return OracleVerdict::skipped;
  Group expected = brute_force_normaliser(g, g.degree(), budget);
  if (h) expected = brute_force_intersection(expected, *h, budget);
  return same_group(expected, n) ? OracleVerdict::agree : OracleVerdict::mismatch;
}

std::vector<BenchRow> bench_directory(const std::filesystem::path& dir, const BenchOptions& opts) {
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  std::vector<BenchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < files.size();) {
      BenchRow& row = rows[i];
      row.file = files[i].filename().string();
      try {
        const GroupFile f = load(files[i].string());
        const Group g = f.group();
        row.name = f.name;
        row.degree = g.degree();
        row.order = g.order().str();
        const auto start = Clock::now();
        const auto r = normaliser_in_sym(g, make_options(false, false, opts.node_budget, 1));
        row.wall_ms = elapsed_ms(start);
        row.branch = branch_name(r.branch);
        row.normaliser_order = r.normaliser.order().str();
        row.nodes = r.nodes;
        row.cosets = r.cosets;
        if (opts.oracle) row.oracle = verdict_name(oracle_compare(g, r.normaliser));
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.threads, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "file,name,n,order,branch,normaliser_order,nodes,cosets,wall_ms,oracle,error\n";
  for (const auto& r : rows) {
    out << csv_field(r.file) << ',' << csv_field(r.name) << ',' << r.degree << ',' << r.order << ',' << r.branch
        << ',' << r.normaliser_order << ',' << r.nodes << ',' << r.cosets << ',' << std::fixed << std::setprecision(3)
        << r.wall_ms << ',' << r.oracle << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalisers of primitive permutation groups in the symmetric group"};
  app.set_version_flag("--version", "primnorm 0.1.0");
  app.require_subcommand(1);

  NormaliseArgs na;
  auto* normalise = app.add_subcommand("normalise", "Compute N_{S_n}(G) (or N_H(G) with --in-group)");
  normalise->add_option("file", na.file, "Group file")->required();
  normalise->add_option("--in-group", na.in_group, "Compute the normaliser inside the group in this file");
  normalise->add_flag("--oracle", na.oracle, "Cross-check with the brute-force oracle (degree <= 8)");
  auto* fs = normalise->add_flag("--force-small", na.force_small, "Always use the backtrack");
  auto* fl = normalise->add_flag("--force-large", na.force_large, "Require the large-group pipeline");
  fs->excludes(fl);
  normalise->add_option("--budget", na.budget, std::string("Backtrack node budget (default $") + kBudgetEnv + ", else unlimited)");
  normalise->add_option("--threads", na.threads, "Backtrack worker threads")->check(CLI::PositiveNumber);
  normalise->add_option("--format", na.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, format = "text";
  auto* cls = app.add_subcommand("classify", "Report the small / large / almost simple / Mathieu flags");
  cls->add_option("file", file, "Group file")->required();
  cls->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* soc = app.add_subcommand("socle", "Print the socle and its simple factors");
  soc->add_option("file", file, "Group file")->required();

  auto* base = app.add_subcommand("base", "Print the greedy and the small base");
  base->add_option("file", file, "Group file")->required();

  auto* oc = app.add_subcommand("oracle-check", "Compare the normaliser with brute force over S_n");
  oc->add_option("file", file, "Group file")->required();

  std::string dir;
  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "CSV table over every *.grp file in a directory");
  bench->add_option("dir", dir, "Corpus directory")->required();
  bench->add_flag("--oracle", bo.oracle, "Cross-check each row with the oracle where possible");
  bench->add_option("--threads", bo.threads, "Files processed in parallel")->check(CLI::PositiveNumber);
  bench->add_option("--budget", bo.node_budget, "Backtrack node budget per file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  return guarded(
      [&]() -> int {
        if (*normalise) return cmd_normalise(na, out, err);
        if (*cls) return cmd_classify(file, format, out);
        if (*soc) return cmd_socle(file, out);
        if (*base) return cmd_base(file, out);
        if (*oc) return cmd_oracle_check(file, out, err);
        if (bench->get_option("--budget")->count() == 0) bo.node_budget = default_budget();
        out << bench_csv(bench_directory(dir, bo));
        return kOk;
      },
      err);
}

}  // namespace primnorm::cli
