#include "powsum/cli.hpp"

#include <chrono>
#include <cctype>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "powsum/combinatorics.hpp"
#include "powsum/concerted.hpp"
#include "powsum/parametrize.hpp"

namespace powsum {

using nlohmann::json;

static constexpr const char* kVersion = "0.1.0";

ParsedLiteral parse_solution_literal(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw LiteralParseError(std::string("expected '") + c + "' at offset " +
                                  std::to_string(pos) + " in \"" + text + "\"",
                              pos);
    ++pos;
  };
  auto read_u64 = [&]() -> Term {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw LiteralParseError("expected an integer at offset " +
                                  std::to_string(pos) + " in \"" + text + "\"",
                              pos);
    return std::stoull(text.substr(start, pos - start));
  };
  auto read_side = [&](char stop) {
    std::vector<Term> side;
    skip_ws();
    if (pos < text.size() && text[pos] == stop)
      throw LiteralParseError("empty side at offset " + std::to_string(pos) +
                                  " in \"" + text + "\"",
                              pos);
    for (;;) {
      side.push_back(read_u64());
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      return side;
    }
  };

  ParsedLiteral out;
  expect('(');
  out.lhs = read_side(';');
  expect(';');
  out.rhs = read_side(')');
  expect(')');
  expect('^');
  Term n = read_u64();
  if (n < 2 || n > 64)
    throw LiteralParseError("exponent " + std::to_string(n) +
                                " out of range in \"" + text + "\"",
                            pos);
  out.n = static_cast<unsigned>(n);
  skip_ws();
  if (pos < text.size()) {
    expect('=');
    skip_ws();
    if (pos >= text.size() || text[pos] != '0')
      throw LiteralParseError("expected 0 after '=' at offset " +
                                  std::to_string(pos) + " in \"" + text + "\"",
                              pos);
    ++pos;
    skip_ws();
  }
  if (pos < text.size())
    throw LiteralParseError("trailing characters at offset " +
                                std::to_string(pos) + " in \"" + text + "\"",
                            pos);
  return out;
}

std::string render_solution_literal(unsigned n, const std::vector<Term>& lhs,
                                    const std::vector<Term>& rhs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < lhs.size(); ++i) out << (i ? "," : "") << lhs[i];
  out << ";";
  for (std::size_t i = 0; i < rhs.size(); ++i) out << (i ? "," : "") << rhs[i];
  out << ")^" << n << " = 0";
  return out.str();
}

std::string render_solution_literal(const Solution& s) {
  return render_solution_literal(s.n, s.lhs, s.rhs);
}

namespace {

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json solution_row(const Solution& s, const std::string& algo,
                  std::uint64_t seed, const std::string& manifest_id) {
  json row;
  row["type"] = "solution";
  row["n"] = s.n;
  row["lhs"] = s.lhs;
  row["rhs"] = s.rhs;
  row["r"] = s.r_value;
  row["nontrivial"] = s.nontrivial;
  row["algo"] = algo;
  row["seed"] = seed;
  row["timestamp"] = now_iso8601();
  row["manifest"] = manifest_id;
  return row;
}

// Solution rows from a line-delimited JSON file, deduplicated by
// canonical form and re-verified; bad lines are reported, not fatal.
std::vector<Solution> load_ledger_rows(const std::string& path,
                                       std::ostream& err) {
  std::vector<Solution> out;
  std::set<std::string> seen;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || row.value("type", "") != "solution") continue;
    try {
      unsigned n = row.at("n").get<unsigned>();
      auto lhs = row.at("lhs").get<std::vector<Term>>();
      auto rhs = row.at("rhs").get<std::vector<Term>>();
      VerifyOutcome check = verify(n, lhs, rhs);
      if (!check.equal) {
        err << path << ":" << lineno << ": power sums differ, row dropped\n";
        continue;
      }
      if (seen.insert(canonical_key(*check.solution)).second)
        out.push_back(*check.solution);
    } catch (const std::exception& e) {
      err << path << ":" << lineno << ": " << e.what() << ", row dropped\n";
    }
  }
  return out;
}

void append_rows(const std::string& path, const std::vector<json>& rows) {
  std::ofstream out(path, std::ios::app);
  if (!out)
    throw std::runtime_error("cannot open ledger file " + path +
                             " for append");
  for (const auto& row : rows) out << row.dump() << "\n";
}

struct GlobalFlags {
  bool json_out = false;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::string ledger_path;
};

int cmd_verify(const GlobalFlags& g, const std::string& literal) {
  ParsedLiteral lit = parse_solution_literal(literal);
  VerifyOutcome out = verify(lit.n, lit.lhs, lit.rhs);
  if (g.json_out) {
    json rep;
    rep["equal"] = out.equal;
    rep["lhs_sum"] = out.lhs_sum.get_str();
    rep["rhs_sum"] = out.rhs_sum.get_str();
    rep["difference"] = out.difference.get_str();
    if (out.solution) {
      rep["r"] = out.solution->r_value;
      rep["nontrivial"] = out.solution->nontrivial;
      rep["canonical"] = render_solution_literal(*out.solution);
    }
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "lhs sum = " << out.lhs_sum.get_str() << "\n"
              << "rhs sum = " << out.rhs_sum.get_str() << "\n";
    if (out.equal) {
      std::cout << "equal; " << render_solution_literal(*out.solution)
                << "  r = " << out.solution->r_value
                << (out.solution->nontrivial ? ", nontrivial" : ", trivial")
                << "\n";
    } else {
      std::cout << "NOT equal; difference = " << out.difference.get_str()
                << "\n";
    }
  }
  return out.equal ? 0 : 1;
}

int cmd_search(const GlobalFlags& g, SearchConfig cfg, const std::string& algo,
               const std::string& out_path) {
  cfg.threads = g.threads;
  cfg.seed = g.seed;
  cfg.validate();

  std::ostringstream manifest_id;
  manifest_id << std::hex
              << std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::system_clock::now().time_since_epoch())
                     .count()
              << "-" << cfg.seed;
  json manifest;
  manifest["type"] = "manifest";
  manifest["id"] = manifest_id.str();
  manifest["subcommand"] = "search";
  manifest["params"] = {
      {"n", cfg.n},          {"algo", algo},
      {"a_max", cfg.a_max},  {"c", cfg.c},
      {"iter_cap", cfg.iter_cap},
      {"mode", cfg.mode == SearchMode::Randomized ? "randomized" : "exhaustive"},
      {"samples", cfg.samples},
      {"nontrivial_only", cfg.nontrivial_only},
      {"backtrack", cfg.backtrack},
      {"threads", cfg.threads},
  };
  manifest["seed"] = cfg.seed;
  manifest["version"] = kVersion;
  manifest["started"] = now_iso8601();

  std::vector<Solution> found;
  SearchStats stats =
      run_search(cfg, [&](const Solution& s) { found.push_back(s); });
  manifest["finished"] = now_iso8601();

  std::vector<json> rows;
  rows.push_back(manifest);
  for (const auto& s : found)
    rows.push_back(solution_row(s, algo, cfg.seed, manifest_id.str()));
  if (!out_path.empty()) append_rows(out_path, rows);
  if (!g.ledger_path.empty()) append_rows(g.ledger_path, rows);

  if (g.json_out) {
    json rep;
    rep["manifest"] = manifest;
    rep["stats"] = {{"tuples_tried", stats.tuples_tried},
                    {"traces_solved", stats.traces_solved},
                    {"emitted", stats.emitted},
                    {"nontrivial", stats.nontrivial}};
    if (stats.best_r) rep["stats"]["best_r"] = *stats.best_r;
    json sols = json::array();
    for (const auto& s : found)
      sols.push_back({{"display", render_solution_literal(s)},
                      {"r", s.r_value},
                      {"nontrivial", s.nontrivial}});
    rep["solutions"] = sols;
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const auto& s : found)
      std::cout << render_solution_literal(s) << "  r = " << s.r_value
                << (s.nontrivial ? "" : "  (trivial)") << "\n";
    std::cout << "tuples " << stats.tuples_tried << ", solved "
              << stats.traces_solved << ", emitted " << stats.emitted
              << ", nontrivial " << stats.nontrivial;
    if (stats.best_r) std::cout << ", best r " << *stats.best_r;
    std::cout << "\n";
  }
  return 0;
}

ConcertedSet build_recipe(const std::string& recipe, unsigned n,
                          std::size_t l) {
  if (recipe == "pair") return n == 2 ? build_n2() : build_pair(n);
  if (recipe == "triple") return build_triple(n);
  if (recipe == "n2") return build_n2();
  if (recipe == "reference3") return reference_triple_n3();
  if (recipe == "extend-pair")
    return extend(n == 2 ? build_n2() : build_pair(n), l);
  if (recipe == "extend-triple") return extend(build_triple(n), l);
  if (recipe == "mixed")
    return mixed_tensor(build_triple(n), n == 2 ? build_n2() : build_pair(n),
                        l);
  throw CLI::ValidationError("--recipe", "unknown recipe " + recipe);
}

json certificate_json(const ConcertedSet& set) {
  json rep;
  rep["n"] = set.n();
  rep["k"] = set.k();
  rep["dim"] = set.dim();
  rep["provenance"] = to_string(set.provenance());
  rep["status"] = to_string(set.status());
  if (set.certificate()) {
    const Certificate& c = *set.certificate();
    if (c.power_failure) rep["power_failure"] = *c.power_failure;
    if (c.pattern_failure) rep["pattern_failure"] = c.pattern_failure->str();
  }
  return rep;
}

int cmd_concerted(const GlobalFlags& g, const std::string& recipe, unsigned n,
                  std::size_t l, const std::string& input,
                  const std::string& out_path, bool show) {
  ConcertedSet set = [&] {
    if (!input.empty()) {
      std::ifstream in(input);
      if (!in) throw std::runtime_error("cannot read " + input);
      std::stringstream buf;
      buf << in.rdbuf();
      return deserialize(buf.str());
    }
    return build_recipe(recipe, n, l);
  }();
  if (set.status() == CertStatus::Unchecked) set.attach(certify(set, g.threads));

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << serialize(set);
  }

  if (g.json_out) {
    std::cout << certificate_json(set).dump(2) << "\n";
  } else {
    std::cout << "k = " << set.k() << " matrices of dimension " << set.dim()
              << " over order " << set.n() << " (" << to_string(set.provenance())
              << "): " << to_string(set.status()) << "\n";
    if (set.certificate() && set.certificate()->pattern_failure)
      std::cout << "first failing pattern "
                << set.certificate()->pattern_failure->str() << "\n";
    if (set.certificate() && set.certificate()->power_failure)
      std::cout << "matrix " << *set.certificate()->power_failure
                << " power condition fails\n";
    if (show)
      for (std::size_t i = 0; i < set.k(); ++i)
        std::cout << "matrix " << i << ":\n" << set.matrices()[i].str();
  }
  return set.status() == CertStatus::Verified ? 0 : 1;
}

int cmd_parametrize(const GlobalFlags& g, unsigned n, const std::string& psi_text,
                    const std::string& method, bool rational_only) {
  std::vector<CycInt> psi;
  {
    std::stringstream ss(psi_text);
    std::string part;
    while (std::getline(ss, part, ';'))
      if (!part.empty()) psi.push_back(CycInt::parse(part, n));
  }
  ParametrizedSolution sol;
  std::optional<RouteComparison> routes;
  if (method == "closed") {
    sol = closed_form_n3(psi);
    routes = compare_n3_routes(psi);
  } else if (n == 2) {
    sol = cramer_parametrize(build_n2(), psi);
  } else if (n == 3) {
    sol = cramer_parametrize(reference_triple_n3(), psi);
  } else {
    throw CLI::ValidationError(
        "--n", "square concerted sets are available for n = 2 and n = 3");
  }
  bool identity = power_identity_holds(sol);
  RationalSlice slice = rational_slice(sol);

  json rep;
  rep["n"] = sol.n;
  rep["method"] = method;
  rep["identity_holds"] = identity;
  json xs = json::array();
  for (const auto& x : sol.xs) xs.push_back(x.str());
  rep["xs"] = xs;
  rep["y"] = sol.y.str();
  rep["rational"] = slice.rational;
  if (slice.rational) {
    json rx = json::array();
    for (const auto& x : slice.xs) rx.push_back(x.get_str());
    rep["rational_xs"] = rx;
    rep["rational_y"] = slice.y.get_str();
  } else {
    rep["nonrational_components"] = slice.nonrational;
  }
  if (routes && routes->factor)
    rep["factor_vs_cramer"] = routes->factor->str();

  if (rational_only && !slice.rational) {
    if (g.json_out) std::cout << rep.dump(2) << "\n";
    else
      std::cout << "not rational; offending components: "
                << json(slice.nonrational).dump() << "\n";
    return 1;
  }

  if (g.json_out) {
    std::cout << rep.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < sol.xs.size(); ++i)
      std::cout << "x" << (i + 1) << " = " << sol.xs[i].str() << "\n";
    std::cout << "y  = " << sol.y.str() << "\n";
    std::cout << "power identity: " << (identity ? "holds" : "FAILS") << "\n";
    if (routes && routes->factor)
      std::cout << "closed form = (" << routes->factor->str(false)
                << ") * cramer\n";
    if (slice.rational) {
      std::vector<Term> lu, ru;
      bool fits = true;
      for (const auto& x : slice.xs) fits = fits && fits_u64(abs(x));
      fits = fits && fits_u64(abs(slice.y));
      if (fits) {
        // Display form puts |x_i| left and |y| right; signs fold across.
        for (const auto& x : slice.xs)
          if (x != 0) lu.push_back(to_u64(abs(x)));
        ru.push_back(to_u64(abs(slice.y)));
        std::cout << "rational slice: "
                  << render_solution_literal(sol.n, lu, ru) << "\n";
      }
    }
  }
  return identity ? 0 : 1;
}

int cmd_bounds(const GlobalFlags& g, unsigned n) {
  BoundWitness w = bound_witness(n);
  if (g.json_out) {
    json rep;
    rep["n"] = w.n;
    rep["k0"] = w.k0;
    rep["a_min"] = w.a_min.get_str();
    rep["tuples_at_a"] = w.tuples_at_a.get_str();
    rep["value_cap_at_a"] = w.value_cap_at_a.get_str();
    rep["implied_bound"] = w.implied_bound;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "k0 = " << w.k0 << ", minimal A = " << w.a_min.get_str()
              << " (" << w.tuples_at_a.get_str() << " tuples > "
              << w.value_cap_at_a.get_str() << "), implied bound "
              << w.implied_bound << "\n";
  }
  return 0;
}

int cmd_residue(const GlobalFlags& g, unsigned n, unsigned m) {
  ResidueHistogram h = residue_distribution(n, m);
  if (g.json_out) {
    json rep;
    rep["n"] = h.n;
    rep["m"] = h.m;
    json counts = json::array();
    for (const auto& c : h.counts) counts.push_back(c.get_str());
    rep["counts"] = counts;
    rep["uniform"] = h.uniform;
    rep["hypothesis_ok"] = h.hypothesis_ok;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "counts:";
    for (const auto& c : h.counts) std::cout << " " << c.get_str();
    std::cout << "\n"
              << (h.uniform ? "uniform" : "NOT uniform")
              << (h.hypothesis_ok ? "" : " (hypothesis violated: composite modulus)")
              << "\n";
  }
  return h.uniform || !h.hypothesis_ok ? 0 : 1;
}

int cmd_identity(const GlobalFlags& g, const std::string& a_text) {
  std::vector<BigInt> a;
  std::stringstream ss(a_text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) a.emplace_back(part);
  SignIdentityInstance inst = sign_identity_check(a);
  if (g.json_out) {
    json rep;
    rep["n"] = inst.n;
    rep["lhs"] = inst.lhs.get_str();
    rep["rhs"] = inst.rhs.get_str();
    rep["holds"] = inst.holds;
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << "lhs = " << inst.lhs.get_str() << "\nrhs = "
              << inst.rhs.get_str() << "\n"
              << (inst.holds ? "identity holds" : "identity FAILS") << "\n";
  }
  return inst.holds ? 0 : 1;
}

int cmd_ledger(const GlobalFlags& g, const std::string& action,
               const std::string& import_path) {
  if (g.ledger_path.empty())
    throw CLI::ValidationError("--ledger", "a ledger path is required");

  if (action == "import") {
    auto existing = load_ledger_rows(g.ledger_path, std::cerr);
    std::set<std::string> seen;
    for (const auto& s : existing) seen.insert(canonical_key(s));
    auto incoming = load_ledger_rows(import_path, std::cerr);
    std::vector<json> fresh;
    for (const auto& s : incoming)
      if (seen.insert(canonical_key(s)).second)
        fresh.push_back(solution_row(s, "import", g.seed, "import"));
    append_rows(g.ledger_path, fresh);
    std::cout << "imported " << fresh.size() << " new rows\n";
    return 0;
  }
  if (action != "show")
    throw CLI::ValidationError("ledger", "action must be show or import");

  RnLedger table = RnLedger::seeded();
  auto rows = load_ledger_rows(g.ledger_path, std::cerr);
  for (const auto& s : rows)
    if (s.nontrivial) table.update(s);

  if (g.json_out) {
    json rep = json::array();
    for (const auto& [n, e] : table.entries()) {
      json row;
      row["n"] = n;
      if (e.exact) row["exact"] = *e.exact;
      if (e.best_upper) row["best_upper"] = *e.best_upper;
      row["cap_counting"] = e.cap_counting;
      row["cap_sharpened"] = e.cap_sharpened;
      row["witnesses"] = e.witnesses;
      rep.push_back(row);
    }
    json out;
    out["entries"] = rep;
    out["linear_bound_holds_through_7"] = table.linear_bound_holds_through_7();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n   r(n)        caps (counting/sharpened)\n";
    for (const auto& [n, e] : table.entries()) {
      std::cout << n << (n < 10 ? "   " : "  ");
      if (e.exact)
        std::cout << "= " << *e.exact;
      else if (e.best_upper)
        std::cout << "<= " << *e.best_upper;
      std::cout << "       " << e.cap_counting << "/" << e.cap_sharpened
                << "\n";
    }
    std::cout << (table.linear_bound_holds_through_7()
                      ? "r(n) <= n holds for all tracked n <= 7\n"
                      : "r(n) <= n violated below 8\n");
  }
  return 0;
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"Equal sums of like powers: exact constructions and search"};
  app.require_subcommand(1);
  GlobalFlags g;
  app.add_flag("--json", g.json_out, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized modes");
  app.add_option("--threads", g.threads, "worker threads");
  app.add_option("--ledger", g.ledger_path, "line-delimited JSON solution ledger");

  // verify
  std::string literal;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution literal");
  verify_cmd->add_option("literal", literal, "e.g. \"(3,5,8;7,7)^4 = 0\"")
      ->required();

  // search
  SearchConfig cfg;
  std::string algo = "L1R3";
  std::string out_path;
  bool randomize = false;
  auto* search_cmd = app.add_subcommand("search", "greedy power-sum search");
  search_cmd->add_option("--n", cfg.n, "exponent")->required();
  search_cmd->add_option("--algo", algo, "LmRk arities, e.g. L2R3");
  search_cmd->add_option("--a-max", cfg.a_max, "left term bound");
  search_cmd->add_option("--c", cfg.c, "window shrink constant");
  search_cmd->add_option("--iter-cap", cfg.iter_cap, "iteration budget");
  search_cmd->add_flag("--randomize", randomize, "sample tuples instead of enumerating");
  search_cmd->add_option("--samples", cfg.samples, "randomized draw count");
  search_cmd->add_flag("--backtrack", cfg.backtrack, "bounded window backtracking");
  search_cmd->add_flag("--nontrivial-only", cfg.nontrivial_only,
                       "drop solutions with shared terms");
  search_cmd->add_option("--out", out_path, "append solution rows to this file");

  // concerted
  std::string recipe = "triple";
  unsigned cn = 3;
  std::size_t cl = 2;
  std::string cinput, cout_path;
  bool cshow = false;
  auto* conc_cmd = app.add_subcommand("concerted", "build or certify matrix sets");
  conc_cmd->add_option("--n", cn, "order");
  conc_cmd->add_option("--recipe", recipe,
                       "pair|triple|n2|reference3|extend-pair|extend-triple|mixed");
  conc_cmd->add_option("--l", cl, "distinguished index for tensor recipes");
  conc_cmd->add_option("--input", cinput, "certify a serialized set instead");
  conc_cmd->add_option("--out", cout_path, "write the serialized set here");
  conc_cmd->add_flag("--show", cshow, "print the matrices");

  // parametrize
  unsigned pn = 3;
  std::string psi_text, method = "cramer";
  bool rational_only = false;
  auto* par_cmd = app.add_subcommand("parametrize", "exact solution families");
  par_cmd->add_option("--n", pn, "2 or 3");
  par_cmd->add_option("--psi", psi_text, "semicolon-separated ring literals")
      ->required();
  par_cmd->add_option("--method", method, "cramer|closed");
  par_cmd->add_flag("--rational-only", rational_only,
                    "fail unless the slice is rational");

  // bounds / residue / identity
  unsigned bn = 2;
  auto* bounds_cmd = app.add_subcommand("bounds", "representation-count witness");
  bounds_cmd->add_option("--n", bn, "power")->required();

  unsigned rn = 5, rm = 2;
  auto* residue_cmd = app.add_subcommand("residue", "subset-sum residue histogram");
  residue_cmd->add_option("--n", rn, "modulus")->required();
  residue_cmd->add_option("--m", rm, "subset size")->required();

  std::string a_text;
  auto* id_cmd = app.add_subcommand("identity", "sign-matrix power identity");
  id_cmd->add_option("--a", a_text, "comma-separated integers")->required();

  // ledger
  std::string action = "show", import_path;
  auto* ledger_cmd = app.add_subcommand("ledger", "r(n) restriction table");
  ledger_cmd->add_option("action", action, "show|import");
  ledger_cmd->add_option("file", import_path, "rows to import");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify_cmd) return cmd_verify(g, literal);
    if (*search_cmd) {
      auto [m, k] = parse_algo(algo);
      cfg.m = m;
      cfg.k = k;
      cfg.mode = randomize ? SearchMode::Randomized : SearchMode::Exhaustive;
      return cmd_search(g, cfg, algo, out_path);
    }
    if (*conc_cmd) return cmd_concerted(g, recipe, cn, cl, cinput, cout_path, cshow);
    if (*par_cmd) return cmd_parametrize(g, pn, psi_text, method, rational_only);
    if (*bounds_cmd) return cmd_bounds(g, bn);
    if (*residue_cmd) return cmd_residue(g, rn, rm);
    if (*id_cmd) return cmd_identity(g, a_text);
    if (*ledger_cmd) return cmd_ledger(g, action, import_path);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LiteralParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args);
}

}  // namespace powsum
