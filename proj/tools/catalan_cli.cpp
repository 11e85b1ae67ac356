#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catalan/bool_matrix.hpp"
#include "catalan/checks.hpp"
#include "catalan/counting.hpp"
#include "catalan/errors.hpp"
#include "catalan/identities.hpp"
#include "catalan/representations.hpp"
#include "catalan/semiring.hpp"
#include "catalan/term.hpp"
#include "catalan/transformation.hpp"
#include "catalan/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace catalan;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& content, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw CatalanError("cannot open output file '" + output_path + "'");
  out << content;
}

unsigned long long resolve_budget(std::optional<unsigned long long> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CATALAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      throw CatalanError("CATALAN_BUDGET is not a number: '" +
                         std::string(env) + "'");
    return v;
  }
  return CheckOptions{}.budget;
}

std::vector<std::string> row_strings(const BoolMatrix& m) {
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(m.n()));
  for (int i = 1; i <= m.n(); ++i) {
    std::string row;
    for (int j = 1; j <= m.n(); ++j) row.push_back(m.get(i, j) ? '1' : '0');
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const BoolMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (auto& r : row_strings(m)) rows.push_back(r);
  return rows;
}

MonoidClass parse_class(const std::string& text) {
  if (text == "o") return MonoidClass::O;
  if (text == "c") return MonoidClass::C;
  return MonoidClass::Cminus;
}

MatrixShape parse_shape(const std::string& text) {
  if (text == "full") return MatrixShape::Full;
  if (text == "upper") return MatrixShape::Upper;
  if (text == "lower") return MatrixShape::Lower;
  return MatrixShape::Stair;
}

ordered_json results_json(const std::vector<CheckResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results)
    arr.push_back({{"suite", r.suite},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"checked", r.checked},
                   {"detail", r.detail}});
  return arr;
}

std::string results_text(const std::vector<CheckResult>& results) {
  std::string out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out += r.passed ? "[PASS] " : "[FAIL] ";
    out += r.suite + "/" + r.name + ": " + r.detail +
           " (checked=" + std::to_string(r.checked) + ")\n";
    if (r.passed) ++passed;
  }
  out += "summary: " + std::to_string(passed) + "/" +
         std::to_string(results.size()) + " passed\n";
  return out;
}

void emit_failures_stderr(const std::vector<CheckResult>& results) {
  ordered_json failures = ordered_json::array();
  for (const auto& r : results)
    if (!r.passed)
      failures.push_back(
          {{"suite", r.suite}, {"name", r.name}, {"detail", r.detail}});
  if (!failures.empty()) {
    ordered_json doc{{"schema", 1}, {"failures", failures}};
    std::cerr << doc.dump() << "\n";
  }
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(int n, const std::string& cls, const std::string& shape,
                  const std::string& format, const std::string& output,
                  bool force) {
  ordered_json params{{"n", n}};
  std::vector<std::string> lines;
  std::uint64_t expected = 0;
  if (!cls.empty()) {
    params["class"] = cls;
    MonoidClass mc = parse_class(cls);
    for (const auto& t : enumerate_transformations(n, mc, force))
      lines.push_back(format_transformation(t));
    expected = mc == MonoidClass::O ? order_preserving_count(n)
                                    : catalan_number(n);
  } else {
    params["shape"] = shape;
    MatrixShape ms = parse_shape(shape);
    for (const auto& m : enumerate_matrices(n, ms, force)) {
      std::string block;
      for (auto& row : row_strings(m)) {
        block += row;
        block += '\n';
      }
      block.pop_back();
      lines.push_back(std::move(block));
    }
    if (ms == MatrixShape::Stair) {
      expected = catalan_number(n);
    } else {
      int free_bits = ms == MatrixShape::Full ? n * n : n * (n + 1) / 2;
      expected = std::uint64_t{1} << free_bits;
    }
  }
  const bool count_ok = lines.size() == expected;

  if (format == "json") {
    ordered_json elements = ordered_json::array();
    for (auto& l : lines) elements.push_back(l);
    ordered_json doc{{"schema", 1},
                     {"command", "enumerate"},
                     {"parameters", params},
                     {"count", lines.size()},
                     {"expected", expected},
                     {"elements", elements}};
    emit(doc.dump(2) + "\n", output);
  } else {
    std::string body;
    const bool blocks = cls.empty();
    for (auto& l : lines) {
      body += l;
      body += '\n';
      if (blocks) body += '\n';
    }
    if (blocks && !body.empty()) body.pop_back();
    emit(body, output);
    std::cerr << "count: " << lines.size() << " expected: " << expected << "\n";
  }
  return count_ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- represent

int cmd_represent(const std::string& input, const std::string& map_name,
                  const std::string& format, const std::string& output) {
  Transformation t = parse_transformation(input);
  BoolMatrix m(1);
  std::optional<Partition> partition;
  if (map_name == "action") {
    m = action_matrix(t);
  } else if (map_name == "stair") {
    m = stair_matrix(t);
  } else if (map_name == "unary") {
    m = unary_matrix(t);
    partition = matrix_to_partition(m);
  } else {
    m = unary_matrix_conjugated(t);
  }

  if (format == "json") {
    ordered_json doc{{"schema", 1},
                     {"command", "represent"},
                     {"parameters",
                      {{"transformation", input}, {"map", map_name}}},
                     {"matrix", matrix_json(m)}};
    if (partition) {
      ordered_json parts = ordered_json::array();
      for (int p : partition->parts) parts.push_back(p);
      doc["partition"] = parts;
    }
    emit(doc.dump(2) + "\n", output);
  } else {
    std::string body = m.to_text() + "\n";
    if (partition) body += "partition: " + partition->to_text() + "\n";
    emit(body, output);
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const std::string& theorem, int n, const std::string& format,
               const std::string& output, const CheckOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  auto results = verify_suite(theorem, n, opts);
  const bool ok = all_passed(results);

  if (format == "json") {
    ordered_json doc{{"schema", 1},
                     {"command", "verify"},
                     {"parameters", {{"theorem", theorem}, {"n", n}}},
                     {"results", results_json(results)},
                     {"all_passed", ok},
                     {"elapsed_ms", elapsed_ms(start)}};
    emit(doc.dump(2) + "\n", output);
  } else {
    emit(results_text(results), output);
  }
  if (!ok) emit_failures_stderr(results);
  return ok ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- identity

FiniteSemiring build_target(const std::string& target, int n, bool force) {
  if (target == "upper" || target == "lower" || target == "full" ||
      target == "stair") {
    if (n <= 0)
      throw DomainError("target '" + target + "' needs --n for the matrix size");
    return semiring_from_matrices(n, parse_shape(target), force);
  }
  auto with_prefix = [&](const std::string& prefix,
                         MonoidClass cls) -> std::optional<FiniteSemiring> {
    if (target.rfind(prefix, 0) != 0) return std::nullopt;
    int size = 0;
    try {
      size = std::stoi(target.substr(prefix.size()));
    } catch (const std::exception&) {
      throw DomainError("bad chain size in target '" + target + "'");
    }
    return semiring_from_transformations(size, cls, force);
  };
  if (auto s = with_prefix("csemiring:", MonoidClass::C)) return *s;
  if (auto s = with_prefix("cminussemiring:", MonoidClass::Cminus)) return *s;
  if (auto s = with_prefix("osemiring:", MonoidClass::O)) return *s;
  throw DomainError(
      "unknown target '" + target +
      "'; expected upper|lower|full|stair|csemiring:N|cminussemiring:N|osemiring:N");
}

int cmd_identity(const std::string& text, int eq, int n,
                 const std::string& target, const std::string& format,
                 const std::string& output, bool force,
                 const CheckOptions& opts) {
  Identity id = [&] {
    if (eq == 1) return power_stability_identity(n);
    if (eq == 2) return mixed_power_identity(n);
    return parse_identity(text);
  }();
  FiniteSemiring s = build_target(target, n, force);

  auto start = std::chrono::steady_clock::now();
  CheckReport report = check_identity(s, id, opts);

  ordered_json displayed = ordered_json::object();
  std::string displayed_text;
  if (eq == 1) {
    Transformation alpha = power_stability_witness(n);
    int first = power(alpha, static_cast<unsigned>(n)).image_of(1);
    int second = power(alpha, static_cast<unsigned>(n) + 1).image_of(1);
    bool consistent = first == n + 1 && second == n + 2;
    displayed = {{"witness", format_transformation(alpha)},
                 {"point-1-image-at-n", first},
                 {"point-1-image-at-n+1", second},
                 {"consistent", consistent}};
    displayed_text = "displayed witness " + format_transformation(alpha) +
                     ": 1 -> " + std::to_string(first) + " then " +
                     std::to_string(second) +
                     (consistent ? " (consistent)" : " (INCONSISTENT)") + "\n";
  } else if (eq == 2) {
    auto [beta, gamma] = mixed_power_witnesses(n);
    auto home = semiring_from_transformations(n + 1, MonoidClass::C, force);
    std::size_t bi = *home.index_of(format_transformation(beta));
    std::size_t gi = *home.index_of(format_transformation(gamma));
    std::size_t lhs = eval_term(home, id.lhs, {{'x', bi}, {'y', gi}});
    std::size_t rhs = eval_term(home, id.rhs, {{'x', bi}, {'y', gi}});
    int li = parse_transformation(home.label(lhs)).image_of(1);
    int ri = parse_transformation(home.label(rhs)).image_of(1);
    bool consistent = lhs != rhs && li == n && ri == n + 1;
    displayed = {{"witness-x", format_transformation(beta)},
                 {"witness-y", format_transformation(gamma)},
                 {"lhs-image-of-1", li},
                 {"rhs-image-of-1", ri},
                 {"consistent", consistent}};
    displayed_text = "displayed pair x=" + format_transformation(beta) +
                     " y=" + format_transformation(gamma) + ": sides send 1 to " +
                     std::to_string(li) + " and " + std::to_string(ri) +
                     (consistent ? " (consistent)" : " (INCONSISTENT)") + "\n";
  }

  ordered_json witness_doc;
  std::string witness_text_line;
  if (report.witness) {
    ordered_json assignment = ordered_json::array();
    for (const auto& [var, idx] : report.witness->assignment) {
      assignment.push_back(
          {{"variable", std::string(1, var)}, {"element", s.label(idx)}});
      witness_text_line +=
          std::string(1, var) + "=" + s.label(idx) + " ";
    }
    witness_doc = {{"assignment", assignment},
                   {"lhs", s.label(report.witness->lhs_value)},
                   {"rhs", s.label(report.witness->rhs_value)}};
    witness_text_line += "evaluates to " + s.label(report.witness->lhs_value) +
                         " vs " + s.label(report.witness->rhs_value);
  }

  if (format == "json") {
    ordered_json params{{"identity", id.to_text()}, {"target", target}};
    if (eq != 0) {
      params["eq"] = eq;
      params["n"] = n;
    }
    ordered_json doc{{"schema", 1},
                     {"command", "identity"},
                     {"parameters", params},
                     {"holds", report.holds},
                     {"checked", report.checked},
                     {"elapsed_ms", elapsed_ms(start)}};
    if (report.witness) doc["witness"] = witness_doc;
    if (eq != 0) doc["displayed_witnesses"] = displayed;
    emit(doc.dump(2) + "\n", output);
  } else {
    std::string body = "identity: " + id.to_text() + "\n";
    body += "target: " + s.name() + " (" + std::to_string(s.size()) +
            " elements)\n";
    body += std::string("verdict: ") + (report.holds ? "holds" : "fails") +
            " after " + std::to_string(report.checked) + " assignments\n";
    if (report.witness) body += "witness: " + witness_text_line + "\n";
    body += displayed_text;
    emit(body, output);
  }
  if (report.witness) {
    ordered_json doc{{"schema", 1}, {"witness", witness_doc}};
    std::cerr << doc.dump() << "\n";
  }
  return report.holds ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------------- hasse

int cmd_hasse(const std::string& cls, int n, const std::string& format,
              const std::string& output, bool force) {
  MonoidClass mc = parse_class(cls);
  if (!force) {
    if (mc == MonoidClass::O && n > 4)
      throw ResourceLimitError(
          "hasse caps the order-preserving family at n = 4 (35 elements); "
          "pass --force to lift");
    if (mc != MonoidClass::O && n > 6)
      throw ResourceLimitError(
          "hasse caps the extensive/decreasing families at n = 6; pass "
          "--force to lift");
  }
  auto elems = enumerate_transformations(n, mc, force);
  auto edges = hasse_edges(elems);
  std::sort(edges.begin(), edges.end());

  if (format == "json") {
    ordered_json nodes = ordered_json::array();
    for (const auto& t : elems) nodes.push_back(format_transformation(t));
    ordered_json edge_list = ordered_json::array();
    for (auto [i, j] : edges)
      edge_list.push_back({format_transformation(elems[i]),
                           format_transformation(elems[j])});
    ordered_json doc{{"schema", 1},
                     {"command", "hasse"},
                     {"parameters", {{"class", cls}, {"n", n}}},
                     {"nodes", nodes},
                     {"edges", edge_list}};
    emit(doc.dump(2) + "\n", output);
    return kExitOk;
  }

  // DOT, drawn upward with nodes layered by the sum of images so the
  // picture matches the usual hand-drawn diagram.
  std::map<int, std::vector<std::string>> layers;
  for (const auto& t : elems) {
    int sum = 0;
    for (int i = 1; i <= t.n(); ++i) sum += t.image_of(i);
    layers[sum].push_back(format_transformation(t));
  }
  std::string body = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& [sum, names] : layers) {
    body += "  { rank=same;";
    for (const auto& name : names) body += " \"" + name + "\";";
    body += " }\n";
  }
  for (auto [i, j] : edges)
    body += "  \"" + format_transformation(elems[i]) + "\" -> \"" +
            format_transformation(elems[j]) + "\";\n";
  body += "}\n";
  emit(body, output);
  return kExitOk;
}

// -------------------------------------------------------------------- young

int cmd_young(int n, bool count_only, const std::string& format,
              const std::string& output, bool force) {
  const std::uint64_t expected = catalan_number(n + 1);
  if (count_only) {
    const std::uint64_t counted = count_staircase_partitions(n);
    if (format == "json") {
      ordered_json doc{{"schema", 1},
                       {"command", "young"},
                       {"parameters", {{"n", n}, {"count_only", true}}},
                       {"count", counted},
                       {"expected", expected}};
      emit(doc.dump(2) + "\n", output);
    } else {
      emit(std::to_string(counted) + "\n", output);
      std::cerr << "expected: " << expected << "\n";
    }
    return counted == expected ? kExitOk : kExitCheckFailed;
  }

  if (n > 6 && !force)
    throw ResourceLimitError(
        "young caps the full listing at n = 6 (429 entries); use "
        "--count-only or --force");
  auto maps = enumerate_transformations(n + 1, MonoidClass::Cminus, force);

  if (format == "json") {
    ordered_json entries = ordered_json::array();
    for (const auto& a : maps) {
      BoolMatrix m = unary_matrix(a);
      Partition p = matrix_to_partition(m);
      ordered_json parts = ordered_json::array();
      for (int x : p.parts) parts.push_back(x);
      entries.push_back({{"transformation", format_transformation(a)},
                         {"partition", parts},
                         {"matrix", matrix_json(m)}});
    }
    ordered_json doc{{"schema", 1},
                     {"command", "young"},
                     {"parameters", {{"n", n}}},
                     {"count", maps.size()},
                     {"expected", expected},
                     {"entries", entries}};
    emit(doc.dump(2) + "\n", output);
  } else {
    std::string body;
    for (const auto& a : maps) {
      BoolMatrix m = unary_matrix(a);
      body += format_transformation(a) + " " +
              matrix_to_partition(m).to_text() + "\n" + m.to_text() + "\n\n";
    }
    if (!body.empty()) body.pop_back();
    emit(body, output);
    std::cerr << "count: " << maps.size() << " expected: " << expected << "\n";
  }
  return maps.size() == expected ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- complement

int cmd_complement(const std::string& input, const std::string& format,
                   const std::string& output) {
  Transformation a = parse_transformation(input);
  BoolMatrix stair = stair_matrix(a);
  BoolMatrix negated = stair.negate_upper_triangle();
  BoolMatrix cropped = negated.crop_first_col_last_row();
  Transformation dual = bar(a);
  BoolMatrix unary = unary_matrix(dual);
  BoolMatrix conjugated = unary.antidiagonal_conjugate();
  const bool agree = cropped == conjugated;

  if (format == "json") {
    ordered_json doc{{"schema", 1},
                     {"command", "complement"},
                     {"parameters", {{"transformation", input}}},
                     {"stages",
                      {{"input", format_transformation(a)},
                       {"stair", matrix_json(stair)},
                       {"negated", matrix_json(negated)},
                       {"cropped", matrix_json(cropped)},
                       {"bar", format_transformation(dual)},
                       {"unary", matrix_json(unary)},
                       {"conjugated", matrix_json(conjugated)}}},
                     {"agree", agree}};
    emit(doc.dump(2) + "\n", output);
  } else {
    std::string body;
    body += "input " + format_transformation(a) + "\n";
    body += "stair:\n" + stair.to_text() + "\n";
    body += "negated:\n" + negated.to_text() + "\n";
    body += "cropped:\n" + cropped.to_text() + "\n";
    body += "bar " + format_transformation(dual) + "\n";
    body += "unary:\n" + unary.to_text() + "\n";
    body += "conjugated:\n" + conjugated.to_text() + "\n";
    body += std::string("agreement: ") + (agree ? "yes" : "no") + "\n";
    emit(body, output);
  }
  return agree ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- report-all

int cmd_report_all(int n_max, const std::string& format,
                   const std::string& output, const CheckOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  auto results = report_all(n_max, opts);
  const bool ok = all_passed(results);

  if (format == "json") {
    ordered_json doc{{"schema", 1},
                     {"command", "report-all"},
                     {"parameters", {{"n_max", n_max}}},
                     {"results", results_json(results)},
                     {"all_passed", ok},
                     {"elapsed_ms", elapsed_ms(start)}};
    emit(doc.dump(2) + "\n", output);
  } else {
    emit(results_text(results), output);
  }
  if (!ok) emit_failures_stderr(results);
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Catalan monoid and Boolean matrix semiring toolkit: enumeration, "
      "matrix representations, and exhaustive verification"};
  app.require_subcommand(1);

  std::string format = "text", output, cls, shape, map_name, target, input,
              theorem, identity_text;
  int n = 0, n_max = 3, eq = 0, jobs = 1;
  bool force = false, count_only = false;
  std::optional<unsigned long long> budget;

  auto add_common = [&](CLI::App* cmd, bool with_json = true) {
    if (with_json)
      cmd->add_option("--format", format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output", output, "write the report to a file");
  };

  auto* c_enum = app.add_subcommand("enumerate", "list a carrier");
  c_enum->add_option("--n", n, "chain or matrix size")->required();
  auto* opt_class =
      c_enum->add_option("--class", cls, "o, c, or cminus")
          ->check(CLI::IsMember({"o", "c", "cminus"}));
  auto* opt_shape =
      c_enum->add_option("--shape", shape, "full, upper, lower, or stair")
          ->check(CLI::IsMember({"full", "upper", "lower", "stair"}));
  opt_class->excludes(opt_shape);
  c_enum->add_flag("--force", force, "lift the enumeration cap");
  add_common(c_enum);

  auto* c_rep = app.add_subcommand("represent", "matrix image of one map");
  c_rep->add_option("transformation", input, "digit string, e.g. 1244")
      ->required();
  c_rep->add_option("--map", map_name,
                    "action, stair, unary, or unary-conjugated")
      ->required()
      ->check(CLI::IsMember({"action", "stair", "unary", "unary-conjugated"}));
  add_common(c_rep);

  auto* c_verify = app.add_subcommand("verify", "run one verification suite");
  c_verify->add_option("--theorem", theorem, "suite token")
      ->required()
      ->check(CLI::IsMember(verify_tokens()));
  c_verify->add_option("--n", n, "chain or matrix size")->required();
  c_verify->add_option("--jobs", jobs, "worker threads");
  c_verify->add_option("--budget", budget, "assignment/search budget");
  add_common(c_verify);

  auto* c_id = app.add_subcommand("identity", "check an identity exhaustively");
  c_id->add_option("identity", identity_text,
                   "e.g. \"x^2 y^2 = x^3 y^2 + x^2 y^3\"");
  c_id->add_option("--eq", eq,
                   "built-in law: 1 = power stability, 2 = mixed power")
      ->check(CLI::IsMember({1, 2}));
  c_id->add_option("--n", n, "law level / matrix size");
  c_id->add_option("--target", target,
                   "upper|lower|full|stair|csemiring:N|cminussemiring:N|osemiring:N")
      ->required();
  c_id->add_option("--jobs", jobs, "worker threads");
  c_id->add_option("--budget", budget, "assignment budget");
  c_id->add_flag("--force", force, "lift enumeration caps");
  add_common(c_id);

  auto* c_hasse = app.add_subcommand("hasse", "covering-relation diagram");
  c_hasse->add_option("--class", cls, "o, c, or cminus")
      ->required()
      ->check(CLI::IsMember({"o", "c", "cminus"}));
  c_hasse->add_option("--n", n, "chain size")->required();
  c_hasse->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  c_hasse->add_option("--output", output, "write the graph to a file");
  c_hasse->add_flag("--force", force, "lift the size cap");

  auto* c_young = app.add_subcommand("young",
                                     "staircase partitions with matrices");
  c_young->add_option("--n", n, "staircase size")->required();
  c_young->add_flag("--count-only", count_only, "print only the count");
  c_young->add_flag("--force", force, "lift the listing cap");
  add_common(c_young);

  auto* c_comp = app.add_subcommand("complement",
                                    "six-stage complementation walkthrough");
  c_comp->add_option("transformation", input, "extensive map, e.g. 1244")
      ->required();
  add_common(c_comp);

  auto* c_all = app.add_subcommand("report-all", "every suite at every size");
  c_all->add_option("--n-max", n_max, "largest size to verify");
  c_all->add_option("--jobs", jobs, "worker threads");
  c_all->add_option("--budget", budget, "assignment/search budget");
  add_common(c_all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CheckOptions opts;
    opts.budget = resolve_budget(budget);
    opts.jobs = jobs;
    if (c_enum->parsed()) {
      if (cls.empty() && shape.empty())
        throw DomainError("enumerate needs --class or --shape");
      return cmd_enumerate(n, cls, shape, format, output, force);
    }
    if (c_rep->parsed()) return cmd_represent(input, map_name, format, output);
    if (c_verify->parsed())
      return cmd_verify(theorem, n, format, output, opts);
    if (c_id->parsed()) {
      if ((eq == 0) == identity_text.empty())
        throw DomainError("identity needs exactly one of the identity text "
                          "or --eq");
      if (eq != 0 && n <= 0)
        throw DomainError("--eq needs --n for the law level");
      return cmd_identity(identity_text, eq, n, target, format, output, force,
                          opts);
    }
    if (c_hasse->parsed()) {
      if (format == "text") format = "dot";
      return cmd_hasse(cls, n, format, output, force);
    }
    if (c_young->parsed())
      return cmd_young(n, count_only, format, output, force);
    if (c_comp->parsed()) return cmd_complement(input, format, output);
    if (c_all->parsed()) return cmd_report_all(n_max, format, output, opts);
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CatalanError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
