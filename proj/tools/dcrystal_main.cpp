#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "dcrystal/dcrystal.hpp"

namespace {

using namespace dcrystal;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndefined = 2;
constexpr int kExitVerifyFailed = 3;

using Element = std::variant<Tableau, KostantPartition>;

std::string slurp(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Element read_element(const std::string& path) {
  const json j = json::parse(slurp(path));
  if (j.contains("rows")) return tableau_from_json(j);
  if (j.contains("parts")) return partition_from_json(j);
  throw std::invalid_argument("element must have \"rows\" (tableau) or \"parts\" (partition)");
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << text;
}

struct Op {
  char dir;
  int i;
};

std::vector<Op> parse_ops(const std::string& text, int n) {
  std::vector<Op> ops;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'e' && token[0] != 'f'))
      throw std::invalid_argument("operator token must look like f1 or e4: " + token);
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(token.substr(1), &used);
      if (used + 1 != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("operator token must look like f1 or e4: " + token);
    }
    if (i < 1 || i > n) throw std::invalid_argument("operator index out of range: " + token);
    ops.push_back({token[0], i});
  }
  return ops;
}

Reading reading_from(const std::string& name) {
  return name == "far" ? Reading::Far : Reading::Middle;
}

int run_gen(const std::string& realization, int n, int depth, const std::string& format,
            const std::string& reading, const std::string& out, bool force,
            std::size_t max_nodes) {
  if (!force && (n > 6 || depth > 8))
    throw std::invalid_argument("n > 6 or depth > 8 needs --force");
  Rank rank(n);
  GenLimits limits{max_nodes};
  CrystalGraph g = realization == "kostant"
                       ? generate(PartitionModel{rank}, depth, limits)
                       : generate(TableauModel{rank, reading_from(reading)}, depth, limits);
  write_out(format == "dot" ? to_dot(g) : graph_to_json(g).dump(2) + "\n", out);
  return kExitOk;
}

int run_apply(const std::string& file, const std::string& ops_text, const std::string& reading,
              const std::string& out) {
  Element elem = read_element(file);
  const int n = std::holds_alternative<Tableau>(elem) ? std::get<Tableau>(elem).n
                                                      : std::get<KostantPartition>(elem).n;
  const Reading rd = reading_from(reading);
  for (const Op& op : parse_ops(ops_text, n)) {
    if (std::holds_alternative<Tableau>(elem)) {
      Tableau& t = std::get<Tableau>(elem);
      if (op.dir == 'f') {
        t = f(t, op.i, rd);
      } else {
        auto up = e(t, op.i, rd);
        if (!up) {
          write_out("null\n", out);
          return kExitUndefined;
        }
        t = *up;
      }
    } else {
      KostantPartition& a = std::get<KostantPartition>(elem);
      if (op.dir == 'f') {
        a = f(a, op.i);
      } else {
        auto up = e(a, op.i);
        if (!up) {
          write_out("null\n", out);
          return kExitUndefined;
        }
        a = *up;
      }
    }
  }
  const json j = std::holds_alternative<Tableau>(elem)
                     ? tableau_to_json(std::get<Tableau>(elem))
                     : partition_to_json(std::get<KostantPartition>(elem));
  write_out(j.dump(2) + "\n", out);
  return kExitOk;
}

int run_map(const std::string& file, const std::string& direction, const std::string& out) {
  Element elem = read_element(file);
  const bool is_tableau = std::holds_alternative<Tableau>(elem);
  if (direction == "t2kp" && !is_tableau)
    throw std::invalid_argument("t2kp expects a tableau");
  if (direction == "kp2t" && is_tableau)
    throw std::invalid_argument("kp2t expects a partition");
  const json j = is_tableau
                     ? partition_to_json(tableau_to_partition(std::get<Tableau>(elem)))
                     : tableau_to_json(partition_to_tableau(std::get<KostantPartition>(elem)));
  write_out(j.dump(2) + "\n", out);
  return kExitOk;
}

int run_verify(int n, int depth, const std::string& out, bool force, std::size_t max_nodes) {
  if (!force && (n > 6 || depth > 8))
    throw std::invalid_argument("n > 6 or depth > 8 needs --force");
  const VerificationReport report = check_isomorphism(Rank(n), depth, {}, GenLimits{max_nodes});
  std::ostringstream text;
  text << "checked " << report.nodes_checked << " nodes, " << report.ops_checked
       << " operator applications\n";
  for (const IsoFailure& fail : report.failures)
    text << "FAIL " << fail.invariant << " key=" << fail.key << " i=" << fail.i << "\n";
  text << (report.ok() ? "all checks passed\n"
                       : "failures: " + std::to_string(report.failures.size()) + "\n");
  write_out(text.str(), out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_render(const std::string& file, const std::string& style, bool unicode,
               const std::string& out) {
  Element elem = read_element(file);
  const Glyphs glyphs = unicode ? Glyphs::Unicode : Glyphs::Ascii;
  std::string text;
  if (style == "stack") {
    if (std::holds_alternative<Tableau>(elem))
      throw std::invalid_argument("stack style renders Kostant partitions");
    text = render_stack(std::get<KostantPartition>(elem));
  } else if (std::holds_alternative<Tableau>(elem)) {
    const Tableau& t = std::get<Tableau>(elem);
    text = style == "reduced" ? render_reduced(t, glyphs) : render_tableau(t, glyphs);
  } else {
    text = partition_label(std::get<KostantPartition>(elem)) + "\n";
  }
  write_out(text, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B(infinity) crystal calculator for type D: marginally large tableaux,"
               " Kostant partitions, and the isomorphism between them"};
  app.require_subcommand(1);

  std::string realization = "tableaux", format = "json", reading = "middle";
  std::string direction = "auto", style = "ascii";
  std::string file, out, ops_text;
  int n = 4, depth = 0;
  bool force = false, unicode = false;
  std::size_t max_nodes = 1'000'000;

  CLI::App* gen = app.add_subcommand("gen", "generate a BFS ball of the crystal");
  gen->add_option("--realization", realization)->check(CLI::IsMember({"tableaux", "kostant"}));
  gen->add_option("--n", n, "rank")->required();
  gen->add_option("--depth", depth, "BFS radius")->required();
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  gen->add_option("--reading", reading)->check(CLI::IsMember({"middle", "far"}));
  gen->add_option("--out", out, "output file (default stdout)");
  gen->add_flag("--force", force, "lift the n <= 6, depth <= 8 guard");
  gen->add_option("--max-nodes", max_nodes, "node-count guard");

  CLI::App* apply = app.add_subcommand("apply", "apply a lowering/raising operator string");
  apply->add_option("--ops", ops_text, "whitespace-separated tokens like \"f1 f2 e4\"")
      ->required();
  apply->add_option("--file", file, "element JSON (default stdin)");
  apply->add_option("--reading", reading)->check(CLI::IsMember({"middle", "far"}));
  apply->add_option("--out", out);

  CLI::App* map_cmd = app.add_subcommand("map", "map between the two realizations");
  map_cmd->add_option("--file", file, "element JSON (default stdin)");
  map_cmd->add_option("--direction", direction)->check(CLI::IsMember({"auto", "t2kp", "kp2t"}));
  map_cmd->add_option("--out", out);

  CLI::App* verify = app.add_subcommand("verify", "cross-check the two realizations");
  verify->add_option("--n", n, "rank")->required();
  verify->add_option("--depth", depth, "BFS radius")->required();
  verify->add_option("--out", out);
  verify->add_flag("--force", force, "lift the n <= 6, depth <= 8 guard");
  verify->add_option("--max-nodes", max_nodes, "node-count guard");

  CLI::App* render = app.add_subcommand("render", "pretty-print an element");
  render->add_option("--file", file, "element JSON (default stdin)");
  render->add_option("--style", style)->check(CLI::IsMember({"ascii", "reduced", "stack"}));
  render->add_flag("--unicode", unicode, "overlines instead of minus signs");
  render->add_option("--out", out);

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen(realization, n, depth, format, reading, out, force, max_nodes);
    if (apply->parsed()) return run_apply(file, ops_text, reading, out);
    if (map_cmd->parsed()) return run_map(file, direction, out);
    if (verify->parsed()) return run_verify(n, depth, out, force, max_nodes);
    if (render->parsed()) return run_render(file, style, unicode, out);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
