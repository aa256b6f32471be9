#include "aspbd/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "aspbd/backdoor.hpp"
#include "aspbd/classes.hpp"
#include "aspbd/evaluator.hpp"
#include "aspbd/generators.hpp"
#include "aspbd/program.hpp"
#include "aspbd/serialize.hpp"

namespace aspbd {

namespace {

using nlohmann::json;

// Thrown for input problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Program load_program(const std::string& path) {
  try {
    return parse_program(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ":" + e.what());
  }
}

ClassId parse_class(const std::string& name) {
  const auto c = class_from_name(name);
  if (!c)
    throw UsageError("unknown class: " + name +
                     " (expected horn, no-c, no-dc, no-bc, no-dbc, no-ec, "
                     "no-dec, no-bec, or no-dbec)");
  return *c;
}

AtomSet parse_atom_list(const std::string& text) {
  AtomSet atoms;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    if (!is_valid_atom_name(token))
      throw UsageError("invalid atom name: " + token);
    atoms.insert(token);
  }
  return atoms;
}

void emit(std::ostream& out, const json& payload) {
  out << payload.dump(2) << "\n";
}

int run_check(const std::string& file, std::ostream& out) {
  const Program p = load_program(file);
  json payload;
  payload["rules"] = p.rules.size();
  emit(out, payload);
  return 0;
}

int run_classify(const std::string& file, std::ostream& out) {
  const Program p = load_program(file);
  emit(out, classification_to_json(classify(p)));
  return 0;
}

int run_graph(const std::string& file, const std::string& view,
              const std::string& format, std::ostream& out) {
  const Program p = load_program(file);
  const bool dot = format == "dot";
  if (view == "d") {
    const SignedDepGraph g = build_directed(p);
    if (dot)
      out << export_dot(g);
    else
      emit(out, graph_to_json(g));
  } else if (view == "u") {
    const ExpandedUndirectedGraph g = build_undirected(p);
    if (dot)
      out << export_dot(g);
    else
      emit(out, graph_to_json(g));
  } else {
    const UnlabeledGraph g = unlabel(build_undirected(p));
    if (dot)
      out << export_dot(g);
    else
      emit(out, graph_to_json(g));
  }
  return 0;
}

int run_backdoor(const std::string& file, ClassId target, BackdoorMode mode,
                 const std::optional<std::string>& verify_atoms,
                 const std::optional<int>& detect_size, std::ostream& out,
                 std::ostream& err) {
  const Program p = load_program(file);
  if (verify_atoms) {
    const AtomSet x = parse_atom_list(*verify_atoms);
    const BackdoorReport report =
        mode == BackdoorMode::strong ? is_strong_backdoor(p, x, target)
                                     : is_deletion_backdoor(p, x, target);
    emit(out, report_to_json(report));
    return report.ok ? 0 : 1;
  }
  try {
    const auto report = detect_backdoor(p, target, *detect_size, mode);
    json payload;
    payload["found"] = report.has_value();
    if (report) payload["backdoor"] = report_to_json(*report);
    emit(out, payload);
    return report ? 0 : 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;  // aborted search; "not found" would be unreliable
  }
}

QueryKind parse_query_kind(const std::string& spec, std::optional<Atom>* atom) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (colon != std::string::npos) {
    const std::string a = spec.substr(colon + 1);
    if (!is_valid_atom_name(a)) throw UsageError("invalid atom name: " + a);
    *atom = a;
  }
  if (kind == "consistency" && !*atom) return QueryKind::consistency;
  if (kind == "count" && !*atom) return QueryKind::count;
  if (kind == "enumerate" && !*atom) return QueryKind::enumerate;
  if (kind == "credulous" && *atom) return QueryKind::credulous;
  if (kind == "skeptical" && *atom) return QueryKind::skeptical;
  throw UsageError(
      "invalid query: " + spec +
      " (expected consistency, credulous:a, skeptical:a, count, enumerate)");
}

int run_solve(const std::string& file, ClassId target,
              const std::optional<std::string>& backdoor_atoms,
              const std::optional<int>& auto_size,
              const std::optional<std::string>& query_spec, std::ostream& out,
              std::ostream& err) {
  const Program p = load_program(file);
  SolveResult result;
  try {
    result = backdoor_atoms
                 ? solve_with_backdoor(p, target,
                                       parse_atom_list(*backdoor_atoms))
                 : solve_auto(p, target, *auto_size);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!query_spec) {
    emit(out, solve_to_json(result));
    return result.answer_sets.empty() ? 1 : 0;
  }
  std::optional<Atom> atom;
  const QueryKind kind = parse_query_kind(*query_spec, &atom);
  QueryAnswer answer;
  try {
    answer = query(p, result.answer_sets, kind, atom);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(out, query_to_json(answer));
  switch (kind) {
    case QueryKind::consistency:
    case QueryKind::credulous:
    case QueryKind::skeptical:
      return answer.truth ? 0 : 1;
    case QueryKind::count:
      return 0;
    case QueryKind::enumerate:
      return answer.sets.empty() ? 1 : 0;
  }
  return 0;
}

int emit_program(const Program& p, const std::optional<std::string>& out_file,
                 std::ostream& out) {
  const std::string text = print_program(p);
  if (out_file) {
    std::ofstream f(*out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write file: " + *out_file);
    f << text;
  }
  json payload;
  payload["program"] = text;
  emit(out, payload);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Backdoor-based evaluation of answer-set programs"};
  app.require_subcommand(1);

  std::string file;
  std::string class_name_arg;
  std::string view = "d";
  std::string format = "json";
  std::string mode_arg = "strong";
  std::optional<std::string> verify_atoms;
  std::optional<int> detect_size;
  std::optional<std::string> backdoor_atoms;
  std::optional<int> auto_size;
  std::optional<std::string> query_spec;

  auto* check = app.add_subcommand("check", "Parse and validate a program");
  check->add_option("file", file, "program file")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "Class membership of a program");
  classify_cmd->add_option("file", file, "program file")->required();

  auto* graph = app.add_subcommand("graph", "Export dependency graphs");
  graph->add_option("file", file, "program file")->required();
  graph->add_option("--view", view, "d (directed), u (undirected), unlabeled")
      ->check(CLI::IsMember({"d", "u", "unlabeled"}));
  graph->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* backdoor =
      app.add_subcommand("backdoor", "Verify or detect backdoors");
  backdoor->add_option("file", file, "program file")->required();
  backdoor->add_option("--class", class_name_arg, "target class")->required();
  backdoor->add_option("--mode", mode_arg, "strong or deletion")
      ->check(CLI::IsMember({"strong", "deletion"}));
  auto* verify_opt = backdoor->add_option("--verify", verify_atoms,
                                          "comma-separated atom set");
  auto* detect_opt =
      backdoor->add_option("--detect", detect_size, "maximum size k");
  verify_opt->excludes(detect_opt);

  auto* solve = app.add_subcommand("solve", "Compute answer sets");
  solve->add_option("file", file, "program file")->required();
  solve->add_option("--class", class_name_arg, "target class")->required();
  auto* bd_opt = solve->add_option("--backdoor", backdoor_atoms,
                                   "comma-separated atom set");
  auto* auto_opt =
      solve->add_option("--auto", auto_size, "detect a backdoor of size <= k");
  bd_opt->excludes(auto_opt);
  solve->add_option(
      "--query", query_spec,
      "consistency | credulous:a | skeptical:a | count | enumerate");

  auto* gen = app.add_subcommand("gen", "Generate programs");
  gen->require_subcommand(1);
  std::optional<std::string> out_file;
  std::optional<std::string> instance_file;
  std::optional<std::string> sets_arg;
  int hs_k = 0;
  std::string variant_arg = "directed";
  auto* gen_hs = gen->add_subcommand("hitting-set", "Member-set gadgets");
  gen_hs->add_option("--instance", instance_file,
                     "JSON file {\"sets\": [[...]...], \"k\": n}");
  auto* sets_opt = gen_hs->add_option(
      "--sets", sets_arg, "semicolon-separated comma lists, e.g. 1,2;2,3");
  gen_hs->add_option("--k", hs_k, "budget");
  gen_hs->add_option("--variant", variant_arg, "directed or undirected")
      ->check(CLI::IsMember({"directed", "undirected"}));
  gen_hs->add_option("--out", out_file, "also write the program here");

  auto* gen_path = gen->add_subcommand("path-gadget", "Digraph path gadget");
  gen_path->add_option("file", file, "digraph file")->required();
  gen_path->add_option("--out", out_file, "also write the program here");

  int pad_k = 0;
  auto* gen_pad = gen->add_subcommand("pad", "Add fresh bad even cycles");
  gen_pad->add_option("file", file, "program file")->required();
  gen_pad->add_option("--k", pad_k, "number of cycles")->required();
  gen_pad->add_option("--out", out_file, "also write the program here");

  int rnd_atoms = 0, rnd_rules = 0;
  double neg_prob = 0.5, disj_prob = 0.0;
  std::optional<std::uint64_t> seed;
  auto* gen_rnd = gen->add_subcommand("random", "Seeded random program");
  gen_rnd->add_option("--atoms", rnd_atoms, "atom count")->required();
  gen_rnd->add_option("--rules", rnd_rules, "rule count")->required();
  gen_rnd->add_option("--neg-prob", neg_prob, "negative literal probability");
  gen_rnd->add_option("--disj-prob", disj_prob,
                      "second head atom probability");
  gen_rnd->add_option("--seed", seed, "RNG seed (required)")->required();
  gen_rnd->add_option("--out", out_file, "also write the program here");

  std::vector<const char*> argv;
  argv.push_back("aspbd");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, out);
    if (classify_cmd->parsed()) return run_classify(file, out);
    if (graph->parsed()) return run_graph(file, view, format, out);
    if (backdoor->parsed()) {
      if (verify_atoms.has_value() == detect_size.has_value())
        throw UsageError("backdoor: exactly one of --verify or --detect");
      return run_backdoor(file, parse_class(class_name_arg),
                          mode_arg == "strong" ? BackdoorMode::strong
                                               : BackdoorMode::deletion,
                          verify_atoms, detect_size, out, err);
    }
    if (solve->parsed()) {
      if (backdoor_atoms.has_value() == auto_size.has_value())
        throw UsageError("solve: exactly one of --backdoor or --auto");
      return run_solve(file, parse_class(class_name_arg), backdoor_atoms,
                       auto_size, query_spec, out, err);
    }
    if (gen_hs->parsed()) {
      if (instance_file.has_value() == sets_arg.has_value())
        throw UsageError("gen hitting-set: exactly one of --instance or "
                         "--sets (with --k)");
      HittingSetInstance inst;
      if (instance_file) {
        try {
          inst = instance_from_json(json::parse(read_file(*instance_file)));
        } catch (const json::parse_error& e) {
          throw UsageError(*instance_file + ": " + e.what());
        } catch (const std::invalid_argument& e) {
          throw UsageError(*instance_file + ": " + e.what());
        }
      } else {
        std::istringstream in(*sets_arg);
        std::string group;
        while (std::getline(in, group, ';')) {
          std::set<std::string> member;
          std::istringstream elems(group);
          std::string elem;
          while (std::getline(elems, elem, ',')) {
            if (elem.empty()) continue;
            if (!is_valid_atom_name(element_atom(elem)))
              throw UsageError("invalid element name: " + elem);
            member.insert(elem);
          }
          if (!member.empty()) inst.sets.push_back(std::move(member));
        }
        inst.k = hs_k;
      }
      const GadgetVariant variant = variant_arg == "directed"
                                        ? GadgetVariant::directed
                                        : GadgetVariant::undirected;
      return emit_program(gen_hitting_set_program(inst, variant), out_file,
                          out);
    }
    if (gen_path->parsed()) {
      Digraph g;
      try {
        g = Digraph::parse(read_file(file));
      } catch (const ParseError& e) {
        throw UsageError(file + ":" + e.what());
      }
      try {
        return emit_program(gen_path_gadget(g), out_file, out);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (gen_pad->parsed())
      return emit_program(pad_with_bad_even_cycles(load_program(file), pad_k),
                          out_file, out);
    if (gen_rnd->parsed())
      return emit_program(
          random_program(rnd_atoms, rnd_rules, neg_prob, disj_prob, *seed),
          out_file, out);
    throw UsageError("no subcommand given");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace aspbd
