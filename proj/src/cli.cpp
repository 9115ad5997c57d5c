#include "rauszer/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rauszer/dot.hpp"
#include "rauszer/enumerate.hpp"
#include "rauszer/json_io.hpp"
#include "rauszer/search.hpp"

namespace rauszer {

namespace {

using nlohmann::json;

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t effective_cap(std::size_t fallback) {
  if (const char* env = std::getenv("RAUSZER_MAX_N")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (i > start) out.push_back(csv.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  json doc = parse_json_text(read_text(file));
  try {
    Preorder p = preorder_from_json(doc, BuildMode::validate);
    json res = preorder_to_json(p);
    res["valid"] = true;
    out << res.dump() << "\n";
    return 0;
  } catch (const NotPreorderError& e) {
    out << json{{"valid", false}, {"witness", {e.x, e.y}}, {"reason", e.what()}}.dump() << "\n";
    return 1;
  }
}

int cmd_close(const std::string& file, std::ostream& out) {
  Preorder p = preorder_from_json(parse_json_text(read_text(file)), BuildMode::close);
  out << preorder_to_json(p).dump() << "\n";
  return 0;
}

int cmd_opens(const std::string& file, const std::string& format, std::ostream& out) {
  Preorder p = preorder_from_json(parse_json_text(read_text(file)), BuildMode::validate);
  OpensLattice lat = OpensLattice::enumerate(p, effective_cap(kDefaultOpensCap));
  if (format == "json") {
    json arr = json::array();
    for (const Bits& g : lat.members()) arr.push_back(g.members());
    out << json{{"n", p.size()}, {"count", lat.size()}, {"opens", std::move(arr)}}.dump() << "\n";
  } else if (format == "dot") {
    std::vector<std::string> labels;
    for (const Bits& g : lat.members()) labels.push_back(g.to_string());
    out << dot_hasse(lat.members(), labels, "opens");
  } else {
    for (const Bits& g : lat.members()) out << g.to_string() << "\n";
  }
  return 0;
}

int cmd_approx(const std::string& file, const std::string& set_csv, const std::string& relation,
               std::ostream& out) {
  InformationSystem sys = InformationSystem::parse_csv(read_text(file));
  Preorder r = relation == "incl" ? sys.inclusion_preorder() : sys.indiscernibility();
  Bits x(sys.objects.size());
  for (const std::string& label : split_labels(set_csv)) {
    auto i = sys.object_index(label);
    if (!i) throw InputError("unknown object label '" + label + "'");
    x.set(*i);
  }
  Approximation ap = approximate(r, x);
  out << approximation_to_json(ap, sys).dump() << "\n";
  return 0;
}

int cmd_check(const std::string& file, const std::string& cls, std::ostream& out) {
  FiniteAlgebra a = algebra_from_json(parse_json_text(read_text(file)));
  ClassReport rep = check_class(a, cls);
  out << class_report_to_json(rep).dump() << "\n";
  return rep.holds ? 0 : 1;
}

int cmd_represent(const std::string& file, std::ostream& out) {
  FiniteAlgebra a = algebra_from_json(parse_json_text(read_text(file)));
  PrimeFilterSpace space = prime_spectrum(a, effective_cap(kDefaultFilterCap));
  if (a.has("neg")) space = with_rasiowa_involution(std::move(space));
  StoneEmbedding emb = stone_map(space);
  out << embedding_report_to_json(emb, space).dump() << "\n";
  return emb.all_ok() ? 0 : 1;
}

int cmd_interpolate(const std::string& file, std::ostream& out) {
  FiniteAlgebra a = algebra_from_json(parse_json_text(read_text(file)));
  PrimeFilterSpace space = with_rasiowa_involution(prime_spectrum(a, effective_cap(kDefaultFilterCap)));
  InterpolationResult r = interpolation_check(space);
  json res{{"holds", r.holds}};
  if (r.witness) {
    res["witness"] = {r.witness->first, r.witness->second};
    res["pair"] = {space.points[r.witness->first].members(), space.points[r.witness->second].members()};
  } else {
    res["witness"] = nullptr;
  }
  out << res.dump() << "\n";
  return r.holds ? 0 : 1;
}

int cmd_search(const SearchConfig& cfg, const std::string& format, std::ostream& out) {
  SearchResult res = run_search(cfg);
  if (format == "json") {
    json ces = json::array();
    for (const auto& ce : res.counterexamples) ces.push_back({{"structure", ce.structure}, {"detail", ce.detail}});
    out << json{{"family", cfg.family},   {"property", cfg.property}, {"max_n", cfg.max_n},
                {"seed", cfg.seed},       {"samples", cfg.samples},   {"checked", res.checked},
                {"counterexamples", ces}}
               .dump()
        << "\n";
  } else {
    out << "family=" << cfg.family << " property=" << cfg.property << " max_n=" << cfg.max_n
        << " seed=" << cfg.seed << " samples=" << cfg.samples << "\n";
    out << "checked=" << res.checked << " counterexamples=" << res.counterexamples.size() << "\n";
    for (const auto& ce : res.counterexamples) out << "  " << ce.structure << " :: " << ce.detail << "\n";
  }
  return res.ok() ? 0 : 1;
}

int cmd_export_dot(const std::string& preorder_file, const std::string& algebra_file,
                   const std::string& out_path, std::ostream& out) {
  std::string dot;
  if (!preorder_file.empty()) {
    Preorder p = preorder_from_json(parse_json_text(read_text(preorder_file)), BuildMode::validate);
    OpensLattice lat = OpensLattice::enumerate(p, effective_cap(kDefaultOpensCap));
    std::vector<std::string> labels;
    for (const Bits& g : lat.members()) labels.push_back(g.to_string());
    dot = dot_hasse(lat.members(), labels, "opens");
  } else {
    FiniteAlgebra a = algebra_from_json(parse_json_text(read_text(algebra_file)));
    PrimeFilterSpace space = prime_spectrum(a, effective_cap(kDefaultFilterCap));
    std::vector<std::string> labels;
    for (const Bits& p : space.points) labels.push_back(p.to_string());
    dot = dot_hasse(space.points, labels, "spectrum");
  }
  if (out_path.empty()) {
    out << dot;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write file '" + out_path + "'");
    f << dot;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"workbench for closure/interior algebras over finite preorders"};
  app.require_subcommand(1);

  std::string file, format = "text", set_csv, relation = "indisc", cls;
  std::string preorder_file, algebra_file, out_path;
  SearchConfig cfg;

  CLI::App* validate = app.add_subcommand("validate", "check that a relation file is a preorder");
  validate->add_option("file", file, "preorder JSON")->required();

  CLI::App* close = app.add_subcommand("close", "reflexive-transitive closure of a relation file");
  close->add_option("file", file, "preorder JSON")->required();

  CLI::App* opens = app.add_subcommand("opens", "list the open sets of a preorder");
  opens->add_option("file", file, "preorder JSON")->required();
  opens->add_option("--format", format, "text|json|dot")->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* approx = app.add_subcommand("approx", "lower/upper approximation of an object set");
  approx->add_option("--system", file, "information system CSV")->required();
  approx->add_option("--set", set_csv, "comma-separated object labels")->required();
  approx->add_option("--relation", relation, "indisc|incl")->check(CLI::IsMember({"indisc", "incl"}));

  CLI::App* check = app.add_subcommand("check", "class membership of an operation-table algebra");
  check->add_option("--algebra", file, "algebra JSON")->required();
  check->add_option("--class", cls, "class name")->required();

  CLI::App* represent = app.add_subcommand("represent", "prime-filter embedding report");
  represent->add_option("--algebra", file, "algebra JSON")->required();
  std::string laws_mode = "auto";
  represent->add_option("--laws", laws_mode, "law selection (auto)")->check(CLI::IsMember({"auto"}));

  CLI::App* interpolate = app.add_subcommand("interpolate", "interpolation property of the spectrum involution");
  interpolate->add_option("--algebra", file, "algebra JSON")->required();

  CLI::App* search = app.add_subcommand("search", "enumerate a family and evaluate a property");
  search->add_option("--family", cfg.family, "preorders|kleene-sym-heyting|nelson")->required();
  std::string property_help = "property name;";
  for (const std::string& fam : search_families()) {
    property_help += " " + fam + ":";
    for (const std::string& prop : search_properties(fam)) property_help += " " + prop;
    property_help += ";";
  }
  search->add_option("--property", cfg.property, property_help)->required();
  search->add_option("--max-n", cfg.max_n, "largest structure size");
  search->add_option("--seed", cfg.seed, "sampling seed (recorded in the report)");
  search->add_option("--samples", cfg.samples, "samples per size beyond the exhaustive cap");
  search->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

  CLI::App* export_dot = app.add_subcommand("export-dot", "Hasse diagram of an opens lattice or spectrum");
  auto* po = export_dot->add_option("--preorder", preorder_file, "preorder JSON (opens lattice)");
  auto* ao = export_dot->add_option("--algebra", algebra_file, "algebra JSON (prime filter spectrum)");
  po->excludes(ao);
  export_dot->add_option("-o,--out", out_path, "output path (default stdout)");

  std::vector<const char*> argv;
  argv.push_back("rauszer");
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(file, out);
    if (app.got_subcommand(close)) return cmd_close(file, out);
    if (app.got_subcommand(opens)) return cmd_opens(file, format, out);
    if (app.got_subcommand(approx)) return cmd_approx(file, set_csv, relation, out);
    if (app.got_subcommand(check)) return cmd_check(file, cls, out);
    if (app.got_subcommand(represent)) return cmd_represent(file, out);
    if (app.got_subcommand(interpolate)) return cmd_interpolate(file, out);
    if (app.got_subcommand(search)) return cmd_search(cfg, format, out);
    if (app.got_subcommand(export_dot)) {
      if (preorder_file.empty() && algebra_file.empty())
        throw InputError("export-dot needs --preorder or --algebra");
      return cmd_export_dot(preorder_file, algebra_file, out_path, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace rauszer
