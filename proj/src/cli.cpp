#include "brauer/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/coxeter.hpp"
#include "brauer/error.hpp"
#include "brauer/io.hpp"
#include "brauer/matrices.hpp"
#include "brauer/verify.hpp"
#include "brauer/walk.hpp"

namespace brauer {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A tree together with the dataset it came from, when there is one.
struct Source {
  std::string name;
  std::optional<CoxeterBlockData> dataset;
  std::optional<PlanarBrauerTree> tree;
};

bool is_builtin(const std::string& name) {
  const auto tags = builtin_tags();
  return std::find(tags.begin(), tags.end(), name) != tags.end() || name.rfind("star(", 0) == 0;
}

Source load_source(const std::string& arg, std::istream& in, std::optional<int> multiplicity) {
  Source source{arg.empty() || arg == "-" ? "stdin" : arg, std::nullopt, std::nullopt};
  std::string text;
  if (arg.empty() || arg == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  } else if (is_builtin(arg)) {
    source.dataset = builtin_dataset(arg);
  } else if (std::filesystem::exists(arg)) {
    text = read_file(arg);
  } else {
    throw Error(ErrorCode::UnknownGroup, "'" + arg + "' is neither a builtin group nor a readable file");
  }

  if (!source.dataset) {
    nlohmann::json probe;
    try {
      probe = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
      throw Error(ErrorCode::SchemaError, std::string("malformed JSON: ") + err.what(), "");
    }
    if (probe.is_object() && probe.contains("tree")) {
      source.tree = parse_tree_json(text);
    } else if (probe.is_object() && probe.contains("series")) {
      source.dataset = parse_dataset_json(text);
    } else {
      throw Error(ErrorCode::SchemaError, "document is neither a tree nor a dataset", "");
    }
  }

  if (source.dataset) {
    if (multiplicity) source.dataset->multiplicity = *multiplicity;
    source.name = source.dataset->group_tag;
    source.tree = reconstruct_tree(*source.dataset);
  } else if (multiplicity) {
    source.tree = with_multiplicity(*source.tree, *multiplicity);
  }
  return source;
}

Hook parse_start(const PlanarBrauerTree& tree, const std::string& spec) {
  // Either an exact vertex label, or vertex:edge split at the last ':'.
  if (auto v = tree.find_vertex(spec)) return hook_at(tree, *v);
  if (spec == kExceptionalLabel) return hook_at(tree, tree.exceptional_vertex());
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) return hook_at(tree, tree.vertex_by_label(spec));
  const VertexId v = tree.vertex_by_label(spec.substr(0, colon));
  const EdgeId e = tree.edge_by_label(spec.substr(colon + 1));
  if (!tree.incident(v, e)) throw Error(ErrorCode::EdgeNotIncident, "edge is not incident to the start vertex");
  return Hook{v, e};
}

void print_error(std::ostream& err, std::string_view code, const std::string& message, const std::string& path = {}) {
  nlohmann::json doc = {{"error", code}, {"message", message}};
  if (!path.empty()) doc["path"] = path;
  err << doc.dump() << '\n';
}

void print_report(std::ostream& out, const VerifyReport& report) {
  out << "== " << report.subject << '\n';
  std::size_t failed = 0;
  for (const auto& check : report.checks) {
    const char* tag = check.diagnostic ? "NOTE" : check.passed ? "PASS" : "FAIL";
    if (!check.passed && !check.diagnostic) ++failed;
    out << tag << "  " << check.name;
    if (!check.detail.empty()) out << "  (" << check.detail << ")";
    out << '\n';
  }
  out << report.subject << ": " << report.checks.size() << " checks, "
      << (failed ? std::to_string(failed) + " failed" : std::string("all passed")) << '\n';
}

void print_matrix_text(std::ostream& out, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                       const auto& entries) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  out << "columns:";
  for (const auto& c : cols) out << ' ' << c;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << rows[i];
    for (const auto& value : entries[i]) out << ' ' << value;
    out << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar-embedded Brauer trees of cyclic defect blocks", "brauer"};
  app.require_subcommand(1);

  std::optional<int> multiplicity;
  auto add_m = [&](CLI::App* sub) {
    sub->add_option("--m", multiplicity, "Override the exceptional multiplicity")->check(CLI::PositiveNumber);
  };

  auto* list = app.add_subcommand("list", "List builtin datasets");

  std::string show_group;
  bool show_json = false;
  auto* show = app.add_subcommand("show", "Print a dataset with its derived indices");
  show->add_option("group", show_group, "Builtin group or dataset file")->required();
  show->add_flag("--json", show_json, "Emit the dataset document");
  add_m(show);

  std::string reconstruct_input;
  std::string reconstruct_out;
  auto* reconstruct = app.add_subcommand("reconstruct", "Build the planar tree of a dataset");
  reconstruct->add_option("--input", reconstruct_input, "Dataset JSON ('-' for stdin)")->required();
  reconstruct->add_option("--out", reconstruct_out, "Write the tree document here instead of stdout");
  add_m(reconstruct);

  std::string walk_source = "-";
  std::string walk_start;
  std::size_t walk_steps = 0;
  bool walk_hooks = false;
  auto* walk = app.add_subcommand("walk", "Print Green's walk");
  walk->add_option("source", walk_source, "Builtin group, tree/dataset file, or '-' for stdin");
  walk->add_option("--start", walk_start, "Start vertex label, optionally vertex:edge")->required();
  walk->add_option("--steps", walk_steps, "Number of states to print")->required();
  walk->add_flag("--hooks", walk_hooks, "Also print the edge of each hook");
  add_m(walk);

  std::vector<std::string> verify_sources;
  bool verify_all = false;
  auto* verify = app.add_subcommand("verify", "Check every invariant of a block or tree");
  verify->add_option("sources", verify_sources, "Group or dataset, optionally followed by a tree to compare")
      ->expected(0, 2);
  verify->add_flag("--all", verify_all, "Verify every builtin dataset");
  add_m(verify);

  std::string decomp_source;
  std::string decomp_format = "text";
  bool decomp_cartan = false;
  bool decomp_full = false;
  auto* decomp = app.add_subcommand("decomp", "Decomposition (or Cartan) matrix");
  decomp->add_option("source", decomp_source, "Builtin group, tree/dataset file, or '-'")->required();
  decomp->add_option("--format", decomp_format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  decomp->add_flag("--cartan", decomp_cartan, "Print the Cartan matrix instead");
  decomp->add_flag("--full", decomp_full, "Repeat the exceptional row m times");
  add_m(decomp);

  int star_e = 0;
  int star_m = 1;
  bool star_dot = false;
  auto* star = app.add_subcommand("star", "Emit the star tree");
  star->add_option("--e", star_e, "Number of edges")->required()->check(CLI::PositiveNumber);
  star->add_option("--m", star_m, "Exceptional multiplicity")->check(CLI::PositiveNumber);
  star->add_flag("--dot", star_dot, "Emit Graphviz instead of JSON");

  std::string export_source;
  bool export_dot = false;
  bool export_json = false;
  auto* exporter = app.add_subcommand("export", "Export a tree as DOT or JSON");
  exporter->add_option("source", export_source, "Builtin group, tree/dataset file, or '-'")->required();
  exporter->add_flag("--dot", export_dot, "Graphviz output");
  exporter->add_flag("--json", export_json, "Tree document output");
  add_m(exporter);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& tag : builtin_tags()) {
        const auto data = builtin_dataset(tag);
        out << tag << "\th=" << data.h << "\tdelta=" << data.delta << "\tr=" << data.r << "\te=" << data.e()
            << "\tseries=" << data.series.size() << '\n';
      }
      out << "star(e,m)\tpseudo-dataset of the star with e edges\n";
    } else if (*show) {
      Source source = load_source(show_group, in, multiplicity);
      if (!source.dataset) throw UsageError("show needs a dataset, not a tree");
      const auto& data = *source.dataset;
      if (show_json) {
        out << emit_dataset_json(data);
      } else {
        out << data.group_tag << ": h=" << data.h << " delta=" << data.delta << " h0=" << data.h0() << " r=" << data.r
            << " e=" << data.e() << " m=" << data.multiplicity << '\n';
        for (const auto& s : data.series) {
          out << "  " << s.zeta_label << " (conjugate " << s.conjugate_label << ") m=" << s.m_index
              << " M=" << s.M_index << ":";
          for (const auto& c : s.characters) out << ' ' << c;
          out << '\n';
        }
      }
    } else if (*reconstruct) {
      Source source = load_source(reconstruct_input, in, multiplicity);
      if (!source.dataset) throw UsageError("reconstruct needs a dataset document");
      const std::string doc = emit_tree_json(*source.tree);
      if (reconstruct_out.empty()) {
        out << doc;
      } else {
        write_file(reconstruct_out, doc);
      }
    } else if (*walk) {
      Source source = load_source(walk_source, in, multiplicity);
      const auto sequence = green_walk(*source.tree, parse_start(*source.tree, walk_start), walk_steps);
      for (const auto& step : sequence.steps) {
        out << step.index << '\t' << step.character;
        if (walk_hooks) out << '\t' << source.tree->edge(step.hook.edge).label;
        out << '\n';
      }
    } else if (*verify) {
      std::vector<VerifyReport> reports;
      if (verify_all) {
        if (!verify_sources.empty()) throw UsageError("--all takes no sources");
        for (const auto& tag : builtin_tags()) {
          auto data = builtin_dataset(tag);
          if (multiplicity) data.multiplicity = *multiplicity;
          reports.push_back(verify_block(data));
        }
      } else {
        if (verify_sources.empty()) throw UsageError("verify needs a source or --all");
        Source first = load_source(verify_sources[0], in, multiplicity);
        std::optional<Source> second;
        if (verify_sources.size() == 2) {
          second = load_source(verify_sources[1], in, multiplicity);
          if (!first.dataset || second->dataset) throw UsageError("verify <dataset> <tree>");
        }
        if (first.dataset) {
          reports.push_back(verify_block(*first.dataset, second ? &*second->tree : nullptr));
        } else {
          reports.push_back(verify_tree(*first.tree, first.name));
        }
      }
      bool ok = true;
      for (const auto& report : reports) {
        print_report(out, report);
        ok = ok && report.passed();
      }
      if (!ok) {
        print_error(err, to_string(ErrorCode::VerificationFailed), "one or more checks failed");
        return kExitValidation;
      }
    } else if (*decomp) {
      Source source = load_source(decomp_source, in, multiplicity);
      if (decomp_cartan) {
        const auto c = cartan_matrix(*source.tree);
        if (decomp_format == "csv") {
          out << to_csv(c);
        } else {
          print_matrix_text(out, c.index, c.index, c.entries);
        }
      } else {
        auto d = decomposition_matrix(*source.tree);
        if (decomp_full) d = d.expanded();
        if (decomp_format == "csv") {
          out << to_csv(d);
        } else {
          print_matrix_text(out, d.rows, d.cols, d.entries);
          if (!decomp_full) out << "(row exc stands for " << d.exceptional_multiplicity << " characters)\n";
        }
      }
    } else if (*star) {
      const auto tree = star_tree(star_e, star_m);
      out << (star_dot ? emit_dot(tree, "star") : emit_tree_json(tree));
    } else if (*exporter) {
      if (export_dot == export_json) throw UsageError("export needs exactly one of --dot or --json");
      Source source = load_source(export_source, in, multiplicity);
      out << (export_dot ? emit_dot(*source.tree, source.name) : emit_tree_json(*source.tree));
    }
  } catch (const UsageError& e) {
    print_error(err, "UsageError", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    print_error(err, to_string(e.code()), e.what(), e.path());
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace brauer
