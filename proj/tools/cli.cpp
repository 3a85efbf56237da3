#include "cli.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "p5sparse/errors.hpp"
#include "p5sparse/formats.hpp"
#include "p5sparse/version.hpp"
#include "report.hpp"

namespace p5sparse::cli {
namespace {

struct Item {
  std::string text;  // raw bytes the digest is taken over
  std::optional<Graph> graph;
  std::string error;  // parse failure message when graph is empty
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open input file: " + path);
    buf << f.rdbuf();
  }
  return buf.str();
}

InputFormat parse_format(const std::string& s) {
  if (s == "graph6") return InputFormat::Graph6;
  if (s == "edgelist") return InputFormat::EdgeList;
  return InputFormat::Auto;
}

// Graph6 streams become one item per non-empty line so a bad line does not
// hide the reports of the others; an edge list is a single item.
std::vector<Item> read_items(const std::string& path, const std::string& format, std::istream& in) {
  const std::string text = read_source(path, in);
  InputFormat f = parse_format(format);
  if (f == InputFormat::Auto) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw InvalidInput("empty input");
    f = std::isdigit(static_cast<unsigned char>(text[i])) ? InputFormat::EdgeList : InputFormat::Graph6;
  }
  std::vector<Item> items;
  auto add = [&](std::string raw, auto decode) {
    Item it{std::move(raw), std::nullopt, {}};
    try {
      it.graph = decode(it.text);
    } catch (const InvalidInput& e) {
      it.error = e.what();
    }
    items.push_back(std::move(it));
  };
  if (f == InputFormat::EdgeList) {
    add(text, [](const std::string& t) { return decode_edge_list(t); });
    return items;
  }
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    add(line, [](const std::string& t) { return decode_graph6(t); });
  }
  if (items.empty()) throw InvalidInput("no graph6 lines in input");
  return items;
}

Json envelope(const std::string& command, const std::string& input, Json payload, int status) {
  return {{"command", command},
          {"input_digest", digest(input)},
          {"version", kVersion},
          {"payload", std::move(payload)},
          {"exit_status", status}};
}

// Runs body and maps the toolkit's exceptions to an exit status and an
// error payload.
template <class Body>
std::pair<Json, int> guarded(Body&& body) {
  try {
    return {body(), kOk};
  } catch (const InvalidInput& e) {
    return {Json{{"error", e.what()}}, kInvalidInput};
  } catch (const CapExceeded& e) {
    return {Json{{"error", e.what()}}, kCapExceeded};
  } catch (const InternalError& e) {
    return {Json{{"error", e.what()}}, kInternalError};
  }
}

Json graph_header(const Graph& g) {
  Json j{{"n", g.order()}, {"m", g.edge_count()}};
  if (g.order() <= kGraph6MaxOrder) j["graph6"] = encode_graph6(g);
  return j;
}

std::vector<std::int64_t> read_weights(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot open weights file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<std::int64_t> w;
  if (first != std::string::npos && text[first] == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array()) throw InvalidInput("weights: malformed JSON array");
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw InvalidInput("weights: entries must be integers");
      w.push_back(x.get<std::int64_t>());
    }
    return w;
  }
  std::istringstream is(text);
  for (std::string tok; is >> tok;) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw InvalidInput("weights: not an integer: '" + tok + "'");
    w.push_back(x);
  }
  return w;
}

OptimizeOptions options_from_env() {
  OptimizeOptions opt;
  if (const char* v = std::getenv("P5SPARSE_BRUTE_FORCE_CAP")) {
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || x < 1) throw InvalidInput("P5SPARSE_BRUTE_FORCE_CAP must be a positive integer");
    opt.brute_force_cap = static_cast<int>(std::min(x, 32L));
  }
  return opt;
}

const PatternFamily& family(const std::string& name) { return PatternFamily::by_name(name); }

struct Common {
  std::string input;
  std::string format = "auto";
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("input", c.input, "Input file (graph6 lines or an edge list); stdin when absent or '-'");
  cmd->add_option("--format", c.format, "Input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

void write_graph(std::ostream& out, const Graph& g, const std::string& to) {
  std::string fmt = to;
  if (fmt == "auto") fmt = g.order() <= kGraph6MaxOrder ? "graph6" : "edgelist";
  if (fmt == "graph6") out << encode_graph6(g) << '\n';
  else if (fmt == "edgelist") out << encode_edge_list(g);
  else out << encode_dot(g);
}

// Per-item work runs on up to `workers` threads; output keeps input order.
int emit_reports(const std::string& command, const std::vector<Item>& items, int workers, std::ostream& out,
                 std::ostream& err, const std::function<Json(const Graph&)>& body) {
  std::vector<std::pair<Json, int>> results(items.size());
  parallel_filter(items.size(), std::max(1, workers), [&](std::size_t i) {
    if (!items[i].graph) {
      results[i] = {Json{{"error", items[i].error}}, kInvalidInput};
    } else {
      results[i] = guarded([&] { return body(*items[i].graph); });
    }
    return false;
  });
  int status = kOk;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& [payload, code] = results[i];
    if (code != kOk) err << command << ": " << payload["error"].get<std::string>() << '\n';
    out << envelope(command, items[i].text, std::move(payload), code).dump() << '\n';
    status = std::max(status, code);
  }
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recognition, decomposition and optimization for (P5, co-P5)-sparse and (P5, co-P5, bull)-sparse graphs",
               "p5sparse"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  Common common;
  int workers = 1;

  auto* rec = app.add_subcommand("recognize", "Membership test with decomposition and per-prime classes");
  add_input(rec, common);
  std::string rec_family = "both";
  bool certificate = false;
  bool force_oracle = false;
  rec->add_option("--family", rec_family)->check(CLI::IsMember({"p5-cop5", "p5-cop5-bull", "both"}));
  rec->add_flag("--certificate", certificate, "Include the 6-vertex window of non-members");
  rec->add_flag("--force-oracle", force_oracle, "Cross-check with the window scan at any order");
  rec->add_option("--workers", workers)->check(CLI::Range(1, 64));

  auto* cls = app.add_subcommand("classify", "Class of a prime graph");
  add_input(cls, common);
  std::string cls_family = "p5-cop5-bull";
  cls->add_option("--family", cls_family)->check(CLI::IsMember({"p5-cop5", "p5-cop5-bull"}));

  auto* md = app.add_subcommand("md", "Modular decomposition tree");
  add_input(md, common);

  auto* solve = app.add_subcommand("solve", "Exact weighted optimization");
  add_input(solve, common);
  std::string problem;
  std::string weights_path;
  solve->add_option("--problem", problem)->required()->check(CLI::IsMember({"clique", "stable", "coloring", "cover"}));
  solve->add_option("--weights", weights_path, "JSON array or whitespace-separated integers (default: unit)");

  auto* verify = app.add_subcommand("verify", "Desk check of the structure claims");
  std::string theorem;
  int max_n = 7;
  std::string ver_family = "p5-cop5-bull";
  std::string ver_input;
  bool timing = false;
  verify->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"c5", "classifier", "recognizer"}));
  verify->add_option("--max-n", max_n)->check(CLI::Range(1, kEnumerateMaxOrder));
  verify->add_option("--family", ver_family)->check(CLI::IsMember({"p5-cop5", "p5-cop5-bull"}));
  verify->add_option("--input", ver_input, "Check this graph6 stream instead of the enumeration");
  verify->add_option("--workers", workers)->check(CLI::Range(1, 64));
  verify->add_flag("--timing", timing, "Report elapsed seconds (output is then not reproducible)");

  auto* gen = app.add_subcommand("gen", "Emit class members");
  std::string cls_name;
  int arms = 2;
  bool short_arm = false;
  bool extra = false;
  bool gen_complement = false;
  int index = -1;
  int order = 5;
  std::string gen_to = "auto";
  gen->add_option("--class", cls_name)->required()->check(CLI::IsMember({"bundle", "augmented", "sporadic", "all"}));
  gen->add_option("--arms", arms)->check(CLI::Range(2, 10000));
  gen->add_flag("--short-arm", short_arm);
  gen->add_flag("--extra", extra);
  gen->add_option("--index", index, "Catalog entry (all entries when absent)");
  gen->add_option("--order", order, "Vertex count for --class all")->check(CLI::Range(1, kEnumerateMaxOrder));
  gen->add_flag("--complement", gen_complement);
  gen->add_option("--to", gen_to)->check(CLI::IsMember({"auto", "graph6", "edgelist", "dot"}));

  auto* conv = app.add_subcommand("convert", "Re-encode graphs");
  add_input(conv, common);
  std::string conv_to;
  conv->add_option("--to", conv_to)->required()->check(CLI::IsMember({"graph6", "edgelist", "dot"}));

  std::vector<std::string> storage{"p5sparse"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (rec->parsed()) {
      const auto items = read_items(common.input, common.format, in);
      std::vector<const PatternFamily*> fams;
      if (rec_family != "p5-cop5-bull") fams.push_back(&PatternFamily::p5_cop5());
      if (rec_family != "p5-cop5") fams.push_back(&PatternFamily::p5_cop5_bull());
      return emit_reports("recognize", items, workers, out, err, [&](const Graph& g) {
        Json payload = graph_header(g);
        Json reports = Json::array();
        for (const auto* f : fams) {
          const auto r = is_sparse(g, *f);
          Json j = report_json(r, certificate);
          const bool check = force_oracle || g.order() <= kOracleCheckMaxOrder;
          j["oracle_checked"] = check;
          if (check && sparse_oracle(g, *f).sparse() != r.member)
            throw InternalError("recognizer and window scan disagree for " + f->name());
          if (certificate && r.witness)
            j["witness"]["verified"] = window_violation(g, r.witness->window, *f).has_value();
          reports.push_back(std::move(j));
        }
        payload["reports"] = std::move(reports);
        return payload;
      });
    }
    if (cls->parsed()) {
      const auto items = read_items(common.input, common.format, in);
      const auto& f = family(cls_family);
      return emit_reports("classify", items, 1, out, err, [&](const Graph& g) {
        Json payload = graph_header(g);
        payload["family"] = f.name();
        payload["class"] = to_json(classify_prime(g, f));
        return payload;
      });
    }
    if (md->parsed()) {
      const auto items = read_items(common.input, common.format, in);
      return emit_reports("md", items, 1, out, err, [&](const Graph& g) {
        Json payload = graph_header(g);
        payload["tree"] = to_json(decompose(g));
        return payload;
      });
    }
    if (solve->parsed()) {
      const auto items = read_items(common.input, common.format, in);
      const auto opt = options_from_env();
      std::optional<std::vector<std::int64_t>> weights;
      if (!weights_path.empty()) weights = read_weights(weights_path);
      return emit_reports("solve", items, 1, out, err, [&](const Graph& g) {
        const auto wg = weights ? WeightedGraph::make(g, *weights) : WeightedGraph::unit(g);
        Solution s;
        if (problem == "clique") s = max_weight_clique(wg, opt);
        else if (problem == "stable") s = max_weight_stable(wg, opt);
        else if (problem == "coloring") s = multichromatic(wg, opt);
        else s = clique_cover(wg, opt);
        Json payload = graph_header(g);
        payload["solution"] = solution_json(problem, s);
        return payload;
      });
    }
    if (verify->parsed()) {
      std::string text;
      std::vector<Graph> graphs;
      if (!ver_input.empty()) {
        text = read_source(ver_input, in);
        graphs = parse_graphs(text, InputFormat::Graph6);
      } else {
        text = "--theorem " + theorem + " --max-n " + std::to_string(max_n) + " --family " + ver_family;
      }
      const auto& f = family(ver_family);
      auto [payload, code] = guarded([&] {
        VerificationReport r;
        if (theorem == "c5") {
          r = ver_input.empty() ? verify_theorem_c5(max_n, f, workers) : verify_theorem_c5(graphs, f, workers);
        } else if (theorem == "classifier") {
          r = ver_input.empty() ? verify_classifier(max_n, f, workers) : verify_classifier(graphs, f, workers);
        } else {
          r = ver_input.empty() ? verify_recognizer(max_n, workers) : verify_recognizer(graphs, workers);
        }
        return to_json(r, timing);
      });
      if (code != kOk) err << "verify: " << payload["error"].get<std::string>() << '\n';
      out << envelope("verify", text, std::move(payload), code).dump() << '\n';
      return code;
    }
    if (gen->parsed()) {
      std::vector<Graph> graphs;
      if (cls_name == "bundle") {
        graphs.push_back(make_bundle(arms, short_arm));
      } else if (cls_name == "augmented") {
        graphs.push_back(make_augmented_p5(extra));
      } else if (cls_name == "sporadic") {
        const auto& cat = sporadic_catalog();
        if (index >= static_cast<int>(cat.size()))
          throw InvalidInput("sporadic index " + std::to_string(index) + " out of range (catalog has " +
                             std::to_string(cat.size()) + " entries)");
        if (index >= 0) graphs.push_back(cat[static_cast<std::size_t>(index)]);
        else graphs = cat;
      } else {
        graphs = all_graphs(order);
      }
      for (const auto& g : graphs) write_graph(out, gen_complement ? complement(g) : g, gen_to);
      return kOk;
    }
    if (conv->parsed()) {
      const auto items = read_items(common.input, common.format, in);
      int status = kOk;
      for (const auto& it : items) {
        if (!it.graph) {
          err << "convert: " << it.error << '\n';
          status = kInvalidInput;
          continue;
        }
        try {
          write_graph(out, *it.graph, conv_to);
        } catch (const InvalidInput& e) {
          err << "convert: " << e.what() << '\n';
          status = kInvalidInput;
        }
      }
      return status;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  }
  return kOk;
}

}  // namespace p5sparse::cli
