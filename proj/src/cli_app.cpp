#include "braidlift/cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidlift/braid.hpp"
#include "braidlift/complex.hpp"
#include "braidlift/cover.hpp"
#include "braidlift/lift.hpp"

namespace braidlift {

namespace {

using nlohmann::json;

json labels_json(const LabelTuple& tuple) {
  json out = json::array();
  for (const auto& t : tuple.labels()) out.push_back({t.a, t.b});
  return out;
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

json edges_json(const std::vector<ComplexEdge>& edges) {
  json out = json::array();
  for (const auto& e : edges) out.push_back({e.source, e.gen, e.sign, e.target});
  return out;
}

struct CommonOptions {
  int d = 0;
  std::string labels;
  std::string braid;
  int radius = -1;
  bool with_edges = false;
  std::string format = "json";
  std::string out_path;
};

struct Request {
  std::string command;
  CommonOptions opt;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_braid, bool has_radius) {
  cmd->add_option("--d", opt.d, "cover degree (sheet count)");
  cmd->add_option("--labels", opt.labels,
                  "label tuple, e.g. \"(1 2),(2 3)\" or \"d=3: (1 2),(2 3)\"")
      ->required();
  if (needs_braid)
    cmd->add_option("--braid", opt.braid,
                    "braid word in application order (first generator acts first), e.g. \"s1^3 s2^-1\"")
        ->required();
  if (has_radius) cmd->add_option("--radius", opt.radius, "ball radius (word length)");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  cmd->add_option("--out", opt.out_path, "write output to this path instead of stdout");
}

void emit(const Request& req, const std::string& payload, std::ostream& out) {
  if (!req.opt.out_path.empty()) {
    std::ofstream file(req.opt.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output path " + req.opt.out_path);
    file << payload;
    return;
  }
  out << payload;
}

std::string render(const Request& req, const json& doc, const std::string& text) {
  if (req.opt.format == "text") return text;
  if (req.opt.format == "dot")
    throw DomainError("--format dot is only valid for the complex command");
  return doc.dump(2) + "\n";
}

std::string run_hurwitz(const Request& req) {
  const LabelTuple initial = parse_label_tuple(req.opt.labels, req.opt.d);
  const BraidWord word = parse_braid(req.opt.braid, initial.size());
  const LabelTuple terminal = hurwitz_apply(initial, word);
  json doc;
  doc["d"] = initial.degree();
  doc["n"] = initial.size();
  doc["braid"] = word.str();
  doc["initial_labels"] = labels_json(initial);
  doc["terminal_labels"] = labels_json(terminal);
  std::ostringstream text;
  text << "initial:  " << initial.str() << "\n"
       << "braid:    " << word.str() << "\n"
       << "terminal: " << terminal.str() << "\n";
  return render(req, doc, text.str());
}

std::string run_liftable(const Request& req) {
  const LabelTuple initial = parse_label_tuple(req.opt.labels, req.opt.d);
  const ColoredBraid braid(initial, parse_braid(req.opt.braid, initial.size()));
  const LabelTuple terminal = braid.terminal();
  const bool liftable = terminal == initial;
  json doc;
  doc["d"] = initial.degree();
  doc["n"] = initial.size();
  doc["braid"] = braid.word.str();
  doc["initial_labels"] = labels_json(initial);
  doc["terminal_labels"] = labels_json(terminal);
  doc["liftable"] = liftable;
  std::ostringstream text;
  text << "liftable: " << (liftable ? "true" : "false") << "\n";
  return render(req, doc, text.str());
}

std::string run_cover_info(const Request& req) {
  const LabelTuple tuple = parse_label_tuple(req.opt.labels, req.opt.d);
  const CoverTopology topo = cover_topology(tuple);
  const Spine spine = build_spine(tuple);
  json doc;
  doc["d"] = tuple.degree();
  doc["n"] = tuple.size();
  doc["labels"] = labels_json(tuple);
  doc["euler_characteristic"] = topo.euler_characteristic;
  doc["genus"] = topo.genus;
  doc["boundary_cycles"] = topo.boundary_components;
  json edges = json::array();
  for (int i = 1; i <= spine.edge_count(); ++i)
    edges.push_back({i, spine.edges[static_cast<size_t>(i - 1)].a, spine.edges[static_cast<size_t>(i - 1)].b});
  doc["spine"] = {{"edges", edges}};
  std::ostringstream text;
  text << "cover of " << tuple.str() << "\n"
       << "chi = " << topo.euler_characteristic << ", genus = " << topo.genus
       << ", boundary components = " << topo.boundary_components.size() << "\n";
  return render(req, doc, text.str());
}

std::string run_lift(const Request& req) {
  const LabelTuple initial = parse_label_tuple(req.opt.labels, req.opt.d);
  const ColoredBraid braid(initial, parse_braid(req.opt.braid, initial.size()));
  const SpineSubstitution lift = compute_lift(braid);
  const LiftReport report = lift_report(lift);
  json doc;
  doc["initial_labels"] = labels_json(lift.source);
  doc["terminal_labels"] = labels_json(lift.target);
  doc["liftable"] = report.liftable;
  doc["pi1_rank"] = report.pi1_rank;
  json images = json::array();
  for (int j = 1; j <= lift.target.size(); ++j)
    images.push_back({{"edge", j}, {"word", lift.images[static_cast<size_t>(j - 1)].str()}});
  doc["images"] = images;
  if (report.liftable) {
    doc["h1_matrix"] = matrix_json(report.h1_matrix);
    doc["flags"] = {{"is_identity", report.flags.is_identity},
                    {"h1_trivial", report.flags.h1_trivial},
                    {"transvection_shape", report.flags.transvection_shape}};
  }
  std::ostringstream text;
  text << "lift of " << braid.word.str() << " from " << lift.source.str() << "\n"
       << "target: " << lift.target.str() << "\n"
       << "liftable: " << (report.liftable ? "true" : "false") << "\n";
  for (int j = 1; j <= lift.target.size(); ++j)
    text << "  edge " << j << " <- " << lift.images[static_cast<size_t>(j - 1)].str() << "\n";
  if (report.liftable)
    text << "is_identity: " << (report.flags.is_identity ? "true" : "false")
         << ", h1_trivial: " << (report.flags.h1_trivial ? "true" : "false")
         << ", transvection_shape: " << (report.flags.transvection_shape ? "true" : "false") << "\n";
  return render(req, doc, text.str());
}

std::string run_canonical(const Request& req) {
  const LabelTuple tuple = parse_label_tuple(req.opt.labels, req.opt.d);
  const LabelTuple canon = canonical_label(tuple);
  json doc;
  doc["d"] = tuple.degree();
  doc["n"] = tuple.size();
  doc["labels"] = labels_json(tuple);
  doc["canonical"] = labels_json(canon);
  return render(req, doc, canon.str() + "\n");
}

std::string run_orbit(const Request& req) {
  const LabelTuple base = parse_label_tuple(req.opt.labels, req.opt.d);
  const LabelComplex complex = label_complex(base);
  json doc;
  doc["d"] = base.degree();
  doc["n"] = base.size();
  doc["base"] = complex.base;
  doc["size"] = complex.vertices.size();
  json tuples = json::array();
  for (const auto& v : complex.vertices) tuples.push_back(labels_json(v));
  doc["tuples"] = tuples;
  if (req.opt.with_edges) doc["edges"] = edges_json(complex.edges);
  std::ostringstream text;
  text << "orbit size " << complex.vertices.size() << "\n";
  for (const auto& v : complex.vertices) text << "  " << v.str() << "\n";
  return render(req, doc, text.str());
}

json object_json(const GraphicalObject& object) {
  json arcs = json::array();
  for (const auto& arc : object.arcs())
    arcs.push_back({{"word", arc.str()}, {"endpoints", {arc.start, arc.end}}});
  return {{"reference", {{"d", object.reference().degree()}, {"labels", labels_json(object.reference())}}},
          {"arcs", arcs}};
}

std::string run_complex(const Request& req) {
  const LabelTuple base = parse_label_tuple(req.opt.labels, req.opt.d);
  if (req.opt.radius >= 0) {
    const ObjectBall ball = object_ball(base, req.opt.radius);
    if (req.opt.format == "dot") return to_dot(ball);
    json doc;
    json vertices = json::array();
    for (const auto& v : ball.vertices) vertices.push_back(object_json(v));
    doc["vertices"] = vertices;
    doc["edges"] = edges_json(ball.edges);
    doc["base"] = ball.base;
    doc["depth"] = ball.depth;
    doc["radius"] = ball.radius;
    std::ostringstream text;
    text << "object ball radius " << ball.radius << ": " << ball.vertices.size()
         << " vertices, " << ball.edges.size() << " edges\n";
    return render(req, doc, text.str());
  }
  const LabelComplex complex = label_complex(base);
  if (req.opt.format == "dot") return to_dot(complex);
  json doc;
  json vertices = json::array();
  for (const auto& v : complex.vertices) vertices.push_back(v.str());
  doc["vertices"] = vertices;
  doc["edges"] = edges_json(complex.edges);
  doc["base"] = complex.base;
  std::ostringstream text;
  text << "orbit complex: " << complex.vertices.size() << " vertices, "
       << complex.edges.size() << " edges\n";
  return render(req, doc, text.str());
}

std::string run_verify(const Request& req, int& exit_code) {
  const LabelTuple base = parse_label_tuple(req.opt.labels, req.opt.d);
  const int radius = req.opt.radius >= 0 ? req.opt.radius : 3;

  const CoverTopology topo = cover_topology(base);  // asserts traversal == monodromy cycles
  const TwoCellInventory inventory = two_cell_inventory(base);  // asserts loops close
  const LabelComplex complex = label_complex(base);
  const ObjectBall ball = object_ball(base, radius);
  const CoveringReport covering = check_covering(ball, complex);

  json doc;
  doc["labels"] = labels_json(base);
  doc["euler_characteristic"] = topo.euler_characteristic;
  doc["boundary_components"] = topo.boundary_components.size();
  doc["genus"] = topo.genus;
  doc["orbit_size"] = complex.vertices.size();
  doc["ball_radius"] = radius;
  doc["ball_size"] = ball.vertices.size();
  doc["two_cells"] = {{"braid_relation", inventory.braid_relation_cells.size()},
                      {"power", inventory.power_cells.size()},
                      {"mcg_relation", inventory.mcg_relation_cells.size()},
                      {"mcg_relation_note", inventory.mcg_relation_note}};
  doc["covering"] = {{"interior_vertices_checked", covering.interior_vertices_checked},
                     {"closed_loops_checked", covering.closed_loops_checked},
                     {"open_loops_checked", covering.open_loops_checked},
                     {"failures", covering.failures}};
  doc["passed"] = covering.passed();
  exit_code = covering.passed() ? 0 : 1;
  std::ostringstream text;
  text << "verify " << base.str() << ": " << (covering.passed() ? "passed" : "FAILED") << "\n"
       << "  interior vertices checked: " << covering.interior_vertices_checked << "\n"
       << "  closed loops checked:      " << covering.closed_loops_checked << "\n"
       << "  open loops checked:        " << covering.open_loops_checked << "\n";
  for (const auto& f : covering.failures) text << "  failure: " << f << "\n";
  return render(req, doc, text.str());
}

std::string run_rewrite(const Request& req) {
  const LabelTuple initial = parse_label_tuple(req.opt.labels, req.opt.d);
  const ColoredBraid braid(initial, parse_braid(req.opt.braid, initial.size()));
  const ColoredBraid rewritten = remove_same_label_crossings(braid);
  const bool certified = compute_lift(braid) == compute_lift(rewritten);
  json doc;
  doc["d"] = initial.degree();
  doc["initial_labels"] = labels_json(initial);
  doc["braid"] = braid.word.str();
  doc["rewritten"] = rewritten.word.str();
  doc["certified"] = certified;
  std::ostringstream text;
  text << "braid:     " << braid.word.str() << "\n"
       << "rewritten: " << rewritten.word.str() << "\n"
       << "certified: " << (certified ? "true" : "false") << "\n";
  return render(req, doc, text.str());
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidlift: lifts of coloured braids to mapping classes of simple branched covers"};
  app.require_subcommand(1);

  Request req;
  const struct {
    const char* name;
    const char* desc;
    bool needs_braid;
    bool has_radius;
  } commands[] = {
      {"hurwitz", "apply a braid word to a label tuple", true, false},
      {"liftable", "test whether a coloured braid fixes its labels", true, false},
      {"cover-info", "topology and spine of the branched cover", false, false},
      {"lift", "compute the lift of a coloured braid as a spine substitution", true, false},
      {"canonical", "normal form of the label tuple's cover class", false, false},
      {"orbit", "Hurwitz orbit of a label tuple", false, false},
      {"complex", "orbit 1-skeleton, or an object ball when --radius is given", false, true},
      {"verify", "run local covering-structure checks", false, true},
      {"rewrite", "remove same-label crossings from a coloured braid", true, false},
  };
  for (const auto& c : commands) {
    CLI::App* cmd = app.add_subcommand(c.name, c.desc);
    add_common(cmd, req.opt, c.needs_braid, c.has_radius);
    if (std::string(c.name) == "orbit")
      cmd->add_flag("--edges", req.opt.with_edges, "include generator edges in the output");
    cmd->callback([&req, name = std::string(c.name)] { req.command = name; });
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    int exit_code = 0;
    std::string payload;
    if (req.command == "hurwitz") payload = run_hurwitz(req);
    else if (req.command == "liftable") payload = run_liftable(req);
    else if (req.command == "cover-info") payload = run_cover_info(req);
    else if (req.command == "lift") payload = run_lift(req);
    else if (req.command == "canonical") payload = run_canonical(req);
    else if (req.command == "orbit") payload = run_orbit(req);
    else if (req.command == "complex") payload = run_complex(req);
    else if (req.command == "verify") payload = run_verify(req, exit_code);
    else if (req.command == "rewrite") payload = run_rewrite(req);
    emit(req, payload, out);
    return exit_code;
  } catch (const DomainError& e) {
    err << json({{"error", e.what()}}).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << json({{"error", std::string("internal: ") + e.what()}}).dump() << "\n";
    return 1;
  }
}

}  // namespace braidlift
