#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcq/cli.hpp"
#include "qcq/cohomology.hpp"
#include "qcq/homset.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string job_file;
  std::string link;
  std::string code_format;
  std::string quandle;
  std::string group;
  std::string cocycles;
  std::string endos;
  std::string out;
  std::string format = "text";
  std::string catalog;
  std::vector<int> reverse;
  bool mirror = false;
  bool no_cocycle_check = false;
  long long max_steps = 0;
  int max_edges = 0;
};

// JSON text, a JSON file, or a bare keyword such as "h2" / "all"
json list_or_keyword(const std::string& s) {
  if (fs::is_regular_file(s)) {
    std::ifstream in(s);
    return json::parse(in);
  }
  try {
    return json::parse(s);
  } catch (const json::exception&) {
    return s;
  }
}

bool looks_inline(const std::string& s) {
  return s.find('[') != std::string::npos || (!s.empty() && (s[0] == 'O' || s[0] == 'U') && s.find('-') != std::string::npos) ||
         s.find('+') != std::string::npos;
}

qcq::JobConfig make_config(const Options& o, fs::path& base_dir) {
  json j = json::object();
  if (!o.job_file.empty()) {
    std::ifstream in(o.job_file);
    if (!in) throw qcq::JobError("cannot open " + o.job_file);
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw qcq::JobError(o.job_file + ": " + e.what());
    }
    base_dir = fs::path(o.job_file).parent_path();
  }
  if (!o.link.empty()) {
    if (looks_inline(o.link)) {
      j.erase("link");
      j["code"] = o.link;
      j["format"] = o.code_format.empty() ? (o.link.find('[') != std::string::npos ? "pd" : "gauss") : o.code_format;
    } else {
      j.erase("code");
      j["link"] = o.link;
    }
  }
  if (!o.quandle.empty()) j["quandle"] = o.quandle;
  if (!o.group.empty()) j["group"] = o.group;
  if (!o.cocycles.empty()) j["cocycles"] = list_or_keyword(o.cocycles);
  if (!o.endos.empty()) j["endos"] = list_or_keyword(o.endos);
  if (!o.reverse.empty()) j["reverse"] = o.reverse;
  if (o.mirror) j["mirror"] = true;
  if (o.no_cocycle_check) j["require_cocycles"] = false;
  if (o.max_steps > 0) j["max_steps"] = o.max_steps;
  if (o.max_edges > 0) j["max_edges"] = o.max_edges;
  return qcq::job_from_json(j, base_dir);
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw qcq::JobError("cannot write " + o.out);
  f << text;
}

qcq::Catalog load_catalog(const Options& o) {
  return o.catalog.empty() ? qcq::Catalog::load_default() : qcq::Catalog::load(o.catalog);
}

int cmd_check(const Options& o) {
  fs::path base;
  auto cfg = make_config(o, base);
  cfg.data.require_cocycles = false;
  auto dv = qcq::resolve_data(cfg.data, base);
  json r;
  r["order"] = dv.x.order();
  r["quandle"] = dv.x.is_quandle();
  r["group"] = dv.a.name();
  json cs = json::array();
  bool ok = true;
  for (const auto& c : dv.cocycles) {
    bool is = qcq::is_cocycle(c, dv.x, dv.a);
    ok = ok && is;
    cs.push_back({{"vector", c.values}, {"cocycle", is}, {"coboundary", is && qcq::is_coboundary(c, dv.x, dv.a)}});
  }
  r["cocycles"] = cs;
  if (!dv.cocycles.empty() && ok)
    r["independent"] = qcq::independent_mod_coboundaries(dv.cocycles, dv.x, dv.a);
  auto h2 = qcq::h2_generators(dv.x, dv.a);
  r["h2"] = h2.structure();
  json gens = json::array();
  for (const auto& g : h2.generators) gens.push_back(g.values);
  r["h2_generators"] = gens;
  json es = json::array();
  for (const auto& e : dv.endos) es.push_back(e.images);
  r["endos"] = es;

  if (o.format == "json") {
    emit(o, r.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "biquandle of order " << dv.x.order() << (dv.x.is_quandle() ? " (quandle)" : "") << ": axioms hold\n";
    for (const auto& c : cs)
      s << "vector " << c["vector"].dump() << ": " << (c["cocycle"] ? "cocycle" : "NOT a cocycle")
        << (c["coboundary"] ? ", coboundary" : "") << "\n";
    if (r.contains("independent"))
      s << "classes " << (r["independent"] ? "independent" : "dependent") << " modulo coboundaries\n";
    s << "H^2 over " << dv.a.name() << ": " << h2.structure() << "\n";
    for (const auto& g : gens) s << "  generator " << g.dump() << "\n";
    emit(o, s.str());
  }
  return ok ? 0 : 1;
}

int cmd_homset(const Options& o) {
  fs::path base;
  auto cfg = make_config(o, base);
  auto catalog = load_catalog(o);
  auto d = qcq::resolve_link(cfg, catalog);
  cfg.data.cocycles = json::array();
  auto dv = qcq::resolve_data(cfg.data, base);
  auto cols = qcq::colorings(d, dv.x);
  json r;
  r["count"] = cols.size();
  json list = json::array();
  for (const auto& c : cols)
    list.push_back({{"colors", c.colors}, {"chain", qcq::chain_vector(c, d, dv.x).coords}});
  r["colorings"] = list;
  if (o.format == "json") {
    emit(o, r.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << cols.size() << " colorings\n";
    for (const auto& c : list) s << c["colors"].dump() << "  chain " << c["chain"].dump() << "\n";
    emit(o, s.str());
  }
  return 0;
}

int cmd_job(const Options& o, std::vector<std::string> outputs) {
  fs::path base;
  auto cfg = make_config(o, base);
  if (!outputs.empty()) cfg.outputs = std::move(outputs);
  auto catalog = load_catalog(o);
  auto r = qcq::run_job(cfg, catalog, base);
  if (o.format == "json")
    emit(o, (r.contains("quiver") && cfg.outputs.size() == 1 ? r["quiver"] : r).dump(2) + "\n");
  else
    emit(o, qcq::report_text(r));
  return 0;
}

int cmd_batch(const Options& o, std::vector<std::string> links, bool all_links, bool virtual_only) {
  fs::path base;
  auto cfg = make_config(o, base);
  auto catalog = load_catalog(o);
  if (all_links || virtual_only)
    for (const auto& e : catalog.entries())
      if (all_links || e.is_virtual) links.push_back(e.name);
  auto t = qcq::run_batch(links, cfg, catalog, base);
  emit(o, o.format == "json" ? t.dump(2) + "\n" : qcq::batch_text(t));
  int code = 0;
  for (const auto& row : t["rows"])
    if (!row["ok"]) code = std::max(code, row["exit_code"].get<int>());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle cohomology quiver representations of knot and link diagrams"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool link) {
    sub->add_option("--job", o.job_file, "job document (JSON); flags override its fields");
    if (link) {
      sub->add_option("--link", o.link, "catalog name, or inline PD / Gauss code");
      sub->add_option("--code-format", o.code_format, "pd or gauss, for inline codes")->check(CLI::IsMember({"pd", "gauss"}));
      sub->add_option("--reverse", o.reverse, "reverse these components (by index)");
      sub->add_flag("--mirror", o.mirror, "mirror the diagram");
      sub->add_option("--catalog", o.catalog, "catalog file (default: bundled data/catalog.json)");
    }
    sub->add_option("--quandle", o.quandle, "builtin name or table JSON file");
    sub->add_option("--group", o.group, "coefficient group: Z, Z2, Z3, ...");
    sub->add_option("--cocycles", o.cocycles, "JSON list of vectors, a file, or h2");
    sub->add_option("--endos", o.endos, "JSON list of image vectors, a file, identity or all");
    sub->add_flag("--no-cocycle-check", o.no_cocycle_check, "accept vectors that fail the cocycle condition");
    sub->add_option("--max-steps", o.max_steps, "path search budget (DFS extensions)");
    sub->add_option("--max-edges", o.max_edges, "refuse path search on larger quivers");
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write output here instead of stdout");
  };

  auto* check = app.add_subcommand("check", "check axioms, cocycles and endomorphisms; report H^2");
  common(check, false);
  auto* homset = app.add_subcommand("homset", "list the colorings of a diagram");
  common(homset, true);
  auto* inv = app.add_subcommand("cocycle-invariant", "counting and cocycle invariants");
  common(inv, true);
  auto* quiver = app.add_subcommand("quiver", "export the representation quiver");
  common(quiver, true);
  auto* polys = app.add_subcommand("invariants", "the four quiver polynomials");
  common(polys, true);
  auto* batch = app.add_subcommand("batch", "run one data vector over many catalog links");
  common(batch, true);
  std::vector<std::string> links;
  bool all_links = false, virtual_only = false;
  batch->add_option("--links", links, "catalog names")->delimiter(',');
  batch->add_flag("--all", all_links, "every catalog entry");
  batch->add_flag("--virtual", virtual_only, "every virtual catalog entry");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return cmd_check(o);
    if (*homset) return cmd_homset(o);
    if (*inv) return cmd_job(o, {"counting", "cocycle-invariant"});
    if (*quiver) return cmd_job(o, {"quiver"});
    if (*polys) return cmd_job(o, {});
    if (*batch) return cmd_batch(o, links, all_links, virtual_only);
  } catch (const qcq::JobError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
