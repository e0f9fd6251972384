#include "qcq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "qcq/cohomology.hpp"
#include "qcq/homset.hpp"

#ifndef QCQ_DATA_DIR
#define QCQ_DATA_DIR "data"
#endif

namespace qcq {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json read_json(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw JobError("cannot open " + file.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw JobError(file.string() + ": " + e.what());
  }
}

fs::path resolve_path(const std::string& p, const fs::path& base_dir) {
  fs::path path(p);
  if (path.is_relative() && !base_dir.empty() && fs::exists(base_dir / path)) return base_dir / path;
  return path;
}

std::vector<std::int64_t> as_vector(const json& j, const std::string& what) {
  if (!j.is_array()) throw JobError(what + " must be a list of integers");
  std::vector<std::int64_t> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw JobError(what + " must be a list of integers");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

}  // namespace

fs::path Catalog::data_dir() { return fs::path(QCQ_DATA_DIR); }

Catalog Catalog::load(const fs::path& file) {
  json j = read_json(file);
  Catalog c;
  try {
    for (const auto& r : j.is_array() ? j : j.at("links")) {
      CatalogEntry e;
      e.name = r.at("name").get<std::string>();
      e.format = r.at("format").get<std::string>();
      e.code = r.at("code").get<std::string>();
      e.source = r.value("source", "");
      e.reverse_labels = r.value("reverse_labels", std::vector<int>{});
      e.mirror = r.value("mirror", false);
      e.is_virtual = r.value("virtual", false);
      c.entries_.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw JobError(file.string() + ": " + e.what());
  }
  return c;
}

Catalog Catalog::load_default() { return load(data_dir() / "catalog.json"); }

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

LinkDiagram Catalog::diagram(const std::string& name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw JobError("link '" + name + "' not in catalog");
  return entry_diagram(*e);
}

LinkDiagram parse_link(const std::string& code, const std::string& format) {
  try {
    if (format == "pd") return parse_pd(code);
    if (format == "gauss") return parse_gauss(code);
  } catch (const DiagramError& e) {
    throw JobError(e.what());
  }
  throw JobError("unknown diagram format '" + format + "' (expected pd or gauss)");
}

LinkDiagram entry_diagram(const CatalogEntry& e) {
  LinkDiagram d = parse_link(e.code, e.format);
  if (!e.reverse_labels.empty()) {
    std::vector<int> comps;
    for (int label : e.reverse_labels) comps.push_back(component_of_source_label(d, label));
    d = reverse_components(d, comps);
  }
  return e.mirror ? mirror(d) : d;
}

JobConfig job_from_json(const json& j, const fs::path& base_dir) {
  JobConfig cfg;
  try {
    if (j.contains("link")) cfg.link = j.at("link").get<std::string>();
    if (j.contains("code")) cfg.code = j.at("code").get<std::string>();
    cfg.format = j.value("format", cfg.format);
    cfg.reverse = j.value("reverse", cfg.reverse);
    cfg.mirror = j.value("mirror", cfg.mirror);
    if (j.contains("quandle")) cfg.data.quandle = j.at("quandle");
    cfg.data.group = j.value("group", cfg.data.group);
    if (j.contains("cocycles")) cfg.data.cocycles = j.at("cocycles");
    if (j.contains("endos")) cfg.data.endos = j.at("endos");
    cfg.data.require_cocycles = j.value("require_cocycles", cfg.data.require_cocycles);
    if (j.contains("outputs")) cfg.outputs = j.at("outputs").get<std::vector<std::string>>();
    cfg.limits.max_edges = j.value("max_edges", cfg.limits.max_edges);
    cfg.limits.max_steps = j.value("max_steps", cfg.limits.max_steps);
  } catch (const json::exception& e) {
    throw JobError(std::string("bad job document: ") + e.what());
  }
  if (!cfg.link.empty() && !cfg.code.empty()) throw JobError("give either link or code, not both");
  static const std::vector<std::string> known{"counting", "cocycle-invariant", "quiver", "polynomials"};
  for (const auto& o : cfg.outputs)
    if (std::find(known.begin(), known.end(), o) == known.end()) throw JobError("unknown output '" + o + "'");
  if (cfg.data.quandle.is_string()) {
    auto s = cfg.data.quandle.get<std::string>();
    if (s.ends_with(".json")) cfg.data.quandle = resolve_path(s, base_dir).string();
  }
  return cfg;
}

DataVector resolve_data(const DataSpec& spec, const fs::path& base_dir) {
  DataVector dv;
  try {
    if (spec.quandle.is_object()) {
      dv.x = biquandle_from_json(spec.quandle);
    } else if (spec.quandle.is_string()) {
      auto s = spec.quandle.get<std::string>();
      if (s.ends_with(".json"))
        dv.x = biquandle_from_json(read_json(resolve_path(s, base_dir)));
      else
        dv.x = builtin_biquandle(s);
    } else {
      throw JobError("quandle must be a name, a file or a table object");
    }
    auto axioms = check_axioms(dv.x);
    if (!axioms.empty()) throw JobError("not a biquandle: " + axioms.front());
    dv.a = CoeffGroup::parse(spec.group);
  } catch (const AlgebraError& e) {
    throw JobError(e.what());
  } catch (const CohomologyError& e) {
    throw JobError(e.what());
  } catch (const std::invalid_argument& e) {
    throw JobError(e.what());
  }

  if (spec.cocycles.is_string()) {
    if (spec.cocycles.get<std::string>() != "h2") throw JobError("cocycles must be a list or \"h2\"");
    dv.cocycles = h2_generators(dv.x, dv.a).generators;
  } else {
    if (!spec.cocycles.is_array()) throw JobError("cocycles must be a list or \"h2\"");
    for (const auto& c : spec.cocycles) dv.cocycles.push_back({as_vector(c, "cocycle")});
  }

  if (spec.endos.is_string()) {
    auto s = spec.endos.get<std::string>();
    if (s == "identity")
      dv.endos = {identity_map(dv.x.order())};
    else if (s == "all")
      dv.endos = endomorphisms(dv.x);
    else
      throw JobError("endos must be a list, \"identity\" or \"all\"");
  } else {
    if (!spec.endos.is_array()) throw JobError("endos must be a list, \"identity\" or \"all\"");
    for (const auto& e : spec.endos) {
      EndoMap f;
      for (auto v : as_vector(e, "endomorphism")) f.images.push_back(static_cast<int>(v));
      if (static_cast<int>(f.images.size()) != dv.x.order() ||
          std::any_of(f.images.begin(), f.images.end(), [&](int v) { return v < 1 || v > dv.x.order(); }))
        throw JobError("endomorphism images must be " + std::to_string(dv.x.order()) + " elements of 1.." +
                       std::to_string(dv.x.order()));
      dv.endos.push_back(std::move(f));
    }
  }

  dv.require_cocycles = spec.require_cocycles;
  auto report = validate(dv);
  if (!report.empty()) throw JobError(report.front());
  return dv;
}

LinkDiagram resolve_link(const JobConfig& cfg, const Catalog& catalog) {
  LinkDiagram d = cfg.code.empty() ? catalog.diagram(cfg.link) : parse_link(cfg.code, cfg.format);
  if (cfg.code.empty() && cfg.link.empty()) throw JobError("job names no link");
  if (!cfg.reverse.empty()) {
    for (int c : cfg.reverse)
      if (c < 0 || c >= d.component_count()) throw JobError("no component " + std::to_string(c));
    d = reverse_components(d, cfg.reverse);
  }
  return cfg.mirror ? mirror(d) : d;
}

json run_job(const JobConfig& cfg, const Catalog& catalog, const fs::path& base_dir) {
  auto wants = [&](const char* o) { return std::find(cfg.outputs.begin(), cfg.outputs.end(), o) != cfg.outputs.end(); };
  LinkDiagram d = resolve_link(cfg, catalog);
  DataVector dv = resolve_data(cfg.data, base_dir);

  json report;
  report["link"] = cfg.code.empty() ? cfg.link : "(inline)";
  report["crossings"] = d.crossing_count();
  report["components"] = d.component_count();
  report["group"] = dv.a.name();
  json cs = json::array();
  for (const auto& c : dv.cocycles) cs.push_back(c.values);
  report["cocycles"] = cs;
  json es = json::array();
  for (const auto& e : dv.endos) es.push_back(e.images);
  report["endos"] = es;

  try {
    if (wants("counting")) report["counting"] = counting_invariant(d, dv.x);
    if (wants("cocycle-invariant")) {
      json inv = json::array();
      for (const auto& c : dv.cocycles) inv.push_back(cocycle_invariant(d, dv.x, c, dv.a).to_string(true));
      report["cocycle_invariant"] = inv;
    }
    if (wants("quiver") || wants("polynomials")) {
      if (!dv.a.finite()) throw JobError("quiver outputs need a finite coefficient group");
      RepQuiver q = build_representation(d, dv);
      if (wants("quiver")) report["quiver"] = to_json(q);
      if (wants("polynomials")) {
        auto p = four_polynomials(q, cfg.limits);
        report["polynomials"] = {{"edge_char", p.edge_char.to_string()},
                                 {"edge_matrix", p.edge_matrix.to_string()},
                                 {"path_char", p.path_char.to_string()},
                                 {"path_matrix", p.path_matrix.to_string()},
                                 {"path_count", p.path_count}};
      }
    }
  } catch (const PathLimitExceeded& e) {
    throw JobError(e.what(), 2);
  } catch (const OverflowError& e) {
    throw JobError(e.what(), 2);
  } catch (const QuiverError& e) {
    throw JobError(e.what());
  }
  return report;
}

std::string report_text(const json& r) {
  std::ostringstream out;
  out << r.at("link").get<std::string>() << ": " << r.at("crossings") << " crossings, " << r.at("components")
      << " components, A = " << r.at("group").get<std::string>() << "\n";
  if (r.contains("counting")) out << "colorings: " << r.at("counting") << "\n";
  if (r.contains("cocycle_invariant")) {
    const auto& cs = r.at("cocycles");
    for (std::size_t i = 0; i < cs.size(); ++i)
      out << "cocycle " << cs[i].dump() << ": " << r.at("cocycle_invariant")[i].get<std::string>() << "\n";
  }
  if (r.contains("quiver")) {
    const auto& q = r.at("quiver");
    out << "quiver: " << q.at("vertices").size() << " vertices, " << q.at("edges").size() << " edges\n";
  }
  if (r.contains("polynomials")) {
    const auto& p = r.at("polynomials");
    out << "edge char:   " << p.at("edge_char").get<std::string>() << "\n"
        << "edge matrix: " << p.at("edge_matrix").get<std::string>() << "\n"
        << "path char:   " << p.at("path_char").get<std::string>() << "\n"
        << "path matrix: " << p.at("path_matrix").get<std::string>() << "\n"
        << "maximal paths: " << p.at("path_count") << "\n";
  }
  return out.str();
}

json run_batch(const std::vector<std::string>& names, const JobConfig& tmpl, const Catalog& catalog,
               const fs::path& base_dir) {
  std::vector<std::future<json>> jobs;
  for (const auto& name : names) {
    JobConfig cfg = tmpl;
    cfg.link = name;
    cfg.code.clear();
    jobs.push_back(std::async(std::launch::async, [cfg, &catalog, base_dir]() -> json {
      try {
        return {{"ok", true}, {"report", run_job(cfg, catalog, base_dir)}};
      } catch (const JobError& e) {
        return {{"ok", false}, {"error", e.what()}, {"exit_code", e.exit_code()}};
      }
    }));
  }
  json rows = json::array();
  std::map<std::string, std::vector<std::string>> groups;
  std::vector<std::string> group_order;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    json row = jobs[i].get();
    row["link"] = names[i];
    if (row["ok"] && row["report"].contains("polynomials")) {
      auto key = row["report"]["polynomials"]["path_matrix"].get<std::string>();
      if (!groups.count(key)) group_order.push_back(key);
      groups[key].push_back(names[i]);
    }
    rows.push_back(std::move(row));
  }
  json g = json::array();
  for (const auto& key : group_order) g.push_back({{"path_matrix", key}, {"links", groups[key]}});
  return {{"rows", rows}, {"groups", g}};
}

std::string batch_text(const json& table) {
  std::ostringstream out;
  for (const auto& row : table.at("rows")) {
    out << row.at("link").get<std::string>() << "\t";
    if (!row.at("ok")) {
      out << "error: " << row.at("error").get<std::string>() << "\n";
      continue;
    }
    const auto& r = row.at("report");
    if (r.contains("polynomials")) {
      const auto& p = r.at("polynomials");
      out << p.at("edge_char").get<std::string>() << "\t" << p.at("edge_matrix").get<std::string>() << "\t"
          << p.at("path_char").get<std::string>() << "\t" << p.at("path_matrix").get<std::string>();
    } else if (r.contains("counting")) {
      out << r.at("counting");
    }
    out << "\n";
  }
  if (!table.at("groups").empty()) {
    out << "\ngrouped by path matrix polynomial:\n";
    for (const auto& g : table.at("groups")) {
      out << g.at("path_matrix").get<std::string>() << ":";
      for (const auto& l : g.at("links")) out << " " << l.get<std::string>();
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace qcq
