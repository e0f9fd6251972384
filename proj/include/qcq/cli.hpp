#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcq/diagram.hpp"
#include "qcq/invariants.hpp"
#include "qcq/quiver.hpp"

namespace qcq {

// exit_code 1: bad input or failed validation, 2: internal limit exceeded
class JobError : public std::runtime_error {
 public:
  JobError(const std::string& what, int exit_code = 1) : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

struct CatalogEntry {
  std::string name;
  std::string format;  // "pd" or "gauss"
  std::string code;
  std::string source;
  std::vector<int> reverse_labels;  // reverse the component carrying each label
  bool mirror = false;
  bool is_virtual = false;
};

class Catalog {
 public:
  static Catalog load(const std::filesystem::path& file);
  static Catalog load_default();  // data/catalog.json of the source tree
  static std::filesystem::path data_dir();

  const CatalogEntry* find(const std::string& name) const;
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  // pinned orientation and mirror applied
  LinkDiagram diagram(const std::string& name) const;

 private:
  std::vector<CatalogEntry> entries_;
};

LinkDiagram parse_link(const std::string& code, const std::string& format);
LinkDiagram entry_diagram(const CatalogEntry& e);

// How X, A, C and S are given in a job document:
//   "quandle":  builtin name, path to a table JSON file, or an inline table object
//   "group":    "Z", "Z3", ...
//   "cocycles": list of vectors, or "h2" for computed generators of H^2
//   "endos":    list of image vectors, "identity" or "all"
//   "require_cocycles": false accepts vectors failing the cocycle condition
struct DataSpec {
  nlohmann::json quandle = "transposition3";
  std::string group = "Z";
  nlohmann::json cocycles = nlohmann::json::array();
  nlohmann::json endos = "identity";
  bool require_cocycles = true;
};

struct JobConfig {
  std::string link;  // catalog name; empty when `code` is given
  std::string code;
  std::string format = "pd";
  std::vector<int> reverse;  // extra component reversals, by component index
  bool mirror = false;
  DataSpec data;
  std::vector<std::string> outputs{"polynomials"};  // counting, cocycle-invariant, quiver, polynomials
  PathLimits limits;
};

JobConfig job_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
DataVector resolve_data(const DataSpec& spec, const std::filesystem::path& base_dir = {});
LinkDiagram resolve_link(const JobConfig& cfg, const Catalog& catalog);

nlohmann::json run_job(const JobConfig& cfg, const Catalog& catalog,
                       const std::filesystem::path& base_dir = {});
std::string report_text(const nlohmann::json& report);

// Rows in the order of `names`; a failing row records its error and the batch
// continues. Links with equal path matrix polynomial are grouped.
nlohmann::json run_batch(const std::vector<std::string>& names, const JobConfig& tmpl, const Catalog& catalog,
                         const std::filesystem::path& base_dir = {});
std::string batch_text(const nlohmann::json& table);

}  // namespace qcq
