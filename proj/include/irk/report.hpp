#ifndef IRK_REPORT_HPP
#define IRK_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "irk/embed_degree.hpp"
#include "irk/schein.hpp"

namespace irk {

/// Echo of how the subsemigroup was supplied.
struct ReportInput {
  std::string algebra;
  int n = 0;
  std::vector<std::string> generators;
  std::optional<std::string> table_path;
  std::vector<std::pair<std::string, std::string>> assignment;
};

struct DegreeOptions {
  bool enabled = false;
  int n_max_sym = 5;
  int n_max_dual = 4;
};

/// Element rendering: canonical text plus the NABLA/DELTA symbol where one
/// applies (dual family only).
nlohmann::ordered_json element_json(const InverseAlgebra& A, const Element& e);

/// The full decomposition report: roster, classifiers, orbit section with
/// phi tables and factor flags, Schein certificate, 0-direct summands,
/// theorem verdicts, optional degree section. Field order is fixed and all
/// sequences are canonical, so equal inputs produce byte-identical JSON.
nlohmann::ordered_json decomposition_report(const Subsemigroup& S,
                                            const ReportInput& input,
                                            const DegreeOptions& degree = {});

nlohmann::ordered_json theorem_report(const Subsemigroup& S, Theorem which,
                                      const ReportInput& input);

std::string render_decomposition_text(const nlohmann::ordered_json& report);
std::string render_theorem_text(const nlohmann::ordered_json& report);

}  // namespace irk

#endif  // IRK_REPORT_HPP
