#include "irk/report.hpp"

#include <sstream>

#include "irk/zero_direct.hpp"

namespace irk {

using nlohmann::ordered_json;

ordered_json element_json(const InverseAlgebra& A, const Element& e) {
  ordered_json out;
  out["text"] = A.print(e);
  if (A.id().family == Family::dual_sym) {
    if (e == A.zero()) {
      out["symbol"] = "NABLA";
    } else if (e == A.identity()) {
      out["symbol"] = "DELTA";
    } else {
      out["symbol"] = nullptr;
    }
  } else {
    out["symbol"] = nullptr;
  }
  return out;
}

namespace {

ordered_json element_list(const InverseAlgebra& A, const std::vector<Element>& xs) {
  ordered_json out = ordered_json::array();
  for (const Element& x : xs) out.push_back(element_json(A, x));
  return out;
}

ordered_json input_json(const ReportInput& input) {
  ordered_json out;
  out["algebra"] = input.algebra;
  out["n"] = input.n;
  out["generators"] = input.generators;
  if (input.table_path) {
    out["table"] = *input.table_path;
  } else {
    out["table"] = nullptr;
  }
  ordered_json assignment = ordered_json::array();
  for (const auto& [label, text] : input.assignment) {
    assignment.push_back({{"generator", label}, {"element", text}});
  }
  out["assignment"] = assignment;
  return out;
}

ordered_json classifier_json(const InverseAlgebra& A, const ClassifierFlags& flags) {
  ordered_json out;
  out["weakly_transitive"] = flags.weakly_transitive;
  out["transitive"] = flags.transitive;
  out["weakly_effective"] = flags.weakly_effective;
  out["effective"] = flags.effective;
  out["disperse"] = flags.disperse;
  out["least_local_identity"] = element_json(A, flags.least_local_identity);
  return out;
}

ordered_json verdict_json(const TheoremVerdict& verdict) {
  ordered_json out;
  out["theorem"] = theorem_name(verdict.which);
  out["applicable"] = verdict.applicable;
  if (!verdict.applicable) {
    out["reason"] = verdict.not_applicable_reason;
    out["holds"] = nullptr;
    out["clauses"] = ordered_json::array();
    return out;
  }
  out["holds"] = verdict.holds;
  ordered_json clauses = ordered_json::array();
  for (const TheoremClause& clause : verdict.clauses) {
    ordered_json c;
    c["name"] = clause.name;
    c["holds"] = clause.holds;
    c["detail"] = clause.detail;
    clauses.push_back(std::move(c));
  }
  out["clauses"] = clauses;
  return out;
}

ordered_json degree_search_json(const DegreeSearch& search) {
  ordered_json out;
  out["family"] = family_name(search.family);
  out["n_max"] = search.n_max;
  switch (search.outcome) {
    case SearchOutcome::found: {
      out["outcome"] = "found";
      out["degree"] = search.degree;
      ordered_json witness = ordered_json::array();
      for (const auto& [label, image] : search.witness) {
        witness.push_back({{"generator", label},
                           {"element", search.witness_algebra->print(image)}});
      }
      out["witness"] = witness;
      break;
    }
    case SearchOutcome::not_found:
      out["outcome"] = "not_found";
      out["degree"] = "> " + std::to_string(search.n_max);
      out["witness"] = nullptr;
      break;
    case SearchOutcome::budget_exhausted:
      out["outcome"] = "budget_exhausted";
      out["degree"] = nullptr;
      out["witness"] = nullptr;
      break;
  }
  out["nodes"] = search.nodes;
  return out;
}

}  // namespace

ordered_json decomposition_report(const Subsemigroup& S, const ReportInput& input,
                                  const DegreeOptions& degree) {
  const InverseAlgebra& A = S.algebra();
  ordered_json report;
  report["schema"] = 1;
  report["input"] = input_json(input);
  report["elements"] = element_list(A, S.elements());

  OrbitDecomposition d = decompose(S);
  report["classifiers"] = classifier_json(A, d.flags);

  ordered_json orbits;
  std::vector<Element> domain, outside;
  for (std::size_t i = 0; i < d.t.primitives.size(); ++i) {
    (d.t.in_domain(i) ? domain : outside).push_back(d.t.primitives[i]);
  }
  orbits["domain"] = element_list(A, domain);
  orbits["outside_domain"] = element_list(A, outside);
  ordered_json classes = ordered_json::array();
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const OrbitFactor& factor = d.factors[i];
    ordered_json c;
    c["index"] = i + 1;
    c["primitives"] = element_list(A, factor.primitives);
    c["local_identity"] = element_json(A, factor.local_identity);
    ordered_json phi = ordered_json::array();
    for (std::size_t k = 0; k < S.elements().size(); ++k) {
      phi.push_back({{"from", A.print(S.elements()[k])},
                     {"to", A.print(factor.phi[k])}});
    }
    c["phi"] = phi;
    c["image"] = element_list(A, factor.image);
    FactorFlags flags = factor_properties(d, i);
    c["factor_flags"] = {{"weakly_transitive", flags.weakly_transitive},
                         {"transitive", flags.transitive},
                         {"weakly_effective", flags.weakly_effective},
                         {"effective", flags.effective}};
    classes.push_back(std::move(c));
  }
  orbits["classes"] = classes;
  report["orbits"] = orbits;

  ScheinCertificate cert = certify_schein(S, d);
  ordered_json schein;
  schein["bounded"] = cert.bounded;
  schein["injective"] = cert.injective;
  schein["homomorphism"] = cert.homomorphism;
  schein["recovery"] = cert.recovery;
  schein["orthogonal"] = cert.orthogonal;
  ordered_json witnesses;
  auto witness_field = [](const std::optional<std::string>& w) {
    return w ? ordered_json(*w) : ordered_json(nullptr);
  };
  witnesses["bounded"] = witness_field(cert.bounded_witness);
  witnesses["injective"] = witness_field(cert.injective_witness);
  witnesses["homomorphism"] = witness_field(cert.homomorphism_witness);
  witnesses["recovery"] = witness_field(cert.recovery_witness);
  witnesses["orthogonal"] = witness_field(cert.orthogonal_witness);
  schein["witnesses"] = witnesses;
  report["schein"] = schein;

  ZeroDirectDecomposition zd = decompose_zero_direct(S);
  ordered_json zero_direct;
  ordered_json summands = ordered_json::array();
  for (std::size_t a = 0; a < zd.summands.size(); ++a) {
    const ZeroDirectSummand& summand = zd.summands[a];
    ordered_json s;
    s["index"] = a + 1;
    s["primitives"] = element_list(A, summand.primitives);
    s["elements"] = element_list(A, summand.elements);
    s["local_identity"] = element_json(A, summand.local_identity);
    s["irreducible"] = summand.irreducible;
    s["weakly_effective"] = summand.weakly_effective;
    summands.push_back(std::move(s));
  }
  zero_direct["summands"] = summands;
  zero_direct["unused_primitives"] = element_list(A, zd.unused_primitives);
  report["zero_direct"] = zero_direct;

  ordered_json theorems;
  for (Theorem t : {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4}) {
    theorems[theorem_name(t)] = verdict_json(verify_theorem(S, t));
  }
  report["theorems"] = theorems;

  if (degree.enabled) {
    CayleyTable abstract = table_of(S);
    DegreeResult r = degree_result(abstract, degree.n_max_sym, degree.n_max_dual);
    ordered_json deg;
    deg["sym"] = degree_search_json(r.sym);
    deg["dual_sym"] = degree_search_json(r.dual);
    DegreeBounds bounds = check_degree_bounds(r);
    if (bounds.applicable) {
      deg["bounds"] = {{"deg", bounds.deg},
                       {"deg_star", bounds.deg_star},
                       {"log_lower", bounds.log_lower},
                       {"plus_one_upper", bounds.plus_one_upper},
                       {"hat_upper", bounds.hat_upper}};
    } else {
      deg["bounds"] = nullptr;
    }
    report["degree"] = deg;
  } else {
    report["degree"] = nullptr;
  }
  return report;
}

ordered_json theorem_report(const Subsemigroup& S, Theorem which,
                            const ReportInput& input) {
  ordered_json report;
  report["schema"] = 1;
  report["input"] = input_json(input);
  report["verdict"] = verdict_json(verify_theorem(S, which));
  return report;
}

namespace {

std::string element_text(const ordered_json& e) {
  std::string text = e.at("text").get<std::string>();
  if (!e.at("symbol").is_null()) {
    text += " (" + e.at("symbol").get<std::string>() + ")";
  }
  return text;
}

std::string element_line(const ordered_json& list) {
  std::string out;
  for (const auto& e : list) {
    if (!out.empty()) out += ", ";
    out += element_text(e);
  }
  return out.empty() ? "(none)" : out;
}

void render_verdict(std::ostringstream& out, const ordered_json& v) {
  out << "theorem " << v.at("theorem").get<std::string>() << ": ";
  if (!v.at("applicable").get<bool>()) {
    out << "not applicable (" << v.at("reason").get<std::string>() << ")\n";
    return;
  }
  out << (v.at("holds").get<bool>() ? "holds" : "FAILS") << "\n";
  for (const auto& clause : v.at("clauses")) {
    out << "  - " << clause.at("name").get<std::string>() << ": "
        << (clause.at("holds").get<bool>() ? "ok" : "VIOLATED");
    std::string detail = clause.at("detail").get<std::string>();
    if (!detail.empty()) out << "  [" << detail << "]";
    out << "\n";
  }
}

}  // namespace

std::string render_decomposition_text(const ordered_json& report) {
  std::ostringstream out;
  const auto& input = report.at("input");
  out << "algebra: " << input.at("algebra").get<std::string>() << "("
      << input.at("n").get<int>() << ")\n";
  out << "elements (" << report.at("elements").size()
      << "): " << element_line(report.at("elements")) << "\n";
  const auto& flags = report.at("classifiers");
  out << "classifiers: weakly_transitive=" << flags.at("weakly_transitive")
      << " transitive=" << flags.at("transitive")
      << " weakly_effective=" << flags.at("weakly_effective")
      << " effective=" << flags.at("effective")
      << " disperse=" << flags.at("disperse") << "\n";
  out << "least enclosing local identity: "
      << element_text(flags.at("least_local_identity")) << "\n";
  const auto& orbits = report.at("orbits");
  out << "primitive domain: " << element_line(orbits.at("domain")) << "\n";
  out << "outside domain:   " << element_line(orbits.at("outside_domain")) << "\n";
  for (const auto& c : orbits.at("classes")) {
    out << "orbit " << c.at("index") << ": P = {"
        << element_line(c.at("primitives")) << "}\n";
    out << "  e = " << element_text(c.at("local_identity")) << "\n";
    out << "  phi:";
    for (const auto& entry : c.at("phi")) {
      out << " " << entry.at("from").get<std::string>() << "->"
          << entry.at("to").get<std::string>();
    }
    out << "\n  image: " << element_line(c.at("image")) << "\n";
    const auto& ff = c.at("factor_flags");
    out << "  factor flags: weakly_transitive=" << ff.at("weakly_transitive")
        << " transitive=" << ff.at("transitive")
        << " weakly_effective=" << ff.at("weakly_effective")
        << " effective=" << ff.at("effective") << "\n";
  }
  const auto& schein = report.at("schein");
  out << "schein: bounded=" << schein.at("bounded")
      << " injective=" << schein.at("injective")
      << " homomorphism=" << schein.at("homomorphism")
      << " recovery=" << schein.at("recovery")
      << " orthogonal=" << schein.at("orthogonal") << "\n";
  for (const auto& [key, value] : schein.at("witnesses").items()) {
    if (!value.is_null()) {
      out << "  " << key << " witness: " << value.get<std::string>() << "\n";
    }
  }
  const auto& zd = report.at("zero_direct");
  out << "zero-direct summands: " << zd.at("summands").size() << "\n";
  for (const auto& s : zd.at("summands")) {
    out << "  summand " << s.at("index") << ": e = "
        << element_text(s.at("local_identity")) << ", elements {"
        << element_line(s.at("elements")) << "}, irreducible="
        << s.at("irreducible") << " weakly_effective="
        << s.at("weakly_effective") << "\n";
  }
  for (const auto& [name, verdict] : report.at("theorems").items()) {
    render_verdict(out, verdict);
  }
  if (!report.at("degree").is_null()) {
    const auto& degree = report.at("degree");
    for (const char* key : {"sym", "dual_sym"}) {
      const auto& search = degree.at(key);
      out << "degree in " << search.at("family").get<std::string>() << ": ";
      std::string outcome = search.at("outcome").get<std::string>();
      if (outcome == "found") {
        out << search.at("degree").get<int>();
        out << "  witness:";
        for (const auto& w : search.at("witness")) {
          out << " " << w.at("generator").get<std::string>() << "="
              << w.at("element").get<std::string>();
        }
      } else if (outcome == "not_found") {
        out << search.at("degree").get<std::string>();
      } else {
        out << "search budget exhausted";
      }
      out << "\n";
    }
    if (!degree.at("bounds").is_null()) {
      const auto& bounds = degree.at("bounds");
      out << "degree bounds: log_lower=" << bounds.at("log_lower")
          << " plus_one_upper=" << bounds.at("plus_one_upper")
          << " hat_upper=" << bounds.at("hat_upper") << "\n";
    }
  }
  return out.str();
}

std::string render_theorem_text(const ordered_json& report) {
  std::ostringstream out;
  render_verdict(out, report.at("verdict"));
  return out.str();
}

}  // namespace irk
