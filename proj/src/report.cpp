#include "ellweyl/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace ellweyl {

namespace {

using Json = nlohmann::ordered_json;

std::vector<long long> root_coords(const RootSystem& rs, Root r) {
  const auto v = rs.coords(r);
  return {v.begin(), v.end()};
}

std::vector<int> one_based(const std::vector<int>& word) {
  std::vector<int> out(word.size());
  std::transform(word.begin(), word.end(), out.begin(), [](int i) { return i + 1; });
  return out;
}

std::string word_label(const std::vector<int>& word_1based) {
  if (word_1based.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word_1based.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(word_1based[i]);
  }
  return out;
}

std::string coords_label(const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::string root_list_label(const std::vector<std::vector<long long>>& roots) {
  std::string out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += " ";
    out += coords_label(roots[i]);
  }
  return out.empty() ? "-" : out;
}

Json rational_vector_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& x : v) out.push_back(format_rational(x));
  return out;
}

std::vector<Rat> rational_vector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ConstructionError(where + ": expected an array");
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& item = j[i];
    const std::string slot = where + "[" + std::to_string(i + 1) + "]";
    if (item.is_number_integer()) {
      out.emplace_back(item.get<long long>());
    } else if (item.is_string()) {
      out.push_back(parse_rational(item.get<std::string>(), slot));
    } else {
      throw ConstructionError(slot + ": expected an integer or a \"p/q\" string");
    }
  }
  return out;
}

template <typename T>
Json int_matrix_to_json(const std::vector<std::vector<T>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

std::vector<std::vector<long long>> int_matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ConstructionError(where + ": expected an array of integer arrays");
  std::vector<std::vector<long long>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw ConstructionError(where + ": expected an array of integer arrays");
    out.push_back(row.get<std::vector<long long>>());
  }
  return out;
}

ProblemInput validated(ProblemInput input) {
  const int ell = input.spec.total_rank();
  RootSystem::build(input.spec);  // surfaces family/rank errors early
  if (static_cast<int>(input.t.t.size()) != ell) {
    throw ConstructionError("t: expected " + std::to_string(ell) + " entries, got " +
                            std::to_string(input.t.t.size()));
  }
  if (static_cast<int>(input.z.z.size()) != ell) {
    throw ConstructionError("z: expected " + std::to_string(ell) + " entries, got " +
                            std::to_string(input.z.z.size()));
  }
  if (input.t.is_zero()) throw ConstructionError("t: the elliptic element must be non-zero");
  for (const auto& section : input.options.sections) {
    if (section != "summary" && section != "chambers" && section != "cells" &&
        section != "profile") {
      throw ConstructionError("sections: unknown name '" + section +
                              "' (known: summary, chambers, cells, profile)");
    }
  }
  return input;
}

}  // namespace

ProblemInput preset_g2_case_a() {
  ProblemInput input;
  input.spec = RootSystemSpec::parse("G2");
  input.t.t = {Rat(1), Rat(-2)};
  input.z.z = {0, 1};
  return input;
}

ProblemInput preset_g2_case_b() {
  ProblemInput input = preset_g2_case_a();
  input.t.t = {Rat(1), Rat(-3)};
  return input;
}

ProblemInput preset_su_pq(int p, int q, int h) {
  if (p < 1 || q < 1 || p + q < 2) {
    throw ConstructionError("su_pq: need p >= 1, q >= 1");
  }
  if (h <= 0 || h >= p) {
    throw ConstructionError("su_pq: need 0 < h < p (got h = " + std::to_string(h) +
                            ", p = " + std::to_string(p) + ")");
  }
  const int ell = p + q - 1;
  ProblemInput input;
  input.spec.components = {{Family::A, ell}};
  input.t.t.assign(static_cast<std::size_t>(ell), Rat(0));
  input.t.t[static_cast<std::size_t>(h - 1)] = Rat(1);
  input.z.z.assign(static_cast<std::size_t>(ell), 0);
  input.z.z[static_cast<std::size_t>(p - 1)] = 1;
  return input;
}

ProblemInput preset_hermitian_su(int p, int q) {
  if (p < 1 || q < 1) throw ConstructionError("hermitian_su: need p >= 1, q >= 1");
  const int ell = p + q - 1;
  ProblemInput input;
  input.spec.components = {{Family::A, ell}};
  input.t.t.assign(static_cast<std::size_t>(ell), Rat(0));
  input.t.t[static_cast<std::size_t>(p - 1)] = Rat(1);
  input.z.z.assign(static_cast<std::size_t>(ell), 0);
  input.z.z[static_cast<std::size_t>(p - 1)] = 1;
  return input;
}

ProblemInput make_preset(const std::string& name, int p, int q, int h) {
  if (name == "g2_case_a") return preset_g2_case_a();
  if (name == "g2_case_b") return preset_g2_case_b();
  if (name == "su_pq") return preset_su_pq(p, q, h);
  if (name == "hermitian_su") return preset_hermitian_su(p, q);
  throw ConstructionError("preset: unknown name '" + name +
                          "' (known: g2_case_a, g2_case_b, su_pq, hermitian_su)");
}

Report run_report(const ProblemInput& raw) {
  const ProblemInput input = validated(raw);
  const RootSystem rs = RootSystem::build(input.spec);
  const WeylGroup W = WeylGroup::enumerate(rs, input.options.weyl_cap);

  Report report;
  report.root_system = input.spec.to_string();
  report.t = input.t.t;
  report.z = input.z.z;

  const GradingData grading = grading_sets(rs, input.t);
  report.r = grading.r;
  report.levi_size = grading.levi.size();
  report.compact_type = describe_subsystem(rs, compact_subsystem(rs, input.z));

  const CriterionReport outcome = check_condition_S(rs, W, input.t, input.z);
  report.verdict = to_string(outcome.verdict);
  report.k_meets_u = outcome.k_meets_u;
  report.chambers = outcome.witnesses.size() + outcome.failures.size();

  for (const ChamberCandidate& witness : outcome.witnesses) {
    WitnessReport w;
    w.word = one_based(W[witness.w].word);
    for (const Root r : witness.simple_roots) w.simple_roots.push_back(root_coords(rs, r));
    w.t_in_chamber = witness.t_in_chamber.t;
    report.witnesses.push_back(std::move(w));
  }
  for (const ChamberFailure& failure : outcome.failures) {
    FailureReport f;
    f.word = one_based(W[failure.candidate.w].word);
    for (const Root r : failure.candidate.simple_roots) f.simple_roots.push_back(root_coords(rs, r));
    for (const Root r : failure.violators) f.violators.push_back(root_coords(rs, r));
    report.failures.push_back(std::move(f));
  }

  // The cell table is chamber data, not coloring data, so it is reported in
  // every verdict: for the first witness chamber when one exists, otherwise
  // for the first chamber candidate.
  const std::vector<ChamberCandidate> chambers = s1_chambers(rs, W, input.t);
  const ChamberCandidate& cell_chamber =
      outcome.witnesses.empty() ? chambers.front() : outcome.witnesses.front();
  report.cells_chamber = one_based(W[cell_chamber.w].word);
  const KostantDecomposition cells =
      outcome.kostant ? *outcome.kostant : bruhat_cells(rs, W, cell_chamber.t_in_chamber);
  for (const KostantCell& cell : cells.entries) {
    CellReport c;
    c.word = one_based(W[cell.sigma].word);
    c.n = cell.n;
    c.dim = cell.cell_dim;
    for (const Root r : cell.delta_sigma) c.delta_sigma.push_back(root_coords(rs, r));
    report.cells.push_back(std::move(c));
  }

  const auto codim = complement_codimension(rs, W, cell_chamber.t_in_chamber);
  report.complement_codim = codim ? std::optional<int>(static_cast<int>(*codim)) : std::nullopt;
  report.poincare = poincare_profile(rs, W, cell_chamber.t_in_chamber);
  return report;
}

std::string emit_text(const Report& report, const std::vector<std::string>& sections) {
  const auto wanted = [&sections](const char* name) {
    if (sections.empty()) return true;
    return std::find(sections.begin(), sections.end(), name) != sections.end();
  };
  std::ostringstream out;
  if (wanted("summary")) {
    out << "root system        : " << report.root_system << "\n";
    out << "t (alpha_i(-iT))   : " << format_rational_vector(report.t) << "\n";
    out << "z (alpha_i(Z))     : (";
    for (std::size_t i = 0; i < report.z.size(); ++i) out << (i ? ", " : "") << report.z[i];
    out << ")\n";
    out << "compact subsystem  : " << report.compact_type << "\n";
    out << "u+ size (r)        : " << report.r << "\n";
    out << "levi root count    : " << report.levi_size << "   (levi dim = rank + levi roots = "
        << report.t.size() + report.levi_size << ")\n";
    out << "chambers with (s1) : " << report.chambers << "\n\n";
  }
  out << "verdict: " << report.verdict;
  if (report.verdict == "OBSTRUCTED") out << "  [no compact root meets u]";
  out << "\n";

  if (wanted("chambers")) {
    if (!report.witnesses.empty()) {
      out << "\nwitness chambers (simple roots all compact where graded):\n";
      for (const auto& w : report.witnesses) {
        out << "  w = " << std::left << std::setw(12) << word_label(w.word)
            << " simple roots: " << root_list_label(w.simple_roots)
            << "   t there: " << format_rational_vector(w.t_in_chamber) << "\n";
      }
    }
    if (!report.failures.empty()) {
      out << "\nfailing chambers:\n";
      for (const auto& f : report.failures) {
        out << "  w = " << std::left << std::setw(12) << word_label(f.word)
            << " simple roots: " << root_list_label(f.simple_roots)
            << "   violators: " << root_list_label(f.violators) << "\n";
      }
    }
  }

  if (wanted("cells")) {
    out << "\ncells for chamber w = " << word_label(report.cells_chamber) << ":\n";
    out << "  " << std::left << std::setw(18) << "word" << std::setw(5) << "n" << std::setw(6)
        << "dim" << "cell roots\n";
    for (const auto& cell : report.cells) {
      out << "  " << std::left << std::setw(18) << word_label(cell.word) << std::setw(5) << cell.n
          << std::setw(6) << cell.dim << root_list_label(cell.delta_sigma) << "\n";
    }
    out << "complement codimension: ";
    if (report.complement_codim) {
      out << *report.complement_codim;
    } else {
      out << "infinite (all cells retained)";
    }
    out << "\n";
  }
  if (wanted("profile")) {
    out << "poincare profile: [";
    for (std::size_t i = 0; i < report.poincare.size(); ++i) {
      out << (i ? ", " : "") << report.poincare[i];
    }
    out << "]\n";
  }
  return out.str();
}

std::string emit_machine(const Report& report) {
  Json j;
  j["root_system"] = report.root_system;
  j["t"] = rational_vector_to_json(report.t);
  j["z"] = report.z;
  j["r"] = report.r;
  j["levi_size"] = report.levi_size;
  j["chambers"] = report.chambers;
  j["verdict"] = report.verdict;
  j["k_meets_u"] = report.k_meets_u;
  j["compact_type"] = report.compact_type;
  j["witnesses"] = Json::array();
  for (const auto& w : report.witnesses) {
    Json item;
    item["word"] = w.word;
    item["simple_roots"] = int_matrix_to_json(w.simple_roots);
    item["t_in_chamber"] = rational_vector_to_json(w.t_in_chamber);
    j["witnesses"].push_back(std::move(item));
  }
  j["failures"] = Json::array();
  for (const auto& f : report.failures) {
    Json item;
    item["word"] = f.word;
    item["simple_roots"] = int_matrix_to_json(f.simple_roots);
    item["violators"] = int_matrix_to_json(f.violators);
    j["failures"].push_back(std::move(item));
  }
  j["cells_chamber"] = report.cells_chamber;
  j["cells"] = Json::array();
  for (const auto& cell : report.cells) {
    Json item;
    item["word"] = cell.word;
    item["n"] = cell.n;
    item["dim"] = cell.dim;
    item["delta_sigma"] = int_matrix_to_json(cell.delta_sigma);
    j["cells"].push_back(std::move(item));
  }
  if (report.complement_codim) {
    j["complement_codim"] = *report.complement_codim;
  } else {
    j["complement_codim"] = nullptr;
  }
  j["poincare"] = report.poincare;
  return j.dump(2) + "\n";
}

Report parse_machine_report(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("report: invalid JSON: ") + e.what());
  }
  try {
    Report report;
    report.root_system = j.at("root_system").get<std::string>();
    report.t = rational_vector_from_json(j.at("t"), "t");
    report.z = j.at("z").get<std::vector<long long>>();
    report.r = j.at("r").get<std::size_t>();
    report.levi_size = j.at("levi_size").get<std::size_t>();
    report.chambers = j.at("chambers").get<std::size_t>();
    report.verdict = j.at("verdict").get<std::string>();
    verdict_from_string(report.verdict);
    report.k_meets_u = j.at("k_meets_u").get<bool>();
    report.compact_type = j.at("compact_type").get<std::string>();
    for (const auto& item : j.at("witnesses")) {
      WitnessReport w;
      w.word = item.at("word").get<std::vector<int>>();
      w.simple_roots = int_matrix_from_json(item.at("simple_roots"), "witnesses.simple_roots");
      w.t_in_chamber = rational_vector_from_json(item.at("t_in_chamber"), "witnesses.t_in_chamber");
      report.witnesses.push_back(std::move(w));
    }
    for (const auto& item : j.at("failures")) {
      FailureReport f;
      f.word = item.at("word").get<std::vector<int>>();
      f.simple_roots = int_matrix_from_json(item.at("simple_roots"), "failures.simple_roots");
      f.violators = int_matrix_from_json(item.at("violators"), "failures.violators");
      report.failures.push_back(std::move(f));
    }
    report.cells_chamber = j.at("cells_chamber").get<std::vector<int>>();
    for (const auto& item : j.at("cells")) {
      CellReport c;
      c.word = item.at("word").get<std::vector<int>>();
      c.n = item.at("n").get<std::size_t>();
      c.dim = item.at("dim").get<std::size_t>();
      c.delta_sigma = int_matrix_from_json(item.at("delta_sigma"), "cells.delta_sigma");
      report.cells.push_back(std::move(c));
    }
    if (!j.at("complement_codim").is_null()) {
      report.complement_codim = j.at("complement_codim").get<int>();
    }
    report.poincare = j.at("poincare").get<std::vector<std::size_t>>();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("report: missing or mistyped field: ") + e.what());
  }
}

ProblemInput parse_input_document(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("input: invalid JSON: ") + e.what());
  }
  try {
    ProblemInput input;
    input.spec = RootSystemSpec::parse(j.at("root_system").get<std::string>());
    input.t.t = rational_vector_from_json(j.at("t"), "t");
    input.z.z = j.at("z").get<std::vector<long long>>();
    if (j.contains("cap")) input.options.weyl_cap = j.at("cap").get<std::uint64_t>();
    if (j.contains("format")) {
      const auto format = j.at("format").get<std::string>();
      if (format == "text") {
        input.options.format = OutputFormat::Text;
      } else if (format == "machine") {
        input.options.format = OutputFormat::Machine;
      } else {
        throw ConstructionError("format: expected 'text' or 'machine', got '" + format + "'");
      }
    }
    if (j.contains("sections")) {
      input.options.sections = j.at("sections").get<std::vector<std::string>>();
    }
    return validated(std::move(input));
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("input: missing or mistyped field: ") + e.what());
  }
}

std::string format_input_document(const ProblemInput& input) {
  Json j;
  j["root_system"] = input.spec.to_string();
  j["t"] = rational_vector_to_json(input.t.t);
  j["z"] = input.z.z;
  j["cap"] = input.options.weyl_cap;
  j["format"] = input.options.format == OutputFormat::Machine ? "machine" : "text";
  if (!input.options.sections.empty()) j["sections"] = input.options.sections;
  return j.dump(2) + "\n";
}

std::vector<CheckResult> verify_input(const ProblemInput& raw) {
  const ProblemInput input = validated(raw);
  const RootSystem rs = RootSystem::build(input.spec);
  const WeylGroup W = WeylGroup::enumerate(rs, input.options.weyl_cap);
  return verify_instance(rs, W, input.t, input.z);
}

}  // namespace ellweyl
