#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellweyl/criterion.hpp"
#include "ellweyl/verify.hpp"

namespace ellweyl {

enum class OutputFormat { Text, Machine };

struct ProblemOptions {
  std::uint64_t weyl_cap = WeylGroup::kDefaultCap;
  OutputFormat format = OutputFormat::Text;
  // Text sections to print, from {"summary", "chambers", "cells", "profile"};
  // empty means all. Machine output is always complete.
  std::vector<std::string> sections;
  friend bool operator==(const ProblemOptions&, const ProblemOptions&) = default;
};

struct ProblemInput {
  RootSystemSpec spec;
  EllipticVector t;
  InvolutionColoring z;
  ProblemOptions options;
};

// The named presets. su_pq takes the grading node h with 0 < h < p;
// hermitian_su grades at the block boundary itself.
ProblemInput preset_g2_case_a();
ProblemInput preset_g2_case_b();
ProblemInput preset_su_pq(int p, int q, int h);
ProblemInput preset_hermitian_su(int p, int q);
// Dispatch by name; parameters may be -1 when a preset does not use them.
ProblemInput make_preset(const std::string& name, int p, int q, int h);

struct WitnessReport {
  std::vector<int> word;  // 1-based generator indices
  std::vector<std::vector<long long>> simple_roots;
  std::vector<Rat> t_in_chamber;
  friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

struct FailureReport {
  std::vector<int> word;
  std::vector<std::vector<long long>> simple_roots;
  std::vector<std::vector<long long>> violators;
  friend bool operator==(const FailureReport&, const FailureReport&) = default;
};

struct CellReport {
  std::vector<int> word;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<std::vector<long long>> delta_sigma;
  friend bool operator==(const CellReport&, const CellReport&) = default;
};

// Everything the front end prints; plain data so that the machine encoding
// round-trips to an equal value.
struct Report {
  std::string root_system;
  std::vector<Rat> t;
  std::vector<long long> z;
  std::size_t r = 0;
  std::size_t levi_size = 0;
  std::size_t chambers = 0;
  std::string verdict;
  bool k_meets_u = false;
  std::string compact_type;
  std::vector<WitnessReport> witnesses;
  std::vector<FailureReport> failures;
  std::vector<int> cells_chamber;  // word of the chamber the cell table uses
  std::vector<CellReport> cells;
  std::optional<int> complement_codim;  // nullopt encodes "infinite"
  std::vector<std::size_t> poincare;
  friend bool operator==(const Report&, const Report&) = default;
};

// Validates and runs the full pipeline. Deterministic for fixed input.
Report run_report(const ProblemInput& input);

std::string emit_text(const Report& report, const std::vector<std::string>& sections = {});
std::string emit_machine(const Report& report);
Report parse_machine_report(const std::string& bytes);

// Problem documents (--input files) carry the same fields as the echo
// section of a report: root_system, t, z, and optionally cap and format.
ProblemInput parse_input_document(const std::string& bytes);
std::string format_input_document(const ProblemInput& input);

// Invariant suite for --verify, run on the instance the input describes.
std::vector<CheckResult> verify_input(const ProblemInput& input);

}  // namespace ellweyl
