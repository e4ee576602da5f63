#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpack/packing.hpp"

namespace hyperpack::cli {

enum class Format { Pretty, Csv, Json };

/// One output row. Which height fields are present depends on the mode:
/// two-congruent has h; the other modes have h0 and h3.
struct OutputRecord {
  double u = 0, v = 0, w = 0;
  std::string mode;
  std::optional<double> h, h0, h3, x;
  std::optional<std::string> case_label;
  std::optional<int> base;
  double piece_volume_sum = 0;
  double orthoscheme_volume = 0;
  double density = 0;
};

OutputRecord to_record(const DensityResult& r, std::string_view mode_name);

/// Writes records with the default 6 fractional digits. CSV always carries a
/// header row; JSON is an array of objects.
void write_records(std::ostream& out, const std::vector<OutputRecord>& records, Format format,
                   int precision = 6);

/// The parameter triples listed in the published tables 1-3.
std::vector<SchlafliParams> table_rows(int table);

/// Entry point shared by the executable and the tests. Returns the process
/// exit code: 0 ok, 2 invalid parameters, 3 infeasible configuration,
/// 4 empty scan, 5 internal inconsistency. Errors go to err as a JSON object
/// {code, name, message}.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperpack::cli
