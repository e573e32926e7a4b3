#pragma once

#include "penta/bounds.hpp"
#include "penta/series.hpp"
#include "penta/verify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace penta::cli {

enum class Format { plain, json, csv };

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceExhausted = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render(const BoundReport& report, Format format);
std::string render(const MTable& table, Format format, unsigned i_min = 0);
std::string render(const std::vector<SeriesLevel>& levels, Format format);
std::string render(const BasisDecomposition& decomposition, Format format);
std::string render(const std::vector<CheckReport>& reports, Format format, bool verbose = false);

}  // namespace penta::cli
