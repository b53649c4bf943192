#pragma once

// Command layer shared by the CLI binary and the acceptance suite: each
// workflow takes input text and returns the full output text.

#include <string>

#include "tropimp/numeric.hpp"

namespace tropimp {

struct CliOptions {
  Int delta = 1;
  int threads = 1;
  std::string format = "auto";  // fan | polytope | auto
};

// Tropical variety of a generic complete intersection; prints the mixed
// volume instead when the polynomial count equals the variable count.
std::string run_trci(const std::string& input_text, const CliOptions& opts = {});

// Push a weighted fan forward along a LINEAR_MAP matrix; reconstructs the
// dual polytope when the image has codimension one.
std::string run_project(const std::string& fan_text, const std::string& matrix_text,
                        const CliOptions& opts = {});

// Implicitization pipeline. Inputs with n polynomials in n-1 variables run
// through the graph construction; inputs already in graph form (fewer
// polynomials than variables) are eliminated onto their trailing
// coordinates.
std::string run_trim(const std::string& input_text, const CliOptions& opts = {});

}  // namespace tropimp
