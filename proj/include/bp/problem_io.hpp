#pragma once

#include <string>

#include "bp/problem.hpp"

namespace bp {

/// Write a problem instance as a plain-text manifest plus field files
/// (binary format) into `dir`; returns the manifest path.
std::string save_problem(const std::string& dir, const std::string& stem, const Problem& p);

/// Reconstruct a problem from a manifest written by save_problem.
ProblemPtr load_problem(const std::string& manifest_path);

}  // namespace bp
