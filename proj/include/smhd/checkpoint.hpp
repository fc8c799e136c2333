#pragma once

#include <iosfwd>
#include <string>

#include "smhd/mhd_solver.hpp"

namespace smhd {

/// Versioned text checkpoint of a state. Floats are written in hexadecimal so
/// that a restart reproduces the run bit for bit.
void write_checkpoint(std::ostream& os, const MhdState& state, const OperatorContext& ctx);
void save_checkpoint(const std::string& path, const MhdState& state, const OperatorContext& ctx);

/// Throws Error on a version, mesh or size mismatch.
MhdState read_checkpoint(std::istream& is, const OperatorContext& ctx);
MhdState load_checkpoint(const std::string& path, const OperatorContext& ctx);

}  // namespace smhd
