#pragma once

#include "plap/grid.hpp"

#include <string>

namespace plap {

// Flat binary layout with a JSON header:
//   8-byte magic "PLAPFLD\n", uint64 LE header length, header JSON
//   (schema, kind, dim, shape, h, origin, margin[, dt, steps]),
//   then float64 LE values in storage order.
void write_field(const std::string& path, const ScalarField& f);
void write_field(const std::string& path, const SpaceTimeField& f);
ScalarField read_scalar_field(const std::string& path);
SpaceTimeField read_spacetime_field(const std::string& path);

// CSV export for plotting: coordinate columns then the value.
std::string field_csv(const ScalarField& f);
void write_field_csv(const std::string& path, const ScalarField& f);

// Formats a double with full round-trip precision (deterministic output).
std::string format_double(double v);

}  // namespace plap
