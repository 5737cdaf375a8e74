// CSV snapshot and diagnostics serialization. Floats are written in the
// shortest representation that round-trips, so rewriting parsed values
// reproduces the original text.
#pragma once

#include <string>

#include "ssdg/field.hpp"
#include "ssdg/trajectory.hpp"
#include "ssdg/types.hpp"

namespace ssdg {

std::string format_double(Real value);

// Columns x, re, im, rho (rho = re^2 + im^2), one row per grid point.
void write_snapshot_csv(const std::string& path, const ComplexField& field);

// Low-level variant with caller-supplied abscissae (used to round-trip
// re-ingested snapshots verbatim).
void write_snapshot_csv(const std::string& path, const ArrayXr& x, const ArrayXc& values);

struct SnapshotCsv {
  ComplexField field;  // grid reconstructed from the x column
  ArrayXr x;           // abscissae exactly as parsed
};

// Throws std::runtime_error with the offending line number on parse errors.
SnapshotCsv read_snapshot_csv(const std::string& path);

// Columns t, norm, centroid, width, l2_error_vs_analytic.
void write_diagnostics_csv(const std::string& path, const TrajectoryRecord& record);

}  // namespace ssdg
