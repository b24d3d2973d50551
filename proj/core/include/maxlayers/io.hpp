#ifndef MAXLAYERS_IO_HPP
#define MAXLAYERS_IO_HPP

#include "maxlayers/point.hpp"

#include <iosfwd>
#include <string>

namespace maxlayers {

// Text point format: one point per line, coordinates separated by commas or
// by whitespace. Blank lines and lines starting with '#' are skipped. The
// dimension is fixed by the first data line. Throws InputError carrying the
// 1-based line number of the first bad row (wrong arity, unparsable or
// non-finite value).
[[nodiscard]] auto read_points(std::istream& in) -> PointSet;
[[nodiscard]] auto read_points_file(std::string const& path) -> PointSet;

// Comma-separated, shortest representation that round-trips exactly.
void write_points(std::ostream& out, PointSet const& points);

} // namespace maxlayers

#endif
