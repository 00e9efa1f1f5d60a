#pragma once

#include <iosfwd>
#include <string>

#include "centrum/ring.hpp"

namespace centrum {

// Table file format:
//   order n
//   one i
//   add        (then n rows of n space-separated indices)
//   mul        (likewise)
//   names      (optional; then n lines, one display name each)
// Zero is index 0 by convention; files where row 0 of add is not the
// identity row are rejected.
FiniteRing load_table_file(const std::string& path, const Limits& lim = Limits{});
FiniteRing load_table_stream(std::istream& in, const Limits& lim, const std::string& what);

void write_table_file(const FiniteRing& R, const std::string& path);
void write_table_stream(const FiniteRing& R, std::ostream& out);

} // namespace centrum
