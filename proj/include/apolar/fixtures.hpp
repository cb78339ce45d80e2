#ifndef APOLAR_FIXTURES_HPP
#define APOLAR_FIXTURES_HPP

#include <string>
#include <vector>

#include "apolar/linalg.hpp"

namespace apolar {

// Directory lookup order: an explicit set_fixture_dir() call, then the
// APOLAR_FIXTURES environment variable, then the directory baked in at build
// time.
std::string fixture_dir();
void set_fixture_dir(const std::string& dir);

std::string read_fixture(const std::string& relative_path);
// FNV-1a 64-bit digest of the raw file, as 16 hex digits.
std::string fixture_hash(const std::string& relative_path);

std::vector<Polynomial> load_poly_list(const RingPtr& ring, const std::string& relative_path);
// One matrix row per line, entries separated by commas.  A line ending in an
// operator continues on the next one.
PolyMatrix load_poly_matrix(const RingPtr& ring, const std::string& relative_path);
PolyMatrix parse_poly_matrix(const RingPtr& ring, const std::string& text);

} // namespace apolar

#endif
