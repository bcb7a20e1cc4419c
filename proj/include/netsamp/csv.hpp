#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace netsamp::csv {

// Minimal RFC 4180 support: quoted fields may contain commas, doubled quotes
// and newlines. Returns false at end of stream.
bool read_record(std::istream& in, std::vector<std::string>& fields);

// Quotes a field only when it needs quoting.
void write_field(std::ostream& out, const std::string& field);
void write_record(std::ostream& out, const std::vector<std::string>& fields);

} // namespace netsamp::csv
