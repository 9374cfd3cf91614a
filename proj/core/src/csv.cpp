#include "triphase/csv.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace triphase {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, 12);
  if (res.ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  return std::string(buf, res.ptr);
}

namespace {

const char* sentinel(Cell::Tag tag) {
  switch (tag) {
    case Cell::Tag::unbounded: return "unbounded";
    case Cell::Tag::singular: return "singular";
    case Cell::Tag::undefined: return "undefined";
    case Cell::Tag::number: break;
  }
  return "";
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
  for (const auto& line : table.comments) {
    os << "# " << line << '\n';
  }
  for (std::size_t n = 0; n < table.header.size(); ++n) {
    if (n) os << ',';
    os << table.header[n];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t n = 0; n < row.size(); ++n) {
      if (n) os << ',';
      if (row[n].tag == Cell::Tag::number) {
        os << format_number(row[n].value);
      } else {
        os << sentinel(row[n].tag);
      }
    }
    os << '\n';
  }
}

}  // namespace triphase
