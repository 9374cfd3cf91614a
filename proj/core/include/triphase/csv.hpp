#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triphase {

/// One CSV cell: a finite number or an explicit sentinel. NaN/Inf never reach
/// the output; undefined quantities carry their reason instead.
struct Cell {
  enum class Tag { number, unbounded, singular, undefined };

  Tag tag = Tag::number;
  double value = 0.0;

  static Cell num(double v) { return {Tag::number, v}; }
  static Cell unbounded() { return {Tag::unbounded, 0.0}; }
  static Cell singular() { return {Tag::singular, 0.0}; }
  static Cell undefined() { return {Tag::undefined, 0.0}; }
};

struct Table {
  std::vector<std::string> comments;  ///< emitted as "# ..." lines
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Locale-independent decimal with 12 significant digits.
std::string format_number(double v);

void write_csv(std::ostream& os, const Table& table);

}  // namespace triphase
