#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hertz/poly.hpp"
#include "hertz/series.hpp"

namespace hertz {

/// OEIS b-file: lines "n a(n)", '#' comments and blank lines ignored.
class BFile {
 public:
  struct Entry {
    long index;
    Integer value;
  };

  explicit BFile(std::vector<Entry> entries);
  static BFile parse(std::string_view text);
  static BFile load(const std::string& path);

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

struct CompareRow {
  long index;
  Integer expected;  // from the b-file
  Integer actual;    // from the series
  bool equal() const { return expected == actual; }
};

struct CompareReport {
  std::vector<CompareRow> rows;
  bool matches() const;
  /// First mismatching row, or nullptr.
  const CompareRow* first_mismatch() const;
};

/// Compares over the indices present in both. Throws on an empty overlap or
/// a non-integer coefficient in the overlap.
CompareReport oeis_compare(const TruncatedSeries& series, const BFile& bfile);

}  // namespace hertz
