#include "hertz/bfile.hpp"

#include <fstream>
#include <sstream>

#include "hertz/error.hpp"

namespace hertz {

BFile::BFile(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].index <= entries_[i - 1].index)
      throw Error("b-file indices must be strictly increasing");
}

BFile BFile::parse(std::string_view text) {
  std::vector<Entry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    if (!(fields >> index_text)) continue;
    const std::size_t index_col = line.find(index_text) + 1;
    if (!(fields >> value_text))
      throw ParseError("expected \"n a(n)\"", line_no, index_col);
    const std::size_t value_col = line.find(value_text, index_col - 1 + index_text.size()) + 1;
    std::string extra;
    if (fields >> extra)
      throw ParseError("trailing text \"" + extra + "\"", line_no,
                       line.find(extra, value_col - 1 + value_text.size()) + 1);
    long index = 0;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) throw std::invalid_argument("index");
    } catch (const std::exception&) {
      throw ParseError("bad index \"" + index_text + "\"", line_no, index_col);
    }
    Integer value;
    if (value.set_str(value_text, 10) != 0)
      throw ParseError("bad value \"" + value_text + "\"", line_no, value_col);
    if (!entries.empty() && index <= entries.back().index)
      throw ParseError("indices must be strictly increasing", line_no, index_col);
    entries.push_back({index, std::move(value)});
  }
  return BFile(std::move(entries));
}

BFile BFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open b-file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

bool CompareReport::matches() const { return first_mismatch() == nullptr; }

const CompareRow* CompareReport::first_mismatch() const {
  for (const auto& r : rows)
    if (!r.equal()) return &r;
  return nullptr;
}

CompareReport oeis_compare(const TruncatedSeries& series, const BFile& bfile) {
  CompareReport report;
  for (const auto& e : bfile.entries()) {
    if (e.index < 0 || e.index > series.order()) continue;
    const MultiPoly& c = series[static_cast<int>(e.index)];
    const auto value = c.as_constant();
    if (!value || value->get_den() != 1)
      throw Error("oeis_compare: coefficient " + std::to_string(e.index) +
                  " is not an integer");
    report.rows.push_back({e.index, e.value, value->get_num()});
  }
  if (report.rows.empty()) throw Error("oeis_compare: no overlapping indices");
  return report;
}

}  // namespace hertz
