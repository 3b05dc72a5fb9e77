#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace bpv {

/// 17 significant digits: every double survives a text round trip.
std::string format_double(double v);

/// Minimal CSV writer; numeric cells use format_double.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  CsvWriter& cell(double v);
  CsvWriter& cell(long v);
  CsvWriter& cell(const std::string& v);
  void end_row();
  void flush() { out_.flush(); }

 private:
  std::ofstream out_;
  bool first_ = true;
};

}  // namespace bpv
