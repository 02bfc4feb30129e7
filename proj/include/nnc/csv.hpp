#pragma once

#include <cstdio>
#include <initializer_list>
#include <string>

namespace nnc {

// Minimal CSV assembly: UTF-8, '.' decimal separator, 12 significant
// digits, '\n' line ends.  Output must be byte-stable for fixed inputs.
class CsvWriter {
 public:
  void header(std::initializer_list<const char*> cols) {
    bool first = true;
    for (const char* c : cols) {
      if (!first) buf_ += ',';
      buf_ += c;
      first = false;
    }
    buf_ += '\n';
    at_row_start_ = true;
  }

  CsvWriter& field(const std::string& s) {
    sep();
    buf_ += s;
    return *this;
  }

  CsvWriter& field(const char* s) { return field(std::string(s)); }

  CsvWriter& field(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof tmp, "%.12g", v);
    return field(std::string(tmp));
  }

  CsvWriter& field(long v) { return field(std::to_string(v)); }
  CsvWriter& field(int v) { return field(std::to_string(v)); }

  void end_row() {
    buf_ += '\n';
    at_row_start_ = true;
  }

  const std::string& str() const { return buf_; }

 private:
  void sep() {
    if (!at_row_start_) buf_ += ',';
    at_row_start_ = false;
  }

  std::string buf_;
  bool at_row_start_ = true;
};

}  // namespace nnc
