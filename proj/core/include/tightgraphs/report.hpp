#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tightgraphs {

// One titled block of key-value rows. Rows keep insertion order so renders
// are stable; the citation line is optional and printed last.
struct ReportSection {
  std::string title;
  std::vector<std::pair<std::string, std::string>> rows;
  std::string citation;

  void add(std::string key, std::string value) {
    rows.emplace_back(std::move(key), std::move(value));
  }
};

struct Report {
  std::vector<ReportSection> sections;

  ReportSection& section(std::string title) {
    sections.push_back(ReportSection{std::move(title), {}, {}});
    return sections.back();
  }
};

// Plain-text render:
//   == title ==
//   key: value
// with a blank line between sections and a trailing newline.
std::string render_text(const Report& r);

// JSON render. Keys keep row order; citation appears only when set.
// Pretty-printed with two-space indent and a trailing newline.
std::string render_json(const Report& r);

}  // namespace tightgraphs
