#pragma once

#include <map>
#include <string>

namespace hg {

// One entry per machine-readable code; repeats only bump the count and keep the worst value.
struct Warnings {
  struct Entry {
    std::string message;
    long count = 0;
    double worst = 0;
  };
  std::map<std::string, Entry> items;

  void add(const std::string& code, const std::string& message, double value = 0);
  bool has(const std::string& code) const { return items.count(code) > 0; }
};

}  // namespace hg
