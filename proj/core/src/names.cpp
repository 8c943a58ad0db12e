#include "dlproof/names.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_set>

namespace dlproof {

namespace detail {

const std::string* intern(std::string_view s) {
  struct Table {
    std::mutex mu;
    std::unordered_set<std::string> strings;
  };
  // Leaked on purpose so names stay valid during static destruction.
  static Table* table = new Table;
  std::lock_guard lock(table->mu);
  return &*table->strings.emplace(s).first;
}

}  // namespace detail

bool isValidIdentifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!head(s.front())) return false;
  for (char c : s.substr(1)) {
    if (!(head(c) || (c >= '0' && c <= '9') || c == '.' || c == '-')) return false;
  }
  return true;
}

}  // namespace dlproof
