#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace dlproof {

namespace detail {
// Returns the unique interned copy of `s`. Thread-safe; entries live for the
// lifetime of the process.
const std::string* intern(std::string_view s);
}  // namespace detail

bool isValidIdentifier(std::string_view s);

// Interned identifier. Two names with equal spelling share storage, so
// equality is a pointer comparison; ordering is by spelling.
template <class Tag>
class Name {
 public:
  Name() : text_(detail::intern("")) {}
  explicit Name(std::string_view s) : text_(detail::intern(s)) {}

  const std::string& str() const { return *text_; }
  bool empty() const { return text_->empty(); }

  friend bool operator==(Name a, Name b) { return a.text_ == b.text_; }
  friend std::strong_ordering operator<=>(Name a, Name b) {
    if (a.text_ == b.text_) return std::strong_ordering::equal;
    return a.text_->compare(*b.text_) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

  std::size_t hash() const { return std::hash<const void*>{}(text_); }

 private:
  const std::string* text_;
};

struct ConceptTag {};
struct RoleTag {};
using ConceptName = Name<ConceptTag>;
using RoleName = Name<RoleTag>;

}  // namespace dlproof

template <class Tag>
struct std::hash<dlproof::Name<Tag>> {
  std::size_t operator()(dlproof::Name<Tag> n) const { return n.hash(); }
};
