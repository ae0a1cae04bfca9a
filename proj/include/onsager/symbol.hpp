#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace onsager {

/// Interned indeterminate name ("u", "alpha", "w1", ...).
///
/// Two symbols with the same name are the same symbol. Ordering is by name,
/// so it does not depend on interning order. The intern table is guarded by
/// a mutex; symbols may be created from any thread.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *rep_; }

  friend bool operator==(Symbol a, Symbol b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    return *a.rep_ <=> *b.rep_;
  }

  std::size_t hash() const { return std::hash<const void*>()(rep_); }

 private:
  const std::string* rep_;
};

}  // namespace onsager

template <>
struct std::hash<onsager::Symbol> {
  std::size_t operator()(onsager::Symbol s) const noexcept { return s.hash(); }
};
