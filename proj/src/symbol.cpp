#include "onsager/symbol.hpp"

#include <mutex>
#include <unordered_set>

#include "onsager/errors.hpp"

namespace onsager {

namespace {

struct InternTable {
  std::mutex mutex;
  std::unordered_set<std::string> names;
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

Symbol::Symbol(std::string_view name) {
  if (name.empty()) throw InputError("empty indeterminate name");
  auto& t = table();
  std::lock_guard lock(t.mutex);
  rep_ = &*t.names.emplace(name).first;
}

}  // namespace onsager
