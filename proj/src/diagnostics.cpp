#include "rotns/diagnostics.hpp"

#include <mutex>

namespace rotns {
namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::string>& warning_list() {
  static std::vector<std::string> list;
  return list;
}

}  // namespace

void warn(std::string message) {
  std::lock_guard lock(warning_mutex());
  warning_list().push_back(std::move(message));
}

std::vector<std::string> drain_warnings() {
  std::lock_guard lock(warning_mutex());
  std::vector<std::string> out;
  out.swap(warning_list());
  return out;
}

std::size_t warning_count() {
  std::lock_guard lock(warning_mutex());
  return warning_list().size();
}

}  // namespace rotns
