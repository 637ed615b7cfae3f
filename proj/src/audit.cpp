#include "twmis/audit.hpp"

#include <algorithm>

namespace twmis {

AuditLog::Entry& AuditLog::entry(std::string_view name) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.name == name; });
  if (it != entries_.end()) return *it;
  Entry& added = entries_.emplace_back();
  added.name = std::string(name);
  return added;
}

void AuditLog::check(std::string_view name, bool ok, std::string_view detail) {
  Entry& e = entry(name);
  if (ok) {
    ++e.passes;
    return;
  }
  if (e.failures++ == 0) e.first_failure = std::string(detail);
}

std::size_t AuditLog::failure_count() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.failures;
  return total;
}

void AuditLog::merge(const AuditLog& other) {
  for (const auto& o : other.entries_) {
    Entry& e = entry(o.name);
    if (e.failures == 0 && o.failures > 0) e.first_failure = o.first_failure;
    e.passes += o.passes;
    e.failures += o.failures;
  }
}

}  // namespace twmis
