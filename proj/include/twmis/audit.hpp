#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace twmis {

/// Named structural checks collected while the pipeline runs.
class AuditLog {
 public:
  struct Entry {
    std::string name;
    std::size_t passes = 0;
    std::size_t failures = 0;
    std::string first_failure;
  };

  /// Records one evaluation of check `name`; `detail` is kept for the first failure.
  void check(std::string_view name, bool ok, std::string_view detail = {});

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
  void merge(const AuditLog& other);

 private:
  Entry& entry(std::string_view name);
  std::vector<Entry> entries_;
};

}  // namespace twmis
