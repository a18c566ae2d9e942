#pragma once

// CSV and output-directory helpers. Numbers are written in their shortest
// round-trip decimal form so identical runs produce byte-identical files.

#include <nlse/types.hpp>

#include <filesystem>
#include <string>

namespace nlse {

std::string format_number(Real value);
std::string format_number(long value);

// A named table of real columns, row-major; surfaces carry their (nx, nt)
// sample shape, plain series leave it zero.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  Eigen::ArrayXXd values;  // rows x columns
  int nx = 0, nt = 0;
};

std::string to_csv(const Table& table);
void write_file(const std::filesystem::path& path, const std::string& content);

// Staged output: everything is written into a sibling ".partial" directory
// which is renamed onto the target only when complete, so a failed run leaves
// no partial files behind. The target must not already exist (an empty
// directory is tolerated and replaced).
class StagedDirectory {
 public:
  explicit StagedDirectory(std::filesystem::path target);
  ~StagedDirectory();

  StagedDirectory(const StagedDirectory&) = delete;
  StagedDirectory& operator=(const StagedDirectory&) = delete;

  const std::filesystem::path& path() const { return staging_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path staging_;
  bool committed_ = false;
};

}  // namespace nlse
