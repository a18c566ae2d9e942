#include <nlse/csv.hpp>

#include <charconv>
#include <fstream>
#include <system_error>

namespace nlse {

namespace fs = std::filesystem;

std::string format_number(Real value) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

std::string format_number(long value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

std::string to_csv(const Table& table) {
  std::string out;
  out.reserve(static_cast<size_t>(table.values.rows()) * table.columns.size() * 12 + 64);
  for (size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (Eigen::Index r = 0; r < table.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < table.values.cols(); ++c) {
      if (c) out += ',';
      out += format_number(table.values(r, c));
    }
    out += '\n';
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw fs::filesystem_error("cannot open for writing", path,
                                     std::make_error_code(std::errc::io_error));
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw fs::filesystem_error("write failed", path,
                                     std::make_error_code(std::errc::io_error));
}

StagedDirectory::StagedDirectory(fs::path target) : target_(std::move(target)) {
  if (fs::exists(target_)) {
    if (!fs::is_directory(target_) || !fs::is_empty(target_))
      throw fs::filesystem_error("output directory already exists", target_,
                                 std::make_error_code(std::errc::file_exists));
  }
  staging_ = target_;
  staging_ += ".partial";
  fs::remove_all(staging_);
  fs::create_directories(staging_);
}

StagedDirectory::~StagedDirectory() {
  if (!committed_) {
    std::error_code ec;
    fs::remove_all(staging_, ec);  // best effort; destructor must not throw
  }
}

void StagedDirectory::commit() {
  if (fs::exists(target_)) fs::remove(target_);  // only an empty dir can reach here
  fs::rename(staging_, target_);
  committed_ = true;
}

}  // namespace nlse
