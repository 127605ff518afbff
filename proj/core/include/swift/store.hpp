#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "swift/catalog.hpp"
#include "swift/hints.hpp"
#include "swift/sign.hpp"

namespace swift {

using Timestamp = std::chrono::sys_seconds;

/// `2026-10-16T09:30:00Z`.
std::string format_utc(Timestamp t);
/// Inverse of format_utc; nullopt on anything else.
std::optional<Timestamp> parse_utc(std::string_view text);

struct SignRecord {
  std::string id;  // 8-digit zero-padded counter
  Sign sign;
  Timestamp saved_at{};
  std::vector<GlyphId> glyph_list;

  friend bool operator==(const SignRecord&, const SignRecord&) = default;
};

struct SignSummary {
  std::string id;
  std::optional<std::string> label;
  Timestamp saved_at{};
  std::size_t glyph_count = 0;

  friend bool operator==(const SignSummary&, const SignSummary&) = default;
};

/// One line of the store file: `<id> <saved_at> <SWT1>[ L"<label>"]`.
std::string format_record_line(const SignRecord& record);
/// Throws kCorruptRecord describing the first problem.
SignRecord parse_record_line(std::string_view line, const Catalog& catalog);

/// Append-only sign database plus the live co-occurrence table derived
/// from it.
///
/// Opening replays the file and rebuilds the table; a torn final line left
/// by a crash mid-append is cut off. Lines that fail to parse are kept out
/// of the corpus and listed by problems(); load() of such an id reports
/// kCorruptRecord. Saves are serialized; readers always see a record set and
/// table that match.
class SignStore {
 public:
  using Clock = std::function<Timestamp()>;

  SignStore(std::filesystem::path path, const Catalog& catalog, Clock clock = {});
  virtual ~SignStore();

  SignStore(const SignStore&) = delete;
  SignStore& operator=(const SignStore&) = delete;

  /// Validates, persists durably, then publishes the record and the updated
  /// table together. Throws kValidation / kUnknownGlyph for a bad sign and
  /// kStorage when the write fails; nothing changes in either case.
  SignRecord save(const Sign& sign);

  /// Throws kNotFound or kCorruptRecord.
  SignRecord load(std::string_view id) const;

  /// Records ordered by id; empty when offset is past the end.
  std::vector<SignSummary> list(std::size_t offset, std::size_t limit) const;

  std::shared_ptr<const CooccurrenceTable> table() const;
  std::vector<Sign> corpus() const;
  std::size_t size() const;
  std::vector<std::string> problems() const;

  const std::filesystem::path& path() const { return path_; }

 protected:
  /// Appends one complete line and flushes it to stable storage.
  virtual void append_durably(const std::string& line);

 private:
  void replay();

  std::filesystem::path path_;
  const Catalog& catalog_;
  Clock clock_;
  int fd_ = -1;

  mutable std::shared_mutex mu_;
  std::mutex write_mu_;
  std::map<std::string, SignRecord> records_;
  std::map<std::string, std::string> corrupt_;  // id -> reason
  std::vector<std::string> problems_;
  std::shared_ptr<const CooccurrenceTable> table_;
  std::uint64_t next_id_ = 1;
};

}  // namespace swift
