#include "swift/store.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <mutex>
#include <sstream>

#include "swift/error.hpp"
#include "swift/text_format.hpp"

namespace swift {

namespace {

constexpr int kIdWidth = 8;

std::string format_id(std::uint64_t n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*llu", kIdWidth, static_cast<unsigned long long>(n));
  return buf;
}

std::optional<std::uint64_t> parse_id(std::string_view id) {
  if (id.size() != kIdWidth) return std::nullopt;
  std::uint64_t n = 0;
  for (char c : id) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return n;
}

std::string escape_label(std::string_view label) {
  std::string out;
  for (char c : label) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out;
}

[[noreturn]] void corrupt(const std::string& reason) {
  throw Error(ErrorCode::kCorruptRecord, reason);
}

std::string errno_text() { return std::strerror(errno); }

}  // namespace

std::string format_utc(Timestamp t) {
  std::time_t tt = t.time_since_epoch().count();
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<Timestamp> parse_utc(std::string_view text) {
  if (text.size() != 20) return std::nullopt;
  std::tm tm{};
  char tail = 0;
  std::string s(text);
  if (std::sscanf(s.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%c", &tm.tm_year, &tm.tm_mon, &tm.tm_mday,
                  &tm.tm_hour, &tm.tm_min, &tm.tm_sec, &tail) != 7 ||
      tail != 'Z') {
    return std::nullopt;
  }
  tm.tm_year -= 1900;
  tm.tm_mon -= 1;
  Timestamp t{std::chrono::seconds(timegm(&tm))};
  if (format_utc(t) != text) return std::nullopt;  // rejects 2026-02-31 and friends
  return t;
}

std::string format_record_line(const SignRecord& record) {
  std::string line = record.id + " " + format_utc(record.saved_at) + " " +
                     serialize_text(record.sign);
  if (record.sign.label) line += " L\"" + escape_label(*record.sign.label) + "\"";
  return line;
}

SignRecord parse_record_line(std::string_view line, const Catalog& catalog) {
  auto sp1 = line.find(' ');
  if (sp1 == line.npos) corrupt("missing timestamp");
  auto sp2 = line.find(' ', sp1 + 1);
  if (sp2 == line.npos) corrupt("missing sign text");

  SignRecord rec;
  rec.id = std::string(line.substr(0, sp1));
  if (!parse_id(rec.id)) corrupt("bad record id '" + rec.id + "'");
  auto ts = parse_utc(line.substr(sp1 + 1, sp2 - sp1 - 1));
  if (!ts) corrupt("record " + rec.id + ": bad timestamp");
  rec.saved_at = *ts;

  auto rest = line.substr(sp2 + 1);
  auto sp3 = rest.find(' ');
  auto text = rest.substr(0, sp3);
  try {
    rec.sign = parse_text(text, catalog);
  } catch (const Error& e) {
    corrupt("record " + rec.id + ": " + e.what());
  }
  rec.sign.id = rec.id;

  if (sp3 != rest.npos) {
    auto label = rest.substr(sp3 + 1);
    if (label.size() < 3 || label.substr(0, 2) != "L\"" || label.back() != '"') {
      corrupt("record " + rec.id + ": bad label");
    }
    std::string out;
    for (std::size_t i = 2; i + 1 < label.size(); ++i) {
      char c = label[i];
      if (c == '\\') {
        if (i + 2 >= label.size()) corrupt("record " + rec.id + ": bad label escape");
        char n = label[++i];
        out += n == 'n' ? '\n' : n;
      } else if (c == '"') {
        corrupt("record " + rec.id + ": unescaped quote in label");
      } else {
        out += c;
      }
    }
    rec.sign.label = std::move(out);
  }
  for (const auto& p : rec.sign.placements) rec.glyph_list.push_back(p.glyph_id);
  return rec;
}

SignStore::SignStore(std::filesystem::path path, const Catalog& catalog, Clock clock)
    : path_(std::move(path)), catalog_(catalog), clock_(std::move(clock)) {
  if (!clock_) {
    clock_ = [] { return std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()); };
  }
  fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw Error(ErrorCode::kStorage, "cannot open store '" + path_.string() + "': " + errno_text());
  }
  replay();
}

SignStore::~SignStore() {
  if (fd_ >= 0) ::close(fd_);
}

void SignStore::replay() {
  std::ifstream in(path_, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();

  if (!data.empty() && data.back() != '\n') {
    auto keep = data.rfind('\n');
    keep = keep == std::string::npos ? 0 : keep + 1;
    problems_.push_back("discarded torn final record (" + std::to_string(data.size() - keep) +
                        " bytes)");
    data.resize(keep);
    if (::ftruncate(fd_, static_cast<off_t>(keep)) != 0) {
      throw Error(ErrorCode::kStorage, "cannot truncate torn record: " + errno_text());
    }
  }

  CooccurrenceTable table;
  std::uint64_t max_id = 0;
  std::size_t start = 0;
  int line_no = 0;
  while (start < data.size()) {
    auto nl = data.find('\n', start);
    std::string_view line(data.data() + start, nl - start);
    start = nl + 1;
    ++line_no;
    if (line.empty()) continue;

    auto raw_id = line.substr(0, line.find(' '));
    auto n = parse_id(raw_id);
    if (n) max_id = std::max(max_id, *n);
    try {
      SignRecord rec = parse_record_line(line, catalog_);
      if (records_.contains(rec.id) || corrupt_.contains(rec.id)) {
        corrupt("duplicate record id " + rec.id);
      }
      table.add(rec.sign, catalog_);
      records_.emplace(rec.id, std::move(rec));
    } catch (const Error& e) {
      problems_.push_back("line " + std::to_string(line_no) + ": " + e.what());
      if (n && !records_.contains(std::string(raw_id))) corrupt_.emplace(raw_id, e.what());
    }
  }
  next_id_ = max_id + 1;
  table_ = std::make_shared<const CooccurrenceTable>(std::move(table));
}

void SignStore::append_durably(const std::string& line) {
  struct stat st{};
  off_t before = ::fstat(fd_, &st) == 0 ? st.st_size : -1;
  std::size_t done = 0;
  while (done < line.size()) {
    ssize_t n = ::write(fd_, line.data() + done, line.size() - done);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) {
      std::string why = errno_text();
      if (before >= 0 && ::ftruncate(fd_, before) != 0) {
        why += " (and rollback failed)";
      }
      throw Error(ErrorCode::kStorage, "write to '" + path_.string() + "' failed: " + why);
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw Error(ErrorCode::kStorage, "fsync of '" + path_.string() + "' failed: " + errno_text());
  }
}

SignRecord SignStore::save(const Sign& sign) {
  validate_sign(sign, catalog_);
  std::lock_guard write_lock(write_mu_);

  SignRecord rec;
  rec.id = format_id(next_id_);
  rec.sign = sign;
  rec.sign.id = rec.id;
  rec.saved_at = clock_();
  for (const auto& p : sign.placements) rec.glyph_list.push_back(p.glyph_id);

  auto next_table = std::make_shared<CooccurrenceTable>(*table());
  next_table->add(rec.sign, catalog_);

  append_durably(format_record_line(rec) + "\n");

  std::unique_lock lock(mu_);
  records_.emplace(rec.id, rec);
  table_ = std::move(next_table);
  ++next_id_;
  return rec;
}

SignRecord SignStore::load(std::string_view id) const {
  std::shared_lock lock(mu_);
  auto it = records_.find(std::string(id));
  if (it != records_.end()) return it->second;
  auto bad = corrupt_.find(std::string(id));
  if (bad != corrupt_.end()) throw Error(ErrorCode::kCorruptRecord, bad->second);
  throw Error(ErrorCode::kNotFound, "sign '" + std::string(id) + "' not found");
}

std::vector<SignSummary> SignStore::list(std::size_t offset, std::size_t limit) const {
  std::shared_lock lock(mu_);
  std::vector<SignSummary> out;
  if (offset >= records_.size()) return out;
  auto it = std::next(records_.begin(), static_cast<std::ptrdiff_t>(offset));
  for (; it != records_.end() && out.size() < limit; ++it) {
    const auto& r = it->second;
    out.push_back({r.id, r.sign.label, r.saved_at, r.sign.placements.size()});
  }
  return out;
}

std::shared_ptr<const CooccurrenceTable> SignStore::table() const {
  std::shared_lock lock(mu_);
  return table_;
}

std::vector<Sign> SignStore::corpus() const {
  std::shared_lock lock(mu_);
  std::vector<Sign> out;
  out.reserve(records_.size());
  for (const auto& [id, rec] : records_) out.push_back(rec.sign);
  return out;
}

std::size_t SignStore::size() const {
  std::shared_lock lock(mu_);
  return records_.size();
}

std::vector<std::string> SignStore::problems() const {
  std::shared_lock lock(mu_);
  return problems_;
}

}  // namespace swift
