#pragma once

// Machine-readable per-n records (CSV and JSON-lines) and the sweep result
// cache. CSV carries exactly the columns of its fixed header; JSON lines
// carry every populated field and omit absent optionals.

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrsap/witness.hpp"

namespace rrsap {

struct output_record {
  std::int64_t n = 0;
  std::optional<std::int64_t> f;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::optional<ap_witness> witness;
  std::optional<std::int64_t> phi;

  bool operator==(const output_record&) const = default;
};

inline constexpr const char* csv_header = "n,f,lower,upper,first,diff,len";

inline std::string to_csv(const output_record& r) {
  std::ostringstream out;
  out << r.n << ',';
  if (r.f) out << *r.f;
  out << ',' << r.lower << ',' << r.upper << ',';
  if (r.witness) out << r.witness->first;
  out << ',';
  if (r.witness) out << r.witness->difference;
  out << ',';
  if (r.witness) out << r.witness->length;
  return out.str();
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

inline std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  const std::int64_t v = std::stoll(s, &used);
  if (used != s.size()) throw std::domain_error("records: trailing junk in integer '" + s + "'");
  return v;
}

}  // namespace detail

inline output_record output_record_from_csv(const std::string& line) {
  const auto fields = detail::split_csv(line);
  if (fields.size() != 7)
    throw std::domain_error("records: expected 7 CSV fields, got " +
                            std::to_string(fields.size()));
  output_record r;
  r.n = detail::parse_int(fields[0]);
  if (!fields[1].empty()) r.f = detail::parse_int(fields[1]);
  r.lower = detail::parse_int(fields[2]);
  r.upper = detail::parse_int(fields[3]);
  const bool has_witness = !fields[4].empty() || !fields[5].empty() || !fields[6].empty();
  if (has_witness) {
    ap_witness w;
    w.n = r.n;
    w.first = detail::parse_int(fields[4]);
    w.difference = detail::parse_int(fields[5]);
    w.length = detail::parse_int(fields[6]);
    r.witness = w;
  }
  return r;
}

inline std::string to_jsonl(const output_record& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  if (r.f) j["f"] = *r.f;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.witness)
    j["witness"] = {{"first", r.witness->first},
                    {"difference", r.witness->difference},
                    {"length", r.witness->length}};
  if (r.phi) j["phi"] = *r.phi;
  return j.dump();
}

inline output_record output_record_from_jsonl(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  output_record r;
  r.n = j.at("n").get<std::int64_t>();
  if (j.contains("f")) r.f = j.at("f").get<std::int64_t>();
  r.lower = j.at("lower").get<std::int64_t>();
  r.upper = j.at("upper").get<std::int64_t>();
  if (j.contains("witness")) {
    const auto& jw = j.at("witness");
    ap_witness w;
    w.n = r.n;
    w.first = jw.at("first").get<std::int64_t>();
    w.difference = jw.at("difference").get<std::int64_t>();
    w.length = jw.at("length").get<std::int64_t>();
    r.witness = w;
  }
  if (j.contains("phi")) r.phi = j.at("phi").get<std::int64_t>();
  return r;
}

inline constexpr const char* cache_header = "n,f,first,diff,len";

// CSV-backed cache of exact results, loaded lazily. Rows whose progression
// fails the definitional validator, or whose f disagrees with the witness
// length, are dropped rather than trusted.
class result_cache {
 public:
  result_cache() = default;
  explicit result_cache(std::string path) : path_(std::move(path)) {}

  bool enabled() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

  const ap_witness* lookup(std::int64_t n) {
    if (!enabled()) return nullptr;
    ensure_loaded();
    const auto it = entries_.find(n);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void store(const ap_witness& w) {
    if (!enabled()) return;
    ensure_loaded();
    entries_[w.n] = w;
  }

  bool save() {
    if (!enabled()) return true;
    ensure_loaded();
    std::ofstream out(path_, std::ios::trunc);
    if (!out) return false;
    out << cache_header << '\n';
    for (const auto& [n, w] : entries_)
      out << n << ',' << w.length << ',' << w.first << ',' << w.difference << ',' << w.length
          << '\n';
    return static_cast<bool>(out);
  }

  std::int64_t dropped() const { return dropped_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }

 private:
  void ensure_loaded() {
    if (loaded_) return;
    loaded_ = true;
    std::ifstream in(path_);
    if (!in) return;  // no cache yet
    std::string line;
    bool first_line = true;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (first_line) {
        first_line = false;
        if (line == cache_header) continue;
      }
      try {
        const auto fields = detail::split_csv(line);
        if (fields.size() != 5) throw std::domain_error("bad cache row");
        ap_witness w;
        w.n = detail::parse_int(fields[0]);
        const std::int64_t f = detail::parse_int(fields[1]);
        w.first = detail::parse_int(fields[2]);
        w.difference = detail::parse_int(fields[3]);
        w.length = detail::parse_int(fields[4]);
        if (f != w.length || !is_valid_witness(w)) {
          ++dropped_;
          continue;
        }
        entries_[w.n] = w;
      } catch (const std::exception&) {
        ++dropped_;
      }
    }
  }

  std::string path_;
  bool loaded_ = false;
  std::int64_t dropped_ = 0;
  std::map<std::int64_t, ap_witness> entries_;
};

}  // namespace rrsap
