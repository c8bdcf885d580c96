#pragma once

#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace coxbridge {

enum class Errc {
  malformed_token,
  zero_entry,
  unpaired_crossing,
  invalid_pairing,
  position_clash,
  unsupported_label,
  order_overflow,
  multiple_classes,
  not_found,
  rank_mismatch,
  hash_mismatch,
  schema_mismatch,
  group_mismatch,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::malformed_token: return "malformed_token";
    case Errc::zero_entry: return "zero_entry";
    case Errc::unpaired_crossing: return "unpaired_crossing";
    case Errc::invalid_pairing: return "invalid_pairing";
    case Errc::position_clash: return "position_clash";
    case Errc::unsupported_label: return "unsupported_label";
    case Errc::order_overflow: return "order_overflow";
    case Errc::multiple_classes: return "multiple_classes";
    case Errc::not_found: return "not_found";
    case Errc::rank_mismatch: return "rank_mismatch";
    case Errc::hash_mismatch: return "hash_mismatch";
    case Errc::schema_mismatch: return "schema_mismatch";
    case Errc::group_mismatch: return "group_mismatch";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) out[i] = digits[v & 0xf];
  return out;
}

inline std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on commas and/or runs of whitespace; empty fields are dropped.
inline std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spew(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  out << content;
}

// Runs fn(i) for i in [0, n) on `threads` workers, work-stealing by index.
// With threads <= 1 this degenerates to a plain loop.
inline void parallel_for_index(std::size_t n, int threads,
                               const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  int workers = std::min<std::size_t>(threads, n);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& t : pool) t.join();
}

// Lexicographic k-subsets of {0,...,n-1}. visit gets the current subset and
// returns false to stop early; for_each_combination returns false if stopped.
inline bool for_each_combination(int n, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return true;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    if (!visit(c)) return false;
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return true;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace coxbridge
