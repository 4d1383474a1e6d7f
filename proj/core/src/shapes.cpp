#include "sptok/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "sptok/error.hpp"

namespace sptok {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(Errc::InvalidInput, "partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(Errc::InvalidInput, "partition is not weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(Errc::InvalidInput, "strict partition has a nonpositive part");
    if (i > 0 && parts_[i] >= parts_[i - 1])
      throw Error(Errc::InvalidInput, "strict partition is not strictly decreasing");
  }
}

int StrictPartition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::string to_string(const StrictPartition& p) { return join_parts(p.parts()); }

std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  auto flush = [&](bool required) {
    if (token.empty()) {
      if (required) throw Error(Errc::ParseError, "empty part in '" + std::string(text) + "'");
      return;
    }
    parts.push_back(std::stoi(token));
    token.clear();
  };
  bool any = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush(true);
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::ParseError, "bad character in partition '" + std::string(text) + "'");
    token += c;
    any = true;
  }
  if (any || !parts.empty()) flush(true);
  return parts;
}

StrictPartition staircase(int n) {
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) parts.push_back(i);
  return StrictPartition(parts);
}

StrictPartition add_staircase(const Partition& mu, int n) {
  if (n < 1) throw Error(Errc::InvalidInput, "rank must be positive");
  if (mu.length() > n)
    throw Error(Errc::RankTooSmall, "partition " + to_string(mu) + " has length > " + std::to_string(n));
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) parts[i - 1] = mu.part(i) + (n + 1 - i);
  return StrictPartition(parts);
}

Partition remove_staircase(const StrictPartition& lambda, int n) {
  if (lambda.length() != n)
    throw Error(Errc::BadLength, "strict partition " + to_string(lambda) + " must have length " + std::to_string(n));
  std::vector<int> parts(n);
  for (int i = 1; i <= n; ++i) parts[i - 1] = lambda.part(i) - (n + 1 - i);
  return Partition(parts);
}

std::vector<Partition> partitions_up_to(int n, int max_weight) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == n) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  for (int w = 0; w <= max_weight; ++w) rec(w, w);
  return out;
}

std::vector<Cell> shifted_cells(const StrictPartition& lambda) {
  std::vector<Cell> cells;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int c = i; c < i + lambda.part(i); ++c) cells.push_back({i, c});
  return cells;
}

std::vector<Cell> ordinary_cells(const Partition& mu) {
  std::vector<Cell> cells;
  for (int i = 1; i <= mu.length(); ++i)
    for (int c = 1; c <= mu.part(i); ++c) cells.push_back({i, c});
  return cells;
}

std::string to_string(Letter l) {
  std::string s = std::to_string(l.level());
  if (l.is_barred()) s += '-';
  return s;
}

std::string to_string(const Entry& e) {
  std::string s = to_string(e.letter);
  if (e.primed) s += '\'';
  return s;
}

Entry parse_entry(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == 0) throw Error(Errc::ParseError, "entry must start with a level: '" + std::string(text) + "'");
  int level = std::stoi(std::string(text.substr(0, i)));
  if (level < 1) throw Error(Errc::ParseError, "entry level must be positive");
  bool barred = false;
  bool primed = false;
  for (; i < text.size(); ++i) {
    if (text[i] == '-' && !barred && !primed) barred = true;
    else if (text[i] == '\'' && !primed) primed = true;
    else throw Error(Errc::ParseError, "bad entry '" + std::string(text) + "'");
  }
  return {barred ? Letter::barred(level) : Letter::unbarred(level), primed};
}

}  // namespace sptok
