/*******************************************************************************
 * @file:   edge_list.cc
 ******************************************************************************/
#include "streampart/edge_list.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace streampart {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) {
      ++i;
    }
    if (i > start) {
      tokens.push_back(line.substr(start, i - start));
    }
  }
  return tokens;
}

[[noreturn]] void fail(std::string_view source, std::size_t line_no, const std::string &what) {
  throw InputError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

std::uint64_t parse_id(std::string_view token, std::string_view source, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(source, line_no, "expected a nonnegative integer node id, got '" + std::string(token) + "'");
  }
  return value;
}

} // namespace

IngestResult parse_edge_list(std::istream &in, std::string_view source) {
  IngestResult result;
  std::unordered_map<std::uint64_t, NodeId> internal;
  std::unordered_set<std::uint64_t> seen;
  auto intern = [&](std::uint64_t external) {
    const auto [it, inserted] =
        internal.try_emplace(external, static_cast<NodeId>(result.external_ids.size()));
    if (inserted) {
      result.external_ids.push_back(external);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split(line);
    if (tokens.empty() || tokens.front().front() == '#' || tokens.front().front() == '%') {
      continue;
    }
    if (tokens.size() != 2) {
      fail(source, line_no, "expected 'src dst', got " + std::to_string(tokens.size()) + " fields");
    }
    const std::uint64_t src = parse_id(tokens[0], source, line_no);
    const std::uint64_t dst = parse_id(tokens[1], source, line_no);
    if (src == dst) {
      ++result.self_loops;
      continue;
    }
    const EdgeEvent e{intern(src), intern(dst)};
    if (!seen.insert(e.key()).second) {
      ++result.duplicates;
      continue;
    }
    result.events.push_back(e);
  }
  return result;
}

IngestResult ingest_edge_list(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open edge list '" + path.string() + "'");
  }
  return parse_edge_list(in, path.string());
}

void write_edge_list(std::ostream &out, const EdgeList &edges) {
  for (const Edge &e : edges) {
    out << e.a << ' ' << e.b << '\n';
  }
}

void write_edge_list(const std::filesystem::path &path, const EdgeList &edges) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write edge list '" + path.string() + "'");
  }
  write_edge_list(out, edges);
}

void write_id_map(std::ostream &out, const std::vector<std::uint64_t> &external_ids) {
  out << "internal_id,external_id\n";
  for (std::size_t i = 0; i < external_ids.size(); ++i) {
    out << i << ',' << external_ids[i] << '\n';
  }
}

} // namespace streampart
