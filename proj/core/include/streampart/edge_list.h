/*******************************************************************************
 * Edge-list text files: one "src dst" pair of nonnegative integers per line,
 * '#' or '%' comment lines. External ids are remapped to a dense internal
 * range in order of first appearance.
 *
 * @file:   edge_list.h
 ******************************************************************************/
#pragma once

#include "streampart/partitioned_graph.h"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace streampart {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct IngestResult {
  std::vector<EdgeEvent> events;          // internal ids, file order
  std::vector<std::uint64_t> external_ids; // internal id -> external id
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;

  [[nodiscard]] std::size_t warnings() const { return self_loops + duplicates; }
};

/// Throws InputError naming the source and line on a malformed line.
IngestResult parse_edge_list(std::istream &in, std::string_view source = "<stream>");
IngestResult ingest_edge_list(const std::filesystem::path &path);

void write_edge_list(std::ostream &out, const EdgeList &edges);
void write_edge_list(const std::filesystem::path &path, const EdgeList &edges);

/// CSV "internal_id,external_id".
void write_id_map(std::ostream &out, const std::vector<std::uint64_t> &external_ids);

} // namespace streampart
