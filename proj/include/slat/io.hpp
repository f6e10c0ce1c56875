#ifndef SLAT_IO_HPP
#define SLAT_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "slat/congruence.hpp"
#include "slat/lattice.hpp"

namespace slat {

/// Canonical JSON schema:
/// {"n": int, "labels": [str], "upper_covers": [[int,...],...],
///  "lower_covers": [[int,...],...]}
/// Serialization is byte-stable; parse errors throw parse_error,
/// schema violations schema_error, lattice violations validation_error.
std::string serialize_lattice(const PlanarLattice& L);
PlanarLattice parse_lattice(const std::string& json_text);

void save_lattice(const PlanarLattice& L, const std::filesystem::path& path);
PlanarLattice load_lattice(const std::filesystem::path& path);

/// One node per element, one edge per cover, ranked by height with
/// left-to-right order kept by invisible intra-rank edges.
std::string to_dot(const PlanarLattice& L);

std::string jicon_to_dot(const PlanarLattice& L, const JiConOrder& ji);

struct CatalogEntry {
  std::string id;  // canonical hash
  std::string path;
  int n = 0;
  int fork_depth = 0;
  bool sps = false;
  bool patch = false;
};

/// Writes every generated lattice plus catalog.json under out_dir; returns
/// the entries in generation order.
std::vector<CatalogEntry> write_generation(int max_forks, const std::filesystem::path& out_dir);

/// Short stable hex digest of a canonical form (FNV-1a 64).
std::string digest(const std::string& bytes);

}  // namespace slat

#endif
