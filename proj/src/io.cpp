#include "slat/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "slat/construct.hpp"
#include "slat/engine.hpp"

#include "json.hpp"

namespace slat {

namespace {

using nlohmann::json;

json covers_to_json(const std::vector<std::vector<ElementId>>& lists) {
  json out = json::array();
  for (const auto& v : lists) out.push_back(v);
  return out;
}

std::vector<std::vector<ElementId>> covers_from_json(const json& j, const char* key) {
  if (!j.is_array()) fail(errc::schema_error, std::string(key) + " must be an array");
  std::vector<std::vector<ElementId>> out;
  for (const auto& row : j) {
    if (!row.is_array()) fail(errc::schema_error, std::string(key) + " rows must be arrays");
    std::vector<ElementId> v;
    for (const auto& x : row) {
      if (!x.is_number_integer()) fail(errc::schema_error, std::string(key) + " entries must be integers");
      v.push_back(x.get<int>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::string serialize_lattice(const PlanarLattice& L) {
  json j;
  j["n"] = L.size();
  j["labels"] = L.labels();
  json up = json::array(), down = json::array();
  for (int x = 0; x < L.size(); ++x) {
    up.push_back(L.upper_covers(x));
    down.push_back(L.lower_covers(x));
  }
  j["upper_covers"] = up;
  j["lower_covers"] = down;
  return j.dump(2) + "\n";
}

PlanarLattice parse_lattice(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, e.what());
  }
  if (!j.is_object()) fail(errc::schema_error, "top level must be an object");
  for (const char* key : {"n", "labels", "upper_covers", "lower_covers"})
    if (!j.contains(key)) fail(errc::schema_error, std::string("missing field ") + key);
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "n" && it.key() != "labels" && it.key() != "upper_covers" &&
        it.key() != "lower_covers")
      fail(errc::schema_error, "unexpected field " + it.key());
  if (!j["n"].is_number_integer()) fail(errc::schema_error, "n must be an integer");
  int n = j["n"].get<int>();
  if (!j["labels"].is_array()) fail(errc::schema_error, "labels must be an array");
  std::vector<std::string> labels;
  for (const auto& s : j["labels"]) {
    if (!s.is_string()) fail(errc::schema_error, "labels entries must be strings");
    labels.push_back(s.get<std::string>());
  }
  auto up = covers_from_json(j["upper_covers"], "upper_covers");
  auto down = covers_from_json(j["lower_covers"], "lower_covers");
  if ((int)up.size() != n || (int)down.size() != n || (int)labels.size() != n)
    fail(errc::schema_error, "list lengths disagree with n");
  // Cross-check the two order lists before lattice validation proper.
  for (int x = 0; x < n; ++x)
    for (ElementId y : up[x]) {
      if (y < 0 || y >= n) fail(errc::schema_error, "cover id out of range");
      if (std::find(down[y].begin(), down[y].end(), x) == down[y].end())
        fail(errc::schema_error, "upper/lower cover lists disagree");
    }
  for (int x = 0; x < n; ++x)
    for (ElementId y : down[x])
      if (y < 0 || y >= n ||
          std::find(up[y].begin(), up[y].end(), x) == up[y].end())
        fail(errc::schema_error, "upper/lower cover lists disagree");
  try {
    return PlanarLattice::from_ordered_covers(n, std::move(up), std::move(down), std::move(labels));
  } catch (const error& e) {
    fail(errc::validation_error, e.what());
  }
}

void save_lattice(const PlanarLattice& L, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::parse_error, "cannot open " + path.string() + " for writing");
  out << serialize_lattice(L);
}

PlanarLattice load_lattice(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str());
}

std::string to_dot(const PlanarLattice& L) {
  auto name = [&](ElementId x) {
    std::string lbl = L.label(x).empty() ? "#" + std::to_string(x) : L.label(x);
    return "n" + std::to_string(x) + " [label=\"" + lbl + "\"]";
  };
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < L.size(); ++x) os << "  " << name(x) << ";\n";
  for (int x = 0; x < L.size(); ++x)
    for (ElementId y : L.upper_covers(x))
      os << "  n" << x << " -> n" << y << ";\n";
  int max_h = L.height(L.top());
  for (int h = 0; h <= max_h; ++h) {
    std::vector<ElementId> rank;
    for (int x = 0; x < L.size(); ++x)
      if (L.height(x) == h) rank.push_back(x);
    std::sort(rank.begin(), rank.end(),
              [&](ElementId a, ElementId b) { return L.planar_rank(a) < L.planar_rank(b); });
    os << "  { rank=same;";
    for (ElementId x : rank) os << " n" << x << ";";
    os << " }\n";
    for (size_t i = 0; i + 1 < rank.size(); ++i)
      os << "  n" << rank[i] << " -> n" << rank[i + 1] << " [style=invis];\n";
  }
  os << "}\n";
  return os.str();
}

std::string jicon_to_dot(const PlanarLattice& L, const JiConOrder& ji) {
  std::ostringstream os;
  os << "digraph jicon {\n  rankdir=BT;\n  node [shape=box];\n";
  for (size_t i = 0; i < ji.generators.size(); ++i) {
    os << "  c" << i << " [label=\"con" << format_interval(L, ji.generators[i]) << "\"];\n";
  }
  for (size_t i = 0; i < ji.upper_covers.size(); ++i)
    for (int j : ji.upper_covers[i]) os << "  c" << i << " -> c" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string digest(const std::string& bytes) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::vector<CatalogEntry> write_generation(int max_forks, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto gen = generate_patch_lattices(max_forks);
  std::vector<CatalogEntry> entries;
  nlohmann::ordered_json catalog = nlohmann::ordered_json::array();
  for (const auto& g : gen) {
    CatalogEntry e;
    e.id = digest(g.canon);
    e.n = g.lattice.size();
    e.fork_depth = g.fork_depth;
    e.sps = g.lattice.is_sps();
    e.patch = g.lattice.is_patch_lattice();
    e.path = "lattice_" + e.id + ".json";
    save_lattice(g.lattice, out_dir / e.path);
    nlohmann::ordered_json row;
    row["id"] = e.id;
    row["path"] = e.path;
    row["n"] = e.n;
    row["fork_depth"] = e.fork_depth;
    row["sps"] = e.sps;
    row["patch"] = e.patch;
    catalog.push_back(row);
    entries.push_back(std::move(e));
  }
  std::ofstream out(out_dir / "catalog.json", std::ios::binary);
  out << catalog.dump(2) << "\n";
  return entries;
}

}  // namespace slat
