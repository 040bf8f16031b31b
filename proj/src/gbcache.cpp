#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dp6/groebner.hpp"
#include "dp6/parse.hpp"

namespace dp6 {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

GroebnerCache GroebnerCache::from_env() {
  const char* d = std::getenv("CYVERIFY_CACHE");
  return GroebnerCache(d ? d : "");
}

GroebnerBasis GroebnerCache::compute(std::span<const Poly> gens, RingPtr ring) const {
  if (dir_.empty()) return buchberger(gens, ring);
  if (!ring)
    for (const auto& g : gens)
      if (!g.is_zero()) ring = g.ring();
  if (!ring) return buchberger(gens, ring);

  std::string key = "gb1\n" + ring->str() + "\n";
  for (const auto& g : gens) key += g.str() + "\n";
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.gb", static_cast<unsigned long long>(fnv1a(key)));
  namespace fs = std::filesystem;
  fs::path file = fs::path(dir_) / name;

  if (std::ifstream in{file}) {
    std::string header, line;
    std::getline(in, header);
    // The full key is stored as well, so a hash collision only costs a recompute.
    std::string stored;
    std::size_t lines = static_cast<std::size_t>(std::count(key.begin(), key.end(), '\n'));
    for (std::size_t i = 0; i < lines && std::getline(in, line); ++i) stored += line + "\n";
    if (header == "key" && stored == key) {
      std::vector<Poly> basis;
      bool ok = true;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
          basis.push_back(parse_poly(line, ring));
        } catch (const ParseError&) {
          ok = false;
          break;
        }
      }
      if (ok) return GroebnerBasis(ring, std::move(basis), std::vector<Poly>(gens.begin(), gens.end()));
    }
  }

  GroebnerBasis g = buchberger(gens, ring);
  std::error_code ec;
  fs::create_directories(dir_, ec);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out{tmp};
    out << "key\n" << key << g.serialize();
    if (!out) return g;
  }
  fs::rename(tmp, file, ec);
  return g;
}

}  // namespace dp6
