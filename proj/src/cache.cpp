#include "fockpath/cache.hpp"

#include <unistd.h>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fockpath/json_io.hpp"

namespace fockpath {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, x);
  return buf;
}

}  // namespace

fs::path cache_file(const fs::path& dir, int e, int n) {
  return dir / ("cb_e" + std::to_string(e) + "_n" + std::to_string(n) + ".jsonl");
}

void write_cache(const fs::path& dir, int e, int n, const std::map<Partition, FockVector>& elements) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir.string() + ": " + ec.message());

  std::string body;
  for (const auto& [mu, g] : elements) body += canonical_record(mu, g).dump() + "\n";
  const Json header{{"format", "fockpath-canonical-basis"}, {"version", 1}, {"e", e}, {"n", n},
                    {"records", elements.size()}, {"checksum", hex64(fnv1a64(body))}};

  const auto target = cache_file(dir, e, n);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << header.dump() << "\n" << body;
    out.flush();
    if (!out) throw CacheError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw CacheError("failed to replace " + target.string() + ": " + ec.message());
  }
}

std::optional<std::map<Partition, FockVector>> read_cache(const fs::path& dir, int e, int n) {
  const auto path = cache_file(dir, e, n);
  if (!fs::exists(path)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open " + path.string());
  std::string header_line;
  if (!std::getline(in, header_line)) throw CacheError(path.string() + ": empty file");
  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string body = rest.str();

  std::map<Partition, FockVector> out;
  try {
    const auto header = Json::parse(header_line);
    if (header.at("e").get<int>() != e || header.at("n").get<int>() != n)
      throw CacheError(path.string() + ": header is for a different (e, n)");
    if (header.at("checksum").get<std::string>() != hex64(fnv1a64(body)))
      throw CacheError(path.string() + ": checksum mismatch");
    std::istringstream lines(body);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      auto [mu, g] = canonical_record_from_json(Json::parse(line));
      out.emplace(std::move(mu), std::move(g));
    }
    if (out.size() != header.at("records").get<std::size_t>())
      throw CacheError(path.string() + ": record count mismatch");
  } catch (const CacheError&) {
    throw;
  } catch (const std::exception& ex) {
    throw CacheError(path.string() + ": malformed cache (" + ex.what() + ")");
  }
  return out;
}

}  // namespace fockpath
