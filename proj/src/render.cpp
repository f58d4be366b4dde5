#include <algorithm>
#include <map>
#include <sstream>

#include "fockpath/latticepath.hpp"

namespace fockpath {

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::ascii;
  if (name == "svg") return RenderFormat::svg;
  throw std::invalid_argument("unknown render format '" + name + "' (expected ascii or svg)");
}

namespace {

constexpr int kUnit = 20;

struct Stroke {
  int x;      // column index
  int from;   // height before
  int step;   // +1, -1, 0
};

std::vector<Stroke> strokes_of(const LatticedPath& p, const std::vector<int>& xs) {
  std::vector<Stroke> out;
  int h = p.start_height;
  for (std::size_t i = 0; i < p.positions.size(); ++i) {
    out.push_back({xs[i], h, p.step(i)});
    h += p.step(i);
  }
  return out;
}

// Up from h occupies band h, down from h occupies band h-1, flat at h sits on band h.
std::string ascii_of(const std::vector<Stroke>& strokes, int width) {
  if (strokes.empty()) return "";
  int top = INT32_MIN, bottom = INT32_MAX;
  for (const auto& s : strokes) {
    const int band = s.step < 0 ? s.from - 1 : s.from;
    top = std::max(top, band);
    bottom = std::min(bottom, band);
  }
  std::vector<std::string> rows(static_cast<std::size_t>(top - bottom + 1), std::string(static_cast<std::size_t>(width), ' '));
  for (const auto& s : strokes) {
    const int band = s.step < 0 ? s.from - 1 : s.from;
    const char ch = s.step > 0 ? '/' : s.step < 0 ? '\\' : '_';
    rows[static_cast<std::size_t>(top - band)][static_cast<std::size_t>(s.x)] = ch;
  }
  std::string out;
  for (auto& r : rows) {
    while (!r.empty() && r.back() == ' ') r.pop_back();
    out += r + "\n";
  }
  return out;
}

std::string polyline(int x0, int h0, const std::vector<Stroke>& strokes, const char* extra) {
  std::ostringstream os;
  os << "  <polyline fill=\"none\" stroke=\"black\"" << extra << " points=\"" << x0 * kUnit << "," << -h0 * kUnit;
  for (const auto& s : strokes) os << " " << (s.x + 1) * kUnit << "," << -(s.from + s.step) * kUnit;
  os << "\"/>\n";
  return os.str();
}

std::string svg_document(const std::string& body, int width, int low, int high) {
  std::ostringstream os;
  const int pad = kUnit;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << -pad << " " << -high * kUnit - pad << " "
     << width * kUnit + 2 * pad << " " << (high - low) * kUnit + 2 * pad << "\">\n"
     << body << "</svg>\n";
  return os.str();
}

std::vector<int> index_columns(std::size_t n) {
  std::vector<int> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<int>(i);
  return xs;
}

std::pair<int, int> height_range(const LatticedPath& p) {
  int low = p.start_height, high = p.start_height;
  for (int h : p.heights()) {
    low = std::min(low, h);
    high = std::max(high, h);
  }
  return {low, high};
}

}  // namespace

std::string render_path(const LatticedPath& p, RenderFormat fmt, bool generic_overlay) {
  if (p.degenerate() || p.positions.empty()) return fmt == RenderFormat::svg ? svg_document("", 0, 0, 0) : "";
  const auto xs = index_columns(p.positions.size());
  const auto strokes = strokes_of(p, xs);
  const int width = static_cast<int>(xs.size());
  if (fmt == RenderFormat::ascii) return ascii_of(strokes, width);
  auto [low, high] = height_range(p);
  std::string body;
  if (generic_overlay) {
    auto generic = p;
    generic.flat.clear();
    auto [gl, gh] = height_range(generic);
    low = std::min(low, gl);
    high = std::max(high, gh);
    body += polyline(0, generic.start_height, strokes_of(generic, xs), " stroke-dasharray=\"3,3\"");
  }
  body += polyline(0, p.start_height, strokes, "");
  return svg_document(body, width, low, high);
}

std::string render_sequence(const SignSequence& t, RenderFormat fmt) {
  return render_path(enumerate_latticed(t).front(), fmt);
}

std::string render_collection(const WellNestedCollection& w, RenderFormat fmt) {
  if (fmt == RenderFormat::ascii) {
    std::string out;
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
      const auto& p = w.paths[i];
      out += std::to_string(w.pairs[i].first) + " -> " + std::to_string(w.pairs[i].second) +
             "  norm " + std::to_string(p.norm()) + "\n";
      out += render_path(p, fmt);
    }
    return out;
  }
  // Shared columns: every window endpoint and interior position gets a rank.
  std::vector<int> cols;
  for (const auto& p : w.paths) {
    if (p.degenerate()) continue;
    cols.push_back(p.lo);
    cols.insert(cols.end(), p.positions.begin(), p.positions.end());
  }
  cols = make_positions(std::move(cols));
  auto rank = [&](int p) { return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), p) - cols.begin()); };
  std::string body;
  int low = 0, high = 0;
  for (const auto& p : w.paths) {
    if (p.degenerate()) continue;
    std::vector<int> xs;
    for (int q : p.positions) xs.push_back(rank(q) - 1);
    body += polyline(rank(p.lo), p.start_height, strokes_of(p, xs), "");
    auto [l, h] = height_range(p);
    low = std::min(low, l);
    high = std::max(high, h);
  }
  return svg_document(body, static_cast<int>(cols.size()), low, high);
}

}  // namespace fockpath
