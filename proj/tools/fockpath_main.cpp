// fockpath: decomposition polynomials, path listings, oracle access and
// verification sweeps. Exit codes: 0 success, 1 verification failure,
// 2 usage or scope error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "fockpath/bijection.hpp"
#include "fockpath/cache.hpp"
#include "fockpath/closedform.hpp"
#include "fockpath/fockspace.hpp"
#include "fockpath/json_io.hpp"
#include "fockpath/latticepath.hpp"
#include "fockpath/sweep.hpp"

using namespace fockpath;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  bool json = false;
  std::string cache;
  std::uint64_t seed = 1;

  int e = 2;
  std::string col;
  std::string row;
  std::optional<int> r;
  std::string a;
  std::string b;
  std::string plus;
  std::string minus;
  std::optional<int> lo;
  std::optional<int> hi;
  bool show_paths = false;
  bool branching = false;

  std::string mu;
  std::optional<int> roundtrip;

  std::string kind;
  int max_n = 8;
  int max_positions = 8;
  int random = 0;
  int max_side = 4;
  bool serial = false;

  std::string format = "ascii";
  std::string out;
};

void require_e(int e) {
  if (e < 2) throw UsageError("--e must be at least 2");
}

Partition parse_partition(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::exception& ex) {
    throw UsageError(std::string(flag) + ": " + ex.what());
  }
}

PositionSet parse_set(const std::string& text, const char* flag) {
  try {
    return parse_positions(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + ": malformed position list '" + text + "'");
  }
}

SignSequence sequence_from_flags(const Options& o) {
  try {
    return SignSequence(parse_set(o.plus, "--plus"), parse_set(o.minus, "--minus"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
}

MoveSpec move_from_flags(const Options& o) {
  require_e(o.e);
  const auto lambda = parse_partition(o.col, "--col");
  if (!o.row.empty()) {
    const auto nu = parse_partition(o.row, "--row");
    if (nu.size() != lambda.size()) throw UsageError("--col and --row must have the same size");
    auto m = detect_move(lambda, nu, o.e);
    if (!m) throw UsageError("not covered by closed formula: (" + nu.str() + ") is not a same-residue move of (" + lambda.str() + ")");
    return *m;
  }
  if (!o.r) throw UsageError("give either --row or --r with --A/--B");
  MoveSpec m{lambda, o.e, normalize_residue(*o.r, o.e), parse_set(o.a, "--A"), parse_set(o.b, "--B")};
  const auto t = sign_sequence_of(lambda, o.e, m.r);
  const auto a_only = set_difference(m.A, m.B), b_only = set_difference(m.B, m.A);
  if (!is_subset(a_only, t.minus()) || !is_subset(b_only, t.plus()))
    throw UsageError("--A must name indent and --B removable " + std::to_string(m.r) + "-nodes of (" + lambda.str() + ")");
  return m;
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_decomp(const Options& o) {
  const auto m = move_from_flags(o);
  const auto t = sign_sequence_of(m.lambda, m.e, m.r);
  const auto d = v_decomposition(m);
  Json j{{"e", m.e}, {"col", to_json(m.lambda)}, {"row", to_json(m.result())}, {"r", m.r}, {"A", m.A}, {"B", m.B},
         {"poly", to_json(d.poly)}, {"paths", d.paths}};
  std::string text = "col (" + m.lambda.str() + ") row (" + m.result().str() + ") e=" + std::to_string(m.e) +
                     " r=" + std::to_string(m.r) + " A=" + str(m.A) + " B=" + str(m.B) + "\npoly " + d.poly.str() +
                     "\npaths " + std::to_string(d.paths) + "\n";
  if (o.show_paths && bijective(m.A, m.B)) {
    Json list = Json::array();
    for (const auto& w : enumerate_wellnested(t, m.A, m.B)) {
      list.push_back(to_json(w));
      text += "norm " + std::to_string(w.norm) + "\n" + render_collection(w, RenderFormat::ascii) + "\n";
    }
    j["collections"] = list;
  }
  emit(o, j, text);
  return 0;
}

int cmd_moves(const Options& o) {
  require_e(o.e);
  const auto lambda = parse_partition(o.col, "--col");
  Json rows = Json::array();
  std::string text;
  for (int r = 0; r < o.e; ++r) {
    if (o.r && normalize_residue(*o.r, o.e) != r) continue;
    const auto t = sign_sequence_of(lambda, o.e, r);
    if (o.branching) {
      for (const auto& [a, b] : admissible_pairs(t)) {
        const auto c = branching_formula(t, a, b);
        if (c.is_zero()) continue;
        const auto mu = apply_move(lambda, o.e, r, a, b);
        rows.push_back({{"r", r}, {"A", a}, {"B", b}, {"row", to_json(mu)}, {"poly", to_json(c)}});
        text += "r=" + std::to_string(r) + " A=" + str(a) + " B=" + str(b) + " (" + mu.str() + ") " + c.str() + "\n";
      }
      continue;
    }
    // Subsets small enough for a bitmask: every column holds at most one r-node.
    const auto& minus = t.minus();
    const auto& plus = t.plus();
    for (unsigned ma = 1; ma < (1u << minus.size()); ++ma)
      for (unsigned mb = 0; mb < (1u << plus.size()); ++mb) {
        PositionSet a, b;
        for (std::size_t i = 0; i < minus.size(); ++i)
          if (ma >> i & 1u) a.push_back(minus[i]);
        for (std::size_t i = 0; i < plus.size(); ++i)
          if (mb >> i & 1u) b.push_back(plus[i]);
        if (a.size() != b.size() || !bijective(a, b)) continue;
        const MoveSpec m{lambda, o.e, r, a, b};
        const auto d = v_decomposition(m);
        rows.push_back({{"r", r}, {"A", a}, {"B", b}, {"row", to_json(m.result())}, {"poly", to_json(d.poly)},
                        {"paths", d.paths}});
        text += "r=" + std::to_string(r) + " A=" + str(a) + " B=" + str(b) + " (" + m.result().str() + ") " +
                d.poly.str() + "\n";
      }
  }
  emit(o, Json{{"col", to_json(lambda)}, {"e", o.e}, {"moves", rows}}, text.empty() ? "no moves\n" : text);
  return 0;
}

int cmd_paths(const Options& o) {
  Json j;
  std::string text;
  if (!o.col.empty()) {
    const auto m = move_from_flags(o);
    const auto t = sign_sequence_of(m.lambda, m.e, m.r);
    if (!bijective(m.A, m.B)) throw UsageError("not covered by closed formula: A and B do not pair perfectly");
    Json list = Json::array();
    for (const auto& w : enumerate_wellnested(t, m.A, m.B)) {
      list.push_back(to_json(w));
      text += "norm " + std::to_string(w.norm) + "\n" + render_collection(w, RenderFormat::ascii) + "\n";
    }
    j = {{"T", to_json(t)}, {"collections", list}};
  } else {
    const auto t = sequence_from_flags(o);
    const auto& pos = t.positions();
    const int lo = o.lo.value_or(pos.empty() ? 0 : pos.front() - 1);
    const int hi = o.hi.value_or(pos.empty() ? 1 : pos.back() + 1);
    if (lo > hi) throw UsageError("--lo must not exceed --hi");
    Json list = Json::array();
    for (const auto& p : enumerate_latticed(t, lo, hi)) {
      list.push_back(to_json(p));
      text += "norm " + std::to_string(p.norm()) + " flat " + str(p.flat) + "\n";
      if (o.show_paths) text += render_path(p, RenderFormat::ascii) + "\n";
    }
    j = {{"T", to_json(t)}, {"lo", lo}, {"hi", hi}, {"paths", list}};
  }
  emit(o, j, text);
  return 0;
}

int cmd_oracle(const Options& o) {
  require_e(o.e);
  if (o.roundtrip) {
    if (o.cache.empty()) throw UsageError("--roundtrip needs --cache DIR");
    const int n = *o.roundtrip;
    if (n < 0 || n > 14) throw UsageError("--roundtrip size must be in 0..14");
    CanonicalBasis basis(o.e);
    const auto& elements = basis.elements_of_size(n);
    write_cache(o.cache, o.e, n, elements);
    const auto back = read_cache(o.cache, o.e, n);
    const bool same = back && *back == elements;
    emit(o, Json{{"e", o.e}, {"n", n}, {"file", cache_file(o.cache, o.e, n).string()}, {"elements", elements.size()}, {"identical", same}},
         std::string(same ? "roundtrip ok: " : "roundtrip MISMATCH: ") + std::to_string(elements.size()) +
             " elements in " + cache_file(o.cache, o.e, n).string() + "\n");
    return same ? 0 : kExitFail;
  }
  const auto mu = parse_partition(o.mu, "--mu");
  if (!is_e_regular(mu, o.e)) throw UsageError("(" + mu.str() + ") is not " + std::to_string(o.e) + "-regular");
  auto& basis = shared_basis(o.e);
  const auto& g = basis.get(mu);
  for (const auto& d : basis.diagnostics()) std::cerr << "cache: " << d << "\n";
  emit(o, canonical_record(mu, g), "G(" + mu.str() + ") = " + g.str() + "\n");
  return 0;
}

int cmd_verify(const Options& o) {
  require_e(o.e);
  if (o.max_n < 0 || o.max_n > 14) throw UsageError("--max-n must be in 0..14");
  if (o.max_positions < 1 || o.max_positions > 14) throw UsageError("--max-positions must be in 1..14");
  if (o.random < 0 || o.random > 1000000) throw UsageError("--random must be in 0..1000000");
  if (o.max_side < 1 || o.max_side > 5) throw UsageError("--max-side must be in 1..5");
  const Exec exec = o.serial ? Exec::serial : Exec::parallel;
  std::vector<SweepReport> reports;
  if (o.kind == "formula") {
    reports.push_back(sweep_formula(o.e, o.max_n, exec));
  } else if (o.kind == "branching") {
    reports.push_back(sweep_branching(o.e, o.max_n, exec));
  } else if (o.kind == "shape") {
    reports.push_back(sweep_shape(o.e, o.max_n, exec));
  } else if (o.kind == "consistency") {
    reports.push_back(sweep_consistency(o.e, o.max_n, exec));
  } else if (o.kind == "bijection") {
    reports.push_back(sweep_bijection_exhaustive(o.max_positions, exec));
    if (o.random > 0) reports.push_back(sweep_bijection_random(o.random, std::max(o.max_positions, 12), o.seed, exec));
  } else if (o.kind == "construction") {
    reports.push_back(sweep_construction(o.max_positions, exec));
  } else if (o.kind == "lattice") {
    reports.push_back(sweep_lattice(o.max_positions, exec));
  } else if (o.kind == "order") {
    reports.push_back(sweep_order(o.max_side));
  } else if (o.kind == "jantzen") {
    reports.push_back(sweep_jantzen(o.e, o.max_n));
  } else {
    throw UsageError("unknown sweep '" + o.kind + "'");
  }
  bool ok = true;
  for (const auto& rep : reports) {
    ok = ok && rep.ok();
    for (const auto& f : rep.failures) {
      if (o.json)
        std::cout << Json{{"sweep", rep.name}, {"instance", f.instance}, {"detail", f.detail}, {"ok", false}}.dump() << "\n";
      else
        std::cout << "FAIL " << f.instance << ": " << f.detail << "\n";
    }
    if (o.json)
      std::cout << Json{{"sweep", rep.name}, {"checked", rep.checked}, {"failures", rep.failures.size()},
                        {"counters", rep.counters}, {"seconds", rep.seconds}, {"ok", rep.ok()}}
                       .dump()
                << "\n";
    else
      std::cout << rep.summary() << "\n";
  }
  return ok ? 0 : kExitFail;
}

int cmd_render(const Options& o) {
  const auto fmt = parse_render_format(o.format);
  std::string out;
  if (!o.col.empty()) {
    const auto m = move_from_flags(o);
    const auto t = sign_sequence_of(m.lambda, m.e, m.r);
    if (m.A.empty() && m.B.empty()) {
      out = render_sequence(t, fmt);
    } else {
      if (!bijective(m.A, m.B)) throw UsageError("not covered by closed formula: A and B do not pair perfectly");
      for (const auto& w : enumerate_wellnested(t, m.A, m.B)) out += render_collection(w, fmt) + "\n";
    }
  } else {
    out = render_sequence(sequence_from_flags(o), fmt);
  }
  if (o.out.empty()) {
    std::cout << out;
    if (!out.empty() && out.back() != '\n') std::cout << "\n";
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << out;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Decomposition numbers of the level-1 Fock space via latticed paths"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_option("--cache", o.cache, "canonical basis cache directory (default: $FOCKPATH_CACHE)");
  app.add_option("--seed", o.seed, "seed for randomized sweeps");

  auto add_move = [&](CLI::App* sub) {
    sub->add_option("--e", o.e, "quantum characteristic");
    sub->add_option("--col", o.col, "column partition lambda, e.g. 3,1");
    sub->add_option("--row", o.row, "row partition; the move is detected");
    sub->add_option("--r", o.r, "residue (0-based)");
    sub->add_option("--A", o.a, "columns of added indent nodes");
    sub->add_option("--B", o.b, "columns of removed removable nodes");
  };
  auto* decomp = app.add_subcommand("decomp", "v-decomposition number via well-nested paths");
  add_move(decomp);
  decomp->get_option("--col")->required();
  decomp->add_flag("--show-paths", o.show_paths, "draw every collection");

  auto* moves = app.add_subcommand("moves", "same-residue moves out of a partition");
  moves->add_option("--e", o.e, "quantum characteristic");
  moves->add_option("--col", o.col, "partition")->required();
  moves->add_option("--r", o.r, "restrict to one residue");
  moves->add_flag("--branching", o.branching, "list nonzero branching coefficients instead");

  auto* paths = app.add_subcommand("paths", "latticed paths of a window or collections of a move");
  add_move(paths);
  paths->add_option("--plus", o.plus, "plus positions");
  paths->add_option("--minus", o.minus, "minus positions");
  paths->add_option("--lo", o.lo, "window start");
  paths->add_option("--hi", o.hi, "window end");
  paths->add_flag("--show-paths", o.show_paths, "draw every path");

  auto* oracle = app.add_subcommand("oracle", "canonical basis element G(mu)");
  oracle->add_option("--e", o.e, "quantum characteristic");
  oracle->add_option("--mu", o.mu, "e-regular partition");
  oracle->add_option("--roundtrip", o.roundtrip, "write and reload every G of this size through --cache");

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("kind", o.kind, "formula|branching|shape|consistency|bijection|construction|lattice|order|jantzen")
      ->required();
  verify->add_option("--e", o.e, "quantum characteristic");
  verify->add_option("--max-n", o.max_n, "largest partition size");
  verify->add_option("--max-positions", o.max_positions, "largest sign sequence length");
  verify->add_option("--random", o.random, "extra seeded random bijection instances");
  verify->add_option("--max-side", o.max_side, "largest |X|, |Y| for the order sweep");
  verify->add_flag("--serial", o.serial, "use the serial reference loop");

  auto* render = app.add_subcommand("render", "draw a sign sequence or the collections of a move");
  add_move(render);
  render->add_option("--plus", o.plus, "plus positions");
  render->add_option("--minus", o.minus, "minus positions");
  render->add_option("--format", o.format, "ascii or svg");
  render->add_option("--out", o.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  if (!o.cache.empty()) setenv("FOCKPATH_CACHE", o.cache.c_str(), 1);
  try {
    if (decomp->parsed()) return cmd_decomp(o);
    if (moves->parsed()) return cmd_moves(o);
    if (paths->parsed()) return cmd_paths(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (verify->parsed()) return cmd_verify(o);
    if (render->parsed()) return cmd_render(o);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
