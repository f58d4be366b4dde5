#include "fockpath/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <bitset>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "fockpath/bijection.hpp"
#include "fockpath/closedform.hpp"
#include "fockpath/fockspace.hpp"
#include "fockpath/latticepath.hpp"

namespace fockpath {

void SweepReport::fail(std::string instance, std::string detail) {
  failures.push_back({std::move(instance), std::move(detail)});
}

void SweepReport::merge(const SweepReport& other) {
  checked += other.checked;
  for (const auto& [k, v] : other.counters) counters[k] += v;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  os << name << ": checked " << checked << ", failures " << failures.size();
  for (const auto& [k, v] : counters) os << ", " << k << " " << v;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << " (" << seconds << "s)";
  return os.str();
}

std::vector<SignSequence> sign_sequences_on(int k) {
  std::vector<SignSequence> out;
  for (unsigned m = 0; m < (1u << k); ++m) {
    PositionSet plus, minus;
    for (int i = 0; i < k; ++i) (m >> i & 1u ? plus : minus).push_back(i + 1);
    out.emplace_back(std::move(plus), std::move(minus));
  }
  return out;
}

namespace {

template <class Task, class Label, class Check>
SweepReport run_tasks(std::string name, const std::vector<Task>& tasks, Label label, Check check, Exec exec) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport total;
  total.name = std::move(name);
  auto one = [&](const Task& task, SweepReport& local) {
    try {
      check(task, local);
    } catch (const std::exception& ex) {
      local.fail(label(task), std::string("exception: ") + ex.what());
    }
  };
  if (exec == Exec::serial) {
    for (const auto& task : tasks) one(task, total);
  } else {
    const long n = static_cast<long>(tasks.size());
#pragma omp parallel
    {
      SweepReport local;
#pragma omp for schedule(dynamic, 1)
      for (long i = 0; i < n; ++i) one(tasks[static_cast<std::size_t>(i)], local);
#pragma omp critical(fockpath_sweep_merge)
      total.merge(local);
    }
  }
  std::sort(total.failures.begin(), total.failures.end());
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

std::vector<PositionSet> subsets_of(const PositionSet& s) {
  std::vector<PositionSet> out;
  for (unsigned m = 0; m < (1u << s.size()); ++m) {
    PositionSet sub;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (m >> i & 1u) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::pair<PositionSet, PositionSet>> bijective_moves(const SignSequence& t) {
  std::vector<std::pair<PositionSet, PositionSet>> out;
  const auto bs = subsets_of(t.plus());
  for (const auto& a : subsets_of(t.minus()))
    for (const auto& b : bs)
      if (a.size() == b.size() && bijective(a, b)) out.emplace_back(a, b);
  return out;
}

struct ColumnTask {
  Partition lambda;
  int r;
};

std::vector<ColumnTask> column_tasks(int e, int max_n, bool regular_only) {
  std::vector<ColumnTask> out;
  for (int n = 0; n <= max_n; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (regular_only && !is_e_regular(lambda, e)) continue;
      for (int r = 0; r < e; ++r) out.push_back({lambda, r});
    }
  return out;
}

std::string move_label(const Partition& lambda, int e, int r, const PositionSet& a, const PositionSet& b) {
  return "e=" + std::to_string(e) + " lambda=(" + lambda.str() + ") r=" + std::to_string(r) + " A=" + str(a) +
         " B=" + str(b);
}

auto column_label(int e) {
  return [e](const ColumnTask& t) { return "e=" + std::to_string(e) + " lambda=(" + t.lambda.str() + ") r=" + std::to_string(t.r); };
}

Partition without_first_row(const Partition& lambda) {
  const auto& p = lambda.parts();
  return Partition(std::vector<int>(p.begin() + (p.empty() ? 0 : 1), p.end()));
}

void warm(CanonicalBasis& basis, int max_n) {
  for (int n = 0; n <= max_n; ++n) basis.ensure_size(n);
}

struct SeqTask {
  SignSequence t;
};

struct InstanceTask {
  SignSequence t;
  PositionSet a;
  PositionSet b;
};

std::vector<SeqTask> sequence_tasks(int max_positions) {
  std::vector<SeqTask> out;
  for (int k = 1; k <= max_positions; ++k)
    for (auto& t : sign_sequences_on(k)) out.push_back({std::move(t)});
  return out;
}

std::string norms_str(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

SweepReport sweep_formula(int e, int max_n, Exec exec) {
  auto& basis = shared_basis(e);
  warm(basis, max_n);
  auto check = [&](const ColumnTask& task, SweepReport& rep) {
    const auto t = sign_sequence_of(task.lambda, e, task.r);
    for (const auto& [a, b] : bijective_moves(t)) {
      const MoveSpec m{task.lambda, e, task.r, a, b};
      const auto formula = v_decomposition(m).poly;
      const auto oracle = basis.coefficient(m.result(), task.lambda);
      ++rep.checked;
      if (!formula.is_zero()) ++rep.counters["nonzero"];
      if (formula != oracle)
        rep.fail(move_label(task.lambda, e, task.r, a, b), "formula " + formula.str() + " oracle " + oracle.str());
    }
  };
  return run_tasks("formula e=" + std::to_string(e) + " n<=" + std::to_string(max_n), column_tasks(e, max_n, true),
                   column_label(e), check, exec);
}

SweepReport sweep_branching(int e, int max_n, Exec exec) {
  auto& basis = shared_basis(e);
  warm(basis, max_n + 1);
  auto check = [&](const ColumnTask& task, SweepReport& rep) {
    const auto t = sign_sequence_of(task.lambda, e, task.r);
    const auto expansion = basis.expand(apply_f(basis.get(task.lambda), e, task.r));
    for (const auto& [a, b] : admissible_pairs(t)) {
      const auto formula = branching_coefficient(task.lambda, e, task.r, a, b);
      const auto label = move_label(task.lambda, e, task.r, a, b);
      if (!formula.nonnegative() || !formula.is_bar_invariant()) rep.fail(label, "formula " + formula.str() + " is not a bar-symmetric N0 polynomial");
      const auto mu = apply_move(task.lambda, e, task.r, a, b);
      if (!is_e_regular(mu, e)) {
        ++rep.counters["singular_targets"];
        continue;
      }
      auto it = expansion.find(mu);
      const auto extracted = it == expansion.end() ? LaurentPolynomial{} : it->second;
      ++rep.checked;
      if (!formula.is_zero()) ++rep.counters["nonzero"];
      if (formula != extracted) rep.fail(label, "formula " + formula.str() + " expansion " + extracted.str());
    }
  };
  return run_tasks("branching e=" + std::to_string(e) + " n<=" + std::to_string(max_n), column_tasks(e, max_n, true),
                   column_label(e), check, exec);
}

SweepReport sweep_shape(int e, int max_n, Exec exec) {
  auto& basis = shared_basis(e);
  warm(basis, max_n);
  auto check = [&](const ColumnTask& task, SweepReport& rep) {
    const auto& lambda = task.lambda;
    const bool regular = is_e_regular(lambda, e);
    const auto t = sign_sequence_of(lambda, e, task.r);
    if (regular && basis.coefficient(lambda, lambda) != LaurentPolynomial(1))
      rep.fail(column_label(e)(task), "oracle diagonal is not 1");
    for (const auto& [a, b] : bijective_moves(t)) {
      const MoveSpec m{lambda, e, task.r, a, b};
      const auto label = move_label(lambda, e, task.r, a, b);
      const auto d = v_decomposition(m).poly;
      ++rep.checked;
      if (a.empty()) {
        ++rep.counters["diagonal"];
        if (d != LaurentPolynomial(1)) rep.fail(label, "diagonal is " + d.str());
      } else if (!d.is_zero() && !d.in_v_n0()) {
        rep.fail(label, d.str() + " is not in vN0[v]");
      }
      const auto mu = m.result();
      if (lambda.length() == 0 || lambda.row(1) != mu.row(1)) continue;
      const MoveSpec shifted{without_first_row(lambda), e, (task.r + 1) % e, a, b};
      if (shifted.result() != without_first_row(mu)) {
        rep.fail(label, "first-row removal does not carry the move");
        continue;
      }
      ++rep.counters["first_row_pairs"];
      const auto d2 = v_decomposition(shifted).poly;
      if (d2 != d) rep.fail(label, "first-row removal changes " + d.str() + " to " + d2.str());
      if (regular && is_e_regular(shifted.lambda, e)) {
        ++rep.counters["first_row_oracle_pairs"];
        const auto o1 = basis.coefficient(mu, lambda);
        const auto o2 = basis.coefficient(shifted.result(), shifted.lambda);
        if (o1 != o2) rep.fail(label, "oracle first-row removal changes " + o1.str() + " to " + o2.str());
      }
    }
  };
  return run_tasks("shape e=" + std::to_string(e) + " n<=" + std::to_string(max_n), column_tasks(e, max_n, false),
                   column_label(e), check, exec);
}

SweepReport sweep_consistency(int e, int max_n, Exec exec) {
  auto check = [&](const ColumnTask& task, SweepReport& rep) {
    const auto t = sign_sequence_of(task.lambda, e, task.r);
    for (const auto& [a, b] : admissible_pairs(t)) {
      const auto label = move_label(task.lambda, e, task.r, a, b);
      const auto cp = consistency_pair(t, a, b);
      ++rep.checked;
      if (!is_e_regular(task.lambda, e)) ++rep.counters["singular_columns"];
      if (cp.left != cp.right) rep.fail(label, "left " + cp.left.str() + " right " + cp.right.str());
      LaurentPolynomial from_l, from_r;
      for (const auto& x : enumerate_L(t, a, b)) from_l += LaurentPolynomial::monomial(x.norm);
      for (const auto& y : enumerate_R(t, a, b)) from_r += LaurentPolynomial::monomial(y.norm);
      if (from_l != cp.left || from_r != cp.right) rep.fail(label, "index-set generating functions disagree with the sums");
    }
  };
  return run_tasks("consistency e=" + std::to_string(e) + " n<=" + std::to_string(max_n),
                   column_tasks(e, max_n, false), column_label(e), check, exec);
}

SweepReport sweep_bijection_exhaustive(int max_positions, Exec exec) {
  auto check = [](const SeqTask& task, SweepReport& rep) {
    for (const auto& [a, b] : admissible_pairs(task.t)) {
      const auto nm = norm_multisets(task.t, a, b);
      ++rep.checked;
      if (!nm.equal())
        rep.fail(describe_instance(task.t, a, b), "normsL " + norms_str(nm.left) + " normsR " + norms_str(nm.right));
    }
  };
  return run_tasks("bijection multisets positions<=" + std::to_string(max_positions), sequence_tasks(max_positions),
                   [](const SeqTask& t) { return t.t.str(); }, check, exec);
}

SweepReport sweep_bijection_random(int count, int max_positions, std::uint64_t seed, Exec exec) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(1, max_positions);
  std::vector<InstanceTask> tasks;
  while (static_cast<int>(tasks.size()) < count) {
    const int k = size_dist(rng);
    const auto bits = rng();
    PositionSet plus, minus;
    for (int i = 0; i < k; ++i) (bits >> i & 1u ? plus : minus).push_back(i + 1);
    SignSequence t(std::move(plus), std::move(minus));
    const auto pairs = admissible_pairs(t);
    if (pairs.empty()) continue;
    const auto& [a, b] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
    tasks.push_back({t, a, b});
  }
  auto check = [](const InstanceTask& task, SweepReport& rep) {
    const auto nm = norm_multisets(task.t, task.a, task.b);
    ++rep.checked;
    if (!nm.equal())
      rep.fail(describe_instance(task.t, task.a, task.b), "normsL " + norms_str(nm.left) + " normsR " + norms_str(nm.right));
  };
  return run_tasks("bijection random seed=" + std::to_string(seed) + " positions<=" + std::to_string(max_positions),
                   tasks, [](const InstanceTask& t) { return describe_instance(t.t, t.a, t.b); }, check, exec);
}

SweepReport sweep_construction(int max_positions, Exec exec) {
  auto check = [](const SeqTask& task, SweepReport& rep) {
    for (const auto& [a, b] : admissible_pairs(task.t)) {
      ++rep.checked;
      try {
        const auto m = bijection_map(task.t, a, b);
        if (!is_norm_preserving_bijection(m, enumerate_R(task.t, a, b))) {
          ++rep.counters["not_bijective"];
          rep.fail(describe_instance(task.t, a, b), "map is not a norm-preserving bijection");
        }
      } catch (const ConstructionError& ex) {
        const bool differ = !verify_norm_multisets(task.t, a, b);
        ++rep.counters["construction_failures"];
        if (differ) ++rep.counters["attributable_to_multisets"];
        rep.fail(describe_instance(task.t, a, b),
                 std::string(ex.what()) + (differ ? " [norm multisets differ]" : " [norm multisets agree]"));
      }
    }
  };
  return run_tasks("bijection construction positions<=" + std::to_string(max_positions),
                   sequence_tasks(max_positions), [](const SeqTask& t) { return t.t.str(); }, check, exec);
}

SweepReport sweep_lattice(int max_positions, Exec exec) {
  auto check = [](const SeqTask& task, SweepReport& rep) {
    const auto& t = task.t;
    const int k = static_cast<int>(t.positions().size());
    const auto fast = enumerate_latticed(t, 0, k + 1);
    const auto slow = enumerate_latticed_slow(t, 0, k + 1);
    std::set<PositionSet> fast_set, slow_set;
    for (const auto& p : fast) fast_set.insert(p.flat);
    for (const auto& p : slow) slow_set.insert(p.flat);
    const auto label = t.str();
    ++rep.checked;
    if (fast_set.size() != fast.size()) rep.fail(label, "fast enumeration repeats a path");
    if (fast_set != slow_set)
      rep.fail(label, "fast " + std::to_string(fast_set.size()) + " paths, slow " + std::to_string(slow_set.size()));
    const auto& generic = fast.front();
    if (!generic.flat.empty()) rep.fail(label, "generic path is not first");
    const auto gh = generic.heights();
    for (const auto& p : fast) {
      ++rep.counters["paths"];
      if (p.norm() != 1 + 2 * p.down_count() + t.weight()) rep.fail(label, "norm identity fails for flat " + str(p.flat));
      const auto h = p.heights();
      for (std::size_t i = 0; i < h.size(); ++i)
        if (h[i] > gh[i]) rep.fail(label, "path rises above the generic path");
      if (!h.empty() && h.back() != gh.back()) rep.fail(label, "path changes the endpoint");
      if (&p != &generic && p.norm() >= generic.norm()) rep.fail(label, "non-generic path reaches the maximal norm");
    }
    if (generic.norm() != 1 + k) rep.fail(label, "generic norm is not 1 + positions");
  };
  return run_tasks("latticed paths positions<=" + std::to_string(max_positions), sequence_tasks(max_positions),
                   [](const SeqTask& t) { return t.t.str(); }, check, exec);
}

SweepReport sweep_order(int max_side) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.name = "partial order |X|,|Y|<=" + std::to_string(max_side);
  for (int k = 2; k <= 2 * max_side; ++k)
    for (const auto& t : sign_sequences_on(k)) {
      const auto& x = t.minus();
      const auto& y = t.plus();
      if (x.empty() || y.empty() || static_cast<int>(x.size()) > max_side || static_cast<int>(y.size()) > max_side) continue;
      std::vector<std::pair<PositionSet, PositionSet>> dom;
      for (const auto& a : subsets_of(x))
        for (const auto& b : subsets_of(y))
          if (onto(a, b)) dom.emplace_back(a, b);
      constexpr std::size_t kMax = 256;
      std::vector<std::bitset<kMax>> rel(dom.size());
      for (std::size_t i = 0; i < dom.size(); ++i)
        for (std::size_t j = 0; j < dom.size(); ++j)
          rel[i][j] = preceq(dom[i].first, dom[i].second, dom[j].first, dom[j].second);
      const std::string label = "X=" + str(x) + " Y=" + str(y);
      for (std::size_t i = 0; i < dom.size(); ++i) {
        ++rep.checked;
        if (!rel[i][i]) rep.fail(label, "not reflexive");
        for (std::size_t j = 0; j < dom.size(); ++j) {
          if (!rel[i][j]) continue;
          if (i != j && rel[j][i]) rep.fail(label, "not antisymmetric");
          if ((rel[j] & ~rel[i]).any()) rep.fail(label, "not transitive");
        }
      }
    }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SweepReport sweep_jantzen(int e, int max_n) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.name = "jantzen e=" + std::to_string(e) + " n<=" + std::to_string(max_n);
  for (int n = 1; n <= max_n; ++n)
    for (const auto& lambda : partitions_of(n))
      for (const auto& tau : jantzen_successors(lambda, e))
        for (int r = 0; r < e; ++r) {
          const auto cmp = class_compare(lambda, tau, e, r);
          ++rep.checked;
          ++rep.counters[to_string(cmp)];
          if (cmp == ClassOrder::less)
            rep.fail("e=" + std::to_string(e) + " (" + lambda.str() + ") -> (" + tau.str() + ") r=" + std::to_string(r),
                     "class drops");
        }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fockpath
