#include "fockpath/fockspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "fockpath/cache.hpp"

namespace fockpath {

FockVector FockVector::basis(const Partition& lambda) {
  FockVector x;
  x.terms_.emplace(lambda, LaurentPolynomial(1));
  return x;
}

LaurentPolynomial FockVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? LaurentPolynomial{} : it->second;
}

void FockVector::add(const Partition& lambda, const LaurentPolynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) add(lambda, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& rhs) {
  for (const auto& [lambda, c] : rhs.terms_) add(lambda, -c);
  return *this;
}

FockVector operator*(const LaurentPolynomial& c, const FockVector& x) {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [lambda, d] : x.terms_) out.add(lambda, c * d);
  return out;
}

std::string FockVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Largest partitions first reads like the usual triangular display.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto& c = it->second;
    const std::string shape = "(" + it->first.str() + ")";
    if (c == LaurentPolynomial(1))
      out += shape;
    else if (c.terms().size() == 1)
      out += c.str() + "*" + shape;
    else
      out += "(" + c.str() + ")*" + shape;
  }
  return out;
}

bool is_e_regular(const Partition& lambda, int e) {
  const auto& p = lambda.parts();
  int run = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    run = (i > 0 && p[i] == p[i - 1]) ? run + 1 : 1;
    if (run >= e) return false;
  }
  return true;
}

FockVector apply_f(const FockVector& x, int e, int r) {
  FockVector out;
  for (const auto& [lambda, c] : x.terms()) {
    const auto bn = boundary_nodes(lambda, e, r);
    for (const auto& n : bn.indent) {
      int exponent = 0;
      for (const auto& m : bn.indent)
        if (m.col > n.col) ++exponent;
      for (const auto& m : bn.removable)
        if (m.col > n.col) --exponent;
      out.add(add_node(lambda, n), LaurentPolynomial::monomial(exponent) * c);
    }
  }
  return out;
}

FockVector apply_f_divided(const FockVector& x, int e, int r, int k) {
  if (k < 1) throw std::invalid_argument("divided power needs k >= 1");
  FockVector y = x;
  for (int i = 0; i < k; ++i) y = apply_f(y, e, r);
  if (k == 1) return y;
  const auto fact = quantum_factorial(k);
  FockVector out;
  for (const auto& [lambda, c] : y.terms()) out.add(lambda, exact_divide(c, fact));
  return out;
}

LadderMonomial ladder_monomial(const Partition& lambda, int e) {
  std::map<int, LadderStep> ladders;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j) {
      const int l = i + (e - 1) * (j - 1);
      const int res = residue({i, j}, e);
      auto [it, inserted] = ladders.try_emplace(l, LadderStep{res, 0});
      if (it->second.residue != res) throw InvariantError("ladder with mixed residues");
      ++it->second.count;
    }
  LadderMonomial out;
  for (const auto& [l, step] : ladders) out.push_back(step);
  return out;
}

FockVector ladder_seed(const Partition& mu, int e) {
  FockVector x = FockVector::basis(Partition{});
  for (const auto& step : ladder_monomial(mu, e)) x = apply_f_divided(x, e, step.residue, step.count);
  return x;
}

CanonicalBasis::CanonicalBasis(int e, std::optional<std::filesystem::path> cache_dir)
    : e_(e), cache_dir_(std::move(cache_dir)) {
  if (e < 2) throw std::invalid_argument("e must be at least 2");
}

namespace {

bool has_nonpositive_term(const LaurentPolynomial& c) {
  return !c.is_zero() && c.min_exponent() <= 0;
}

}  // namespace

void CanonicalBasis::check_element(const Partition& mu, const FockVector& g) const {
  if (g.coefficient(mu) != LaurentPolynomial(1))
    throw InvariantError("G(" + mu.str() + ") has diagonal coefficient " + g.coefficient(mu).str());
  for (const auto& [lambda, c] : g.terms()) {
    if (lambda == mu) continue;
    if (!c.in_v_n0())
      throw InvariantError("G(" + mu.str() + ") has coefficient " + c.str() + " at " + lambda.str());
    if (!dominates(mu, lambda))
      throw InvariantError("G(" + mu.str() + ") has support " + lambda.str() + " outside its dominance cone");
  }
}

std::map<Partition, FockVector> CanonicalBasis::compute_size(int n) {
  std::map<Partition, FockVector> out;
  auto all = partitions_of(n);
  std::sort(all.begin(), all.end());
  for (const auto& mu : all) {
    if (!is_e_regular(mu, e_)) continue;
    FockVector x = ladder_seed(mu, e_);
    if (x.coefficient(mu) != LaurentPolynomial(1))
      throw InvariantError("ladder seed of " + mu.str() + " is not unitriangular");
    // Clear the lex-largest offending coefficient until only vN0[v] is left.
    while (true) {
      const Partition* pivot = nullptr;
      for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it)
        if (it->first != mu && has_nonpositive_term(it->second)) {
          pivot = &it->first;
          break;
        }
      if (!pivot) break;
      const Partition nu = *pivot;
      if (!(nu < mu)) throw InvariantError("elimination pivot " + nu.str() + " is above " + mu.str());
      auto g = out.find(nu);
      if (g == out.end()) throw InvariantError("elimination pivot " + nu.str() + " is e-singular");
      const auto split = symmetric_split(x.coefficient(nu));
      x -= split.symmetric * g->second;
    }
    check_element(mu, x);
    out.emplace(mu, std::move(x));
  }
  return out;
}

void CanonicalBasis::ensure_size(int n) {
  std::lock_guard lock(mutex_);
  if (by_size_.count(n)) return;
  if (cache_dir_) {
    try {
      if (auto cached = read_cache(*cache_dir_, e_, n)) {
        std::size_t regular = 0;
        for (const auto& mu : partitions_of(n)) {
          if (!is_e_regular(mu, e_)) continue;
          ++regular;
          if (!cached->count(mu)) throw InvariantError("cache for n=" + std::to_string(n) + " lacks " + mu.str());
        }
        if (cached->size() != regular) throw InvariantError("cache holds e-singular columns");
        for (const auto& [mu, g] : *cached) check_element(mu, g);
        by_size_.emplace(n, std::move(*cached));
        loaded_.insert(n);
        return;
      }
    } catch (const CacheError& ex) {
      diagnostics_.push_back(std::string(ex.what()) + "; recomputing");
    } catch (const InvariantError& ex) {
      diagnostics_.push_back("cached data rejected: " + std::string(ex.what()) + "; recomputing");
    }
  }
  auto computed = compute_size(n);
  if (cache_dir_) {
    try {
      write_cache(*cache_dir_, e_, n, computed);
    } catch (const CacheError& ex) {
      diagnostics_.push_back(ex.what());
    }
  }
  by_size_.emplace(n, std::move(computed));
}

const std::map<Partition, FockVector>& CanonicalBasis::elements_of_size(int n) {
  ensure_size(n);
  std::lock_guard lock(mutex_);
  return by_size_.at(n);
}

const FockVector& CanonicalBasis::get(const Partition& mu) {
  if (!is_e_regular(mu, e_))
    throw UnsupportedError("canonical basis is only computed for e-regular columns; " + mu.str() + " is " +
                           std::to_string(e_) + "-singular");
  const auto& elems = elements_of_size(mu.size());
  return elems.at(mu);
}

LaurentPolynomial CanonicalBasis::coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("d(lambda, mu) needs |lambda| = |mu|");
  return get(mu).coefficient(lambda);
}

std::map<Partition, LaurentPolynomial> CanonicalBasis::expand(FockVector x) {
  std::map<Partition, LaurentPolynomial> out;
  while (!x.is_zero()) {
    const auto [nu, c] = *x.terms().rbegin();
    if (!is_e_regular(nu, e_)) throw InvariantError("expansion led by e-singular " + nu.str());
    out.emplace(nu, c);
    x -= c * get(nu);
  }
  return out;
}

std::vector<std::string> CanonicalBasis::diagnostics() const {
  std::lock_guard lock(mutex_);
  return diagnostics_;
}

std::set<int> CanonicalBasis::loaded_sizes() const {
  std::lock_guard lock(mutex_);
  return loaded_;
}

CanonicalBasis& shared_basis(int e) {
  static std::mutex registry_mutex;
  static std::map<int, std::unique_ptr<CanonicalBasis>> registry;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[e];
  if (!slot) {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("FOCKPATH_CACHE"); env && *env) dir = env;
    slot = std::make_unique<CanonicalBasis>(e, dir);
  }
  return *slot;
}

LaurentPolynomial oracle_coefficient(const Partition& lambda, const Partition& mu, int e) {
  return shared_basis(e).coefficient(lambda, mu);
}

}  // namespace fockpath
