#pragma once

// Level-1 Fock space over Z[v, v^-1], the f_r action, and the canonical
// basis of e-regular columns computed by ladder seeds plus elimination.

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockpath/laurent.hpp"
#include "fockpath/partition.hpp"

namespace fockpath {

struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A broken structural assumption of the oracle (unitriangularity etc).
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

class FockVector {
 public:
  using Terms = std::map<Partition, LaurentPolynomial>;

  FockVector() = default;
  /// The basis vector λ.
  static FockVector basis(const Partition& lambda);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPolynomial coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const LaurentPolynomial& c);

  FockVector& operator+=(const FockVector& rhs);
  FockVector& operator-=(const FockVector& rhs);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const LaurentPolynomial& c, const FockVector& x);
  friend bool operator==(const FockVector&, const FockVector&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

bool is_e_regular(const Partition& lambda, int e);

/// f_r(λ) = Σ v^{N} (λ + n) over indent r-nodes n, where N counts indent
/// r-nodes strictly right of n minus removable r-nodes strictly right of n.
FockVector apply_f(const FockVector& x, int e, int r);
/// f_r^k / [k]!; throws DivisibilityError if the division is not exact.
FockVector apply_f_divided(const FockVector& x, int e, int r, int k);

struct LadderStep {
  int residue;
  int count;
  friend bool operator==(const LadderStep&, const LadderStep&) = default;
};
using LadderMonomial = std::vector<LadderStep>;

/// Nodes grouped by ladder i + (e-1)(j-1), in increasing ladder order.
LadderMonomial ladder_monomial(const Partition& lambda, int e);
/// The seed A(μ): the ladder monomial's divided powers applied to ∅.
FockVector ladder_seed(const Partition& mu, int e);

/// Memoized G(μ) for e-regular μ, computed one size at a time. Thread-safe.
/// With a cache directory, each size is loaded from / saved to one file.
class CanonicalBasis {
 public:
  explicit CanonicalBasis(int e, std::optional<std::filesystem::path> cache_dir = std::nullopt);

  int e() const { return e_; }
  const std::optional<std::filesystem::path>& cache_dir() const { return cache_dir_; }

  /// G(μ); throws UnsupportedError for e-singular μ.
  const FockVector& get(const Partition& mu);
  /// d_{λμ}(v) = coefficient of λ in G(μ).
  LaurentPolynomial coefficient(const Partition& lambda, const Partition& mu);
  /// Computes (or loads) every G(μ) with |μ| = n.
  void ensure_size(int n);
  /// All G(μ) of size n.
  const std::map<Partition, FockVector>& elements_of_size(int n);

  /// Expansion of a vector in the G basis by repeatedly removing the
  /// lex-largest support element. Throws InvariantError if a singular
  /// partition leads.
  std::map<Partition, LaurentPolynomial> expand(FockVector x);

  /// Cache problems met so far (checksum mismatches, I/O failures).
  std::vector<std::string> diagnostics() const;
  /// Sizes that were read from the cache rather than computed.
  std::set<int> loaded_sizes() const;

 private:
  std::map<Partition, FockVector> compute_size(int n);
  void check_element(const Partition& mu, const FockVector& g) const;

  int e_;
  std::optional<std::filesystem::path> cache_dir_;
  mutable std::recursive_mutex mutex_;
  std::map<int, std::map<Partition, FockVector>> by_size_;
  std::vector<std::string> diagnostics_;
  std::set<int> loaded_;
};

/// Process-wide basis per e; its cache directory comes from FOCKPATH_CACHE.
CanonicalBasis& shared_basis(int e);

/// d_{λμ}(v) through shared_basis(e). Throws UnsupportedError for singular μ
/// and std::invalid_argument when sizes differ.
LaurentPolynomial oracle_coefficient(const Partition& lambda, const Partition& mu, int e);

}  // namespace fockpath
