#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "opdef/matrix.hpp"

namespace opdef {

/// Permutation of {0..n-1} in one-line notation: images[i] = sigma(i).
///
/// Composition convention (fixed for the whole library):
///   compose(s, t)(i) = s(t(i)),
/// i.e. t is applied first. With this convention a right module satisfies
///   (x . s) . t = x . compose(s, t),
/// and its action matrices obey rho(compose(s, t)) = rho(t) * rho(s).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(std::size_t n);
  /// From 1-based one-line notation, e.g. {2, 3, 1} is the cycle (1 2 3).
  static Perm one_line(std::initializer_list<int> images_one_based);
  /// Adjacent transposition swapping positions i and i+1 (0-based).
  static Perm adjacent(std::size_t n, std::size_t i);

  std::size_t size() const { return images_.size(); }
  int operator()(std::size_t i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  int sign() const;
  std::string cycle_string() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

Perm compose(const Perm& s, const Perm& t);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Perm> all_perms(std::size_t n);

/// Finite-dimensional right k[S_n]-module given by its action matrices
/// (column convention: coordinates of x . sigma are rho(sigma) * x).
class RightSModule {
 public:
  /// Builds the module from the matrices of the adjacent transpositions
  /// s_1..s_{n-1}; throws InputError if the Coxeter relations fail.
  RightSModule(std::size_t arity, std::vector<Matrix> generators);

  static RightSModule trivial(std::size_t arity);
  static RightSModule sign(std::size_t arity);
  static RightSModule regular(std::size_t arity);

  std::size_t arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(const Perm& sigma) const;
  const std::vector<Matrix>& generators() const { return generators_; }

  /// rho(compose(s, t)) == rho(t) rho(s) for every pair.
  bool check_contravariance() const;

 private:
  std::size_t arity_;
  std::size_t dim_;
  std::vector<Matrix> generators_;
  std::map<Perm, Matrix> action_;
};

/// Input tuple permuted by the left action sigma . (a_1..a_n) = (a_{sigma^-1(1)}, ..).
std::vector<std::size_t> act_on_tuple(const Perm& sigma, const std::vector<std::size_t>& tuple);

}  // namespace opdef
