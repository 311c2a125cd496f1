#include "opdef/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace opdef {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
      throw InputError("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

Perm Perm::one_line(std::initializer_list<int> images_one_based) {
  std::vector<int> im;
  for (int v : images_one_based) im.push_back(v - 1);
  return Perm(std::move(im));
}

Perm Perm::adjacent(std::size_t n, std::size_t i) {
  if (i + 1 >= n) throw InputError("adjacent transposition out of range");
  auto p = identity(n);
  std::swap(p.images_[i], p.images_[i + 1]);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

int Perm::sign() const {
  int inversions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(images_[j]);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.size() != t.size()) throw InputError("composing permutations of different arity");
  std::vector<int> im(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) im[i] = s(static_cast<std::size_t>(t(i)));
  return Perm(std::move(im));
}

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

RightSModule::RightSModule(std::size_t arity, std::vector<Matrix> generators)
    : arity_(arity), generators_(std::move(generators)) {
  if (arity < 1 || arity > 4) throw InputError("S_n modules are supported for 1 <= n <= 4");
  if (generators_.size() != arity - 1) throw InputError("expected one matrix per adjacent transposition");
  dim_ = generators_.empty() ? 1 : generators_.front().rows();
  for (const auto& g : generators_)
    if (g.rows() != dim_ || g.cols() != dim_) throw InputError("action matrices must be square of equal size");
  const Matrix id = Matrix::identity(dim_);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!(generators_[i] * generators_[i] == id)) throw InputError("transposition action does not square to identity");
    if (i + 1 < generators_.size()) {
      const Matrix& a = generators_[i];
      const Matrix& b = generators_[i + 1];
      if (!(a * b * a == b * a * b)) throw InputError("braid relation fails for action matrices");
    }
    for (std::size_t j = i + 2; j < generators_.size(); ++j)
      if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i]))
        throw InputError("commuting relation fails for action matrices");
  }
  // Breadth-first closure: rho(compose(sigma, s_i)) = rho(s_i) rho(sigma).
  action_.emplace(Perm::identity(arity_), id);
  std::deque<Perm> queue{Perm::identity(arity_)};
  while (!queue.empty()) {
    const Perm sigma = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < arity_; ++i) {
      Perm next = compose(sigma, Perm::adjacent(arity_, i));
      if (action_.count(next)) continue;
      action_.emplace(next, generators_[i] * action_.at(sigma));
      queue.push_back(next);
    }
  }
  if (!check_contravariance()) throw InputError("action matrices do not define a right S_n-module");
}

RightSModule RightSModule::trivial(std::size_t arity) {
  std::vector<Matrix> gens(arity - 1, Matrix::identity(1));
  return RightSModule(arity, std::move(gens));
}

RightSModule RightSModule::sign(std::size_t arity) {
  Matrix m(1, 1);
  m(0, 0) = -1;
  std::vector<Matrix> gens(arity - 1, m);
  return RightSModule(arity, std::move(gens));
}

RightSModule RightSModule::regular(std::size_t arity) {
  // Basis e_g for g in S_n (lexicographic); e_g . s = e_{compose(g, s)}.
  const auto elems = all_perms(arity);
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i + 1 < arity; ++i) {
    const Perm s = Perm::adjacent(arity, i);
    Matrix m(elems.size(), elems.size());
    for (std::size_t g = 0; g < elems.size(); ++g) m(index.at(compose(elems[g], s)), g) = 1;
    gens.push_back(std::move(m));
  }
  return RightSModule(arity, std::move(gens));
}

const Matrix& RightSModule::action(const Perm& sigma) const {
  auto it = action_.find(sigma);
  if (it == action_.end()) throw InputError("permutation arity does not match module");
  return it->second;
}

bool RightSModule::check_contravariance() const {
  for (const auto& [s, ms] : action_)
    for (const auto& [t, mt] : action_)
      if (!(action_.at(compose(s, t)) == mt * ms)) return false;
  return true;
}

std::vector<std::size_t> act_on_tuple(const Perm& sigma, const std::vector<std::size_t>& tuple) {
  if (sigma.size() != tuple.size()) throw InputError("tuple length does not match permutation arity");
  const Perm inv = sigma.inverse();
  std::vector<std::size_t> out(tuple.size());
  for (std::size_t p = 0; p < tuple.size(); ++p) out[p] = tuple[static_cast<std::size_t>(inv(p))];
  return out;
}

}  // namespace opdef
