#include "brick/perm.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace brick
{

Perm perm_identity(int n)
{
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(Perm const &a, Perm const &b)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(Perm const &a)
{
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[a[i]] = static_cast<int>(i);
  return r;
}

bool perm_is_identity(Perm const &a)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<int>(i))
      return false;
  return true;
}

bool perm_is_bijection(Perm const &a)
{
  std::vector<char> seen(a.size(), 0);
  for (int x : a) {
    if (x < 0 || x >= static_cast<int>(a.size()) || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

long long perm_order(Perm const &a)
{
  std::vector<char> seen(a.size(), 0);
  long long ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i])
      continue;
    long long len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm perm_from_cycles(int n, std::vector<std::vector<int>> const &cycles)
{
  Perm p = perm_identity(n);
  for (auto const &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1, to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw std::invalid_argument("cycle point out of range");
      p[from] = to;
    }
  if (!perm_is_bijection(p))
    throw std::invalid_argument("cycles are not disjoint");
  return p;
}

PermGroup::PermGroup(int degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens))
{
  if (degree < 1)
    throw std::invalid_argument("permutation degree must be positive");
  for (auto const &g : gens_)
    if (static_cast<int>(g.size()) != degree || !perm_is_bijection(g))
      throw std::invalid_argument("generator is not a permutation of the stated degree");
  build_chain();
}

void PermGroup::grow_orbit(Level &lv)
{
  if (lv.transversal.empty()) {
    lv.transversal.assign(degree_, Perm{});
    lv.transversal[lv.base] = perm_identity(degree_);
    lv.orbit = {lv.base};
  }
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    int b = lv.orbit[k];
    for (auto const &s : lv.gens) {
      int c = s[b];
      if (lv.transversal[c].empty()) {
        lv.transversal[c] = perm_mul(lv.transversal[b], s);
        lv.orbit.push_back(c);
      }
    }
  }
}

Perm PermGroup::sift(Perm g, std::size_t level, std::size_t &stop) const
{
  for (std::size_t i = level; i < chain_.size(); ++i) {
    auto const &lv = chain_[i];
    int b = g[lv.base];
    if (lv.transversal[b].empty()) {
      stop = i;
      return g;
    }
    g = perm_mul(g, perm_inverse(lv.transversal[b]));
  }
  stop = chain_.size();
  return g;
}

void PermGroup::extend(std::size_t level, Perm const &g)
{
  if (level == chain_.size()) {
    int b = 0;
    while (g[b] == b)
      ++b;
    chain_.push_back(Level{b, {}, {}, {}});
  }
  // a strong generator fixing the first `level` base points belongs to every
  // stabiliser above it as well
  for (std::size_t i = 0; i <= level; ++i)
    chain_[i].gens.push_back(g);
}

void PermGroup::build_chain()
{
  for (auto const &g : gens_) {
    std::size_t stop;
    Perm r = sift(g, 0, stop);
    if (!perm_is_identity(r)) {
      extend(stop, r);
      for (std::size_t i = 0; i <= stop; ++i)
        grow_orbit(chain_[i]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = chain_.size(); i-- > 0 && !changed;) {
      grow_orbit(chain_[i]);
      auto const &lv = chain_[i];
      for (std::size_t k = 0; !changed && k < lv.orbit.size(); ++k) {
        int b = lv.orbit[k];
        for (std::size_t s = 0; !changed && s < lv.gens.size(); ++s) {
          Perm const &gen = lv.gens[s];
          Perm h = perm_mul(perm_mul(lv.transversal[b], gen), perm_inverse(lv.transversal[gen[b]]));
          std::size_t stop;
          Perm r = sift(h, i + 1, stop);
          if (!perm_is_identity(r)) {
            extend(stop, r);
            for (std::size_t j = 0; j <= stop && j < chain_.size(); ++j)
              grow_orbit(chain_[j]);
            changed = true;
          }
        }
      }
    }
  }
  order_ = 1;
  base_.clear();
  for (auto const &lv : chain_) {
    order_ *= lv.orbit.size();
    base_.push_back(lv.base);
  }
}

bool PermGroup::contains(Perm const &g) const
{
  if (static_cast<int>(g.size()) != degree_ || !perm_is_bijection(g))
    return false;
  std::size_t stop;
  Perm r = sift(g, 0, stop);
  return stop == chain_.size() && perm_is_identity(r);
}

PermGroup read_perm_group(std::istream &is)
{
  int degree, ngens;
  if (!(is >> degree >> ngens) || degree < 1 || ngens < 0)
    throw std::invalid_argument("bad permutation group header");
  std::vector<Perm> gens(ngens, Perm(degree));
  for (auto &g : gens)
    for (auto &x : g) {
      if (!(is >> x))
        throw std::invalid_argument("truncated permutation");
      --x;
    }
  return PermGroup(degree, std::move(gens));
}

void write_perm_group(std::ostream &os, PermGroup const &g)
{
  os << g.degree() << ' ' << g.ngens() << '\n';
  for (auto const &p : g.gens()) {
    for (std::size_t i = 0; i < p.size(); ++i)
      os << (i ? " " : "") << p[i] + 1;
    os << '\n';
  }
}

namespace
{
struct PermHash
{
  std::size_t operator()(Perm const &p) const
  {
    std::size_t h = 1469598103934665603ull;
    for (int x : p)
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
} // namespace

ElementTable enumerate_elements(PermGroup const &g, std::size_t cap)
{
  if (g.order() > cap)
    throw std::length_error("group order " + std::to_string(g.order()) + " exceeds element cap " +
                            std::to_string(cap));
  ElementTable t;
  std::unordered_map<Perm, int, PermHash> index;
  t.elements.push_back(perm_identity(g.degree()));
  t.parent.push_back(-1);
  t.parent_gen.push_back(-1);
  index.emplace(t.elements[0], 0);
  for (std::size_t i = 0; i < t.elements.size(); ++i) {
    std::vector<int> row(g.ngens());
    for (int j = 0; j < g.ngens(); ++j) {
      Perm h = perm_mul(t.elements[i], g.gen(j));
      auto [it, fresh] = index.emplace(h, static_cast<int>(t.elements.size()));
      if (fresh) {
        t.elements.push_back(std::move(h));
        t.parent.push_back(static_cast<int>(i));
        t.parent_gen.push_back(j);
      }
      row[j] = it->second;
    }
    t.right_mul.push_back(std::move(row));
  }
  return t;
}

} // namespace brick
