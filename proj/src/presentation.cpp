#include "brick/presentation.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace brick
{

Word parse_word(std::string const &text, int ngens)
{
  Word w;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\r')
      continue;
    int g;
    bool inv;
    if (ch >= 'a' && ch <= 'z') {
      g = ch - 'a';
      inv = false;
    } else if (ch >= 'A' && ch <= 'Z') {
      g = ch - 'A';
      inv = true;
    } else {
      throw std::invalid_argument(std::string("bad letter in word: ") + ch);
    }
    if (g >= ngens)
      throw std::invalid_argument(std::string("letter beyond generator count: ") + ch);
    w.push_back(2 * g + (inv ? 1 : 0));
  }
  return w;
}

std::string word_text(Word const &w)
{
  std::string s;
  for (int x : w)
    s += static_cast<char>((letter_is_inverse(x) ? 'A' : 'a') + letter_gen(x));
  return s;
}

Word free_reduce(Word w)
{
  Word r;
  for (int x : w) {
    if (!r.empty() && r.back() == letter_inverse(x))
      r.pop_back();
    else
      r.push_back(x);
  }
  return r;
}

Word word_inverse(Word const &w)
{
  Word r(w.rbegin(), w.rend());
  for (int &x : r)
    x = letter_inverse(x);
  return r;
}

Perm evaluate(Word const &w, std::vector<Perm> const &gens)
{
  if (gens.empty())
    throw std::invalid_argument("no generators");
  Perm r = perm_identity(static_cast<int>(gens[0].size()));
  for (int x : w) {
    if (letter_gen(x) >= static_cast<int>(gens.size()))
      throw std::invalid_argument("word uses a missing generator");
    Perm const &g = gens[letter_gen(x)];
    r = perm_mul(r, letter_is_inverse(x) ? perm_inverse(g) : g);
  }
  return r;
}

Presentation read_presentation(std::istream &is)
{
  Presentation p;
  std::string line;
  bool have_count = false;
  while (std::getline(is, line)) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#')
      continue;
    if (!have_count) {
      std::istringstream ss(line);
      if (!(ss >> p.ngens) || p.ngens < 1 || p.ngens > 26)
        throw std::invalid_argument("bad generator count in presentation");
      have_count = true;
      continue;
    }
    Word w = free_reduce(parse_word(line, p.ngens));
    if (!w.empty())
      p.relators.push_back(std::move(w));
  }
  if (!have_count)
    throw std::invalid_argument("empty presentation");
  return p;
}

void write_presentation(std::ostream &os, Presentation const &p)
{
  os << p.ngens << '\n';
  for (auto const &r : p.relators)
    os << word_text(r) << '\n';
}

namespace
{

struct Overflow
{
};

class CosetTable
{
public:
  CosetTable(int ngens, long long cap) : ncol_(2 * ngens), cap_(cap) { new_coset(); }

  long long defined() const { return defined_; }
  std::size_t size() const { return parent_.size(); }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  long long live_count() const
  {
    long long n = 0;
    for (std::size_t c = 0; c < size(); ++c)
      n += alive(c);
    return n;
  }

  void scan_and_fill(int c, Word const &w)
  {
    if (w.empty())
      return;
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0)
        f = at(f, w[i++]);
      if (i > j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j >= i && at(b, letter_inverse(w[j])) >= 0)
        b = at(b, letter_inverse(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, letter_inverse(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void fill_row(int c)
  {
    for (int x = 0; x < ncol_; ++x)
      if (at(c, x) < 0)
        define(c, x);
  }

private:
  int &at(int c, int x) { return table_[static_cast<std::size_t>(c) * ncol_ + x]; }

  int new_coset()
  {
    if (defined_ >= cap_)
      throw Overflow{};
    ++defined_;
    int k = static_cast<int>(parent_.size());
    parent_.push_back(k);
    table_.resize(table_.size() + ncol_, -1);
    return k;
  }

  void define(int c, int x)
  {
    int k = new_coset();
    at(c, x) = k;
    at(k, letter_inverse(x)) = c;
  }

  int rep(int c)
  {
    int r = c;
    while (parent_[r] != r)
      r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l)
  {
    k = rep(k);
    l = rep(l);
    if (k == l)
      return;
    if (l < k)
      std::swap(k, l);
    parent_[l] = k;
    queue_.push_back(l);
  }

  void coincidence(int a, int b)
  {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      int e = queue_[qi];
      for (int x = 0; x < ncol_; ++x) {
        int f = at(e, x);
        if (f < 0)
          continue;
        int xi = letter_inverse(x);
        at(f, xi) = -1;
        int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x));
        } else if (at(f1, xi) >= 0) {
          merge(e1, at(f1, xi));
        } else {
          at(e1, x) = f1;
          at(f1, xi) = e1;
        }
      }
    }
  }

  int ncol_;
  long long cap_;
  long long defined_ = 0;
  std::vector<int> table_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

} // namespace

CosetResult coset_enumerate(Presentation const &p, std::vector<Word> const &subgroup, long long cap)
{
  if (p.ngens < 1)
    throw std::invalid_argument("presentation needs at least one generator");
  CosetResult res;
  CosetTable t(p.ngens, cap);
  try {
    for (auto const &w : subgroup)
      t.scan_and_fill(0, free_reduce(w));
    for (std::size_t c = 0; c < t.size(); ++c) {
      for (auto const &r : p.relators) {
        if (!t.alive(c))
          break;
        t.scan_and_fill(static_cast<int>(c), r);
      }
      if (t.alive(c))
        t.fill_row(static_cast<int>(c));
    }
  } catch (Overflow const &) {
    res.overflow = true;
    res.defined = t.defined();
    return res;
  }
  res.index = t.live_count();
  res.defined = t.defined();
  return res;
}

} // namespace brick
