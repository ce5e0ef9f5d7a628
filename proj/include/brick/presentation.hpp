#ifndef BRICK_PRESENTATION_HPP
#define BRICK_PRESENTATION_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "brick/perm.hpp"

namespace brick
{

/// Word in generators and their inverses: letter 2i is generator i, letter
/// 2i+1 its inverse. Text form uses a, b, c, ... with capitals for inverses.
using Word = std::vector<int>;

inline int letter_inverse(int x) { return x ^ 1; }
inline int letter_gen(int x) { return x >> 1; }
inline bool letter_is_inverse(int x) { return x & 1; }

Word parse_word(std::string const &text, int ngens);
std::string word_text(Word const &w);
Word free_reduce(Word w);
Word word_inverse(Word const &w);

/// Evaluate a word on permutation generators (left to right).
Perm evaluate(Word const &w, std::vector<Perm> const &gens);

struct Presentation
{
  int ngens = 0;
  std::vector<Word> relators;
};

/// Generator count on the first line, then one relator per line. Blank lines
/// and lines starting with '#' are skipped. Relators are freely reduced.
Presentation read_presentation(std::istream &is);
void write_presentation(std::ostream &os, Presentation const &p);

constexpr long long kDefaultCosetCap = 1000000;

struct CosetResult
{
  bool overflow = false;
  long long index = 0;    // live cosets at the end; meaningless on overflow
  long long defined = 0;  // total cosets ever defined
};

/// Index of the subgroup generated by `subgroup` (default: trivial) by
/// Hasse-Lindsay-Todd enumeration. Every relator is scanned at every live
/// coset in order, then its undefined entries are filled. Overflow when more
/// than `cap` cosets would be defined.
CosetResult coset_enumerate(Presentation const &p, std::vector<Word> const &subgroup = {},
                            long long cap = kDefaultCosetCap);

} // namespace brick

#endif // BRICK_PRESENTATION_HPP
