#ifndef BAERLAB_WORD_HPP
#define BAERLAB_WORD_HPP

#include <string>
#include <utility>
#include <vector>

#include "baerlab/ints.hpp"

namespace baerlab::grp {

// Freely reduced word in exponent-run encoding: (generator index, nonzero
// exponent) with no adjacent equal generators.  The empty word is the
// identity.
struct Word {
  std::vector<std::pair<int, long long>> syl;
  bool empty() const { return syl.empty(); }
  int max_gen() const {
    int m = -1;
    for (const auto& [g, e] : syl) m = std::max(m, g);
    return m;
  }
  bool operator==(const Word& o) const { return syl == o.syl; }
};

Word free_reduce(const Word& w);
Word word_concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);
Word word_power(const Word& w, long long e);
Word word_commutator(const Word& a, const Word& b);  // a^-1 b^-1 a b
Word cyclic_reduce(const Word& w);
Word word_gen(int g, long long e = 1);

// left-normed commutator [w0, w1, ..., wk]
Word left_normed_commutator(const std::vector<Word>& ws);

std::string word_to_string(const Word& w, const std::vector<std::string>& names);

// Parses words like "a^2", "(a b)^3", "[a,b]", "a b^-1".  Unknown names
// raise a parse error.
Word parse_word(const std::string& text, const std::vector<std::string>& gen_names);

struct Presentation {
  std::vector<std::string> gens;
  std::vector<Word> relators;  // stored cyclically reduced
  Presentation(std::vector<std::string> names, std::vector<Word> rels);
};

}  // namespace baerlab::grp

#endif
