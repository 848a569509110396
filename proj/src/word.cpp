#include "baerlab/word.hpp"

#include <cctype>
#include <sstream>

namespace baerlab::grp {

Word free_reduce(const Word& w) {
  Word out;
  for (const auto& [g, e] : w.syl) {
    if (e == 0) continue;
    if (!out.syl.empty() && out.syl.back().first == g) {
      out.syl.back().second += e;
      if (out.syl.back().second == 0) out.syl.pop_back();
    } else {
      out.syl.emplace_back(g, e);
    }
  }
  return out;
}

Word word_concat(const Word& a, const Word& b) {
  Word c = a;
  c.syl.insert(c.syl.end(), b.syl.begin(), b.syl.end());
  return free_reduce(c);
}

Word word_inverse(const Word& w) {
  Word out;
  for (auto it = w.syl.rbegin(); it != w.syl.rend(); ++it)
    out.syl.emplace_back(it->first, -it->second);
  return out;
}

Word word_power(const Word& w, long long e) {
  Word base = e < 0 ? word_inverse(w) : w;
  long long n = e < 0 ? -e : e;
  Word out;
  for (long long i = 0; i < n; ++i) out = word_concat(out, base);
  return out;
}

Word word_commutator(const Word& a, const Word& b) {
  return word_concat(word_concat(word_inverse(a), word_inverse(b)),
                     word_concat(a, b));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  while (r.syl.size() >= 2 && r.syl.front().first == r.syl.back().first) {
    int g = r.syl.front().first;
    long long e = r.syl.front().second + r.syl.back().second;
    r.syl.erase(r.syl.begin());
    r.syl.pop_back();
    if (e != 0) {
      r.syl.emplace_back(g, e);
      r = free_reduce(r);
      break;
    }
    r = free_reduce(r);
  }
  return r;
}

Word word_gen(int g, long long e) {
  Word w;
  if (e != 0) w.syl.emplace_back(g, e);
  return w;
}

Word left_normed_commutator(const std::vector<Word>& ws) {
  if (ws.empty()) return Word{};
  Word acc = ws[0];
  for (std::size_t i = 1; i < ws.size(); ++i) acc = word_commutator(acc, ws[i]);
  return acc;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : w.syl) {
    if (!first) os << " ";
    os << names.at(g);
    if (e != 1) os << "^" << e;
    first = false;
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  const std::vector<std::string>& names;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream os;
    os << "word parse error at position " << pos << ": " << msg << " in '" << s << "'";
    throw BaerError(Errc::ParseError, os.str());
  }

  long long parse_exponent() {
    skip_ws();
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected exponent digits");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  Word parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("expected word atom");
    if (s[pos] == '(') {
      ++pos;
      Word inner = parse_sequence();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return word_power(inner, parse_exponent());
    }
    if (s[pos] == '[') {
      ++pos;
      Word a = parse_sequence();
      if (peek() != ',') fail("expected ',' in commutator");
      ++pos;
      Word b = parse_sequence();
      while (peek() == ',') {  // left-normed [a,b,c] = [[a,b],c]
        ++pos;
        a = word_commutator(a, b);
        b = parse_sequence();
      }
      if (peek() != ']') fail("expected ']'");
      ++pos;
      return word_power(word_commutator(a, b), parse_exponent());
    }
    // generator name: longest match against the alphabet
    std::size_t best_len = 0;
    int best = -1;
    for (int g = 0; g < static_cast<int>(names.size()); ++g) {
      const std::string& n = names[g];
      if (n.size() > best_len && s.compare(pos, n.size(), n) == 0) {
        best_len = n.size();
        best = g;
      }
    }
    if (best < 0) fail("unknown generator");
    pos += best_len;
    return word_gen(best, parse_exponent());
  }

  Word parse_sequence() {
    Word acc;
    while (!eof()) {
      char c = peek();
      if (c == ')' || c == ']' || c == ',') break;
      acc = word_concat(acc, parse_atom());
    }
    return acc;
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gen_names) {
  Parser p{text, 0, gen_names};
  Word w = p.parse_sequence();
  if (!p.eof()) p.fail("trailing input");
  return w;
}

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> rels)
    : gens(std::move(names)) {
  for (auto& r : rels) {
    Word c = cyclic_reduce(r);
    if (c.max_gen() >= static_cast<int>(gens.size()))
      throw BaerError(Errc::InvalidArgument, "relator uses unknown generator");
    relators.push_back(std::move(c));
  }
}

}  // namespace baerlab::grp
