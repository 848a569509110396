#include "baerlab/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace baerlab::grp {

namespace {

// Letters: 2*g for generator g, 2*g+1 for its inverse.
std::vector<int> letters_of(const Word& w) {
  std::vector<int> out;
  for (const auto& [g, e] : w.syl) {
    int letter = e > 0 ? 2 * g : 2 * g + 1;
    long long n = e > 0 ? e : -e;
    for (long long i = 0; i < n; ++i) out.push_back(letter);
  }
  return out;
}

int inv_letter(int x) { return x ^ 1; }

struct Enumerator {
  int ngens;
  int max_cosets;
  std::vector<std::vector<int>> tab;  // -1 = undefined
  std::vector<int> parent;            // union-find over cosets
  std::deque<int> dead_queue;
  int live = 0;
  int defined = 0;

  explicit Enumerator(int ng, int max_c) : ngens(ng), max_cosets(max_c) {
    new_coset();
  }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  int new_coset() {
    if (live >= max_cosets)
      throw BaerError(Errc::LimitExceeded,
                      "coset enumeration exceeded max_cosets (group may be "
                      "infinite or too large)");
    tab.emplace_back(2 * ngens, -1);
    parent.push_back(static_cast<int>(tab.size()) - 1);
    ++live;
    ++defined;
    return static_cast<int>(tab.size()) - 1;
  }

  int get(int c, int x) const { return tab[c][x]; }

  void deduce(int a, int x, int b) {
    a = rep(a);
    b = rep(b);
    int ax = tab[a][x];
    if (ax == -1) {
      tab[a][x] = b;
      int bx = tab[b][inv_letter(x)];
      if (bx == -1)
        tab[b][inv_letter(x)] = a;
      else if (rep(bx) != a)
        coincide(rep(bx), a);
    } else if (rep(ax) != b) {
      coincide(rep(ax), b);
    }
  }

  void queue_merge(int a, int b) {  // a, b distinct representatives
    if (a > b) std::swap(a, b);
    parent[b] = a;
    --live;
    dead_queue.push_back(b);
  }

  void coincide(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    queue_merge(a, b);
    process_queue();
  }

  void process_queue() {
    while (!dead_queue.empty()) {
      int d = dead_queue.front();
      dead_queue.pop_front();
      for (int x = 0; x < 2 * ngens; ++x) {
        int e = tab[d][x];
        if (e == -1) continue;
        tab[d][x] = -1;
        // drop the exact back reference e --x^-1--> d before transferring
        if (tab[e][inv_letter(x)] == d) tab[e][inv_letter(x)] = -1;
        int mu = rep(d), nu = rep(e);
        int mux = tab[mu][x];
        int nux = tab[nu][inv_letter(x)];
        if (mux != -1) {
          if (rep(mux) != nu) queue_merge(rep(mux), nu);
        } else if (nux != -1) {
          if (rep(nux) != mu) queue_merge(rep(nux), mu);
        } else {
          tab[mu][x] = nu;
          tab[nu][inv_letter(x)] = mu;
        }
      }
    }
  }

  // Scan word at coset c; fill undefined entries with fresh cosets (HLT).
  void scan_and_fill(int c, const std::vector<int>& word) {
    if (word.empty()) return;
    for (;;) {
      c = rep(c);
      int f = c;
      std::size_t i = 0;
      while (i < word.size()) {
        int next = tab[f][word[i]];
        if (next == -1) break;
        f = rep(next);
        ++i;
      }
      if (i == word.size()) {
        if (f != c) coincide(f, c);
        return;
      }
      int b = c;
      std::size_t j = word.size();
      while (j > i) {
        int prev = tab[b][inv_letter(word[j - 1])];
        if (prev == -1) break;
        b = rep(prev);
        --j;
      }
      if (j == i + 1) {
        deduce(f, word[i], b);  // completes the cycle
        return;
      }
      if (j == i) {
        // both scans met: forward end must equal backward end
        if (f != b) coincide(f, b);
        return;
      }
      // define one new coset and continue scanning
      int n = new_coset();
      deduce(f, word[i], n);
    }
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& sub,
                        int max_cosets) {
  int ng = static_cast<int>(p.gens.size());
  Enumerator en(ng, max_cosets);

  std::vector<std::vector<int>> rel_letters;
  for (const auto& r : p.relators) rel_letters.push_back(letters_of(r));
  for (const auto& w : sub) en.scan_and_fill(0, letters_of(free_reduce(w)));

  // HLT main loop
  for (int c = 0; c < static_cast<int>(en.tab.size()); ++c) {
    if (en.rep(c) != c) continue;
    for (const auto& r : rel_letters) {
      en.scan_and_fill(c, r);
      if (en.rep(c) != c) break;  // c died during scanning
    }
    if (en.rep(c) != c) continue;
    for (int x = 0; x < 2 * ng; ++x)
      if (en.tab[c][x] == -1) {
        int n = en.new_coset();
        en.deduce(c, x, n);
      }
  }

  // compress + standardize by BFS from coset 0 in letter order
  int root = en.rep(0);
  std::vector<int> number(en.tab.size(), -1);
  std::vector<int> order;
  number[root] = 0;
  order.push_back(root);
  std::vector<Word> words(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    for (int x = 0; x < 2 * ng; ++x) {
      int d = en.tab[c][x];
      if (d == -1)
        throw BaerError(Errc::Inconsistent, "incomplete table after enumeration");
      d = en.rep(d);
      if (number[d] == -1) {
        number[d] = static_cast<int>(order.size());
        order.push_back(d);
        words.push_back(
            word_concat(words[i], word_gen(x / 2, x % 2 == 0 ? 1 : -1)));
      }
    }
  }

  CosetTable out;
  out.ngens = ng;
  out.tab.assign(order.size(), std::vector<int>(2 * ng, -1));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < 2 * ng; ++x) out.tab[i][x] = number[en.rep(en.tab[order[i]][x])];
  out.rep_words = std::move(words);
  return out;
}

TcGroup todd_coxeter_group_full(const Presentation& p, int max_cosets, int max_order) {
  CosetTable ct = todd_coxeter(p, {}, max_cosets);
  int n = ct.cosets();
  if (n > max_order) {
    std::ostringstream os;
    os << "enumerated group of order " << n << " exceeds table cap " << max_order;
    throw BaerError(Errc::SizeCapExceeded, os.str());
  }
  auto trace = [&](int c, const Word& w) {
    for (const auto& [g, e] : w.syl) {
      int letter = e > 0 ? 2 * g : 2 * g + 1;
      long long cnt = e > 0 ? e : -e;
      for (long long i = 0; i < cnt; ++i) c = ct.tab[c][letter];
    }
    return c;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = trace(i, ct.rep_words[j]);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = word_to_string(ct.rep_words[i], p.gens);
  TcGroup out;
  out.group = make_group(std::move(names), std::move(table), max_order);
  for (int g = 0; g < static_cast<int>(p.gens.size()); ++g)
    out.gen_elems.push_back(ct.tab[0][2 * g]);
  return out;
}

GroupPtr todd_coxeter_group(const Presentation& p, int max_cosets, int max_order) {
  return todd_coxeter_group_full(p, max_cosets, max_order).group;
}

}  // namespace baerlab::grp
