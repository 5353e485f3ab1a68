#ifndef KANCAT_TESTS_ORACLES_SPAN_ORACLE_HPP_
#define KANCAT_TESTS_ORACLES_SPAN_ORACLE_HPP_

// Brute-force linear algebra over words, independent of the library: a
// congruence is the linear span of explicit generators up to a length bound,
// kept in echelon form with boost rationals.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

  using Rational = boost::multiprecision::cpp_rational;
  using Word     = std::vector<int>;

  // A path: a start (object, or tag for tagged terms) and arrow indices.
  struct Key {
    int  start = 0;
    Word word;

    friend bool operator==(Key const&, Key const&) = default;
  };

  // Length first, then the word, then the start. Any total order works for
  // the elimination; this one does not consult the library's order.
  struct KeyGreater {
    bool operator()(Key const& a, Key const& b) const {
      if (a.word.size() != b.word.size()) {
        return a.word.size() > b.word.size();
      }
      if (a.word != b.word) {
        return a.word > b.word;
      }
      return a.start > b.start;
    }
  };

  using Poly = std::map<Key, Rational, KeyGreater>;

  inline void add_to(Poly& f, Key const& k, Rational const& c) {
    if (c == 0) {
      return;
    }
    auto [it, fresh] = f.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        f.erase(it);
      }
    }
  }

  inline Poly sub(Poly f, Poly const& g) {
    for (auto const& [k, c] : g) {
      add_to(f, k, -c);
    }
    return f;
  }

  struct Graph {
    int                              objects = 0;
    std::vector<std::pair<int, int>> arrows;  // (src, tgt)

    int end(Key const& k, std::vector<int> const& start_object) const {
      return k.word.empty() ? start_object[k.start] : arrows[k.word.back()].second;
    }

    // Paths (as words from object `from`) of length <= n.
    std::vector<Word> words_from(int from, std::size_t n) const {
      std::vector<Word>                    out{{}};
      std::vector<std::pair<Word, int>>    level{{{}, from}};
      for (std::size_t len = 1; len <= n; ++len) {
        std::vector<std::pair<Word, int>> next;
        for (auto const& [w, at] : level) {
          for (int a = 0; a < int(arrows.size()); ++a) {
            if (arrows[a].first == at) {
              auto v = w;
              v.push_back(a);
              out.push_back(v);
              next.emplace_back(std::move(v), arrows[a].second);
            }
          }
        }
        level = std::move(next);
      }
      return out;
    }

    // Paths ending at object `to`, as (src, word), of length <= n.
    std::vector<Key> paths_to(int to, std::size_t n) const {
      std::vector<Key> out;
      for (int s = 0; s < objects; ++s) {
        for (auto& w : words_from(s, n)) {
          int at = w.empty() ? s : arrows[w.back()].second;
          if (at == to) {
            out.push_back({s, std::move(w)});
          }
        }
      }
      return out;
    }
  };

  inline std::size_t degree(Poly const& f) {
    std::size_t d = 0;
    for (auto const& [k, c] : f) {
      d = std::max(d, k.word.size());
    }
    return d;
  }

  // u * f * v on words; u's start replaces the start of f's terms.
  inline Poly multiply(Word const& u, int start, Poly const& f, Word const& v) {
    Poly out;
    for (auto const& [k, c] : f) {
      Key t{start, u};
      t.word.insert(t.word.end(), k.word.begin(), k.word.end());
      t.word.insert(t.word.end(), v.begin(), v.end());
      add_to(out, t, c);
    }
    return out;
  }

  class EchelonSpan {
   public:
    // Returns true when g was independent of the span so far.
    bool add(Poly g) {
      reduce(g);
      if (g.empty()) {
        return false;
      }
      auto lead = g.begin()->second;
      for (auto& [k, c] : g) {
        c /= lead;
      }
      auto key = g.begin()->first;
      _rows.emplace(std::move(key), std::move(g));
      return true;
    }

    // Canonical representative modulo the span: no pivot keys remain.
    void reduce(Poly& f) const {
      auto it = f.begin();
      while (it != f.end()) {
        auto row = _rows.find(it->first);
        if (row == _rows.end()) {
          ++it;
          continue;
        }
        Key      at = it->first;
        Rational c  = it->second;
        for (auto const& [k, d] : row->second) {
          add_to(f, k, -c * d);
        }
        it = f.upper_bound(at);
      }
    }

    Poly normal_form(Poly f) const {
      reduce(f);
      return f;
    }

    bool contains(Poly f) const {
      reduce(f);
      return f.empty();
    }

    std::size_t rank() const {
      return _rows.size();
    }

    // Rows keyed by pivot, greatest first. The pivot is the greatest key of
    // its row, so rows with short pivots span the part of the congruence
    // living on short words.
    std::map<Key, Poly, KeyGreater> const& rows() const {
      return _rows;
    }

   private:
    std::map<Key, Poly, KeyGreater> _rows;
  };

  // Two-sided ideal generated by `relations` (untagged: start = src object),
  // truncated to generators u * r * v of length at most `bound`.
  inline EchelonSpan two_sided_span(Graph const&             g,
                                    std::vector<Poly> const& relations,
                                    std::size_t              bound) {
    EchelonSpan span;
    std::vector<int> identity(g.objects);
    for (int o = 0; o < g.objects; ++o) {
      identity[o] = o;
    }
    for (auto const& r : relations) {
      if (r.empty()) {
        continue;
      }
      auto d = degree(r);
      if (d > bound) {
        continue;
      }
      auto const& any = r.begin()->first;
      int         src = any.start;
      int         tgt = g.end(any, identity);
      for (auto const& u : g.paths_to(src, bound - d)) {
        for (auto const& v : g.words_from(tgt, bound - d - u.word.size())) {
          span.add(multiply(u.word, u.start, r, v));
        }
      }
    }
    return span;
  }

  // A right congruence on tagged words: start = tag, tag t sits at object
  // tag_object[t]. Generators: t|u * r * v for untagged relations r, and
  // e * v for tagged relations e, all of length at most `bound`.
  inline EchelonSpan right_span(Graph const&             g,
                                std::vector<int> const&  tag_object,
                                std::vector<Poly> const& relations,
                                std::vector<Poly> const& tagged,
                                std::size_t              bound) {
    EchelonSpan span;
    std::vector<int> identity(g.objects);
    for (int o = 0; o < g.objects; ++o) {
      identity[o] = o;
    }
    for (auto const& e : tagged) {
      if (e.empty()) {
        continue;
      }
      auto d = degree(e);
      if (d > bound) {
        continue;
      }
      int tgt = g.end(e.begin()->first, tag_object);
      for (auto const& v : g.words_from(tgt, bound - d)) {
        Poly out;
        for (auto const& [k, c] : e) {
          Key t = k;
          t.word.insert(t.word.end(), v.begin(), v.end());
          add_to(out, t, c);
        }
        span.add(std::move(out));
      }
    }
    for (auto const& r : relations) {
      if (r.empty()) {
        continue;
      }
      auto d = degree(r);
      if (d > bound) {
        continue;
      }
      auto const& any = r.begin()->first;
      int         src = any.start;
      int         tgt = g.end(any, identity);
      for (int t = 0; t < int(tag_object.size()); ++t) {
        for (auto const& u : g.words_from(tag_object[t], bound - d)) {
          int at = u.empty() ? tag_object[t] : g.arrows[u.back()].second;
          if (at != src) {
            continue;
          }
          for (auto const& v : g.words_from(tgt, bound - d - u.size())) {
            span.add(multiply(u, t, r, v));
          }
        }
      }
    }
    return span;
  }

  // Irreducible iff no obstruction occurs as a contiguous subword (and no
  // tagged obstruction with the same start is a prefix). An empty
  // obstruction at an object forbids every path through that object.
  inline bool avoids(Graph const&             g,
                     Key const&               k,
                     int                      first_object,
                     std::vector<Key> const&  obstructions,
                     std::vector<Key> const&  tagged_prefixes = {}) {
    for (auto const& o : obstructions) {
      if (o.word.empty()) {
        if (first_object == o.start) {
          return false;
        }
        for (int a : k.word) {
          if (g.arrows[a].second == o.start) {
            return false;
          }
        }
        continue;
      }
      if (o.word.size() > k.word.size()) {
        continue;
      }
      for (std::size_t i = 0; i + o.word.size() <= k.word.size(); ++i) {
        if (std::equal(o.word.begin(), o.word.end(), k.word.begin() + i)) {
          return false;
        }
      }
    }
    for (auto const& t : tagged_prefixes) {
      if (t.start == k.start && t.word.size() <= k.word.size()
          && std::equal(t.word.begin(), t.word.end(), k.word.begin())) {
        return false;
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // KANCAT_TESTS_ORACLES_SPAN_ORACLE_HPP_
