#include "kancat/nf_enum.hpp"

#include <algorithm>
#include <deque>

namespace kancat {

  ObstructionSet::ObstructionSet(Quiver const& q, OrderPtr order)
      : _quiver(&q), _order(std::move(order)), _nodes(1), _dead_object(q.num_objects()) {}

  ObstructionSet::ObstructionSet(RewriteSystem const& sys)
      : ObstructionSet(sys.quiver(), sys.order_handle()) {
    for (auto const& r : sys.rules()) {
      add_word(r.lt());
    }
    build();
  }

  ObstructionSet::ObstructionSet(MixedSystem const& sys)
      : ObstructionSet(sys.delta(), sys.order().base_handle()) {
    _tagged_order = sys.order_handle();
    for (std::size_t t = 0; t < sys.order().num_tags(); ++t) {
      _tag_root.push_back(static_cast<std::int32_t>(_tag_nodes.size()));
      _tag_nodes.emplace_back();
    }
    for (auto const& r : sys.e_rules().rules()) {
      add_word(r.lt());
    }
    for (auto const& r : sys.eps_rules()) {
      add_tagged(r.lt().tag, r.lt().path);
    }
    build();
  }

  void ObstructionSet::add_word(Path const& p) {
    _longest = std::max(_longest, p.length());
    if (p.is_identity()) {
      _dead_object[p.src().value] = true;
      return;
    }
    std::int32_t node = 0;
    for (auto a : p.arrows()) {
      auto it = _nodes[node].next.find(a.value);
      if (it == _nodes[node].next.end()) {
        auto fresh = static_cast<std::int32_t>(_nodes.size());
        _nodes[node].next.emplace(a.value, fresh);
        _nodes.emplace_back();
        node = fresh;
      } else {
        node = it->second;
      }
    }
    _nodes[node].dead = true;
  }

  void ObstructionSet::add_tagged(TagId tag, Path const& p) {
    _longest          = std::max(_longest, p.length());
    std::int32_t node = _tag_root.at(tag.value);
    for (auto a : p.arrows()) {
      auto it = _tag_nodes[node].next.find(a.value);
      if (it == _tag_nodes[node].next.end()) {
        auto fresh = static_cast<std::int32_t>(_tag_nodes.size());
        _tag_nodes[node].next.emplace(a.value, fresh);
        _tag_nodes.emplace_back();
        node = fresh;
      } else {
        node = it->second;
      }
    }
    _tag_nodes[node].dead = true;
  }

  void ObstructionSet::build() {
    std::deque<std::int32_t> queue;
    for (auto const& [a, child] : _nodes[0].next) {
      _nodes[child].fail = 0;
      queue.push_back(child);
    }
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto const& [a, child] : _nodes[u].next) {
        std::int32_t f = _nodes[u].fail;
        while (f != 0 && !_nodes[f].next.contains(a)) {
          f = _nodes[f].fail;
        }
        auto it           = _nodes[f].next.find(a);
        _nodes[child].fail = (it != _nodes[f].next.end() && it->second != child) ? it->second : 0;
        _nodes[child].dead = _nodes[child].dead || _nodes[_nodes[child].fail].dead;
        queue.push_back(child);
      }
    }
  }

  std::int32_t ObstructionSet::step_node(std::int32_t node, ArrowId a) const {
    auto key = (std::uint64_t(std::uint32_t(node)) << 32) | a.value;
    if (auto it = _goto.find(key); it != _goto.end()) {
      return it->second;
    }
    std::int32_t n = node;
    while (n != 0 && !_nodes[n].next.contains(a.value)) {
      n = _nodes[n].fail;
    }
    auto         it     = _nodes[n].next.find(a.value);
    std::int32_t result = it == _nodes[n].next.end() ? 0 : it->second;
    _goto.emplace(key, result);
    return result;
  }

  auto ObstructionSet::step(State s, ArrowId a) const -> std::optional<State> {
    auto const tgt = _quiver->arrow(a).tgt;
    if (_dead_object[tgt.value]) {
      return std::nullopt;
    }
    auto node = step_node(s.node, a);
    if (_nodes[node].dead) {
      return std::nullopt;
    }
    std::int32_t tag_node = -1;
    if (s.tag_node >= 0) {
      auto const& next = _tag_nodes[s.tag_node].next;
      if (auto it = next.find(a.value); it != next.end()) {
        if (_tag_nodes[it->second].dead) {
          return std::nullopt;
        }
        tag_node = it->second;
      }
    }
    return State{tgt.value, node, tag_node};
  }

  auto ObstructionSet::start(ObjectId o) const -> std::optional<State> {
    if (_dead_object[o.value]) {
      return std::nullopt;
    }
    return State{o.value, 0, -1};
  }

  auto ObstructionSet::tagged_start(TagId t) const -> std::optional<State> {
    auto o    = _tagged_order->tag_object(t);
    auto root = _tag_root.at(t.value);
    if (_dead_object[o.value] || _tag_nodes[root].dead) {
      return std::nullopt;
    }
    return State{o.value, 0, root};
  }

  bool ObstructionSet::is_irreducible(Path const& p) const {
    auto s = start(p.src());
    for (std::size_t i = 0; s && i < p.length(); ++i) {
      s = step(*s, p[i]);
    }
    return s.has_value();
  }

  bool ObstructionSet::is_irreducible(TaggedTerm const& t) const {
    if (!_tagged_order) {
      throw Error(ErrorKind::type_mismatch, "untagged obstruction set");
    }
    auto s = tagged_start(t.tag);
    for (std::size_t i = 0; s && i < t.path.length(); ++i) {
      s = step(*s, t.path[i]);
    }
    return s.has_value();
  }

  auto ObstructionSet::starts(std::optional<ObjectId> src,
                              bool                    tagged,
                              std::optional<TagId>    tag) const
      -> std::vector<std::pair<State, std::optional<TagId>>> {
    std::vector<std::pair<State, std::optional<TagId>>> out;
    if (tagged) {
      if (!_tagged_order) {
        throw Error(ErrorKind::type_mismatch, "untagged obstruction set");
      }
      for (std::uint32_t t = 0; t < _tagged_order->num_tags(); ++t) {
        if (tag && tag->value != t) {
          continue;
        }
        if (auto s = tagged_start(TagId{t})) {
          out.emplace_back(*s, TagId{t});
        }
      }
      return out;
    }
    for (std::uint32_t o = 0; o < _quiver->num_objects(); ++o) {
      if (src && src->value != o) {
        continue;
      }
      if (auto s = start(ObjectId{o})) {
        out.emplace_back(*s, std::nullopt);
      }
    }
    return out;
  }

  namespace {

    template <typename State>
    struct Graph {
      std::vector<State>                                  states;
      std::vector<std::vector<std::pair<ArrowId, int>>>   edges;
      std::vector<int>                                    start_ids;
      std::vector<bool>                                   accepting;
      std::vector<bool>                                   live;
    };

  }  // namespace

  // Explores the states reachable from `from`; live = can still reach an
  // accepting state (object == tgt, or anything when tgt is nullopt).
  template <typename State, typename Step>
  static Graph<State> explore(Quiver const&                                            q,
                              std::vector<std::pair<State, std::optional<TagId>>> const& from,
                              std::optional<ObjectId>                                  tgt,
                              Step&&                                                   step) {
    Graph<State>       g;
    std::map<State, int> ids;
    std::deque<int>    queue;
    auto               intern = [&](State s) {
      auto [it, fresh] = ids.emplace(s, static_cast<int>(g.states.size()));
      if (fresh) {
        g.states.push_back(s);
        g.edges.emplace_back();
        queue.push_back(it->second);
      }
      return it->second;
    };
    for (auto const& [s, tag] : from) {
      g.start_ids.push_back(intern(s));
    }
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto a : q.out_arrows(ObjectId{g.states[u].object})) {
        if (auto next = step(g.states[u], a)) {
          int v = intern(*next);
          g.edges[u].emplace_back(a, v);
        }
      }
    }
    auto const n = g.states.size();
    g.accepting.resize(n);
    std::vector<std::vector<int>> reverse(n);
    for (std::size_t u = 0; u < n; ++u) {
      g.accepting[u] = !tgt || g.states[u].object == tgt->value;
      for (auto const& [a, v] : g.edges[u]) {
        reverse[v].push_back(static_cast<int>(u));
      }
    }
    g.live.assign(n, false);
    std::deque<int> back;
    for (std::size_t u = 0; u < n; ++u) {
      if (g.accepting[u]) {
        g.live[u] = true;
        back.push_back(static_cast<int>(u));
      }
    }
    while (!back.empty()) {
      int v = back.front();
      back.pop_front();
      for (int u : reverse[v]) {
        if (!g.live[u]) {
          g.live[u] = true;
          back.push_back(u);
        }
      }
    }
    return g;
  }

  Finiteness ObstructionSet::analyse(
      std::vector<std::pair<State, std::optional<TagId>>> const& from,
      ObjectId                                                   tgt) const {
    auto g = explore(*_quiver, from, tgt, [this](State s, ArrowId a) { return step(s, a); });
    auto const n = g.states.size();
    auto const& q = *_quiver;

    auto path_from = [&](ObjectId o, std::vector<ArrowId> const& arrows) {
      return arrows.empty() ? Path::identity(o) : Path::of(q, arrows);
    };

    // Depth-first search for a cycle among live states.
    std::vector<int> colour(n, 0);
    for (std::size_t si = 0; si < g.start_ids.size(); ++si) {
      int root = g.start_ids[si];
      if (!g.live[root] || colour[root] != 0) {
        continue;
      }
      struct Frame {
        int         node;
        std::size_t edge;
        ArrowId     via;
      };
      std::vector<Frame> stack{{root, 0, ArrowId{}}};
      colour[root] = 1;
      while (!stack.empty()) {
        auto& top = stack.back();
        if (top.edge == g.edges[top.node].size()) {
          colour[top.node] = 2;
          stack.pop_back();
          continue;
        }
        auto [a, v] = g.edges[top.node][top.edge++];
        if (!g.live[v]) {
          continue;
        }
        if (colour[v] == 0) {
          colour[v] = 1;
          stack.push_back({v, 0, a});
          continue;
        }
        if (colour[v] != 1) {
          continue;
        }
        // Back edge: the stack from v to the top, then a, is a cycle.
        std::size_t at = 0;
        while (stack[at].node != v) {
          ++at;
        }
        std::vector<ArrowId> prefix, cycle, suffix;
        for (std::size_t k = 1; k <= at; ++k) {
          prefix.push_back(stack[k].via);
        }
        for (std::size_t k = at + 1; k < stack.size(); ++k) {
          cycle.push_back(stack[k].via);
        }
        cycle.push_back(a);
        // Shortest way from v to acceptance.
        std::vector<int>                          prev(n, -2);
        std::vector<ArrowId>                      via(n);
        std::deque<int>                           queue{v};
        prev[v] = -1;
        int hit = -1;
        while (!queue.empty()) {
          int u = queue.front();
          queue.pop_front();
          if (g.accepting[u]) {
            hit = u;
            break;
          }
          for (auto const& [b, w] : g.edges[u]) {
            if (g.live[w] && prev[w] == -2) {
              prev[w] = u;
              via[w]  = b;
              queue.push_back(w);
            }
          }
        }
        for (int u = hit; u != v; u = prev[u]) {
          suffix.push_back(via[u]);
        }
        std::reverse(suffix.begin(), suffix.end());
        ObjectId start_obj{g.states[root].object};
        ObjectId cycle_obj{g.states[v].object};
        Finiteness out;
        out.finite = false;
        out.prefix = path_from(start_obj, prefix);
        out.cycle  = Path::of(q, cycle);
        out.suffix = path_from(cycle_obj, suffix);
        out.tag    = from[si].second;
        return out;
      }
    }

    // Acyclic: count accepted walks.
    std::vector<std::optional<std::uint64_t>> memo(n);
    auto count = [&](auto&& self, int u) -> std::uint64_t {
      if (memo[u]) {
        return *memo[u];
      }
      std::uint64_t total = g.accepting[u] ? 1 : 0;
      for (auto const& [a, v] : g.edges[u]) {
        if (!g.live[v]) {
          continue;
        }
        if (__builtin_add_overflow(total, self(self, v), &total)) {
          throw Error(ErrorKind::internal_limit, "hom-set size overflows");
        }
      }
      memo[u] = total;
      return total;
    };
    Finiteness out;
    for (int root : g.start_ids) {
      if (g.live[root]
          && __builtin_add_overflow(out.count, count(count, root), &out.count)) {
        throw Error(ErrorKind::internal_limit, "hom-set size overflows");
      }
    }
    return out;
  }

  Finiteness ObstructionSet::finiteness(ObjectId src, ObjectId tgt) const {
    return analyse(starts(src, false, std::nullopt), tgt);
  }

  Finiteness ObstructionSet::tagged_finiteness(std::optional<TagId> tag,
                                               ObjectId             tgt) const {
    return analyse(starts(std::nullopt, true, tag), tgt);
  }

  namespace {

    // Level-by-level walk over live states, collecting accepted words.
    template <typename State, typename Emit>
    void walk(Quiver const&           q,
              Graph<State> const&     g,
              std::size_t             max_len,
              Emit&&                  emit) {
      struct Item {
        int                  node;
        std::size_t          start;
        std::vector<ArrowId> arrows;
      };
      std::vector<Item> level;
      for (std::size_t i = 0; i < g.start_ids.size(); ++i) {
        if (g.live[g.start_ids[i]]) {
          level.push_back(Item{g.start_ids[i], i, {}});
        }
      }
      for (std::size_t len = 0; !level.empty(); ++len) {
        for (auto const& it : level) {
          if (g.accepting[it.node]) {
            emit(it.start, it.arrows);
          }
        }
        if (len == max_len) {
          break;
        }
        std::vector<Item> next;
        for (auto const& it : level) {
          for (auto const& [a, v] : g.edges[it.node]) {
            if (g.live[v]) {
              auto arrows = it.arrows;
              arrows.push_back(a);
              next.push_back(Item{v, it.start, std::move(arrows)});
            }
          }
        }
        level = std::move(next);
        (void) q;
      }
    }

  }  // namespace

  std::vector<Path> ObstructionSet::paths(std::optional<ObjectId> src,
                                          std::optional<ObjectId> tgt,
                                          std::size_t             max_len) const {
    auto from = starts(src, false, std::nullopt);
    auto g = explore(*_quiver, from, tgt, [this](State s, ArrowId a) { return step(s, a); });
    std::vector<Path> out;
    walk(*_quiver, g, max_len, [&](std::size_t start, std::vector<ArrowId> const& arrows) {
      out.push_back(arrows.empty() ? Path::identity(ObjectId{from[start].first.object})
                                   : Path::of(*_quiver, arrows));
    });
    std::sort(out.begin(), out.end(), [this](Path const& a, Path const& b) {
      return _order->less(a, b);
    });
    return out;
  }

  std::vector<TaggedTerm> ObstructionSet::tagged_terms(std::optional<TagId>    tag,
                                                       std::optional<ObjectId> tgt,
                                                       std::size_t max_len) const {
    auto from = starts(std::nullopt, true, tag);
    auto g = explore(*_quiver, from, tgt, [this](State s, ArrowId a) { return step(s, a); });
    std::vector<TaggedTerm> out;
    walk(*_quiver, g, max_len, [&](std::size_t start, std::vector<ArrowId> const& arrows) {
      auto t = *from[start].second;
      out.push_back(TaggedTerm{
          t,
          arrows.empty() ? Path::identity(_tagged_order->tag_object(t))
                         : Path::of(*_quiver, arrows)});
    });
    std::sort(out.begin(), out.end(), [this](TaggedTerm const& a, TaggedTerm const& b) {
      return _tagged_order->compare(a, b) < 0;
    });
    return out;
  }

  namespace {
    template <typename System>
    void require_complete(System const& sys) {
      if (!sys.is_complete()) {
        throw Error(ErrorKind::not_complete,
                    "normal forms are only enumerable for a complete system");
      }
    }
  }  // namespace

  std::vector<Path> irreducible_terms(RewriteSystem const&    sys,
                                      std::optional<ObjectId> src,
                                      std::optional<ObjectId> tgt,
                                      std::size_t             max_len) {
    require_complete(sys);
    return ObstructionSet(sys).paths(src, tgt, max_len);
  }

  std::vector<TaggedTerm> irreducible_terms(MixedSystem const&      sys,
                                            std::optional<TagId>    tag,
                                            std::optional<ObjectId> tgt,
                                            std::size_t             max_len) {
    require_complete(sys);
    return ObstructionSet(sys).tagged_terms(tag, tgt, max_len);
  }

  Finiteness finiteness(RewriteSystem const& sys, ObjectId src, ObjectId tgt) {
    require_complete(sys);
    return ObstructionSet(sys).finiteness(src, tgt);
  }

  std::vector<HomSet> hom_table(RewriteSystem const& sys, std::size_t max_len) {
    require_complete(sys);
    ObstructionSet      obs(sys);
    auto const          n = sys.quiver().num_objects();
    std::vector<HomSet> out;
    for (std::uint32_t s = 0; s < n; ++s) {
      for (std::uint32_t t = 0; t < n; ++t) {
        HomSet h{ObjectId{s}, ObjectId{t}, {}, obs.finiteness(ObjectId{s}, ObjectId{t})};
        if (h.finiteness.finite) {
          if (h.finiteness.count > max_listed_terms) {
            throw Error(ErrorKind::internal_limit,
                        "finite hom-set too large to list: "
                            + std::to_string(h.finiteness.count) + " terms");
          }
          // An accepted walk in the acyclic live part has fewer arrows than
          // it has terms.
          h.terms = obs.paths(h.src, h.tgt, h.finiteness.count);
        } else {
          h.terms = obs.paths(h.src, h.tgt, max_len);
        }
        out.push_back(std::move(h));
      }
    }
    return out;
  }

}  // namespace kancat
