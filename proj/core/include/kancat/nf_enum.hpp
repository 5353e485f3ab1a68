#ifndef KANCAT_NF_ENUM_HPP_
#define KANCAT_NF_ENUM_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "kancat/mixed.hpp"
#include "kancat/rewrite.hpp"

namespace kancat {

  // Finite(count) or Infinite. When infinite, prefix * cycle^k * suffix is
  // irreducible for every k >= 0 (prefix starts at `tag` for tagged terms).
  struct Finiteness {
    bool                 finite = true;
    std::uint64_t        count  = 0;
    std::optional<Path>  cycle;
    std::optional<Path>  prefix;
    std::optional<Path>  suffix;
    std::optional<TagId> tag;
  };

  // The leading terms of a system as forbidden subpaths (untagged) and
  // forbidden prefixes (tagged), compiled into a deterministic automaton
  // whose states are (object, longest suffix of the input that is a proper
  // prefix of some obstruction, position in the tagged-prefix trie).
  class ObstructionSet {
   public:
    explicit ObstructionSet(RewriteSystem const& sys);
    explicit ObstructionSet(MixedSystem const& sys);

    bool is_irreducible(Path const& p) const;
    bool is_irreducible(TaggedTerm const& t) const;

    // Irreducible paths src -> tgt (nullopt = any) of length <= max_len, in
    // length-then-precedence order.
    std::vector<Path> paths(std::optional<ObjectId> src,
                            std::optional<ObjectId> tgt,
                            std::size_t             max_len) const;

    // Irreducible tagged terms (tag nullopt = all tags), ascending under the
    // tagged order.
    std::vector<TaggedTerm> tagged_terms(std::optional<TagId>    tag,
                                         std::optional<ObjectId> tgt,
                                         std::size_t             max_len) const;

    Finiteness finiteness(ObjectId src, ObjectId tgt) const;
    Finiteness tagged_finiteness(std::optional<TagId> tag, ObjectId tgt) const;

    // Length of the longest obstruction (tagged ones counted by their path).
    std::size_t longest() const noexcept {
      return _longest;
    }

   private:
    struct State {
      std::uint32_t object;
      std::int32_t  node;      // automaton node
      std::int32_t  tag_node;  // -1 once no tagged obstruction can match
      friend auto operator<=>(State const&, State const&) = default;
    };

    struct Node {
      std::map<std::uint32_t, std::int32_t> next;
      std::int32_t                          fail = 0;
      bool                                  dead = false;
    };

    struct TagNode {
      std::map<std::uint32_t, std::int32_t> next;
      bool                                  dead = false;
    };

    ObstructionSet(Quiver const& q, OrderPtr order);
    void add_word(Path const& p);
    void add_tagged(TagId tag, Path const& p);
    void build();

    std::int32_t          step_node(std::int32_t node, ArrowId a) const;
    std::optional<State>  step(State s, ArrowId a) const;
    std::optional<State>  start(ObjectId o) const;
    std::optional<State>  tagged_start(TagId t) const;
    std::vector<std::pair<State, std::optional<TagId>>> starts(
        std::optional<ObjectId> src,
        bool                    tagged,
        std::optional<TagId>    tag) const;
    Finiteness analyse(std::vector<std::pair<State, std::optional<TagId>>> const& from,
                       ObjectId tgt) const;

    Quiver const*               _quiver;
    OrderPtr                    _order;
    TaggedOrderPtr              _tagged_order;
    std::vector<Node>           _nodes;
    std::vector<TagNode>        _tag_nodes;
    std::vector<std::int32_t>   _tag_root;
    std::vector<bool>           _dead_object;
    std::size_t                 _longest = 0;
    mutable std::unordered_map<std::uint64_t, std::int32_t> _goto;
  };

  // Each throws NotComplete unless the system is Complete.
  std::vector<Path> irreducible_terms(RewriteSystem const&    sys,
                                      std::optional<ObjectId> src,
                                      std::optional<ObjectId> tgt,
                                      std::size_t             max_len);

  std::vector<TaggedTerm> irreducible_terms(MixedSystem const&      sys,
                                            std::optional<TagId>    tag,
                                            std::optional<ObjectId> tgt,
                                            std::size_t             max_len);

  Finiteness finiteness(RewriteSystem const& sys, ObjectId src, ObjectId tgt);

  struct HomSet {
    ObjectId          src;
    ObjectId          tgt;
    std::vector<Path> terms;  // exhaustive when finiteness.finite
    Finiteness        finiteness;
  };

  // Every ordered object pair, sources then targets in declaration order.
  // Finite hom-sets are listed in full; infinite ones up to max_len.
  std::vector<HomSet> hom_table(RewriteSystem const& sys, std::size_t max_len);

  inline constexpr std::uint64_t max_listed_terms = 1'000'000;

}  // namespace kancat

#endif  // KANCAT_NF_ENUM_HPP_
