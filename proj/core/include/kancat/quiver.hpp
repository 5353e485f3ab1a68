#ifndef KANCAT_QUIVER_HPP_
#define KANCAT_QUIVER_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kancat {

  struct ObjectId {
    std::uint32_t value = 0;
    friend auto operator<=>(ObjectId, ObjectId) = default;
  };

  struct ArrowId {
    std::uint32_t value = 0;
    friend auto operator<=>(ArrowId, ArrowId) = default;
  };

  struct Arrow {
    std::string name;
    ObjectId    src;
    ObjectId    tgt;
  };

  // Arrow declaration by object names, as it appears in input.
  struct ArrowSpec {
    std::string name;
    std::string src;
    std::string tgt;
  };

  // A finite directed multigraph. Object and arrow names share one namespace.
  // Declaration order of objects is significant: it ranks identity paths.
  class Quiver {
   public:
    Quiver() = default;

    // Throws DuplicateName or DanglingEndpoint.
    static Quiver make(std::vector<std::string> const& objects,
                       std::vector<ArrowSpec> const&   arrows);

    std::size_t num_objects() const noexcept {
      return _objects.size();
    }
    std::size_t num_arrows() const noexcept {
      return _arrows.size();
    }

    std::string const& object_name(ObjectId id) const {
      return _objects.at(id.value);
    }
    Arrow const& arrow(ArrowId id) const {
      return _arrows.at(id.value);
    }
    std::vector<std::string> const& object_names() const noexcept {
      return _objects;
    }
    std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }

    std::optional<ObjectId> find_object(std::string_view name) const;
    std::optional<ArrowId>  find_arrow(std::string_view name) const;

    // As find_*, but throws UnknownName.
    ObjectId object(std::string_view name) const;
    ArrowId  arrow_id(std::string_view name) const;

    // Arrows leaving `o`, in declaration order.
    std::vector<ArrowId> const& out_arrows(ObjectId o) const {
      return _out.at(o.value);
    }

   private:
    std::vector<std::string>                      _objects;
    std::vector<Arrow>                            _arrows;
    std::vector<std::vector<ArrowId>>             _out;
    std::unordered_map<std::string, std::uint32_t> _object_index;
    std::unordered_map<std::string, std::uint32_t> _arrow_index;
  };

  // A composable sequence of arrows read left to right: "ab" is a followed by
  // b. The empty sequence is the identity at src() == tgt().
  class Path {
   public:
    Path() = default;

    static Path identity(ObjectId o) {
      return Path(o, o, {});
    }
    static Path of(Quiver const& q, ArrowId a);
    // Throws NotComposable when consecutive arrows do not meet.
    static Path of(Quiver const& q, std::span<ArrowId const> arrows);

    ObjectId src() const noexcept {
      return _src;
    }
    ObjectId tgt() const noexcept {
      return _tgt;
    }
    std::size_t length() const noexcept {
      return _arrows.size();
    }
    bool is_identity() const noexcept {
      return _arrows.empty();
    }
    std::span<ArrowId const> arrows() const noexcept {
      return _arrows;
    }
    ArrowId operator[](std::size_t i) const {
      return _arrows[i];
    }

    // Object sitting before arrow `position` (position == length() gives tgt).
    ObjectId object_at(Quiver const& q, std::size_t position) const;

    // The arrows in [from, to); an empty slice is the identity at the
    // object where it sits.
    Path subpath(Quiver const& q, std::size_t from, std::size_t to) const;

    friend bool operator==(Path const&, Path const&) = default;

    friend Path compose(Path const& p, Path const& q);

   private:
    Path(ObjectId src, ObjectId tgt, std::vector<ArrowId> arrows)
        : _src(src), _tgt(tgt), _arrows(std::move(arrows)) {}

    ObjectId             _src;
    ObjectId             _tgt;
    std::vector<ArrowId> _arrows;
  };

  // p followed by q. Throws NotComposable unless tgt(p) == src(q).
  Path compose(Path const& p, Path const& q);

  // Leftmost position >= from at which `pattern` occurs contiguously in
  // `text`. An identity pattern occurs wherever the text passes its object.
  std::optional<std::size_t> find_subpath(Quiver const& q,
                                          Path const&   pattern,
                                          Path const&   text,
                                          std::size_t   from = 0);

  std::string to_string(Quiver const& q, Path const& p);

}  // namespace kancat

template <>
struct std::hash<kancat::Path> {
  std::size_t operator()(kancat::Path const& p) const noexcept {
    std::size_t h = (std::size_t(p.src().value) << 32) ^ p.tgt().value;
    for (auto a : p.arrows()) {
      h = h * 0x100000001b3ULL ^ a.value;
    }
    return h;
  }
};

#endif  // KANCAT_QUIVER_HPP_
