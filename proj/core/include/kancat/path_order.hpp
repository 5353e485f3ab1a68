#ifndef KANCAT_PATH_ORDER_HPP_
#define KANCAT_PATH_ORDER_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kancat/quiver.hpp"

namespace kancat {

  enum class OrderKind { deglex };

  // An admissible well-ordering on all paths of a quiver.
  //
  // deglex: shorter paths are smaller; paths of equal length compare
  // lexicographically by arrow precedence; identity paths compare by object
  // declaration order. Compatible with concatenation on both sides.
  class PathOrder {
   public:
    // `precedence` lists every arrow exactly once, lowest first.
    PathOrder(std::shared_ptr<Quiver const> quiver,
              std::vector<std::string> const& precedence);

    // Precedence = arrow declaration order.
    explicit PathOrder(std::shared_ptr<Quiver const> quiver);

    OrderKind kind() const noexcept {
      return OrderKind::deglex;
    }

    Quiver const& quiver() const noexcept {
      return *_quiver;
    }
    std::shared_ptr<Quiver const> const& quiver_ptr() const noexcept {
      return _quiver;
    }

    // Arrows lowest first.
    std::vector<ArrowId> const& precedence() const noexcept {
      return _precedence;
    }
    std::uint32_t rank(ArrowId a) const {
      return _rank[a.value];
    }

    std::strong_ordering compare(Path const& p, Path const& q) const;

    bool less(Path const& p, Path const& q) const {
      return compare(p, q) < 0;
    }

   private:
    std::shared_ptr<Quiver const> _quiver;
    std::vector<ArrowId>          _precedence;
    std::vector<std::uint32_t>    _rank;
  };

  using OrderPtr = std::shared_ptr<PathOrder const>;

  OrderPtr make_deglex(std::shared_ptr<Quiver const> quiver,
                       std::vector<std::string> const& precedence);
  OrderPtr make_deglex(std::shared_ptr<Quiver const> quiver);

  // All paths with the given endpoints (nullopt = any) of length <= max_len,
  // ascending under `order`.
  std::vector<Path> enumerate_paths(PathOrder const&        order,
                                    std::optional<ObjectId> src,
                                    std::optional<ObjectId> tgt,
                                    std::size_t             max_len);

}  // namespace kancat

#endif  // KANCAT_PATH_ORDER_HPP_
