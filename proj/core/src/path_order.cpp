#include "kancat/path_order.hpp"

#include <algorithm>

#include "kancat/error.hpp"

namespace kancat {

  PathOrder::PathOrder(std::shared_ptr<Quiver const>   quiver,
                       std::vector<std::string> const& precedence)
      : _quiver(std::move(quiver)) {
    auto const n = _quiver->num_arrows();
    _rank.assign(n, UINT32_MAX);
    for (auto const& name : precedence) {
      auto a = _quiver->arrow_id(name);
      if (_rank[a.value] != UINT32_MAX) {
        throw Error(ErrorKind::semantic_error,
                    "arrow '" + name + "' appears twice in the order");
      }
      _rank[a.value] = static_cast<std::uint32_t>(_precedence.size());
      _precedence.push_back(a);
    }
    if (_precedence.size() != n) {
      for (std::uint32_t i = 0; i < n; ++i) {
        if (_rank[i] == UINT32_MAX) {
          throw Error(ErrorKind::semantic_error,
                      "arrow '" + _quiver->arrow(ArrowId{i}).name
                          + "' is missing from the order");
        }
      }
    }
  }

  PathOrder::PathOrder(std::shared_ptr<Quiver const> quiver)
      : _quiver(std::move(quiver)) {
    auto const n = _quiver->num_arrows();
    for (std::uint32_t i = 0; i < n; ++i) {
      _precedence.push_back(ArrowId{i});
      _rank.push_back(i);
    }
  }

  std::strong_ordering PathOrder::compare(Path const& p, Path const& q) const {
    if (auto c = p.length() <=> q.length(); c != 0) {
      return c;
    }
    if (p.is_identity()) {
      return p.src() <=> q.src();
    }
    auto const a = p.arrows();
    auto const b = q.arrows();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        return _rank[a[i].value] <=> _rank[b[i].value];
      }
    }
    return std::strong_ordering::equal;
  }

  OrderPtr make_deglex(std::shared_ptr<Quiver const>   quiver,
                       std::vector<std::string> const& precedence) {
    return std::make_shared<PathOrder const>(std::move(quiver), precedence);
  }

  OrderPtr make_deglex(std::shared_ptr<Quiver const> quiver) {
    return std::make_shared<PathOrder const>(std::move(quiver));
  }

  std::vector<Path> enumerate_paths(PathOrder const&        order,
                                    std::optional<ObjectId> src,
                                    std::optional<ObjectId> tgt,
                                    std::size_t             max_len) {
    auto const&       q = order.quiver();
    std::vector<Path> frontier;
    if (src) {
      frontier.push_back(Path::identity(*src));
    } else {
      for (std::uint32_t i = 0; i < q.num_objects(); ++i) {
        frontier.push_back(Path::identity(ObjectId{i}));
      }
    }
    std::vector<Path> out;
    for (std::size_t len = 0; len <= max_len && !frontier.empty(); ++len) {
      for (auto const& p : frontier) {
        if (!tgt || p.tgt() == *tgt) {
          out.push_back(p);
        }
      }
      if (len == max_len) {
        break;
      }
      std::vector<Path> next;
      for (auto const& p : frontier) {
        for (auto a : q.out_arrows(p.tgt())) {
          next.push_back(compose(p, Path::of(q, a)));
        }
      }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [&order](Path const& x, Path const& y) {
      return order.less(x, y);
    });
    return out;
  }

}  // namespace kancat
