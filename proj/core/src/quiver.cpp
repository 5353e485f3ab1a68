#include "kancat/quiver.hpp"

#include <algorithm>

#include "kancat/error.hpp"

namespace kancat {

  Quiver Quiver::make(std::vector<std::string> const& objects,
                      std::vector<ArrowSpec> const&   arrows) {
    Quiver q;
    for (auto const& name : objects) {
      if (name.empty()) {
        throw Error(ErrorKind::semantic_error, "empty object name");
      }
      if (!q._object_index.emplace(name, q._objects.size()).second) {
        throw Error(ErrorKind::duplicate_name,
                    "object '" + name + "' declared twice");
      }
      q._objects.push_back(name);
    }
    q._out.resize(q._objects.size());
    for (auto const& spec : arrows) {
      if (spec.name.empty()) {
        throw Error(ErrorKind::semantic_error, "empty arrow name");
      }
      if (q._object_index.contains(spec.name)
          || q._arrow_index.contains(spec.name)) {
        throw Error(ErrorKind::duplicate_name,
                    "name '" + spec.name + "' declared twice");
      }
      auto src = q.find_object(spec.src);
      auto tgt = q.find_object(spec.tgt);
      if (!src || !tgt) {
        throw Error(ErrorKind::dangling_endpoint,
                    "arrow '" + spec.name + "' refers to undeclared object '"
                        + (src ? spec.tgt : spec.src) + "'");
      }
      ArrowId id{static_cast<std::uint32_t>(q._arrows.size())};
      q._arrow_index.emplace(spec.name, id.value);
      q._arrows.push_back(Arrow{spec.name, *src, *tgt});
      q._out[src->value].push_back(id);
    }
    return q;
  }

  std::optional<ObjectId> Quiver::find_object(std::string_view name) const {
    auto it = _object_index.find(std::string(name));
    if (it == _object_index.end()) {
      return std::nullopt;
    }
    return ObjectId{it->second};
  }

  std::optional<ArrowId> Quiver::find_arrow(std::string_view name) const {
    auto it = _arrow_index.find(std::string(name));
    if (it == _arrow_index.end()) {
      return std::nullopt;
    }
    return ArrowId{it->second};
  }

  ObjectId Quiver::object(std::string_view name) const {
    if (auto o = find_object(name)) {
      return *o;
    }
    throw Error(ErrorKind::unknown_name,
                "unknown object '" + std::string(name) + "'");
  }

  ArrowId Quiver::arrow_id(std::string_view name) const {
    if (auto a = find_arrow(name)) {
      return *a;
    }
    throw Error(ErrorKind::unknown_name,
                "unknown arrow '" + std::string(name) + "'");
  }

  Path Path::of(Quiver const& q, ArrowId a) {
    auto const& arr = q.arrow(a);
    return Path(arr.src, arr.tgt, {a});
  }

  Path Path::of(Quiver const& q, std::span<ArrowId const> arrows) {
    if (arrows.empty()) {
      throw Error(ErrorKind::semantic_error,
                  "an identity path needs its object; use Path::identity");
    }
    for (std::size_t i = 1; i < arrows.size(); ++i) {
      if (q.arrow(arrows[i - 1]).tgt != q.arrow(arrows[i]).src) {
        throw Error(ErrorKind::not_composable,
                    "'" + q.arrow(arrows[i - 1]).name + "' cannot be followed by '"
                        + q.arrow(arrows[i]).name + "'");
      }
    }
    return Path(q.arrow(arrows.front()).src,
                q.arrow(arrows.back()).tgt,
                std::vector<ArrowId>(arrows.begin(), arrows.end()));
  }

  ObjectId Path::object_at(Quiver const& q, std::size_t position) const {
    if (position == 0) {
      return _src;
    }
    return q.arrow(_arrows.at(position - 1)).tgt;
  }

  Path Path::subpath(Quiver const& q, std::size_t from, std::size_t to) const {
    if (from == to) {
      return identity(object_at(q, from));
    }
    return Path(object_at(q, from),
                object_at(q, to),
                std::vector<ArrowId>(_arrows.begin() + from, _arrows.begin() + to));
  }

  Path compose(Path const& p, Path const& q) {
    if (p._tgt != q._src) {
      throw Error(ErrorKind::not_composable, "paths do not meet");
    }
    std::vector<ArrowId> arrows;
    arrows.reserve(p._arrows.size() + q._arrows.size());
    arrows.insert(arrows.end(), p._arrows.begin(), p._arrows.end());
    arrows.insert(arrows.end(), q._arrows.begin(), q._arrows.end());
    return Path(p._src, q._tgt, std::move(arrows));
  }

  std::optional<std::size_t> find_subpath(Quiver const& q,
                                          Path const&   pattern,
                                          Path const&   text,
                                          std::size_t   from) {
    auto const n = pattern.length();
    auto const m = text.length();
    if (n > m) {
      return std::nullopt;
    }
    if (n == 0) {
      for (std::size_t i = from; i <= m; ++i) {
        if (text.object_at(q, i) == pattern.src()) {
          return i;
        }
      }
      return std::nullopt;
    }
    auto const t = text.arrows();
    auto const p = pattern.arrows();
    for (std::size_t i = from; i + n <= m; ++i) {
      if (std::equal(p.begin(), p.end(), t.begin() + i)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::string to_string(Quiver const& q, Path const& p) {
    if (p.is_identity()) {
      return "1(" + q.object_name(p.src()) + ")";
    }
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (i != 0) {
        out += '*';
      }
      out += q.arrow(p[i]).name;
    }
    return out;
  }

}  // namespace kancat
