#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hhwb/field.hpp"

namespace hhwb {

struct ArrowSpec {
  std::string id;
  std::string source;
  std::string target;
};

struct Arrow {
  std::string id;
  std::size_t source;
  std::size_t target;
  bool is_loop() const { return source == target; }
};

/// Finite quiver. Arrow order is the declaration order; it drives the
/// length-lexicographic path order.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  std::size_t vertex_index(const std::string& id) const;
  std::size_t arrow_index(const std::string& id) const;
  bool has_arrow(const std::string& id) const;
  bool has_vertex(const std::string& id) const;
  std::vector<ArrowSpec> arrow_specs() const;
  /// Copy with one more arrow appended.
  Quiver with_arrow(const ArrowSpec& a) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// A path read left to right: arrows[0] first. A length-0 path is the
/// trivial path at `start`.
struct Path {
  std::size_t start = 0;
  std::vector<std::uint32_t> arrows;

  std::size_t length() const { return arrows.size(); }
  /// Length first, then lexicographic on arrow indices; trivial paths by
  /// vertex index.
  std::strong_ordering operator<=>(const Path& o) const;
  bool operator==(const Path& o) const = default;
};

Path trivial_path(std::size_t vertex);
/// Throws PreconditionError unless consecutive arrows compose.
Path make_path(const Quiver& q, std::vector<std::uint32_t> arrows);
Path path_from_ids(const Quiver& q, const std::vector<std::string>& arrow_ids);
std::size_t path_source(const Quiver& q, const Path& p);
std::size_t path_target(const Quiver& q, const Path& p);
/// "e_<vertex>" for trivial paths, arrow ids joined by '*' otherwise.
std::string path_label(const Quiver& q, const Path& p);
/// u . p . w, where u and w are arrow sequences. Caller guarantees validity.
Path splice(const Quiver& q, const std::vector<std::uint32_t>& u, const Path& p,
            const std::vector<std::uint32_t>& w);
/// p . q if they compose (target(p) == source(q)).
bool composable(const Quiver& q, const Path& a, const Path& b);
Path concat(const Quiver& q, const Path& a, const Path& b);

/// Formal linear combination of paths with nonzero coefficients.
using LinComb = std::map<Path, Scalar>;

}  // namespace hhwb
