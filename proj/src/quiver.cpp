#include "hhwb/quiver.hpp"

#include <algorithm>

#include "hhwb/error.hpp"

namespace hhwb {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vertices_[i] == vertices_[j]) {
        throw PreconditionError("duplicate vertex id \"" + vertices_[i] + "\"");
      }
    }
  }
  for (const auto& a : arrows) {
    if (has_arrow(a.id)) throw PreconditionError("duplicate arrow id \"" + a.id + "\"");
    if (!has_vertex(a.source) || !has_vertex(a.target)) {
      throw PreconditionError("arrow \"" + a.id + "\" has an undeclared endpoint");
    }
    arrows_.push_back(Arrow{a.id, vertex_index(a.source), vertex_index(a.target)});
  }
}

std::size_t Quiver::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw PreconditionError("unknown vertex \"" + id + "\"");
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].id == id) return i;
  }
  throw PreconditionError("unknown arrow \"" + id + "\"");
}

bool Quiver::has_arrow(const std::string& id) const {
  return std::any_of(arrows_.begin(), arrows_.end(),
                     [&](const Arrow& a) { return a.id == id; });
}

bool Quiver::has_vertex(const std::string& id) const {
  return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

std::vector<ArrowSpec> Quiver::arrow_specs() const {
  std::vector<ArrowSpec> out;
  for (const auto& a : arrows_) {
    out.push_back({a.id, vertices_[a.source], vertices_[a.target]});
  }
  return out;
}

Quiver Quiver::with_arrow(const ArrowSpec& a) const {
  auto specs = arrow_specs();
  specs.push_back(a);
  return Quiver(vertices_, specs);
}

std::strong_ordering Path::operator<=>(const Path& o) const {
  if (auto c = length() <=> o.length(); c != 0) return c;
  if (arrows.empty()) return start <=> o.start;
  return arrows <=> o.arrows;
}

Path trivial_path(std::size_t vertex) { return Path{vertex, {}}; }

Path make_path(const Quiver& q, std::vector<std::uint32_t> arrows) {
  if (arrows.empty()) throw PreconditionError("make_path: empty arrow list");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i] >= q.arrows().size()) throw PreconditionError("arrow index out of range");
    if (i > 0 && q.arrow(arrows[i - 1]).target != q.arrow(arrows[i]).source) {
      throw PreconditionError("arrows " + q.arrow(arrows[i - 1]).id + " and " +
                              q.arrow(arrows[i]).id + " do not compose");
    }
  }
  Path p{q.arrow(arrows.front()).source, std::move(arrows)};
  return p;
}

Path path_from_ids(const Quiver& q, const std::vector<std::string>& arrow_ids) {
  std::vector<std::uint32_t> idx;
  for (const auto& id : arrow_ids) idx.push_back(static_cast<std::uint32_t>(q.arrow_index(id)));
  return make_path(q, std::move(idx));
}

std::size_t path_source(const Quiver&, const Path& p) { return p.start; }

std::size_t path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.start : q.arrow(p.arrows.back()).target;
}

std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices()[p.start];
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '*';
    s += q.arrow(p.arrows[i]).id;
  }
  return s;
}

Path splice(const Quiver& q, const std::vector<std::uint32_t>& u, const Path& p,
            const std::vector<std::uint32_t>& w) {
  Path r;
  r.arrows.reserve(u.size() + p.arrows.size() + w.size());
  r.arrows.insert(r.arrows.end(), u.begin(), u.end());
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  r.arrows.insert(r.arrows.end(), w.begin(), w.end());
  r.start = u.empty() ? p.start : q.arrow(u.front()).source;
  return r;
}

bool composable(const Quiver& q, const Path& a, const Path& b) {
  return path_target(q, a) == b.start;
}

Path concat(const Quiver& q, const Path& a, const Path& b) {
  if (!composable(q, a, b)) throw PreconditionError("concat: paths do not compose");
  Path r{a.start, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

}  // namespace hhwb
