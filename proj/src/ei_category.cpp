#include "hhwb/ei_category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hhwb/constructors.hpp"
#include "hhwb/error.hpp"

namespace hhwb {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<std::string> identities,
                               const std::vector<Composition>& table)
    : objects_(std::move(objects)) {
  std::map<std::string, std::size_t> obj, mor;
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!obj.emplace(objects_[i], i).second) {
      throw PreconditionError("duplicate object " + objects_[i]);
    }
  }
  for (std::size_t m = 0; m < morphisms.size(); ++m) {
    const auto& x = morphisms[m];
    if (!mor.emplace(x.id, m).second) throw PreconditionError("duplicate morphism " + x.id);
    auto s = obj.find(x.source), t = obj.find(x.target);
    if (s == obj.end() || t == obj.end()) {
      throw PreconditionError("morphism " + x.id + " has an undeclared endpoint");
    }
    ids_.push_back(x.id);
    source_.push_back(s->second);
    target_.push_back(t->second);
  }
  if (identities.size() != objects_.size()) {
    throw PreconditionError("one identity per object is required");
  }
  for (std::size_t i = 0; i < identities.size(); ++i) {
    auto it = mor.find(identities[i]);
    if (it == mor.end()) throw PreconditionError("unknown identity morphism " + identities[i]);
    if (source_[it->second] != i || target_[it->second] != i) {
      throw PreconditionError("identity " + identities[i] + " is not an endomorphism of " +
                              objects_[i]);
    }
    identity_.push_back(it->second);
  }
  auto lookup = [&](const std::string& id) {
    auto it = mor.find(id);
    if (it == mor.end()) throw PreconditionError("unknown morphism " + id + " in composition table");
    return it->second;
  };
  for (const auto& c : table) {
    std::size_t g = lookup(c.g), f = lookup(c.f), h = lookup(c.result);
    if (target_[f] != source_[g]) {
      throw PreconditionError("composition " + c.g + " o " + c.f + " is not composable");
    }
    if (source_[h] != source_[f] || target_[h] != target_[g]) {
      throw PreconditionError("composition " + c.g + " o " + c.f + " = " + c.result +
                              " has wrong endpoints");
    }
    auto [it, inserted] = table_.emplace(std::make_pair(g, f), h);
    if (!inserted && it->second != h) {
      throw PreconditionError("composition " + c.g + " o " + c.f + " is defined twice");
    }
  }
  for (std::size_t m = 0; m < ids_.size(); ++m) {
    for (auto [key, val] : {std::make_pair(std::make_pair(identity_[target_[m]], m), m),
                            std::make_pair(std::make_pair(m, identity_[source_[m]]), m)}) {
      auto [it, inserted] = table_.emplace(key, val);
      if (!inserted && it->second != val) {
        throw PreconditionError("identity law fails for " + ids_[m]);
      }
    }
  }
  for (std::size_t g = 0; g < ids_.size(); ++g) {
    for (std::size_t f = 0; f < ids_.size(); ++f) {
      if (target_[f] == source_[g] && !table_.count({g, f})) {
        throw PreconditionError("composition " + ids_[g] + " o " + ids_[f] + " is missing");
      }
    }
  }
  for (std::size_t h = 0; h < ids_.size(); ++h) {
    for (std::size_t g = 0; g < ids_.size(); ++g) {
      if (target_[g] != source_[h]) continue;
      for (std::size_t f = 0; f < ids_.size(); ++f) {
        if (target_[f] != source_[g]) continue;
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
          throw PreconditionError("composition is not associative at (" + ids_[h] + ", " +
                                  ids_[g] + ", " + ids_[f] + ")");
        }
      }
    }
  }
}

std::size_t FiniteCategory::compose(std::size_t g, std::size_t f) const {
  return table_.at({g, f});
}

ValidationReport validate_ei(const FiniteCategory& c) {
  ValidationReport rep;
  ConditionCheck ei{"EI", true, {}, ""};
  for (std::size_t m = 0; m < c.num_morphisms(); ++m) {
    if (!c.is_endomorphism(m)) continue;
    std::size_t x = c.source(m);
    bool invertible = false;
    for (std::size_t g = 0; g < c.num_morphisms() && !invertible; ++g) {
      if (c.source(g) != x || c.target(g) != x) continue;
      invertible = c.compose(g, m) == c.identity(x) && c.compose(m, g) == c.identity(x);
    }
    if (!invertible) {
      ei.passed = false;
      ei.witnesses.push_back(c.morphism_id(m));
      if (ei.detail.empty()) {
        ei.detail = "endomorphism " + c.morphism_id(m) + " of " + c.objects()[x] +
                    " is not invertible";
      }
    }
  }
  rep.checks.push_back(ei);

  ConditionCheck sk{"skeletal", true, {}, ""};
  const std::size_t n = c.objects().size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      bool iso = false;
      for (std::size_t f = 0; f < c.num_morphisms() && !iso; ++f) {
        if (c.source(f) != x || c.target(f) != y) continue;
        for (std::size_t g = 0; g < c.num_morphisms() && !iso; ++g) {
          if (c.source(g) != y || c.target(g) != x) continue;
          iso = c.compose(g, f) == c.identity(x) && c.compose(f, g) == c.identity(y);
        }
      }
      if (iso) {
        sk.passed = false;
        sk.witnesses.push_back(c.objects()[x] + "~" + c.objects()[y]);
        if (sk.detail.empty()) {
          sk.detail = "objects " + c.objects()[x] + " and " + c.objects()[y] + " are isomorphic";
        }
      }
    }
  }
  rep.checks.push_back(sk);
  return rep;
}

FdAlgebra ei_category_algebra(const FiniteCategory& c, const FieldSpec& field) {
  auto rep = validate_ei(c);
  if (!rep.checks[0].passed) throw PreconditionError("category is not EI: " + rep.checks[0].detail);
  const std::size_t d = c.num_morphisms();
  FdAlgebra::Table t;
  t.field = field;
  for (std::size_t m = 0; m < d; ++m) t.labels.push_back(c.morphism_id(m));
  t.products.resize(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if (c.source(a) == c.target(b)) {
        t.products[a * d + b] = {{static_cast<std::uint32_t>(c.compose(a, b)), Scalar(1)}};
      }
    }
  }
  t.unit = field.zeros(d);
  for (std::size_t x = 0; x < c.objects().size(); ++x) {
    t.unit[c.identity(x)] = 1;
    t.idempotents.push_back(field.unit_vector(d, c.identity(x)));
  }
  // For a skeletal EI category whose automorphism groups have invertible
  // order, the radical is spanned by the non-endomorphisms.
  bool designate = rep.passed();
  if (designate && !field.is_rational()) {
    for (std::size_t x = 0; x < c.objects().size(); ++x) {
      std::size_t order = 0;
      for (std::size_t m = 0; m < d; ++m) order += c.source(m) == x && c.target(m) == x;
      if (order % field.characteristic() == 0) designate = false;
    }
  }
  if (designate) {
    std::vector<Vector> rad;
    for (std::size_t m = 0; m < d; ++m) {
      if (!c.is_endomorphism(m)) rad.push_back(field.unit_vector(d, m));
    }
    t.radical = rad;
  }
  return FdAlgebra::make(std::move(t));
}

std::vector<std::size_t> topological_order(std::size_t n,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                           std::vector<std::size_t>* cycle) {
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    out[u].push_back(v);
    ++indeg[v];
  }
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (auto w : out[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (order.size() != n) {
    if (cycle) {
      cycle->clear();
      for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] > 0) cycle->push_back(v);
    }
    return {};
  }
  return order;
}

EiTriangularForm ei_triangular_form(const FiniteCategory& c, const FieldSpec& field) {
  auto rep = validate_ei(c);
  if (!rep.checks[0].passed) throw PreconditionError("category is not EI: " + rep.checks[0].detail);
  if (!rep.checks[1].passed) {
    throw PreconditionError("category is not skeletal: " + rep.checks[1].detail);
  }
  const std::size_t n = c.objects().size();
  const std::size_t d = c.num_morphisms();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t m = 0; m < d; ++m) edges.emplace_back(c.source(m), c.target(m));
  std::vector<std::size_t> stuck;
  auto order = topological_order(n, edges, &stuck);
  if (order.empty() && n > 0) {
    std::string names;
    for (auto v : stuck) names += (names.empty() ? "" : ", ") + c.objects()[v];
    throw PreconditionError("objects cannot be ordered so that Hom(x_i, x_j) is empty for i > j; "
                            "objects on a cycle: " + names);
  }
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // hom[i][j] = morphisms x_j -> x_i in declaration order
  std::vector<std::vector<std::vector<std::size_t>>> hom(n, std::vector<std::vector<std::size_t>>(n));
  for (std::size_t m = 0; m < d; ++m) hom[pos[c.target(m)]][pos[c.source(m)]].push_back(m);
  auto index_in = [](const std::vector<std::size_t>& v, std::size_t m) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), m) - v.begin());
  };

  BlockTriangularData data;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& aut = hom[i][i];
    const std::size_t g = aut.size();
    FdAlgebra::Table t;
    t.field = field;
    for (auto m : aut) t.labels.push_back(c.morphism_id(m));
    t.products.resize(g * g);
    for (std::size_t a = 0; a < g; ++a)
      for (std::size_t b = 0; b < g; ++b)
        t.products[a * g + b] = {
            {static_cast<std::uint32_t>(index_in(aut, c.compose(aut[a], aut[b]))), Scalar(1)}};
    t.unit = field.unit_vector(g, index_in(aut, c.identity(order[i])));
    data.diagonal.push_back(share(FdAlgebra::make(std::move(t))));
    data.labels[{i, i}] = data.diagonal.back()->labels();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& h = hom[i][j];
      if (h.empty()) continue;
      const std::size_t dm = h.size();
      std::vector<Matrix> left, right;
      for (auto a : hom[i][i]) {
        Matrix m(dm, dm);
        for (std::size_t k = 0; k < dm; ++k) m(index_in(h, c.compose(a, h[k])), k) = 1;
        left.push_back(m);
      }
      for (auto b : hom[j][j]) {
        Matrix m(dm, dm);
        for (std::size_t k = 0; k < dm; ++k) m(index_in(h, c.compose(h[k], b)), k) = 1;
        right.push_back(m);
      }
      data.off_diagonal.emplace(std::make_pair(i, j),
                                Bimodule(data.diagonal[i], data.diagonal[j], dm, left, right));
      std::vector<std::string> labels;
      for (auto m : h) labels.push_back(c.morphism_id(m));
      data.labels[{i, j}] = labels;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < i; ++l) {
      for (std::size_t j = 0; j < l; ++j) {
        const auto &hil = hom[i][l], &hlj = hom[l][j], &hij = hom[i][j];
        if (hil.empty() || hlj.empty()) continue;
        Matrix psi(hij.size(), hil.size() * hlj.size());
        for (std::size_t p = 0; p < hil.size(); ++p)
          for (std::size_t q = 0; q < hlj.size(); ++q)
            psi(index_in(hij, c.compose(hil[p], hlj[q])), p * hlj.size() + q) = 1;
        data.composition.emplace(std::make_tuple(i, l, j), psi);
      }
    }
  }
  auto bt = block_triangular(data);

  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto m : hom[i][j]) perm.push_back(m);
  Matrix iso(d, d);
  for (std::size_t k = 0; k < d; ++k) iso(perm[k], k) = 1;
  FdAlgebra direct = ei_category_algebra(c, field);
  if (!permute_basis(direct, perm).same_structure(bt.algebra)) {
    throw InternalError("triangular form does not match the category algebra");
  }
  return EiTriangularForm{order, bt.algebra, iso, perm};
}

}  // namespace hhwb
