#include "hhwb/gls.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "hhwb/constructors.hpp"
#include "hhwb/ei_category.hpp"
#include "hhwb/error.hpp"

namespace hhwb {
namespace {

std::string vtx(std::size_t i) { return std::to_string(i + 1); }
std::string pair_name(std::size_t i, std::size_t j) { return "(" + vtx(i) + "," + vtx(j) + ")"; }

void check_shape(const CartanTriple& t) {
  const std::size_t n = t.c.size();
  for (const auto& row : t.c) {
    if (row.size() != n) throw PreconditionError("Cartan matrix must be square");
  }
  if (t.d.size() != n) throw PreconditionError("symmetrizer must have one entry per vertex");
  for (auto [i, j] : t.omega) {
    if (i >= n || j >= n) {
      throw PreconditionError("orientation pair " + pair_name(i, j) + " is out of range");
    }
  }
}

std::string invalid_reason(const ValidationReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return c.name + ": " + c.detail;
  return "";
}

}  // namespace

ValidationReport validate_cartan_triple(const CartanTriple& t) {
  check_shape(t);
  const std::size_t n = t.c.size();
  const auto& c = t.c;
  ValidationReport rep;

  ConditionCheck c1{"C1", true, {}, ""};
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i][i] != 2) {
      c1.passed = false;
      c1.witnesses.push_back(vtx(i));
      if (c1.detail.empty()) c1.detail = "c_" + vtx(i) + vtx(i) + " = " + std::to_string(c[i][i]);
    }
  }
  rep.checks.push_back(c1);

  ConditionCheck c2{"C2", true, {}, ""};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool bad = c[i][j] > 0 || ((c[i][j] == 0) != (c[j][i] == 0));
      if (bad) {
        c2.passed = false;
        c2.witnesses.push_back(pair_name(i, j));
        if (c2.detail.empty()) {
          c2.detail = "c_" + vtx(i) + vtx(j) + " = " + std::to_string(c[i][j]) + ", c_" + vtx(j) +
                      vtx(i) + " = " + std::to_string(c[j][i]);
        }
      }
    }
  }
  rep.checks.push_back(c2);

  ConditionCheck c3{"C3", true, {}, ""};
  for (std::size_t i = 0; i < n; ++i) {
    if (t.d[i] < 1) {
      c3.passed = false;
      c3.witnesses.push_back(vtx(i));
      if (c3.detail.empty()) c3.detail = "d_" + vtx(i) + " = " + std::to_string(t.d[i]) + " < 1";
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (t.d[i] * c[i][j] != t.d[j] * c[j][i]) {
        c3.passed = false;
        c3.witnesses.push_back(pair_name(i, j));
        if (c3.detail.empty()) {
          c3.detail = "(DC)_" + vtx(i) + vtx(j) + " = " + std::to_string(t.d[i] * c[i][j]) +
                      " but (DC)_" + vtx(j) + vtx(i) + " = " + std::to_string(t.d[j] * c[j][i]);
        }
      }
    }
  }
  rep.checks.push_back(c3);

  std::set<std::pair<std::size_t, std::size_t>> om(t.omega.begin(), t.omega.end());
  ConditionCheck o1{"orientation-1", true, {}, ""};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      bool meets = om.count({i, j}) || om.count({j, i});
      bool negative = i != j && c[i][j] < 0;
      if (meets != negative) {
        o1.passed = false;
        o1.witnesses.push_back(pair_name(i, j));
        if (o1.detail.empty()) {
          o1.detail = meets ? "Omega contains " + pair_name(i, j) + " but c_" + vtx(i) + vtx(j) +
                                  " = " + std::to_string(c[i][j])
                            : "c_" + vtx(i) + vtx(j) + " < 0 but neither " + pair_name(i, j) +
                                  " nor " + pair_name(j, i) + " is in Omega";
        }
      }
    }
  }
  rep.checks.push_back(o1);

  ConditionCheck o2{"orientation-2", true, {}, ""};
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [i, j] : om) adj[i].push_back(j);
  std::vector<int> state(n, 0);
  std::vector<std::size_t> stack;
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    stack.push_back(v);
    for (auto w : adj[v]) {
      if (state[w] == 1) {
        auto it = std::find(stack.begin(), stack.end(), w);
        std::string cyc = "(";
        for (; it != stack.end(); ++it) cyc += vtx(*it) + ",";
        cyc += vtx(w) + ")";
        o2.witnesses.push_back(cyc);
        return true;
      }
      if (state[w] == 0 && dfs(w)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n && o2.passed; ++v) {
    if (state[v] == 0 && dfs(v)) {
      o2.passed = false;
      o2.detail = "oriented cycle " + o2.witnesses.back();
    }
  }
  rep.checks.push_back(o2);
  return rep;
}

Quiver gls_quiver(const CartanTriple& t) {
  auto rep = validate_cartan_triple(t);
  if (!rep.passed()) throw PreconditionError("invalid Cartan triple: " + invalid_reason(rep));
  const std::size_t n = t.c.size();
  std::vector<std::string> verts;
  for (std::size_t i = 0; i < n; ++i) verts.push_back(vtx(i));
  std::vector<ArrowSpec> arrows;
  std::set<std::pair<std::size_t, std::size_t>> om(t.omega.begin(), t.omega.end());
  for (auto [i, j] : om) {
    auto g = std::gcd(std::llabs(t.c[i][j]), std::llabs(t.c[j][i]));
    for (long long k = 1; k <= g; ++k) {
      std::string id = "a[" + vtx(i) + "," + vtx(j) + (g > 1 ? ";" + std::to_string(k) : "") + "]";
      arrows.push_back({id, vtx(j), vtx(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({"eps[" + vtx(i) + "]", vtx(i), vtx(i)});
  return Quiver(verts, arrows);
}

RewritingSystem gls_system(const CartanTriple& t, const FieldSpec& field) {
  Quiver q = gls_quiver(t);
  const std::size_t n = t.c.size();
  auto loop = [&](std::size_t i) { return static_cast<std::uint32_t>(q.arrow_index("eps[" + vtx(i) + "]")); };
  std::vector<LinComb> rels;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> w(static_cast<std::size_t>(t.d[i]), loop(i));
    rels.push_back(LinComb{{make_path(q, w), Scalar(1)}});
  }
  for (std::uint32_t a = 0; a < q.arrows().size(); ++a) {
    const Arrow& arr = q.arrow(a);
    if (arr.is_loop()) continue;
    std::size_t i = arr.target, j = arr.source;
    long long g = std::gcd(t.d[i], t.d[j]);
    // composition-order eps_i^p alpha = alpha eps_j^q, read left to right
    std::vector<std::uint32_t> lhs{a}, rhs;
    lhs.insert(lhs.end(), static_cast<std::size_t>(t.d[i] / g), loop(i));
    rhs.insert(rhs.end(), static_cast<std::size_t>(t.d[j] / g), loop(j));
    rhs.push_back(a);
    LinComb rel{{make_path(q, lhs), Scalar(1)}};
    rel[make_path(q, rhs)] += field.neg(Scalar(1));
    rels.push_back(rel);
  }
  return RewritingSystem::from_relations(field, q, rels);
}

FdAlgebra gls_algebra(const CartanTriple& t, const FieldSpec& field, std::size_t length_cap) {
  RewritingSystem rs = gls_system(t, field);
  std::size_t cap = length_cap ? length_cap : default_cap(rs);
  RewritingSystem done = complete(rs, cap);
  return enumerate_basis(done, cap);
}

GlsTriangularForm gls_triangular_form(const CartanTriple& t, const FieldSpec& field,
                                      std::size_t length_cap) {
  FdAlgebra h = gls_algebra(t, field, length_cap);
  const std::size_t n = t.c.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [i, j] : t.omega) edges.emplace_back(j, i);
  auto order = topological_order(n, edges);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;
  // basis element b is a path from s to t: e_s b e_t = b (left to right)
  const auto& idem = h.idempotents();
  std::vector<std::pair<std::size_t, std::size_t>> block_of(h.dim());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    bool found = false;
    for (std::size_t s = 0; s < n && !found; ++s) {
      for (std::size_t u = 0; u < n && !found; ++u) {
        if (h.multiply(h.multiply(idem[s], h.basis_vector(k)), idem[u]) == h.basis_vector(k)) {
          block_of[k] = {pos[u], pos[s]};
          found = true;
        }
      }
    }
    if (!found) throw InternalError("basis path " + h.label(k) + " is not homogeneous");
  }
  FdAlgebra op = h.opposite();
  std::vector<std::size_t> perm;
  auto bt = triangular_from_blocks(op, block_of, n, &perm);
  std::vector<std::size_t> diag;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t cnt = 0;
    for (auto b : block_of) cnt += b == std::make_pair(i, i);
    diag.push_back(cnt);
  }
  return GlsTriangularForm{order, op, bt.algebra, perm, diag};
}

}  // namespace hhwb
