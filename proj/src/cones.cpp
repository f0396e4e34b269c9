#include "xconn/cones.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace xconn {

SubspaceCategory::SubspaceCategory(std::vector<Subspace> objects)
    : objects_(std::move(objects)) {
  if (objects_.empty()) {
    throw Error(ErrorCode::invalid_argument, "category without objects");
  }
  n_ = objects_.front().ambient();
  p_ = objects_.front().modulus();
  side_ = objects_.front().side();
  for (auto const& a : objects_) {
    if (a.ambient() != n_ || a.modulus() != p_ || a.side() != side_) {
      throw Error(ErrorCode::invalid_argument,
                  "objects from different spaces");
    }
  }
}

SubspaceCategory SubspaceCategory::proper(std::size_t n,
                                          unsigned p,
                                          Side side) {
  return SubspaceCategory(
      enumerate_subspaces(n, p, SubspaceFilter::proper, side));
}

SubspaceCategory SubspaceCategory::all(std::size_t n, unsigned p, Side side) {
  return SubspaceCategory(enumerate_subspaces(n, p, SubspaceFilter::all, side));
}

std::optional<std::size_t> SubspaceCategory::index_of(
    Subspace const& a) const {
  auto it = std::lower_bound(objects_.begin(), objects_.end(), a);
  if (it != objects_.end() && *it == a) {
    return static_cast<std::size_t>(it - objects_.begin());
  }
  // Object lists built by hand need not be sorted.
  it = std::find(objects_.begin(), objects_.end(), a);
  if (it != objects_.end()) {
    return static_cast<std::size_t>(it - objects_.begin());
  }
  return std::nullopt;
}

std::vector<std::size_t> SubspaceCategory::ideal(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < objects_.size(); ++k) {
    if (objects_[k].is_subspace_of(objects_[i])) {
      out.push_back(k);
    }
  }
  return out;
}

Factorization normal_factorization(Morphism const& f) {
  Subspace const kernel = f.kernel();
  Subspace const reduced = complement_within(kernel, f.dom);
  Subspace const image = f.image();
  Morphism q = projection(f.dom, reduced, kernel);
  Morphism u{reduced, image, *image.coordinates(f.apply(reduced.basis()))};
  Morphism j = inclusion(image, f.cod);
  return {std::move(q), std::move(u), std::move(j)};
}

Morphism epimorphic_component(Morphism const& f) {
  auto fac = normal_factorization(f);
  return compose(fac.q, fac.u);
}

ConeCheck validate_cone(SubspaceCategory const& cat, NormalCone const& cone) {
  auto fail = [](std::string why) { return ConeCheck{false, std::move(why)}; };
  if (cone.components.size() != cat.size()) {
    return fail("expected " + std::to_string(cat.size()) + " components, got "
                + std::to_string(cone.components.size()));
  }
  if (!cat.contains(cone.vertex)) {
    return fail("vertex " + cone.vertex.to_string() + " is not an object");
  }
  bool some_iso = false;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto const& c = cone.components[i];
    if (c.dom != cat[i] || c.cod != cone.vertex) {
      return fail("component " + std::to_string(i) + " is "
                  + c.to_string());
    }
    some_iso = some_iso || c.is_isomorphism();
  }
  if (!some_iso) {
    return fail("no component is an isomorphism");
  }
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = 0; b < cat.size(); ++b) {
      if (a == b || !cat[a].is_subspace_of(cat[b])) {
        continue;
      }
      if (compose(inclusion(cat[a], cat[b]), cone.components[b])
          != cone.components[a]) {
        return fail("j(A,B) sigma(B) != sigma(A) at A = " + cat[a].to_string()
                    + ", B = " + cat[b].to_string());
      }
    }
  }
  return {};
}

NormalCone principal_cone(SubspaceCategory const& cat, Mat const& alpha) {
  if (!alpha.is_square() || alpha.rows() != cat.ambient()) {
    throw Error(ErrorCode::shape_error, "principal cone of a non-endomorphism");
  }
  Subspace const vertex = Subspace::span(alpha, cat.side());
  if (!cat.contains(vertex)) {
    throw Error(ErrorCode::not_singular,
                "image " + vertex.to_string() + " of " + alpha.to_string()
                    + " is not an object");
  }
  NormalCone cone{vertex, {}};
  cone.components.reserve(cat.size());
  for (auto const& a : cat.objects()) {
    cone.components.push_back(restrict(alpha, a, vertex));
  }
  return cone;
}

Mat cone_to_map(SubspaceCategory const& cat, NormalCone const& cone) {
  if (auto check = validate_cone(cat, cone); !check) {
    throw Error(ErrorCode::not_a_cone, check.reason);
  }
  std::size_t const n = cat.ambient();
  unsigned const p = cat.modulus();
  Mat alpha(n, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    Mat b(1, n, p);
    b.set(0, i, 1);
    // Prefer the line <b>; otherwise the smallest object holding b.
    std::optional<std::size_t> holder;
    for (std::size_t k = 0; k < cat.size(); ++k) {
      if (cat[k].contains(b)
          && (!holder || cat[k].dim() < cat[*holder].dim())) {
        holder = k;
      }
    }
    if (!holder) {
      if (!cone.vertex.is_zero()) {
        throw Error(ErrorCode::not_a_cone,
                    "no object contains basis vector " + b.to_string());
      }
      continue;
    }
    Mat value = cone.components[*holder].apply(b);
    for (std::size_t c = 0; c < n; ++c) {
      alpha.set(i, c, value(0, c));
    }
  }
  if (!cat.contains(Subspace::span(alpha, cat.side()))
      || principal_cone(cat, alpha) != cone) {
    throw Error(ErrorCode::not_principal,
                "cone is not induced by " + alpha.to_string());
  }
  return alpha;
}

NormalCone cone_compose(SubspaceCategory const& cat,
                        NormalCone const& gamma,
                        NormalCone const& delta) {
  auto const c = cat.index_of(gamma.vertex);
  if (!c) {
    throw Error(ErrorCode::not_a_cone, "vertex of gamma is not an object");
  }
  Morphism const epi = epimorphic_component(delta.components[*c]);
  NormalCone out{epi.cod, {}};
  out.components.reserve(gamma.components.size());
  for (auto const& g : gamma.components) {
    out.components.push_back(compose(g, epi));
  }
  return out;
}

bool is_idempotent_cone(SubspaceCategory const& cat, NormalCone const& cone) {
  auto const d = cat.index_of(cone.vertex);
  return d && cone.components[*d] == identity_morphism(cone.vertex);
}

std::vector<Subspace> m_set(SubspaceCategory const& cat,
                            NormalCone const& cone) {
  std::vector<Subspace> out;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cone.components[i].is_isomorphism()) {
      out.push_back(cat[i]);
    }
  }
  return out;
}

ConeCensus cone_census(SubspaceCategory const& cat, std::uint64_t budget) {
  std::size_t const m = cat.size();
  // Supersets first, so a component is forced once a container is fixed.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return cat[x].dim() > cat[y].dim();
  });
  // overlap[a][b]: coordinates, inside object a, of a basis of a /\ b.
  std::vector<std::vector<Mat>> overlap(m, std::vector<Mat>(m));
  std::vector<std::vector<bool>> inside(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Subspace const meet = intersection(cat[a], cat[b]);
      overlap[a][b] = *cat[a].coordinates(meet.basis());
      inside[a][b] = cat[a].is_subspace_of(cat[b]);
    }
  }

  ConeCensus census;
  for (std::size_t d = 0; d < m; ++d) {
    Subspace const& vertex = cat[d];
    std::vector<std::optional<Mat>> assigned(m);
    std::function<void(std::size_t)> assign = [&](std::size_t pos) {
      if (pos == m) {
        NormalCone cone{vertex, {}};
        bool some_iso = false;
        for (std::size_t i = 0; i < m; ++i) {
          cone.components.push_back({cat[i], vertex, *assigned[i]});
          some_iso = some_iso || cone.components.back().is_isomorphism();
        }
        if (some_iso) {
          census.cones.push_back(std::move(cone));
        }
        return;
      }
      std::size_t const a = order[pos];
      std::vector<Mat> candidates;
      std::optional<std::size_t> container;
      for (std::size_t k = 0; k < pos && !container; ++k) {
        if (inside[a][order[k]]) {
          container = order[k];
        }
      }
      if (container) {
        candidates.push_back(*cat[*container].coordinates(cat[a].basis())
                             * *assigned[*container]);
      } else {
        std::uint64_t const count = hom_count(cat[a], vertex);
        for (std::uint64_t code = 0; code < count; ++code) {
          candidates.push_back(
              Mat::from_code(cat[a].dim(), vertex.dim(), cat.modulus(), code));
        }
      }
      for (auto& cand : candidates) {
        if (++census.assignments_tried > budget) {
          throw Error(ErrorCode::too_large,
                      "cone census exceeded " + std::to_string(budget)
                          + " assignments");
        }
        bool agrees = true;
        for (std::size_t k = 0; k < pos && agrees; ++k) {
          std::size_t const b = order[k];
          agrees = overlap[a][b] * cand == overlap[b][a] * *assigned[b];
        }
        if (agrees) {
          assigned[a] = std::move(cand);
          assign(pos + 1);
          assigned[a].reset();
        }
      }
    };
    assign(0);
  }
  return census;
}

SemigroupTable cone_table(SubspaceCategory const& cat,
                          std::vector<NormalCone> const& cones) {
  return make_table(
      cones,
      [&cat](NormalCone const& g, NormalCone const& d) {
        return cone_compose(cat, g, d);
      },
      [](NormalCone const& c) {
        std::string out = c.vertex.to_string() + "{";
        for (std::size_t i = 0; i < c.components.size(); ++i) {
          out += (i ? "|" : "") + c.components[i].map.to_string();
        }
        return out + "}";
      });
}

ConeSemigroup build_cone_semigroup(std::size_t n, unsigned p) {
  SubspaceCategory const cat = SubspaceCategory::proper(n, p);
  ConeSemigroup out;
  out.elements = singular_matrices(n, p);
  out.cones.resize(out.elements.size());
  parallel_for(out.elements.size(), [&](std::size_t i) {
    out.cones[i] = principal_cone(cat, out.elements[i]);
  });
  out.table = cone_table(cat, out.cones);
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    out.table.labels[i] = "rho(" + out.elements[i].to_string() + ")";
  }
  return out;
}

}  // namespace xconn
