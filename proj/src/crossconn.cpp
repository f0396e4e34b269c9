#include "xconn/crossconn.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace xconn {

namespace {

struct Arrow {
  std::size_t from;
  std::size_t to;
  Morphism f;
};

std::vector<Arrow> all_arrows(SubspaceCategory const& cat) {
  std::vector<Arrow> out;
  for (std::size_t a = 0; a < cat.size(); ++a) {
    for (std::size_t b = 0; b < cat.size(); ++b) {
      for (auto& f : all_morphisms(cat[a], cat[b])) {
        out.push_back({a, b, std::move(f)});
      }
    }
  }
  return out;
}

// Runs `check(i)` for every i and keeps the failure with the lowest index,
// so the reported diagnostic does not depend on scheduling.
template <typename Check>
Verdict first_failure(std::size_t n, Check&& check) {
  std::vector<Verdict> slots(n);
  parallel_for(n, [&](std::size_t i) { slots[i] = check(i); });
  for (auto& v : slots) {
    if (!v) {
      return std::move(v);
    }
  }
  return {};
}

Verdict fail(std::string why) {
  return {false, std::move(why)};
}

Mat invert_or_throw(Mat const& theta) {
  auto inv = invert(theta);
  if (!inv) {
    throw Error(ErrorCode::not_invertible, theta.to_string() + " is singular");
  }
  return *inv;
}

}  // namespace

Verdict check_functor(Functor const& f) {
  auto const& src = *f.source;
  auto const& dst = *f.target;
  if (f.object_map.size() != src.size()) {
    return fail("object map has " + std::to_string(f.object_map.size())
                + " entries for " + std::to_string(src.size()) + " objects");
  }
  for (std::size_t t : f.object_map) {
    if (t >= dst.size()) {
      return fail("object map leaves the target category");
    }
  }
  if (!f.on_morphism) {
    return fail("no morphism map");
  }
  // Identities, domains and inclusions, one source object per task.
  Verdict v = first_failure(src.size(), [&](std::size_t a) -> Verdict {
    if (f(identity_morphism(src[a])) != identity_morphism(f(a))) {
      return fail("identity of " + src[a].to_string() + " not preserved");
    }
    for (std::size_t b = 0; b < src.size(); ++b) {
      for (auto const& g : all_morphisms(src[a], src[b])) {
        Morphism const image = f(g);
        if (image.dom != f(a) || image.cod != f(b)) {
          return fail("F(" + g.to_string() + ") has the wrong ends");
        }
      }
      if (a != b && src[a].is_subspace_of(src[b])) {
        if (!f(a).is_subspace_of(f(b))) {
          return fail("inclusion " + src[a].to_string() + " in "
                      + src[b].to_string() + " not preserved");
        }
        if (f(inclusion(src[a], src[b])) != inclusion(f(a), f(b))) {
          return fail("F(j(" + src[a].to_string() + ", " + src[b].to_string()
                      + ")) is not an inclusion");
        }
      }
    }
    return {};
  });
  if (!v) {
    return v;
  }
  auto const arrows = all_arrows(src);
  return first_failure(arrows.size(), [&](std::size_t i) -> Verdict {
    auto const& g = arrows[i];
    Morphism const fg = f(g.f);
    for (auto const& h : arrows) {
      if (h.from != g.to) {
        continue;
      }
      if (f(compose(g.f, h.f)) != compose(fg, f(h.f))) {
        return fail("composition of " + g.f.to_string() + " and "
                    + h.f.to_string() + " not preserved");
      }
    }
    return {};
  });
}

Verdict is_local_isomorphism(Functor const& f) {
  if (Verdict v = check_functor(f); !v) {
    return v;
  }
  auto const& src = *f.source;
  auto const& dst = *f.target;
  return first_failure(src.size(), [&](std::size_t a) -> Verdict {
    for (std::size_t b = 0; b < src.size(); ++b) {
      std::set<Mat> seen;
      for (auto const& g : all_morphisms(src[a], src[b])) {
        seen.insert(f(g).map);
      }
      std::uint64_t const expected = hom_count(f(a), f(b));
      if (seen.size() != hom_count(src[a], src[b]) || seen.size() != expected) {
        return fail("not fully faithful on hom(" + src[a].to_string() + ", "
                    + src[b].to_string() + ")");
      }
    }
    std::vector<std::size_t> images;
    for (std::size_t k : src.ideal(a)) {
      images.push_back(f.object_map[k]);
    }
    std::sort(images.begin(), images.end());
    bool const injective =
        std::adjacent_find(images.begin(), images.end()) == images.end();
    if (!injective || images != dst.ideal(f.object_map[a])) {
      return fail("ideal of " + src[a].to_string() + " is not mapped onto "
                  "the ideal of " + f(a).to_string());
    }
    return {};
  });
}

bool is_object_surjective(Functor const& f) {
  std::set<std::size_t> hit(f.object_map.begin(), f.object_map.end());
  return hit.size() == f.target->size();
}

CrossConnectionCheck is_crossconnection(Functor const& gamma,
                                        SubspaceCategory const& subspaces) {
  CrossConnectionCheck out;
  out.verdict = is_local_isomorphism(gamma);
  if (!out.verdict) {
    return out;
  }
  std::vector<Subspace> keys;
  for (std::size_t y = 0; y < gamma.source->size(); ++y) {
    keys.push_back(annihilator(gamma(y)));
  }
  for (auto const& a : subspaces.objects()) {
    std::optional<std::size_t> found;
    for (std::size_t y = 0; y < keys.size() && !found; ++y) {
      if (is_direct_sum(a, keys[y])
          && a.dim() + keys[y].dim() == a.ambient()) {
        found = y;
      }
    }
    if (!found) {
      out.verdict = fail(a.to_string() + " lies in no M-set of the image");
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back(*found);
  }
  return out;
}

Morphism transport(Morphism const& f, Mat const& t) {
  Mat const d = f.dom.basis() * t;
  Mat const e = f.cod.basis() * t;
  Subspace const dom = Subspace::span(d, f.dom.side());
  Subspace const cod = Subspace::span(e, f.cod.side());
  if (dom.dim() != f.dom.dim() || cod.dim() != f.cod.dim()) {
    throw Error(ErrorCode::not_invertible,
                t.to_string() + " is not injective on " + f.dom.to_string()
                    + " or " + f.cod.to_string());
  }
  if (dom.is_zero()) {
    return zero_morphism(dom, cod);
  }
  Mat const c_inv = *invert(*dom.coordinates(d));
  if (cod.is_zero()) {
    return zero_morphism(dom, cod);
  }
  return {dom, cod, c_inv * f.map * *cod.coordinates(e)};
}

namespace {

Functor conjugation_functor(CategoryPtr cat, Mat const& t, Mat const& theta) {
  Functor out;
  out.source = cat;
  out.target = cat;
  out.generator = theta;
  for (auto const& a : cat->objects()) {
    auto idx = cat->index_of(a.image_under(t));
    if (!idx) {
      throw Error(ErrorCode::not_closed,
                  "image of " + a.to_string() + " is not an object");
    }
    out.object_map.push_back(*idx);
  }
  out.on_morphism = [t](Morphism const& f) { return transport(f, t); };
  return out;
}

}  // namespace

Functor delta_theta(CategoryPtr subspaces, Mat const& theta) {
  invert_or_throw(theta);
  return conjugation_functor(std::move(subspaces), theta, theta);
}

Functor gamma_theta(CategoryPtr annihilators, Mat const& theta) {
  invert_or_throw(theta);
  return conjugation_functor(std::move(annihilators), dual_action(theta),
                             theta);
}

bool functors_equal(Functor const& f, Functor const& g) {
  if (f.object_map != g.object_map || f.source->objects() != g.source->objects()
      || f.target->objects() != g.target->objects()) {
    return false;
  }
  if (!f.on_morphism || !g.on_morphism) {
    return !f.on_morphism && !g.on_morphism;
  }
  auto const arrows = all_arrows(*f.source);
  std::vector<char> same(arrows.size(), 1);
  parallel_for(arrows.size(), [&](std::size_t i) {
    same[i] = f(arrows[i].f) == g(arrows[i].f);
  });
  return std::all_of(same.begin(), same.end(), [](char c) { return c != 0; });
}

namespace {

std::vector<Mat> bifunctor_set(Subspace const& image_bound,
                               Subspace const& dual_bound,
                               std::vector<Endo> const& sing) {
  // (N_α)° ⊆ Y  iff  N_α ⊇ the pre-annihilator of Y.
  Subspace const key = annihilator(dual_bound);
  std::vector<Mat> out;
  for (auto const& x : sing) {
    if (x.image().is_subspace_of(image_bound) && key.is_subspace_of(x.kernel())) {
      out.push_back(x.matrix());
    }
  }
  return out;
}

std::vector<Endo> singular_endos(std::size_t n, unsigned p) {
  std::vector<Endo> out;
  for (auto& m : singular_matrices(n, p)) {
    out.emplace_back(std::move(m));
  }
  return out;
}

}  // namespace

std::vector<Mat> gamma_bifunctor(Subspace const& a,
                                 Subspace const& gamma_y,
                                 std::vector<Endo> const& sing) {
  return bifunctor_set(a, gamma_y, sing);
}

std::vector<Mat> delta_bifunctor(Subspace const& delta_a,
                                 Subspace const& y,
                                 std::vector<Endo> const& sing) {
  return bifunctor_set(delta_a, y, sing);
}

Mat gamma_bifunctor_map(Mat const& alpha,
                        Morphism const& f,
                        Morphism const& gamma_w) {
  return carrier_of(gamma_w) * alpha * extend_to_ambient(f);
}

Mat delta_bifunctor_map(Mat const& alpha,
                        Morphism const& delta_f,
                        Morphism const& w) {
  return carrier_of(w) * alpha * extend_to_ambient(delta_f);
}

Mat chi(Mat const& alpha, Mat const& theta, Mat const& theta_inv) {
  return theta_inv * alpha * theta;
}

NaturalityReport chi_naturality(std::size_t n, unsigned p, Mat const& theta) {
  Mat const theta_inv = invert_or_throw(theta);
  auto const subs =
      std::make_shared<SubspaceCategory const>(SubspaceCategory::proper(n, p));
  auto const anns =
      std::make_shared<SubspaceCategory const>(annihilator_category(n, p));
  Functor const gamma = gamma_theta(anns, theta);
  Functor const delta = delta_theta(subs, theta);
  auto const sing = singular_endos(n, p);

  NaturalityReport report;
  // Γ(A,Y) and Δ(A,Y), indexed [A][Y].
  std::vector<std::vector<std::vector<Mat>>> gsets(subs->size());
  std::vector<std::vector<std::vector<Mat>>> dsets(subs->size());
  for (std::size_t a = 0; a < subs->size(); ++a) {
    for (std::size_t y = 0; y < anns->size(); ++y) {
      gsets[a].push_back(gamma_bifunctor((*subs)[a], gamma(y), sing));
      dsets[a].push_back(delta_bifunctor(delta(a), (*anns)[y], sing));
      std::set<Mat> mapped;
      for (auto const& x : gsets[a][y]) {
        mapped.insert(chi(x, theta, theta_inv));
      }
      std::set<Mat> const target(dsets[a][y].begin(), dsets[a][y].end());
      if (mapped.size() != gsets[a][y].size() || mapped != target) {
        report.verdict = fail("chi is not a bijection Gamma(A,Y) -> Delta(A,Y)"
                              " at A = " + (*subs)[a].to_string() + ", Y = "
                              + (*anns)[y].to_string());
        return report;
      }
      ++report.set_pairs;
    }
  }

  auto const fs = all_arrows(*subs);
  auto const ws = all_arrows(*anns);
  std::vector<Mat> gamma_carriers;
  std::vector<Mat> w_carriers;
  for (auto const& w : ws) {
    gamma_carriers.push_back(carrier_of(gamma(w.f)));
    w_carriers.push_back(carrier_of(w.f));
  }
  std::vector<std::size_t> squares(fs.size(), 0);
  report.verdict = first_failure(fs.size(), [&](std::size_t i) -> Verdict {
    auto const& f = fs[i];
    Mat const ef = extend_to_ambient(f.f);
    Mat const edf = extend_to_ambient(delta(f.f));
    for (std::size_t k = 0; k < ws.size(); ++k) {
      auto const& w = ws[k];
      auto const& into = gsets[f.to][w.to];
      for (auto const& alpha : gsets[f.from][w.from]) {
        Mat const across = gamma_carriers[k] * alpha * ef;
        if (!std::binary_search(into.begin(), into.end(), across)) {
          return fail("Gamma(f,w*) leaves Gamma(B,Z) at alpha = "
                      + alpha.to_string());
        }
        Mat const left = chi(across, theta, theta_inv);
        Mat const right =
            w_carriers[k] * chi(alpha, theta, theta_inv) * edf;
        if (left != right) {
          return fail("square fails: f = " + f.f.to_string() + ", w* = "
                      + w.f.to_string() + ", alpha = " + alpha.to_string());
        }
        ++squares[i];
      }
    }
    return {};
  });
  report.squares = std::accumulate(squares.begin(), squares.end(),
                                   std::size_t{0});
  return report;
}

LinkedSemigroup linked_semigroup(Mat const& theta) {
  Mat const theta_inv = invert_or_throw(theta);
  LinkedSemigroup out;
  for (auto& a : singular_matrices(theta.rows(), theta.modulus())) {
    Mat second = chi(a, theta, theta_inv);
    out.pairs.push_back({std::move(a), std::move(second)});
  }
  out.table = make_table(
      out.pairs,
      [](LinkedPair const& x, LinkedPair const& y) {
        return LinkedPair{x.first * y.first, x.second * y.second};
      },
      [](LinkedPair const& x) {
        return "(" + x.first.to_string() + ", " + x.second.to_string() + ")";
      });
  return out;
}

Mat canonical_projective(Mat const& theta) {
  unsigned const p = theta.modulus();
  for (std::size_t r = 0; r < theta.rows(); ++r) {
    for (std::size_t c = 0; c < theta.cols(); ++c) {
      if (theta(r, c) != 0) {
        return theta.scaled(inv_mod(theta(r, c), p));
      }
    }
  }
  return theta;
}

Mat recover_theta(Functor const& delta) {
  auto const& cat = *delta.source;
  std::size_t const n = cat.ambient();
  unsigned const p = cat.modulus();
  auto image_line = [&](Mat const& v) -> Mat {
    auto idx = cat.index_of(Subspace::span(v));
    if (!idx) {
      throw Error(ErrorCode::not_induced, "line " + v.to_string()
                                              + " is not an object");
    }
    Subspace const& img = delta(*idx);
    if (img.dim() != 1) {
      throw Error(ErrorCode::not_induced,
                  "image of line " + v.to_string() + " is not a line");
    }
    return img.basis();
  };
  auto unit = [&](std::size_t i) {
    Mat b(1, n, p);
    b.set(0, i, 1);
    return b;
  };
  Mat theta(n, n, p);
  Mat const x0 = image_line(unit(0));
  for (std::size_t c = 0; c < n; ++c) {
    theta.set(0, c, x0(0, c));
  }
  for (std::size_t i = 1; i < n; ++i) {
    Mat const xi = image_line(unit(i));
    Subspace const target = Subspace::span(image_line(unit(0) + unit(i)));
    std::optional<unsigned> scale;
    for (unsigned s = 1; s < p && !scale; ++s) {
      if (target.contains(x0 + xi.scaled(s))) {
        scale = s;
      }
    }
    if (!scale) {
      throw Error(ErrorCode::not_induced,
                  "no scalar lifts the image of line " + (unit(0) + unit(i)).to_string());
    }
    Mat const row = xi.scaled(*scale);
    for (std::size_t c = 0; c < n; ++c) {
      theta.set(i, c, row(0, c));
    }
  }
  if (!invert(theta)) {
    throw Error(ErrorCode::not_induced, "lifted matrix " + theta.to_string()
                                            + " is singular");
  }
  Functor candidate = delta_theta(delta.source, theta);
  bool const same = delta.on_morphism
                        ? functors_equal(candidate, delta)
                        : candidate.object_map == delta.object_map;
  if (!same) {
    throw Error(ErrorCode::not_induced,
                "functor differs from Delta_theta for " + theta.to_string());
  }
  return canonical_projective(theta);
}

std::uint64_t projective_linear_order(std::size_t n, unsigned p) {
  return general_linear_order(n, p) / (p - 1);
}

Classification classify_crossconnections(std::size_t n, unsigned p) {
  auto const cat =
      std::make_shared<SubspaceCategory const>(SubspaceCategory::proper(n, p));
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < cat->size(); ++i) {
    if ((*cat)[i].dim() == 1) {
      lines.push_back(i);
    }
  }
  if (lines.size() > 8) {
    throw Error(ErrorCode::too_large,
                std::to_string(lines.size()) + " lines is too many to permute");
  }
  Classification out;
  std::vector<std::size_t> perm(lines.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Mat> found;
  do {
    Functor f;
    f.source = cat;
    f.target = cat;
    f.object_map.resize(cat->size());
    bool ok = true;
    for (std::size_t a = 0; a < cat->size() && ok; ++a) {
      Subspace const& obj = (*cat)[a];
      Mat gens(0, n, p);
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if ((*cat)[lines[k]].is_subspace_of(obj)) {
          gens = gens.stacked((*cat)[lines[perm[k]]].basis());
        }
      }
      Subspace const img = gens.rows() == 0 ? Subspace::zero(n, p)
                                            : Subspace::span(gens);
      auto idx = cat->index_of(img);
      ok = idx && img.dim() == obj.dim();
      if (ok) {
        f.object_map[a] = *idx;
      }
    }
    if (ok) {
      std::set<std::size_t> hit(f.object_map.begin(), f.object_map.end());
      ok = hit.size() == cat->size();
    }
    if (!ok) {
      continue;
    }
    ++out.bijections;
    try {
      Mat const theta = recover_theta(f);
      out.thetas.push_back(theta);
    } catch (Error const& e) {
      if (e.code() != ErrorCode::not_induced) {
        throw;
      }
      ++out.not_induced;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace xconn
